#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcdft/cli.hpp"
#include "gcdft/gcd_dft.hpp"
#include "gcdft/lambert_poly.hpp"

namespace gcdft::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Eval, Examples) {
  EXPECT_EQ(call({"eval", "phi_a", "--a", "2", "--m", "4"}).out, "4\n");
  EXPECT_EQ(call({"eval", "phi_a", "--a", "1", "--m", "12"}).out, "4\n");
  EXPECT_EQ(call({"eval", "pillai", "--m", "6"}).out, "15\n");
  EXPECT_EQ(call({"eval", "ramanujan", "--a", "2", "--m", "6", "--method", "definition"}).out, "-1\n");
  EXPECT_EQ(call({"eval", "count-pairs", "--a", "0", "--m", "6"}).out, "15\n");
  EXPECT_EQ(call({"eval", "id_a", "--a", "6", "--m", "12"}).out, "48\n");
  EXPECT_EQ(call({"eval", "kappa", "--a", "12", "--b", "20"}).out, "1\n");
}

TEST(Eval, PhiMethodsAgree) {
  for (const char* method : {"closed", "prime_power", "dft", "pairs"}) {
    const Result r = call({"eval", "phi_a", "--a", "6", "--m", "12", "--method", method});
    EXPECT_EQ(r.code, kExitOk) << method << r.err;
    EXPECT_EQ(r.out, "20\n") << method;
  }
}

TEST(Usage, ErrorsExitTwo) {
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"eval", "phi_a", "--a", "x", "--m", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"eval", "nosuchfn", "--m", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"eval", "phi_a", "--a", "1", "--m", "4", "--method", "guess"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "no-such-identity"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "p3", "--n-max", "100", "--a-max", "100", "--b-max", "100"}).code,
            kExitUsage);
  EXPECT_EQ(call({"lambert", "--a", "2", "--x", "1.5"}).code, kExitUsage);
  EXPECT_EQ(call({"table", "phi_a", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Table, CsvRoundTrip) {
  const Result r = call({"table", "phi_a", "--m-max", "12", "--a-max", "12"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"m", "a", "value"}));
  ASSERT_EQ(rows.size(), 1u + 12u * 13u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto m = std::stoull(rows[i][0]), a = std::stoull(rows[i][1]);
    EXPECT_EQ(Integer(rows[i][2]), phi_a(a, m, PhiMethod::kPairs)) << m << " " << a;
  }
}

TEST(Table, JsonRoundTrip) {
  const Result r = call({"table", "phi_a", "--m-max", "10", "--a-max", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "table");
  ASSERT_EQ(doc["rows"].size(), 10u * 6u);
  for (const auto& row : doc["rows"]) {
    const auto m = row["m"].get<std::uint64_t>(), a = row["a"].get<std::uint64_t>();
    EXPECT_EQ(Integer(row["value"].get<std::string>()), phi_a(a, m, PhiMethod::kPairs));
  }
}

TEST(Verify, ExitCodes) {
  const Result ok = call({"verify", "euler-gen", "--m-max", "12", "--a-max", "12"});
  EXPECT_EQ(ok.code, kExitOk);
  const auto rows = csv_rows(ok.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"id", "points", "failures", "elapsed_ms"}));
  EXPECT_EQ(rows[1][0], "euler-gen");
  EXPECT_EQ(rows[1][1], "156");
  EXPECT_EQ(rows[1][2], "0");

  const Result bad =
      call({"verify", "euler-gen", "--m-max", "12", "--a-max", "12", "--mutant", "euler-gen"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_NE(bad.err.find("euler-gen: "), std::string::npos);
  EXPECT_NE(bad.err.find("lhs="), std::string::npos);
}

TEST(Verify, AllSmallWithMutant) {
  const std::vector<std::string> bounds{"--n-max", "8", "--m-max", "8", "--a-max", "4", "--b-max", "2"};
  std::vector<std::string> args{"verify", "all"};
  args.insert(args.end(), bounds.begin(), bounds.end());
  const Result ok = call(args);
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  args.insert(args.end(), {"--mutant", "p2", "--format", "json"});
  const Result bad = call(args);
  EXPECT_EQ(bad.code, kExitFailure);
  const auto doc = nlohmann::json::parse(bad.out);
  EXPECT_EQ(doc["schema"], "report");
  int failing = 0;
  for (const auto& row : doc["rows"]) {
    if (row["failures"].get<int>() > 0) {
      ++failing;
      EXPECT_EQ(row["id"], "p2");
    }
  }
  EXPECT_EQ(failing, 1);
}

TEST(Poly, Output) {
  EXPECT_EQ(call({"poly", "p", "--a", "3"}).out, "1,2,6,2,1\n");
  EXPECT_EQ(call({"poly", "q", "--a", "2"}).out, "1,2,3,0,3,2,1\n");
  EXPECT_EQ(call({"poly", "q", "--a", "2", "--eval-at", "0.5"}).out, format_real(3.015625) + "\n");
}

TEST(Roots, CsvForP37) {
  const Result r = call({"roots", "p", "--a", "37", "--order", "37"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"re", "im", "residual", "min_distance"}));
  EXPECT_EQ(rows.size(), 73u);
}

TEST(Roots, Json) {
  const Result r = call({"roots", "q", "--a", "3", "--format", "json", "--target", "minus-one"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "rootset");
  EXPECT_EQ(doc["poly"], "q[3]");
  EXPECT_EQ(doc["order"], 6);
  EXPECT_EQ(doc["rows"].size(), 10u);
  EXPECT_EQ(call({"roots", "p", "--a", "1"}).code, kExitUsage);
}

TEST(Lambert, Output) {
  const Result r = call({"lambert", "--a", "2", "--x", "0.3", "--terms", "200"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"lhs", "rhs", "gap"}));
  EXPECT_LT(std::stod(rows[1][2]), 1e-9);
  const LambertCheck c = lambert_check(2, 0.3, 200);
  EXPECT_EQ(rows[1][1], format_real(c.rhs));
}

TEST(FormatReal, TwelveDigits) {
  EXPECT_EQ(format_real(2.0), "2");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
}

}  // namespace
}  // namespace gcdft::cli
