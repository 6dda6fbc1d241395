#include <gtest/gtest.h>

#include <set>
#include <string>

#include "gcdft/identities.hpp"
#include "oracles.hpp"

namespace gcdft {
namespace {

const ParamBounds kSmall{.n_max = 12, .m_max = 12, .a_max = 6, .b_max = 3};

GridPoint point(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b = 0) {
  GridPoint p;
  p.n = n;
  p.m = m;
  p.a = a;
  p.b = b;
  return p;
}

TEST(Registry, Contents) {
  const auto& checks = registry();
  EXPECT_GE(checks.size(), 25u);
  std::set<std::string> ids;
  for (const auto& c : checks) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
    EXPECT_FALSE(c.source.empty()) << c.id;
    EXPECT_FALSE(c.statement.empty()) << c.id;
    EXPECT_TRUE(c.lhs && c.rhs) << c.id;
  }
  for (const char* id : {"euler-gen", "perfect-square", "dirichlet-partial", "g1", "g2", "g3", "g4",
                         "g5", "p1", "p2", "p3", "lg1", "lg2", "lg3", "interassoc", "mt1", "mt2"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_EQ(lookup("euler-gen").id, "euler-gen");
  EXPECT_THROW(lookup("no-such-identity"), std::invalid_argument);
}

TEST(Evaluate, PointExamples) {
  auto [l1, r1] = evaluate(lookup("euler-gen"), point(0, 4, 2));
  EXPECT_EQ(l1, 8);
  EXPECT_EQ(r1, 8);
  auto [l2, r2] = evaluate(lookup("perfect-square"), point(4, 0, 0));
  EXPECT_EQ(l2, 16);
  EXPECT_EQ(r2, 16);
  auto [l3, r3] = evaluate(lookup("dirichlet-partial"), point(3, 0, 2));
  EXPECT_EQ(l3, 8);
  EXPECT_EQ(r3, 8);
  auto [l4, r4] = evaluate(lookup("g1"), point(4, 0, 0));
  EXPECT_EQ(l4, Rational(37, 6));
  EXPECT_EQ(r4, Rational(37, 6));
  auto [l5, r5] = evaluate(lookup("g4"), point(3, 0, 2));
  EXPECT_EQ(l5, 6);
  EXPECT_EQ(r5, 6);
}

TEST(Evaluate, SidesMatchBruteForceSums) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t a = 0; a <= 10; ++a) {
      long partial = 0, weighted = 0;
      for (std::int64_t k = 1; k <= n; ++k) {
        partial += oracle::pair_count(a, k);
        weighted += (n / k) * oracle::pair_count(a, k);
      }
      ASSERT_EQ(evaluate(lookup("g4"), point(n, 0, a)).first, partial);
      ASSERT_EQ(evaluate(lookup("dirichlet-partial"), point(n, 0, a)).first, weighted);
    }
  }
}

TEST(Evaluate, ArbitraryPrecision) {
  // sigma_3(720720) * 720720 is far beyond 64 bits.
  auto [lhs, rhs] = evaluate(lookup("liouville-l2"), point(3, 720720, 0));
  EXPECT_EQ(lhs, rhs);
  EXPECT_GT(lhs, Rational(Integer("18446744073709551616")));
}

TEST(Verify, EulerSmallGrid) {
  const IdentityReport r = verify("euler-gen", {.m_max = 12, .a_max = 12});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points_checked, 12u * 13u);
}

TEST(Verify, EmptyBoxIsSkipped) {
  const IdentityReport r = verify("euler-gen", {.m_max = 0});
  EXPECT_TRUE(r.skipped());
  EXPECT_TRUE(r.passed());
}

TEST(Verify, CapIsEnforced) {
  EXPECT_THROW(verify("p3", {.n_max = 100, .a_max = 100, .b_max = 100}), std::out_of_range);
  EXPECT_GT(grid_size(lookup("p3"), {.n_max = 100, .a_max = 100, .b_max = 100}), kMaxGridPoints);
  EXPECT_THROW(verify("no-such-identity"), std::invalid_argument);
}

TEST(Verify, ExplicitAxesAreFiltered) {
  const IdentityCheck& c = lookup("interassoc");
  // labels {0, 1, 2, 6, 12} cut at 6, times 5 values of m, times 64 variants
  EXPECT_EQ(grid_size(c, {.m_max = 5, .a_max = 6}), 4u * 5u * 64u);
}

TEST(Verify, AllEntriesPassOnSmallGrid) {
  const auto reports = verify_all(kSmall);
  ASSERT_EQ(reports.size(), registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].id, registry()[i].id);
    EXPECT_TRUE(reports[i].passed()) << reports[i].id;
    EXPECT_FALSE(reports[i].skipped()) << reports[i].id;
    const IdentityReport sequential = verify(registry()[i], kSmall);
    EXPECT_EQ(sequential.points_checked, reports[i].points_checked) << reports[i].id;
  }
}

TEST(Mutation, EveryEntryCatchesItsMutant) {
  for (const IdentityCheck& c : registry()) {
    const IdentityReport r = verify(mutated(c), kSmall);
    EXPECT_FALSE(r.passed()) << c.id;
    if (!r.failures.empty()) {
      EXPECT_FALSE(r.failures.front().assignment.empty());
    }
  }
}

TEST(Mutation, EulerCounterexample) {
  const IdentityReport r = verify(mutated(lookup("euler-gen")), {.m_max = 12, .a_max = 12});
  ASSERT_FALSE(r.passed());
  // Only points with gcd(a, m) > 1 distinguish tau from sigma.
  std::uint64_t expected = 0;
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t a = 0; a <= 12; ++a) expected += oracle::gcd(a, m) > 1;
  }
  EXPECT_EQ(r.failures.size(), expected);
}

TEST(Mutation, TruncatedReadingOfP2Fails) {
  const IdentityCheck& p2 = lookup("p2");
  EXPECT_TRUE(verify(p2, {.n_max = 20, .a_max = 20}).passed());
  const IdentityCheck truncated = mutated(p2);
  auto [lhs, rhs] = evaluate(truncated, point(4, 0, 2));
  EXPECT_NE(lhs, rhs);
  auto [lhs1, rhs1] = evaluate(truncated, point(4, 0, 1));
  EXPECT_EQ(lhs1, rhs1);
}

TEST(Specialization, GeneralisedEntriesCollapse) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(evaluate(lookup("g1"), point(n, 0, 0)).first, evaluate(lookup("g3"), point(n, 0, 0)).first);
    EXPECT_EQ(evaluate(lookup("g2"), point(n, 0, 1)).second, evaluate(lookup("g3"), point(n, 0, 0)).second);
    EXPECT_EQ(evaluate(lookup("p1"), point(n, 0, 1)), evaluate(lookup("cesaro-c1"), point(n, 0, 0)));
    EXPECT_EQ(evaluate(lookup("p2"), point(n, 0, 1)), evaluate(lookup("cesaro-c2"), point(n, 0, 0)));
    EXPECT_EQ(evaluate(lookup("p3"), point(n, 0, 1, 1)), evaluate(lookup("cesaro-c3"), point(n, 0, 0)));
    EXPECT_EQ(evaluate(lookup("euler-gen"), point(0, n, 1)).second, n);
  }
  for (std::int64_t m = 1; m <= 40; ++m) {
    EXPECT_EQ(evaluate(lookup("lg1"), point(0, m, 1)), evaluate(lookup("liouville-l1"), point(0, m, 0)));
    EXPECT_EQ(evaluate(lookup("lg3"), point(0, m, 1)), evaluate(lookup("liouville-l3"), point(0, m, 0)));
    for (std::int64_t k = 0; k <= 2; ++k) {
      EXPECT_EQ(evaluate(lookup("lg2"), point(k, m, 1)), evaluate(lookup("liouville-l2"), point(k, m, 0)));
    }
  }
}

}  // namespace
}  // namespace gcdft
