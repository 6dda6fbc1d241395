#include "gcdft/cli.hpp"

#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdft/core_arith.hpp"
#include "gcdft/gcd_dft.hpp"
#include "gcdft/identities.hpp"
#include "gcdft/lambert_poly.hpp"
#include "gcdft/roots.hpp"

namespace gcdft::cli {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxCounterexamplesShown = 20;

struct EvalArgs {
  std::string fn;
  std::optional<std::uint64_t> a, b, m;
  std::string method;
};

struct TableArgs {
  std::string fn;
  std::uint64_t m_max = 10;
  std::uint64_t a_max = 10;
  std::string format = "csv";
};

struct VerifyArgs {
  std::string target;
  std::optional<std::int64_t> n_max, m_max, a_max, b_max;
  std::string mutant;
  std::string format = "csv";
};

struct PolyArgs {
  std::string kind;
  std::uint64_t a = 1;
  std::optional<double> eval_at;
};

struct RootsArgs {
  std::string kind;
  std::uint64_t a = 1;
  std::optional<std::uint64_t> order;
  std::optional<std::string> target;
  std::string format = "csv";
  double tol = kDefaultRootTolerance;
};

struct LambertArgs {
  std::uint64_t a = 1;
  double x = 0.5;
  std::uint64_t terms = 400;
  bool alternating = false;
};

const std::vector<std::string> kEvalFunctions{"phi_a", "ramanujan", "pillai", "id_a", "count-pairs", "kappa"};

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required option ") + flag);
  return *v;
}

// Value of a tabulated/evaluated function at (m, a). pillai without a label
// is the plain gcd-sum P(m).
Integer evaluate_fn(const std::string& fn, std::uint64_t m, std::optional<std::uint64_t> a,
                    const std::string& method) {
  if (fn == "phi_a") {
    return phi_a(a.value_or(0), m, method.empty() ? PhiMethod::kClosed : parse_phi_method(method));
  }
  if (fn == "ramanujan") {
    return ramanujan(m, a.value_or(0),
                     method.empty() ? RamanujanMethod::kKluyver : parse_ramanujan_method(method));
  }
  if (fn == "pillai") {
    const ArithFn p = fn::pillai();
    const Rational v = a ? kluyver_extend(*a, p)(m) : p(m);
    return v.get_num();
  }
  if (fn == "id_a") return id_a(a.value_or(0), m);
  if (fn == "count-pairs") return count_factorizations(a.value_or(0), m);
  if (fn == "kappa") return kappa(a.value_or(0), m);
  throw std::invalid_argument("unknown function: '" + fn + "'");
}

void require_positive(std::uint64_t m, const char* flag) {
  if (m == 0) throw std::invalid_argument(std::string(flag) + " must be positive");
}

int do_eval(const EvalArgs& args, std::ostream& out) {
  std::uint64_t m;
  if (args.fn == "kappa") {
    // kappa[a](n) accepts n = 0; n comes from --b, else --m.
    m = args.b ? *args.b : require(args.m, "--m");
    if (require(args.a, "--a") == 0) throw std::invalid_argument("--a must be positive for kappa");
  } else {
    m = require(args.m, "--m");
    require_positive(m, "--m");
  }
  out << evaluate_fn(args.fn, m, args.a, args.method).get_str() << "\n";
  return kExitOk;
}

int do_table(const TableArgs& args, std::ostream& out) {
  require_positive(args.m_max, "--m-max");
  const std::uint64_t a_min = args.fn == "kappa" ? 1 : 0;
  if (args.a_max < a_min) throw std::invalid_argument("--a-max is below the first label");
  if (args.m_max * (args.a_max + 1) > kMaxGridPoints) {
    throw std::out_of_range("table exceeds " + std::to_string(kMaxGridPoints) + " rows");
  }
  json rows = json::array();
  if (args.format == "csv") out << "m,a,value\n";
  for (std::uint64_t m = 1; m <= args.m_max; ++m) {
    for (std::uint64_t a = a_min; a <= args.a_max; ++a) {
      const std::string value = evaluate_fn(args.fn, m, a, "").get_str();
      if (args.format == "csv") {
        out << m << "," << a << "," << value << "\n";
      } else {
        rows.push_back({{"m", m}, {"a", a}, {"value", value}});
      }
    }
  }
  if (args.format == "json") out << json{{"schema", "table"}, {"rows", rows}}.dump() << "\n";
  return kExitOk;
}

int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  ParamBounds bounds{args.n_max, args.m_max, args.a_max, args.b_max};
  std::vector<IdentityCheck> checks;
  if (args.target == "all") {
    checks = registry();
  } else {
    checks.push_back(lookup(args.target));
  }
  if (!args.mutant.empty()) {
    lookup(args.mutant);
    for (auto& c : checks) {
      if (c.id == args.mutant) c = mutated(c);
    }
  }
  const auto reports = verify_all(checks, bounds);

  std::uint64_t total_failures = 0;
  json rows = json::array();
  if (args.format == "csv") out << "id,points,failures,elapsed_ms\n";
  for (const auto& r : reports) {
    total_failures += r.failures.size();
    const std::string elapsed = format_real(r.elapsed.count());
    if (args.format == "csv") {
      out << r.id << "," << r.points_checked << "," << r.failures.size() << "," << elapsed << "\n";
    } else {
      rows.push_back({{"id", r.id},
                      {"points", r.points_checked},
                      {"failures", r.failures.size()},
                      {"elapsed_ms", r.elapsed.count()}});
    }
    if (r.skipped()) err << r.id << ": skipped (no grid points)\n";
    for (std::size_t i = 0; i < r.failures.size() && i < kMaxCounterexamplesShown; ++i) {
      const auto& f = r.failures[i];
      err << r.id << ": " << f.assignment << ": lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    }
    if (r.failures.size() > kMaxCounterexamplesShown) {
      err << r.id << ": ... " << r.failures.size() - kMaxCounterexamplesShown
          << " more counterexamples\n";
    }
  }
  if (args.format == "json") out << json{{"schema", "report"}, {"rows", rows}}.dump() << "\n";
  return total_failures == 0 ? kExitOk : kExitFailure;
}

PolyZ build_poly(const std::string& kind, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("--a must be positive");
  return kind == "p" ? poly_p(a) : poly_q(a);
}

int do_poly(const PolyArgs& args, std::ostream& out) {
  const PolyZ p = build_poly(args.kind, args.a);
  if (args.eval_at) {
    out << format_real(p.evaluate(*args.eval_at)) << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return kExitOk;
}

int do_roots(const RootsArgs& args, std::ostream& out) {
  const PolyZ p = build_poly(args.kind, args.a);
  const bool is_p = args.kind == "p";
  const std::uint64_t order = args.order.value_or(is_p ? args.a : 2 * args.a);
  const UnityTarget target = args.target ? parse_unity_target(*args.target)
                                         : (is_p ? UnityTarget::kRootsOfUnity
                                                 : UnityTarget::kRootsOfMinusOne);
  const std::string id = args.kind + "[" + std::to_string(args.a) + "]";
  const RootSet rs = unity_distances(find_roots(p, args.tol, id), order, target);

  if (args.format == "csv") {
    out << "re,im,residual,min_distance\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      out << format_real(rs.roots[i].real()) << "," << format_real(rs.roots[i].imag()) << ","
          << format_real(rs.residuals[i]) << "," << format_real(rs.distances[i]) << "\n";
    }
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    rows.push_back({{"re", rs.roots[i].real()},
                    {"im", rs.roots[i].imag()},
                    {"residual", rs.residuals[i]},
                    {"min_distance", rs.distances[i]}});
  }
  out << json{{"schema", "rootset"}, {"poly", id}, {"order", order}, {"rows", rows}}.dump() << "\n";
  return kExitOk;
}

int do_lambert(const LambertArgs& args, std::ostream& out) {
  const LambertCheck c = lambert_check(args.a, args.x, args.terms, args.alternating);
  out << "lhs,rhs,gap\n"
      << format_real(c.lhs) << "," << format_real(c.rhs) << "," << format_real(c.gap) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the Fourier transform of the gcd", "gcdft"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one function value");
  eval->add_option("fn", eval_args.fn, "Function")->required()->check(CLI::IsMember(kEvalFunctions));
  eval->add_option("--a", eval_args.a, "Label a");
  eval->add_option("--b", eval_args.b, "Argument n for kappa");
  eval->add_option("--m", eval_args.m, "Argument m");
  eval->add_option("--method", eval_args.method, "Evaluation route");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate a function over m and a");
  table->add_option("fn", table_args.fn, "Function")->required()->check(CLI::IsMember(kEvalFunctions));
  table->add_option("--m-max", table_args.m_max, "Largest m");
  table->add_option("--a-max", table_args.a_max, "Largest a");
  table->add_option("--format", table_args.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Verify registry identities exactly");
  verify->add_option("id", verify_args.target, "Identity id or 'all'")->required();
  verify->add_option("--n-max", verify_args.n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", verify_args.m_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--a-max", verify_args.a_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--b-max", verify_args.b_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--mutant", verify_args.mutant, "Replace this identity's right side with its mutant");
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"csv", "json"}));

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print p[a] or q[a]");
  poly->add_option("kind", poly_args.kind)->required()->check(CLI::IsMember({"p", "q"}));
  poly->add_option("--a", poly_args.a)->required();
  poly->add_option("--eval-at", poly_args.eval_at);

  RootsArgs roots_args;
  auto* roots = app.add_subcommand("roots", "Roots of p[a] or q[a] with distances to roots of +-1");
  roots->add_option("kind", roots_args.kind)->required()->check(CLI::IsMember({"p", "q"}));
  roots->add_option("--a", roots_args.a)->required();
  roots->add_option("--order", roots_args.order);
  roots->add_option("--target", roots_args.target)->check(CLI::IsMember({"unity", "minus-one"}));
  roots->add_option("--format", roots_args.format)->check(CLI::IsMember({"csv", "json"}));
  roots->add_option("--tol", roots_args.tol)->check(CLI::PositiveNumber);

  LambertArgs lambert_args;
  auto* lambert = app.add_subcommand("lambert", "Compare the Lambert series of phi_a with its closed form");
  lambert->add_option("--a", lambert_args.a)->required();
  lambert->add_option("--x", lambert_args.x)->required();
  lambert->add_option("--terms", lambert_args.terms);
  lambert->add_flag("--alternating", lambert_args.alternating);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return do_eval(eval_args, out);
    if (table->parsed()) return do_table(table_args, out);
    if (verify->parsed()) return do_verify(verify_args, out, err);
    if (poly->parsed()) return do_poly(poly_args, out);
    if (roots->parsed()) return do_roots(roots_args, out);
    if (lambert->parsed()) return do_lambert(lambert_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gcdft::cli
