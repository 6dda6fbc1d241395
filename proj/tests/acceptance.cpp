// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gcdft/cli.hpp"
#include "gcdft/gcd_dft.hpp"
#include "gcdft/identities.hpp"
#include "gcdft/lambert_poly.hpp"
#include "gcdft/roots.hpp"

using namespace gcdft;
using u64 = std::uint64_t;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome fail(const std::string& why) { return {false, why}; }

Outcome ramanujan_routes() {
  double worst = 0;
  for (u64 m = 1; m <= 300; ++m) {
    for (u64 a = 0; a <= 300; ++a) {
      const DftValue direct = ramanujan_direct(m, a);
      worst = std::max(worst, direct.residual / static_cast<double>(m));
      if (direct.residual >= 1e-6 * static_cast<double>(m)) {
        return fail("residual " + std::to_string(direct.residual) + " at m=" + std::to_string(m));
      }
      const Integer k = ramanujan(m, a, RamanujanMethod::kKluyver);
      if (direct.rounded != k || ramanujan(m, a, RamanujanMethod::kHolder) != k) {
        return fail("disagreement at m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "90601 pairs, worst residual/m %.2e", worst);
  return {true, buf};
}

Outcome phi_routes() {
  for (u64 m = 1; m <= 200; ++m) {
    for (u64 a = 0; a <= 200; ++a) {
      const Integer closed = phi_a(a, m, PhiMethod::kClosed);
      if (phi_a(a, m, PhiMethod::kPrimePower) != closed || phi_a(a, m, PhiMethod::kDft) != closed ||
          phi_a(a, m, PhiMethod::kPairs) != closed) {
        return fail("disagreement at m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
    }
  }
  return {true, "40200 pairs, 4 routes"};
}

Outcome identity_suite() {
  const auto reports = verify_all();
  if (reports.size() < 25) return fail("only " + std::to_string(reports.size()) + " entries");
  std::uint64_t points = 0;
  for (const auto& r : reports) {
    if (r.skipped()) return fail(r.id + " checked no points");
    if (!r.passed()) return fail(r.id + " has " + std::to_string(r.failures.size()) + " failures");
    points += r.points_checked;
  }
  return {true, std::to_string(reports.size()) + " entries, " + std::to_string(points) + " points"};
}

Outcome perfect_square() {
  const IdentityReport r = verify("perfect-square", {.n_max = 300});
  if (r.points_checked != 300) return fail("checked " + std::to_string(r.points_checked) + " points");
  if (!r.passed()) return fail(r.failures.front().assignment);
  return {true, "n = 1..300"};
}

Outcome lambert() {
  double worst = 0;
  for (u64 a : {1, 2, 3, 5, 10}) {
    for (double x : {0.2, 0.3, 0.5}) {
      for (bool alternating : {false, true}) {
        const LambertCheck c = lambert_check(a, x, 400, alternating);
        worst = std::max(worst, c.gap);
        if (!(c.gap < 1e-9)) {
          return fail("gap " + std::to_string(c.gap) + " at a=" + std::to_string(a));
        }
        if (a == 1) {
          const double closed = alternating ? (1 + x * x) * x / ((1 - x * x) * (1 - x * x))
                                            : x / ((1 - x) * (1 - x));
          if (!(std::abs(c.rhs - closed) < 1e-9 && std::abs(c.lhs - closed) < 1e-9)) {
            return fail("a=1 closed form off at x=" + std::to_string(x));
          }
        }
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "30 checks, worst gap %.2e", worst);
  return {true, buf};
}

Outcome polynomial_structure() {
  const PolyZ one_plus_x2{1, 0, 1};
  for (u64 a = 1; a <= 50; ++a) {
    const PolyZ p = poly_p(a);
    const PolyZ q = poly_q(a);
    if (q != poly_q_combination(a)) return fail("q != combination at a=" + std::to_string(a));
    if (!p.is_palindromic() || p.degree() != static_cast<long>(2 * a - 2)) {
      return fail("p not palindromic of degree 2a-2 at a=" + std::to_string(a));
    }
    if (a % 2 == 1 && !divide_monic(q, one_plus_x2).remainder.is_zero()) {
      return fail("1+x^2 does not divide q at a=" + std::to_string(a));
    }
  }
  return {true, "a = 1..50"};
}

Outcome fractal() {
  for (u64 a = 1; a <= 50; ++a) {
    for (u64 n = 0; n <= 2 * a; ++n) {
      if (kappa(a, 2 * a + n) != kappa(a, 2 * a - n)) return fail("reflection about 2a fails at a=" + std::to_string(a));
    }
  }
  for (u64 a = 1; a <= 9; ++a) {
    for (u64 b = 1; b <= 9; ++b) {
      if (gcd(a, b) != 1) continue;
      for (u64 n = 1; n <= 32; ++n) {
        const Integer expected = b % 2 == 1 ? alpha(n) : Integer(0);
        if (kappa(a * n, b * n) != expected) return fail("scaling by n fails at a=" + std::to_string(a));
      }
    }
  }
  for (u64 a = 1; a <= 100; ++a) {
    for (u64 k = 1; k <= 100; ++k) {
      if (h_fn(a, k) != kappa(a, k) * k) return fail("h != kappa * id at a=" + std::to_string(a));
    }
  }
  for (u64 a = 1; a <= 50; ++a) {
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(4 * a); ++n) {
      if (b_coefficient(a, n) != b_product(a, n)) return fail("b readings disagree at a=" + std::to_string(a));
    }
  }
  return {true, "reflection, scaling, h = kappa id, b = kappa t"};
}

Outcome roots_export() {
  std::ostringstream out, err;
  const int code = cli::run({"roots", "p", "--a", "37", "--order", "37"}, out, err);
  if (code != cli::kExitOk) return fail("exit " + std::to_string(code) + ": " + err.str());
  const double bound = 1e-8 * poly_p(37).abs_coeff_sum().get_d();
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  if (line != "re,im,residual,min_distance") return fail("header '" + line + "'");
  std::vector<std::complex<double>> roots;
  double worst = 0;
  while (std::getline(in, line)) {
    double re, im, residual, distance;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &re, &im, &residual, &distance) != 4) {
      return fail("malformed row '" + line + "'");
    }
    if (!(residual < bound)) return fail("residual " + std::to_string(residual));
    if (!std::isfinite(distance)) return fail("missing distance");
    worst = std::max(worst, residual);
    roots.emplace_back(re, im);
  }
  if (roots.size() != 72) return fail(std::to_string(roots.size()) + " roots");
  for (const auto& z : roots) {
    double nearest = INFINITY;
    for (const auto& w : roots) nearest = std::min(nearest, std::abs(w - std::conj(z)));
    // Rows carry 12 significant digits.
    if (nearest > 1e-9 * std::max(1.0, std::abs(z))) return fail("unpaired root");
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "72 roots, worst residual %.2e (bound %.2e)", worst, bound);
  return {true, buf};
}

Outcome mutation() {
  for (const IdentityCheck& check : registry()) {
    const IdentityReport r = verify(mutated(check));
    if (r.passed()) return fail("mutant of " + check.id + " survives");
  }
  std::ostringstream out, err;
  const int code = cli::run({"verify", "all", "--mutant", "euler-gen"}, out, err);
  if (code == cli::kExitOk) return fail("verify all --mutant euler-gen exited 0");
  return {true, std::to_string(registry().size()) + " mutants killed; verify all exit " +
                    std::to_string(code)};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double budget_s;  // 0: no runtime budget
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "ramanujan routes agree, m,a <= 300", 30, ramanujan_routes},
      {2, "phi_a routes agree, m,a <= 200", 60, phi_routes},
      {3, "identity registry at default bounds", 60, identity_suite},
      {4, "perfect square, n <= 300", 0, perfect_square},
      {5, "lambert series vs closed forms", 0, lambert},
      {6, "polynomial structure of p and q", 0, polynomial_structure},
      {7, "fractal properties of kappa", 0, fractal},
      {8, "roots p --a 37 --order 37", 0, roots_export},
      {9, "every documented mutant is caught", 0, mutation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (o.pass && c.budget_s > 0 && elapsed >= c.budget_s) {
      o = fail("took " + std::to_string(elapsed) + " s");
    }
    failed += !o.pass;
    std::printf("criterion %d: %s  %s (%s) [%.2f s]\n", c.number, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
