#include "gcdft/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace gcdft {

UnityTarget parse_unity_target(std::string_view name) {
  if (name == "unity") return UnityTarget::kRootsOfUnity;
  if (name == "minus-one") return UnityTarget::kRootsOfMinusOne;
  throw std::invalid_argument("unknown target: '" + std::string(name) + "'");
}

namespace {

using LongComplex = std::complex<long double>;

struct Evaluation {
  LongComplex value;
  LongComplex derivative;
};

Evaluation horner(const std::vector<long double>& c, LongComplex z) {
  LongComplex p = 0.0L, dp = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

// Aberth-Ehrlich simultaneous iteration. Unlike per-root Newton it cannot
// send two estimates to the same root, and it recovers from the poor
// eigenvalues the companion matrix gives for clustered roots.
void aberth(const std::vector<long double>& c, std::vector<LongComplex>& z) {
  const std::size_t n = z.size();
  for (int it = 0; it < kMaxPolishIterations; ++it) {
    long double largest_step = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
      const Evaluation e = horner(c, z[k]);
      if (e.value == 0.0L) continue;
      if (e.derivative == 0.0L) {
        z[k] += LongComplex(1e-6L, 1e-6L);
        largest_step = 1.0L;
        continue;
      }
      const LongComplex ratio = e.value / e.derivative;
      LongComplex repulsion = 0.0L;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        LongComplex diff = z[k] - z[j];
        if (diff == 0.0L) diff = LongComplex(1e-12L, 1e-12L);
        repulsion += 1.0L / diff;
      }
      const LongComplex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (largest_step < 1e-18L) return;
  }
}

LongComplex polish(const std::vector<long double>& c, LongComplex z) {
  long double best = std::abs(horner(c, z).value);
  for (int it = 0; it < kMaxPolishIterations && best > 0.0L; ++it) {
    const Evaluation e = horner(c, z);
    if (e.derivative == 0.0L) break;
    const LongComplex next = z - e.value / e.derivative;
    const long double r = std::abs(horner(c, next).value);
    if (!(r < best)) break;
    best = r;
    z = next;
  }
  return z;
}

}  // namespace

RootSet find_roots(const PolyZ& p, double tol, std::string poly_id) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("find_roots: tol must be positive");

  const auto& coeffs = p.coeffs();
  std::vector<long double> c;
  c.reserve(coeffs.size());
  Eigen::VectorXd poly(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    c.push_back(static_cast<long double>(coeffs[i].get_d()));
    poly[static_cast<Eigen::Index>(i)] = coeffs[i].get_d();
  }

  std::vector<std::complex<double>> roots;
  if (p.degree() == 1) {
    roots.emplace_back(-poly[0] / poly[1], 0.0);
  } else {
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(poly);
    const auto& r = solver.roots();
    roots.assign(r.data(), r.data() + r.size());
  }

  RootSet out;
  out.poly_id = std::move(poly_id);
  out.residual_bound = tol * p.abs_coeff_sum().get_d();
  std::vector<LongComplex> estimates;
  estimates.reserve(roots.size());
  for (const auto& z : roots) {
    // A non-finite eigenvalue is replaced by a point on a circle of the
    // Cauchy bound so the iteration still has distinct starting values.
    if (std::isfinite(z.real()) && std::isfinite(z.imag())) {
      estimates.emplace_back(z.real(), z.imag());
    } else {
      long double bound = 0.0L;
      for (long double ci : c) bound = std::max(bound, std::abs(ci / c.back()));
      estimates.push_back(std::polar(1.0L + bound, 0.7L + static_cast<long double>(estimates.size())));
    }
  }
  if (estimates.size() > 1) aberth(c, estimates);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const LongComplex polished = polish(c, estimates[i]);
    roots[i] = {static_cast<double>(polished.real()), static_cast<double>(polished.imag())};
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  for (const auto& z : roots) {
    const double residual =
        static_cast<double>(std::abs(horner(c, LongComplex(z.real(), z.imag())).value));
    const double scale = std::pow(std::max(1.0, std::abs(z)), static_cast<double>(p.degree()));
    if (!(residual <= out.residual_bound * scale)) {
      throw std::runtime_error("find_roots: root did not converge (residual " +
                               std::to_string(residual) + ")");
    }
    out.residuals.push_back(residual);
  }
  out.roots = std::move(roots);
  return out;
}

RootSet unity_distances(RootSet rs, std::uint64_t order, UnityTarget target) {
  if (order == 0) throw std::invalid_argument("unity_distances: order must be positive");
  std::vector<std::complex<double>> refs(order);
  const double shift = target == UnityTarget::kRootsOfMinusOne ? 1.0 : 0.0;
  for (std::uint64_t j = 0; j < order; ++j) {
    refs[j] = std::polar(1.0, std::numbers::pi * (2.0 * static_cast<double>(j) + shift) /
                                  static_cast<double>(order));
  }
  rs.reference_order = order;
  rs.target = target;
  rs.distances.clear();
  for (const auto& z : rs.roots) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : refs) best = std::min(best, std::abs(z - w));
    rs.distances.push_back(best);
  }
  return rs;
}

}  // namespace gcdft
