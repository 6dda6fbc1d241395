#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcdft/lambert_poly.hpp"

namespace gcdft {

enum class UnityTarget { kRootsOfUnity, kRootsOfMinusOne };

UnityTarget parse_unity_target(std::string_view name);

struct RootSet {
  std::string poly_id;
  std::vector<std::complex<double>> roots;  // with multiplicity
  std::vector<double> residuals;            // |p(root)|
  double residual_bound = 0.0;              // tol * sum |coeff|, scaled by |z|^deg outside the unit disk
  std::uint64_t reference_order = 0;        // 0 until distances are filled
  UnityTarget target = UnityTarget::kRootsOfUnity;
  std::vector<double> distances;
};

inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr int kMaxPolishIterations = 1000;

// All complex roots of p from the eigenvalues of its companion matrix, each
// refined by Aberth iteration and Newton steps in extended precision. Throws
// std::runtime_error when a root z cannot be brought under
// tol * sum |coeff| * max(1, |z|)^deg within kMaxPolishIterations. Roots are
// sorted by (real, imag).
RootSet find_roots(const PolyZ& p, double tol = kDefaultRootTolerance, std::string poly_id = {});

// Fills distances with the minimum |z - w| over the order-th roots w of 1
// (exp(2 pi i j / order)) or of -1 (exp(pi i (2j + 1) / order)).
RootSet unity_distances(RootSet rs, std::uint64_t order, UnityTarget target);

}  // namespace gcdft
