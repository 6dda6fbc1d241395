#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gcdft/number.hpp"

namespace gcdft {

// Dense integer polynomial, constant term first. Trailing zeros are
// stripped so the zero polynomial has no coefficients.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Integer> coeffs);
  PolyZ(std::initializer_list<long> coeffs);

  static PolyZ monomial(Integer c, std::size_t power);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  // p(x) -> p(x^k)
  PolyZ substitute_power(std::size_t k) const;
  // p(x) -> x^k p(x)
  PolyZ shifted(std::size_t k) const;

  bool is_palindromic() const;
  Integer abs_coeff_sum() const;

  double evaluate(double x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  std::string to_string() const;

  friend bool operator==(const PolyZ&, const PolyZ&) = default;
  friend PolyZ operator+(const PolyZ& p, const PolyZ& q);
  friend PolyZ operator-(const PolyZ& p, const PolyZ& q);
  friend PolyZ operator*(const PolyZ& p, const PolyZ& q);
  friend PolyZ operator*(const Integer& c, const PolyZ& p);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  PolyZ quotient;
  PolyZ remainder;
};

// Synthetic division by a monic divisor; exact over the integers.
PolyDivision divide_monic(const PolyZ& dividend, const PolyZ& divisor);

// t[a](n) = a - |n - a| on 0 <= n <= 2a.
std::int64_t tent(std::int64_t a, std::int64_t n);

// c[a](k) = id_a(t[a](k)).
Integer p_coefficient(std::uint64_t a, std::int64_t k);
// sum over k = 1..2a of c[a](k) x^{k-1}
PolyZ poly_p(std::uint64_t a);

// The fractal function:
//   0                  if n = 0, or n even and a odd
//   kappa(a/2, n/2)    if both even
//   tau(gcd(a, n))     if n odd
Integer kappa(std::uint64_t a, std::uint64_t n);

// h[a](k) = id_a(k) - 2 [2 | k] id_a(k/2); h[a](0) = 0.
Integer h_fn(std::uint64_t a, std::uint64_t k);

// b[a](k) = h[a](t[2a](k)).
Integer b_coefficient(std::uint64_t a, std::int64_t k);
// kappa[a](k) * t[2a](k), the product reading of b[a].
Integer b_product(std::uint64_t a, std::int64_t k);

// sum over k = 1..4a of b[a](k) x^{k-1}
PolyZ poly_q(std::uint64_t a);
// p[a](x) (1 + x^a)^2 - 2x p[a](x^2)
PolyZ poly_q_combination(std::uint64_t a);
// For odd a: sum over m = 1..a of b[a](2a-2m+1) x^{2a-2m} (1 + x^{4m-2}).
PolyZ poly_q_odd_form(std::uint64_t a);

struct LambertCheck {
  double lhs;
  double rhs;
  double gap;
};

// Truncated Lambert series of phi_a against its closed form.
//   plain:       sum phi_a(m) x^m / (1 - x^m)  vs  p[a](x) x / (1 - x^a)^2
//   alternating: sum phi_a(m) x^m / (1 + x^m)  vs  q[a](x) x / (1 - x^{2a})^2
LambertCheck lambert_check(std::uint64_t a, double x, std::uint64_t terms,
                           bool alternating = false);

}  // namespace gcdft
