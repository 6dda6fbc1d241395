#include "gcdft/lambert_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gcdft/core_arith.hpp"
#include "gcdft/gcd_dft.hpp"

namespace gcdft {

PolyZ::PolyZ(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

PolyZ PolyZ::monomial(Integer c, std::size_t power) {
  std::vector<Integer> v(power + 1, Integer(0));
  v[power] = std::move(c);
  return PolyZ(std::move(v));
}

void PolyZ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyZ PolyZ::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  if (is_zero()) return {};
  std::vector<Integer> v(k * (coeffs_.size() - 1) + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return PolyZ(std::move(v));
}

PolyZ PolyZ::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PolyZ(std::move(v));
}

bool PolyZ::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Integer PolyZ::abs_coeff_sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

double PolyZ::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<long double> PolyZ::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + static_cast<long double>(it->get_d());
  }
  return acc;
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ",";
    out += coeffs_[i].get_str();
  }
  return out;
}

PolyZ operator+(const PolyZ& p, const PolyZ& q) {
  std::vector<Integer> v(std::max(p.coeffs_.size(), q.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return PolyZ(std::move(v));
}

PolyZ operator-(const PolyZ& p, const PolyZ& q) { return p + Integer(-1) * q; }

PolyZ operator*(const PolyZ& p, const PolyZ& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> v(p.coeffs_.size() + q.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return PolyZ(std::move(v));
}

PolyZ operator*(const Integer& c, const PolyZ& p) {
  std::vector<Integer> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return PolyZ(std::move(v));
}

PolyDivision divide_monic(const PolyZ& dividend, const PolyZ& divisor) {
  if (divisor.is_zero() || divisor.coeffs().back() != 1) {
    throw std::invalid_argument("divide_monic: divisor must be monic");
  }
  std::vector<Integer> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dn = d.size() - 1;
  if (rem.size() <= dn) return {PolyZ{}, dividend};
  std::vector<Integer> quot(rem.size() - dn, Integer(0));
  for (std::size_t i = rem.size(); i-- > dn;) {
    const Integer lead = rem[i];
    if (lead == 0) continue;
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= lead * d[j];
  }
  return {PolyZ(std::move(quot)), PolyZ(std::move(rem))};
}

std::int64_t tent(std::int64_t a, std::int64_t n) {
  if (a < 1) throw std::invalid_argument("tent: a must be positive");
  if (n < 0 || n > 2 * a) throw std::out_of_range("tent: n must lie in [0, 2a]");
  return a - std::abs(n - a);
}

Integer p_coefficient(std::uint64_t a, std::int64_t k) {
  return id_a(a, static_cast<std::uint64_t>(tent(static_cast<std::int64_t>(a), k)));
}

PolyZ poly_p(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("poly_p: a must be positive");
  std::vector<Integer> v;
  v.reserve(2 * a);
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(2 * a); ++k) v.push_back(p_coefficient(a, k));
  return PolyZ(std::move(v));
}

Integer kappa(std::uint64_t a, std::uint64_t n) {
  if (a == 0) throw std::invalid_argument("kappa: a must be positive");
  while (true) {
    if (n == 0) return 0;
    if (n % 2 == 1) return tau(gcd(a, n));
    if (a % 2 == 1) return 0;
    a /= 2;
    n /= 2;
  }
}

Integer h_fn(std::uint64_t a, std::uint64_t k) {
  if (k == 0) return 0;
  Integer v = id_a(a, k);
  if (k % 2 == 0) v -= 2 * id_a(a, k / 2);
  return v;
}

Integer b_coefficient(std::uint64_t a, std::int64_t k) {
  return h_fn(a, static_cast<std::uint64_t>(tent(2 * static_cast<std::int64_t>(a), k)));
}

Integer b_product(std::uint64_t a, std::int64_t k) {
  if (k < 0) throw std::out_of_range("b_product: k must be nonnegative");
  return kappa(a, static_cast<std::uint64_t>(k)) * tent(2 * static_cast<std::int64_t>(a), k);
}

PolyZ poly_q(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("poly_q: a must be positive");
  std::vector<Integer> v;
  v.reserve(4 * a);
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(4 * a); ++k) v.push_back(b_coefficient(a, k));
  return PolyZ(std::move(v));
}

PolyZ poly_q_combination(std::uint64_t a) {
  const PolyZ p = poly_p(a);
  const PolyZ one_plus = PolyZ{1} + PolyZ::monomial(1, a);
  return p * one_plus * one_plus - Integer(2) * p.substitute_power(2).shifted(1);
}

PolyZ poly_q_odd_form(std::uint64_t a) {
  if (a % 2 == 0) throw std::invalid_argument("poly_q_odd_form: a must be odd");
  PolyZ sum;
  const auto sa = static_cast<std::int64_t>(a);
  for (std::int64_t m = 1; m <= sa; ++m) {
    const PolyZ factor = PolyZ{1} + PolyZ::monomial(1, static_cast<std::size_t>(4 * m - 2));
    sum = sum + b_coefficient(a, 2 * sa - 2 * m + 1) *
                    factor.shifted(static_cast<std::size_t>(2 * sa - 2 * m));
  }
  return sum;
}

LambertCheck lambert_check(std::uint64_t a, double x, std::uint64_t terms, bool alternating) {
  if (a == 0) throw std::invalid_argument("lambert_check: a must be positive");
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("lambert_check: x must lie in (0, 1)");
  double lhs = 0.0;
  double xm = 1.0;
  for (std::uint64_t m = 1; m <= terms; ++m) {
    xm *= x;
    const double denom = alternating ? 1.0 + xm : 1.0 - xm;
    lhs += phi_a(a, m).get_d() * xm / denom;
  }
  double rhs;
  if (alternating) {
    const double w = 1.0 - std::pow(x, 2.0 * static_cast<double>(a));
    rhs = poly_q(a).evaluate(x) * x / (w * w);
  } else {
    const double w = 1.0 - std::pow(x, static_cast<double>(a));
    rhs = poly_p(a).evaluate(x) * x / (w * w);
  }
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace gcdft
