#include "gcdft/gcd_dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gcdft {

RamanujanMethod parse_ramanujan_method(std::string_view name) {
  if (name == "definition") return RamanujanMethod::kDefinition;
  if (name == "kluyver") return RamanujanMethod::kKluyver;
  if (name == "holder") return RamanujanMethod::kHolder;
  throw std::invalid_argument("unknown Ramanujan method: '" + std::string(name) + "'");
}

PhiMethod parse_phi_method(std::string_view name) {
  if (name == "closed") return PhiMethod::kClosed;
  if (name == "prime_power") return PhiMethod::kPrimePower;
  if (name == "dft") return PhiMethod::kDft;
  if (name == "pairs") return PhiMethod::kPairs;
  throw std::invalid_argument("unknown phi_a method: '" + std::string(name) + "'");
}

std::vector<std::complex<double>> unit_roots(std::uint64_t m) {
  std::vector<std::complex<double>> roots(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                   static_cast<double>(m));
  }
  return roots;
}

DftValue round_to_integer(std::complex<double> value) {
  const double nearest = std::nearbyint(value.real());
  DftValue out{value, Integer(nearest), std::abs(value - std::complex<double>(nearest, 0.0))};
  return out;
}

namespace {

void require_positive(std::uint64_t m, const char* what) {
  if (m == 0) throw std::invalid_argument(std::string(what) + ": m must be positive");
}

// k * a mod m without overflow.
std::uint64_t phase(std::uint64_t k, std::uint64_t a, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(k) * (a % m) % m);
}

Integer pow_int(std::uint64_t base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Integer require_integer(const Rational& q, const char* what) {
  if (!is_integral(q)) {
    throw std::domain_error(std::string(what) + ": value " + to_string(q) + " is not an integer");
  }
  return q.get_num();
}

}  // namespace

DftValue ramanujan_direct(std::uint64_t m, std::uint64_t a) {
  require_positive(m, "ramanujan");
  const auto roots = unit_roots(m);
  std::complex<double> sum = 0.0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (gcd(k, m) == 1) sum += roots[phase(k, a, m)];
  }
  DftValue v = round_to_integer(sum);
  const double tolerance = 1e-6 * static_cast<double>(m);
  if (v.residual > tolerance) {
    throw ResidualError("ramanujan: residual " + std::to_string(v.residual) + " at m=" +
                            std::to_string(m) + ", a=" + std::to_string(a),
                        v.residual, tolerance);
  }
  return v;
}

Integer ramanujan(std::uint64_t m, std::uint64_t a, RamanujanMethod method) {
  require_positive(m, "ramanujan");
  switch (method) {
    case RamanujanMethod::kDefinition:
      return ramanujan_direct(m, a).rounded;
    case RamanujanMethod::kKluyver: {
      Integer sum = 0;
      for (std::uint64_t d : divisors(gcd(a, m))) sum += to_integer(d) * mobius(m / d);
      return sum;
    }
    case RamanujanMethod::kHolder: {
      const std::uint64_t q = m / gcd(a, m);
      const Integer numerator = mobius(q) * totient(m);
      const Integer denominator = totient(q);
      if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
        throw std::logic_error("ramanujan: inexact division in the holder route");
      }
      return numerator / denominator;
    }
  }
  throw std::logic_error("unreachable");
}

DftValue dft_gcd_direct(const ArithFn& h, std::uint64_t a, std::uint64_t m) {
  require_positive(m, "dft_gcd");
  const auto roots = unit_roots(m);
  const auto divs = divisors(m);
  // h(gcd(k, m)) only depends on the divisor; evaluate each once.
  std::vector<double> h_at(m + 1, 0.0);
  double h_max = 0.0;
  for (std::uint64_t d : divs) {
    h_at[d] = h(d).get_d();
    h_max = std::max(h_max, std::abs(h_at[d]));
  }
  std::complex<double> sum = 0.0;
  for (std::uint64_t k = 1; k <= m; ++k) sum += h_at[gcd(k, m)] * roots[phase(k, a, m)];
  DftValue v = round_to_integer(sum);
  const double tolerance = 1e-6 * static_cast<double>(m) * std::max(h_max, 1.0);
  if (v.residual > tolerance) {
    throw ResidualError("dft_gcd: residual " + std::to_string(v.residual) + " at m=" +
                            std::to_string(m) + ", a=" + std::to_string(a),
                        v.residual, tolerance);
  }
  return v;
}

Rational dft_gcd_exact(const ArithFn& h, std::uint64_t a, std::uint64_t m) {
  require_positive(m, "dft_gcd");
  Rational sum = 0;
  for (std::uint64_t d : divisors(m)) {
    sum += h(m / d) * Rational(ramanujan(d, a, RamanujanMethod::kKluyver));
  }
  return sum;
}

Integer dft_gcd(const ArithFn& h, std::uint64_t a, std::uint64_t m, DftMethod method) {
  switch (method) {
    case DftMethod::kDirect: return dft_gcd_direct(h, a, m).rounded;
    case DftMethod::kExact: return require_integer(dft_gcd_exact(h, a, m), "dft_gcd");
  }
  throw std::logic_error("unreachable");
}

unsigned multiplicity(std::uint64_t p, std::uint64_t a) {
  if (a == 0) return kUnboundedMultiplicity;
  unsigned l = 0;
  while (a % p == 0) {
    a /= p;
    ++l;
  }
  return l;
}

Integer phi_a_prime_power(std::uint64_t p, unsigned k, unsigned l) {
  if (k == 0) return 1;
  const Integer pk = pow_int(p, k);
  const Integer pk1 = pow_int(p, k - 1);
  if (l < k) return (pk - pk1) * (l + 1);
  return (k + 1) * pk - k * pk1;
}

Integer count_factorizations(std::uint64_t a, std::uint64_t m) {
  require_positive(m, "count_factorizations");
  const std::uint64_t target = a % m;
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t step = i % m;
    std::uint64_t r = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
      r += step;
      if (r >= m) r -= m;
      if (r == target) ++count;
    }
  }
  return to_integer(count);
}

std::vector<std::uint64_t> factorization_histogram(std::uint64_t m) {
  require_positive(m, "factorization_histogram");
  std::vector<std::uint64_t> hist(m, 0);
  for (std::uint64_t i = 1; i <= m; ++i) {
    const std::uint64_t step = i % m;
    std::uint64_t r = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
      r += step;
      if (r >= m) r -= m;
      ++hist[r];
    }
  }
  return hist;
}

Integer phi_a(std::uint64_t a, std::uint64_t m, PhiMethod method) {
  require_positive(m, "phi_a");
  switch (method) {
    case PhiMethod::kClosed: {
      Integer sum = 0;
      for (std::uint64_t d : divisors(gcd(a, m))) sum += to_integer(d) * totient(m / d);
      return sum;
    }
    case PhiMethod::kPrimePower: {
      Integer product = 1;
      for (const auto& [p, k] : factorize(m)) product *= phi_a_prime_power(p, k, multiplicity(p, a));
      return product;
    }
    case PhiMethod::kDft:
      return dft_gcd(fn::id(), a, m, DftMethod::kDirect);
    case PhiMethod::kPairs:
      return count_factorizations(a, m);
  }
  throw std::logic_error("unreachable");
}

Integer id_a(std::uint64_t a, std::uint64_t m) {
  if (m == 0) return 0;
  return to_integer(m) * tau(gcd(a, m));
}

Rational gcd_fn_coeffs(const ArithFn& h, std::uint64_t k, std::uint64_t m) {
  require_positive(m, "gcd_fn_coeffs");
  if (k == 0 || k > m) throw std::invalid_argument("gcd_fn_coeffs: need 1 <= k <= m");
  return a_convolve(k, dirichlet(h, fn::mobius()), fn::unit())(m);
}

FourierCheck aconv_fourier_check(const ArithFn& f, const ArithFn& g, std::uint64_t a,
                                 std::uint64_t m) {
  require_positive(m, "aconv_fourier_check");
  const auto roots = unit_roots(m);
  const ArithFn f_over_id = divided_by_id(f);
  std::complex<double> sum = 0.0;
  double h_max = 0.0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    const double h_k = a_convolve(k, g, f_over_id)(m).get_d();
    h_max = std::max(h_max, std::abs(h_k));
    sum += h_k * roots[phase(k, a, m)];
  }
  FourierCheck out;
  out.transform = sum;
  out.expected = a_convolve(a, f, g)(m);
  out.residual = std::abs(sum - std::complex<double>(out.expected.get_d(), 0.0));
  out.tolerance = 1e-6 * static_cast<double>(m) * h_max;
  out.ok = out.residual <= out.tolerance;
  return out;
}

}  // namespace gcdft
