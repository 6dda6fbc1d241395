#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gcdft/arith_fn.hpp"
#include "gcdft/number.hpp"

namespace gcdft {

// A floating-point sum that should land on an integer.
struct DftValue {
  std::complex<double> value;
  Integer rounded;   // nearest integer to value.real()
  double residual;   // |value - rounded| in the complex plane
};

// The floating path exceeded its tolerance; the exact path is authoritative.
class ResidualError : public std::runtime_error {
 public:
  ResidualError(const std::string& what, double residual, double tolerance)
      : std::runtime_error(what), residual_(residual), tolerance_(tolerance) {}
  double residual() const { return residual_; }
  double tolerance() const { return tolerance_; }

 private:
  double residual_;
  double tolerance_;
};

enum class RamanujanMethod { kDefinition, kKluyver, kHolder };
enum class DftMethod { kDirect, kExact };
enum class PhiMethod { kClosed, kPrimePower, kDft, kPairs };

RamanujanMethod parse_ramanujan_method(std::string_view name);
PhiMethod parse_phi_method(std::string_view name);

// exp(2 pi i r / m) for r = 0..m-1; all exponents are reduced mod m before
// lookup so large k*a never loses precision.
std::vector<std::complex<double>> unit_roots(std::uint64_t m);

DftValue round_to_integer(std::complex<double> value);

// Ramanujan's sum c_m(a).
//   definition: sum of alpha_m^{ka} over k <= m coprime to m, then rounded
//   kluyver:    sum over d | gcd(a, m) of d mu(m/d)
//   holder:     mu(m/g) phi(m) / phi(m/g), g = gcd(a, m)
// The definition route throws ResidualError past 1e-6 * m.
Integer ramanujan(std::uint64_t m, std::uint64_t a, RamanujanMethod method);
DftValue ramanujan_direct(std::uint64_t m, std::uint64_t a);

// Fourier transform of h(gcd(., m)) at frequency a.
//   direct: sum over k = 1..m of h(gcd(k, m)) alpha_m^{ka}
//   exact:  sum over d | m of h(m/d) c_d(a)
// h must be integer-valued on the divisors of m.
Integer dft_gcd(const ArithFn& h, std::uint64_t a, std::uint64_t m, DftMethod method);
DftValue dft_gcd_direct(const ArithFn& h, std::uint64_t a, std::uint64_t m);
Rational dft_gcd_exact(const ArithFn& h, std::uint64_t a, std::uint64_t m);

// Marks "p divides a to every power", i.e. a = 0.
inline constexpr unsigned kUnboundedMultiplicity = ~0u;

// Multiplicity of p in a; kUnboundedMultiplicity for a = 0.
unsigned multiplicity(std::uint64_t p, std::uint64_t a);

// phi_a(p^k) given l = multiplicity of p in a.
Integer phi_a_prime_power(std::uint64_t p, unsigned k, unsigned l);

// phi_a(m): the DFT of the gcd, the Kluyver extension of phi, and the
// number of solutions of i*j = a (mod m).
Integer phi_a(std::uint64_t a, std::uint64_t m, PhiMethod method = PhiMethod::kClosed);

// Ordered pairs (i, j) in [1, m]^2 with i*j = a (mod m), by enumeration.
Integer count_factorizations(std::uint64_t a, std::uint64_t m);

// Entry r is the number of pairs (i, j) in [1, m]^2 with i*j = r (mod m).
std::vector<std::uint64_t> factorization_histogram(std::uint64_t m);

// id_a(m) = m tau(gcd(a, m)); id_a(0) = 0.
Integer id_a(std::uint64_t a, std::uint64_t m);

// ((h * mu) *_k u)(m), which reproduces h(gcd(k, m)).
Rational gcd_fn_coeffs(const ArithFn& h, std::uint64_t k, std::uint64_t m);

struct FourierCheck {
  bool ok;
  std::complex<double> transform;  // sum of h_k(m) alpha_m^{ka}
  Rational expected;               // (f *_a g)(m)
  double residual;
  double tolerance;
};

// Compares (f *_a g)(m) with the transform of h_k = g *_k (f/id).
FourierCheck aconv_fourier_check(const ArithFn& f, const ArithFn& g, std::uint64_t a,
                                 std::uint64_t m);

}  // namespace gcdft
