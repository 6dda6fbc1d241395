#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "gcdft/number.hpp"

namespace gcdft {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime; empty for 1.
using Factorization = std::vector<PrimePower>;

// gcd(0, m) = m, which is what makes the a = 0 convolution a Dirichlet product.
constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Trial division by primes up to 10^6, then Pollard-Brent with a fixed seed.
Factorization factorize(std::uint64_t n);

std::uint64_t reconstruct(const Factorization& f);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

enum class Classical { kMobius, kTotient, kTau, kSigma, kTheta, kAlpha };

// Accepts "mobius", "totient", "tau", "sigma", "sigma_<k>", "theta", "alpha".
// For the bare "sigma" spelling *power is left unchanged.
Classical parse_classical(std::string_view name, unsigned* power = nullptr);

// sigma uses `power` as the exponent k of sigma_k; ignored otherwise.
Integer classical(Classical fn, std::uint64_t n, unsigned power = 1);
Integer classical(std::string_view name, std::uint64_t n);

Integer mobius(std::uint64_t n);
Integer totient(std::uint64_t n);
Integer tau(std::uint64_t n);
Integer sigma(std::uint64_t n, unsigned k = 1);
// Ordered coprime factor pairs (d, n/d); equals 2^omega(n), theta(1) = 1.
Integer theta(std::uint64_t n);
// Number of odd divisors.
Integer alpha(std::uint64_t n);

using PrimePowerRule = std::function<Integer(std::uint64_t prime, unsigned exponent)>;

// Product of the rule over the factorization of n; 1 for n = 1.
Integer multiplicative_eval(const PrimePowerRule& rule, std::uint64_t n);

}  // namespace gcdft
