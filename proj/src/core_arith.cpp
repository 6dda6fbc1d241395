#include "gcdft/core_arith.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace gcdft {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

constexpr std::uint32_t kSieveLimit = 1u << 20;
constexpr std::uint32_t kTrialLimit = 1000000;

struct SmallPrimeTable {
  std::vector<std::uint32_t> smallest_factor;
  std::vector<std::uint32_t> primes;

  SmallPrimeTable() : smallest_factor(kSieveLimit + 1, 0) {
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (smallest_factor[i] == 0) {
        smallest_factor[i] = i;
        primes.push_back(i);
      }
      for (std::uint32_t p : primes) {
        if (p > smallest_factor[i] || std::uint64_t{p} * i > kSieveLimit) break;
        smallest_factor[p * i] = p;
      }
    }
  }
};

// Built on first use and read-only afterwards.
const SmallPrimeTable& prime_table() {
  static const SmallPrimeTable table;
  return table;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent. The polynomial constant walks 1, 2, 3, ... so the output
// never depends on a random source.
std::uint64_t find_factor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = find_factor(n);
  split_large(d, out);
  split_large(n / d, out);
}

void push_prime(Factorization& f, std::uint64_t p) {
  if (!f.empty() && f.back().prime == p) {
    ++f.back().exponent;
  } else {
    f.push_back({p, 1});
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return prime_table().smallest_factor[n] == n;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  const auto& table = prime_table();
  if (n <= kSieveLimit) {
    while (n > 1) {
      push_prime(f, table.smallest_factor[n]);
      n /= table.smallest_factor[n];
    }
    return f;
  }
  for (std::uint32_t p : table.primes) {
    if (p > kTrialLimit) break;
    if (std::uint64_t{p} * p > n) break;
    while (n % p == 0) {
      push_prime(f, p);
      n /= p;
    }
  }
  if (n == 1) return f;
  std::vector<std::uint64_t> large;
  split_large(n, large);
  std::sort(large.begin(), large.end());
  for (std::uint64_t p : large) push_prime(f, p);
  return f;
}

std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, k] : f) {
    for (unsigned i = 0; i < k; ++i) n *= p;
  }
  return n;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, k] : f) {
    const std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= k; ++e) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

Integer multiplicative_eval(const PrimePowerRule& rule, std::uint64_t n) {
  Integer result = 1;
  for (const auto& [p, k] : factorize(n)) result *= rule(p, k);
  return result;
}

namespace {

Integer pow_int(std::uint64_t base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace

Integer mobius(std::uint64_t n) {
  return multiplicative_eval([](std::uint64_t, unsigned k) { return Integer(k == 1 ? -1 : 0); }, n);
}

Integer totient(std::uint64_t n) {
  return multiplicative_eval(
      [](std::uint64_t p, unsigned k) { return Integer(pow_int(p, k) - pow_int(p, k - 1)); }, n);
}

Integer tau(std::uint64_t n) {
  return multiplicative_eval([](std::uint64_t, unsigned k) { return Integer(k + 1); }, n);
}

Integer sigma(std::uint64_t n, unsigned power) {
  return multiplicative_eval(
      [power](std::uint64_t p, unsigned k) {
        if (power == 0) return Integer(k + 1);
        Integer term = 1, sum = 1;
        const Integer step = pow_int(p, power);
        for (unsigned i = 0; i < k; ++i) {
          term *= step;
          sum += term;
        }
        return sum;
      },
      n);
}

Integer theta(std::uint64_t n) {
  return multiplicative_eval([](std::uint64_t, unsigned) { return Integer(2); }, n);
}

Integer alpha(std::uint64_t n) {
  return multiplicative_eval(
      [](std::uint64_t p, unsigned k) { return Integer(p == 2 ? 1 : k + 1); }, n);
}

Classical parse_classical(std::string_view name, unsigned* power) {
  if (name == "mobius") return Classical::kMobius;
  if (name == "totient") return Classical::kTotient;
  if (name == "tau") return Classical::kTau;
  if (name == "theta") return Classical::kTheta;
  if (name == "alpha") return Classical::kAlpha;
  if (name == "sigma") return Classical::kSigma;
  if (name.starts_with("sigma_")) {
    const std::string_view digits = name.substr(6);
    unsigned k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      if (power != nullptr) *power = k;
      return Classical::kSigma;
    }
  }
  throw std::invalid_argument("unknown classical function: '" + std::string(name) + "'");
}

Integer classical(Classical fn, std::uint64_t n, unsigned power) {
  if (n == 0) throw std::invalid_argument("classical: n must be positive");
  switch (fn) {
    case Classical::kMobius: return mobius(n);
    case Classical::kTotient: return totient(n);
    case Classical::kTau: return tau(n);
    case Classical::kSigma: return sigma(n, power);
    case Classical::kTheta: return theta(n);
    case Classical::kAlpha: return alpha(n);
  }
  throw std::logic_error("unreachable");
}

Integer classical(std::string_view name, std::uint64_t n) {
  unsigned power = 1;
  const Classical fn = parse_classical(name, &power);
  return classical(fn, n, power);
}

}  // namespace gcdft
