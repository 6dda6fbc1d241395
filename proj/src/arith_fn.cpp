#include "gcdft/arith_fn.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace gcdft {

ArithFn::ArithFn(std::string name, Eval eval, bool multiplicative, RationalRule rule)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(name), std::move(eval), multiplicative, std::move(rule)})) {}

Rational ArithFn::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument(impl_->name + ": argument must be positive");
  return impl_->eval(n);
}

Rational ArithFn::eval_by_prime_powers(std::uint64_t n) const {
  if (!impl_->rule) throw std::logic_error(impl_->name + ": no prime-power rule");
  if (n == 0) throw std::invalid_argument(impl_->name + ": argument must be positive");
  Rational result = 1;
  for (const auto& [p, k] : factorize(n)) result *= impl_->rule(p, k);
  return result;
}

ArithFn ArithFn::renamed(std::string name) const {
  ArithFn copy = *this;
  copy.impl_ = std::make_shared<const Impl>(
      Impl{std::move(name), impl_->eval, impl_->multiplicative, impl_->rule});
  return copy;
}

namespace {

struct MemoTable {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, Rational> values;
};

Rational pow_rational(std::uint64_t base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return Rational(r);
}

}  // namespace

ArithFn memoized(const ArithFn& f) {
  auto table = std::make_shared<MemoTable>();
  return ArithFn(
      f.name(),
      [f, table](std::uint64_t n) -> Rational {
        {
          std::lock_guard lock(table->mutex);
          if (auto it = table->values.find(n); it != table->values.end()) return it->second;
        }
        // Computed outside the lock; a racing writer stores the same value.
        Rational v = f(n);
        std::lock_guard lock(table->mutex);
        table->values.emplace(n, v);
        return v;
      },
      f.multiplicative(),
      f.prime_power_rule());
}

namespace fn {

ArithFn id() {
  return ArithFn(
      "id", [](std::uint64_t n) -> Rational { return Rational(to_integer(n)); }, true,
      [](std::uint64_t p, unsigned k) -> Rational { return pow_rational(p, k); });
}

ArithFn unit() {
  return ArithFn(
      "u", [](std::uint64_t) { return Rational(1); }, true,
      [](std::uint64_t, unsigned) -> Rational { return Rational(1); });
}

ArithFn identity_element() {
  return ArithFn(
      "I", [](std::uint64_t n) -> Rational { return Rational(n == 1 ? 1 : 0); }, true,
      [](std::uint64_t, unsigned) -> Rational { return Rational(0); });
}

ArithFn power(unsigned k) {
  return ArithFn(
      "id[" + std::to_string(k) + "]", [k](std::uint64_t n) -> Rational { return pow_rational(n, k); }, true,
      [k](std::uint64_t p, unsigned e) -> Rational { return pow_rational(p, k * e); });
}

ArithFn reciprocal_id() {
  return ArithFn(
      "1/id", [](std::uint64_t n) -> Rational { return Rational(1, to_integer(n)); }, true,
      [](std::uint64_t p, unsigned k) -> Rational { return Rational(1) / pow_rational(p, k); });
}

ArithFn mobius() {
  return ArithFn(
      "mu", [](std::uint64_t n) -> Rational { return Rational(gcdft::mobius(n)); }, true,
      [](std::uint64_t, unsigned k) -> Rational { return Rational(k == 1 ? -1 : 0); });
}

ArithFn totient() {
  return ArithFn(
      "phi", [](std::uint64_t n) -> Rational { return Rational(gcdft::totient(n)); }, true,
      [](std::uint64_t p, unsigned k) -> Rational { return pow_rational(p, k) - pow_rational(p, k - 1); });
}

ArithFn tau() {
  return ArithFn(
      "tau", [](std::uint64_t n) -> Rational { return Rational(gcdft::tau(n)); }, true,
      [](std::uint64_t, unsigned k) -> Rational { return Rational(k + 1); });
}

ArithFn sigma(unsigned k) {
  return ArithFn(
      "sigma[" + std::to_string(k) + "]",
      [k](std::uint64_t n) -> Rational { return Rational(gcdft::sigma(n, k)); }, true,
      [k](std::uint64_t p, unsigned e) -> Rational {
        Rational sum = 0;
        for (unsigned i = 0; i <= e; ++i) sum += pow_rational(p, k * i);
        return sum;
      });
}

ArithFn theta() {
  return ArithFn(
      "theta", [](std::uint64_t n) -> Rational { return Rational(gcdft::theta(n)); }, true,
      [](std::uint64_t, unsigned) -> Rational { return Rational(2); });
}

ArithFn alpha() {
  return ArithFn(
      "alpha", [](std::uint64_t n) -> Rational { return Rational(gcdft::alpha(n)); }, true,
      [](std::uint64_t p, unsigned k) -> Rational { return Rational(p == 2 ? 1 : k + 1); });
}

ArithFn pillai() {
  return ArithFn(
      "P",
      [](std::uint64_t n) -> Rational {
        Integer sum = 0;
        for (std::uint64_t k = 1; k <= n; ++k) sum += to_integer(gcd(k, n));
        return Rational(sum);
      },
      true,
      [](std::uint64_t p, unsigned k) -> Rational {
        return Rational(k + 1) * pow_rational(p, k) - Rational(k) * pow_rational(p, k - 1);
      });
}

}  // namespace fn

ArithFn dirichlet(const ArithFn& f, const ArithFn& g) {
  return ArithFn("(" + f.name() + "*" + g.name() + ")",
                 [f, g](std::uint64_t m) -> Rational {
                   Rational sum = 0;
                   for (std::uint64_t d : divisors(m)) sum += f(d) * g(m / d);
                   return sum;
                 },
                 f.multiplicative() && g.multiplicative());
}

ArithFn a_convolve(std::uint64_t a, const ArithFn& f, const ArithFn& g) {
  return ArithFn("(" + f.name() + "*_" + std::to_string(a) + g.name() + ")",
                 [a, f, g](std::uint64_t m) -> Rational {
                   Rational sum = 0;
                   for (std::uint64_t d : divisors(gcd(a, m))) sum += f(d) * g(m / d);
                   return sum;
                 },
                 f.multiplicative() && g.multiplicative());
}

ArithFn mask(std::uint64_t a, const ArithFn& f) {
  return ArithFn("[.|" + std::to_string(a) + "]" + f.name(),
                 [a, f](std::uint64_t k) -> Rational { return a % k == 0 ? f(k) : Rational(0); },
                 f.multiplicative());
}

ArithFn kluyver_extend(std::uint64_t a, const ArithFn& f) {
  return a_convolve(a, fn::id(), f).renamed(f.name() + "_" + std::to_string(a));
}

ArithFn pointwise_product(const ArithFn& f, const ArithFn& g) {
  return ArithFn(f.name() + "." + g.name(), [f, g](std::uint64_t n) -> Rational { return f(n) * g(n); },
                 f.multiplicative() && g.multiplicative());
}

ArithFn scaled(const Rational& c, const ArithFn& f) {
  return ArithFn(to_string(c) + "." + f.name(), [c, f](std::uint64_t n) -> Rational { return c * f(n); });
}

ArithFn divided_by_id(const ArithFn& f) {
  return ArithFn(f.name() + "/id",
                 [f](std::uint64_t n) -> Rational { return f(n) / Rational(to_integer(n)); },
                 f.multiplicative());
}

}  // namespace gcdft
