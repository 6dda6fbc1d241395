#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "gcdft/core_arith.hpp"
#include "gcdft/number.hpp"

namespace gcdft {

// An arithmetic function: a total map from positive integers to exact
// rationals. Values are immutable; copies share the evaluator.
//
// The multiplicative flag is metadata. Evaluation never takes the
// prime-power shortcut unless eval_by_prime_powers() is called explicitly.
class ArithFn {
 public:
  using Eval = std::function<Rational(std::uint64_t)>;
  using RationalRule = std::function<Rational(std::uint64_t prime, unsigned exponent)>;

  ArithFn(std::string name, Eval eval, bool multiplicative = false, RationalRule rule = {});

  Rational operator()(std::uint64_t n) const;

  const std::string& name() const { return impl_->name; }
  bool multiplicative() const { return impl_->multiplicative; }
  bool has_prime_power_rule() const { return static_cast<bool>(impl_->rule); }
  const RationalRule& prime_power_rule() const { return impl_->rule; }

  // Product of the prime-power rule over the factorization of n.
  // Throws std::logic_error when no rule was supplied.
  Rational eval_by_prime_powers(std::uint64_t n) const;

  ArithFn renamed(std::string name) const;

 private:
  struct Impl {
    std::string name;
    Eval eval;
    bool multiplicative;
    RationalRule rule;
  };
  std::shared_ptr<const Impl> impl_;
};

// Wraps f with a thread-safe per-argument cache. Observable behavior is
// identical to f.
ArithFn memoized(const ArithFn& f);

namespace fn {

ArithFn id();                  // id(n) = n
ArithFn unit();                // u(n) = 1
ArithFn identity_element();    // I(n) = [n = 1]
ArithFn power(unsigned k);     // id[k](n) = n^k
ArithFn reciprocal_id();       // 1/id
ArithFn mobius();
ArithFn totient();
ArithFn tau();
ArithFn sigma(unsigned k = 1);
ArithFn theta();
ArithFn alpha();
// Sum of gcd(k, n) over k = 1..n, evaluated literally.
ArithFn pillai();

}  // namespace fn

// (f * g)(m) = sum over d | m of f(d) g(m/d).
ArithFn dirichlet(const ArithFn& f, const ArithFn& g);

// (f *_a g)(m) = sum over d | gcd(a, m) of f(d) g(m/d). a = 0 gives the
// Dirichlet product since gcd(0, m) = m.
ArithFn a_convolve(std::uint64_t a, const ArithFn& f, const ArithFn& g);

// k -> [k | a] f(k); every k divides 0.
ArithFn mask(std::uint64_t a, const ArithFn& f);

// f_a = id *_a f.
ArithFn kluyver_extend(std::uint64_t a, const ArithFn& f);

ArithFn pointwise_product(const ArithFn& f, const ArithFn& g);
ArithFn scaled(const Rational& c, const ArithFn& f);
// f / id
ArithFn divided_by_id(const ArithFn& f);

}  // namespace gcdft
