#include "gcdft/identities.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "gcdft/core_arith.hpp"
#include "gcdft/gcd_dft.hpp"

namespace gcdft {

char param_name(Param p) {
  switch (p) {
    case Param::kN: return 'n';
    case Param::kM: return 'm';
    case Param::kA: return 'a';
    case Param::kB: return 'b';
  }
  return '?';
}

std::vector<std::int64_t> Axis::values(std::optional<std::int64_t> bound) const {
  std::vector<std::int64_t> out;
  if (!explicit_values.empty()) {
    for (std::int64_t v : explicit_values) {
      if (!bound || v <= *bound) out.push_back(v);
    }
    return out;
  }
  const std::int64_t top = bound ? *bound : hi;
  for (std::int64_t v = lo; v <= top; ++v) out.push_back(v);
  return out;
}

std::optional<std::int64_t> ParamBounds::of(Param p) const {
  switch (p) {
    case Param::kN: return n_max;
    case Param::kM: return m_max;
    case Param::kA: return a_max;
    case Param::kB: return b_max;
  }
  return std::nullopt;
}

std::int64_t GridPoint::get(Param p) const {
  switch (p) {
    case Param::kN: return n;
    case Param::kM: return m;
    case Param::kA: return a;
    case Param::kB: return b;
  }
  return 0;
}

const Rational& EvalContext::Series::operator()(std::uint64_t n) {
  if (n >= values_.size()) values_.resize(n + 1);
  if (!values_[n]) values_[n] = f_(n);
  return *values_[n];
}

const Rational& EvalContext::Series::prefix(std::uint64_t n) {
  while (prefix_.size() <= n) {
    const std::uint64_t k = prefix_.size();
    prefix_.push_back(prefix_.back() + (*this)(k));
  }
  return prefix_[n];
}

EvalContext::Series& EvalContext::series(const std::string& key, std::int64_t label1,
                                         std::int64_t label2,
                                         const std::function<ArithFn()>& make) {
  auto& slot = series_[{key, label1, label2}];
  if (!slot) slot = std::make_unique<Series>(make());
  return *slot;
}

ArithFn EvalContext::cached(const std::string& key, std::int64_t label1, std::int64_t label2,
                            const std::function<ArithFn()>& make) {
  Series* s = &series(key, label1, label2, make);
  return ArithFn(key, [s](std::uint64_t n) { return (*s)(n); });
}

namespace {

using u64 = std::uint64_t;

u64 U(std::int64_t v) { return static_cast<u64>(v); }
Rational Q(std::int64_t v) { return Rational(to_integer(v)); }
Rational Q(const Integer& v) { return Rational(v); }

template <typename F>
Rational sum_over_divisors(u64 n, F&& f) {
  Rational s = 0;
  for (u64 d : divisors(n)) s += f(d);
  return s;
}

template <typename F>
Rational sum_range(u64 lo, u64 hi, F&& f) {
  Rational s = 0;
  for (u64 k = lo; k <= hi; ++k) s += f(k);
  return s;
}

Rational binom2(u64 x) { return Q(to_integer(x) * to_integer(x - 1) / 2); }

// Shared named functions. Each lives in the caller's context, keyed by its
// label, so repeated grid points reuse earlier values.
EvalContext::Series& phi_a_series(EvalContext& ctx, std::int64_t a) {
  return ctx.series("phi_a", a, 0, [a] { return kluyver_extend(U(a), fn::totient()); });
}

ArithFn pillai_fn(EvalContext& ctx) {
  return ctx.cached("P", 0, 0, [] { return fn::pillai(); });
}

EvalContext::Series& pillai_a_series(EvalContext& ctx, std::int64_t a) {
  ArithFn p = pillai_fn(ctx);
  return ctx.series("P_a", a, 0, [a, p] { return kluyver_extend(U(a), p); });
}

// c_k(a) through the Holder route, independent of the Kluyver sums used to
// build phi_a.
EvalContext::Series& ramanujan_series(EvalContext& ctx, std::int64_t a) {
  return ctx.series("c_a", a, 0, [a] {
    return ArithFn("c(" + std::to_string(a) + ")", [a](u64 k) -> Rational {
      return Q(ramanujan(k, U(a), RamanujanMethod::kHolder));
    });
  });
}

std::vector<Variant> single_fn_variants(std::initializer_list<ArithFn> fns) {
  std::vector<Variant> out;
  for (const ArithFn& f : fns) out.push_back({f.name(), {f}});
  return out;
}

std::vector<Variant> pair_variants(const std::vector<ArithFn>& pool) {
  std::vector<Variant> out;
  for (const auto& f : pool) {
    for (const auto& g : pool) out.push_back({f.name() + "," + g.name(), {f, g}});
  }
  return out;
}

std::vector<Variant> triple_variants(const std::vector<ArithFn>& pool) {
  std::vector<Variant> out;
  for (const auto& f : pool) {
    for (const auto& g : pool) {
      for (const auto& h : pool) out.push_back({f.name() + "," + g.name() + "," + h.name(), {f, g, h}});
    }
  }
  return out;
}

Axis range(Param p, std::int64_t lo, std::int64_t hi) { return Axis{p, lo, hi, {}}; }
Axis list(Param p, std::vector<std::int64_t> values) { return Axis{p, 0, 0, std::move(values)}; }

constexpr std::int64_t kLinear = 200;
constexpr std::int64_t kDouble = 60;
constexpr std::int64_t kLabel = 50;

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> r;
  const ArithFn id = fn::id(), u = fn::unit(), mu = fn::mobius(), phi = fn::totient(),
                tau = fn::tau(), sigma = fn::sigma(1), theta = fn::theta();

  // gcd sums

  r.push_back({
      .id = "cesaro-1885",
      .statement = "sum_{k=1}^m h(gcd(k,m)) = (h * phi)(m)",
      .source = "Cesaro 1885",
      .axes = {range(Param::kM, 1, kLinear)},
      .variants = single_fn_variants({u, id, tau, phi, mu, sigma, fn::reciprocal_id()}),
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const ArithFn& h = p.fns[0];
        return sum_range(1, U(p.m), [&](u64 k) -> Rational { return h(gcd(k, U(p.m))); });
      },
      .rhs = [phi](const GridPoint& p, EvalContext&) -> Rational {
        return dirichlet(p.fns[0], phi)(U(p.m));
      },
      .mutant_note = "phi replaced by mu on the right",
      .mutant_rhs = [mu](const GridPoint& p, EvalContext&) -> Rational {
        return dirichlet(p.fns[0], mu)(U(p.m));
      },
  });

  r.push_back({
      .id = "gen-cesaro",
      .statement = "sum_{k=1}^m h_a(gcd(k,m)) = (h * phi_a)(m)",
      .source = "Cesaro 1885, Kluyver-extended",
      .axes = {range(Param::kM, 1, kDouble), range(Param::kA, 0, kLabel)},
      .variants = single_fn_variants({u, id, tau}),
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& h_a = ctx.series("h_a", static_cast<std::int64_t>(p.variant), p.a,
                               [&] { return kluyver_extend(U(p.a), p.fns[0]); });
        return sum_range(1, U(p.m), [&](u64 k) -> Rational { return h_a(gcd(k, U(p.m))); });
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        const ArithFn& h = p.fns[0];
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational { return h(d) * phi_a(U(p.m) / d); });
      },
  });

  r.push_back({
      .id = "gcd-coeffs",
      .statement = "h(gcd(n,m)) = ((h * mu) *_n u)(m) for 1 <= n <= m",
      .source = "Fourier coefficients of a-convolutions",
      .axes = {range(Param::kM, 1, kDouble), range(Param::kN, 1, kDouble)},
      .variants = single_fn_variants({id, u, tau, phi, mu}),
      .domain = [](const GridPoint& p) { return p.n <= p.m; },
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational { return p.fns[0](gcd(U(p.n), U(p.m))); },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return gcd_fn_coeffs(p.fns[0], U(p.n), U(p.m));
      },
  });

  // partial sums of f_0 / id

  r.push_back({
      .id = "partial-quot-base",
      .statement = "sum_{k<=n} f_0(k)/k = sum_{k<=n} (f(k)/k) floor(n/k)",
      .source = "partial sums of f_0/id",
      .axes = {range(Param::kN, 1, kLinear)},
      .variants = single_fn_variants({mu, phi, u, tau}),
      .lhs = [id](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& q = ctx.series("f0/id", static_cast<std::int64_t>(p.variant), 0,
                             [&] { return divided_by_id(dirichlet(id, p.fns[0])); });
        return q.prefix(U(p.n));
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return p.fns[0](k) / Q(k) * Q(p.n / k); });
      },
  });

  r.push_back({
      .id = "partial-quot-aconv",
      .statement = "sum_{k<=n} (f *_a g_0)(k)/k = sum_{k<=n} ((f *_a g)(k)/k) floor(n/k), f = id",
      .source = "partial sums of f_0/id, a-convolution corollary",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .variants = single_fn_variants({mu, phi, u}),
      .lhs = [id](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& q = ctx.series("f*a g0/id", static_cast<std::int64_t>(p.variant), p.a, [&] {
          return divided_by_id(a_convolve(U(p.a), id, dirichlet(p.fns[0], id)));
        });
        return q.prefix(U(p.n));
      },
      .rhs = [id](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& fg = ctx.series("f*a g", static_cast<std::int64_t>(p.variant), p.a,
                              [&] { return a_convolve(U(p.a), id, p.fns[0]); });
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return fg(k) / Q(k) * Q(p.n / k); });
      },
  });

  r.push_back({
      .id = "totient-partial-quot",
      .statement = "sum_{k<=n} phi(k)/k = sum_{k<=n} (mu(k)/k) floor(n/k)",
      .source = "classical totient identity",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [](u64 k) -> Rational { return Q(totient(k)) / Q(k); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return Q(mobius(k)) / Q(k) * Q(p.n / k); });
      },
  });

  r.push_back({
      .id = "g1",
      .statement = "sum_{k<=n} phi_a(k)/k = sum_{k<=n} (c_k(a)/k) floor(n/k)",
      .source = "generalised totient identity",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& q = ctx.series("phi_a/id", p.a, 0, [&] {
          return divided_by_id(kluyver_extend(U(p.a), fn::totient()));
        });
        return q.prefix(U(p.n));
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& c = ramanujan_series(ctx, p.a);
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return c(k) / Q(k) * Q(p.n / k); });
      },
  });

  r.push_back({
      .id = "g2",
      .statement = "sum_{k<=n} P_a(k)/k = sum_{k<=n} (phi_a(k)/k) floor(n/k)",
      .source = "generalised gcd-sum identity",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& pa = pillai_a_series(ctx, p.a);
        auto& q = ctx.series("P_a/id", p.a, 0, [&] {
          return ArithFn("P_a/id", [&pa](u64 k) -> Rational { return pa(k) / Q(k); });
        });
        return q.prefix(U(p.n));
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return phi_a(k) / Q(k) * Q(p.n / k); });
      },
  });

  r.push_back({
      .id = "g3",
      .statement = "sum_{k<=n} P(k)/k = sum_{k<=n} (phi(k)/k) floor(n/k)",
      .source = "totient and gcd-sum",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn pillai = pillai_fn(ctx);
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return pillai(k) / Q(k); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return Q(totient(k)) / Q(k) * Q(p.n / k); });
      },
  });

  // partial sums of f_0

  r.push_back({
      .id = "partial-sum-base",
      .statement = "sum_{k<=n} f_0(k) = (sum_{k<=n} f(k) floor(n/k)^2 + sum_{k<=n} (f*u)(k)) / 2",
      .source = "partial sums of f_0",
      .axes = {range(Param::kN, 1, kLinear)},
      .variants = single_fn_variants({mu, phi, u, tau, id}),
      .lhs = [id](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& f0 = ctx.series("f0", static_cast<std::int64_t>(p.variant), 0,
                              [&] { return dirichlet(id, p.fns[0]); });
        return f0.prefix(U(p.n));
      },
      .rhs = [u](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& fu = ctx.series("f*u", static_cast<std::int64_t>(p.variant), 0,
                              [&] { return dirichlet(p.fns[0], u); });
        const Rational squares = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          const u64 q = U(p.n) / k;
          return p.fns[0](k) * Q(q * q);
        });
        return (squares + fu.prefix(U(p.n))) / 2;
      },
  });

  r.push_back({
      .id = "totient-partial",
      .statement = "sum_{k<=n} phi(k) = (1 + sum_{k<=n} mu(k) floor(n/k)^2) / 2",
      .source = "classical totient identity",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [](u64 k) -> Rational { return Q(totient(k)); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const Rational s = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          const u64 q = U(p.n) / k;
          return Q(mobius(k)) * Q(q * q);
        });
        return (1 + s) / 2;
      },
  });

  r.push_back({
      .id = "g4",
      .statement = "sum_{k<=n} phi_a(k) = (sum_{k|a} k [k<=n] + sum_{k<=n} c_k(a) floor(n/k)^2) / 2",
      .source = "generalised totient identity",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational { return phi_a_series(ctx, p.a).prefix(U(p.n)); },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& c = ramanujan_series(ctx, p.a);
        const Rational divisor_part = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          return U(p.a) % k == 0 ? Q(k) : Rational(0);
        });
        const Rational squares = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          const u64 q = U(p.n) / k;
          return c(k) * Q(q * q);
        });
        return (divisor_part + squares) / 2;
      },
  });

  r.push_back({
      .id = "sigma-remark",
      .statement = "sum_{k|a} k [k<=n] = sigma(a) for n >= a",
      .source = "sum of divisors",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 1, kLabel)},
      .domain = [](const GridPoint& p) { return p.n >= p.a; },
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_over_divisors(U(p.a), [&](u64 k) -> Rational { return k <= U(p.n) ? Q(k) : Rational(0); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational { return Q(gcdft::sigma(U(p.a))); },
  });

  // Euler's identity and the gcd-sum partial sums

  r.push_back({
      .id = "euler-gen",
      .statement = "sum_{d|m} phi_a(d) = tau(gcd(a,m)) m",
      .source = "Euler: phi * u = id",
      .axes = {range(Param::kM, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational { return phi_a(d); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return Q(gcdft::tau(gcd(U(p.a), U(p.m))) * to_integer(p.m));
      },
      .mutant_note = "tau replaced by sigma on the right",
      .mutant_rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return Q(gcdft::sigma(gcd(U(p.a), U(p.m))) * to_integer(p.m));
      },
  });

  r.push_back({
      .id = "g5",
      .statement = "sum_{k<=n} P_a(k) = (sum_{k<=n} tau(gcd(a,k)) k + sum_{k<=n} phi_a(k) floor(n/k)^2) / 2",
      .source = "generalised gcd-sum identity",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational { return pillai_a_series(ctx, p.a).prefix(U(p.n)); },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        const Rational linear = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          return Q(gcdft::tau(gcd(U(p.a), k)) * to_integer(k));
        });
        const Rational squares = sum_range(1, U(p.n), [&](u64 k) -> Rational {
          const u64 q = U(p.n) / k;
          return phi_a(k) * Q(q * q);
        });
        return (linear + squares) / 2;
      },
  });

  // Cesaro's three identities and their generalisations

  r.push_back({
      .id = "cesaro-c1",
      .statement = "sum_{d|n} d phi(n/d) = P(n)",
      .source = "Cesaro",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return Q(d) * Q(totient(U(p.n) / d)); });
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational { return pillai_fn(ctx)(U(p.n)); },
  });

  r.push_back({
      .id = "cesaro-c2",
      .statement = "sum_{d|n} (d/n) phi(d) = sum_{j=1}^n 1/gcd(j,n)",
      .source = "Cesaro",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return Q(d) / Q(p.n) * Q(totient(d)); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 j) -> Rational { return Rational(1) / Q(gcd(j, U(p.n))); });
      },
  });

  r.push_back({
      .id = "cesaro-c3",
      .statement = "sum_{d|n} phi(d) phi(n/d) = sum_{j=1}^n phi(gcd(j,n))",
      .source = "Cesaro",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return Q(totient(d) * totient(U(p.n) / d)); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 j) -> Rational { return Q(totient(gcd(j, U(p.n)))); });
      },
  });

  r.push_back({
      .id = "p1",
      .statement = "sum_{d|n} d phi_a(n/d) = P_a(n)",
      .source = "Cesaro, Kluyver-extended",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return Q(d) * phi_a(U(p.n) / d); });
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational { return pillai_a_series(ctx, p.a)(U(p.n)); },
  });

  r.push_back({
      .id = "p2",
      .statement = "sum_{d|n} (d/n) phi_a(d) = sum_{j=1}^n sum_{d|gcd(a,n)} 1/gcd(j,n/d)",
      .source = "Cesaro, Kluyver-extended",
      .axes = {range(Param::kN, 1, kDouble), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return Q(d) / Q(p.n) * phi_a(d); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const u64 n = U(p.n);
        return sum_range(1, n, [&](u64 j) -> Rational {
          return sum_over_divisors(gcd(U(p.a), n),
                                   [&](u64 d) -> Rational { return Rational(1) / Q(gcd(j, n / d)); });
        });
      },
      .mutant_note = "inner j range truncated to 1..n/d",
      .mutant_rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const u64 n = U(p.n);
        return sum_over_divisors(gcd(U(p.a), n), [&](u64 d) -> Rational {
          return sum_range(1, n / d, [&](u64 j) -> Rational { return Rational(1) / Q(gcd(j, n / d)); });
        });
      },
  });

  r.push_back({
      .id = "p3",
      .statement = "sum_{d|n} phi_a(d) phi_b(n/d) = sum_{j=1}^n sum_{d|gcd(a,n)} phi_b(gcd(j,n/d))",
      .source = "Cesaro, Kluyver-extended in two labels",
      .axes = {range(Param::kN, 1, kDouble), range(Param::kA, 0, kLabel),
               range(Param::kB, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        auto& phi_b = phi_a_series(ctx, p.b);
        return sum_over_divisors(U(p.n), [&](u64 d) -> Rational { return phi_a(d) * phi_b(U(p.n) / d); });
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_b = phi_a_series(ctx, p.b);
        const u64 n = U(p.n);
        const auto outer = divisors(gcd(U(p.a), n));
        Rational s = 0;
        for (u64 j = 1; j <= n; ++j) {
          for (u64 d : outer) s += phi_b(gcd(j, n / d));
        }
        return s;
      },
  });

  // Liouville's three identities and their generalisations

  const ArithFn tau_of_square("tau(.^2)", [](u64 n) -> Rational { return Q(gcdft::tau(n * n)); }, true);

  r.push_back({
      .id = "liouville-l1",
      .statement = "sum_{d|m} phi(d) tau(m/d) = sigma(m)",
      .source = "Liouville",
      .axes = {range(Param::kM, 1, kLinear)},
      .lhs = [phi, tau](const GridPoint& p, EvalContext&) -> Rational { return dirichlet(phi, tau)(U(p.m)); },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational { return Q(gcdft::sigma(U(p.m))); },
  });

  r.push_back({
      .id = "liouville-l2",
      .statement = "sum_{d|m} phi(d) sigma[n+1](m/d) = m sigma[n](m)",
      .source = "Liouville",
      .axes = {range(Param::kM, 1, kLinear), list(Param::kN, {0, 1, 2, 3})},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const auto k = static_cast<unsigned>(p.n);
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational {
          return Q(totient(d) * gcdft::sigma(U(p.m) / d, k + 1));
        });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return Q(to_integer(p.m) * gcdft::sigma(U(p.m), static_cast<unsigned>(p.n)));
      },
  });

  r.push_back({
      .id = "liouville-l3",
      .statement = "sum_{d|m} phi(d) tau(m^2/d^2) = sum_{d|m} d theta(m/d)",
      .source = "Liouville",
      .axes = {range(Param::kM, 1, kLinear)},
      .lhs = [phi, tau_of_square](const GridPoint& p, EvalContext&) -> Rational {
        return dirichlet(phi, tau_of_square)(U(p.m));
      },
      .rhs = [id, theta](const GridPoint& p, EvalContext&) -> Rational { return dirichlet(id, theta)(U(p.m)); },
  });

  r.push_back({
      .id = "liouville-gcd",
      .statement = "sum_{k=1}^m tau(gcd(k,m)) = sigma(m)",
      .source = "Liouville combined with Cesaro",
      .axes = {range(Param::kM, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.m), [&](u64 k) -> Rational { return Q(gcdft::tau(gcd(k, U(p.m)))); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational { return Q(gcdft::sigma(U(p.m))); },
  });

  r.push_back({
      .id = "lg1",
      .statement = "sum_{d|m} phi_a(d) tau(m/d) = sigma_a(m)",
      .source = "Liouville, Kluyver-extended",
      .axes = {range(Param::kM, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational { return phi_a(d) * Q(gcdft::tau(U(p.m) / d)); });
      },
      .rhs = [sigma](const GridPoint& p, EvalContext&) -> Rational { return kluyver_extend(U(p.a), sigma)(U(p.m)); },
  });

  r.push_back({
      .id = "lg2",
      .statement = "sum_{d|m} phi_a(d) sigma[n+1](m/d) = m (u *_a sigma[n])(m)",
      .source = "Liouville, Kluyver-extended",
      .axes = {range(Param::kM, 1, kLinear), range(Param::kA, 0, kLabel), list(Param::kN, {0, 1, 2})},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        const auto k = static_cast<unsigned>(p.n);
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational {
          return phi_a(d) * Q(gcdft::sigma(U(p.m) / d, k + 1));
        });
      },
      .rhs = [u](const GridPoint& p, EvalContext&) -> Rational {
        return Q(p.m) * a_convolve(U(p.a), u, fn::sigma(static_cast<unsigned>(p.n)))(U(p.m));
      },
  });

  r.push_back({
      .id = "lg3",
      .statement = "sum_{d|m} phi_a(d) tau(m^2/d^2) = sum_{d|m} d tau(gcd(a,d)) theta(m/d)",
      .source = "Liouville, Kluyver-extended",
      .axes = {range(Param::kM, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational {
          const u64 q = U(p.m) / d;
          return phi_a(d) * Q(gcdft::tau(q * q));
        });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational {
          return Q(to_integer(d) * gcdft::tau(gcd(U(p.a), d)) * gcdft::theta(U(p.m) / d));
        });
      },
  });

  // Dirichlet's partial sums and the perfect square

  r.push_back({
      .id = "dirichlet-classic",
      .statement = "sum_{k<=n} floor(n/k) phi(k) = binomial(n+1, 2)",
      .source = "Dirichlet",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return Q(p.n / k) * Q(totient(k)); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational { return binom2(U(p.n) + 1); },
  });

  r.push_back({
      .id = "dirichlet-partial",
      .statement = "sum_{k<=n} floor(n/k) phi_a(k) = sum_{d|a} d binomial(floor(n/d)+1, 2)",
      .source = "Dirichlet, Kluyver-extended",
      .axes = {range(Param::kN, 1, kLinear), range(Param::kA, 0, kLabel)},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& phi_a = phi_a_series(ctx, p.a);
        return sum_range(1, U(p.n), [&](u64 k) -> Rational { return Q(p.n / k) * phi_a(k); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        // Divisors beyond n contribute binomial(1, 2) = 0; every d divides 0.
        return sum_range(1, U(p.n), [&](u64 d) -> Rational {
          return U(p.a) % d == 0 ? Q(d) * binom2(U(p.n) / d + 1) : Rational(0);
        });
      },
  });

  r.push_back({
      .id = "perfect-square",
      .statement = "sum_{a=1}^n phi_a(n) = n^2",
      .source = "phi(1) = 1, generalised",
      .axes = {range(Param::kN, 1, kLinear)},
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return sum_range(1, U(p.n), [&](u64 a) -> Rational { return Q(phi_a(a, U(p.n))); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational { return Q(p.n) * Q(p.n); },
  });

  // a-convolution algebra

  const std::vector<ArithFn> pool{id, u, mu, phi};
  const std::vector<std::int64_t> algebra_labels{0, 1, 2, 6, 12};

  r.push_back({
      .id = "interassoc",
      .statement = "((f *_a g) * h)(m) = (f *_a (g * h))(m)",
      .source = "inter-associativity of a-convolution",
      .axes = {range(Param::kM, 1, kLinear), list(Param::kA, algebra_labels)},
      .variants = triple_variants(pool),
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& fg = ctx.series("f*a g", static_cast<std::int64_t>(p.variant), p.a,
                              [&] { return a_convolve(U(p.a), p.fns[0], p.fns[1]); });
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational { return fg(d) * p.fns[2](U(p.m) / d); });
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn gh = ctx.cached("g*h", static_cast<std::int64_t>(p.variant), 0,
                                [&] { return dirichlet(p.fns[1], p.fns[2]); });
        return a_convolve(U(p.a), p.fns[0], gh)(U(p.m));
      },
  });

  r.push_back({
      .id = "kluyver-commute",
      .statement = "(f_a * g)(m) = (f * g)_a(m)",
      .source = "Kluyver extension commutes with Dirichlet convolution",
      .axes = {range(Param::kM, 1, kLinear), list(Param::kA, algebra_labels)},
      .variants = pair_variants(pool),
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn fa = ctx.cached("f_a", static_cast<std::int64_t>(p.variant), p.a,
                                [&] { return kluyver_extend(U(p.a), p.fns[0]); });
        return dirichlet(fa, p.fns[1])(U(p.m));
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn fg = ctx.cached("f*g", static_cast<std::int64_t>(p.variant), 0,
                                [&] { return dirichlet(p.fns[0], p.fns[1]); });
        return kluyver_extend(U(p.a), fg)(U(p.m));
      },
  });

  r.push_back({
      .id = "kluyver-commute-2",
      .statement = "(f * g_a)(m) = (f * g)_a(m)",
      .source = "Kluyver extension commutes with Dirichlet convolution",
      .axes = {range(Param::kM, 1, kLinear), list(Param::kA, algebra_labels)},
      .variants = pair_variants(pool),
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn ga = ctx.cached("g_a", static_cast<std::int64_t>(p.variant), p.a,
                                [&] { return kluyver_extend(U(p.a), p.fns[1]); });
        return dirichlet(p.fns[0], ga)(U(p.m));
      },
      .rhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        ArithFn fg = ctx.cached("f*g", static_cast<std::int64_t>(p.variant), 0,
                                [&] { return dirichlet(p.fns[0], p.fns[1]); });
        return kluyver_extend(U(p.a), fg)(U(p.m));
      },
  });

  // Convolutions with Fourier transforms. The left side takes the transform
  // as a rounded complex sum, the right side as an exact divisor sum.

  r.push_back({
      .id = "mt1",
      .statement = "(f * g^[a])(m) = (f * g)^[a](m)",
      .source = "Dirichlet convolution with a Fourier transform",
      .axes = {range(Param::kM, 1, 100), range(Param::kA, 0, 10)},
      .variants = {{"u,id", {u, id}}, {"phi,tau", {phi, tau}}, {"id,mu", {id, mu}}},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& g_hat = ctx.series("g^", static_cast<std::int64_t>(p.variant), p.a, [&] {
          const ArithFn g = p.fns[1];
          const u64 a = U(p.a);
          return ArithFn("g^", [g, a](u64 x) -> Rational { return Q(dft_gcd_direct(g, a, x).rounded); });
        });
        return sum_over_divisors(U(p.m), [&](u64 d) -> Rational { return p.fns[0](d) * g_hat(U(p.m) / d); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return dft_gcd_exact(dirichlet(p.fns[0], p.fns[1]), U(p.a), U(p.m));
      },
  });

  r.push_back({
      .id = "mt2",
      .statement = "(f *_a g^[b])(m) = (f *_a g)^[b](m)",
      .source = "a-convolution with a Fourier transform",
      .axes = {range(Param::kM, 1, kDouble), range(Param::kA, 0, 6), range(Param::kB, 0, 6)},
      .variants = {{"id,mu", {id, mu}}, {"u,phi", {u, phi}}},
      .lhs = [](const GridPoint& p, EvalContext& ctx) -> Rational {
        auto& g_hat = ctx.series("g^", static_cast<std::int64_t>(p.variant), p.b, [&] {
          const ArithFn g = p.fns[1];
          const u64 b = U(p.b);
          return ArithFn("g^", [g, b](u64 x) -> Rational { return Q(dft_gcd_direct(g, b, x).rounded); });
        });
        return sum_over_divisors(gcd(U(p.a), U(p.m)),
                                 [&](u64 d) -> Rational { return p.fns[0](d) * g_hat(U(p.m) / d); });
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return dft_gcd_exact(a_convolve(U(p.a), p.fns[0], p.fns[1]), U(p.b), U(p.m));
      },
  });

  r.push_back({
      .id = "pp-consistency",
      .statement = "phi_a(p^k) by the prime-power case split = sum_{d|gcd(a,p^k)} d phi(p^k/d)",
      .source = "value of phi_a at prime powers",
      .axes = {range(Param::kM, 1, kLinear), range(Param::kA, 0, kLabel)},
      .domain = [](const GridPoint& p) { return p.m > 1 && factorize(U(p.m)).size() == 1; },
      .lhs = [](const GridPoint& p, EvalContext&) -> Rational {
        const PrimePower pk = factorize(U(p.m)).front();
        return Q(phi_a_prime_power(pk.prime, pk.exponent, multiplicity(pk.prime, U(p.a))));
      },
      .rhs = [](const GridPoint& p, EvalContext&) -> Rational {
        return Q(phi_a(U(p.a), U(p.m), PhiMethod::kClosed));
      },
  });

  return r;
}

std::string describe(const IdentityCheck& check, const GridPoint& p) {
  std::string out;
  for (const Axis& axis : check.axes) {
    if (!out.empty()) out += ",";
    out += param_name(axis.param);
    out += "=" + std::to_string(p.get(axis.param));
  }
  if (!check.variants.empty()) out += ",fns=" + check.variants[p.variant].name;
  return out;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

const IdentityCheck& lookup(std::string_view id) {
  for (const auto& check : registry()) {
    if (check.id == id) return check;
  }
  throw std::invalid_argument("unknown identity: '" + std::string(id) + "'");
}

std::uint64_t grid_size(const IdentityCheck& check, const ParamBounds& bounds) {
  std::uint64_t size = std::max<std::size_t>(check.variants.size(), 1);
  for (const Axis& axis : check.axes) {
    const auto values = axis.values(bounds.of(axis.param));
    size *= values.size();
    if (size > kMaxGridPoints) return size;
  }
  return size;
}

std::pair<Rational, Rational> evaluate(const IdentityCheck& check, const GridPoint& point) {
  EvalContext ctx;
  GridPoint p = point;
  if (!check.variants.empty() && p.fns.empty()) p.fns = check.variants.at(p.variant).fns;
  return {check.lhs(p, ctx), check.rhs(p, ctx)};
}

IdentityReport verify(const IdentityCheck& check, const ParamBounds& bounds) {
  const std::uint64_t size = grid_size(check, bounds);
  if (size > kMaxGridPoints) {
    throw std::out_of_range("verify " + check.id + ": grid of " + std::to_string(size) +
                            " points exceeds the cap of " + std::to_string(kMaxGridPoints));
  }
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = check.id;

  std::vector<std::vector<std::int64_t>> axis_values;
  for (const Axis& axis : check.axes) axis_values.push_back(axis.values(bounds.of(axis.param)));
  const bool empty_box = std::any_of(axis_values.begin(), axis_values.end(),
                                     [](const auto& v) { return v.empty(); });

  EvalContext ctx;
  const std::size_t variant_count = std::max<std::size_t>(check.variants.size(), 1);
  std::vector<std::size_t> odometer(axis_values.size(), 0);
  while (!empty_box) {
    for (std::size_t v = 0; v < variant_count; ++v) {
      GridPoint p;
      p.variant = v;
      if (!check.variants.empty()) p.fns = check.variants[v].fns;
      for (std::size_t i = 0; i < axis_values.size(); ++i) {
        const std::int64_t value = axis_values[i][odometer[i]];
        switch (check.axes[i].param) {
          case Param::kN: p.n = value; break;
          case Param::kM: p.m = value; break;
          case Param::kA: p.a = value; break;
          case Param::kB: p.b = value; break;
        }
      }
      if (check.domain && !check.domain(p)) continue;
      ++report.points_checked;
      try {
        Rational lhs = check.lhs(p, ctx);
        Rational rhs = check.rhs(p, ctx);
        if (lhs != rhs) report.failures.push_back({describe(check, p), to_string(lhs), to_string(rhs)});
      } catch (const std::exception& e) {
        report.failures.push_back({describe(check, p), std::string("error: ") + e.what(), "-"});
      }
    }
    std::size_t i = 0;
    for (; i < odometer.size(); ++i) {
      if (++odometer[i] < axis_values[i].size()) break;
      odometer[i] = 0;
    }
    if (i == odometer.size()) break;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

IdentityReport verify(std::string_view id, const ParamBounds& bounds) {
  return verify(lookup(id), bounds);
}

std::vector<IdentityReport> verify_all(const std::vector<IdentityCheck>& checks,
                                       const ParamBounds& bounds) {
  // Surface cap violations before any work starts.
  for (const auto& check : checks) {
    if (grid_size(check, bounds) > kMaxGridPoints) {
      throw std::out_of_range("verify " + check.id + ": grid exceeds the cap of " +
                              std::to_string(kMaxGridPoints) + " points");
    }
  }
  std::vector<std::future<IdentityReport>> pending;
  pending.reserve(checks.size());
  for (const auto& check : checks) {
    pending.push_back(std::async(std::launch::async, [&check, &bounds] { return verify(check, bounds); }));
  }
  std::vector<IdentityReport> reports;
  reports.reserve(checks.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::vector<IdentityReport> verify_all(const ParamBounds& bounds) {
  return verify_all(registry(), bounds);
}

IdentityCheck mutated(const IdentityCheck& check) {
  IdentityCheck copy = check;
  if (check.mutant_rhs) {
    copy.rhs = check.mutant_rhs;
  } else {
    Side rhs = check.rhs;
    copy.rhs = [rhs](const GridPoint& p, EvalContext& ctx) -> Rational { return rhs(p, ctx) + 1; };
    copy.mutant_note = "right side shifted by 1";
  }
  return copy;
}

}  // namespace gcdft
