#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gcdft/arith_fn.hpp"
#include "gcdft/number.hpp"

namespace gcdft {

enum class Param { kN, kM, kA, kB };

char param_name(Param p);

// One grid axis. Contiguous axes are truncated or extended by a bound;
// explicit value lists are only filtered by it.
struct Axis {
  Param param;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> explicit_values;

  std::vector<std::int64_t> values(std::optional<std::int64_t> bound) const;
};

struct ParamBounds {
  std::optional<std::int64_t> n_max{}, m_max{}, a_max{}, b_max{};

  std::optional<std::int64_t> of(Param p) const;
};

// A named choice of the arithmetic functions an identity is stated for.
struct Variant {
  std::string name;
  std::vector<ArithFn> fns;
};

struct GridPoint {
  std::int64_t n = 0, m = 0, a = 0, b = 0;
  std::size_t variant = 0;
  std::span<const ArithFn> fns;

  std::int64_t get(Param p) const;
};

// Per-verification cache. Not thread-safe; each verify call owns one.
class EvalContext {
 public:
  class Series {
   public:
    explicit Series(ArithFn f) : f_(std::move(f)) {}
    const Rational& operator()(std::uint64_t n);
    // f(1) + ... + f(n); 0 for n = 0.
    const Rational& prefix(std::uint64_t n);

   private:
    ArithFn f_;
    std::vector<std::optional<Rational>> values_;
    std::vector<Rational> prefix_{Rational(0)};
  };

  Series& series(const std::string& key, std::int64_t label1, std::int64_t label2,
                 const std::function<ArithFn()>& make);

  // An ArithFn reading through series(...). Valid while this context lives.
  ArithFn cached(const std::string& key, std::int64_t label1, std::int64_t label2,
                 const std::function<ArithFn()>& make);

 private:
  std::map<std::tuple<std::string, std::int64_t, std::int64_t>, std::unique_ptr<Series>> series_;
};

using Side = std::function<Rational(const GridPoint&, EvalContext&)>;

struct IdentityCheck {
  std::string id;
  std::string statement;
  std::string source;  // who the identity or its classical base case is due to
  std::vector<Axis> axes;
  std::vector<Variant> variants{};                 // empty: one unnamed variant
  std::function<bool(const GridPoint&)> domain{};  // empty: the whole box
  Side lhs{};
  Side rhs{};
  // Deliberately corrupted right side used for mutation testing. When
  // absent, mutated() uses rhs + 1.
  std::string mutant_note{};
  Side mutant_rhs{};
};

struct Failure {
  std::string assignment;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  std::uint64_t points_checked = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool passed() const { return failures.empty(); }
  // Nothing was evaluated, so the pass is vacuous.
  bool skipped() const { return points_checked == 0; }
};

inline constexpr std::uint64_t kMaxGridPoints = 1'000'000;

const std::vector<IdentityCheck>& registry();

// Throws std::invalid_argument for unknown ids.
const IdentityCheck& lookup(std::string_view id);

// Box size including variants (before domain filtering).
std::uint64_t grid_size(const IdentityCheck& check, const ParamBounds& bounds);

std::pair<Rational, Rational> evaluate(const IdentityCheck& check, const GridPoint& point);

// Exact sweep. Throws std::out_of_range if the box exceeds kMaxGridPoints.
IdentityReport verify(const IdentityCheck& check, const ParamBounds& bounds = {});
IdentityReport verify(std::string_view id, const ParamBounds& bounds = {});

// Runs the checks concurrently; reports come back in input order.
std::vector<IdentityReport> verify_all(const std::vector<IdentityCheck>& checks,
                                       const ParamBounds& bounds = {});
std::vector<IdentityReport> verify_all(const ParamBounds& bounds = {});

IdentityCheck mutated(const IdentityCheck& check);

}  // namespace gcdft
