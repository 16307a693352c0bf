#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"
#include "repbasis/repfn.hpp"

namespace repbasis {

/// A value in N_0 ∪ {∞}.
class Multiplicity {
 public:
  constexpr Multiplicity() = default;
  constexpr Multiplicity(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  static constexpr Multiplicity infinity() {
    Multiplicity m;
    m.infinite_ = true;
    return m;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; zero for infinity.
  constexpr std::uint64_t value() const noexcept { return infinite_ ? 0 : value_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  /// True when a count of `n` is still allowed.
  bool admits(const Int& n) const { return infinite_ || n <= value_; }

  friend constexpr bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

std::string to_string(const Multiplicity& m);

/// A target representation function f: Z -> N_0 ∪ {∞} given by a default
/// value and finitely many overrides. Its zero set must be finite, so the
/// default may not be zero.
class TargetFn {
 public:
  explicit TargetFn(Multiplicity default_value, std::map<Int, Multiplicity> overrides = {});

  Multiplicity operator()(const Int& n) const;
  const Multiplicity& default_value() const noexcept { return default_; }
  const std::map<Int, Multiplicity>& overrides() const noexcept { return overrides_; }
  /// f^{-1}(0).
  const FiniteIntSet& zero_set() const noexcept { return zeros_; }

 private:
  Multiplicity default_;
  std::map<Int, Multiplicity> overrides_;
  FiniteIntSet zeros_;
};

/// The first k targets u_1..u_k.
///
/// Sweep s visits the first s integers of 0, -1, 1, -2, 2, ... and emits each
/// one whose emitted count is still below f(n). Every n is therefore emitted
/// exactly f(n) times in the limit, and n with f(n) = ∞ once per sweep.
std::vector<Int> schedule_targets(const TargetFn& f, std::size_t k);

// ---------------------------------------------------------------------------
// Unique representation basis for Z

/// Sparsity bound phi(x), assumed nondecreasing in x.
struct SparsityBound {
  std::string name;
  std::function<Int(const Int&)> phi;

  /// phi(x) = ceil(log2 x) + 4.
  static SparsityBound log2_plus4();
  /// phi(x) = floor(x^(p/q)).
  static SparsityBound power(std::uint64_t p, std::uint64_t q);
  /// Parses "log" or "poly:θ" with θ a positive decimal such as 0.25.
  static SparsityBound parse(const std::string& text);
};

struct UrbStepRecord {
  std::size_t k;  // index of the set the step started from
  Int d;
  Int b;
  Int c;
  bool positive_branch;  // adjoined {b + 3c, -3c} rather than {-(b + 3c), 3c}
};

struct UrbState {
  std::size_t k = 1;
  FiniteIntSet set{0, 1};
  Int d = 1;  // max |a| over set
  std::vector<UrbStepRecord> trace;

  /// The initial state A_1 = {0, 1}.
  static UrbState initial() { return {}; }
};

struct UrbOptions {
  std::optional<SparsityBound> sparsity;
  /// Maximum number of bits tried when searching for an admissible c_k.
  unsigned search_bits = 4096;
};

/// Chooses c_k: d_k without a sparsity bound, otherwise the least c >= d_k
/// with phi(c) >= 2k + 2 (found by doubling then bisection).
Int urb_spread(const UrbState& state, const UrbOptions& options);

/// One extension A_k -> A_{k+1}. The proof's four-part decomposition of
/// 2A_{k+1} is checked to be disjoint, and r_{A_{k+1},2} <= 1 is checked
/// through repfn. Any failure is an InternalError.
UrbState urb_step(const UrbState& state, const UrbOptions& options = {});

/// Iterates from A_1 until the state index equals `steps`. With a sparsity
/// bound, every checkpoint returned by sparsity_checkpoints must satisfy
/// A(-x, x) <= phi(x); otherwise InternalError.
UrbState urb_build(std::size_t steps, const UrbOptions& options = {});

struct SparsityCheckpoint {
  Int x;
  Int count;
  Int bound;
};

/// A(-x, x) and phi(x) at x = c_1 and at every |a| in [c_1, d_k]. Since the
/// count only jumps at those points and phi is nondecreasing, these decide
/// A(-x, x) <= phi(x) on all of [c_1, d_k].
std::vector<SparsityCheckpoint> sparsity_checkpoints(const UrbState& state, const SparsityBound& bound);

/// Largest R such that every |n| <= R has a representation in 2A; -1 if
/// 0 is not represented.
Int represented_radius(const FiniteIntSet& sumset);

// ---------------------------------------------------------------------------
// Bases with a prescribed representation function

struct FundRepStepRecord {
  std::size_t k;
  Int u;
  Int d;
  Int c;
  FiniteIntSet added;  // D_{c,u}
};

struct FundRepState {
  unsigned h = 2;
  std::size_t k = 0;
  FiniteIntSet set;
  std::vector<Int> schedule;  // u_1..u_k
  // Position of the target sweep: sweep s visits the first s integers of 0, -1, 1, -2, 2, ...
  std::size_t sweep = 1;
  std::size_t slot = 0;
  std::vector<FundRepStepRecord> trace;
  RepSupport counts;  // r_{A_k,h} over its full support

  static FundRepState initial(unsigned h);
  /// A_j for j <= k, rebuilt from the trace.
  FiniteIntSet prefix(std::size_t j) const;
};

/// Adjoins D_{c_k,u_k} with u_k = next target, d_k the least positive bound on
/// f^{-1}(0) ∪ 1A_{k-1} ∪ ... ∪ hA_{k-1}, and
///   c_1 = 2h(d_1 + |u_1|) + 1,   c_k = 2h(2d_k + |u_k|) + 1  (k >= 2).
/// Checks generalized Sidon of order h-1, both target conditions, the empty
/// intersection with f^{-1}(0) and the three-case count update.
FundRepState fundrep_step(const FundRepState& state, const TargetFn& f, const Int& target);

/// Next target from the sweep order, skipping every n with r_{A_{k-1},h}(n)
/// already at f(n). Sums that arrived as fresh sums in earlier steps count
/// toward f, so the schedule adapts to the set built so far.
Int next_target(const FundRepState& state, const TargetFn& f);
FundRepState fundrep_step(const FundRepState& state, const TargetFn& f);

FundRepState fundrep_build(const TargetFn& f, unsigned h, std::size_t steps);

/// Re-checks conditions r <= f and r(u_i) >= #{i' <= k : u_i' = u_i} for the
/// given set and schedule against the supplied counts. Returns a description
/// of the first violation.
std::optional<std::string> check_target_conditions(const RepSupport& counts, const TargetFn& f,
                                                   const std::vector<Int>& schedule);

}  // namespace repbasis
