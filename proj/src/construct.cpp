#include "repbasis/construct.hpp"

#include <algorithm>
#include <sstream>

#include "repbasis/errors.hpp"
#include "repbasis/sidon.hpp"

namespace repbasis {

std::string to_string(const Multiplicity& m) {
  return m.is_infinite() ? std::string("inf") : std::to_string(m.value());
}

TargetFn::TargetFn(Multiplicity default_value, std::map<Int, Multiplicity> overrides)
    : default_(default_value), overrides_(std::move(overrides)) {
  if (default_.is_zero()) {
    throw ValidationError("target function default must be nonzero (its zero set must be finite)");
  }
  std::vector<Int> zeros;
  for (const auto& [n, value] : overrides_) {
    if (value.is_zero()) zeros.push_back(n);
  }
  zeros_ = FiniteIntSet::from_sorted(std::move(zeros));
}

Multiplicity TargetFn::operator()(const Int& n) const {
  auto it = overrides_.find(n);
  return it == overrides_.end() ? default_ : it->second;
}

namespace {

// 0, -1, 1, -2, 2, ...
Int nth_integer(std::size_t i) {
  if (i == 0) return 0;
  if (i % 2 == 1) return -Int((i + 1) / 2);
  return Int(i / 2);
}

}  // namespace

std::vector<Int> schedule_targets(const TargetFn& f, std::size_t k) {
  std::vector<Int> out;
  out.reserve(k);
  std::vector<std::uint64_t> emitted;
  for (std::size_t sweep = 1; out.size() < k; ++sweep) {
    emitted.resize(sweep, 0);
    for (std::size_t i = 0; i < sweep && out.size() < k; ++i) {
      const Int n = nth_integer(i);
      const Multiplicity limit = f(n);
      if (limit.is_infinite() || emitted[i] < limit.value()) {
        out.push_back(n);
        ++emitted[i];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SparsityBound SparsityBound::log2_plus4() {
  return {"log", [](const Int& x) -> Int { return x < 1 ? Int(4) : Int(ceil_log2(x) + 4); }};
}

SparsityBound SparsityBound::power(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw ValidationError("power bound needs a positive exponent");
  std::ostringstream name;
  name << "poly:" << p << "/" << q;
  return {name.str(), [p, q](const Int& x) -> Int {
            if (x < 1) return 0;
            return integer_root(boost::multiprecision::pow(x, static_cast<unsigned>(p)), static_cast<unsigned>(q));
          }};
}

SparsityBound SparsityBound::parse(const std::string& text) {
  if (text == "log") return log2_plus4();
  const std::string prefix = "poly:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string theta = text.substr(prefix.size());
    const auto dot = theta.find('.');
    std::string digits = theta;
    std::uint64_t q = 1;
    if (dot != std::string::npos) {
      digits = theta.substr(0, dot) + theta.substr(dot + 1);
      for (std::size_t i = dot + 1; i < theta.size(); ++i) q *= 10;
    }
    if (digits.empty() || digits.size() > 12 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ValidationError("bad sparsity exponent '" + theta + "'");
    }
    const std::uint64_t p = std::stoull(digits);
    if (p == 0) throw ValidationError("sparsity exponent must be positive");
    SparsityBound bound = power(p, q);
    bound.name = text;
    return bound;
  }
  throw ValidationError("unknown sparsity bound '" + text + "' (expected log or poly:θ)");
}

Int urb_spread(const UrbState& state, const UrbOptions& options) {
  if (!options.sparsity) return state.d;
  const auto& phi = options.sparsity->phi;
  const Int target = 2 * Int(state.k) + 2;
  if (phi(state.d) >= target) return state.d;
  // phi(lo) < target <= phi(hi)
  Int lo = state.d;
  Int hi = 2 * state.d;
  while (phi(hi) < target) {
    lo = hi;
    hi *= 2;
    if (boost::multiprecision::msb(hi) > options.search_bits) {
      throw SparsityError("no c >= " + state.d.str() + " with phi(c) >= " + target.str() + " within " +
                          std::to_string(options.search_bits) + " bits");
    }
  }
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (phi(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

namespace {

FiniteIntSet translate(const FiniteIntSet& set, const Int& x) { return shift(set, x); }

void require(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace

UrbState urb_step(const UrbState& state, const UrbOptions& options) {
  const FiniteIntSet& a = state.set;
  require(a.size() == 2 * state.k, "|A_k| != 2k");
  const RepSupport before = repfn::support(a, 2, RepKind::unordered);
  const FiniteIntSet two_a = before.keys();

  Int b = 1;
  while (two_a.contains(b) && two_a.contains(-b)) {
    ++b;
    require(b < 2 * state.d, "no unrepresented b below 2 d_k");
  }
  const Int c = urb_spread(state, options);
  require(c >= state.d, "c_k < d_k");

  const bool positive = !two_a.contains(b);
  const Int big = positive ? Int(b + 3 * c) : Int(-(b + 3 * c));
  const Int small = positive ? Int(-3 * c) : Int(3 * c);
  require(!a.contains(big) && !a.contains(small) && big != small, "new elements collide with A_k");

  // 2A_{k+1} = 2A_k ∪ (A_k + big) ∪ (A_k + small) ∪ {big + small, 2 big, 2 small}
  const FiniteIntSet parts[] = {two_a, translate(a, big), translate(a, small),
                                FiniteIntSet{big + small, 2 * big, 2 * small}};
  require(parts[3].size() == 3, "gadget sums not distinct");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      require(!parts[i].intersects(parts[j]),
              "parts " + std::to_string(i) + " and " + std::to_string(j) + " of 2A_{k+1} overlap");
    }
  }

  UrbState next;
  next.k = state.k + 1;
  next.set = a.unite(FiniteIntSet{big, small});
  next.d = next.set.max_abs();
  next.trace = state.trace;
  next.trace.push_back({state.k, state.d, b, c, positive});

  require(next.set.size() == 2 * next.k, "|A_{k+1}| != 2(k+1)");
  require(!(next.set.contains(next.d) && next.set.contains(-next.d)), "A_{k+1} contains both d and -d");
  const RepSupport after = repfn::support(next.set, 2, RepKind::unordered);
  require(after.max_count() <= 1, "r_{A_{k+1},2} exceeds 1");
  FiniteIntSet expected;
  for (const FiniteIntSet& p : parts) expected = expected.unite(p);
  require(after.keys() == expected, "2A_{k+1} differs from the union of its four parts");
  require(after.keys().contains(positive ? b : Int(-b)), "b_k not represented after the step");
  return next;
}

std::vector<SparsityCheckpoint> sparsity_checkpoints(const UrbState& state, const SparsityBound& bound) {
  std::vector<SparsityCheckpoint> out;
  if (state.trace.empty()) return out;
  const Int& c1 = state.trace.front().c;
  std::vector<Int> xs{c1};
  for (const Int& a : state.set) {
    const Int x = abs(a);
    if (x >= c1 && x <= state.d) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const Int& x : xs) out.push_back({x, count(state.set, -x, x), bound.phi(x)});
  return out;
}

UrbState urb_build(std::size_t steps, const UrbOptions& options) {
  if (steps < 1) throw ValidationError("urb construction needs at least one step");
  UrbState state = UrbState::initial();
  while (state.k < steps) state = urb_step(state, options);
  if (options.sparsity) {
    for (const SparsityCheckpoint& cp : sparsity_checkpoints(state, *options.sparsity)) {
      require(cp.count <= cp.bound, "A(-x, x) = " + cp.count.str() + " exceeds phi(x) = " + cp.bound.str() +
                                        " at x = " + cp.x.str());
    }
  }
  return state;
}

Int represented_radius(const FiniteIntSet& sumset) {
  if (!sumset.contains(0)) return -1;
  Int r = 0;
  while (sumset.contains(r + 1) && sumset.contains(-(r + 1))) ++r;
  return r;
}

// ---------------------------------------------------------------------------

FundRepState FundRepState::initial(unsigned h) {
  if (h < 2) throw ValidationError("prescribed-function construction needs h >= 2");
  FundRepState s;
  s.h = h;
  return s;
}

FiniteIntSet FundRepState::prefix(std::size_t j) const {
  if (j > trace.size()) throw ValidationError("prefix index beyond the construction");
  FiniteIntSet out;
  for (std::size_t i = 0; i < j; ++i) out = out.unite(trace[i].added);
  return out;
}

std::optional<std::string> check_target_conditions(const RepSupport& counts, const TargetFn& f,
                                                   const std::vector<Int>& schedule) {
  for (const RepEntry& e : counts.entries()) {
    if (!f(e.n).admits(e.count)) {
      return "r(" + e.n.str() + ") = " + e.count.str() + " exceeds f = " + to_string(f(e.n));
    }
  }
  std::vector<Int> sorted = schedule;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const Int have = counts.at(sorted[i]);
    if (have < Int(j - i)) {
      return "r(" + sorted[i].str() + ") = " + have.str() + " but it was scheduled " + std::to_string(j - i) +
             " times";
    }
    i = j;
  }
  return std::nullopt;
}

FundRepState fundrep_step(const FundRepState& state, const TargetFn& f, const Int& target) {
  const unsigned h = state.h;
  const std::size_t k = state.k + 1;

  Int d = std::max(Int(1), f.zero_set().max_abs());
  if (!state.set.empty()) d = std::max(d, sums_up_to(state.set, h).max_abs());
  const Int hh = h;
  const Int c = k == 1 ? Int(2 * hh * (d + abs(target)) + 1) : Int(2 * hh * (2 * d + abs(target)) + 1);
  const FiniteIntSet added = gadget(GadgetParams(h, c, target));
  require(!added.intersects(state.set), "gadget meets A_{k-1}");

  FundRepState next;
  next.h = h;
  next.k = k;
  next.set = state.set.unite(added);
  next.sweep = state.sweep;
  next.slot = state.slot;
  next.schedule = state.schedule;
  next.schedule.push_back(target);
  next.trace = state.trace;
  next.trace.push_back({k, target, d, c, added});
  next.counts = repfn::support(next.set, h, RepKind::unordered);

  require(is_generalized_sidon(next.set, h - 1),
          "A_" + std::to_string(k) + " is not a generalized Sidon set of order " + std::to_string(h - 1));

  // r_{A_k} = r_{A_{k-1}} off u_k and the fresh sums, +1 at u_k, 1 on fresh sums.
  for (const RepEntry& e : next.counts.entries()) {
    const Int old = state.counts.at(e.n);
    const Int want = e.n == target ? Int(old + 1) : (old > 0 ? old : Int(1));
    require(e.count == want, "count update law fails at n = " + e.n.str());
  }
  for (const RepEntry& e : state.counts.entries()) {
    require(next.counts.at(e.n) >= e.count, "count decreased at n = " + e.n.str());
  }
  for (const Int& z : f.zero_set()) {
    require(next.counts.at(z) == 0, "hA_k meets f^{-1}(0) at " + z.str());
  }
  if (auto violation = check_target_conditions(next.counts, f, next.schedule)) {
    throw InternalError("step " + std::to_string(k) + ": " + *violation);
  }
  return next;
}

namespace {

struct SweepPick {
  Int n;
  std::size_t sweep;
  std::size_t slot;
};

SweepPick pick_target(const FundRepState& state, const TargetFn& f) {
  std::size_t sweep = state.sweep;
  std::size_t slot = state.slot;
  for (;;) {
    if (slot == sweep) {
      ++sweep;
      slot = 0;
    }
    const Int n = nth_integer(slot++);
    const Multiplicity limit = f(n);
    if (limit.is_infinite() || limit.admits(state.counts.at(n) + 1)) return {n, sweep, slot};
  }
}

}  // namespace

Int next_target(const FundRepState& state, const TargetFn& f) { return pick_target(state, f).n; }

FundRepState fundrep_step(const FundRepState& state, const TargetFn& f) {
  const SweepPick pick = pick_target(state, f);
  FundRepState next = fundrep_step(state, f, pick.n);
  next.sweep = pick.sweep;
  next.slot = pick.slot;
  return next;
}

FundRepState fundrep_build(const TargetFn& f, unsigned h, std::size_t steps) {
  if (steps < 1) throw ValidationError("prescribed-function construction needs at least one step");
  FundRepState state = FundRepState::initial(h);
  for (std::size_t k = 0; k < steps; ++k) state = fundrep_step(state, f);
  return state;
}

}  // namespace repbasis
