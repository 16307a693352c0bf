#include "repbasis/linforms.hpp"

#include <algorithm>

#include "repbasis/errors.hpp"

namespace repbasis {

namespace {

Int gcd_with_bezout(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

const std::uint64_t kSearchLimit = 1'000'000;

}  // namespace

BinaryForm::BinaryForm(Int u1, Int u2, Unchecked) : u1_(std::move(u1)), u2_(std::move(u2)) {
  if (u1_ < 1 || u2_ < 1) throw ValidationError("form coefficients must be positive");
  Int x, y;
  if (gcd_with_bezout(u1_, u2_, x, y) != 1) throw ValidationError("form coefficients must be coprime");
  // v1 ≡ x (mod u2); take the residue of least absolute value.
  v1_ = floor_mod(x, u2_);
  if (u2_ - v1_ < v1_) v1_ -= u2_;
  v2_ = (1 - u1_ * v1_) / u2_;
  if (u1_ * v1_ + u2_ * v2_ != 1) throw InternalError("Bezout identity failed");
}

BinaryForm::BinaryForm(Int u1, Int u2) : BinaryForm(std::move(u1), std::move(u2), Unchecked{}) {
  if (u1_ >= u2_) throw ValidationError("form coefficients need u1 < u2");
}

BinaryForm BinaryForm::relaxed(Int u1, Int u2) { return BinaryForm(std::move(u1), std::move(u2), Unchecked{}); }

FiniteIntSet image(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second) {
  return rep_support(phi, first, second).keys();
}

RepSupport rep_support(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second) {
  if (Int(first.size()) * second.size() > Int(enumeration_budget())) {
    throw BudgetError("pair enumeration exceeds the enumeration budget");
  }
  std::vector<Int> sums;
  sums.reserve(first.size() * second.size());
  for (const Int& a1 : first) {
    for (const Int& a2 : second) sums.push_back(phi(a1, a2));
  }
  return RepSupport::tally(std::move(sums));
}

RepTable rep(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second, const Window& window) {
  return RepTable::restrict(rep_support(phi, first, second), window);
}

bool extension_clauses_hold(const RepSupport& before, const RepSupport& after, const Int& b,
                            const FiniteIntSet& old_set, const Int& x1, const Int& x2) {
  if (x1 == x2 || old_set.contains(x1) || old_set.contains(x2)) return false;
  if (after.at(b) != before.at(b) + 1) return false;
  for (const RepEntry& e : before.entries()) {
    if (e.n != b && after.at(e.n) != e.count) return false;
  }
  for (const RepEntry& e : after.entries()) {
    if (e.n != b && before.at(e.n) == 0 && e.count != 1) return false;
  }
  return true;
}

Extension extend_once(const BinaryForm& phi, const FiniteIntSet& set, const Int& b) {
  const RepSupport before = rep_support(phi, set, set);
  const FiniteIntSet old_image = before.keys();
  std::vector<Int> fresh;
  for (std::uint64_t i = 0; i < kSearchLimit; ++i) {
    const Int t = i == 0 ? Int(0) : (i % 2 == 1 ? Int((i + 1) / 2) : -Int(i / 2));
    const Int x1 = b * phi.v1() + phi.u2() * t;
    const Int x2 = b * phi.v2() - phi.u1() * t;
    if (x1 == x2 || set.contains(x1) || set.contains(x2)) continue;

    // Values of the ordered pairs that involve a new element.
    fresh.clear();
    for (const Int& a : set) {
      fresh.push_back(phi(x1, a));
      fresh.push_back(phi(a, x1));
      fresh.push_back(phi(x2, a));
      fresh.push_back(phi(a, x2));
    }
    fresh.push_back(phi(x1, x1));
    fresh.push_back(phi(x1, x2));
    fresh.push_back(phi(x2, x1));
    fresh.push_back(phi(x2, x2));
    std::sort(fresh.begin(), fresh.end());

    // b exactly once, nothing else from Phi(A), no repeats.
    bool ok = std::count(fresh.begin(), fresh.end(), b) == 1 &&
              std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
    for (std::size_t j = 0; ok && j < fresh.size(); ++j) {
      if (fresh[j] != b && old_image.contains(fresh[j])) ok = false;
    }
    if (!ok) continue;

    FiniteIntSet next = set.unite(FiniteIntSet{x1, x2});
    if (!extension_clauses_hold(before, rep_support(phi, next, next), b, set, x1, x2)) {
      throw InternalError("extension at t = " + t.str() + " failed recount");
    }
    return {t, x1, x2, std::move(next)};
  }
  throw InternalError("no admissible t within " + std::to_string(kSearchLimit) + " candidates");
}

Int unrepresented_gap(const BinaryForm& phi, const FiniteIntSet& set) {
  const FiniteIntSet img = image(phi, set, set);
  if (!img.contains(0)) return 0;
  for (Int n = 1;; ++n) {
    if (!img.contains(n)) return n;
    if (!img.contains(-n)) return -n;
  }
}

LinformBuild urb_form(const BinaryForm& phi, std::size_t k) {
  if (k < 1) throw ValidationError("linear-form construction needs at least one step");
  LinformBuild out;
  out.set = FiniteIntSet{0, 1};
  const RepSupport first = rep_support(phi, out.set, out.set);
  if (first.size() != 4 || first.max_count() != 1) throw InternalError("|Phi(A_1)| != 4");
  for (std::size_t step = 1; step < k; ++step) {
    const Int b = unrepresented_gap(phi, out.set);
    Extension ext = extend_once(phi, out.set, b);
    out.set = ext.set;
    out.steps.push_back({b, std::move(ext)});
  }
  const RepSupport final_counts = rep_support(phi, out.set, out.set);
  if (final_counts.max_count() > 1) throw InternalError("R_{A,Phi} exceeds 1");
  out.certified_gap = abs(unrepresented_gap(phi, out.set));
  return out;
}

}  // namespace repbasis
