#include "repbasis/sidon.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "repbasis/errors.hpp"
#include "repbasis/repfn.hpp"

namespace repbasis {

namespace {

// Calls visit(sum, indices) for every weakly increasing index tuple whose
// length lies in [min_size, max_size].
template <typename Visit>
void for_each_multiset(std::span<const Int> elems, unsigned min_size, unsigned max_size, Visit&& visit) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, const Int& partial) -> void {
    if (idx.size() >= min_size) visit(partial, idx);
    if (idx.size() == max_size) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      idx.push_back(i);
      self(self, i, partial + elems[i]);
      idx.pop_back();
    }
  };
  rec(rec, 0, Int(0));
}

std::optional<SumCollision> first_collision(const FiniteIntSet& set, unsigned min_size, unsigned max_size) {
  std::vector<std::pair<Int, std::uint64_t>> sums;
  std::uint64_t ordinal = 0;
  for_each_multiset(set.elements(), min_size, max_size,
                    [&](const Int& s, const std::vector<std::size_t>&) { sums.emplace_back(s, ordinal++); });
  std::sort(sums.begin(), sums.end());
  for (std::size_t i = 1; i < sums.size(); ++i) {
    if (sums[i - 1].first != sums[i].first) continue;
    const std::uint64_t want_a = sums[i - 1].second;
    const std::uint64_t want_b = sums[i].second;
    SumCollision out{.sum = sums[i].first, .first = {}, .second = {}};
    ordinal = 0;
    for_each_multiset(set.elements(), min_size, max_size,
                      [&](const Int&, const std::vector<std::size_t>& idx) {
                        if (ordinal == want_a || ordinal == want_b) {
                          std::vector<Int>& dst = ordinal == want_a ? out.first : out.second;
                          for (std::size_t j : idx) dst.push_back(set[j]);
                        }
                        ++ordinal;
                      });
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SumCollision> find_sidon_collision(const FiniteIntSet& set, unsigned h) {
  if (h == 0) throw ValidationError("order h must be positive");
  return first_collision(set, h, h);
}

bool is_sidon(const FiniteIntSet& set, unsigned h) { return !find_sidon_collision(set, h).has_value(); }

std::optional<SumCollision> find_generalized_collision(const FiniteIntSet& set, unsigned h) {
  if (h == 0) throw ValidationError("order h must be positive");
  return first_collision(set, 1, h);
}

bool is_generalized_sidon(const FiniteIntSet& set, unsigned h) {
  return !find_generalized_collision(set, h).has_value();
}

GadgetParams::GadgetParams(unsigned h, Int c, Int u) : h_(h), c_(std::move(c)), u_(std::move(u)) {
  if (h_ < 2) throw InvalidGadget("gadget order must be at least 2");
  if (c_ <= 2 * Int(h_) * abs(u_)) {
    throw InvalidGadget("gadget needs c > 2h|u|, got c = " + c_.str() + ", h = " + std::to_string(h_) +
                        ", u = " + u_.str());
  }
}

FiniteIntSet sums_up_to(const FiniteIntSet& set, unsigned h) {
  if (h == 0) throw ValidationError("order h must be positive");
  FiniteIntSet out;
  for (unsigned r = 1; r <= h; ++r) out = out.unite(repfn::sumset(r, set));
  return out;
}

Int min_gap(const FiniteIntSet& set, unsigned h) {
  const FiniteIntSet sums = sums_up_to(set, h);
  if (sums.size() < 2) throw DegenerateError("fewer than two distinct sums");
  Int best = sums[1] - sums[0];
  for (std::size_t i = 2; i < sums.size(); ++i) best = std::min(best, Int(sums[i] - sums[i - 1]));
  return best;
}

FiniteIntSet gadget(const GadgetParams& params) {
  const Int hm1 = params.h() - 1;
  FiniteIntSet d{-params.c(), hm1 * params.c() + params.u()};
  if (!repfn::sumset(params.h(), d).contains(params.u())) {
    throw InternalError("gadget: u = " + params.u().str() + " missing from hD");
  }
  if (!is_generalized_sidon(d, params.h())) {
    throw InternalError("gadget: D is not a generalized Sidon set of order " + std::to_string(params.h()));
  }
  // gap > c/2, compared without division
  if (2 * min_gap(d, params.h()) <= params.c()) {
    throw InternalError("gadget: sums closer than c/2");
  }
  return d;
}

}  // namespace repbasis
