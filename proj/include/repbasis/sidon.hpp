#pragma once

#include <optional>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"

namespace repbasis {

/// Two distinct multisets with the same sum.
struct SumCollision {
  Int sum;
  std::vector<Int> first;
  std::vector<Int> second;
};

/// True iff r_{A,h}(x) <= 1 for every x.
bool is_sidon(const FiniteIntSet& set, unsigned h);
/// First collision among h-element multisets, ordered by sum.
std::optional<SumCollision> find_sidon_collision(const FiniteIntSet& set, unsigned h);

/// True iff no two distinct multisets of sizes r, r' <= h share a sum.
bool is_generalized_sidon(const FiniteIntSet& set, unsigned h);
std::optional<SumCollision> find_generalized_collision(const FiniteIntSet& set, unsigned h);

/// Parameters of the two-point set D = {-c, (h-1)c + u}. Construction
/// enforces h >= 2 and c > 2h|u|.
class GadgetParams {
 public:
  GadgetParams(unsigned h, Int c, Int u);

  unsigned h() const noexcept { return h_; }
  const Int& c() const noexcept { return c_; }
  const Int& u() const noexcept { return u_; }

 private:
  unsigned h_;
  Int c_;
  Int u_;
};

/// Returns {-c, (h-1)c + u} after checking that u lies in hD, that D is a
/// generalized Sidon set of order h and that distinct elements of
/// 1D ∪ ... ∪ hD are more than c/2 apart. A failed check is an InternalError.
FiniteIntSet gadget(const GadgetParams& params);

/// Elements of 1A ∪ 2A ∪ ... ∪ hA.
FiniteIntSet sums_up_to(const FiniteIntSet& set, unsigned h);

/// Minimum distance between distinct elements of 1A ∪ ... ∪ hA.
/// Throws DegenerateError when there are fewer than two such elements.
Int min_gap(const FiniteIntSet& set, unsigned h);

}  // namespace repbasis
