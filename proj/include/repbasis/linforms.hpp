#pragma once

#include <cstdint>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"
#include "repbasis/repfn.hpp"

namespace repbasis {

/// Phi(x1, x2) = u1 x1 + u2 x2 with 0 < u1 < u2 coprime, together with the
/// Bezout pair u1 v1 + u2 v2 = 1 of least |v1| (positive on ties).
class BinaryForm {
 public:
  BinaryForm(Int u1, Int u2);
  /// Same, but only requires positive coprime coefficients (u1 >= u2 allowed).
  static BinaryForm relaxed(Int u1, Int u2);

  const Int& u1() const noexcept { return u1_; }
  const Int& u2() const noexcept { return u2_; }
  const Int& v1() const noexcept { return v1_; }
  const Int& v2() const noexcept { return v2_; }

  Int operator()(const Int& x1, const Int& x2) const { return u1_ * x1 + u2_ * x2; }

 private:
  struct Unchecked {};
  BinaryForm(Int u1, Int u2, Unchecked);

  Int u1_;
  Int u2_;
  Int v1_;
  Int v2_;
};

/// Phi(A1, A2).
FiniteIntSet image(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second);
/// R_{A1,A2,Phi} over its full support.
RepSupport rep_support(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second);
RepTable rep(const BinaryForm& phi, const FiniteIntSet& first, const FiniteIntSet& second, const Window& window);

struct Extension {
  Int t;
  Int x1;  // b v1 + u2 t
  Int x2;  // b v2 - u1 t
  FiniteIntSet set;
};

/// Adjoins {b v1 + u2 t, b v2 - u1 t} for the first t in 0, 1, -1, 2, -2, ...
/// such that, with C the enlarged set,
///   R_C(b) = R_A(b) + 1,  R_C = R_A on Phi(A) \ {b},
///   R_C = 1 on Phi(C) \ (Phi(A) ∪ {b}),  and both new elements are fresh.
/// The chosen C is re-certified by a full recount. Running out of candidates
/// is an InternalError.
Extension extend_once(const BinaryForm& phi, const FiniteIntSet& set, const Int& b);

/// The four clauses above, checked by full recount of both sets.
bool extension_clauses_hold(const RepSupport& before, const RepSupport& after, const Int& b,
                            const FiniteIntSet& old_set, const Int& x1, const Int& x2);

/// min |n| over n not in Phi(A, A), positive first on ties.
Int unrepresented_gap(const BinaryForm& phi, const FiniteIntSet& set);

struct LinformStep {
  Int b;
  Extension extension;
};

struct LinformBuild {
  FiniteIntSet set;
  std::vector<LinformStep> steps;
  /// Every |n| below this has exactly one representation.
  Int certified_gap;
};

/// A_1 = {0, 1}, then k - 1 calls of extend_once on the current gap.
LinformBuild urb_form(const BinaryForm& phi, std::size_t k);

}  // namespace repbasis
