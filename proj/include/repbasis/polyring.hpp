#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"

namespace repbasis {

/// Integer-coefficient Laurent polynomial  sum_i coeffs[i] * z^(offset + i).
///
/// Always normalized: the first and last stored coefficients are nonzero,
/// and the zero polynomial has no coefficients (its offset is 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t offset, std::vector<Int> coeffs);

  static LaurentPoly monomial(std::int64_t exponent, Int coefficient = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient. Undefined for zero.
  std::int64_t low() const noexcept { return offset_; }
  /// Highest exponent with a nonzero coefficient. Undefined for zero.
  std::int64_t high() const noexcept {
    return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  Int coeff(std::int64_t exponent) const;
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly scaled(const Int& factor) const;
  /// Divides every coefficient by `divisor`; throws InternalError if inexact.
  LaurentPoly divided_exactly(const Int& divisor) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Debug form "c_k*z^k + ...", lowest exponent first; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  std::int64_t offset_ = 0;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// G_A(z) = sum_{a in A} z^a. Elements must fit in 64 bits and the exponent
/// span must stay within the enumeration budget.
LaurentPoly from_set(const FiniteIntSet& set);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
/// p^h by binary powering, h >= 1.
LaurentPoly pow(const LaurentPoly& p, unsigned h);
/// p(z^2).
LaurentPoly substitute_square(const LaurentPoly& p);

/// Recovers the unique set A with from_set(A)^h == p.
///
/// The lowest exponent of p must be h * min(A) with coefficient 1. After
/// factoring out that monomial, the power series root F = Q^(1/h) with
/// F(0) = 1 is computed coefficient by coefficient from Q F' = (1/h) Q' F,
/// and every coefficient is required to be 0 or 1. The candidate is then
/// certified by recomputing its h-th power. Throws NoRootError otherwise.
FiniteIntSet hth_root_01(const LaurentPoly& p, unsigned h);

}  // namespace repbasis
