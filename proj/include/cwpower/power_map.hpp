#pragma once

#include <vector>

#include "cwpower/mpoly.hpp"

namespace cwp {

// Product of caller-asserted irreducible, pairwise non-proportional forms.
class FactoredHypersurface {
 public:
  explicit FactoredHypersurface(std::vector<MPoly> factors);
  FactoredHypersurface(const MPoly& single);  // NOLINT(google-explicit-constructor)

  const std::vector<MPoly>& factors() const { return factors_; }
  unsigned nvars() const { return factors_.front().nvars(); }
  MPoly expanded() const;

 private:
  std::vector<MPoly> factors_;
};

// Index of the variable when f is a scalar multiple of a single variable.
std::optional<unsigned> coordinate_index(const MPoly& f);

MPoly sym_r(const FactoredHypersurface& h, unsigned r);
MPoly coordinate_power_hypersurface(const FactoredHypersurface& h, unsigned r);

// Exponents p = s/r are exact rationals; mpq keeps them in lowest terms with r > 0.
using RationalExponent = Rational;

// The hypersurface for exponent a/b: f^(a) with x_i -> x_i^b substituted.
// Negative a goes through the reciprocal hypersurface.
MPoly coordinate_rational_power(const FactoredHypersurface& h, const RationalExponent& p);

MPoly reciprocal_hypersurface(const FactoredHypersurface& h);

// Polynomial reciprocal of an expanded form: x^a -> prod_j x_j^(d - a_j),
// then the largest common monomial factor is removed.
MPoly reciprocal_of_expanded(const MPoly& f);

MPoly powsum(long s, unsigned n);
MPoly gen_powsum(const RationalExponent& p, unsigned n);

RationalExponent dual_exponent(const RationalExponent& p);

enum class ChainOrder { DualFirst, ReciFirst };
RationalExponent chain_exponent(const RationalExponent& p, unsigned k, ChainOrder order);

}  // namespace cwp
