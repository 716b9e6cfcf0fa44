#include "cwpower/power_map.hpp"

#include <algorithm>

#include "cwpower/error.hpp"

namespace cwp {

FactoredHypersurface::FactoredHypersurface(std::vector<MPoly> factors)
    : factors_(std::move(factors)) {
  require(!factors_.empty(), ErrorCode::InvalidArgument, "hypersurface needs at least one factor");
  const unsigned nv = factors_.front().nvars();
  for (const auto& f : factors_) {
    require(f.nvars() == nv, ErrorCode::DimensionMismatch, "factors have different variable counts");
    require(!f.is_zero(), ErrorCode::InvalidArgument, "zero factor");
    require(f.is_homogeneous(), ErrorCode::InvalidArgument, "factor is not homogeneous");
    require(f.degree() > 0, ErrorCode::InvalidArgument, "constant factor");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (proportional(factors_[i], factors_[j]))
        fail(ErrorCode::InvalidArgument,
             "factors " + std::to_string(i) + " and " + std::to_string(j) + " are proportional");
}

FactoredHypersurface::FactoredHypersurface(const MPoly& single)
    : FactoredHypersurface(std::vector<MPoly>{single}) {}

MPoly FactoredHypersurface::expanded() const {
  MPoly out = factors_.front();
  for (std::size_t i = 1; i < factors_.size(); ++i) out = out * factors_[i];
  return out;
}

std::optional<unsigned> coordinate_index(const MPoly& f) {
  if (f.size() != 1) return std::nullopt;
  const Monomial& m = f.leading_monomial();
  if (m.degree() != 1) return std::nullopt;
  for (unsigned i = 0; i < m.nvars(); ++i)
    if (m[i] == 1) return i;
  return std::nullopt;
}

MPoly sym_r(const FactoredHypersurface& h, unsigned r) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  const unsigned nv = h.nvars();
  std::vector<MPoly> pieces;
  auto known = [&pieces](const MPoly& g) {
    return std::any_of(pieces.begin(), pieces.end(), [&g](const MPoly& p) { return p == g; });
  };
  for (const auto& f : h.factors()) {
    if (auto i = coordinate_index(f)) {
      pieces.push_back(MPoly::term(Monomial::variable(nv, *i, r), Cyc(1L)));
      continue;
    }
    for (auto& g : orbit(f, r))
      if (!known(g)) pieces.push_back(std::move(g));
  }
  // Small factors first keeps intermediate products sparse.
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const MPoly& a, const MPoly& b) { return a.size() < b.size(); });
  MPoly product = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) product = product * pieces[i];
  product = product.normalized();
  for (const auto& [m, c] : product.terms())
    for (unsigned e : m.exponents())
      if (e % r != 0)
        fail(ErrorCode::NotInPowerSubring,
             "orbit product leaves the power subring; a factor passed as irreducible is "
             "likely reducible");
  return product.demoted();
}

MPoly coordinate_power_hypersurface(const FactoredHypersurface& h, unsigned r) {
  if (r == 1) return h.expanded().normalized().demoted();
  return extract_power(sym_r(h, r), r);
}

MPoly reciprocal_of_expanded(const MPoly& f) {
  require(!f.is_zero(), ErrorCode::InvalidArgument, "reciprocal of the zero polynomial");
  require(f.is_homogeneous(), ErrorCode::InvalidArgument, "reciprocal needs a homogeneous form");
  const unsigned d = f.degree();
  const unsigned nv = f.nvars();
  std::vector<unsigned> common(nv, ~0U);
  std::vector<std::pair<std::vector<unsigned>, Cyc>> images;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(nv);
    for (unsigned j = 0; j < nv; ++j) {
      e[j] = d - m[j];
      common[j] = std::min(common[j], e[j]);
    }
    images.emplace_back(std::move(e), c);
  }
  MPoly out(nv, f.r_context());
  for (auto& [e, c] : images) {
    for (unsigned j = 0; j < nv; ++j) e[j] -= common[j];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out.normalized().demoted();
}

MPoly reciprocal_hypersurface(const FactoredHypersurface& h) {
  for (const auto& f : h.factors())
    if (auto i = coordinate_index(f))
      fail(ErrorCode::CoordinateHyperplaneComponent,
           "component x" + std::to_string(*i) + " = 0 lies in a coordinate hyperplane");
  return reciprocal_of_expanded(h.expanded());
}

MPoly coordinate_rational_power(const FactoredHypersurface& h, const RationalExponent& p) {
  require(sgn(p) != 0, ErrorCode::InvalidArgument, "exponent must be nonzero");
  const Integer& num = p.get_num();
  const Integer& den = p.get_den();
  require(abs(num) <= 100000 && den <= 100000, ErrorCode::Unsupported, "exponent too large");
  const unsigned a = static_cast<unsigned>(Integer(abs(num)).get_ui());
  const unsigned b = static_cast<unsigned>(den.get_ui());
  MPoly power;
  if (sgn(num) > 0) {
    power = coordinate_power_hypersurface(h, a);
  } else {
    for (const auto& f : h.factors())
      if (auto i = coordinate_index(f))
        fail(ErrorCode::CoordinateHyperplaneComponent,
             "component x" + std::to_string(*i) + " = 0 lies in a coordinate hyperplane");
    power = reciprocal_of_expanded(coordinate_power_hypersurface(h, a));
  }
  return b == 1 ? power : substitute_power(power, b);
}

MPoly powsum(long s, unsigned n) {
  require(s != 0, ErrorCode::InvalidArgument, "power sum exponent must be nonzero");
  const unsigned nv = n + 1;
  const unsigned mag = static_cast<unsigned>(s < 0 ? -s : s);
  MPoly out(nv);
  for (unsigned i = 0; i < nv; ++i) {
    std::vector<unsigned> e(nv, s > 0 ? 0 : mag);
    e[i] = s > 0 ? mag : 0;
    out.add_term(Monomial(std::move(e)), Cyc(1L));
  }
  return out;
}

MPoly gen_powsum(const RationalExponent& p, unsigned n) {
  require(sgn(p) != 0, ErrorCode::InvalidArgument, "generalised power sum needs p != 0");
  require(abs(p.get_num()) <= 1000 && p.get_den() <= 1000, ErrorCode::Unsupported,
          "exponent too large");
  const long s = p.get_num().get_si();
  const unsigned r = static_cast<unsigned>(p.get_den().get_ui());
  MPoly result = coordinate_power_hypersurface(FactoredHypersurface(powsum(s, n)), r);
  if (s > 1) {
    const MPoly base = coordinate_power_hypersurface(FactoredHypersurface(powsum(1, n)), r);
    if (!proportional(result, substitute_power(base, static_cast<unsigned>(s))))
      fail(ErrorCode::Internal, "substitution identity failed for P_" + p.get_str());
  }
  return result;
}

RationalExponent dual_exponent(const RationalExponent& p) {
  if (sgn(p) == 0 || p == 1)
    fail(ErrorCode::UndefinedDual, "no dual exponent for p = " + p.get_str());
  return RationalExponent(p / (p - 1));
}

RationalExponent chain_exponent(const RationalExponent& p, unsigned k, ChainOrder order) {
  const bool reci_first = order == ChainOrder::ReciFirst;
  if (sgn(p) == 0) fail(ErrorCode::ForbiddenExponent, "p = 0 is excluded");
  // Excluded values: -1/j (reciprocal first) or 1/j (dual first), j = 1..k.
  const RationalExponent target = reci_first ? RationalExponent(-1 / p) : RationalExponent(1 / p);
  if (target.get_den() == 1 && sgn(target) > 0 && target <= k) {
    fail(ErrorCode::ForbiddenExponent,
         "p = " + p.get_str() + " lies in the excluded set {0, " + (reci_first ? "-1/" : "1/") +
             std::to_string(k) + ", ..., " + (reci_first ? "-1" : "1") + "}");
  }
  const RationalExponent kp = RationalExponent(k * p);
  return reci_first ? RationalExponent(p / (1 + kp)) : RationalExponent(p / (1 - kp));
}

}  // namespace cwp
