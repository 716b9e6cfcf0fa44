#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cwpower/cyclotomic.hpp"

namespace cwp {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);
  static Monomial one(unsigned nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(unsigned nvars, unsigned index, unsigned power = 1);

  unsigned nvars() const { return static_cast<unsigned>(exps_.size()); }
  unsigned degree() const { return degree_; }
  unsigned operator[](unsigned i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;

  // Graded lex with x0 > x1 > ... ; returns -1, 0, 1.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

// Sparse polynomial in nvars variables with coefficients in Q(zeta_rctx).
// Every stored coefficient is nonzero; r_context is always a multiple of the
// order of each coefficient.
class MPoly {
 public:
  using Terms = std::map<Monomial, Cyc>;

  explicit MPoly(unsigned nvars = 0, unsigned r_context = 1);
  static MPoly constant(unsigned nvars, const Cyc& c, unsigned r_context = 1);
  static MPoly variable(unsigned nvars, unsigned index, unsigned r_context = 1);
  static MPoly term(const Monomial& m, const Cyc& c, unsigned r_context = 1);

  unsigned nvars() const { return nvars_; }
  unsigned r_context() const { return r_context_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Total degree of the leading term; 0 for the zero polynomial.
  unsigned degree() const;
  // Precondition: nonzero. Largest monomial in graded lex order.
  const Monomial& leading_monomial() const;
  const Cyc& leading_coefficient() const;
  Cyc coefficient(const Monomial& m) const;
  bool is_rational() const;

  void add_term(const Monomial& m, const Cyc& c);
  // Copy whose context is the lcm of the current one and order.
  MPoly with_context(unsigned order) const;
  // Context reduced to 1 when every coefficient is rational.
  MPoly demoted() const;
  // Scaled so the leading coefficient is 1.
  MPoly normalized() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Cyc& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Cyc& c) { return a *= c; }
  friend MPoly operator*(const Cyc& c, MPoly a) { return a *= c; }

  // Value equality; r_context is not compared.
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  unsigned nvars_;
  unsigned r_context_;
  Terms terms_;
};

MPoly pow(const MPoly& f, unsigned exponent);

// Element of (Z_r)^(n+1) / Z_r acting by x_i -> zeta_r^expo[i] x_i.
class GroupElement {
 public:
  GroupElement(unsigned r, std::vector<unsigned> expo);
  static GroupElement identity(unsigned r, unsigned nvars);

  unsigned r() const { return r_; }
  const std::vector<unsigned>& expo() const { return expo_; }
  bool is_identity() const;

  // Composition adds exponents modulo r.
  GroupElement operator*(const GroupElement& other) const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.r_ == b.r_ && a.expo_ == b.expo_;
  }

 private:
  unsigned r_;
  std::vector<unsigned> expo_;
};

// Calls visit for each of the r^(nvars-1) normalized group elements in
// lexicographic exponent order.
void for_each_group_element(unsigned r, unsigned nvars,
                            const std::function<void(const GroupElement&)>& visit);

MPoly act(const GroupElement& tau, const MPoly& f);

std::optional<Cyc> proportional(const MPoly& f, const MPoly& g);

// Pairwise non-proportional normalized representatives of the orbit of f;
// the first entry is f normalized.
std::vector<MPoly> orbit(const MPoly& f, unsigned r);

MPoly substitute_power(const MPoly& f, unsigned s);
MPoly extract_power(const MPoly& f, unsigned r);

Cyc evaluate(const MPoly& f, const std::vector<Cyc>& point);

// f(g_0, ..., g_n); all g_i share one variable count.
MPoly compose(const MPoly& f, const std::vector<MPoly>& substitutes);

std::set<std::vector<unsigned>> newton_support(const MPoly& f);

using VariableNamer = std::function<std::string(unsigned)>;
std::string default_variable_name(unsigned index);

MPoly parse_poly(std::string_view text, unsigned nvars, unsigned r_context = 1);
std::string render_poly(const MPoly& f, const VariableNamer& namer = default_variable_name);

}  // namespace cwp
