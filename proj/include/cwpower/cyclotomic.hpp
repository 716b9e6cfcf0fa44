#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cwp {

using Integer = mpz_class;
using Rational = mpq_class;

// Largest cyclotomic order the arithmetic tables cover.
inline constexpr unsigned kMaxCyclotomicOrder = 360;

unsigned euler_phi(unsigned m);
unsigned lcm_order(unsigned a, unsigned b);

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned m);

/// An element of Q(zeta_r), stored as a residue modulo Phi_r in the power
/// basis 1, zeta, ..., zeta^(phi(r)-1).
///
/// Elements of different orders combine in Q(zeta_lcm). Orders 1 and 2 both
/// describe Q and are stored as order 1.
class Cyc {
 public:
  Cyc();
  Cyc(long value);  // NOLINT(google-explicit-constructor)
  Cyc(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyc(const Integer& value);  // NOLINT(google-explicit-constructor)

  static Cyc zeta(unsigned order, long power = 1);
  // Reduces an arbitrary-length coefficient vector in zeta_order modulo Phi.
  static Cyc from_powers(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Precondition: is_rational().
  const Rational& rational() const;

  // Re-expresses the element in Q(zeta_order); order must be a multiple.
  Cyc promoted(unsigned order) const;
  // Drops to order 1 when the value is rational.
  Cyc demoted() const;

  Cyc inverse() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& other);
  Cyc& operator-=(const Cyc& other);
  Cyc& operator*=(const Cyc& other);
  Cyc& operator/=(const Cyc& other);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Structural total order (not a field order); used for canonical sorting.
  static int compare(const Cyc& a, const Cyc& b);

  // Text in the coefficient grammar: "3/4", "z^2", "(1 + 2*z)".
  std::string to_string() const;

 private:
  Cyc(unsigned order, std::vector<Rational> coeffs);
  void normalize_order();

  unsigned order_;
  std::vector<Rational> coeffs_;
};

Cyc pow(const Cyc& base, unsigned exponent);

}  // namespace cwp
