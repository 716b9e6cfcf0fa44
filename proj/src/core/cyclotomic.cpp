#include "cwpower/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "cwpower/error.hpp"

namespace cwp {

namespace {

using RPoly = std::vector<Rational>;  // lowest degree first

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<std::vector<long>> build_cyclotomic_table() {
  std::vector<std::vector<long>> table(kMaxCyclotomicOrder + 1);
  table[1] = {-1, 1};
  for (unsigned m = 2; m <= kMaxCyclotomicOrder; ++m) {
    // x^m - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const auto& den = table[d];
      const std::size_t dd = den.size() - 1;
      std::vector<long> quot(num.size() - dd, 0);
      for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
        const long c = num[i];  // den is monic
        quot[i - dd] = c;
        if (c != 0)
          for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        if (i == dd) break;
      }
      num = std::move(quot);
    }
    table[m] = std::move(num);
  }
  return table;
}

// Reduces p modulo Phi_m in place; result has length phi(m).
void reduce_mod_phi(RPoly& p, unsigned m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi_poly[j] != 0) p[i - deg + j] -= c * phi_poly[j];
    p[i] = 0;
  }
  p.resize(deg);
}

// Quotient and remainder of a / b over Q, b nonzero and trimmed.
void poly_divmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

RPoly poly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(unsigned m) {
  static const std::vector<std::vector<long>> table = build_cyclotomic_table();
  if (m < 1 || m > kMaxCyclotomicOrder)
    fail(ErrorCode::Unsupported,
         "cyclotomic order " + std::to_string(m) + " outside supported range");
  return table[m];
}

Cyc::Cyc() : order_(1), coeffs_{Rational(0)} {}
Cyc::Cyc(long value) : order_(1), coeffs_{Rational(value)} {}
Cyc::Cyc(const Rational& value) : order_(1), coeffs_{value} {}
Cyc::Cyc(const Integer& value) : order_(1), coeffs_{Rational(value)} {}

Cyc::Cyc(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  normalize_order();
}

void Cyc::normalize_order() {
  if (order_ == 2) order_ = 1;
}

Cyc Cyc::zeta(unsigned order, long power) {
  require(order >= 1, ErrorCode::InvalidArgument, "root of unity order must be positive");
  long p = power % static_cast<long>(order);
  if (p < 0) p += order;
  RPoly c(static_cast<std::size_t>(p) + 1, Rational(0));
  c[p] = 1;
  return from_powers(order, std::move(c));
}

Cyc Cyc::from_powers(unsigned order, std::vector<Rational> coeffs) {
  require(order >= 1, ErrorCode::InvalidArgument, "root of unity order must be positive");
  reduce_mod_phi(coeffs, order);
  return Cyc(order, std::move(coeffs));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Cyc::rational() const {
  require(is_rational(), ErrorCode::Internal, "cyclotomic value is not rational");
  return coeffs_[0];
}

Cyc Cyc::promoted(unsigned order) const {
  if (order == 2) order = 1;
  if (order == order_) return *this;
  if (order % order_ != 0)
    fail(ErrorCode::Internal, "cannot promote Q(zeta_" + std::to_string(order_) +
                                  ") into Q(zeta_" + std::to_string(order) + ")");
  if (is_rational()) {
    RPoly c(euler_phi(order), Rational(0));
    c[0] = coeffs_[0];
    return Cyc(order, std::move(c));
  }
  const std::size_t step = order / order_;
  RPoly c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * step] = coeffs_[j];
  return from_powers(order, std::move(c));
}

Cyc Cyc::demoted() const {
  if (order_ == 1 || !is_rational()) return *this;
  return Cyc(coeffs_[0]);
}

Cyc Cyc::inverse() const {
  require(!is_zero(), ErrorCode::InvalidArgument, "inverse of zero");
  if (coeffs_.size() == 1) return Cyc(order_, {1 / coeffs_[0]});
  // Extended Euclid against Phi_order; the gcd is a nonzero constant.
  const auto& phi_poly = cyclotomic_polynomial(order_);
  RPoly r0(phi_poly.begin(), phi_poly.end());
  RPoly r1 = coeffs_;
  trim(r1);
  RPoly s0{Rational(0)}, s1{Rational(1)};
  while (!r1.empty()) {
    RPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    RPoly qs = poly_mul(q, s1);
    RPoly next(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
    trim(next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  const Rational g = r0.front();
  for (auto& c : s0) c /= g;
  return from_powers(order_, std::move(s0));
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& other) {
  if (order_ != other.order_) {
    const unsigned m = lcm_order(order_, other.order_);
    *this = promoted(m);
    return *this += other.promoted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& other) {
  if (order_ != other.order_) {
    const unsigned m = lcm_order(order_, other.order_);
    *this = promoted(m);
    return *this -= other.promoted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& other) {
  if (other.coeffs_.size() == 1 && other.order_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1 && order_ == 1) {
    const Rational k = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= k;
    return *this;
  }
  if (order_ != other.order_) {
    const unsigned m = lcm_order(order_, other.order_);
    *this = promoted(m);
    return *this *= other.promoted(m);
  }
  RPoly prod = poly_mul(coeffs_, other.coeffs_);
  if (prod.empty()) prod.assign(1, Rational(0));
  reduce_mod_phi(prod, order_);
  coeffs_ = std::move(prod);
  return *this;
}

Cyc& Cyc::operator/=(const Cyc& other) { return *this *= other.inverse(); }

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const unsigned m = lcm_order(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

int Cyc::compare(const Cyc& a, const Cyc& b) {
  if (a.order_ != b.order_) {
    if (a.is_rational() && b.is_rational()) {
      const int c = cmp(a.coeffs_[0], b.coeffs_[0]);
      return (c > 0) - (c < 0);
    }
    const unsigned m = lcm_order(a.order_, b.order_);
    return compare(a.promoted(m), b.promoted(m));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyc::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  os << '(';
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (j > 1) os << '^' << j;
  }
  os << ')';
  return os.str();
}

Cyc pow(const Cyc& base, unsigned exponent) {
  Cyc result(1L);
  Cyc b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace cwp
