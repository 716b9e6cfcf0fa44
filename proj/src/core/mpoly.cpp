#include "cwpower/mpoly.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "cwpower/error.hpp"

namespace cwp {

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial Monomial::variable(unsigned nvars, unsigned index, unsigned power) {
  std::vector<unsigned> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? 1 : -1;
  return 0;
}

MPoly::MPoly(unsigned nvars, unsigned r_context)
    : nvars_(nvars), r_context_(r_context == 2 ? 1 : r_context) {
  require(r_context >= 1, ErrorCode::InvalidArgument, "cyclotomic context must be positive");
}

MPoly MPoly::constant(unsigned nvars, const Cyc& c, unsigned r_context) {
  MPoly p(nvars, r_context);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

MPoly MPoly::variable(unsigned nvars, unsigned index, unsigned r_context) {
  require(index < nvars, ErrorCode::DimensionMismatch, "variable index out of range");
  MPoly p(nvars, r_context);
  p.add_term(Monomial::variable(nvars, index), Cyc(1L));
  return p;
}

MPoly MPoly::term(const Monomial& m, const Cyc& c, unsigned r_context) {
  MPoly p(m.nvars(), r_context);
  p.add_term(m, c);
  return p;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

unsigned MPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

const Monomial& MPoly::leading_monomial() const {
  require(!terms_.empty(), ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Cyc& MPoly::leading_coefficient() const {
  require(!terms_.empty(), ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Cyc MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyc() : it->second;
}

bool MPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

void MPoly::add_term(const Monomial& m, const Cyc& c) {
  if (m.nvars() != nvars_)
    fail(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(m.nvars()) +
                                           " variables, polynomial has " +
                                           std::to_string(nvars_));
  if (c.is_zero()) return;
  if (!c.is_rational() && r_context_ % c.order() != 0) {
    *this = with_context(c.order());
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c.is_rational() ? c.demoted() : c.promoted(r_context_));
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
  else if (it->second.order() != 1 && it->second.is_rational())
    it->second = it->second.demoted();
}

MPoly MPoly::with_context(unsigned order) const {
  const unsigned target = lcm_order(r_context_, order);
  if (target == r_context_) return *this;
  MPoly out(nvars_, target);
  for (const auto& [m, c] : terms_)
    out.terms_.emplace(m, c.is_rational() ? c : c.promoted(out.r_context_));
  return out;
}

MPoly MPoly::demoted() const {
  if (r_context_ == 1 || !is_rational()) return *this;
  MPoly out = *this;
  out.r_context_ = 1;
  return out;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  const Cyc& lead = leading_coefficient();
  if (lead.is_one()) return *this;
  MPoly out = *this;
  out *= lead.inverse();
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require(nvars_ == other.nvars_, ErrorCode::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require(nvars_ == other.nvars_, ErrorCode::DimensionMismatch, "variable counts differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Cyc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!c.is_rational()) *this = with_context(c.order());
  for (auto& t : terms_) {
    t.second *= c;
    if (t.second.is_rational())
      t.second = t.second.demoted();
    else
      t.second = t.second.promoted(r_context_);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require(a.nvars_ == b.nvars_, ErrorCode::DimensionMismatch, "variable counts differ");
  MPoly out(a.nvars_, lcm_order(a.r_context_, b.r_context_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly pow(const MPoly& f, unsigned exponent) {
  MPoly result = MPoly::constant(f.nvars(), Cyc(1L), f.r_context());
  MPoly base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GroupElement::GroupElement(unsigned r, std::vector<unsigned> expo) : r_(r), expo_(std::move(expo)) {
  require(r >= 1, ErrorCode::InvalidArgument, "group order must be positive");
  require(!expo_.empty(), ErrorCode::InvalidArgument, "group element needs at least one coordinate");
  const unsigned shift = expo_[0] % r_;
  for (auto& e : expo_) e = (e % r_ + r_ - shift) % r_;
}

GroupElement GroupElement::identity(unsigned r, unsigned nvars) {
  return GroupElement(r, std::vector<unsigned>(nvars, 0));
}

bool GroupElement::is_identity() const {
  return std::all_of(expo_.begin(), expo_.end(), [](unsigned e) { return e == 0; });
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  require(r_ == other.r_ && expo_.size() == other.expo_.size(), ErrorCode::DimensionMismatch,
          "incompatible group elements");
  std::vector<unsigned> e(expo_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (expo_[i] + other.expo_[i]) % r_;
  return GroupElement(r_, std::move(e));
}

void for_each_group_element(unsigned r, unsigned nvars,
                            const std::function<void(const GroupElement&)>& visit) {
  require(nvars >= 1 && r >= 1, ErrorCode::InvalidArgument, "empty group");
  std::vector<unsigned> e(nvars, 0);
  while (true) {
    visit(GroupElement(r, e));
    if (nvars == 1) return;
    std::size_t i = nvars - 1;
    while (++e[i] == r) {
      e[i] = 0;
      if (i == 1) return;
      --i;
    }
  }
}

MPoly act(const GroupElement& tau, const MPoly& f) {
  if (tau.expo().size() != f.nvars())
    fail(ErrorCode::DimensionMismatch, "group element length " +
                                           std::to_string(tau.expo().size()) +
                                           " does not match " + std::to_string(f.nvars()) +
                                           " variables");
  const unsigned r = tau.r();
  if (tau.is_identity()) return f;
  std::vector<Cyc> powers(r);
  for (unsigned j = 0; j < r; ++j) powers[j] = Cyc::zeta(r, j);
  MPoly out(f.nvars(), lcm_order(f.r_context(), r));
  for (const auto& [m, c] : f.terms()) {
    unsigned long long s = 0;
    for (unsigned i = 0; i < m.nvars(); ++i) s += static_cast<unsigned long long>(tau.expo()[i]) * m[i];
    out.add_term(m, c * powers[s % r]);
  }
  return out;
}

std::optional<Cyc> proportional(const MPoly& f, const MPoly& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorCode::InvalidArgument,
          "proportionality test needs nonzero polynomials");
  require(f.nvars() == g.nvars(), ErrorCode::DimensionMismatch, "variable counts differ");
  if (f.size() != g.size()) return std::nullopt;
  const Cyc lambda = f.leading_coefficient() / g.leading_coefficient();
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  for (; it != f.terms().end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    if (it->second != lambda * jt->second) return std::nullopt;
  }
  return lambda.demoted();
}

namespace {

struct PolyLess {
  bool operator()(const MPoly& a, const MPoly& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    auto it = a.terms().begin();
    auto jt = b.terms().begin();
    for (; it != a.terms().end(); ++it, ++jt) {
      const int mc = Monomial::compare(it->first, jt->first);
      if (mc != 0) return mc < 0;
      const int cc = Cyc::compare(it->second, jt->second);
      if (cc != 0) return cc < 0;
    }
    return false;
  }
};

}  // namespace

std::vector<MPoly> orbit(const MPoly& f, unsigned r) {
  require(!f.is_zero(), ErrorCode::InvalidArgument, "orbit of the zero polynomial");
  require(f.is_homogeneous(), ErrorCode::InvalidArgument, "orbit needs a homogeneous polynomial");
  require(r >= 1, ErrorCode::InvalidArgument, "group order must be positive");
  const unsigned nv = f.nvars();
  std::vector<GroupElement> generators;
  for (unsigned i = 1; i < nv; ++i) {
    std::vector<unsigned> e(nv, 0);
    e[i] = 1;
    generators.emplace_back(r, std::move(e));
  }
  std::vector<MPoly> out{f.normalized()};
  std::set<MPoly, PolyLess> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      MPoly image = act(g, out[head]).normalized();
      if (seen.insert(image).second) out.push_back(std::move(image));
    }
  }
  return out;
}

MPoly substitute_power(const MPoly& f, unsigned s) {
  require(s >= 1, ErrorCode::InvalidArgument, "substitution power must be positive");
  MPoly out(f.nvars(), f.r_context());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    for (auto& x : e) x *= s;
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

MPoly extract_power(const MPoly& f, unsigned r) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  MPoly out(f.nvars(), f.r_context());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    for (auto& x : e) {
      if (x % r != 0)
        fail(ErrorCode::NotInPowerSubring,
             "exponent " + std::to_string(x) + " is not divisible by " + std::to_string(r));
      x /= r;
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Cyc evaluate(const MPoly& f, const std::vector<Cyc>& point) {
  if (point.size() != f.nvars())
    fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                           " coordinates, polynomial has " +
                                           std::to_string(f.nvars()) + " variables");
  std::vector<std::vector<Cyc>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(Cyc(1L));
  Cyc total;
  for (const auto& [m, c] : f.terms()) {
    Cyc value = c;
    for (unsigned i = 0; i < m.nvars(); ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      value *= pw[e];
    }
    total += value;
  }
  return total.demoted();
}

MPoly compose(const MPoly& f, const std::vector<MPoly>& substitutes) {
  if (substitutes.size() != f.nvars())
    fail(ErrorCode::DimensionMismatch, "substitution list length does not match variable count");
  require(!substitutes.empty(), ErrorCode::InvalidArgument, "nothing to substitute");
  const unsigned nv = substitutes.front().nvars();
  unsigned ctx = f.r_context();
  for (const auto& g : substitutes) {
    require(g.nvars() == nv, ErrorCode::DimensionMismatch, "substitutes have different variable counts");
    ctx = lcm_order(ctx, g.r_context());
  }
  std::vector<std::vector<MPoly>> powers(substitutes.size());
  for (std::size_t i = 0; i < substitutes.size(); ++i)
    powers[i].push_back(MPoly::constant(nv, Cyc(1L)));
  MPoly out(nv, ctx);
  for (const auto& [m, c] : f.terms()) {
    MPoly value = MPoly::constant(nv, c, ctx);
    for (unsigned i = 0; i < m.nvars(); ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * substitutes[i]);
      value = value * pw[e];
    }
    out += value;
  }
  return out;
}

std::set<std::vector<unsigned>> newton_support(const MPoly& f) {
  require(!f.is_zero(), ErrorCode::InvalidArgument, "support of the zero polynomial");
  std::set<std::vector<unsigned>> out;
  for (const auto& t : f.terms()) out.insert(t.first.exponents());
  return out;
}

std::string default_variable_name(unsigned index) { return "x" + std::to_string(index); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned nvars, unsigned r_context)
      : text_(text), nvars_(nvars), r_context_(r_context) {}

  MPoly parse() {
    MPoly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == 'z' || c == '(' || (c >= '0' && c <= '9');
  }

  std::string read_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) throw ParseError("expected an unsigned integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned read_small_uint() {
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.size() > 6) throw ParseError("integer too large", start);
    return static_cast<unsigned>(std::stoul(digits));
  }

  unsigned optional_exponent() {
    if (!peek('^')) return 1;
    ++pos_;
    return read_small_uint();
  }

  MPoly parse_sum() {
    MPoly total(nvars_, r_context_);
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    }
    while (true) {
      MPoly t = parse_product();
      if (negate) total -= t; else total += t;
      if (peek('+')) {
        negate = false;
      } else if (peek('-')) {
        negate = true;
      } else {
        break;
      }
      ++pos_;
    }
    return total;
  }

  MPoly parse_product() {
    if (!starts_factor()) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected a term", pos_);
      throw ParseError(std::string("expected a term, found '") + text_[pos_] + "'", pos_);
    }
    MPoly p = parse_factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) {
          if (pos_ >= text_.size()) throw ParseError("unexpected end of input after '*'", pos_);
          throw ParseError(std::string("expected a factor after '*', found '") + text_[pos_] + "'", pos_);
        }
        p = p * parse_factor();
      } else if (starts_factor() && !at_digit()) {
        p = p * parse_factor();
      } else {
        break;
      }
    }
    return p;
  }

  MPoly parse_factor() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c >= '0' && c <= '9') {
      Integer num(read_digits());
      Rational value(num);
      if (peek('/')) {
        ++pos_;
        const std::size_t dpos = pos_;
        Integer den(read_digits());
        if (den == 0) throw ParseError("zero denominator", dpos);
        value = Rational(num, den);
        value.canonicalize();
      }
      return MPoly::constant(nvars_, Cyc(value), r_context_);
    }
    if (c == 'z') {
      ++pos_;
      if (r_context_ < 2)
        throw ParseError("cyclotomic symbol z needs a root-of-unity order of at least 2", start);
      const unsigned e = optional_exponent();
      return MPoly::constant(nvars_, Cyc::zeta(r_context_, e), r_context_);
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
        throw ParseError("expected a variable index after 'x'", pos_);
      const unsigned index = read_small_uint();
      if (index >= nvars_)
        throw ParseError("variable x" + std::to_string(index) + " outside x0..x" +
                             std::to_string(nvars_ == 0 ? 0 : nvars_ - 1),
                         start);
      const unsigned e = optional_exponent();
      return MPoly::term(Monomial::variable(nvars_, index, e), Cyc(1L), r_context_);
    }
    // c == '('
    ++pos_;
    MPoly inner = parse_sum();
    if (!peek(')')) throw ParseError("expected ')'", pos_);
    ++pos_;
    const unsigned e = optional_exponent();
    return e == 1 ? inner : pow(inner, e);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned nvars_;
  unsigned r_context_;
};

std::string monomial_text(const Monomial& m, const VariableNamer& namer) {
  std::string out;
  for (unsigned i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += namer(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

// Coefficient text including any leading '-'; empty for 1 and "-" for -1.
std::string coefficient_prefix(const Cyc& c, bool constant_term, unsigned r_context) {
  if (c.is_rational()) {
    const Rational& q = c.rational();
    if (constant_term) return q.get_str();
    if (q == 1) return "";
    if (q == -1) return "-";
    return q.get_str() + "*";
  }
  const Cyc p = c.promoted(r_context);
  int single = -1;
  int nonzero = 0;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    if (p.coeffs()[j] != 0) {
      ++nonzero;
      single = static_cast<int>(j);
    }
  std::string body;
  if (nonzero == 1) {
    const Rational& q = p.coeffs()[single];
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    body = neg ? "-" : "";
    if (mag != 1) body += mag.get_str() + "*";
    body += "z";
    if (single > 1) body += "^" + std::to_string(single);
  } else {
    body = p.to_string();
  }
  return constant_term ? body : body + "*";
}

}  // namespace

MPoly parse_poly(std::string_view text, unsigned nvars, unsigned r_context) {
  Parser parser(text, nvars, r_context);
  return parser.parse().demoted();
}

std::string render_poly(const MPoly& f, const VariableNamer& namer) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    const bool constant_term = m.degree() == 0;
    std::string t = coefficient_prefix(it->second, constant_term, f.r_context());
    if (!constant_term) t += monomial_text(m, namer);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace cwp
