#include "chebop/poly.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace chebop {

// --- BivarPoly ------------------------------------------------------------

BivarPoly::BivarPoly(Rational constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

BivarPoly BivarPoly::monomial(unsigned dx, unsigned dy, Rational c) {
  BivarPoly p;
  p.add_term({dx, dy}, c);
  return p;
}

Rational BivarPoly::coeff(unsigned dx, unsigned dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

unsigned BivarPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::X ? m.dx : m.dy);
  return d;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
  return r;
}

BivarPoly BivarPoly::shifted(unsigned dx, unsigned dy) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.dx + dx, m.dy + dy}, c);
  return r;
}

std::complex<double> BivarPoly::evaluate(std::complex<double> x, std::complex<double> y) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_)
    sum += c.get_d() * std::pow(x, static_cast<int>(m.dx)) * std::pow(y, static_cast<int>(m.dy));
  return sum;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) sum += c * pow(x, m.dx) * pow(y, m.dy);
  return sum;
}

bool BivarPoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  auto factor = [&s](char var, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor('x', m.dx);
  factor('y', m.dy);
  return s;
}

}  // namespace

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_str(m);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

BivarPoly differentiate(const BivarPoly& p, Var v, unsigned order) {
  BivarPoly r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = v == Var::X ? m.dx : m.dy;
    if (e < order) continue;
    Rational f = c;
    for (unsigned k = 0; k < order; ++k) f *= e - k;
    Monomial d = m;
    (v == Var::X ? d.dx : d.dy) -= order;
    r.add_term(d, f);
  }
  return r;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  BivarPoly parse() {
    BivarPoly out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = parse_term();
      out.add_term(mono, coeff * sign);
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m;
    Rational c = 1;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_number();
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(parse_uint().get_ui());
        }
        (ch == 'x' ? m.dx : m.dy) += e;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {m, c};
  }

  Rational parse_number() {
    Rational r(parse_uint());
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      BigInt den = parse_uint();
      if (den == 0) fail("zero denominator");
      r /= Rational(den);
    }
    return r;
  }

  BigInt parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// --- TrigPoly -------------------------------------------------------------

TrigPoly TrigPoly::term(const Weight& w, GaussRational c) {
  TrigPoly t;
  t.add_term(w, c);
  return t;
}

TrigPoly TrigPoly::constant(int rank, GaussRational c) { return term(Weight::zero(rank), c); }

TrigPoly TrigPoly::orbit_sum(AlgebraId id, const Weight& n) {
  TrigPoly t;
  for (const WeylElement& w : weyl_group(id)) t.add_term(w.apply(n), Rational(1));
  return t;
}

TrigPoly TrigPoly::orbit_distinct_sum(AlgebraId id, const Weight& n) {
  TrigPoly t;
  for (const Weight& w : orbit(id, n).elements) t.add_term(w, Rational(1));
  return t;
}

GaussRational TrigPoly::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussRational{} : it->second;
}

void TrigPoly::add_term(const Weight& w, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v = v * c;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

TrigPoly TrigPoly::derivative(int u) const {
  TrigPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, c * GaussRational(0, Rational(w[u])));
  return r;
}

std::complex<double> TrigPoly::evaluate(double phi, double psi) const {
  std::complex<double> sum = 0;
  for (const auto& [w, c] : terms_) {
    double arg = w[0].get_d() * phi;
    if (w.rank() > 1) arg += w[1].get_d() * psi;
    sum += std::complex<double>(c.re.get_d(), c.im.get_d()) * std::polar(1.0, arg);
  }
  return sum;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*e" + w.str();
  }
  return out;
}

}  // namespace chebop
