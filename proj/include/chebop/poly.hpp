#pragma once

// Exact polynomial containers: bivariate polynomials in the generalized
// cosines (x, y) and exponential sums indexed by weights.

#include "chebop/exact.hpp"
#include "chebop/weyl.hpp"

#include <complex>
#include <map>
#include <string>
#include <string_view>

namespace chebop {

/// x^dx y^dy. Ordered by total degree, then deg_x, both descending, which is
/// the canonical rendering order.
struct Monomial {
  unsigned dx = 0;
  unsigned dy = 0;

  unsigned degree() const { return dx + dy; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.dx > b.dx;
  }
};

enum class Var { X, Y };

class BivarPoly {
 public:
  using Terms = std::map<Monomial, Rational, CanonicalOrder>;

  BivarPoly() = default;
  BivarPoly(Rational constant);

  static BivarPoly monomial(unsigned dx, unsigned dy, Rational c = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(unsigned dx, unsigned dy) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  unsigned degree_in(Var v) const;

  void add_term(const Monomial& m, const Rational& c);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& c);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(BivarPoly a) { return a *= -1; }
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by x^dx y^dy.
  BivarPoly shifted(unsigned dx, unsigned dy) const;

  std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  bool has_integer_coefficients() const;

  /// Canonical text form, e.g. "x^2 - 2*y - 4".
  std::string str() const;

 private:
  Terms terms_;
};

BivarPoly differentiate(const BivarPoly& p, Var v, unsigned order = 1);

/// Parses the canonical text form (sums of `c*x^a*y^b` terms, rational
/// coefficients allowed). Throws std::invalid_argument on malformed input.
BivarPoly parse_poly(std::string_view text);

/// Exact exponential sum  sum_n c_n exp(i (n, phi))  with Gaussian-rational
/// coefficients.
class TrigPoly {
 public:
  using Terms = std::map<Weight, GaussRational>;

  TrigPoly() = default;

  static TrigPoly term(const Weight& w, GaussRational c = Rational(1));
  static TrigPoly constant(int rank, GaussRational c);
  /// Sum over the full Weyl group (with multiplicity) of exp(i (w n, phi)).
  static TrigPoly orbit_sum(AlgebraId id, const Weight& n);
  /// Sum over the distinct orbit elements (orbit_sum / stabilizer order).
  static TrigPoly orbit_distinct_sum(AlgebraId id, const Weight& n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coeff(const Weight& w) const;

  void add_term(const Weight& w, const GaussRational& c);

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(const GaussRational& c);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const GaussRational& c) { return a *= c; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

  /// d/d(phi_u): multiplies each term by i * n_u.
  TrigPoly derivative(int u) const;

  std::complex<double> evaluate(double phi, double psi = 0.0) const;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace chebop
