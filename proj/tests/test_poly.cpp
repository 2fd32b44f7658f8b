#include "chebop/linalg.hpp"
#include "chebop/poly.hpp"

#include <doctest.h>

#include <random>

using namespace chebop;

namespace {

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("canonical rendering") {
  BivarPoly p = BivarPoly::x() * BivarPoly::x() - BivarPoly::y() * Rational(2) - BivarPoly(Rational(4));
  CHECK(p.str() == "x^2 - 2*y - 4");
  CHECK((BivarPoly::x() * BivarPoly::y() - BivarPoly(Rational(3))).str() == "x*y - 3");
  CHECK(BivarPoly().str() == "0");
  CHECK(BivarPoly::monomial(1, 0, Rational(3, 2)).str() == "3/2*x");
  CHECK(BivarPoly::monomial(0, 0, Rational(-1, 3)).str() == "-1/3");
  // Degree descending, then x-degree descending.
  const BivarPoly q = BivarPoly::y() + BivarPoly::monomial(0, 2) + BivarPoly::monomial(2, 0) + BivarPoly::x();
  CHECK(q.str() == "x^2 + y^2 + x + y");
}

TEST_CASE("parse round trip") {
  for (const char* s : {"x^2 - 2*y - 4", "x*y - 3", "x", "-3*x^3 + 9*x*y + 3*y^2 + 27*x + 9*y", "0", "-1/3*x^2*y + 7/2",
                        "y^5 - 12"})
    CHECK(parse_poly(s).str() == s);
  CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x + + y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("z"), std::invalid_argument);
}

TEST_CASE("random polynomials round trip through text") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-20, 20), deg(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    BivarPoly p;
    for (int k = 0; k < 6; ++k)
      p.add_term({static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng))}, frac(coef(rng), 1 + deg(rng)));
    CHECK(parse_poly(p.str()) == p);
  }
}

TEST_CASE("arithmetic and differentiation") {
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  const BivarPoly p = x * x * y - x * Rational(3) + BivarPoly(Rational(5));
  CHECK(differentiate(p, Var::X) == x * y * Rational(2) - BivarPoly(Rational(3)));
  CHECK(differentiate(p, Var::Y) == x * x);
  CHECK(differentiate(p, Var::X, 3).is_zero());
  CHECK(p.degree() == 3);
  CHECK(BivarPoly().degree() == -1);
  CHECK(p.degree_in(Var::X) == 2);
  CHECK(p.shifted(1, 1) == p * (x * y));
  CHECK(p.evaluate(Rational(2), Rational(1)) == 4 - 6 + 5);
  CHECK(((x + y) * (x - y)) == x * x - y * y);
  CHECK(p.has_integer_coefficients());
  CHECK_FALSE((p * Rational(1, 2)).has_integer_coefficients());
}

TEST_CASE("exponential sums") {
  const TrigPoly a = TrigPoly::term(Weight{1, 0});
  const TrigPoly b = TrigPoly::term(Weight{0, 1}, GaussRational(Rational(2)));
  const TrigPoly prod = a * b;
  CHECK(prod.coeff(Weight{1, 1}) == GaussRational(Rational(2)));
  // d/dphi exp(i(m phi + n psi)) = i m exp(...)
  const TrigPoly d = TrigPoly::term(Weight{3, -2}).derivative(0);
  CHECK(d.coeff(Weight{3, -2}) == GaussRational(Rational(0), Rational(3)));
  CHECK(TrigPoly::term(Weight{3, -2}).derivative(1).coeff(Weight{3, -2}) == GaussRational(Rational(0), Rational(-2)));
  CHECK((a - a).is_zero());
  const TrigPoly s = TrigPoly::orbit_sum(AlgebraId::A2, Weight{1, 0});
  CHECK(s.terms().size() == 3);
  CHECK(s.coeff(Weight{1, 0}) == GaussRational(Rational(2)));
  CHECK(TrigPoly::orbit_distinct_sum(AlgebraId::A2, Weight{1, 0}).coeff(Weight{0, -1}) == GaussRational(Rational(1)));
  const auto v = TrigPoly::orbit_sum(AlgebraId::C2, Weight{1, 1}).evaluate(0.0, 0.0);
  CHECK(v.real() == doctest::Approx(8.0));
}

TEST_CASE("gaussian rationals") {
  const GaussRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussRational(Rational(-1)));
  CHECK(i_pow(2) == GaussRational(Rational(-1)));
  CHECK(i_pow(3) == GaussRational(Rational(0), Rational(-1)));
  CHECK(i_pow(4) == GaussRational(Rational(1)));
  CHECK((i + GaussRational(Rational(1))).str() == "(1+1i)");
  CHECK(GaussRational(Rational(0), Rational(-2)).str() == "-2i");
}

TEST_CASE("exact helpers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(is_integer(frac(4, 2)));
  CHECK_FALSE(is_integer(frac(3, 2)));
  CHECK(fits_i64(BigInt("9223372036854775807")));
  CHECK_FALSE(fits_i64(BigInt("9223372036854775808")));
}

TEST_CASE("rref and nullspace") {
  const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == RationalMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(m.apply(ns[0]) == RationalVector(3, Rational(0)));
  CHECK(rank_of({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  CHECK(matrix_power(RationalMatrix{{0, 1}, {1, 0}}, 2).is_identity());
}

TEST_CASE("random nullspaces are annihilated") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = e(rng);
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank_of({m.row(0), m.row(1), m.row(2)}) == 5);
    for (const auto& v : ns) CHECK(m.apply(v) == RationalVector(3, Rational(0)));
  }
}

TEST_CASE("incremental solver") {
  IncrementalSolver s(3);
  s.add_equation({{0, Rational(1)}, {1, Rational(1)}}, Rational(3));
  s.add_equation({{1, Rational(1)}, {2, Rational(-1)}}, Rational(1));
  CHECK(s.consistent());
  CHECK(s.rank() == 2);
  CHECK(s.free_variables() == std::vector<std::size_t>{2});
  const auto x = s.solve();
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 3);
  CHECK((*x)[1] - (*x)[2] == 1);
  CHECK((*x)[2] == 0);  // free variable set to zero
  s.add_equation({{0, Rational(1)}, {2, Rational(-1)}}, Rational(0));  // x0 = x2 -> unique
  CHECK(s.rank() == 3);
  CHECK(*s.solve() == RationalVector{Rational(1), Rational(2), Rational(1)});
  s.add_equation({{0, Rational(2)}, {1, Rational(2)}}, Rational(5));  // contradicts 2*(x0+x1)=6
  CHECK_FALSE(s.consistent());
  CHECK_FALSE(s.solve().has_value());
}
