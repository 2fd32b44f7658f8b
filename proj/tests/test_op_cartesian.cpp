#include "chebop/cheb.hpp"
#include "chebop/op_cartesian.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace chebop;

namespace {

struct Fixture {
  AlgebraId id;
  SymbolVector symbol;
  std::vector<std::pair<DerivIndex, const char*>> coeffs;
};

// Operators as printed, normalized to L pi = +E pi.
const std::vector<Fixture>& printed() {
  static const std::vector<Fixture> f{
      {AlgebraId::A2,
       SymbolVector(2, {1, 1, 1}),
       {{{2, 0}, "x^2 - 3*y"}, {{1, 1}, "x*y - 9"}, {{0, 2}, "y^2 - 3*x"}, {{1, 0}, "x"}, {{0, 1}, "y"}}},
      {AlgebraId::C2,
       SymbolVector(2, {1, 2, 2}),
       {{{2, 0}, "x^2 - 2*y - 8"}, {{1, 1}, "2*x*y - 8*x"}, {{0, 2}, "-4*x^2 + 2*y^2 + 8*y"}, {{1, 0}, "x"},
        {{0, 1}, "2*y"}}},
      {AlgebraId::G2,
       SymbolVector(2, {1, 3, 3}),
       {{{2, 0}, "x^2 - 3*x - y - 12"},
        {{1, 1}, "-6*x^2 + 3*x*y + 12*y + 36"},
        {{0, 2}, "-3*x^3 + 9*x*y + 3*y^2 + 27*x + 9*y"},
        {{1, 0}, "x"},
        {{0, 1}, "3*y"}}},
      {AlgebraId::A1, SymbolVector(2, {1}), {{{2, 0}, "x^2 - 4"}, {{1, 0}, "x"}}},
  };
  return f;
}

CartesianOperator build(const Fixture& f) {
  CartesianOperator op(f.id, Spectrum{f.symbol});
  for (const auto& [alpha, s] : f.coeffs) op.set_coeff(alpha, parse_poly(s));
  return op;
}

BivarPoly random_poly(std::mt19937_64& rng, int degree, bool rank_one) {
  std::uniform_int_distribution<int> c(-4, 4);
  BivarPoly p;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      if (rank_one && b > 0) continue;
      p.add_term({static_cast<unsigned>(a), static_cast<unsigned>(b)}, Rational(c(rng)));
    }
  return p;
}

// The operator pushed forward to angles: for any polynomial p,
// L_angle (p o cos) = i^N (L p) o cos.
void check_pushforward(const CartesianOperator& op, int N, int samples) {
  const AlgebraId id = op.algebra();
  const AngleOperator angle(id, op.spectrum().symbol);
  std::mt19937_64 rng(static_cast<unsigned>(N) * 31 + static_cast<unsigned>(id));
  for (int t = 0; t < samples; ++t) {
    const BivarPoly p = random_poly(rng, 3, id == AlgebraId::A1);
    CHECK(angle.apply(oracle::compose(id, p)) == oracle::compose(id, apply_operator(op, p)) * i_pow(N));
  }
}

}  // namespace

TEST_CASE("apply_operator examples") {
  const CartesianOperator a2 = build(printed()[0]);
  const BivarPoly xy3 = parse_poly("x*y - 3");
  CHECK(apply_operator(a2, xy3) == xy3 * Rational(3));
  const CartesianOperator c2 = build(printed()[1]);
  const BivarPoly c20 = parse_poly("x^2 - 2*y - 4");
  CHECK(apply_operator(c2, c20) == c20 * Rational(4));
  CHECK(apply_operator(a2, BivarPoly(Rational(7))).is_zero());
  CHECK(a2.order() == 2);
  CHECK(a2.coeff(1, 1) == parse_poly("x*y - 9"));
  CHECK(a2.coeff(3, 0).is_zero());
}

TEST_CASE("chain rule reproduces the printed operators") {
  for (const auto& f : printed()) {
    CAPTURE(name(f.id));
    const CartesianOperator derived = derive_cartesian_chainrule(f.id, angle_operator(f.id, f.symbol));
    CHECK(derived == build(f));
  }
  CHECK_THROWS_AS(derive_cartesian_chainrule(AlgebraId::A2, angle_operator(AlgebraId::A2, SymbolVector(3, {2, 3, -3, -2}))),
                  DerivationError);
}

TEST_CASE("undetermined coefficients agree with the chain rule at order two") {
  for (const auto& f : printed()) {
    CAPTURE(name(f.id));
    const auto r = derive_cartesian_undetermined(f.id, Spectrum{f.symbol}, 2, 2);
    CHECK(r.op == derive_cartesian_chainrule(f.id, angle_operator(f.id, f.symbol)));
    CHECK_FALSE(r.ambiguous);
    CHECK(r.holdout.ok());
  }
}

TEST_CASE("printed operators satisfy the eigen relation exactly") {
  for (const auto& f : printed()) {
    CAPTURE(name(f.id));
    const CartesianOperator op = build(f);
    const auto rep = verify_eigen(op, 6, 6);
    CHECK(rep.ok());
    CHECK(rep.checked == (f.id == AlgebraId::A1 ? 7u : 49u));
    check_pushforward(op, 2, 10);
  }
}

TEST_CASE("a corrupted coefficient is caught") {
  Fixture f = printed()[0];
  f.coeffs[1].second = "x*y - 8";
  const auto rep = verify_eigen(build(f), 6, 6, false);
  CHECK_FALSE(rep.ok());
  // The residual is exactly the extra d^2/dxdy term; it fails wherever that is nonzero.
  std::size_t expected = 0;
  for (long m = 0; m <= 6; ++m)
    for (long n = 0; n <= 6; ++n)
      if (!differentiate(differentiate(cheb_polynomial(AlgebraId::A2, Weight{m, n}), Var::X), Var::Y).is_zero())
        ++expected;
  CHECK(rep.failures.size() == expected);
  for (const auto& fail : rep.failures)
    CHECK(fail.residual == differentiate(differentiate(cheb_polynomial(AlgebraId::A2, fail.index), Var::X), Var::Y));
  CHECK(rep.failures.front().index == Weight{0, 3});
  // pi_{1,0} = x has no mixed derivative, so it still passes.
  CHECK(verify_eigen_on(build(f), {Weight{1, 0}, Weight{0, 1}}).ok());
}

TEST_CASE("C2 order four operators") {
  for (const SymbolVector& s : {SymbolVector(4, {1, 4, 4, 0, 0}), SymbolVector(4, {0, 0, 1, 2, 1})}) {
    CAPTURE(s.str());
    const auto r = derive_cartesian_undetermined(AlgebraId::C2, Spectrum{s}, 4, 4);
    CHECK(r.op.order() == 4);
    CHECK(verify_eigen(r.op, 6, 6).ok());
    CHECK(r.holdout.ok());
    check_pushforward(r.op, 4, 4);
  }
  CHECK_THROWS(derive_cartesian_undetermined(AlgebraId::C2, Spectrum{SymbolVector(4, {1, 4, 1, 0, 0})}, 4, 4));
}

TEST_CASE("fit of a product symbol equals the composed operator") {
  for (auto id : kRankTwoAlgebras) {
    CAPTURE(name(id));
    const SymbolVector s = fixed_space(id, 2).front();
    const CartesianOperator L = derive_cartesian_chainrule(id, angle_operator(id, s));
    const CartesianOperator LL = compose(L, L);
    CHECK(LL.spectrum().symbol == symbol_product(s, s));
    const auto r = derive_cartesian_undetermined(id, Spectrum{symbol_product(s, s)}, 4, 4);
    CHECK(r.op == LL);
    for (long m = 0; m <= 4; ++m)
      for (long n = 0; n <= 4; ++n) {
        const BivarPoly p = cheb_polynomial(id, Weight{m, n});
        CHECK(apply_operator(r.op, p) == apply_operator(L, apply_operator(L, p)));
      }
  }
}

TEST_CASE("order three for A2") {
  const SymbolVector s(3, {2, 3, -3, -2});
  const auto r = derive_cartesian_undetermined(AlgebraId::A2, Spectrum{s}, 3, 3);
  CHECK(verify_eigen(r.op, 6, 6).ok());
  check_pushforward(r.op, 3, 4);
}

TEST_CASE("A1 classical form") {
  const CartesianOperator op = derive_cartesian_chainrule(AlgebraId::A1, angle_operator(AlgebraId::A1, SymbolVector(2, {1})));
  CHECK(op.coeff(2, 0) == parse_poly("x^2 - 4"));
  CHECK(op.coeff(1, 0) == parse_poly("x"));
  for (long n = 0; n <= 8; ++n) CHECK(op.spectrum().eigenvalue(n) == n * n);
  const CartesianOperator c = classical_a1_form(op);
  CHECK(c.coeff(2, 0) == parse_poly("-x^2 + 1"));
  CHECK(c.coeff(1, 0) == parse_poly("-x"));
  CHECK_THROWS(classical_a1_form(build(printed()[0])));
}
