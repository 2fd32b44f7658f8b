#pragma once

// Constant-coefficient operators in the angle variables,
//   L = sum_k a_k d^N / d phi^(N-k) d psi^k,
// whose symbol E(m, n) = sum_k a_k m^(N-k) n^k is Weyl invariant. On an
// exponential, L exp(i(m phi + n psi)) = i^N E(m, n) exp(i(m phi + n psi)).

#include "chebop/coeff_rep.hpp"
#include "chebop/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chebop {

/// The symbol E(m, n) carrying the spectrum.
struct Spectrum {
  SymbolVector symbol;

  Rational eigenvalue(const Rational& m, const Rational& n = 0) const { return symbol.evaluate(m, n); }
  Rational eigenvalue(const Weight& w) const;
  std::string str() const { return symbol.str(); }
};

class AngleOperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AngleOperator {
 public:
  /// Throws AngleOperatorError unless a is fixed by every generator.
  AngleOperator(AlgebraId id, SymbolVector a);

  AlgebraId algebra() const { return algebra_; }
  int order() const { return symbol_.order; }
  const SymbolVector& symbol() const { return symbol_; }
  Spectrum spectrum() const { return {symbol_}; }

  /// Termwise action on an exponential sum.
  TrigPoly apply(const TrigPoly& t) const;

  /// "\partial^{2}_{\phi\phi} + ..." rendering.
  std::string latex() const;

 private:
  AlgebraId algebra_;
  SymbolVector symbol_;
};

AngleOperator angle_operator(AlgebraId id, const SymbolVector& a);

/// E(m, n) evaluated exactly.
Rational eigenvalue(const Spectrum& s, const Rational& m, const Rational& n = 0);

/// Symbol of the composition L_a L_b.
AngleOperator compose(const AngleOperator& a, const AngleOperator& b);

struct DecompositionRow {
  int order;
  std::size_t dimension;
  std::size_t product_dimension;
  std::size_t new_generators;
};

struct DecompositionReport {
  AlgebraId algebra;
  std::vector<DecompositionRow> rows;
  /// Orders at which new generators appeared.
  std::vector<int> generator_orders;
  /// generator_orders matches the invariant degrees that are <= N_max.
  bool matches_invariant_degrees;
};

/// For each N <= N_max: dim of the fixed space, dim of the span of products
/// of lower-order invariant symbols, and how many genuinely new generators
/// appear.
DecompositionReport decompose_report(AlgebraId id, int max_order);

}  // namespace chebop
