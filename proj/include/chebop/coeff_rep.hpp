#pragma once

// Weyl action on the coefficient vectors of homogeneous degree-N symbols
// q(m, n) = sum_k a_k m^(N-k) n^k, and the exact joint fixed space of that
// action. For rank 1 a symbol is the single coefficient of m^N.

#include "chebop/linalg.hpp"
#include "chebop/poly.hpp"
#include "chebop/weyl.hpp"

#include <string>
#include <vector>

namespace chebop {

struct SymbolVector {
  int order = 0;
  RationalVector coeffs;

  SymbolVector() = default;
  SymbolVector(int n, RationalVector a) : order(n), coeffs(std::move(a)) {}
  SymbolVector(int n, std::initializer_list<long> a);

  bool is_zero() const;
  /// Number of variables the symbol is written in (1 for rank-1 symbols).
  int rank() const { return coeffs.size() == 1 && order > 0 ? 1 : 2; }

  /// q as a polynomial, with x standing for m and y for n.
  BivarPoly as_poly() const;
  static SymbolVector from_poly(const BivarPoly& q, int order, int rank);

  Rational evaluate(const Rational& m, const Rational& n = 0) const;

  /// "m^2+mn+n^2" style rendering of E(m, n).
  std::string str() const;

  friend bool operator==(const SymbolVector&, const SymbolVector&) = default;
};

/// Length of a degree-N coefficient vector for the algebra.
std::size_t symbol_length(AlgebraId id, int order);

/// Scaled to primitive integers with first nonzero entry positive. Throws
/// std::invalid_argument for the zero vector.
SymbolVector canonicalize(const SymbolVector& v);

/// Product of two symbols (composition of constant-coefficient operators).
SymbolVector symbol_product(const SymbolVector& a, const SymbolVector& b);

/// M_w with M_w a = coefficients of q_a(w (m, n)). Precomposition makes
/// w -> M_w an anti-homomorphism: M_u M_v = M_{v u}.
RationalMatrix substitution_matrix(AlgebraId id, const WeylElement& w, int order);

/// q(w(m, n)) for the symbol, as a polynomial in (m, n).
BivarPoly substitute(const SymbolVector& q, const WeylElement& w);

/// Symbolic check q(w(m, n)) == q(m, n) for every element of W.
bool is_invariant_symbol(AlgebraId id, const SymbolVector& q);

/// Basis of ker(M_1 - I) intersected with ker(M_2 - I), in reduced row
/// echelon form with each row canonicalized.
std::vector<SymbolVector> fixed_space(AlgebraId id, int order);

/// Coefficient of t^N in prod_i 1 / (1 - t^{d_i}).
long molien_dimension(AlgebraId id, int order);

struct RelationCheck {
  std::string relation;
  bool holds;
  std::string note;
};

struct RepresentationReport {
  AlgebraId algebra;
  int order;
  std::vector<RelationCheck> relations;
  /// Words of the group elements acting as the identity / as -identity.
  std::vector<std::string> kernel;
  std::vector<std::string> acts_as_minus_identity;
  bool faithful;

  bool all_hold() const;
  const RelationCheck* find(const std::string& relation) const&;
  const RelationCheck* find(const std::string& relation) const&& = delete;
};

RepresentationReport verify_representation(AlgebraId id, int order);

}  // namespace chebop
