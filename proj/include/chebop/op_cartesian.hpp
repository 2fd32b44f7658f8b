#pragma once

// Differential operators in the generalized cosines (x, y):
//   L = sum_alpha P_alpha(x, y) d^alpha,  1 <= |alpha| <= N,
// normalized so that L pi_{m,n} = E(m, n) pi_{m,n} with E the angle symbol.
// Two independent derivations are provided: the chain rule (N = 2) and an
// exact undetermined-coefficient fit (any N).

#include "chebop/op_angle.hpp"
#include "chebop/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebop {

/// d^ax/dx^ax d^ay/dy^ay.
struct DerivIndex {
  unsigned ax = 0;
  unsigned ay = 0;

  unsigned order() const { return ax + ay; }
  friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
};

/// Highest order first, then by ax descending: xx, xy, yy, x, y.
struct DerivOrder {
  bool operator()(const DerivIndex& a, const DerivIndex& b) const {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.ax > b.ax;
  }
};

class CartesianOperator {
 public:
  using Coeffs = std::map<DerivIndex, BivarPoly, DerivOrder>;

  CartesianOperator() = default;
  CartesianOperator(AlgebraId id, Spectrum spectrum) : algebra_(id), spectrum_(std::move(spectrum)) {}

  AlgebraId algebra() const { return algebra_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const Coeffs& coeffs() const { return coeffs_; }
  /// Largest |alpha| with a nonzero coefficient.
  unsigned order() const;

  BivarPoly coeff(unsigned ax, unsigned ay) const;
  /// Zero polynomials are dropped.
  void set_coeff(DerivIndex alpha, BivarPoly p);

  friend bool operator==(const CartesianOperator& a, const CartesianOperator& b) {
    return a.algebra_ == b.algebra_ && a.spectrum_.symbol == b.spectrum_.symbol && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraId algebra_ = AlgebraId::A2;
  Spectrum spectrum_;
  Coeffs coeffs_;
};

BivarPoly apply_operator(const CartesianOperator& op, const BivarPoly& p);

/// Operator product A B (apply B first). The spectrum symbol multiplies.
CartesianOperator compose(const CartesianOperator& a, const CartesianOperator& b);

class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chain-rule change of variables for a second-order angle operator.
CartesianOperator derive_cartesian_chainrule(AlgebraId id, const AngleOperator& op);

struct EigenFailure {
  Weight index;
  BivarPoly residual;
};

struct EigenReport {
  std::size_t checked = 0;
  std::vector<EigenFailure> failures;

  bool ok() const { return failures.empty(); }
  std::size_t passed() const { return checked - failures.size(); }
};

/// Exact check of L pi_{m,n} = E(m,n) pi_{m,n} for 0 <= m <= max_m,
/// 0 <= n <= max_n (n ignored for rank 1). Grid points may be checked in
/// parallel; failures are reported in index order.
EigenReport verify_eigen(const CartesianOperator& op, int max_m, int max_n, bool parallel = true);

/// Check on an explicit index list.
EigenReport verify_eigen_on(const CartesianOperator& op, const std::vector<Weight>& indices,
                            bool parallel = true);

struct UndeterminedOptions {
  /// Training set: all dominant indices with m + n <= bound; -1 means 2N + 2.
  int training_bound = -1;
  /// -1 means max(8, ceil(N * g_max / g_min)) with g the algebra grading;
  /// a coefficient of an order-N operator never needs more.
  int degree_cap = -1;
};

struct UndeterminedResult {
  CartesianOperator op;
  int degree_bound;  // the bound that produced a solution
  std::size_t unknowns;
  std::size_t equations;
  std::size_t rank;
  /// Extra freedom was present; free coefficients were set to zero.
  bool ambiguous;
  std::size_t training_indices;
  EigenReport holdout;
};

/// Fits every coefficient polynomial (total degree <= degree_bound) from the
/// eigen-relation on a training set, escalating the bound up to the cap when
/// the system is infeasible, then checks the result on held-out indices.
UndeterminedResult derive_cartesian_undetermined(AlgebraId id, const Spectrum& spectrum, int order,
                                                 int degree_bound,
                                                 const UndeterminedOptions& options = {});

/// A1 only: rewrite in X = x/2 (so X = cos phi) and flip the sign, which maps
/// (x^2 - 4) d^2 + x d to the classical (1 - X^2) d^2 - X d.
CartesianOperator classical_a1_form(const CartesianOperator& op);

}  // namespace chebop
