#pragma once

// Chebyshev polynomials of the first kind attached to a root system, and the
// lifting of Weyl-invariant exponential sums to polynomials in the
// generalized cosines.
//
// Normalization: pi_n = (orbit sum of n) / (stabilizer order of n), i.e. the
// sum over distinct orbit elements. Hence pi_{1,0} = x, pi_{0,1} = y and, for
// A1, pi_n(x) = 2 T_n(x/2) with x = 2 cos(phi).

#include "chebop/poly.hpp"
#include "chebop/weyl.hpp"

#include <map>
#include <stdexcept>

namespace chebop {

using WeightMultiset = std::map<Weight, long>;

/// Dominant representatives of a + w b over all w in W, with multiplicity
/// (|W| entries in total). Encodes Phi_a Phi_b = sum_w Phi_{a + w b}.
WeightMultiset product_decomposition(AlgebraId id, const Weight& a, const Weight& b);

/// Exact pi_n as a polynomial in (x, y). Memoized; safe to call concurrently.
BivarPoly cheb_polynomial(AlgebraId id, const Weight& n);

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique polynomial P with P(x(phi), y(phi)) = t(phi). Throws LiftError
/// if t is not Weyl invariant or the lifted coefficients are not real.
BivarPoly lift_invariant(AlgebraId id, const TrigPoly& t);

/// True when the coefficient map of t is constant on Weyl orbits.
bool is_weyl_invariant(AlgebraId id, const TrigPoly& t);

}  // namespace chebop
