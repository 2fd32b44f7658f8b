#pragma once

// Floating-point evaluation of orbit functions and generalized cosines. This
// is the numeric oracle the exact symbolic results are checked against.
//
// Angles are in radians in the coroot basis: exp(i (n, phi)) with
// (n, phi) = n_1 phi + n_2 psi.

#include "chebop/poly.hpp"
#include "chebop/weyl.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace chebop {

struct AnglePoint {
  double phi = 0.0;
  double psi = 0.0;  // ignored for rank 1
};

/// Generalized cosines. For A2 these are complex conjugates of each other;
/// for A1 only x is meaningful.
struct CosinePoint {
  std::complex<double> x;
  std::complex<double> y;
};

/// sum over the full Weyl group of exp(i (w n, phi)), no 1/|W| factor.
std::complex<double> orbit_sum_eval(AlgebraId id, const Weight& n, AnglePoint p);

/// x_i = orbit_sum(lambda_i) / k_i.
CosinePoint cosine_coords(AlgebraId id, AnglePoint p);

/// orbit_sum(n) / stabilizer_order(n); throws std::invalid_argument for a
/// non-dominant n.
std::complex<double> cheb_eval_numeric(AlgebraId id, const Weight& n, AnglePoint p);

/// Angle point pushed through the contragredient action: phi -> W^T phi.
/// Orbit sums are invariant under it.
AnglePoint transform_angles(const WeylElement& w, AnglePoint p);

/// Fixed-seed uniform samples in [0, 2pi)^rank.
std::vector<AnglePoint> sample_angles(int rank, std::size_t count, std::uint64_t seed);

// Batched variants; these run on the SIMD dispatcher.
std::vector<std::complex<double>> orbit_sum_batch(AlgebraId id, const Weight& n,
                                                  std::span<const AnglePoint> points);
std::vector<CosinePoint> cosine_coords_batch(AlgebraId id, std::span<const AnglePoint> points);
std::vector<std::complex<double>> cheb_eval_numeric_batch(AlgebraId id, const Weight& n,
                                                          std::span<const AnglePoint> points);
std::vector<std::complex<double>> poly_eval_batch(const BivarPoly& p,
                                                  std::span<const CosinePoint> points);

/// Same values as poly_eval_batch, but computed in multiprecision floating
/// point at the given point coordinates. High-degree expansions cancel badly
/// in double; this keeps the only rounding in the inputs.
std::vector<std::complex<double>> poly_eval_precise(const BivarPoly& p,
                                                    std::span<const CosinePoint> points,
                                                    unsigned bits = 256);

/// Oracle tolerance test: |a - b| < tol * (1 + |b|).
bool oracle_close(std::complex<double> a, std::complex<double> b, double tol = 1e-9);

}  // namespace chebop
