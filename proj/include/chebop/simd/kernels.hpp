#pragma once

// Batched floating-point kernels behind the numeric oracle. Each kernel has a
// scalar reference implementation plus AVX2/FMA and NEON variants; the
// dispatcher picks the best one the running CPU supports.

#include <span>
#include <string_view>
#include <vector>

namespace chebop::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
/// Compiled into this build and supported by the running CPU.
bool isa_available(Isa isa);
Isa best_isa();
Isa active_isa();
/// Override the dispatcher (tests, benchmarks). Throws std::invalid_argument
/// if the ISA is not available.
void set_active_isa(Isa isa);

/// Dense coefficient table: coef[dx * (deg_y + 1) + dy] multiplies x^dx y^dy.
struct DensePoly {
  int deg_x = 0;
  int deg_y = 0;
  std::vector<double> coef;

  double at(int dx, int dy) const { return coef[dx * (deg_y + 1) + dy]; }
};

/// out[p] = sum_k exp(i (a[k] phi[p] + b[k] psi[p])).
struct ExpSumArgs {
  std::span<const int> a;
  std::span<const int> b;
  std::span<const double> phi;
  std::span<const double> psi;
  std::span<double> out_re;
  std::span<double> out_im;
};

/// out[p] = P(x[p], y[p]) for complex x, y given as split re/im arrays.
struct PolyEvalArgs {
  const DensePoly* poly;
  std::span<const double> x_re;
  std::span<const double> x_im;
  std::span<const double> y_re;
  std::span<const double> y_im;
  std::span<double> out_re;
  std::span<double> out_im;
};

void exp_sum(const ExpSumArgs& args);
void poly_eval(const PolyEvalArgs& args);

namespace scalar {
void exp_sum(const ExpSumArgs& args);
void poly_eval(const PolyEvalArgs& args);
}  // namespace scalar

namespace avx2 {
void exp_sum(const ExpSumArgs& args);
void poly_eval(const PolyEvalArgs& args);
}  // namespace avx2

namespace neon {
void exp_sum(const ExpSumArgs& args);
void poly_eval(const PolyEvalArgs& args);
}  // namespace neon

namespace detail {
void check_shapes(const ExpSumArgs& args);
void check_shapes(const PolyEvalArgs& args);
}  // namespace detail

}  // namespace chebop::simd
