#include "chebop/simd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace chebop::simd {

namespace detail {

void check_shapes(const ExpSumArgs& args) {
  const std::size_t n = args.phi.size();
  if (args.a.size() != args.b.size() || args.psi.size() != n || args.out_re.size() != n ||
      args.out_im.size() != n)
    throw std::invalid_argument("exp_sum: mismatched span lengths");
}

void check_shapes(const PolyEvalArgs& args) {
  const std::size_t n = args.x_re.size();
  if (args.poly == nullptr) throw std::invalid_argument("poly_eval: null polynomial");
  if (args.x_im.size() != n || args.y_re.size() != n || args.y_im.size() != n ||
      args.out_re.size() != n || args.out_im.size() != n)
    throw std::invalid_argument("poly_eval: mismatched span lengths");
  const auto& p = *args.poly;
  if (p.coef.size() != static_cast<std::size_t>((p.deg_x + 1) * (p.deg_y + 1)))
    throw std::invalid_argument("poly_eval: coefficient table has wrong size");
}

}  // namespace detail

namespace scalar {

void exp_sum(const ExpSumArgs& args) {
  detail::check_shapes(args);
  for (std::size_t p = 0; p < args.phi.size(); ++p) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < args.a.size(); ++k) {
      const double arg = args.a[k] * args.phi[p] + args.b[k] * args.psi[p];
      re += std::cos(arg);
      im += std::sin(arg);
    }
    args.out_re[p] = re;
    args.out_im[p] = im;
  }
}

void poly_eval(const PolyEvalArgs& args) {
  detail::check_shapes(args);
  const DensePoly& poly = *args.poly;
  for (std::size_t p = 0; p < args.x_re.size(); ++p) {
    const double xr = args.x_re[p], xi = args.x_im[p];
    const double yr = args.y_re[p], yi = args.y_im[p];
    double acc_r = 0.0, acc_i = 0.0;
    for (int dx = poly.deg_x; dx >= 0; --dx) {
      double row_r = 0.0, row_i = 0.0;
      for (int dy = poly.deg_y; dy >= 0; --dy) {
        const double tr = row_r * yr - row_i * yi + poly.at(dx, dy);
        row_i = row_r * yi + row_i * yr;
        row_r = tr;
      }
      const double tr = acc_r * xr - acc_i * xi + row_r;
      acc_i = acc_r * xi + acc_i * xr + row_i;
      acc_r = tr;
    }
    args.out_re[p] = acc_r;
    args.out_im[p] = acc_i;
  }
}

}  // namespace scalar
}  // namespace chebop::simd
