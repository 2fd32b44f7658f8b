#include "chebop/simd/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace chebop::simd::neon {

namespace {

constexpr std::size_t kLanes = 2;

struct CVec {
  float64x2_t re;
  float64x2_t im;
};

inline CVec cmul(CVec a, CVec b) {
  return {vfmsq_f64(vmulq_f64(a.re, b.re), a.im, b.im), vfmaq_f64(vmulq_f64(a.re, b.im), a.im, b.re)};
}

inline CVec upow(CVec z, int e) {
  if (e < 0) {
    z.im = vnegq_f64(z.im);
    e = -e;
  }
  CVec r{vdupq_n_f64(1.0), vdupq_n_f64(0.0)};
  while (e > 0) {
    if (e & 1) r = cmul(r, z);
    e >>= 1;
    if (e) z = cmul(z, z);
  }
  return r;
}

template <typename Fn>
void for_each_block(std::size_t n, Fn&& fn) {
  for (std::size_t base = 0; base < n; base += kLanes) fn(base, std::min(kLanes, n - base));
}

}  // namespace

void exp_sum(const ExpSumArgs& args) {
  detail::check_shapes(args);
  for_each_block(args.phi.size(), [&](std::size_t base, std::size_t count) {
    double c1[kLanes] = {1, 1}, s1[kLanes] = {}, c2[kLanes] = {1, 1}, s2[kLanes] = {};
    for (std::size_t l = 0; l < count; ++l) {
      c1[l] = std::cos(args.phi[base + l]);
      s1[l] = std::sin(args.phi[base + l]);
      c2[l] = std::cos(args.psi[base + l]);
      s2[l] = std::sin(args.psi[base + l]);
    }
    const CVec z1{vld1q_f64(c1), vld1q_f64(s1)};
    const CVec z2{vld1q_f64(c2), vld1q_f64(s2)};
    CVec acc{vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    for (std::size_t k = 0; k < args.a.size(); ++k) {
      const CVec t = cmul(upow(z1, args.a[k]), upow(z2, args.b[k]));
      acc.re = vaddq_f64(acc.re, t.re);
      acc.im = vaddq_f64(acc.im, t.im);
    }
    double re[kLanes], im[kLanes];
    vst1q_f64(re, acc.re);
    vst1q_f64(im, acc.im);
    for (std::size_t l = 0; l < count; ++l) {
      args.out_re[base + l] = re[l];
      args.out_im[base + l] = im[l];
    }
  });
}

void poly_eval(const PolyEvalArgs& args) {
  detail::check_shapes(args);
  const DensePoly& poly = *args.poly;
  for_each_block(args.x_re.size(), [&](std::size_t base, std::size_t count) {
    double buf[4][kLanes] = {};
    for (std::size_t l = 0; l < count; ++l) {
      buf[0][l] = args.x_re[base + l];
      buf[1][l] = args.x_im[base + l];
      buf[2][l] = args.y_re[base + l];
      buf[3][l] = args.y_im[base + l];
    }
    const CVec x{vld1q_f64(buf[0]), vld1q_f64(buf[1])};
    const CVec y{vld1q_f64(buf[2]), vld1q_f64(buf[3])};
    CVec acc{vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    for (int dx = poly.deg_x; dx >= 0; --dx) {
      CVec row{vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
      for (int dy = poly.deg_y; dy >= 0; --dy) {
        row = cmul(row, y);
        row.re = vaddq_f64(row.re, vdupq_n_f64(poly.at(dx, dy)));
      }
      acc = cmul(acc, x);
      acc.re = vaddq_f64(acc.re, row.re);
      acc.im = vaddq_f64(acc.im, row.im);
    }
    double re[kLanes], im[kLanes];
    vst1q_f64(re, acc.re);
    vst1q_f64(im, acc.im);
    for (std::size_t l = 0; l < count; ++l) {
      args.out_re[base + l] = re[l];
      args.out_im[base + l] = im[l];
    }
  });
}

}  // namespace chebop::simd::neon
