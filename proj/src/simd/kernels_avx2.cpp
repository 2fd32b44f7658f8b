#include "chebop/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace chebop::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

struct CVec {
  __m256d re;
  __m256d im;
};

inline CVec cmul(CVec a, CVec b) {
  // (ar + i ai)(br + i bi)
  return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
          _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

/// z^e for unit-modulus z; negative exponents use the conjugate.
inline CVec upow(CVec z, int e) {
  if (e < 0) {
    z.im = _mm256_sub_pd(_mm256_setzero_pd(), z.im);
    e = -e;
  }
  CVec r{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  while (e > 0) {
    if (e & 1) r = cmul(r, z);
    e >>= 1;
    if (e) z = cmul(z, z);
  }
  return r;
}

// Lanes [0, count) come from the input; the rest are padding.
template <typename Fn>
void for_each_block(std::size_t n, Fn&& fn) {
  for (std::size_t base = 0; base < n; base += kLanes) fn(base, std::min(kLanes, n - base));
}

}  // namespace

void exp_sum(const ExpSumArgs& args) {
  detail::check_shapes(args);
  for_each_block(args.phi.size(), [&](std::size_t base, std::size_t count) {
    alignas(32) double c1[kLanes] = {1, 1, 1, 1}, s1[kLanes] = {}, c2[kLanes] = {1, 1, 1, 1},
                       s2[kLanes] = {};
    for (std::size_t l = 0; l < count; ++l) {
      c1[l] = std::cos(args.phi[base + l]);
      s1[l] = std::sin(args.phi[base + l]);
      c2[l] = std::cos(args.psi[base + l]);
      s2[l] = std::sin(args.psi[base + l]);
    }
    const CVec z1{_mm256_load_pd(c1), _mm256_load_pd(s1)};
    const CVec z2{_mm256_load_pd(c2), _mm256_load_pd(s2)};
    CVec acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (std::size_t k = 0; k < args.a.size(); ++k) {
      const CVec t = cmul(upow(z1, args.a[k]), upow(z2, args.b[k]));
      acc.re = _mm256_add_pd(acc.re, t.re);
      acc.im = _mm256_add_pd(acc.im, t.im);
    }
    alignas(32) double re[kLanes], im[kLanes];
    _mm256_store_pd(re, acc.re);
    _mm256_store_pd(im, acc.im);
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
    alignas(32) double buf[4][kLanes] = {};
    for (std::size_t l = 0; l < count; ++l) {
      buf[0][l] = args.x_re[base + l];
      buf[1][l] = args.x_im[base + l];
      buf[2][l] = args.y_re[base + l];
      buf[3][l] = args.y_im[base + l];
    }
    const CVec x{_mm256_load_pd(buf[0]), _mm256_load_pd(buf[1])};
    const CVec y{_mm256_load_pd(buf[2]), _mm256_load_pd(buf[3])};
    CVec acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (int dx = poly.deg_x; dx >= 0; --dx) {
      CVec row{_mm256_setzero_pd(), _mm256_setzero_pd()};
      for (int dy = poly.deg_y; dy >= 0; --dy) {
        row = cmul(row, y);
        row.re = _mm256_add_pd(row.re, _mm256_set1_pd(poly.at(dx, dy)));
      }
      acc = cmul(acc, x);
      acc.re = _mm256_add_pd(acc.re, row.re);
      acc.im = _mm256_add_pd(acc.im, row.im);
    }
    alignas(32) double re[kLanes], im[kLanes];
    _mm256_store_pd(re, acc.re);
    _mm256_store_pd(im, acc.im);
    for (std::size_t l = 0; l < count; ++l) {
      args.out_re[base + l] = re[l];
      args.out_im[base + l] = im[l];
    }
  });
}

}  // namespace chebop::simd::avx2
