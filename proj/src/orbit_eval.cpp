#include "chebop/orbit_eval.hpp"

#include "chebop/simd/kernels.hpp"

#include <gmpxx.h>

#include <numbers>
#include <random>
#include <stdexcept>

namespace chebop {

namespace {

int to_int(const BigInt& v) {
  if (!v.fits_sint_p()) throw std::overflow_error("weight coordinate too large for evaluation");
  return static_cast<int>(v.get_si());
}

double pairing(const Weight& w, AnglePoint p) {
  double s = w[0].get_d() * p.phi;
  if (w.rank() > 1) s += w[1].get_d() * p.psi;
  return s;
}

/// Flattened Weyl images of n (full group, with multiplicity).
void exponent_table(AlgebraId id, const Weight& n, std::vector<int>& a, std::vector<int>& b) {
  const auto& group = weyl_group(id);
  a.clear();
  b.clear();
  for (const WeylElement& w : group) {
    const Weight img = w.apply(n);
    a.push_back(to_int(img[0]));
    b.push_back(img.rank() > 1 ? to_int(img[1]) : 0);
  }
}

}  // namespace

std::complex<double> orbit_sum_eval(AlgebraId id, const Weight& n, AnglePoint p) {
  std::complex<double> sum = 0;
  for (const WeylElement& w : weyl_group(id)) sum += std::polar(1.0, pairing(w.apply(n), p));
  return sum;
}

CosinePoint cosine_coords(AlgebraId id, AnglePoint p) {
  const AlgebraSpec& s = algebra_spec(id);
  CosinePoint c;
  c.x = orbit_sum_eval(id, Weight::fundamental(s.rank, 0), p) /
        static_cast<double>(s.stabilizer_normalizers[0]);
  if (s.rank > 1)
    c.y = orbit_sum_eval(id, Weight::fundamental(s.rank, 1), p) /
          static_cast<double>(s.stabilizer_normalizers[1]);
  return c;
}

std::complex<double> cheb_eval_numeric(AlgebraId id, const Weight& n, AnglePoint p) {
  if (!n.is_dominant()) throw std::invalid_argument("cheb_eval_numeric: non-dominant weight " + n.str());
  return orbit_sum_eval(id, n, p) / static_cast<double>(orbit(id, n).stabilizer_order);
}

AnglePoint transform_angles(const WeylElement& w, AnglePoint p) {
  const IntMatrix& m = w.matrix;
  if (m.rows() == 1) return {m(0, 0).get_d() * p.phi, 0.0};
  return {m(0, 0).get_d() * p.phi + m(1, 0).get_d() * p.psi,
          m(0, 1).get_d() * p.phi + m(1, 1).get_d() * p.psi};
}

std::vector<AnglePoint> sample_angles(int rank, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  std::vector<AnglePoint> out(count);
  for (auto& p : out) {
    p.phi = dist(rng);
    p.psi = rank > 1 ? dist(rng) : 0.0;
  }
  return out;
}

std::vector<std::complex<double>> orbit_sum_batch(AlgebraId id, const Weight& n,
                                                  std::span<const AnglePoint> points) {
  std::vector<int> a, b;
  exponent_table(id, n, a, b);
  const std::size_t count = points.size();
  std::vector<double> phi(count), psi(count), re(count), im(count);
  for (std::size_t i = 0; i < count; ++i) {
    phi[i] = points[i].phi;
    psi[i] = points[i].psi;
  }
  simd::exp_sum({a, b, phi, psi, re, im});
  std::vector<std::complex<double>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {re[i], im[i]};
  return out;
}

std::vector<CosinePoint> cosine_coords_batch(AlgebraId id, std::span<const AnglePoint> points) {
  const AlgebraSpec& s = algebra_spec(id);
  const auto xs = orbit_sum_batch(id, Weight::fundamental(s.rank, 0), points);
  std::vector<std::complex<double>> ys;
  if (s.rank > 1) ys = orbit_sum_batch(id, Weight::fundamental(s.rank, 1), points);
  std::vector<CosinePoint> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i].x = xs[i] / static_cast<double>(s.stabilizer_normalizers[0]);
    if (s.rank > 1) out[i].y = ys[i] / static_cast<double>(s.stabilizer_normalizers[1]);
  }
  return out;
}

std::vector<std::complex<double>> cheb_eval_numeric_batch(AlgebraId id, const Weight& n,
                                                          std::span<const AnglePoint> points) {
  if (!n.is_dominant()) throw std::invalid_argument("cheb_eval_numeric: non-dominant weight " + n.str());
  auto out = orbit_sum_batch(id, n, points);
  const double stab = static_cast<double>(orbit(id, n).stabilizer_order);
  for (auto& v : out) v /= stab;
  return out;
}

std::vector<std::complex<double>> poly_eval_batch(const BivarPoly& p,
                                                  std::span<const CosinePoint> points) {
  simd::DensePoly dense;
  dense.deg_x = static_cast<int>(p.degree_in(Var::X));
  dense.deg_y = static_cast<int>(p.degree_in(Var::Y));
  dense.coef.assign((dense.deg_x + 1) * (dense.deg_y + 1), 0.0);
  for (const auto& [m, c] : p.terms()) dense.coef[m.dx * (dense.deg_y + 1) + m.dy] = c.get_d();

  const std::size_t count = points.size();
  std::vector<double> xr(count), xi(count), yr(count), yi(count), re(count), im(count);
  for (std::size_t i = 0; i < count; ++i) {
    xr[i] = points[i].x.real();
    xi[i] = points[i].x.imag();
    yr[i] = points[i].y.real();
    yi[i] = points[i].y.imag();
  }
  simd::poly_eval({&dense, xr, xi, yr, yi, re, im});
  std::vector<std::complex<double>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {re[i], im[i]};
  return out;
}

namespace {

struct MpComplex {
  mpf_class re, im;
};

MpComplex mul(const MpComplex& a, const MpComplex& b, unsigned bits) {
  MpComplex r{mpf_class(0, bits), mpf_class(0, bits)};
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

std::vector<MpComplex> powers(std::complex<double> z, unsigned deg, unsigned bits) {
  std::vector<MpComplex> out;
  out.push_back({mpf_class(1, bits), mpf_class(0, bits)});
  const MpComplex base{mpf_class(z.real(), bits), mpf_class(z.imag(), bits)};
  for (unsigned k = 1; k <= deg; ++k) out.push_back(mul(out.back(), base, bits));
  return out;
}

}  // namespace

std::vector<std::complex<double>> poly_eval_precise(const BivarPoly& p,
                                                    std::span<const CosinePoint> points,
                                                    unsigned bits) {
  const unsigned dx = p.degree_in(Var::X);
  const unsigned dy = p.degree_in(Var::Y);
  std::vector<std::pair<Monomial, mpf_class>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, mpf_class(c, bits));
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    const auto xp = powers(pt.x, dx, bits);
    const auto yp = powers(pt.y, dy, bits);
    mpf_class re(0, bits), im(0, bits);
    for (const auto& [m, c] : terms) {
      const MpComplex t = mul(xp[m.dx], yp[m.dy], bits);
      re += c * t.re;
      im += c * t.im;
    }
    out.emplace_back(re.get_d(), im.get_d());
  }
  return out;
}

bool oracle_close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) < tol * (1.0 + std::abs(b));
}

}  // namespace chebop
