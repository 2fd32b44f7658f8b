#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chebop {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// Fits in a signed 64-bit integer.
inline bool fits_i64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_i64(const BigInt& v) { return v.get_si(); }

/// Gaussian rational a + b i.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string str() const;
};

/// i^k for integer k.
inline GaussRational i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline std::string GaussRational::str() const {
  if (is_real()) return to_string(re);
  if (sgn(re) == 0) return to_string(im) + "i";
  return "(" + to_string(re) + (sgn(im) > 0 ? "+" : "") + to_string(im) + "i)";
}

}  // namespace chebop
