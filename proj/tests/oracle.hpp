#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include "chebop/coeff_rep.hpp"
#include "chebop/poly.hpp"
#include "chebop/weyl.hpp"

#include <array>
#include <set>
#include <vector>

namespace oracle {

using chebop::AlgebraId;

// Cartan matrices typed in directly.
inline std::array<std::array<long, 2>, 2> cartan(AlgebraId id) {
  switch (id) {
    case AlgebraId::A1: return {{{2, 0}, {0, 0}}};
    case AlgebraId::A2: return {{{2, -1}, {-1, 2}}};
    case AlgebraId::C2: return {{{2, -1}, {-2, 2}}};
    case AlgebraId::G2: return {{{2, -1}, {-3, 2}}};
  }
  return {};
}

inline int rank(AlgebraId id) { return id == AlgebraId::A1 ? 1 : 2; }

using Mat = std::array<std::array<long, 2>, 2>;

inline Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

// w_i n = n - n_i * (row i of C), as a matrix on column vectors.
inline Mat reflection(AlgebraId id, int i) {
  const auto c = cartan(id);
  Mat m{{{1, 0}, {0, 1}}};
  for (int k = 0; k < 2; ++k) m[k][i] -= c[i][k];
  if (rank(id) == 1) m[1][1] = 1;
  return m;
}

// All products of generators of length <= 12, deduplicated.
inline std::set<Mat> group_by_words(AlgebraId id) {
  std::set<Mat> seen{Mat{{{1, 0}, {0, 1}}}};
  std::vector<Mat> frontier(seen.begin(), seen.end());
  for (int len = 0; len < 12; ++len) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (int i = 0; i < rank(id); ++i) {
        const Mat h = mul(reflection(id, i), g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = next;
  }
  return seen;
}

inline std::array<long, 2> apply(const Mat& m, long a, long b) {
  return {m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b};
}

// q(m, n) = sum a_k m^(N-k) n^k evaluated over the integers.
inline chebop::Rational eval_symbol(const chebop::SymbolVector& q, long m, long n) {
  chebop::Rational s = 0;
  const int N = q.order;
  for (std::size_t k = 0; k < q.coeffs.size(); ++k)
    s += q.coeffs[k] * chebop::pow(chebop::Rational(m), N - static_cast<int>(k)) *
         chebop::pow(chebop::Rational(n), static_cast<int>(k));
  return s;
}

// Pointwise invariance on an integer grid; a degree-N form agreeing on this
// many points agrees identically.
inline bool invariant_on_grid(AlgebraId id, const chebop::SymbolVector& q) {
  for (const auto& g : group_by_words(id))
    for (long m = -4; m <= 4; ++m)
      for (long n = -4; n <= 4; ++n) {
        const auto w = apply(g, m, n);
        const long wn = rank(id) == 1 ? 0 : w[1];
        if (eval_symbol(q, w[0], wn) != eval_symbol(q, m, rank(id) == 1 ? 0 : n)) return false;
      }
  return true;
}

// Coefficient of t^N in prod 1/(1 - t^d), by counting solutions directly.
inline long molien(const std::vector<int>& degrees, int N) {
  if (degrees.size() == 1) return N % degrees[0] == 0 ? 1 : 0;
  long count = 0;
  for (int a = 0; a * degrees[0] <= N; ++a)
    if ((N - a * degrees[0]) % degrees[1] == 0) ++count;
  return count;
}

// Distinct Weyl images of a weight via the word-enumerated group.
inline std::set<std::array<long, 2>> orbit_by_words(AlgebraId id, long a, long b) {
  std::set<std::array<long, 2>> out;
  for (const auto& g : group_by_words(id)) out.insert(apply(g, a, b));
  return out;
}

// Exact exponential sum over distinct orbit elements, built from
// orbit_by_words.
inline chebop::TrigPoly distinct_orbit_trig(AlgebraId id, long a, long b) {
  chebop::TrigPoly t;
  for (const auto& w : orbit_by_words(id, a, b)) {
    const chebop::Weight n = rank(id) == 1 ? chebop::Weight{w[0]} : chebop::Weight{w[0], w[1]};
    t.add_term(n, chebop::GaussRational(chebop::Rational(1)));
  }
  return t;
}

// P(x(phi), y(phi)) as an exact exponential sum, with x, y the generalized
// cosines (distinct orbit sums of the fundamental weights).
inline chebop::TrigPoly compose(AlgebraId id, const chebop::BivarPoly& p) {
  const chebop::TrigPoly x = distinct_orbit_trig(id, 1, 0);
  const chebop::TrigPoly y = rank(id) == 1 ? chebop::TrigPoly() : distinct_orbit_trig(id, 0, 1);
  const chebop::TrigPoly one = chebop::TrigPoly::constant(rank(id), chebop::GaussRational(chebop::Rational(1)));
  std::vector<chebop::TrigPoly> xp{one}, yp{one};
  chebop::TrigPoly out;
  for (const auto& [m, c] : p.terms()) {
    while (xp.size() <= m.dx) xp.push_back(xp.back() * x);
    while (yp.size() <= m.dy) yp.push_back(yp.back() * y);
    out += xp[m.dx] * yp[m.dy] * chebop::GaussRational(c);
  }
  return out;
}

}  // namespace oracle
