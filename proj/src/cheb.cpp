#include "chebop/cheb.hpp"

#include <array>
#include <mutex>

namespace chebop {

WeightMultiset product_decomposition(AlgebraId id, const Weight& a, const Weight& b) {
  WeightMultiset out;
  for (const WeylElement& w : weyl_group(id)) ++out[dominant_representative(id, a + w.apply(b)).representative];
  return out;
}

namespace {

struct Memo {
  std::mutex mu;
  std::map<Weight, BivarPoly> table;
};

Memo& memo_for(AlgebraId id) {
  static std::array<Memo, 4> memos;
  return memos[static_cast<int>(id)];
}

long stabilizer(AlgebraId id, const Weight& n) { return orbit(id, n).stabilizer_order; }

BivarPoly compute_cheb(AlgebraId id, const Weight& n) {
  const int rank = algebra_spec(id).rank;
  if (n.is_zero()) return BivarPoly(1);
  int g = 0;
  while (sgn(n[g]) == 0) ++g;
  const Weight e = Weight::fundamental(rank, g);
  if (n == e) return g == 0 ? BivarPoly::x() : BivarPoly::y();

  // Phi_a Phi_e = sum_mu D[mu] Phi_mu, and Phi_mu = s_mu pi_mu.
  const Weight a = n - e;
  const WeightMultiset decomposition = product_decomposition(id, a, e);
  const BigInt top_grade = grade(id, n);
  BivarPoly rhs = cheb_polynomial(id, a) * cheb_polynomial(id, e) *
                  Rational(stabilizer(id, a) * stabilizer(id, e));
  long top_count = 0;
  for (const auto& [mu, count] : decomposition) {
    if (mu == n) {
      top_count = count;
      continue;
    }
    if (grade(id, mu) >= top_grade)
      throw WeylDataError("cheb_polynomial: term " + mu.str() + " is not below the top index " +
                          n.str() + " in the grading");
    rhs -= cheb_polynomial(id, mu) * Rational(count * stabilizer(id, mu));
  }
  if (top_count == 0)
    throw WeylDataError("cheb_polynomial: top index " + n.str() + " missing from decomposition");
  rhs *= Rational(1) / Rational(top_count * stabilizer(id, n));
  return rhs;
}

}  // namespace

BivarPoly cheb_polynomial(AlgebraId id, const Weight& n) {
  if (n.rank() != algebra_spec(id).rank)
    throw std::invalid_argument("cheb_polynomial: weight rank does not match algebra");
  if (!n.is_dominant()) throw std::invalid_argument("cheb_polynomial: non-dominant index " + n.str());
  Memo& memo = memo_for(id);
  {
    std::lock_guard lock(memo.mu);
    if (auto it = memo.table.find(n); it != memo.table.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters cheb_polynomial.
  BivarPoly p = compute_cheb(id, n);
  std::lock_guard lock(memo.mu);
  return memo.table.emplace(n, std::move(p)).first->second;
}

bool is_weyl_invariant(AlgebraId id, const TrigPoly& t) {
  const int rank = algebra_spec(id).rank;
  for (const auto& [w, c] : t.terms()) {
    if (w.rank() != rank) return false;
    for (int i = 1; i <= rank; ++i)
      if (!(t.coeff(generator_action(id, i).apply(w)) == c)) return false;
  }
  return true;
}

BivarPoly lift_invariant(AlgebraId id, const TrigPoly& t) {
  if (!is_weyl_invariant(id, t)) throw LiftError("lift_invariant: input is not Weyl invariant");
  TrigPoly work = t;
  BivarPoly real_part, imag_part;
  while (!work.is_zero()) {
    const Weight* top = nullptr;
    BigInt top_grade;
    for (const auto& [w, c] : work.terms()) {
      if (!w.is_dominant()) continue;
      BigInt g = grade(id, w);
      if (top == nullptr || g > top_grade) {
        top = &w;
        top_grade = g;
      }
    }
    if (top == nullptr) throw LiftError("lift_invariant: no dominant support weight left");
    const Weight n = *top;
    const GaussRational c = work.coeff(n);
    work -= TrigPoly::orbit_distinct_sum(id, n) * c;
    const BivarPoly pi = cheb_polynomial(id, n);
    real_part += pi * c.re;
    imag_part += pi * c.im;
  }
  if (!imag_part.is_zero())
    throw LiftError("lift_invariant: imaginary residue " + imag_part.str() + " after reduction");
  return real_part;
}

}  // namespace chebop
