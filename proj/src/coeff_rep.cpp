#include "chebop/coeff_rep.hpp"

#include <functional>
#include <stdexcept>

namespace chebop {

// --- SymbolVector ---------------------------------------------------------

SymbolVector::SymbolVector(int n, std::initializer_list<long> a) : order(n) {
  for (long v : a) coeffs.emplace_back(v);
}

bool SymbolVector::is_zero() const {
  for (const auto& c : coeffs)
    if (sgn(c) != 0) return false;
  return true;
}

BivarPoly SymbolVector::as_poly() const {
  BivarPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p.add_term({static_cast<unsigned>(order - static_cast<int>(k)), static_cast<unsigned>(k)}, coeffs[k]);
  return p;
}

SymbolVector SymbolVector::from_poly(const BivarPoly& q, int order, int rank) {
  SymbolVector s;
  s.order = order;
  const int len = rank == 1 ? 1 : order + 1;
  s.coeffs.resize(len);
  for (const auto& [m, c] : q.terms()) {
    if (static_cast<int>(m.degree()) != order || static_cast<int>(m.dy) >= len)
      throw std::invalid_argument("from_poly: polynomial is not a homogeneous degree-" +
                                  std::to_string(order) + " symbol");
    s.coeffs[m.dy] = c;
  }
  return s;
}

Rational SymbolVector::evaluate(const Rational& m, const Rational& n) const {
  return as_poly().evaluate(m, n);
}

std::string SymbolVector::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
    const int em = order - static_cast<int>(k);
    const int en = static_cast<int>(k);
    if (em > 0) out += em == 1 ? "m" : "m^" + std::to_string(em);
    if (en > 0) out += en == 1 ? "n" : "n^" + std::to_string(en);
    if (em == 0 && en == 0 && mag == 1) out += "1";
  }
  return out.empty() ? "0" : out;
}

std::size_t symbol_length(AlgebraId id, int order) {
  return algebra_spec(id).rank == 1 ? 1 : static_cast<std::size_t>(order + 1);
}

SymbolVector canonicalize(const SymbolVector& v) {
  if (v.is_zero()) throw std::invalid_argument("canonicalize: zero vector");
  BigInt lcm_den = 1;
  for (const auto& c : v.coeffs) lcm_den = lcm(lcm_den, BigInt(c.get_den()));
  BigInt g = 0;
  for (const auto& c : v.coeffs) g = gcd(g, BigInt(c.get_num() * (lcm_den / c.get_den())));
  Rational scale = Rational(lcm_den) / Rational(g);
  for (const auto& c : v.coeffs)
    if (sgn(c) != 0) {
      if (sgn(c) < 0) scale = -scale;
      break;
    }
  SymbolVector out = v;
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

SymbolVector symbol_product(const SymbolVector& a, const SymbolVector& b) {
  return SymbolVector::from_poly(a.as_poly() * b.as_poly(), a.order + b.order,
                                 a.rank() == 1 && b.rank() == 1 ? 1 : 2);
}

// --- Substitution matrices ------------------------------------------------

RationalMatrix substitution_matrix(AlgebraId id, const WeylElement& w, int order) {
  if (order < 1) throw std::invalid_argument("substitution_matrix: order must be >= 1");
  const IntMatrix& W = w.matrix;
  if (W.rows() == 1) {
    RationalMatrix m(1, 1);
    m(0, 0) = pow(Rational(W(0, 0)), static_cast<unsigned long>(order));
    return m;
  }
  (void)id;
  const BivarPoly m_img = BivarPoly::x() * Rational(W(0, 0)) + BivarPoly::y() * Rational(W(0, 1));
  const BivarPoly n_img = BivarPoly::x() * Rational(W(1, 0)) + BivarPoly::y() * Rational(W(1, 1));
  const std::size_t len = order + 1;
  RationalMatrix M(len, len);
  for (std::size_t k = 0; k < len; ++k) {
    BivarPoly col(1);
    for (std::size_t e = 0; e < order - k; ++e) col = col * m_img;
    for (std::size_t e = 0; e < k; ++e) col = col * n_img;
    for (std::size_t j = 0; j < len; ++j) M(j, k) = col.coeff(order - j, j);
  }
  return M;
}

BivarPoly substitute(const SymbolVector& q, const WeylElement& w) {
  const IntMatrix& W = w.matrix;
  if (W.rows() == 1) return q.as_poly() * pow(Rational(W(0, 0)), q.order);
  const BivarPoly m_img = BivarPoly::x() * Rational(W(0, 0)) + BivarPoly::y() * Rational(W(0, 1));
  const BivarPoly n_img = BivarPoly::x() * Rational(W(1, 0)) + BivarPoly::y() * Rational(W(1, 1));
  BivarPoly out;
  for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
    if (sgn(q.coeffs[k]) == 0) continue;
    BivarPoly t(q.coeffs[k]);
    for (int e = 0; e < q.order - static_cast<int>(k); ++e) t = t * m_img;
    for (std::size_t e = 0; e < k; ++e) t = t * n_img;
    out += t;
  }
  return out;
}

bool is_invariant_symbol(AlgebraId id, const SymbolVector& q) {
  const BivarPoly base = q.as_poly();
  for (const WeylElement& w : weyl_group(id))
    if (!(substitute(q, w) == base)) return false;
  return true;
}

std::vector<SymbolVector> fixed_space(AlgebraId id, int order) {
  if (order < 1) throw std::invalid_argument("fixed_space: order must be >= 1");
  const AlgebraSpec& s = algebra_spec(id);
  const std::size_t len = symbol_length(id, order);
  RationalMatrix constraints(0, len);
  for (int i = 1; i <= s.rank; ++i)
    constraints = constraints.vstack(substitution_matrix(id, generator_action(id, i), order) -
                                     RationalMatrix::identity(len));
  const auto kernel = nullspace(constraints);
  std::vector<SymbolVector> basis;
  if (kernel.empty()) return basis;
  RationalMatrix rows(kernel.size(), len);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < len; ++j) rows(i, j) = kernel[i][j];
  const RrefResult r = rref(rows);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    basis.push_back(canonicalize(SymbolVector(order, r.reduced.row(i))));
  return basis;
}

long molien_dimension(AlgebraId id, int order) {
  const auto& degrees = algebra_spec(id).invariant_degrees;
  std::vector<long> series(order + 1, 0);
  series[0] = 1;
  for (int d : degrees)
    for (int k = d; k <= order; ++k) series[k] += series[k - d];
  return series[order];
}

// --- Representation report ------------------------------------------------

bool RepresentationReport::all_hold() const {
  for (const auto& r : relations)
    if (!r.holds) return false;
  return true;
}

const RelationCheck* RepresentationReport::find(const std::string& relation) const& {
  for (const auto& r : relations)
    if (r.relation == relation) return &r;
  return nullptr;
}

namespace {

const WeylElement& element_with_word(AlgebraId id, const std::vector<int>& word) {
  WeylElement target{IntMatrix::identity(algebra_spec(id).rank), {}};
  for (int g : word) target = target * generator_action(id, g);
  for (const WeylElement& e : weyl_group(id))
    if (e.matrix == target.matrix) return e;
  throw WeylDataError("word does not name a group element");
}

}  // namespace

RepresentationReport verify_representation(AlgebraId id, int order) {
  const AlgebraSpec& s = algebra_spec(id);
  const std::size_t len = symbol_length(id, order);
  const RationalMatrix I = RationalMatrix::identity(len);
  const Rational sign = order % 2 == 0 ? 1 : -1;
  auto M = [&](const std::vector<int>& word) {
    return substitution_matrix(id, element_with_word(id, word), order);
  };

  RepresentationReport rep{id, order, {}, {}, {}, false};
  auto add = [&rep](std::string rel, bool holds, std::string note = {}) {
    rep.relations.push_back({std::move(rel), holds, std::move(note)});
  };

  add("M_e=E", M({}).is_identity());
  for (int i = 1; i <= s.rank; ++i) {
    const RationalMatrix Mi = M({i});
    add("M_" + std::to_string(i) + "^2=E", (Mi * Mi).is_identity());
  }

  // Precomposition convention: M_u M_v = M_{vu} for all u, v.
  bool anti = true;
  for (const WeylElement& u : weyl_group(id))
    for (const WeylElement& v : weyl_group(id)) {
      const RationalMatrix lhs = substitution_matrix(id, u, order) * substitution_matrix(id, v, order);
      const WeylElement vu = v * u;
      if (!(lhs == substitution_matrix(id, vu, order))) anti = false;
    }
  add("M_uM_v=M_vu", anti, "precomposition convention (anti-homomorphism)");

  if (s.rank == 2) {
    const int h = s.coxeter_order;
    const RationalMatrix M12 = M({1}) * M({2});
    add("(M_1M_2)^" + std::to_string(h) + "=E", matrix_power(M12, h).is_identity());
    if (h % 2 == 0) {
      std::vector<int> half;
      for (int k = 0; k < h / 2; ++k) {
        half.push_back(1);
        half.push_back(2);
      }
      add("(w_1w_2)^" + std::to_string(h / 2) + " acts as (-1)^N", M(half).is_scalar(sign),
          "(w_1w_2)^{h/2} = -1 on weights");
    }
  } else {
    add("w_1 acts as (-1)^N", M({1}).is_scalar(sign), "w_1 = -1 on weights");
  }

  switch (id) {
    case AlgebraId::A2: {
      // Paper labels: w_3 = w_1w_2, w_4 = w_2w_1, w_5 = w_1w_2w_1.
      const RationalMatrix M3 = M({1, 2}), M4 = M({2, 1}), M5 = M({1, 2, 1});
      add("M_5^2=E", (M5 * M5).is_identity());
      add("M_3^3=E", matrix_power(M3, 3).is_identity());
      add("M_4^3=E", matrix_power(M4, 3).is_identity());
      add("M_3^2=M_4", M3 * M3 == M4);
      add("M_4^2=M_3", M4 * M4 == M3);
      break;
    }
    case AlgebraId::C2: {
      const RationalMatrix M1 = M({1}), M2 = M({2});
      add("[M_1,M_2]=0", M1 * M2 == M2 * M1, "expected exactly for even N");
      break;
    }
    case AlgebraId::G2: {
      const RationalMatrix M1 = M({1}), M2 = M({2});
      add("M_1M_2M_1=M_2M_1M_2", M1 * M2 * M1 == M2 * M1 * M2, "expected exactly for even N");
      break;
    }
    case AlgebraId::A1: break;
  }

  for (const WeylElement& w : weyl_group(id)) {
    const RationalMatrix Mw = substitution_matrix(id, w, order);
    if (Mw.is_identity()) rep.kernel.push_back(w.word_str());
    if (Mw.is_scalar(-1)) rep.acts_as_minus_identity.push_back(w.word_str());
  }
  rep.faithful = rep.kernel.size() == 1;
  return rep;
}

}  // namespace chebop
