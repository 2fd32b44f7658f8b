#include "chebop/op_angle.hpp"

#include <map>

namespace chebop {

Rational Spectrum::eigenvalue(const Weight& w) const {
  return symbol.evaluate(Rational(w[0]), w.rank() > 1 ? Rational(w[1]) : Rational(0));
}

AngleOperator::AngleOperator(AlgebraId id, SymbolVector a) : algebra_(id), symbol_(std::move(a)) {
  const AlgebraSpec& s = algebra_spec(id);
  if (symbol_.order < 1) throw AngleOperatorError("angle operator order must be >= 1");
  if (symbol_.coeffs.size() != symbol_length(id, symbol_.order))
    throw AngleOperatorError("symbol has the wrong length for " + std::string(name(id)));
  if (symbol_.is_zero()) throw AngleOperatorError("zero symbol");
  for (int i = 1; i <= s.rank; ++i) {
    const RationalMatrix M = substitution_matrix(id, generator_action(id, i), symbol_.order);
    if (M.apply(symbol_.coeffs) != symbol_.coeffs)
      throw AngleOperatorError("symbol " + symbol_.str() + " is not fixed by M_" + std::to_string(i));
  }
}

TrigPoly AngleOperator::apply(const TrigPoly& t) const {
  const GaussRational phase = i_pow(symbol_.order);
  const Spectrum spec{symbol_};
  TrigPoly out;
  for (const auto& [w, c] : t.terms()) out.add_term(w, c * phase * GaussRational(spec.eigenvalue(w)));
  return out;
}

std::string AngleOperator::latex() const {
  std::string out;
  const int N = symbol_.order;
  for (std::size_t k = 0; k < symbol_.coeffs.size(); ++k) {
    const Rational& c = symbol_.coeffs[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (sgn(c) < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    if (mag != 1) out += is_integer(mag) ? to_string(mag) : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    std::string vars;
    for (int e = 0; e < N - static_cast<int>(k); ++e) vars += "\\phi";
    for (std::size_t e = 0; e < k; ++e) vars += "\\psi";
    out += "\\partial^{" + std::to_string(N) + "}_{" + vars + "}";
  }
  return out;
}

AngleOperator angle_operator(AlgebraId id, const SymbolVector& a) { return AngleOperator(id, a); }

Rational eigenvalue(const Spectrum& s, const Rational& m, const Rational& n) { return s.eigenvalue(m, n); }

AngleOperator compose(const AngleOperator& a, const AngleOperator& b) {
  if (a.algebra() != b.algebra()) throw AngleOperatorError("composing operators of different algebras");
  return AngleOperator(a.algebra(), symbol_product(a.symbol(), b.symbol()));
}

DecompositionReport decompose_report(AlgebraId id, int max_order) {
  if (max_order < 2) throw std::invalid_argument("decompose_report: N_max must be >= 2");
  DecompositionReport rep{id, {}, {}, false};
  std::map<int, std::vector<SymbolVector>> spaces;
  for (int N = 1; N <= max_order; ++N) {
    spaces[N] = fixed_space(id, N);
    std::vector<RationalVector> products;
    for (int k = 1; 2 * k <= N; ++k)
      for (const auto& a : spaces[k])
        for (const auto& b : spaces[N - k]) products.push_back(symbol_product(a, b).coeffs);
    const std::size_t prod_dim = rank_of(products);
    const std::size_t dim = spaces[N].size();
    const std::size_t fresh = dim - prod_dim;
    rep.rows.push_back({N, dim, prod_dim, fresh});
    for (std::size_t g = 0; g < fresh; ++g) rep.generator_orders.push_back(N);
  }
  std::vector<int> expected;
  for (int d : algebra_spec(id).invariant_degrees)
    if (d <= max_order) expected.push_back(d);
  rep.matches_invariant_degrees = expected == rep.generator_orders;
  return rep;
}

}  // namespace chebop
