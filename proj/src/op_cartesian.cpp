#include "chebop/op_cartesian.hpp"

#include "chebop/cheb.hpp"
#include "chebop/linalg.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace chebop {

// --- CartesianOperator ----------------------------------------------------

unsigned CartesianOperator::order() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first.order(); }

BivarPoly CartesianOperator::coeff(unsigned ax, unsigned ay) const {
  auto it = coeffs_.find({ax, ay});
  return it == coeffs_.end() ? BivarPoly() : it->second;
}

void CartesianOperator::set_coeff(DerivIndex alpha, BivarPoly p) {
  if (alpha.order() == 0) throw std::invalid_argument("zero-order coefficients are not allowed");
  if (p.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = std::move(p);
}

namespace {

BivarPoly derivative(const BivarPoly& p, DerivIndex a) {
  return differentiate(differentiate(p, Var::X, a.ax), Var::Y, a.ay);
}

}  // namespace

BivarPoly apply_operator(const CartesianOperator& op, const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [alpha, coeff] : op.coeffs()) {
    const BivarPoly d = derivative(p, alpha);
    if (!d.is_zero()) out += coeff * d;
  }
  return out;
}

CartesianOperator compose(const CartesianOperator& a, const CartesianOperator& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("compose: algebra mismatch");
  CartesianOperator out(a.algebra(), Spectrum{symbol_product(a.spectrum().symbol, b.spectrum().symbol)});
  std::map<DerivIndex, BivarPoly, DerivOrder> acc;
  // P_alpha d^alpha (Q_beta d^beta f)
  //   = sum_{gamma <= alpha} C(alpha, gamma) P_alpha (d^gamma Q_beta) d^{alpha - gamma + beta} f.
  for (const auto& [alpha, P] : a.coeffs())
    for (const auto& [beta, Q] : b.coeffs())
      for (unsigned gx = 0; gx <= alpha.ax; ++gx)
        for (unsigned gy = 0; gy <= alpha.ay; ++gy) {
          const BivarPoly dQ = derivative(Q, {gx, gy});
          if (dQ.is_zero()) continue;
          const Rational c = binomial(alpha.ax, gx) * binomial(alpha.ay, gy);
          acc[{alpha.ax - gx + beta.ax, alpha.ay - gy + beta.ay}] += P * dQ * c;
        }
  for (auto& [idx, p] : acc) out.set_coeff(idx, std::move(p));
  return out;
}

// --- Chain rule -----------------------------------------------------------

CartesianOperator derive_cartesian_chainrule(AlgebraId id, const AngleOperator& op) {
  if (op.order() != 2) throw DerivationError("chain-rule derivation needs a second-order operator");
  if (op.algebra() != id) throw DerivationError("operator belongs to a different algebra");
  const int rank = algebra_spec(id).rank;
  const SymbolVector& a = op.symbol();

  // Symmetric coefficient matrix of the quadratic symbol.
  Rational quad[2][2];
  quad[0][0] = a.coeffs[0];
  if (rank == 2) {
    quad[0][1] = quad[1][0] = a.coeffs[1] / 2;
    quad[1][1] = a.coeffs[2];
  }

  std::vector<TrigPoly> cos_vars, grads[2];
  for (int i = 0; i < rank; ++i) {
    cos_vars.push_back(TrigPoly::orbit_distinct_sum(id, Weight::fundamental(rank, i)));
    for (int u = 0; u < rank; ++u) grads[i].push_back(cos_vars[i].derivative(u));
  }
  // Angle operator acts on exponentials by i^N E; dividing by i^N gives +E.
  const GaussRational norm = i_pow(-op.order());

  auto quadratic_form = [&](int i, int j) {
    TrigPoly q;
    for (int u = 0; u < rank; ++u)
      for (int v = 0; v < rank; ++v)
        if (sgn(quad[u][v]) != 0) q += grads[i][u] * grads[j][v] * GaussRational(quad[u][v]);
    return q;
  };
  auto lift = [&](const TrigPoly& t, const char* what) {
    try {
      return lift_invariant(id, t);
    } catch (const LiftError& e) {
      throw DerivationError(std::string("chain rule: ") + what + ": " + e.what());
    }
  };

  CartesianOperator out(id, op.spectrum());
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      TrigPoly q = quadratic_form(i, j) * norm;
      if (i != j) q *= GaussRational(2);
      DerivIndex alpha{static_cast<unsigned>((i == 0) + (j == 0)), static_cast<unsigned>((i == 1) + (j == 1))};
      out.set_coeff(alpha, lift(q, "second-order coefficient"));
    }
  for (int i = 0; i < rank; ++i) {
    DerivIndex alpha{static_cast<unsigned>(i == 0), static_cast<unsigned>(i == 1)};
    out.set_coeff(alpha, lift(op.apply(cos_vars[i]) * norm, "first-order coefficient"));
  }
  return out;
}

// --- Verification ---------------------------------------------------------

EigenReport verify_eigen_on(const CartesianOperator& op, const std::vector<Weight>& indices, bool parallel) {
  const AlgebraId id = op.algebra();
  auto check = [&](const Weight& n) -> std::optional<EigenFailure> {
    const BivarPoly pi = cheb_polynomial(id, n);
    BivarPoly residual = apply_operator(op, pi) - pi * op.spectrum().eigenvalue(n);
    if (residual.is_zero()) return std::nullopt;
    return EigenFailure{n, std::move(residual)};
  };

  std::vector<std::optional<EigenFailure>> results(indices.size());
  const unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers <= 1 || indices.size() < 2) {
    for (std::size_t i = 0; i < indices.size(); ++i) results[i] = check(indices[i]);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < indices.size(); i += workers) results[i] = check(indices[i]);
      }));
    for (auto& j : jobs) j.get();
  }

  EigenReport rep;
  rep.checked = indices.size();
  for (auto& r : results)
    if (r) rep.failures.push_back(std::move(*r));
  return rep;
}

EigenReport verify_eigen(const CartesianOperator& op, int max_m, int max_n, bool parallel) {
  const int rank = algebra_spec(op.algebra()).rank;
  std::vector<Weight> indices;
  for (int m = 0; m <= max_m; ++m) {
    if (rank == 1) {
      indices.push_back(Weight{m});
      continue;
    }
    for (int n = 0; n <= max_n; ++n) indices.push_back(Weight{m, n});
  }
  return verify_eigen_on(op, indices, parallel);
}

// --- Undetermined coefficients --------------------------------------------

namespace {

std::vector<Weight> indices_up_to(int rank, int lo_exclusive, int hi_inclusive) {
  std::vector<Weight> out;
  for (int total = lo_exclusive + 1; total <= hi_inclusive; ++total) {
    if (rank == 1) {
      out.push_back(Weight{total});
      continue;
    }
    for (int m = total; m >= 0; --m) out.push_back(Weight{m, total - m});
  }
  return out;
}

// Coefficient of d^alpha may only use monomials whose grade is at most the
// grade of alpha: the operator preserves the grade filtration, and the
// coefficients are recovered from its action on monomials.
struct FitLayout {
  std::vector<DerivIndex> alphas;
  std::vector<std::vector<Monomial>> monomials;  // per alpha
  std::vector<std::size_t> offsets;

  std::size_t unknowns() const { return offsets.empty() ? 0 : offsets.back() + monomials.back().size(); }
  std::size_t column(std::size_t alpha, std::size_t mono) const { return offsets[alpha] + mono; }
};

FitLayout make_layout(AlgebraId id, int order, int degree) {
  const AlgebraSpec& s = algebra_spec(id);
  const long gx = s.grading[0];
  const long gy = s.rank == 2 ? s.grading[1] : 0;
  FitLayout l;
  for (int k = order; k >= 1; --k)
    for (int ax = k; ax >= 0; --ax)
      if (s.rank == 2 || ax == k) l.alphas.push_back({static_cast<unsigned>(ax), static_cast<unsigned>(k - ax)});
  std::size_t offset = 0;
  for (const DerivIndex& a : l.alphas) {
    const long limit = gx * a.ax + gy * a.ay;
    std::vector<Monomial> monos;
    for (int d = 0; d <= degree; ++d)
      for (int dx = d; dx >= 0; --dx) {
        if (s.rank == 1 && dx != d) continue;
        if (gx * dx + gy * (d - dx) <= limit) monos.push_back({static_cast<unsigned>(dx), static_cast<unsigned>(d - dx)});
      }
    l.offsets.push_back(offset);
    offset += monos.size();
    l.monomials.push_back(std::move(monos));
  }
  return l;
}

struct FitAttempt {
  IncrementalSolver solver;
  FitLayout layout;
};

FitAttempt fit(AlgebraId id, const Spectrum& spectrum, int order, int degree,
               const std::vector<Weight>& training) {
  FitAttempt at{IncrementalSolver(0), make_layout(id, order, degree)};
  at.solver = IncrementalSolver(at.layout.unknowns());
  for (const Weight& n : training) {
    const BivarPoly pi = cheb_polynomial(id, n);
    std::map<Monomial, IncrementalSolver::SparseRow, CanonicalOrder> rows;
    for (std::size_t a = 0; a < at.layout.alphas.size(); ++a) {
      const BivarPoly d = derivative(pi, at.layout.alphas[a]);
      for (std::size_t mu = 0; mu < at.layout.monomials[a].size(); ++mu) {
        const Monomial& shift = at.layout.monomials[a][mu];
        for (const auto& [kappa, c] : d.terms())
          rows[{kappa.dx + shift.dx, kappa.dy + shift.dy}][at.layout.column(a, mu)] += c;
      }
    }
    const BivarPoly target = pi * spectrum.eigenvalue(n);
    for (const auto& [m, c] : target.terms()) rows.try_emplace(m);
    for (auto& [m, row] : rows) at.solver.add_equation(std::move(row), target.coeff(m.dx, m.dy));
    if (!at.solver.consistent()) break;
  }
  return at;
}

}  // namespace

UndeterminedResult derive_cartesian_undetermined(AlgebraId id, const Spectrum& spectrum, int order,
                                                 int degree_bound, const UndeterminedOptions& options) {
  if (order < 1) throw std::invalid_argument("derive_cartesian_undetermined: order must be >= 1");
  if (degree_bound < 1) throw std::invalid_argument("derive_cartesian_undetermined: degree_bound must be >= 1");
  if (!is_invariant_symbol(id, spectrum.symbol))
    throw DerivationError("symbol " + spectrum.str() + " is not Weyl invariant");
  const int rank = algebra_spec(id).rank;
  const int train_bound = options.training_bound >= 0 ? options.training_bound : 2 * order + 2;
  const std::vector<Weight> training = indices_up_to(rank, -1, train_bound);

  int cap = options.degree_cap;
  if (cap < 0) {
    const auto& g = algebra_spec(id).grading;
    const long hi = *std::max_element(g.begin(), g.end());
    const long lo = *std::min_element(g.begin(), g.end());
    cap = std::max<int>(8, static_cast<int>((order * hi + lo - 1) / lo));
  }

  std::string last_residual;
  for (int degree = degree_bound; degree <= cap; ++degree) {
    FitAttempt at = fit(id, spectrum, order, degree, training);
    if (!at.solver.consistent()) {
      last_residual = to_string(at.solver.inconsistency());
      continue;
    }
    const RationalVector x = *at.solver.solve();
    CartesianOperator op(id, spectrum);
    for (std::size_t a = 0; a < at.layout.alphas.size(); ++a) {
      BivarPoly p;
      for (std::size_t mu = 0; mu < at.layout.monomials[a].size(); ++mu)
        p.add_term(at.layout.monomials[a][mu], x[at.layout.column(a, mu)]);
      op.set_coeff(at.layout.alphas[a], std::move(p));
    }
    // Held out: the full 0..6 grid plus two index shells beyond training.
    std::vector<Weight> holdout = indices_up_to(rank, train_bound, train_bound + 2);
    const EigenReport grid = verify_eigen(op, 6, 6);
    EigenReport rep = verify_eigen_on(op, holdout);
    rep.checked += grid.checked;
    rep.failures.insert(rep.failures.begin(), grid.failures.begin(), grid.failures.end());
    if (!rep.ok())
      throw DerivationError("undetermined fit at degree " + std::to_string(degree) + " fails held-out index " +
                            rep.failures.front().index.str() + " with residual " +
                            rep.failures.front().residual.str());
    return {std::move(op),     degree, at.layout.unknowns(), at.solver.equations(), at.solver.rank(),
            at.solver.rank() < at.layout.unknowns(), training.size(), std::move(rep)};
  }
  throw DerivationError("no operator with coefficient degree <= " + std::to_string(cap) +
                        " reproduces spectrum " + spectrum.str() + " (first inconsistent residual " +
                        last_residual + ")");
}

CartesianOperator classical_a1_form(const CartesianOperator& op) {
  if (op.algebra() != AlgebraId::A1) throw std::invalid_argument("classical_a1_form: A1 operators only");
  SymbolVector negated = op.spectrum().symbol;
  for (auto& c : negated.coeffs) c = -c;
  CartesianOperator out(AlgebraId::A1, Spectrum{negated});
  // x = 2X: P(x) d^k/dx^k = P(2X) 2^{-k} d^k/dX^k.
  for (const auto& [alpha, p] : op.coeffs()) {
    BivarPoly q;
    for (const auto& [m, c] : p.terms()) q.add_term(m, c * pow(Rational(2), m.dx));
    q *= Rational(-1) / pow(Rational(2), alpha.ax);
    out.set_coeff(alpha, std::move(q));
  }
  return out;
}

}  // namespace chebop
