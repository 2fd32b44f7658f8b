#include "chebop/report.hpp"

#include "chebop/cheb.hpp"
#include "chebop/coeff_rep.hpp"
#include "chebop/op_angle.hpp"
#include "chebop/op_cartesian.hpp"
#include "chebop/render.hpp"

#include <sstream>

namespace chebop {

namespace {

std::string vec_str(const SymbolVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) s += (i ? "," : "") + to_string(v.coeffs[i]);
  return s + ")";
}

std::string basis_str(const std::vector<SymbolVector>& basis) {
  if (basis.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? ", " : "") + vec_str(basis[i]);
  return s + "}";
}

bool in_span(const std::vector<SymbolVector>& basis, const SymbolVector& v) {
  std::vector<RationalVector> rows;
  for (const auto& b : basis) rows.push_back(b.coeffs);
  const std::size_t before = rank_of(rows);
  rows.push_back(v.coeffs);
  return rank_of(rows) == before;
}

// Printed spectra are transcribed with x standing for m and y for n.
SymbolVector symbol_of(const std::string& text, int order) {
  return SymbolVector::from_poly(parse_poly(text), order, 2);
}

CartesianOperator operator_of(AlgebraId id, const SymbolVector& symbol,
                              const std::vector<std::pair<DerivIndex, std::string>>& coeffs) {
  CartesianOperator op(id, Spectrum{symbol});
  for (const auto& [alpha, text] : coeffs) op.set_coeff(alpha, parse_poly(text));
  return op;
}

ReportStatus match_if(bool ok) { return ok ? ReportStatus::Match : ReportStatus::MismatchPaperSuspect; }

// First small (m, n) where two symbols disagree, rendered as a witness.
std::string first_difference(const BivarPoly& printed, const BivarPoly& computed) {
  for (int s = 0; s <= 8; ++s)
    for (int m = 0; m <= s; ++m) {
      const Rational a = printed.evaluate(Rational(m), Rational(s - m));
      const Rational b = computed.evaluate(Rational(m), Rational(s - m));
      if (a != b)
        return "at (m,n)=(" + std::to_string(m) + "," + std::to_string(s - m) + ") printed gives " + to_string(a) +
               ", computed eigenvalue " + to_string(b);
    }
  return {};
}

WeylElement element_with_matrix(AlgebraId id, const IntMatrix& m) {
  for (const auto& w : weyl_group(id))
    if (w.matrix == m) return w;
  throw WeylDataError("element not in the Weyl group");
}

void fixed_entry(ReproductionReport& rep, const std::string& id, const std::string& citation, AlgebraId alg,
                 int order, const SymbolVector& printed) {
  const auto basis = fixed_space(alg, order);
  const bool ok = basis.size() == 1 && basis[0] == printed;
  rep.entries.push_back({id, citation, vec_str(printed), basis_str(basis), match_if(ok),
                         ok ? "" : "computed basis " + basis_str(basis)});
}

void spectrum_entry(ReproductionReport& rep, const std::string& id, const std::string& citation, AlgebraId alg,
                    const SymbolVector& computed, const std::string& printed_text, const std::string& printed_poly) {
  const BivarPoly printed = parse_poly(printed_poly);
  const BivarPoly mine = computed.as_poly();
  const bool ok = printed == mine;
  std::string computed_text = "E=" + computed.str() + "; L=" + AngleOperator(alg, computed).latex();
  rep.entries.push_back({id, citation, printed_text, computed_text, match_if(ok),
                         ok ? "" : first_difference(printed, mine)});
}

void cartesian_entry(ReproductionReport& rep, const std::string& id, const std::string& citation, AlgebraId alg,
                     const std::string& printed_text, const CartesianOperator& printed) {
  const SymbolVector v = fixed_space(alg, 2).at(0);
  const CartesianOperator chain = derive_cartesian_chainrule(alg, AngleOperator(alg, v));
  const auto fit = derive_cartesian_undetermined(alg, Spectrum{v}, 2, 2);
  const EigenReport eig = verify_eigen(chain, 6, 6);
  const bool ok = chain == printed && fit.op == printed && eig.ok();
  std::string witness;
  if (!ok) {
    witness = "chain rule: " + text(chain) + "; fit: " + text(fit.op) + "; eigen check " +
              std::to_string(eig.passed()) + "/" + std::to_string(eig.checked);
  }
  rep.entries.push_back({id, citation, printed_text,
                         text(chain) + " [eigen " + std::to_string(eig.passed()) + "/" + std::to_string(eig.checked) + "]",
                         match_if(ok), witness});
}

}  // namespace

std::string_view status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Match: return "MATCH";
    case ReportStatus::MismatchPaperSuspect: return "MISMATCH-PAPER-SUSPECT";
    case ReportStatus::NotPrinted: return "NOT-PRINTED";
  }
  return "?";
}

const ReportEntry* ReproductionReport::find(const std::string& id) const& {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::size_t ReproductionReport::count(ReportStatus s) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == s;
  return n;
}

ReproductionReport reproduce_results() {
  ReproductionReport rep;
  using A = AlgebraId;

  // A1: the classical operator after X = x/2 and a sign flip.
  {
    const SymbolVector v = fixed_space(A::A1, 2).at(0);
    const CartesianOperator op = derive_cartesian_chainrule(A::A1, AngleOperator(A::A1, v));
    const CartesianOperator classical = classical_a1_form(op);
    CartesianOperator printed(A::A1, classical.spectrum());
    printed.set_coeff({2, 0}, parse_poly("-x^2 + 1"));
    printed.set_coeff({1, 0}, parse_poly("-x"));
    const bool ok = classical == printed;
    rep.entries.push_back({"a1.operator", "A1 classical operator in x = cos(phi)", "(1-x^2) d^2/dx^2 - x d/dx",
                           text(op) + " -> " + text(classical), match_if(ok), ok ? "" : text(classical)});
  }

  // Generator actions on fundamental weights.
  {
    const Weight a2 = generator_action(A::A2, 2).apply(Weight::fundamental(2, 1));
    rep.entries.push_back({"a2.weight-action", "A2 generator action on fundamental weights", "w_2 lambda_2 = lambda_1 - lambda_2",
                           "w_2 lambda_2 = " + a2.str(), match_if(a2 == Weight{1, -1}), ""});
    const Weight c2 = generator_action(A::C2, 2).apply(Weight::fundamental(2, 1));
    rep.entries.push_back({"c2.weight-action", "C2 generator action on fundamental weights", "w_2 lambda_2 = 2 lambda_1 - lambda_2",
                           "w_2 lambda_2 = " + c2.str(), match_if(c2 == Weight{2, -1}), ""});
    const Weight g2 = generator_action(A::G2, 2).apply(Weight::fundamental(2, 1));
    const bool ok = g2 == Weight{2, -1};
    rep.entries.push_back({"g2.weight-action", "G2 generator action on fundamental weights", "w_2 lambda_2 = 2 lambda_1 - lambda_2",
                           "w_2 lambda_2 = " + g2.str(), match_if(ok),
                           ok ? "" : "the G2 orbit function has exponents n(-3 phi + 2 psi), which needs w_2 lambda_2 = (3,-1); (2,-1) is the C2 action"});
  }

  // A2.
  fixed_entry(rep, "a2.fixed.n2", "A2 fixed vector, N=2", A::A2, 2, SymbolVector(2, {1, 1, 1}));
  fixed_entry(rep, "a2.fixed.n3", "A2 fixed vector, N=3", A::A2, 3, SymbolVector(3, {2, 3, -3, -2}));
  spectrum_entry(rep, "a2.spectrum.n2", "A2 second-order angle operator and spectrum", A::A2, fixed_space(A::A2, 2).at(0),
                 "E=m^2+mn+n^2", "x^2 + x*y + y^2");
  spectrum_entry(rep, "a2.spectrum.n3", "A2 third-order angle operator and spectrum", A::A2, fixed_space(A::A2, 3).at(0),
                 "E=2m^3+3m^2n-3mn^2-2n^2", "2*x^3 + 3*x^2*y - 3*x*y^2 - 2*y^2");
  {
    bool ok = true;
    std::string failed;
    for (int N : {2, 3}) {
      const auto r = verify_representation(A::A2, N);
      for (const char* rel : {"M_1^2=E", "M_2^2=E", "M_5^2=E", "M_3^3=E", "M_4^3=E", "M_3^2=M_4", "M_4^2=M_3"}) {
        const RelationCheck* c = r.find(rel);
        if (!c || !c->holds) {
          ok = false;
          failed += " " + std::string(rel) + "@N=" + std::to_string(N);
        }
      }
      ok = ok && r.faithful;
    }
    rep.entries.push_back({"a2.relations", "A2 substitution matrix multiplication table",
                           "M_1^2=M_2^2=M_5^2=M_3^3=M_4^3=E, M_3^2=M_4, M_4^2=M_3; faithful",
                           ok ? "all hold at N=2,3; faithful" : "failed:" + failed, match_if(ok), failed});
  }
  cartesian_entry(rep, "a2.cartesian", "A2 operator in generalized cosines",
                  A::A2, "(x^2-3y) d^2/dx^2 + (xy-9) d^2/dxdy + (y^2-3x) d^2/dy^2 + x d/dx + y d/dy",
                  operator_of(A::A2, SymbolVector(2, {1, 1, 1}),
                              {{{2, 0}, "x^2 - 3*y"}, {{1, 1}, "x*y - 9"}, {{0, 2}, "y^2 - 3*x"}, {{1, 0}, "x"}, {{0, 1}, "y"}}));

  // C2.
  fixed_entry(rep, "c2.fixed.n2", "C2 fixed vector, N=2", A::C2, 2, SymbolVector(2, {1, 2, 2}));
  {
    std::string computed;
    bool ok = true;
    for (int N : {1, 3, 5, 7}) {
      const auto b = fixed_space(A::C2, N);
      ok = ok && b.empty();
      computed += (computed.empty() ? "" : ", ") + ("dim(N=" + std::to_string(N) + ")=" + std::to_string(b.size()));
    }
    rep.entries.push_back({"c2.fixed.odd", "C2 fixed space for odd N", "solutions only for even N", computed, match_if(ok), ""});
  }
  {
    const auto basis = fixed_space(A::C2, 4);
    const SymbolVector printed(4, {1, 4, 1, 0, 0});
    const SymbolVector corrected(4, {1, 4, 4, 0, 0});
    const WeylElement w = element_with_matrix(A::C2, IntMatrix{{1, 0}, {-1, -1}});
    const BivarPoly printed_residual = substitute(printed, w) - printed.as_poly();
    const BivarPoly corrected_residual = substitute(corrected, w) - corrected.as_poly();
    const bool ok = in_span(basis, printed) && is_invariant_symbol(A::C2, printed);
    std::string witness = "q(m,-m-n) - q(m,n), where (m,n)->(m,-m-n) is the element " + w.word_str() +
                          ": printed (1,4,1,0,0) gives " + printed_residual.str() + " (x=m, y=n); (1,4,4,0,0) gives " +
                          corrected_residual.str() + "; (1,4,4,0,0) invariant under all of W: " +
                          (is_invariant_symbol(A::C2, corrected) ? "yes" : "no") +
                          "; in span: " + (in_span(basis, corrected) ? "yes" : "no");
    rep.entries.push_back({"c2.fixed.n4a", "C2 first fixed vector, N=4", vec_str(printed),
                           vec_str(corrected) + " in span of " + basis_str(basis), match_if(ok), witness});
    const SymbolVector b(4, {0, 0, 1, 2, 1});
    rep.entries.push_back({"c2.fixed.n4b", "C2 second fixed vector, N=4", vec_str(b), basis_str(basis),
                           match_if(basis.size() == 2 && in_span(basis, b)), ""});

    const SymbolVector printed_sym = symbol_of("x^4 + 4*x^3*y + x^2*y^2", 4);
    const bool spec_ok = in_span(basis, printed_sym);
    rep.entries.push_back({"c2.spectrum.n4a", "C2 first fourth-order operator and spectrum", "E=m^2(m^2+4mn+n^2)",
                           "E=" + corrected.str() + " = m^2(m+2n)^2", match_if(spec_ok),
                           spec_ok ? "" : first_difference(printed_sym.as_poly(), corrected.as_poly()) +
                                              "; the printed E is not W-invariant"});
    spectrum_entry(rep, "c2.spectrum.n4b", "C2 second fourth-order operator and spectrum", A::C2, b, "E=n^2(m+n)^2",
                   "x^2*y^2 + 2*x*y^3 + y^4");

    for (const auto& [tag, v] : {std::pair{"a", corrected}, std::pair{"b", b}}) {
      const auto fit = derive_cartesian_undetermined(A::C2, Spectrum{v}, 4, 4);
      const EigenReport eig = verify_eigen(fit.op, 6, 6);
      rep.entries.push_back({std::string("c2.cartesian.n4") + tag, "C2 fourth-order operators (no Cartesian form printed)",
                             "", text(fit.op) + " [eigen " + std::to_string(eig.passed()) + "/" + std::to_string(eig.checked) + "]",
                             ReportStatus::NotPrinted, ""});
    }
  }
  spectrum_entry(rep, "c2.spectrum.n2", "C2 second-order angle operator and spectrum", A::C2, fixed_space(A::C2, 2).at(0),
                 "E=m^2+2mn+2n^2", "x^2 + 2*x*y + 2*y^2");
  {
    auto commutes = [](int N) {
      const auto r = verify_representation(A::C2, N);
      return r.find("[M_1,M_2]=0")->holds;
    };
    bool ok = true;
    for (int N : {2, 4, 6, 8}) ok = ok && commutes(N);
    const bool odd = commutes(3);
    rep.entries.push_back({"c2.commutativity", "C2 substitution matrices commute", "[M_1,M_2]=0, M_1^2=M_2^2=E (even N)",
                           std::string(ok ? "commute at N=2,4,6,8" : "fail at even N") + "; N=3: " + (odd ? "commute" : "do not commute") +
                               "; (w_1w_2)^2 acts as (-1)^N",
                           match_if(ok), ""});
  }
  cartesian_entry(rep, "c2.cartesian", "C2 operator in generalized cosines", A::C2,
                  "(x^2-2y-8) d^2/dx^2 + 2x(y-4) d^2/dxdy + 2(y^2+4y-2x^2) d^2/dy^2 + x d/dx + 2y d/dy",
                  operator_of(A::C2, SymbolVector(2, {1, 2, 2}),
                              {{{2, 0}, "x^2 - 2*y - 8"}, {{1, 1}, "2*x*y - 8*x"}, {{0, 2}, "-4*x^2 + 2*y^2 + 8*y"},
                               {{1, 0}, "x"}, {{0, 1}, "2*y"}}));

  // G2.
  fixed_entry(rep, "g2.fixed.n2", "G2 fixed vector, N=2", A::G2, 2, SymbolVector(2, {1, 3, 3}));
  {
    std::string computed;
    bool ok = true;
    for (int N : {1, 3, 5, 7}) {
      const auto b = fixed_space(A::G2, N);
      ok = ok && b.empty();
      computed += (computed.empty() ? "" : ", ") + ("dim(N=" + std::to_string(N) + ")=" + std::to_string(b.size()));
    }
    rep.entries.push_back({"g2.fixed.odd", "G2 fixed space for odd N", "no solutions for odd N", computed, match_if(ok), ""});
  }
  spectrum_entry(rep, "g2.spectrum.n2", "G2 second-order angle operator and spectrum", A::G2, fixed_space(A::G2, 2).at(0),
                 "E=m^2+3mn+3n^2", "x^2 + 3*x*y + 3*y^2");
  {
    const SymbolVector l3 = fixed_space(A::G2, 2).at(0);
    const auto b4 = fixed_space(A::G2, 4);
    const bool ok4 = b4.size() == 1 && b4[0] == canonicalize(symbol_product(l3, l3));
    rep.entries.push_back({"g2.closure.n4", "G2 fourth-order operators", "only (L_3)^2",
                           "dim=" + std::to_string(b4.size()) + ", basis " + basis_str(b4), match_if(ok4), ""});
    const auto b6 = fixed_space(A::G2, 6);
    const SymbolVector cube = symbol_product(l3, symbol_product(l3, l3));
    const auto dec = decompose_report(A::G2, 6);
    const bool ok6 = b6.size() == 1 && in_span(b6, cube);
    std::string witness = "dim fixed_space(G2,6)=" + std::to_string(b6.size()) + ", Molien coefficient " +
                          std::to_string(molien_dimension(A::G2, 6)) + ", products of lower orders span " +
                          std::to_string(dec.rows.back().product_dimension) + "; basis " + basis_str(b6);
    rep.entries.push_back({"g2.closure.n6", "G2 sixth-order operators", "only (L_3)^3",
                           "dim=" + std::to_string(b6.size()) + ", new generator at N=6", match_if(ok6), ok6 ? "" : witness});
  }
  {
    const OrbitData o = orbit(A::G2, Weight::fundamental(2, 1));
    const bool printed_in = o.contains(Weight{1, -2});
    std::string elems;
    for (const auto& w : o.elements) elems += (elems.empty() ? "" : " ") + w.str();
    rep.entries.push_back({"g2.y-exponents", "G2 second generalized cosine as an exponential sum",
                           "exponents psi, -3phi+2psi, 3phi-psi, -psi, phi-2psi, -3phi+psi", "orbit of lambda_2: " + elems,
                           match_if(printed_in),
                           printed_in ? "" : "(1,-2) is not in the orbit; (3,-2), i.e. 3phi-2psi, is"});
  }
  cartesian_entry(rep, "g2.cartesian", "G2 operator in generalized cosines", A::G2,
                  "(x^2-3x-y-12) d^2/dx^2 + (3xy-6x^2+12y+36) d^2/dxdy + (3y^2+9y-3x^3+9xy+27x) d^2/dy^2 + x d/dx + 3y d/dy",
                  operator_of(A::G2, SymbolVector(2, {1, 3, 3}),
                              {{{2, 0}, "x^2 - 3*x - y - 12"}, {{1, 1}, "-6*x^2 + 3*x*y + 12*y + 36"},
                               {{0, 2}, "-3*x^3 + 9*x*y + 3*y^2 + 27*x + 9*y"}, {{1, 0}, "x"}, {{0, 1}, "3*y"}}));

  rep.notes.push_back(
      "A2 exponentials are written exp(i m phi) while C2 and G2 use exp(2 pi i m phi); all computations here use "
      "exp(i (n, phi)), which only rescales the angles.");
  rep.notes.push_back(
      "Angle operators have eigenvalue i^N E on exponentials; Cartesian operators are normalized to eigenvalue +E.");
  return rep;
}

nlohmann::json report_json(const ReproductionReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j = {{"id", e.id},
                        {"citation", e.citation},
                        {"expected", e.expected},
                        {"computed", e.computed},
                        {"status", std::string(status_name(e.status))}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    entries.push_back(j);
  }
  return {{"entries", entries},
          {"notes", r.notes},
          {"summary",
           {{"MATCH", r.count(ReportStatus::Match)},
            {"MISMATCH-PAPER-SUSPECT", r.count(ReportStatus::MismatchPaperSuspect)},
            {"NOT-PRINTED", r.count(ReportStatus::NotPrinted)}}}};
}

std::string report_text(const ReproductionReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << "[" << status_name(e.status) << "] " << e.id << " (" << e.citation << ")\n";
    if (!e.expected.empty()) out << "  printed:  " << e.expected << "\n";
    out << "  computed: " << e.computed << "\n";
    if (!e.witness.empty()) out << "  witness:  " << e.witness << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "summary: " << r.count(ReportStatus::Match) << " MATCH, " << r.count(ReportStatus::MismatchPaperSuspect)
      << " MISMATCH-PAPER-SUSPECT, " << r.count(ReportStatus::NotPrinted) << " NOT-PRINTED\n";
  return out.str();
}

}  // namespace chebop
