// chebop: derive, print and verify Chebyshev-polynomial eigen-operators.
//
// Exit codes: 0 success, 1 usage error, 2 empty result, 3 verification failure.

#include "chebop/cheb.hpp"
#include "chebop/coeff_rep.hpp"
#include "chebop/op_angle.hpp"
#include "chebop/op_cartesian.hpp"
#include "chebop/orbit_eval.hpp"
#include "chebop/render.hpp"
#include "chebop/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace chebop;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kEmpty = 2;
constexpr int kFailed = 3;

constexpr std::size_t kOraclePoints = 200;
constexpr std::uint64_t kOracleSeed = 20240607;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraId algebra_arg(const std::string& text) {
  const auto id = parse_algebra(text);
  if (!id) throw UsageError("unknown algebra '" + text + "' (expected A1, A2, C2 or G2)");
  return *id;
}

struct Derived {
  SymbolVector symbol;
  UndeterminedResult fit;
  std::optional<bool> chain_rule_agrees;  // N = 2 only
};

std::vector<Derived> derive_all(AlgebraId id, int order) {
  std::vector<Derived> out;
  for (const auto& v : fixed_space(id, order)) {
    Derived d{v, derive_cartesian_undetermined(id, Spectrum{v}, order, order), std::nullopt};
    if (order == 2) d.chain_rule_agrees = derive_cartesian_chainrule(id, AngleOperator(id, v)) == d.fit.op;
    out.push_back(std::move(d));
  }
  return out;
}

json checks_json(const Derived& d) {
  json c = {{"degree_bound", d.fit.degree_bound},
            {"unknowns", d.fit.unknowns},
            {"equations", d.fit.equations},
            {"rank", d.fit.rank},
            {"ambiguous", d.fit.ambiguous},
            {"training_indices", d.fit.training_indices},
            {"holdout_checked", d.fit.holdout.checked},
            {"holdout_passed", d.fit.holdout.passed()}};
  if (d.chain_rule_agrees) c["chain_rule_agrees"] = *d.chain_rule_agrees;
  return c;
}

int cmd_derive(const std::string& algebra, int order, const std::string& format) {
  const AlgebraId id = algebra_arg(algebra);
  if (order < 2) throw UsageError("--order must be >= 2");
  const auto derived = derive_all(id, order);
  if (derived.empty()) {
    std::cerr << "fixed space of " << name(id) << " at order " << order << " is empty\n";
    if (format == "json") std::cout << json{{"algebra", name(id)}, {"order", order}, {"basis", json::array()}}.dump(2) << "\n";
    return kEmpty;
  }
  bool ok = true;
  for (const auto& d : derived) ok = ok && d.fit.holdout.ok() && d.chain_rule_agrees.value_or(true);

  if (format == "json") {
    json basis = json::array();
    json operators = json::array();
    for (const auto& d : derived) {
      json op = operator_json(d.fit.op);
      op["checks"] = checks_json(d);
      basis.push_back(op["basis"][0]);
      operators.push_back(op);
    }
    json out = operators[0];
    out["basis"] = basis;
    out["operators"] = operators;
    std::cout << out.dump(2) << "\n";
  } else if (format == "latex") {
    for (std::size_t k = 0; k < derived.size(); ++k) {
      const auto& d = derived[k];
      std::cout << "% " << name(id) << ", N=" << order << ", basis vector " << k + 1 << "\n";
      std::cout << "L(\\phi,\\psi) = " << AngleOperator(id, d.symbol).latex() << "\n";
      std::cout << "E(m,n) = " << d.symbol.str() << "\n";
      std::cout << "L(x,y) = " << latex(d.fit.op) << "\n";
    }
  } else {
    std::cout << "algebra " << name(id) << ", order " << order << ", fixed space dimension " << derived.size() << "\n";
    for (const auto& d : derived) {
      std::string vec;
      for (const auto& c : d.symbol.coeffs) vec += (vec.empty() ? "" : ",") + to_string(c);
      std::cout << "basis (" << vec << ")\n";
      std::cout << "  spectrum E(m,n) = " << d.symbol.str() << "\n";
      std::cout << "  cartesian " << text(d.fit.op) << "\n";
      std::cout << "  holdout " << d.fit.holdout.passed() << "/" << d.fit.holdout.checked;
      if (d.chain_rule_agrees) std::cout << ", chain rule " << (*d.chain_rule_agrees ? "agrees" : "DISAGREES");
      std::cout << "\n";
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_poly(const std::string& algebra, int m, int n, const std::string& format) {
  const AlgebraId id = algebra_arg(algebra);
  if (m < 0 || n < 0) throw UsageError("indices must be non-negative");
  if (algebra_spec(id).rank == 1 && n != 0) throw UsageError("A1 takes a single index -m");
  const Weight w = algebra_spec(id).rank == 1 ? Weight{m} : Weight{m, n};
  const BivarPoly p = cheb_polynomial(id, w);
  if (format == "json")
    std::cout << json{{"algebra", name(id)}, {"index", w.str()}, {"poly", poly_json(p)}, {"text", p.str()}}.dump(2) << "\n";
  else if (format == "latex")
    std::cout << latex(p) << "\n";
  else
    std::cout << p.str() << "\n";
  return kOk;
}

// Exact eigen-check of each operator plus numeric oracle agreement of the
// polynomials themselves.
int cmd_verify(const std::string& algebra, int order, int max_index, bool as_json, const std::string& operator_file) {
  if (max_index < 0) throw UsageError("--max-index must be >= 0");
  std::vector<CartesianOperator> ops;
  AlgebraId id;
  if (!operator_file.empty()) {
    std::ifstream in(operator_file);
    if (!in) throw UsageError("cannot read " + operator_file);
    json j;
    try {
      j = json::parse(in);
      if (j.contains("operators"))
        for (const auto& o : j.at("operators")) ops.push_back(operator_from_json(o));
      else
        ops.push_back(operator_from_json(j));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad operator file: ") + e.what());
    }
    id = ops.front().algebra();
    if (!algebra.empty() && algebra_arg(algebra) != id) throw UsageError("--algebra does not match the operator file");
  } else {
    if (algebra.empty()) throw UsageError("--algebra or --operator is required");
    id = algebra_arg(algebra);
    if (order < 2) throw UsageError("--order must be >= 2");
    for (auto& d : derive_all(id, order)) ops.push_back(d.fit.op);
    if (ops.empty()) {
      std::cerr << "fixed space of " << name(id) << " at order " << order << " is empty\n";
      return kEmpty;
    }
  }
  const int rank = algebra_spec(id).rank;
  const int max_n = rank == 1 ? 0 : max_index;

  json op_results = json::array();
  bool ok = true;
  for (const auto& op : ops) {
    const EigenReport r = verify_eigen(op, max_index, max_n);
    ok = ok && r.ok();
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"index", f.index.str()}, {"residual", f.residual.str()}});
    op_results.push_back({{"spectrum", op.spectrum().str()},
                          {"checked", r.checked},
                          {"passed", r.passed()},
                          {"failures", failures}});
  }

  const auto points = sample_angles(rank, kOraclePoints, kOracleSeed);
  const auto coords = cosine_coords_batch(id, points);
  std::size_t oracle_checked = 0, oracle_passed = 0;
  for (int m = 0; m <= max_index; ++m)
    for (int n = 0; n <= max_n; ++n) {
      const Weight w = rank == 1 ? Weight{m} : Weight{m, n};
      const auto poly = poly_eval_precise(cheb_polynomial(id, w), coords);
      const auto direct = cheb_eval_numeric_batch(id, w, points);
      bool good = true;
      for (std::size_t i = 0; i < points.size(); ++i) {
        good = good && oracle_close(poly[i], direct[i]);
      }
      ++oracle_checked;
      oracle_passed += good;
    }
  ok = ok && oracle_passed == oracle_checked;

  if (as_json) {
    json out = {{"algebra", name(id)},
                {"max_index", max_index},
                {"operators", op_results},
                {"oracle", {{"checked", oracle_checked}, {"passed", oracle_passed}, {"points", kOraclePoints}, {"seed", kOracleSeed}}},
                {"ok", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : op_results) {
      std::cout << "eigen E=" << r["spectrum"].get<std::string>() << ": " << r["passed"].get<std::size_t>() << "/"
                << r["checked"].get<std::size_t>() << " pass\n";
      for (const auto& f : r["failures"])
        std::cout << "  FAIL " << f["index"].get<std::string>() << " residual " << f["residual"].get<std::string>() << "\n";
    }
    std::cout << "oracle: " << oracle_passed << "/" << oracle_checked << " pass (" << kOraclePoints << " points)\n";
    std::cout << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_reproduce(const std::string& format) {
  const ReproductionReport r = reproduce_results();
  if (format == "json")
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << report_text(r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev polynomials of rank-2 Lie algebras and their eigen-operators"};
  app.require_subcommand(1);

  std::string algebra, format = "text", operator_file;
  int order = 2, m = 0, n = 0, max_index = 6;
  bool as_json = false;
  const std::vector<std::string> formats{"json", "latex", "text"};

  auto* derive = app.add_subcommand("derive", "fixed space, spectra and Cartesian operators");
  derive->add_option("--algebra", algebra, "A1, A2, C2 or G2")->required();
  derive->add_option("--order", order, "operator order N")->required();
  derive->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

  auto* poly = app.add_subcommand("poly", "print the Chebyshev polynomial pi_{m,n}");
  poly->add_option("--algebra", algebra, "A1, A2, C2 or G2")->required();
  poly->add_option("-m", m, "first index")->required();
  poly->add_option("-n", n, "second index (rank 2 only)");
  poly->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "exact eigen-check and numeric oracle");
  verify->add_option("--algebra", algebra, "A1, A2, C2 or G2");
  verify->add_option("--order", order, "operator order N");
  verify->add_option("--max-index", max_index, "check 0 <= m,n <= this bound");
  verify->add_flag("--json", as_json, "print the result as JSON");
  verify->add_option("--operator", operator_file, "operator JSON written by derive");

  auto* reproduce = app.add_subcommand("reproduce", "recompute every published result and report discrepancies");
  reproduce->add_option("--format", format, "output format")->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*derive) return cmd_derive(algebra, order, format);
    if (*poly) return cmd_poly(algebra, m, n, format);
    if (*verify) return cmd_verify(algebra, order, max_index, as_json, operator_file);
    if (*reproduce) return cmd_reproduce(format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const DerivationError& e) {
    std::cerr << "derivation failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
