#include "chebop/cheb.hpp"
#include "chebop/render.hpp"
#include "chebop/report.hpp"

#include <doctest.h>

#include <random>

using namespace chebop;

namespace {

CartesianOperator a2_operator() {
  return derive_cartesian_chainrule(AlgebraId::A2, angle_operator(AlgebraId::A2, SymbolVector(2, {1, 1, 1})));
}

}  // namespace

TEST_CASE("latex polynomials") {
  CHECK(latex(parse_poly("x^2 - 3*y")) == "x^{2} - 3y");
  CHECK(latex(parse_poly("x*y - 9")) == "xy - 9");
  CHECK(latex(parse_poly("-1/2*x^3 + y")) == "-\\frac{1}{2}x^{3} + y");
  CHECK(latex(BivarPoly()) == "0");
}

TEST_CASE("operator renderings") {
  const CartesianOperator op = a2_operator();
  CHECK(text(op) ==
        "(x^2 - 3*y) d^2/dxdx + (x*y - 9) d^2/dxdy + (y^2 - 3*x) d^2/dydy + (x) d/dx + (y) d/dy");
  const std::string tex = latex(op);
  CHECK(tex.find("\\left(xy - 9\\right)\\frac{\\partial^{2}}{\\partial x \\partial y}") != std::string::npos);
  CHECK(tex.find("\\left(y\\right)\\frac{\\partial}{\\partial y}") != std::string::npos);
}

TEST_CASE("rational and polynomial json") {
  Rational r(-7, 3);
  CHECK(rational_json(r) == nlohmann::json{{"num", -7}, {"den", 3}});
  CHECK(rational_from_json(rational_json(r)) == r);
  const Rational big("123456789012345678901234567890");
  CHECK(rational_from_json(rational_json(big)) == big);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-9, 9), d(0, 4);
  for (int t = 0; t < 50; ++t) {
    BivarPoly p;
    for (int k = 0; k < 5; ++k) {
      Rational q(c(rng), 1 + d(rng));
      q.canonicalize();
      p.add_term({static_cast<unsigned>(d(rng)), static_cast<unsigned>(d(rng))}, q);
    }
    CHECK(poly_from_json(poly_json(p)) == p);
  }
  CHECK_THROWS_AS(poly_from_json(nlohmann::json{{{"dx", -1}, {"dy", 0}, {"num", 1}, {"den", 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(nlohmann::json{{"num", 1}, {"den", 0}}), std::invalid_argument);
}

TEST_CASE("operator json round trip") {
  for (auto id : kAllAlgebras) {
    const SymbolVector s = fixed_space(id, 2).front();
    const CartesianOperator op = derive_cartesian_chainrule(id, angle_operator(id, s));
    nlohmann::json j = operator_json(op);
    CHECK(j["algebra"] == std::string(name(id)));
    CHECK(j["order"] == 2);
    CHECK(operator_from_json(j) == op);
    CHECK(operator_from_json(nlohmann::json::parse(j.dump())) == op);
  }
  nlohmann::json bad = operator_json(a2_operator());
  bad["algebra"] = "B2";
  CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);
  nlohmann::json missing = operator_json(a2_operator());
  missing.erase("cartesian");
  CHECK_THROWS_AS(operator_from_json(missing), std::invalid_argument);
  nlohmann::json negative = operator_json(a2_operator());
  negative["cartesian"][0]["alpha"][0] = -2;
  CHECK_THROWS_AS(operator_from_json(negative), std::invalid_argument);
}

TEST_CASE("reproduction report") {
  const ReproductionReport r = reproduce_results();
  CHECK(r.count(ReportStatus::MismatchPaperSuspect) == 6);
  CHECK(r.count(ReportStatus::NotPrinted) == 2);
  CHECK(r.count(ReportStatus::Match) + 8 == r.entries.size());
  const auto status = [&](const char* id) {
    const ReportEntry* e = r.find(id);
    REQUIRE(e != nullptr);
    return e->status;
  };
  for (const char* id : {"a2.fixed.n2", "a2.fixed.n3", "c2.fixed.n2", "g2.fixed.n2", "c2.fixed.odd", "g2.fixed.odd",
                         "c2.fixed.n4b", "a2.cartesian", "c2.cartesian", "g2.cartesian", "a1.operator", "a2.relations",
                         "c2.commutativity"})
    CHECK(status(id) == ReportStatus::Match);
  for (const char* id : {"c2.fixed.n4a", "c2.spectrum.n4a", "g2.closure.n6", "g2.weight-action"})
    CHECK(status(id) == ReportStatus::MismatchPaperSuspect);
  CHECK(r.find("c2.fixed.n4a")->computed.find("(1,4,4,0,0)") != std::string::npos);
  CHECK_FALSE(r.find("c2.fixed.n4a")->witness.empty());
  CHECK(r.find("no.such.entry") == nullptr);

  const auto j = report_json(r);
  CHECK(j["summary"]["MISMATCH-PAPER-SUSPECT"] == 6);
  CHECK(j["entries"].size() == r.entries.size());
  CHECK(report_text(r) == report_text(reproduce_results()));
  CHECK(status_name(ReportStatus::NotPrinted) == "NOT-PRINTED");
}
