#include "chebop/render.hpp"

#include <stdexcept>

namespace chebop {

namespace {

std::string latex_rational(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  if (m.dx) s += m.dx == 1 ? "x" : "x^{" + std::to_string(m.dx) + "}";
  if (m.dy) s += m.dy == 1 ? "y" : "y^{" + std::to_string(m.dy) + "}";
  return s;
}

std::string latex_derivative(const DerivIndex& a) {
  const unsigned k = a.order();
  auto part = [](char v, unsigned e) {
    if (e == 0) return std::string();
    return std::string("\\partial ") + v + (e > 1 ? "^{" + std::to_string(e) + "}" : "");
  };
  std::string den = part('x', a.ax);
  if (a.ay) den += (den.empty() ? "" : " ") + part('y', a.ay);
  return "\\frac{\\partial" + (k > 1 ? "^{" + std::to_string(k) + "}" : std::string()) + "}{" + den + "}";
}

std::string text_derivative(const DerivIndex& a) {
  const unsigned k = a.order();
  std::string den;
  for (unsigned i = 0; i < a.ax; ++i) den += "dx";
  for (unsigned i = 0; i < a.ay; ++i) den += "dy";
  return (k > 1 ? "d^" + std::to_string(k) : std::string("d")) + "/" + den;
}

}  // namespace

std::string latex(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = abs(c);
    if (sgn(c) < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    const std::string mono = latex_monomial(m);
    if (mono.empty())
      out += latex_rational(mag);
    else
      out += (mag == 1 ? std::string() : latex_rational(mag)) + mono;
  }
  return out;
}

std::string latex(const CartesianOperator& op) {
  std::string out;
  for (const auto& [alpha, p] : op.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + latex(p) + "\\right)" + latex_derivative(alpha);
  }
  return out.empty() ? "0" : out;
}

std::string text(const CartesianOperator& op) {
  std::string out;
  for (const auto& [alpha, p] : op.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + p.str() + ") " + text_derivative(alpha);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json rational_json(const Rational& r) {
  auto part = [](const BigInt& v) -> nlohmann::json {
    if (fits_i64(v)) return to_i64(v);
    return v.get_str();
  };
  return {{"num", part(r.get_num())}, {"den", part(r.get_den())}};
}

Rational rational_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) -> BigInt {
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw std::invalid_argument("rational part must be an integer or a digit string");
  };
  const BigInt den = part(j.at("den"));
  if (den == 0) throw std::invalid_argument("zero denominator in JSON rational");
  Rational r(part(j.at("num")), den);
  r.canonicalize();
  return r;
}

nlohmann::json poly_json(const BivarPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json t = rational_json(c);
    arr.push_back({{"dx", m.dx}, {"dy", m.dy}, {"num", t["num"]}, {"den", t["den"]}});
  }
  return arr;
}

BivarPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  auto exponent = [](const nlohmann::json& e) {
    if (!e.is_number_unsigned()) throw std::invalid_argument("exponent must be a non-negative integer");
    return e.get<unsigned>();
  };
  BivarPoly p;
  try {
    for (const auto& t : j) p.add_term({exponent(t.at("dx")), exponent(t.at("dy"))}, rational_from_json(t));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

nlohmann::json cartesian_json(const CartesianOperator& op) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [alpha, p] : op.coeffs())
    arr.push_back({{"alpha", {alpha.ax, alpha.ay}}, {"poly", poly_json(p)}, {"text", p.str()}});
  return arr;
}

nlohmann::json operator_json(const CartesianOperator& op) {
  nlohmann::json basis = nlohmann::json::array();
  nlohmann::json row = nlohmann::json::array();
  for (const auto& c : op.spectrum().symbol.coeffs) {
    if (!is_integer(c)) throw std::invalid_argument("operator_json: symbol must be integral");
    row.push_back(to_i64(c.get_num()));
  }
  basis.push_back(row);
  return {{"algebra", std::string(name(op.algebra()))},
          {"order", op.spectrum().symbol.order},
          {"basis", basis},
          {"spectrum", op.spectrum().str()},
          {"cartesian", cartesian_json(op)}};
}

CartesianOperator operator_from_json(const nlohmann::json& j) {
  try {
    const auto id = parse_algebra(j.at("algebra").get<std::string>());
    if (!id) throw std::invalid_argument("unknown algebra in JSON");
    const int order = j.at("order").get<int>();
    if (order < 1) throw std::invalid_argument("JSON order must be >= 1");
    const auto& basis = j.at("basis");
    if (!basis.is_array() || basis.empty()) throw std::invalid_argument("JSON basis is empty");
    SymbolVector symbol;
    symbol.order = order;
    for (const auto& c : basis.at(0)) symbol.coeffs.emplace_back(BigInt(std::to_string(c.get<std::int64_t>())));
    if (symbol.coeffs.size() != symbol_length(*id, order))
      throw std::invalid_argument("JSON symbol has the wrong length");
    CartesianOperator op(*id, Spectrum{symbol});
    for (const auto& entry : j.at("cartesian")) {
      const auto& alpha = entry.at("alpha");
      if (!alpha.at(0).is_number_unsigned() || !alpha.at(1).is_number_unsigned())
        throw std::invalid_argument("derivative index must be non-negative");
      op.set_coeff({alpha.at(0).get<unsigned>(), alpha.at(1).get<unsigned>()}, poly_from_json(entry.at("poly")));
    }
    return op;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed operator JSON: ") + e.what());
  }
}

}  // namespace chebop
