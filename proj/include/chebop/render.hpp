#pragma once

// Text, LaTeX and JSON renderings of polynomials and operators.
//
// JSON operator schema (all rationals as exact num/den pairs):
//   {"algebra": "A2", "order": 2, "basis": [[1,1,1]], "spectrum": "m^2+mn+n^2",
//    "cartesian": [{"alpha": [2,0], "poly": [{"dx":2,"dy":0,"num":1,"den":1}, ...]}, ...],
//    "checks": {...}}

#include "chebop/op_cartesian.hpp"
#include "chebop/poly.hpp"

#include <json.hpp>

#include <string>

namespace chebop {

std::string latex(const BivarPoly& p);
std::string latex(const CartesianOperator& op);
std::string text(const CartesianOperator& op);

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json poly_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

/// The "cartesian" array of the schema.
nlohmann::json cartesian_json(const CartesianOperator& op);

/// Symbol and spectrum plus the cartesian array; the algebra field is the
/// algebra name.
nlohmann::json operator_json(const CartesianOperator& op);

/// Reads an object carrying "algebra", "order", "basis" (first row used as
/// the spectrum symbol) and "cartesian". Throws std::invalid_argument on
/// malformed input.
CartesianOperator operator_from_json(const nlohmann::json& j);

}  // namespace chebop
