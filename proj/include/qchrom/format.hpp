#pragma once

#include "qchrom/xpoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qchrom {

// Human-readable text. Powers descend, e.g. "q^5 + q^4 - 2*q^3",
// "(2*q^2)/(q + 1)" and "((2*q^2)/(q + 1))*x^2 + ((-2*q^2)/(q + 1))*x".
// parse_expression() accepts everything these produce.
std::string to_string(const QPoly& p);
std::string to_string(const QRat& r);
std::string to_string(const XPoly& p);
std::string to_string(const Rational& r);

std::string to_latex(const QPoly& p);
std::string to_latex(const QRat& r);
std::string to_latex(const XPoly& p);

/// Parses +, -, *, /, ^ (integer exponents), parentheses, integers and the
/// variables q and x. Division is only allowed by x-free subexpressions.
/// Throws std::invalid_argument on malformed input.
XPoly parse_expression(std::string_view text);
/// As parse_expression, but rejects any x dependence.
QRat parse_qrat(std::string_view text);
/// As parse_qrat, but rejects non-polynomial results.
QPoly parse_qpoly(std::string_view text);

// JSON: QPoly is an array of decimal strings ascending in q, QRat is
// {"num": QPoly, "den": QPoly}, XPoly is an array of QRat ascending in x.
nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const QRat& r);
nlohmann::json to_json(const XPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);
QRat qrat_from_json(const nlohmann::json& j);
XPoly xpoly_from_json(const nlohmann::json& j);

}  // namespace qchrom
