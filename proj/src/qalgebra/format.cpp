#include "qchrom/format.hpp"

#include <cctype>
#include <stdexcept>

namespace qchrom {

namespace {

int term_count(const QPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (sgn(c) != 0) ++n;
  return n;
}

// Shared renderer for sums of c*var^k terms with descending k.
template <class PowerFn>
std::string render_terms(const QPoly& p, PowerFn power, const char* times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + times;
      out += power(k);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p) {
  return render_terms(p, [](int k) { return k == 1 ? std::string("q") : "q^" + std::to_string(k); }, "*");
}

std::string to_string(const QRat& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const QRat& c = p.coeffs()[j];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string xs = j == 1 ? "x" : "x^" + std::to_string(j);
    if (j == 0) {
      out += "(" + to_string(c) + ")";
    } else if (c == QRat(QPoly::one())) {
      out += xs;
    } else {
      out += "(" + to_string(c) + ")*" + xs;
    }
  }
  return out;
}

std::string to_latex(const QPoly& p) {
  return render_terms(p, [](int k) { return k == 1 ? std::string("q") : "q^{" + std::to_string(k) + "}"; }, "");
}

std::string to_latex(const QRat& r) {
  if (r.is_polynomial()) return to_latex(r.num());
  return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
}

std::string to_latex(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const QRat& c = p.coeffs()[j];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_latex(c);
    if (c.is_polynomial() && term_count(c.num()) > 1) cs = "\\left(" + cs + "\\right)";
    if (j == 0) {
      out += cs;
    } else {
      if (c == QRat(QPoly::one())) cs.clear();
      out += cs + (j == 1 ? std::string("x") : "x^{" + std::to_string(j) + "}");
    }
  }
  return out;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view s) : s_(s) {}

  XPoly parse() {
    XPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse expression at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  XPoly expr() {
    XPoly v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  XPoly term() {
    XPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        XPoly d = unary();
        if (d.degree() > 0) fail("division by an x-dependent expression");
        if (d.is_zero()) fail("division by zero");
        v *= d.leading().inverse();
      } else {
        return v;
      }
    }
  }

  XPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  XPoly power() {
    XPoly base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (negative) {
      if (base.degree() > 0) fail("negative power of an x-dependent expression");
      if (base.is_zero()) fail("division by zero");
      base = XPoly::constant(base.leading().inverse());
    }
    XPoly r = XPoly::constant(QRat(QPoly::one()));
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  }

  XPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      XPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return XPoly::constant(QRat(QPoly::monomial(1)));
    }
    if (c == 'x') {
      ++pos_;
      return XPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return XPoly::constant(QRat::integer(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

XPoly parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

QRat parse_qrat(std::string_view text) {
  XPoly p = parse_expression(text);
  if (p.degree() > 0) throw std::invalid_argument("expression depends on x");
  return p.coeff(0);
}

QPoly parse_qpoly(std::string_view text) {
  QRat r = parse_qrat(text);
  if (!r.is_polynomial()) throw std::invalid_argument("expression is not a polynomial in q");
  return r.num();
}

nlohmann::json to_json(const QPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.get_str());
  return j;
}

nlohmann::json to_json(const QRat& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

nlohmann::json to_json(const XPoly& p) {
  auto j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("QPoly JSON must be an array");
  std::vector<Integer> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string()) {
      Integer z;
      if (z.set_str(e.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer in QPoly JSON");
      v.push_back(z);
    } else if (e.is_number_integer()) {
      v.emplace_back(e.get<long>());
    } else {
      throw std::invalid_argument("QPoly JSON entries must be decimal strings");
    }
  }
  return QPoly(std::move(v));
}

QRat qrat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("QRat JSON must be {\"num\", \"den\"}");
  return QRat(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

XPoly xpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("XPoly JSON must be an array");
  std::vector<QRat> v;
  for (const auto& e : j) v.push_back(qrat_from_json(e));
  return XPoly(std::move(v));
}

}  // namespace qchrom
