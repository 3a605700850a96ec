#include "gmflow/parse.hpp"

#include <cctype>

namespace gmflow {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t nvars, bool parameter_s)
      : text_(text), nvars_(nvars), parameter_s_(parameter_s) {}

  Polynomial parse() {
    Polynomial p(nvars_);
    skip_ws();
    bool negate = accept('-');
    p = p + term().scaled(Rational(negate ? -1 : 1));
    skip_ws();
    while (!at_end()) {
      bool minus;
      if (accept('+'))
        minus = false;
      else if (accept('-'))
        minus = true;
      else
        throw ParseError("expected '+' or '-'", pos_);
      p = p + term().scaled(Rational(minus ? -1 : 1));
      skip_ws();
    }
    return p;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Int nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_nat(const char* what) {
    const std::size_t at = pos_;
    const Int n = nat();
    if (!n.fits_uint_p()) throw ParseError(std::string(what) + " too large", at);
    return static_cast<unsigned>(n.get_ui());
  }

  // var ('^' nat)?
  Term factor() {
    skip_ws();
    const std::size_t at = pos_;
    std::size_t index;  // 0-based
    if (parameter_s_ && pos_ < text_.size() && text_[pos_] == 's') {
      ++pos_;
      index = nvars_ - 1;
    } else {
      if (pos_ >= text_.size() || text_[pos_] != 'x')
        throw ParseError("expected a variable", pos_);
      ++pos_;
      const unsigned v = small_nat("variable index");
      const std::size_t limit = parameter_s_ ? nvars_ - 1 : nvars_;
      if (v < 1 || v > limit)
        throw ParseError("variable index out of range [1," + std::to_string(limit) + "]", at);
      index = v - 1;
    }
    unsigned e = 1;
    if (accept('^')) e = small_nat("exponent");
    Monomial m(nvars_);
    m.set_exponent(index, e);
    return {m, Rational(1)};
  }

  // coeff ('*' factor)* | factor ('*' factor)*
  Polynomial term() {
    skip_ws();
    Monomial m(nvars_);
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Int num = nat();
      Int den(1);
      if (accept('/')) {
        const std::size_t at = pos_;
        den = nat();
        if (sgn(den) == 0) throw ParseError("zero denominator", at);
      }
      c = Rational(num, den);
    } else {
      const Term f = factor();
      m = m * f.mono;
    }
    while (accept('*')) {
      const Term f = factor();
      m = m * f.mono;
    }
    return Polynomial::from_monomial(m, c);
  }

  std::string_view text_;
  std::size_t nvars_;
  bool parameter_s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, bool parameter_s) {
  if (parameter_s && nvars == 0) throw Error("parse: parameter ring needs a variable");
  return Scanner(text, nvars, parameter_s).parse();
}

std::string to_string(const Monomial& m, bool parameter_s) {
  std::string s;
  for (std::size_t j = 0; j < m.nvars(); ++j) {
    const unsigned e = m.exponent(j);
    if (!e) continue;
    if (!s.empty()) s += "*";
    if (parameter_s && j + 1 == m.nvars())
      s += "s";
    else
      s += "x" + std::to_string(j + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p, bool parameter_s) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const Rational a = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) out += "-";
      first = false;
    } else {
      out += t.coeff.sign() < 0 ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += to_string(t.mono, parameter_s);
    }
  }
  return out;
}

}  // namespace gmflow
