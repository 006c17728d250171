#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "starlift/errors.hpp"
#include "starlift/field.hpp"
#include "starlift/polynomial.hpp"

namespace starlift {

namespace detail {

struct PolyToken {
  enum Kind { number, variable, plus, minus, slash, caret, end } kind;
  std::string digits;  // number payload
  char var_kind = 0;   // 'x' or 'p'
  int var_index = 0;   // 1-based
};

class PolyLexer {
 public:
  explicit PolyLexer(const std::string& text) : text_(text) { advance(); }

  const PolyToken& peek() const { return tok_; }

  PolyToken take() {
    PolyToken t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      tok_ = {PolyToken::end, "", 0, 0};
      return;
    }
    char c = text_[pos_];
    if (c == '+' || c == '-' || c == '/' || c == '^') {
      ++pos_;
      auto kind = c == '+'   ? PolyToken::plus
                  : c == '-' ? PolyToken::minus
                  : c == '/' ? PolyToken::slash
                             : PolyToken::caret;
      tok_ = {kind, "", 0, 0};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits.push_back(text_[pos_++]);
      tok_ = {PolyToken::number, digits, 0, 0};
      return;
    }
    if (c == 'x' || c == 'p') {
      ++pos_;
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits.push_back(text_[pos_++]);
      if (digits.empty())
        throw ConfigError("variable '" + std::string(1, c) + "' needs an index, like " +
                          std::string(1, c) + "1");
      tok_ = {PolyToken::variable, "", c, std::stoi(digits)};
      return;
    }
    throw ConfigError("unexpected character '" + std::string(1, c) + "' in polynomial");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  PolyToken tok_;
};

}  // namespace detail

// Grammar: poly := [sign] term (sign term)*; term := coeff? factor* with at
// least one piece; coeff := int [ '/' int ]; factor := ('x'|'p') index
// [ '^' int ]. Example: "3/2 x1^2 p1 - x2".
template <CoefficientField K>
typename PolynomialAlgebra<K>::Element parse_polynomial(const PolynomialAlgebra<K>& alg,
                                                        const std::string& text) {
  using Tok = detail::PolyToken;
  detail::PolyLexer lex(text);
  int n = alg.dof();
  auto f = alg.zero();
  bool first = true;
  while (true) {
    if (first && lex.peek().kind == Tok::end)
      throw ConfigError("empty polynomial literal");
    bool negative = false;
    if (lex.peek().kind == Tok::plus || lex.peek().kind == Tok::minus) {
      negative = lex.take().kind == Tok::minus;
    } else if (!first) {
      if (lex.peek().kind == Tok::end) break;
      throw ConfigError("expected '+' or '-' between polynomial terms");
    }
    auto coeff = alg.field().one();
    bool has_piece = false;
    if (lex.peek().kind == Tok::number) {
      std::string num = lex.take().digits;
      std::string den = "1";
      if (lex.peek().kind == Tok::slash) {
        lex.take();
        if (lex.peek().kind != Tok::number)
          throw ConfigError("expected denominator after '/'");
        den = lex.take().digits;
      }
      coeff = alg.field().parse(num + "/" + den);
      has_piece = true;
    }
    Exponents exps(static_cast<std::size_t>(2 * n), 0);
    while (lex.peek().kind == Tok::variable) {
      Tok v = lex.take();
      if (v.var_index < 1 || v.var_index > n)
        throw ConfigError("variable index out of range for " + std::to_string(n) +
                          " degrees of freedom");
      std::size_t pos = static_cast<std::size_t>(v.var_index - 1 + (v.var_kind == 'p' ? n : 0));
      std::uint32_t exp = 1;
      if (lex.peek().kind == Tok::caret) {
        lex.take();
        if (lex.peek().kind != Tok::number) throw ConfigError("expected exponent after '^'");
        exp = static_cast<std::uint32_t>(std::stoul(lex.take().digits));
      }
      exps[pos] += exp;
      has_piece = true;
    }
    if (!has_piece) throw ConfigError("empty term in polynomial literal");
    if (negative) coeff = -coeff;
    auto term = alg.zero();
    term.add_term(exps, coeff);
    f = f + term;
    first = false;
    if (lex.peek().kind == Tok::end) break;
  }
  return f;
}

// Canonical text form: highest grlex term first, coefficients printed only
// when they carry information, '-' folded into the separator. The parser
// above round-trips this exactly.
template <CoefficientField K>
std::string polynomial_text(const PolynomialAlgebra<K>& alg,
                            const typename PolynomialAlgebra<K>::Element& f) {
  if (f.is_zero()) return "0";
  int n = alg.dof();
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    std::string mono;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += ' ';
      bool momentum = v >= static_cast<std::size_t>(n);
      mono += momentum ? 'p' : 'x';
      mono += std::to_string(momentum ? v - static_cast<std::size_t>(n) + 1 : v + 1);
      if (exps[v] > 1) mono += '^' + std::to_string(exps[v]);
    }
    std::string cs = alg.field().to_string(coeff);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string piece;
    if (mono.empty())
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else
      piece = cs + ' ' + mono;
    if (out.empty())
      out = neg ? "-" + piece : piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace starlift
