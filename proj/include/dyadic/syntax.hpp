#ifndef DYADIC_SYNTAX_HPP
#define DYADIC_SYNTAX_HPP

// ASCII concrete syntax.
//
//   atom      [a-z][a-zA-Z0-9_]*
//   unary     ~F   []F   <>F   Bet F
//   binary    &  >  |  >  ->  >  <->     (by decreasing precedence;
//             & and | associate left, -> and <-> associate right)
//   other     O(F/F)   true   false   (F)
//   sequent   F, ..., F |- F, ..., F   (either side may be empty)
//
// Derived connectives are desugared into the ~ -> [] O core while parsing;
// render prints the core back, abbreviating the encodings of true/false.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyadic/formula.hpp"

namespace dyadic {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  /// Zero-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  bool allow_bet = false;
};

/// Two formula lists as typed by the user, before any calculus structure.
struct SequentText {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
};

namespace detail {

enum class Tok { Atom, True, False, Not, Box, Diamond, Bet, And, Or, Impl, Iff, Oblig, LParen, RParen, Slash, Comma, Turnstile, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, start, std::string(s.substr(start, len))});
      i += len;
    };
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    if (starts("<->")) emit(Tok::Iff, 3);
    else if (starts("<>")) emit(Tok::Diamond, 2);
    else if (starts("->")) emit(Tok::Impl, 2);
    else if (starts("|-")) emit(Tok::Turnstile, 2);
    else if (starts("[]")) emit(Tok::Box, 2);
    else if (c == '~') emit(Tok::Not, 1);
    else if (c == '&') emit(Tok::And, 1);
    else if (c == '|') emit(Tok::Or, 1);
    else if (c == '(') emit(Tok::LParen, 1);
    else if (c == ')') emit(Tok::RParen, 1);
    else if (c == '/') emit(Tok::Slash, 1);
    else if (c == ',') emit(Tok::Comma, 1);
    else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      const std::string word(s.substr(i, j - i));
      if (word == "true") emit(Tok::True, j - i);
      else if (word == "false") emit(Tok::False, j - i);
      else if (word == "Bet") emit(Tok::Bet, j - i);
      else if (word == "O") emit(Tok::Oblig, j - i);
      else if (std::islower(static_cast<unsigned char>(c))) emit(Tok::Atom, j - i);
      else throw ParseError(start, "unknown identifier '" + word + "' (atoms start with a lowercase letter)");
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, ParseOptions opts) : tokens_(tokenize(text)), opts_(opts) {}

  Formula parse_formula_only() {
    auto f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  SequentText parse_sequent() {
    SequentText seq;
    seq.antecedent = list(Tok::Turnstile);
    expect(Tok::Turnstile, "'|-'");
    seq.succedent = list(Tok::End);
    expect(Tok::End, "end of input");
    return seq;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(peek().pos, std::string("expected ") + what + describe_found());
  }
  std::string describe_found() const {
    return peek().kind == Tok::End ? ", found end of input" : ", found '" + peek().text + "'";
  }

  std::vector<Formula> list(Tok terminator) {
    std::vector<Formula> out;
    if (peek().kind == terminator) return out;
    out.push_back(formula());
    while (accept(Tok::Comma)) out.push_back(formula());
    return out;
  }

  Formula formula() { return iff_level(); }

  Formula iff_level() {
    auto lhs = impl_level();
    if (accept(Tok::Iff)) return iff(lhs, iff_level());
    return lhs;
  }

  Formula impl_level() {
    auto lhs = or_level();
    if (accept(Tok::Impl)) return Formula::impl(lhs, impl_level());
    return lhs;
  }

  Formula or_level() {
    auto lhs = and_level();
    while (accept(Tok::Or)) lhs = disj(lhs, and_level());
    return lhs;
  }

  Formula and_level() {
    auto lhs = unary();
    while (accept(Tok::And)) lhs = conj(lhs, unary());
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: advance(); return Formula::neg(unary());
      case Tok::Box: advance(); return Formula::box(unary());
      case Tok::Diamond: advance(); return diamond(unary());
      case Tok::Bet:
        if (!opts_.allow_bet) throw ParseError(t.pos, "Bet not allowed in object-language formulas");
        advance();
        return Formula::bet(unary());
      default: return primary();
    }
  }

  Formula primary() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Atom: return Formula::atom(t.text);
      case Tok::True: return top();
      case Tok::False: return bottom();
      case Tok::LParen: {
        auto f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Oblig: {
        expect(Tok::LParen, "'(' after O");
        auto consequent = formula();
        expect(Tok::Slash, "'/' in O(B/A)");
        auto antecedent = formula();
        expect(Tok::RParen, "')' closing O(B/A)");
        return Formula::oblig(consequent, antecedent);
      }
      default:
        --pos_;
        throw ParseError(t.pos, "expected a formula" + describe_found());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
};

}  // namespace detail

inline Formula parse(std::string_view text, ParseOptions opts = {}) {
  return detail::Parser(text, opts).parse_formula_only();
}

inline SequentText parse_sequent(std::string_view text, ParseOptions opts = {}) {
  return detail::Parser(text, opts).parse_sequent();
}

namespace detail {
inline bool needs_parens(const Formula& f) { return f.is(Connective::Impl) && f != top(); }
}  // namespace detail

inline std::string render(const Formula& f) {
  if (f == top()) return "true";
  if (f == bottom()) return "false";
  auto wrapped = [](const Formula& g) { return detail::needs_parens(g) ? "(" + render(g) + ")" : render(g); };
  switch (f.kind()) {
    case Connective::Atom: return f.name();
    case Connective::Neg: return "~" + wrapped(f.child());
    case Connective::Box: return "[]" + wrapped(f.child());
    case Connective::Bet: return "Bet " + wrapped(f.child());
    case Connective::Impl: return wrapped(f.left()) + " -> " + render(f.right());
    case Connective::Oblig: return "O(" + render(f.consequent()) + "/" + render(f.antecedent()) + ")";
  }
  return {};
}

}  // namespace dyadic

#endif  // DYADIC_SYNTAX_HPP
