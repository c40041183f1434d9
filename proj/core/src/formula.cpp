/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file formula.cpp
 * Formula tree construction, the length measure, lasso-model evaluation,
 * and the concrete-syntax parser and printer.
 */

#include "tres/formula.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tres {

FormulaPtr Formula::truth() {
  return FormulaPtr(new Formula(Connective::True, {}, nullptr, nullptr));
}
FormulaPtr Formula::falsity() {
  return FormulaPtr(new Formula(Connective::False, {}, nullptr, nullptr));
}
FormulaPtr Formula::start() {
  return FormulaPtr(new Formula(Connective::Start, {}, nullptr, nullptr));
}
FormulaPtr Formula::prop(PropSymbol s) {
  return FormulaPtr(
      new Formula(Connective::Prop, std::move(s), nullptr, nullptr));
}
FormulaPtr Formula::prop(std::string name, SymbolOrigin origin) {
  return prop(PropSymbol{std::move(name), origin});
}
FormulaPtr Formula::literal(const Literal& l) {
  FormulaPtr p = prop(l.symbol);
  return l.positive ? p : negation(p);
}
FormulaPtr Formula::negation(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Connective::Not, {}, std::move(f), nullptr));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Connective::And, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Connective::Or, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Connective::Implies, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::next(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Connective::Next, {}, std::move(f), nullptr));
}
FormulaPtr Formula::sometime(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Connective::Sometime, {}, std::move(f), nullptr));
}
FormulaPtr Formula::always(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Connective::Always, {}, std::move(f), nullptr));
}
FormulaPtr Formula::until(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Connective::Until, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::unless(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Connective::Unless, {}, std::move(a), std::move(b)));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == Connective::Prop) return a->symbol == b->symbol;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

int node_count(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + node_count(f->left) + node_count(f->right);
}

FormulaPtr negate(const FormulaPtr& f) { return Formula::negation(f); }

namespace {

FormulaPtr push_negated(const FormulaPtr& f);

FormulaPtr push_positive(const FormulaPtr& f) {
  switch (f->kind) {
  case Connective::True:
  case Connective::False:
  case Connective::Start:
  case Connective::Prop:
    return f;
  case Connective::Not:
    return push_negated(f->left);
  case Connective::And:
    return Formula::conj(push_positive(f->left), push_positive(f->right));
  case Connective::Or:
    return Formula::disj(push_positive(f->left), push_positive(f->right));
  case Connective::Implies:
    return Formula::implies(push_positive(f->left), push_positive(f->right));
  case Connective::Next:
    return Formula::next(push_positive(f->left));
  case Connective::Sometime:
    return Formula::sometime(push_positive(f->left));
  case Connective::Always:
    return Formula::always(push_positive(f->left));
  case Connective::Until:
    return Formula::until(push_positive(f->left), push_positive(f->right));
  case Connective::Unless:
    return Formula::unless(push_positive(f->left), push_positive(f->right));
  }
  return f;
}

FormulaPtr push_negated(const FormulaPtr& f) {
  switch (f->kind) {
  case Connective::True:
    return Formula::falsity();
  case Connective::False:
    return Formula::truth();
  case Connective::Start:
    return Formula::negation(f);
  case Connective::Prop:
    return Formula::negation(f);
  case Connective::Not:
    return push_positive(f->left);
  case Connective::And:
    return Formula::disj(push_negated(f->left), push_negated(f->right));
  case Connective::Or:
    return Formula::conj(push_negated(f->left), push_negated(f->right));
  case Connective::Implies:
    return Formula::conj(push_positive(f->left), push_negated(f->right));
  case Connective::Next:
    return Formula::next(push_negated(f->left));
  case Connective::Sometime:
    return Formula::always(push_negated(f->left));
  case Connective::Always:
    return Formula::sometime(push_negated(f->left));
  case Connective::Until:
    return Formula::negation(
        Formula::until(push_positive(f->left), push_positive(f->right)));
  case Connective::Unless:
    return Formula::negation(
        Formula::unless(push_positive(f->left), push_positive(f->right)));
  }
  return Formula::negation(f);
}

} // namespace

FormulaPtr push_negations(const FormulaPtr& f) { return push_positive(f); }

bool is_literal(const FormulaPtr& f) {
  if (f->kind == Connective::Prop) return true;
  return f->kind == Connective::Not && f->left->kind == Connective::Prop;
}

bool is_literal_disjunction(const FormulaPtr& f) {
  if (is_literal(f)) return true;
  if (f->kind != Connective::Or) return false;
  return is_literal_disjunction(f->left) && is_literal_disjunction(f->right);
}

Literal to_literal(const FormulaPtr& f) {
  if (f->kind == Connective::Prop) return Literal{f->symbol, true};
  if (f->kind == Connective::Not && f->left->kind == Connective::Prop)
    return Literal{f->left->symbol, false};
  throw std::invalid_argument("to_literal: formula is not a literal");
}

namespace {

void collect_symbols(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == Connective::Prop) out.insert(f->symbol.name);
  collect_symbols(f->left, out);
  collect_symbols(f->right, out);
}

int len_rec(const FormulaPtr& f, bool negated);

int len_positive(const FormulaPtr& f) {
  switch (f->kind) {
  case Connective::True:
  case Connective::False:
    return 1;
  case Connective::Prop:
    return 1;
  case Connective::Start:
    throw std::invalid_argument("len: Start is not part of the input logic");
  case Connective::Not:
    return len_rec(f->left, true);
  case Connective::And:
    return 1 + len_rec(f->left, false) + len_rec(f->right, false);
  case Connective::Or:
    if (is_literal_disjunction(f)) return 1;
    return 1 + len_rec(f->left, false) + len_rec(f->right, false);
  case Connective::Implies:
    return 1 + len_rec(f->left, true) + len_rec(f->right, false);
  case Connective::Next:
    if (is_literal_disjunction(f->left)) return 1;
    return 1 + len_rec(f->left, false);
  case Connective::Sometime:
    if (is_literal(f->left)) return 1;
    return 1 + len_rec(f->left, false);
  case Connective::Always:
    return 1 + len_rec(f->left, false);
  case Connective::Until:
  case Connective::Unless:
    return 1 + len_rec(f->left, false) + len_rec(f->right, false);
  }
  return 0; // unreachable
}

int len_negative(const FormulaPtr& f) {
  switch (f->kind) {
  case Connective::True:
  case Connective::False:
    return 1; // negated constants rewrite to constants
  case Connective::Prop:
    return 1; // a negated proposition is a literal
  case Connective::Start:
    throw std::invalid_argument("len: Start is not part of the input logic");
  case Connective::Not:
    return len_rec(f->left, false); // double negation cancels
  case Connective::And:
  case Connective::Or:
    return 1 + len_rec(f->left, true) + len_rec(f->right, true);
  case Connective::Implies:
    return 1 + len_rec(f->left, false) + len_rec(f->right, true);
  case Connective::Next:
  case Connective::Sometime:
  case Connective::Always:
    return 1 + len_rec(f->left, true);
  case Connective::Until:
  case Connective::Unless:
    return 1 + len_rec(f->left, true) + len_rec(f->right, true);
  }
  return 0; // unreachable
}

int len_rec(const FormulaPtr& f, bool negated) {
  return negated ? len_negative(f) : len_positive(f);
}

} // namespace

std::set<std::string> symbols_of(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_symbols(f, out);
  return out;
}

int len(const FormulaPtr& f) { return len_rec(f, false); }

// ---------------------------------------------------------------------------
// Evaluation over lasso models
// ---------------------------------------------------------------------------

bool evaluate(const LassoModel& m, std::size_t i, const FormulaPtr& f) {
  if (m.loop.empty())
    throw std::invalid_argument("evaluate: model loop must be non-empty");
  // Window size sufficient to decide any temporal operator at i: whatever
  // remains of the prefix plus two full loop traversals.
  const std::size_t window = m.prefix.size() + 2 * m.loop.size();
  switch (f->kind) {
  case Connective::True:
    return true;
  case Connective::False:
    return false;
  case Connective::Start:
    return i == 0;
  case Connective::Prop:
    return m.state(i).count(f->symbol.name) != 0;
  case Connective::Not:
    return !evaluate(m, i, f->left);
  case Connective::And:
    return evaluate(m, i, f->left) && evaluate(m, i, f->right);
  case Connective::Or:
    return evaluate(m, i, f->left) || evaluate(m, i, f->right);
  case Connective::Implies:
    return !evaluate(m, i, f->left) || evaluate(m, i, f->right);
  case Connective::Next:
    return evaluate(m, i + 1, f->left);
  case Connective::Sometime: {
    for (std::size_t k = i; k < i + window; ++k)
      if (evaluate(m, k, f->left)) return true;
    return false;
  }
  case Connective::Always: {
    for (std::size_t k = i; k < i + window; ++k)
      if (!evaluate(m, k, f->left)) return false;
    return true;
  }
  case Connective::Until: {
    for (std::size_t k = i; k < i + window; ++k) {
      if (evaluate(m, k, f->right)) return true;
      if (!evaluate(m, k, f->left)) return false;
    }
    return false;
  }
  case Connective::Unless: {
    // A W B: either A U B, or A holds forever.
    for (std::size_t k = i; k < i + window; ++k) {
      if (evaluate(m, k, f->right)) return true;
      if (!evaluate(m, k, f->left)) return false;
    }
    return true; // A held throughout the window, hence forever
  }
  }
  return false; // unreachable
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class TokKind {
  End,
  Ident,
  KwTrue,
  KwFalse,
  Tilde,
  Amp,
  Bar,
  Arrow,
  DArrow,
  LParen,
  RParen,
  OpX,
  OpF,
  OpG,
  OpU,
  OpW
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  Lexer(std::string_view text, const ParseOptions& opts)
      : text_(text), opts_(opts) {
    advance();
  }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_trivia();
    tok_.pos = pos_;
    if (pos_ >= text_.size()) {
      tok_ = Token{TokKind::End, "", pos_};
      return;
    }
    char c = text_[pos_];
    switch (c) {
    case '~':
      ++pos_;
      tok_ = Token{TokKind::Tilde, "~", tok_.pos};
      return;
    case '&':
      ++pos_;
      tok_ = Token{TokKind::Amp, "&", tok_.pos};
      return;
    case '|':
      ++pos_;
      tok_ = Token{TokKind::Bar, "|", tok_.pos};
      return;
    case '(':
      ++pos_;
      tok_ = Token{TokKind::LParen, "(", tok_.pos};
      return;
    case ')':
      ++pos_;
      tok_ = Token{TokKind::RParen, ")", tok_.pos};
      return;
    case '-':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        tok_ = Token{TokKind::Arrow, "->", tok_.pos};
        return;
      }
      throw ParseError("expected '->'", pos_);
    case '<':
      if (text_.substr(pos_, 3) == "<->") {
        pos_ += 3;
        tok_ = Token{TokKind::DArrow, "<->", tok_.pos};
        return;
      }
      throw ParseError("expected '<->'", pos_);
    default:
      break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(begin, pos_ - begin));
      tok_.pos = begin;
      if (word == "true") {
        tok_ = Token{TokKind::KwTrue, word, begin};
      } else if (word == "false") {
        tok_ = Token{TokKind::KwFalse, word, begin};
      } else if (word == "X") {
        tok_ = Token{TokKind::OpX, word, begin};
      } else if (word == "F") {
        tok_ = Token{TokKind::OpF, word, begin};
      } else if (word == "G") {
        tok_ = Token{TokKind::OpG, word, begin};
      } else if (word == "U") {
        tok_ = Token{TokKind::OpU, word, begin};
      } else if (word == "W") {
        tok_ = Token{TokKind::OpW, word, begin};
      } else {
        if (!opts_.allow_reserved &&
            (word.rfind("_r", 0) == 0 || word.rfind("_w", 0) == 0))
          throw ParseError("identifier prefix '" + word.substr(0, 2) +
                               "' is reserved for generated symbols",
                           begin);
        tok_ = Token{TokKind::Ident, word, begin};
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  Token tok_{TokKind::End, "", 0};
};

SymbolOrigin origin_for_name(const std::string& name) {
  if (name.rfind("_r", 0) == 0) return SymbolOrigin::Renaming;
  if (name.rfind("_w", 0) == 0) return SymbolOrigin::Waiting;
  return SymbolOrigin::User;
}

class Parser {
public:
  Parser(std::string_view text, const ParseOptions& opts)
      : lex_(text, opts) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_implication();
    if (lex_.peek().kind != TokKind::End)
      throw ParseError("trailing input after formula", lex_.peek().pos);
    return f;
  }

private:
  FormulaPtr parse_implication() {
    FormulaPtr lhs = parse_or();
    TokKind k = lex_.peek().kind;
    if (k == TokKind::Arrow) {
      lex_.take();
      return Formula::implies(lhs, parse_implication());
    }
    if (k == TokKind::DArrow) {
      lex_.take();
      FormulaPtr rhs = parse_implication();
      return Formula::conj(Formula::implies(lhs, rhs),
                           Formula::implies(rhs, lhs));
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (lex_.peek().kind == TokKind::Bar) {
      lex_.take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_until();
    while (lex_.peek().kind == TokKind::Amp) {
      lex_.take();
      f = Formula::conj(f, parse_until());
    }
    return f;
  }

  FormulaPtr parse_until() {
    FormulaPtr lhs = parse_unary();
    TokKind k = lex_.peek().kind;
    if (k == TokKind::OpU) {
      lex_.take();
      return Formula::until(lhs, parse_until());
    }
    if (k == TokKind::OpW) {
      lex_.take();
      return Formula::unless(lhs, parse_until());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    switch (lex_.peek().kind) {
    case TokKind::Tilde:
      lex_.take();
      return Formula::negation(parse_unary());
    case TokKind::OpX:
      lex_.take();
      return Formula::next(parse_unary());
    case TokKind::OpF:
      lex_.take();
      return Formula::sometime(parse_unary());
    case TokKind::OpG:
      lex_.take();
      return Formula::always(parse_unary());
    default:
      return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
    case TokKind::KwTrue:
      return Formula::truth();
    case TokKind::KwFalse:
      return Formula::falsity();
    case TokKind::Ident:
      return Formula::prop(t.text, origin_for_name(t.text));
    case TokKind::LParen: {
      FormulaPtr f = parse_implication();
      Token close = lex_.take();
      if (close.kind != TokKind::RParen)
        throw ParseError("expected ')'", close.pos);
      return f;
    }
    case TokKind::End:
      throw ParseError("unexpected end of input", t.pos);
    default:
      throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
};

// Printer precedence levels, loosest to tightest.
constexpr int kLevelImplies = 0;
constexpr int kLevelOr = 1;
constexpr int kLevelAnd = 2;
constexpr int kLevelUntil = 3;
constexpr int kLevelUnary = 4;
constexpr int kLevelAtom = 5;

int level_of(const FormulaPtr& f) {
  switch (f->kind) {
  case Connective::Implies:
    return kLevelImplies;
  case Connective::Or:
    return kLevelOr;
  case Connective::And:
    return kLevelAnd;
  case Connective::Until:
  case Connective::Unless:
    return kLevelUntil;
  case Connective::Not:
  case Connective::Next:
  case Connective::Sometime:
  case Connective::Always:
    return kLevelUnary;
  default:
    return kLevelAtom;
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  const bool parens = level_of(f) < min_level;
  if (parens) out += '(';
  switch (f->kind) {
  case Connective::True:
    out += "true";
    break;
  case Connective::False:
    out += "false";
    break;
  case Connective::Start:
    throw std::invalid_argument("print_formula: Start has no concrete syntax");
  case Connective::Prop:
    out += f->symbol.name;
    break;
  case Connective::Not:
    out += '~';
    print_rec(f->left, kLevelUnary, out);
    break;
  case Connective::Next:
    out += "X ";
    print_rec(f->left, kLevelUnary, out);
    break;
  case Connective::Sometime:
    out += "F ";
    print_rec(f->left, kLevelUnary, out);
    break;
  case Connective::Always:
    out += "G ";
    print_rec(f->left, kLevelUnary, out);
    break;
  case Connective::Until:
    print_rec(f->left, kLevelUnary, out);
    out += " U ";
    print_rec(f->right, kLevelUntil, out);
    break;
  case Connective::Unless:
    print_rec(f->left, kLevelUnary, out);
    out += " W ";
    print_rec(f->right, kLevelUntil, out);
    break;
  case Connective::And:
    print_rec(f->left, kLevelAnd, out);
    out += " & ";
    print_rec(f->right, kLevelUntil, out);
    break;
  case Connective::Or:
    print_rec(f->left, kLevelOr, out);
    out += " | ";
    print_rec(f->right, kLevelAnd, out);
    break;
  case Connective::Implies:
    print_rec(f->left, kLevelOr, out);
    out += " -> ";
    print_rec(f->right, kLevelImplies, out);
    break;
  }
  if (parens) out += ')';
}

} // namespace

FormulaPtr parse_formula(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse();
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, kLevelImplies, out);
  return out;
}

std::string print_literal(const Literal& l) {
  return l.positive ? l.symbol.name : "~" + l.symbol.name;
}

} // namespace tres
