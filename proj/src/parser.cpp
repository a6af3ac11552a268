#include "epigraph/parser.hpp"

#include <cctype>
#include <unordered_map>

namespace epigraph {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Not, And, Or, Implies, Iff, Plus, Minus, Cmp, True, False, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  Comparator cmp = Comparator::Eq;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ >= s_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::End, "", s_.size()});
    return out;
  }

 private:
  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }

  Token take(Tok k, std::size_t len, Comparator c = Comparator::Eq) {
    Token t{k, std::string(s_.substr(i_, len)), i_, c};
    i_ += len;
    return t;
  }

  Token next() {
    struct Sym {
      std::string_view text;
      Tok kind;
      Comparator cmp;
    };
    // longest match first
    static const Sym syms[] = {
        {"<->", Tok::Iff, {}},         {"↔", Tok::Iff, {}},          {"->", Tok::Implies, {}},
        {"→", Tok::Implies, {}},       {">=", Tok::Cmp, Comparator::Geq}, {"<=", Tok::Cmp, Comparator::Leq},
        {"!=", Tok::Cmp, Comparator::Neq}, {"≥", Tok::Cmp, Comparator::Geq}, {"≤", Tok::Cmp, Comparator::Leq},
        {"≠", Tok::Cmp, Comparator::Neq}, {"==", Tok::Cmp, Comparator::Eq}, {"=", Tok::Cmp, Comparator::Eq},
        {">", Tok::Cmp, Comparator::Gt}, {"<", Tok::Cmp, Comparator::Lt}, {"!", Tok::Not, {}},
        {"¬", Tok::Not, {}},           {"&", Tok::And, {}},          {"∧", Tok::And, {}},
        {"|", Tok::Or, {}},            {"∨", Tok::Or, {}},           {"+", Tok::Plus, {}},
        {"-", Tok::Minus, {}},         {"−", Tok::Minus, {}},        {"(", Tok::LParen, {}},
        {")", Tok::RParen, {}},        {"#t", Tok::True, {}},        {"#f", Tok::False, {}},
        {"⊤", Tok::True, {}},          {"⊥", Tok::False, {}},
    };
    for (const auto& sym : syms)
      if (starts(sym.text)) {
        if ((sym.kind == Tok::True || sym.kind == Tok::False) && sym.text[0] == '#' && i_ + 2 < s_.size() &&
            ident_char(s_[i_ + 2]))
          break;
        return take(sym.kind, sym.text.size(), sym.cmp);
      }
    char c = s_[i_];
    if (ident_start(c)) {
      std::size_t j = i_;
      while (j < s_.size() && ident_char(s_[j])) ++j;
      return take(Tok::Ident, j - i_);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '.' || s_[j] == '/')) ++j;
      return take(Tok::Number, j - i_);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : toks_(Lexer(text).run()) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], static_cast<int>(i));
  }

  Term whole_term() {
    Term t = term_implies();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula whole_formula() {
    Formula f = formula_iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++k_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what + (peek().kind == Tok::End ? " but input ended" : ", found '" + peek().text + "'"),
                       peek().pos);
    return toks_[k_++];
  }

  Term term_implies() {
    Term t = term_or();
    while (accept(Tok::Implies)) t = Term::implication(std::move(t), term_or());
    return t;
  }
  Term term_or() {
    Term t = term_and();
    while (accept(Tok::Or)) t = Term::disjunction(std::move(t), term_and());
    return t;
  }
  Term term_and() {
    Term t = term_unary();
    while (accept(Tok::And)) t = Term::conjunction(std::move(t), term_unary());
    return t;
  }
  Term term_unary() {
    if (accept(Tok::Not)) return Term::negation(term_unary());
    return term_primary();
  }
  Term term_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++k_;
        Term inner = term_implies();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::True: ++k_; return Term::top();
      case Tok::False: ++k_; return Term::bottom();
      case Tok::Ident: {
        auto it = index_.find(t.text);
        if (it == index_.end()) throw ParseError("unknown argument '" + t.text + "'", t.pos);
        ++k_;
        return Term::argument(it->second);
      }
      default:
        throw ParseError(t.kind == Tok::End ? "expected a term but input ended" : "expected a term, found '" + t.text + "'",
                         t.pos);
    }
  }

  Formula formula_iff() {
    Formula f = formula_implies();
    while (accept(Tok::Iff)) f = Formula::biconditional(std::move(f), formula_implies());
    return f;
  }
  Formula formula_implies() {
    Formula f = formula_or();
    while (accept(Tok::Implies)) f = Formula::implication(std::move(f), formula_or());
    return f;
  }
  Formula formula_or() {
    Formula f = formula_and();
    while (accept(Tok::Or)) f = Formula::disjunction(std::move(f), formula_and());
    return f;
  }
  Formula formula_and() {
    Formula f = formula_unary();
    while (accept(Tok::And)) f = Formula::conjunction(std::move(f), formula_unary());
    return f;
  }
  Formula formula_unary() {
    if (accept(Tok::Not)) return Formula::negation(formula_unary());
    return formula_primary();
  }
  Formula formula_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++k_;
        Formula inner = formula_iff();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::True: ++k_; return Formula::top();
      case Tok::False: ++k_; return Formula::bottom();
      case Tok::Number: {
        // a comparison between two constants folds to #t or #f
        Rational lhs = number();
        Comparator c = expect(Tok::Cmp, "a comparator").cmp;
        Rational rhs = number();
        return holds(lhs, c, rhs) ? Formula::top() : Formula::bottom();
      }
      case Tok::Ident:
        if (t.text == "p") return atom();
        [[fallthrough]];
      default:
        throw ParseError(t.kind == Tok::End ? "expected a formula but input ended" : "expected a formula, found '" + t.text + "'",
                         t.pos);
    }
  }

  Term probability_term() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != "p") throw ParseError("expected p(...)", t.pos);
    ++k_;
    expect(Tok::LParen, "'(' after p");
    Term inner = term_implies();
    expect(Tok::RParen, "')' closing p(...)");
    return inner;
  }

  Formula atom() {
    Atom a;
    a.lhs.terms.push_back(probability_term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      a.lhs.ops.push_back(peek().kind == Tok::Plus ? ArithOp::Plus : ArithOp::Minus);
      ++k_;
      a.lhs.terms.push_back(probability_term());
    }
    a.cmp = expect(Tok::Cmp, "a comparator").cmp;
    a.rhs = number();
    if (a.rhs < 0 || a.rhs > 1) throw ParseError("threshold " + to_string(a.rhs) + " outside [0,1]", toks_[k_ - 1].pos);
    return Formula::make_atom(std::move(a));
  }

  Rational number() {
    const Token& t = expect(Tok::Number, "a number");
    try {
      return parse_rational(t.text);
    } catch (const ParseError& e) {
      throw ParseError("malformed number '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::unordered_map<std::string, int> index_;
};

}  // namespace

Term parse_term(std::string_view text, std::span<const std::string> names) { return Parser(text, names).whole_term(); }

Formula parse_formula(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).whole_formula();
}

bool valid_argument_name(std::string_view s) {
  if (s.empty() || !ident_start(s[0]) || s == "p") return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace epigraph
