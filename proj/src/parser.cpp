#include "wcl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "wcl/errors.hpp"

namespace wcl {

std::string_view dialect_name(Dialect d) {
  switch (d) {
    case Dialect::pil: return "pil";
    case Dialect::pcl: return "pcl";
    case Dialect::wpcl: return "wpcl";
    case Dialect::focl: return "focl";
    case Dialect::wfocl: return "wfocl";
  }
  return "?";
}

Dialect parse_dialect(std::string_view name) {
  for (Dialect d : {Dialect::pil, Dialect::pcl, Dialect::wpcl, Dialect::focl, Dialect::wfocl}) {
    if (dialect_name(d) == name) return d;
  }
  throw UsageError("unknown dialect '" + std::string(name) + "'");
}

Dialect dialect_of_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) {
    throw UsageError("cannot tell the dialect of '" + std::string(path) + "'; pass --dialect");
  }
  return parse_dialect(path.substr(dot + 1));
}

bool is_weighted(Dialect d) { return d == Dialect::wpcl || d == Dialect::wfocl; }

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  End, Ident, Number, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Dot, Colon,
  Amp, AmpAmp, Bar, Bang, BangEq, Equal, Implies, Tilde, Plus, OPlus, OTimes, OUplus, Meet,
  Join, NegInf
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("//")) {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    auto emit = [&](Tok k, std::size_t n) {
      t.kind = k;
      t.text = std::string(s.substr(i, n));
      advance(n);
      out.push_back(t);
    };
    if (starts("(+)")) { emit(Tok::OPlus, 3); continue; }
    if (starts("(*)")) { emit(Tok::OTimes, 3); continue; }
    if (starts("(#)")) { emit(Tok::OUplus, 3); continue; }
    if (starts("/\\")) { emit(Tok::Meet, 2); continue; }
    if (starts("\\/")) { emit(Tok::Join, 2); continue; }
    if (starts("=>")) { emit(Tok::Implies, 2); continue; }
    if (starts("&&")) { emit(Tok::AmpAmp, 2); continue; }
    if (starts("!=")) { emit(Tok::BangEq, 2); continue; }
    if (starts("-inf")) { emit(Tok::NegInf, 4); continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (i + n < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i + n])) || s[i + n] == '_')) {
        ++n;
      }
      emit(Tok::Ident, n);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      auto digit_at = [&](std::size_t k) {
        return i + k < s.size() && std::isdigit(static_cast<unsigned char>(s[i + k]));
      };
      while (digit_at(n)) ++n;
      if (i + n < s.size() && s[i + n] == '.' && digit_at(n + 1)) {
        ++n;
        while (digit_at(n)) ++n;
      }
      if (i + n < s.size() && (s[i + n] == 'e' || s[i + n] == 'E')) {
        std::size_t m = n + 1;
        if (i + m < s.size() && (s[i + m] == '+' || s[i + m] == '-')) ++m;
        if (digit_at(m)) {
          n = m;
          while (digit_at(n)) ++n;
        }
      }
      emit(Tok::Number, n);
      continue;
    }
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '{': emit(Tok::LBrace, 1); continue;
      case '}': emit(Tok::RBrace, 1); continue;
      case '[': emit(Tok::LBracket, 1); continue;
      case ']': emit(Tok::RBracket, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case ':': emit(Tok::Colon, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '|': emit(Tok::Bar, 1); continue;
      case '!': emit(Tok::Bang, 1); continue;
      case '=': emit(Tok::Equal, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      case '+': emit(Tok::Plus, 1); continue;
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  static const char* const kw[] = {"true",  "false", "not",    "or",     "close",  "guard",
                                   "inf",   "exists", "sum",   "forall", "Oplus",  "Otimes",
                                   "Ouplus", "where"};
  return std::any_of(std::begin(kw), std::end(kw), [&](const char* k) { return s == k; });
}

// A parsed subexpression: Boolean until a weighted construct touches it.
struct Expr {
  std::optional<Formula> f;
  std::optional<WFormula> z;

  bool weighted() const { return z.has_value(); }
  WFormula as_weighted() const { return z ? *z : w_bool(*f); }
};

Expr boolean(Formula f) { return Expr{std::move(f), std::nullopt}; }
Expr weighted(WFormula z) { return Expr{std::nullopt, std::move(z)}; }

class Parser {
 public:
  Parser(std::string_view text, Dialect d, const ParseOptions& opts)
      : toks_(lex(text)), dialect_(d), opts_(opts) {}

  Pil whole_pil() {
    const bool braced = peek().kind == Tok::LBrace;
    if (braced) next();
    Pil p = pil_or();
    if (braced) expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    return p;
  }

  Expr whole() {
    Expr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_ident(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) {
      fail(t, std::string("expected ") + what + ", found " + describe(t));
    }
    return next().text;
  }

  void require_weighted(const Token& t) const {
    if (!is_weighted(dialect_)) {
      fail(t, "weighted construct " + describe(t) + " is not allowed in a " +
                  std::string(dialect_name(dialect_)) + " formula");
    }
  }
  Formula require_boolean(const Expr& e, const Token& op) const {
    if (e.weighted()) {
      fail(op, "operator " + describe(op) +
                   " needs Boolean operands; use (+), (*), (#) or close() for weighted ones");
    }
    return *e.f;
  }

  // Precedence levels, loosest first: =>, union-like, coalescing, conjunction-like, prefix.
  Expr expr() { return implication(); }

  Expr implication() {
    Expr l = union_level();
    if (peek().kind == Tok::Implies) {
      const Token op = next();
      Expr r = implication();
      return boolean(pcl_implies(require_boolean(l, op), require_boolean(r, op)));
    }
    return l;
  }

  Expr union_level() {
    Expr l = coalesce_level();
    while (true) {
      const Token op = peek();
      if (op.kind == Tok::Bar || op.kind == Tok::Join) {
        next();
        Expr r = coalesce_level();
        l = boolean(pcl_union(require_boolean(l, op), require_boolean(r, op)));
      } else if (op.kind == Tok::OPlus) {
        require_weighted(op);
        next();
        Expr r = coalesce_level();
        l = weighted(w_plus(l.as_weighted(), r.as_weighted()));
      } else if (op.kind == Tok::Ident && op.text == "or") {
        next();
        Expr r = coalesce_level();
        if (l.weighted() || r.weighted()) {
          l = weighted(w_disjunction(l.as_weighted(), r.as_weighted()));
        } else {
          l = boolean(pcl_disjunction(*l.f, *r.f));
        }
      } else {
        return l;
      }
    }
  }

  Expr coalesce_level() {
    Expr l = conj_level();
    while (true) {
      const Token op = peek();
      if (op.kind == Tok::Plus) {
        next();
        Expr r = conj_level();
        l = boolean(pcl_coalesce(require_boolean(l, op), require_boolean(r, op)));
      } else if (op.kind == Tok::OUplus) {
        require_weighted(op);
        next();
        Expr r = conj_level();
        l = weighted(w_coalesce(l.as_weighted(), r.as_weighted()));
      } else {
        return l;
      }
    }
  }

  Expr conj_level() {
    Expr l = prefix();
    while (true) {
      const Token op = peek();
      if (op.kind == Tok::Amp || op.kind == Tok::Meet) {
        next();
        Expr r = prefix();
        l = boolean(pcl_meet(require_boolean(l, op), require_boolean(r, op)));
      } else if (op.kind == Tok::OTimes) {
        require_weighted(op);
        next();
        Expr r = prefix();
        l = weighted(w_times(l.as_weighted(), r.as_weighted()));
      } else {
        return l;
      }
    }
  }

  Expr prefix() {
    const Token op = peek();
    if (op.kind == Tok::Bang || (op.kind == Tok::Ident && op.text == "not")) {
      next();
      Expr e = prefix();
      return boolean(pcl_not(require_boolean(e, op)));
    }
    if (op.kind == Tok::Tilde) {
      next();
      Expr e = prefix();
      if (e.weighted()) return weighted(w_closure(*e.z));
      return boolean(pcl_closure(*e.f));
    }
    if (op.kind == Tok::Ident) {
      static const char* const quantifiers[] = {"exists", "sum", "forall",
                                                "Oplus",  "Otimes", "Ouplus"};
      for (const char* q : quantifiers) {
        if (op.text == q) return quantifier();
      }
    }
    return primary();
  }

  Expr quantifier() {
    const Token q = next();
    const bool weighted_q = q.text[0] == 'O';
    if (dialect_ != Dialect::focl && dialect_ != Dialect::wfocl) {
      fail(q, "quantifier " + describe(q) + " is only allowed in focl and wfocl formulas");
    }
    if (weighted_q) require_weighted(q);
    Binder b;
    const Token& vt = peek();
    b.var = identifier("a variable name");
    if (std::find(scope_.begin(), scope_.end(), b.var) != scope_.end()) {
      fail(vt, "variable '" + b.var + "' shadows an enclosing binding of the same name");
    }
    expect(Tok::Colon, "':'");
    b.type = identifier("a component type");
    if (at_ident("where")) {
      next();
      b.where = predicate();
    }
    expect(Tok::Dot, "'.'");
    scope_.push_back(b.var);
    Expr body = expr();
    scope_.pop_back();
    if (q.text == "exists") return boolean(focl_exists(b, require_boolean(body, q)));
    if (q.text == "sum") return boolean(focl_sum(b, require_boolean(body, q)));
    if (q.text == "forall") return boolean(focl_forall(b, require_boolean(body, q)));
    if (q.text == "Oplus") return weighted(w_oplus_q(b, body.as_weighted()));
    if (q.text == "Otimes") return weighted(w_otimes_q(b, body.as_weighted()));
    return weighted(w_ouplus_q(b, body.as_weighted()));
  }

  Value literal(const Token& t) {
    require_weighted(t);
    try {
      return parse_value(opts_.semiring, t.text);
    } catch (const UsageError& e) {
      fail(t, e.what());
    }
  }

  Expr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBrace: {
        next();
        Formula f = braced();
        expect(Tok::RBrace, "'}'");
        return boolean(f);
      }
      case Tok::LBracket: {
        next();
        if (dialect_ != Dialect::focl && dialect_ != Dialect::wfocl) {
          fail(t, "component conditions are only allowed in focl and wfocl formulas");
        }
        Predicate p = predicate();
        expect(Tok::RBracket, "']'");
        return boolean(focl_cond(p));
      }
      case Tok::Number: next(); return weighted(w_const(literal(t)));
      case Tok::NegInf: next(); return weighted(w_const(literal(t)));
      case Tok::Ident: break;
      default: fail(t, "expected a formula, found " + describe(t));
    }
    if (t.text == "true") {
      next();
      return boolean(pcl_true());
    }
    if (t.text == "false") {
      next();
      return boolean(pcl_false());
    }
    if (t.text == "inf") {
      next();
      return weighted(w_const(literal(t)));
    }
    if (t.text == "close") {
      require_weighted(t);
      next();
      expect(Tok::LParen, "'('");
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return weighted(w_closure(e.as_weighted()));
    }
    if (t.text == "guard") {
      require_weighted(t);
      next();
      expect(Tok::LParen, "'('");
      Expr cond = expr();
      const Token comma = expect(Tok::Comma, "','");
      Expr body = expr();
      expect(Tok::RParen, "')'");
      if (cond.weighted()) fail(comma, "the condition of guard() must be a Boolean formula");
      return weighted(w_guard(*cond.f, body.as_weighted()));
    }
    if (is_keyword(t.text)) fail(t, "unexpected keyword " + describe(t));
    require_weighted(t);
    auto it = opts_.weights.find(t.text);
    if (it == opts_.weights.end()) fail(t, "unknown weight name '" + t.text + "'");
    if (it->second.semiring() != opts_.semiring) {
      fail(t, "weight '" + t.text + "' is not in the " +
                  std::string(semiring_name(opts_.semiring)) + " semiring");
    }
    next();
    return weighted(w_const(it->second));
  }

  // Inside braces: interaction formulas, optionally joined by '+'.
  Formula braced() {
    std::vector<Formula> parts{pcl_interaction(pil_or())};
    while (peek().kind == Tok::Plus) {
      next();
      parts.push_back(pcl_interaction(pil_or()));
    }
    return pcl_coalesce_all(parts);
  }

  Pil pil_or() {
    Pil l = pil_and();
    while (peek().kind == Tok::Bar) {
      next();
      l = pil_or_of(l, pil_and());
    }
    return l;
  }
  static Pil pil_or_of(const Pil& a, const Pil& b) { return wcl::pil_or(a, b); }

  Pil pil_and() {
    Pil l = pil_not_level();
    while (peek().kind == Tok::Amp) {
      next();
      l = wcl::pil_and(l, pil_not_level());
    }
    return l;
  }

  Pil pil_not_level() {
    if (peek().kind == Tok::Bang) {
      next();
      return wcl::pil_not(pil_not_level());
    }
    return pil_atom_level();
  }

  Pil pil_atom_level() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Pil p = pil_or();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a port name, found " + describe(t));
    next();
    if (t.text == "true") return pil_true();
    if (t.text == "false") return pil_false();
    Port p{"", t.text};
    if (peek().kind == Tok::Dot) {
      next();
      p.owner = t.text;
      p.name = identifier("a port name");
    }
    return pil_atom(p);
  }

  Predicate predicate() {
    Predicate l = predicate_atom();
    while (peek().kind == Tok::AmpAmp) {
      next();
      l = Predicate::conj(l, predicate_atom());
    }
    return l;
  }

  Predicate predicate_atom() {
    if (peek().kind == Tok::LParen) {
      next();
      Predicate p = predicate();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (at_ident("true")) {
      next();
      return Predicate();
    }
    std::string l = identifier("a variable or component name");
    const Token op = peek();
    if (op.kind != Tok::Equal && op.kind != Tok::BangEq) {
      fail(op, "expected '=' or '!=', found " + describe(op));
    }
    next();
    std::string r = identifier("a variable or component name");
    return op.kind == Tok::Equal ? Predicate::eq(l, r) : Predicate::neq(l, r);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Dialect dialect_;
  const ParseOptions& opts_;
  std::vector<std::string> scope_;
};

}  // namespace

Pil parse_pil(std::string_view text) {
  ParseOptions opts;
  return Parser(text, Dialect::pil, opts).whole_pil();
}

Formula parse_boolean(std::string_view text, Dialect d) {
  if (d != Dialect::pcl && d != Dialect::focl) {
    throw UsageError("parse_boolean expects the pcl or focl dialect");
  }
  ParseOptions opts;
  Expr e = Parser(text, d, opts).whole();
  return *e.f;
}

WFormula parse_weighted(std::string_view text, Dialect d, const ParseOptions& opts) {
  if (d != Dialect::wpcl && d != Dialect::wfocl) {
    throw UsageError("parse_weighted expects the wpcl or wfocl dialect");
  }
  return Parser(text, d, opts).whole().as_weighted();
}

ParsedFormula parse_formula(std::string_view text, Dialect d, const ParseOptions& opts) {
  switch (d) {
    case Dialect::pil: return parse_pil(text);
    case Dialect::pcl:
    case Dialect::focl: return parse_boolean(text, d);
    case Dialect::wpcl:
    case Dialect::wfocl: return parse_weighted(text, d, opts);
  }
  throw UsageError("unknown dialect");
}

}  // namespace wcl
