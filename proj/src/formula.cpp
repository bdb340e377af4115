#include "wcl/formula.hpp"

#include <stdexcept>

#include "wcl/errors.hpp"

namespace wcl {

// ---------------------------------------------------------------------------
// PIL
// ---------------------------------------------------------------------------

namespace {

Pil make_pil(Pil::Kind k, Port p, std::vector<Pil> kids) {
  return Pil(std::make_shared<const Pil::Node>(Pil::Node{k, std::move(p), std::move(kids)}));
}

}  // namespace

Pil::Kind Pil::kind() const { return n_->kind; }
const Port& Pil::port() const { return n_->port; }
const Pil& Pil::lhs() const { return n_->kids.at(0); }
const Pil& Pil::rhs() const { return n_->kids.at(1); }

bool operator==(const Pil& a, const Pil& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Pil::Kind::True: return true;
    case Pil::Kind::Atom: return a.port() == b.port();
    case Pil::Kind::Not: return a.lhs() == b.lhs();
    case Pil::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

Pil pil_true() {
  static const Pil t = make_pil(Pil::Kind::True, {}, {});
  return t;
}
Pil pil_false() { return pil_not(pil_true()); }
Pil pil_atom(Port p) { return make_pil(Pil::Kind::Atom, std::move(p), {}); }
Pil pil_not(const Pil& a) {
  if (a.kind() == Pil::Kind::Not) return a.lhs();
  return make_pil(Pil::Kind::Not, {}, {a});
}
Pil pil_or(const Pil& a, const Pil& b) { return make_pil(Pil::Kind::Or, {}, {a, b}); }
Pil pil_and(const Pil& a, const Pil& b) { return pil_not(pil_or(pil_not(a), pil_not(b))); }

bool pil_satisfies(PortMask a, const Pil& phi, const PortUniverse& u) {
  switch (phi.kind()) {
    case Pil::Kind::True: return true;
    case Pil::Kind::Atom: {
      auto i = u.index_of(phi.port());
      return i && (a >> *i & 1);
    }
    case Pil::Kind::Not: return !pil_satisfies(a, phi.lhs(), u);
    case Pil::Kind::Or: return pil_satisfies(a, phi.lhs(), u) || pil_satisfies(a, phi.rhs(), u);
  }
  return false;
}

Pil characteristic_monomial(PortMask a, const PortUniverse& u) {
  if (u.size() == 0) throw UsageError("empty port universe");
  std::optional<Pil> acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Pil lit = (a >> i & 1) ? pil_atom(u.at(i)) : pil_not(pil_atom(u.at(i)));
    acc = acc ? pil_and(*acc, lit) : lit;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

Predicate::Predicate() = default;

Predicate Predicate::eq(std::string lhs, std::string rhs) {
  Predicate p;
  p.kind_ = Kind::Eq;
  p.l_ = std::move(lhs);
  p.r_ = std::move(rhs);
  return p;
}

Predicate Predicate::neq(std::string lhs, std::string rhs) {
  Predicate p = eq(std::move(lhs), std::move(rhs));
  p.kind_ = Kind::Neq;
  return p;
}

Predicate Predicate::conj(const Predicate& a, const Predicate& b) {
  Predicate p;
  p.kind_ = Kind::And;
  p.kids_ = std::make_shared<const std::pair<Predicate, Predicate>>(a, b);
  return p;
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Predicate::Kind::True: return true;
    case Predicate::Kind::Eq:
    case Predicate::Kind::Neq: return a.l_ == b.l_ && a.r_ == b.r_;
    case Predicate::Kind::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Boolean formulas
// ---------------------------------------------------------------------------

namespace {

Formula make_formula(Formula::Kind k, std::vector<Formula> kids, std::optional<Pil> pil = {},
                     Binder b = {}) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{k, std::move(pil), std::move(b), std::move(kids)}));
}

}  // namespace

Formula::Kind Formula::kind() const { return n_->kind; }
const Pil& Formula::pil() const { return *n_->pil; }
const Formula& Formula::lhs() const { return n_->kids.at(0); }
const Formula& Formula::rhs() const { return n_->kids.at(1); }
const Binder& Formula::binder() const { return n_->binder; }
const Predicate& Formula::condition() const { return n_->binder.where; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::Interaction: return a.pil() == b.pil();
    case Formula::Kind::Not: return a.lhs() == b.lhs();
    case Formula::Kind::Union:
    case Formula::Kind::Coalesce: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Exists:
    case Formula::Kind::Sum: return a.binder() == b.binder() && a.lhs() == b.lhs();
    case Formula::Kind::Cond: return a.condition() == b.condition();
  }
  return false;
}

Formula pcl_true() {
  static const Formula t = make_formula(Formula::Kind::True, {});
  return t;
}
Formula pcl_false() { return pcl_not(pcl_true()); }
Formula pcl_interaction(const Pil& phi) { return make_formula(Formula::Kind::Interaction, {}, phi); }
Formula pcl_not(const Formula& f) { return make_formula(Formula::Kind::Not, {f}); }
Formula pcl_union(const Formula& a, const Formula& b) {
  return make_formula(Formula::Kind::Union, {a, b});
}
Formula pcl_coalesce(const Formula& a, const Formula& b) {
  return make_formula(Formula::Kind::Coalesce, {a, b});
}
Formula pcl_meet(const Formula& a, const Formula& b) {
  return pcl_not(pcl_union(pcl_not(a), pcl_not(b)));
}
Formula pcl_implies(const Formula& a, const Formula& b) { return pcl_union(pcl_not(a), b); }
Formula pcl_closure(const Formula& f) { return pcl_coalesce(f, pcl_true()); }
Formula pcl_disjunction(const Formula& a, const Formula& b) {
  return pcl_union(pcl_union(a, b), pcl_coalesce(a, b));
}

Formula focl_exists(Binder b, const Formula& body) {
  return make_formula(Formula::Kind::Exists, {body}, std::nullopt, std::move(b));
}
Formula focl_sum(Binder b, const Formula& body) {
  return make_formula(Formula::Kind::Sum, {body}, std::nullopt, std::move(b));
}
Formula focl_forall(Binder b, const Formula& body) {
  return pcl_not(focl_exists(std::move(b), pcl_not(body)));
}
Formula focl_cond(const Predicate& p) {
  Binder b;
  b.where = p;
  return make_formula(Formula::Kind::Cond, {}, std::nullopt, std::move(b));
}

Formula pcl_coalesce_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw UsageError("coalescing of an empty list");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = pcl_coalesce(acc, fs[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Weighted formulas
// ---------------------------------------------------------------------------

namespace {

WFormula make_w(WFormula::Kind k, std::vector<WFormula> kids, Value v = {},
                std::optional<Formula> f = {}, Binder b = {}) {
  return WFormula(std::make_shared<const WFormula::Node>(
      WFormula::Node{k, v, std::move(f), std::move(b), std::move(kids)}));
}

}  // namespace

WFormula::Kind WFormula::kind() const { return n_->kind; }
const Value& WFormula::value() const { return n_->value; }
const Formula& WFormula::boolean() const { return *n_->boolean; }
const WFormula& WFormula::lhs() const { return n_->kids.at(0); }
const WFormula& WFormula::rhs() const { return n_->kids.at(1); }
const Binder& WFormula::binder() const { return n_->binder; }

bool operator==(const WFormula& a, const WFormula& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case WFormula::Kind::Const: return a.value() == b.value();
    case WFormula::Kind::Bool: return a.boolean() == b.boolean();
    case WFormula::Kind::Plus:
    case WFormula::Kind::Times:
    case WFormula::Kind::Coalesce: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case WFormula::Kind::Closure: return a.lhs() == b.lhs();
    case WFormula::Kind::OplusQ:
    case WFormula::Kind::OtimesQ:
    case WFormula::Kind::OuplusQ: return a.binder() == b.binder() && a.lhs() == b.lhs();
  }
  return false;
}

WFormula w_const(const Value& k) { return make_w(WFormula::Kind::Const, {}, k); }
WFormula w_bool(const Formula& f) { return make_w(WFormula::Kind::Bool, {}, {}, f); }
WFormula w_plus(const WFormula& a, const WFormula& b) { return make_w(WFormula::Kind::Plus, {a, b}); }
WFormula w_times(const WFormula& a, const WFormula& b) {
  return make_w(WFormula::Kind::Times, {a, b});
}
WFormula w_coalesce(const WFormula& a, const WFormula& b) {
  return make_w(WFormula::Kind::Coalesce, {a, b});
}
WFormula w_closure(const WFormula& z) { return make_w(WFormula::Kind::Closure, {z}); }
WFormula w_disjunction(const WFormula& a, const WFormula& b) {
  return w_plus(w_plus(a, b), w_coalesce(a, b));
}
WFormula w_guard(const Formula& f, const WFormula& z) {
  return w_plus(w_bool(pcl_not(f)), w_times(w_bool(f), z));
}

WFormula w_oplus_q(Binder b, const WFormula& body) {
  return make_w(WFormula::Kind::OplusQ, {body}, {}, std::nullopt, std::move(b));
}
WFormula w_otimes_q(Binder b, const WFormula& body) {
  return make_w(WFormula::Kind::OtimesQ, {body}, {}, std::nullopt, std::move(b));
}
WFormula w_ouplus_q(Binder b, const WFormula& body) {
  return make_w(WFormula::Kind::OuplusQ, {body}, {}, std::nullopt, std::move(b));
}

namespace {

template <class F>
WFormula fold_list(const std::vector<WFormula>& zs, F op) {
  if (zs.empty()) throw UsageError("fold of an empty formula list");
  WFormula acc = zs.front();
  for (std::size_t i = 1; i < zs.size(); ++i) acc = op(acc, zs[i]);
  return acc;
}

}  // namespace

WFormula w_plus_all(const std::vector<WFormula>& zs) { return fold_list(zs, w_plus); }
WFormula w_times_all(const std::vector<WFormula>& zs) { return fold_list(zs, w_times); }
WFormula w_coalesce_all(const std::vector<WFormula>& zs) { return fold_list(zs, w_coalesce); }

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

bool is_first_order(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::Interaction: return false;
    case Formula::Kind::Not: return is_first_order(f.lhs());
    case Formula::Kind::Union:
    case Formula::Kind::Coalesce: return is_first_order(f.lhs()) || is_first_order(f.rhs());
    case Formula::Kind::Exists:
    case Formula::Kind::Sum:
    case Formula::Kind::Cond: return true;
  }
  return false;
}

bool is_first_order(const WFormula& z) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return false;
    case WFormula::Kind::Bool: return is_first_order(z.boolean());
    case WFormula::Kind::Plus:
    case WFormula::Kind::Times:
    case WFormula::Kind::Coalesce: return is_first_order(z.lhs()) || is_first_order(z.rhs());
    case WFormula::Kind::Closure: return is_first_order(z.lhs());
    case WFormula::Kind::OplusQ:
    case WFormula::Kind::OtimesQ:
    case WFormula::Kind::OuplusQ: return true;
  }
  return false;
}

bool is_weighted_interaction_formula(const WFormula& z) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return true;
    case WFormula::Kind::Bool: return z.boolean().kind() == Formula::Kind::Interaction;
    case WFormula::Kind::Plus:
    case WFormula::Kind::Times:
      return is_weighted_interaction_formula(z.lhs()) && is_weighted_interaction_formula(z.rhs());
    default: return false;
  }
}

namespace {

void collect_semiring(const WFormula& z, std::optional<SemiringId>& out) {
  switch (z.kind()) {
    case WFormula::Kind::Const:
      if (out && *out != z.value().semiring()) {
        throw UsageError("formula mixes constants from different semirings");
      }
      out = z.value().semiring();
      return;
    case WFormula::Kind::Bool: return;
    case WFormula::Kind::Plus:
    case WFormula::Kind::Times:
    case WFormula::Kind::Coalesce:
      collect_semiring(z.lhs(), out);
      collect_semiring(z.rhs(), out);
      return;
    default: collect_semiring(z.lhs(), out);
  }
}

}  // namespace

std::optional<SemiringId> constant_semiring(const WFormula& z) {
  std::optional<SemiringId> out;
  collect_semiring(z, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  if (f.node()->kids.size() > 0) n += formula_size(f.lhs());
  if (f.node()->kids.size() > 1) n += formula_size(f.rhs());
  return n;
}

std::size_t formula_size(const WFormula& z) {
  std::size_t n = 1;
  if (z.kind() == WFormula::Kind::Bool) return formula_size(z.boolean());
  if (z.node()->kids.size() > 0) n += formula_size(z.lhs());
  if (z.node()->kids.size() > 1) n += formula_size(z.rhs());
  return n;
}

// ---------------------------------------------------------------------------
// Printing. Precedence levels, tightest first: 0 primary, 1 prefix,
// 2 conjunction-like, 3 coalescing, 4 union-like, 5 implication, 6 quantifier.
// ---------------------------------------------------------------------------

namespace {

struct Text {
  std::string s;
  int prec;
};

std::string wrap(const Text& t, int max_prec) {
  return t.prec <= max_prec ? t.s : "(" + t.s + ")";
}

// Left operands may sit at the same level, right operands must bind tighter.
std::string infix(const Text& l, const char* op, const Text& r, int prec) {
  return wrap(l, prec) + " " + op + " " + wrap(r, prec - 1);
}

Text pil_text(const Pil& p) {
  switch (p.kind()) {
    case Pil::Kind::True: return {"true", 0};
    case Pil::Kind::Atom: return {p.port().qualified(), 0};
    case Pil::Kind::Or: return {infix(pil_text(p.lhs()), "|", pil_text(p.rhs()), 4), 4};
    case Pil::Kind::Not: {
      const Pil& x = p.lhs();
      if (x.kind() == Pil::Kind::True) return {"false", 0};
      if (x.kind() == Pil::Kind::Or) {
        // not(a | b) is how conjunction is stored; print it back as a & b.
        return {infix(pil_text(pil_not(x.lhs())), "&", pil_text(pil_not(x.rhs())), 2), 2};
      }
      return {"!" + wrap(pil_text(x), 1), 1};
    }
  }
  return {"?", 0};
}

Text pred_text(const Predicate& p) {
  switch (p.kind()) {
    case Predicate::Kind::True: return {"true", 0};
    case Predicate::Kind::Eq: return {p.left_term() + " = " + p.right_term(), 1};
    case Predicate::Kind::Neq: return {p.left_term() + " != " + p.right_term(), 1};
    case Predicate::Kind::And:
      return {infix(pred_text(p.lhs()), "&&", pred_text(p.rhs()), 2), 2};
  }
  return {"?", 0};
}

std::string binder_text(const char* q, const Binder& b) {
  std::string out = std::string(q) + " " + b.var + ":" + b.type;
  if (b.where.kind() != Predicate::Kind::True) out += " where " + pred_text(b.where).s;
  return out + " . ";
}

Text formula_text(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True: return {"true", 0};
    case Formula::Kind::Interaction: return {"{" + pil_text(f.pil()).s + "}", 0};
    case Formula::Kind::Not:
      if (f.lhs().kind() == Formula::Kind::True) return {"false", 0};
      return {"not " + wrap(formula_text(f.lhs()), 1), 1};
    case Formula::Kind::Union:
      return {infix(formula_text(f.lhs()), "\\/", formula_text(f.rhs()), 4), 4};
    case Formula::Kind::Coalesce:
      return {infix(formula_text(f.lhs()), "+", formula_text(f.rhs()), 3), 3};
    case Formula::Kind::Exists:
      return {binder_text("exists", f.binder()) + formula_text(f.lhs()).s, 6};
    case Formula::Kind::Sum: return {binder_text("sum", f.binder()) + formula_text(f.lhs()).s, 6};
    case Formula::Kind::Cond: return {"[" + pred_text(f.condition()).s + "]", 0};
  }
  return {"?", 0};
}

Text wformula_text(const WFormula& z) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return {to_exact_string(z.value()), 0};
    case WFormula::Kind::Bool: return formula_text(z.boolean());
    case WFormula::Kind::Plus:
      return {infix(wformula_text(z.lhs()), "(+)", wformula_text(z.rhs()), 4), 4};
    case WFormula::Kind::Times:
      return {infix(wformula_text(z.lhs()), "(*)", wformula_text(z.rhs()), 2), 2};
    case WFormula::Kind::Coalesce:
      return {infix(wformula_text(z.lhs()), "(#)", wformula_text(z.rhs()), 3), 3};
    case WFormula::Kind::Closure: return {"close(" + wformula_text(z.lhs()).s + ")", 0};
    case WFormula::Kind::OplusQ:
      return {binder_text("Oplus", z.binder()) + wformula_text(z.lhs()).s, 6};
    case WFormula::Kind::OtimesQ:
      return {binder_text("Otimes", z.binder()) + wformula_text(z.lhs()).s, 6};
    case WFormula::Kind::OuplusQ:
      return {binder_text("Ouplus", z.binder()) + wformula_text(z.lhs()).s, 6};
  }
  return {"?", 0};
}

}  // namespace

std::string to_string(const Pil& phi) { return pil_text(phi).s; }
std::string to_string(const Predicate& p) { return pred_text(p).s; }
std::string to_string(const Formula& f) { return formula_text(f).s; }
std::string to_string(const WFormula& z) { return wformula_text(z).s; }

}  // namespace wcl
