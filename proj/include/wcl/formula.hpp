#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

// ---------------------------------------------------------------------------
// Interaction formulas (propositional, over ports).
// ---------------------------------------------------------------------------

class Pil {
 public:
  enum class Kind { True, Atom, Not, Or };

  Kind kind() const;
  const Port& port() const;
  const Pil& lhs() const;  // operand of Not, left of Or
  const Pil& rhs() const;

  friend bool operator==(const Pil& a, const Pil& b);

  struct Node;
  explicit Pil(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  const Node* node() const { return n_.get(); }

 private:
  std::shared_ptr<const Node> n_;
};

struct Pil::Node {
  Kind kind;
  Port port;
  std::vector<Pil> kids;
};

Pil pil_true();
Pil pil_false();
Pil pil_atom(Port p);
// Collapses double negation.
Pil pil_not(const Pil& a);
Pil pil_or(const Pil& a, const Pil& b);
Pil pil_and(const Pil& a, const Pil& b);

// a |= phi, with a given as a mask over u. Atoms outside u are false.
bool pil_satisfies(PortMask a, const Pil& phi, const PortUniverse& u);

// The conjunction of every port of u, positive when in a and negated otherwise.
Pil characteristic_monomial(PortMask a, const PortUniverse& u);

// ---------------------------------------------------------------------------
// Component predicates used by first-order quantifiers.
// ---------------------------------------------------------------------------

class Predicate {
 public:
  enum class Kind { True, Eq, Neq, And };

  Predicate();  // true
  static Predicate eq(std::string lhs, std::string rhs);
  static Predicate neq(std::string lhs, std::string rhs);
  static Predicate conj(const Predicate& a, const Predicate& b);

  Kind kind() const { return kind_; }
  const std::string& left_term() const { return l_; }
  const std::string& right_term() const { return r_; }
  const Predicate& lhs() const { return kids_->first; }
  const Predicate& rhs() const { return kids_->second; }

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  Kind kind_ = Kind::True;
  std::string l_, r_;
  std::shared_ptr<const std::pair<Predicate, Predicate>> kids_;
};

// The binder of a quantifier: variable, component type ("U" matches every
// component) and an optional side condition.
struct Binder {
  std::string var;
  std::string type;
  Predicate where;

  friend bool operator==(const Binder&, const Binder&) = default;
};

inline constexpr const char* kUniversalType = "U";

// ---------------------------------------------------------------------------
// Boolean configuration formulas. The first-order kinds (Exists, Sum, Cond)
// only appear in formulas evaluated against a component model.
// ---------------------------------------------------------------------------

class Formula {
 public:
  enum class Kind { True, Interaction, Not, Union, Coalesce, Exists, Sum, Cond };

  Kind kind() const;
  const Pil& pil() const;          // Interaction
  const Formula& lhs() const;      // Not operand, binary left, quantifier body
  const Formula& rhs() const;
  const Binder& binder() const;    // Exists, Sum
  const Predicate& condition() const;  // Cond

  friend bool operator==(const Formula& a, const Formula& b);

  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  const Node* node() const { return n_.get(); }

 private:
  std::shared_ptr<const Node> n_;
};

struct Formula::Node {
  Kind kind;
  std::optional<Pil> pil;
  Binder binder;
  std::vector<Formula> kids;
};

Formula pcl_true();
Formula pcl_false();
Formula pcl_interaction(const Pil& phi);
Formula pcl_not(const Formula& f);
Formula pcl_union(const Formula& a, const Formula& b);
Formula pcl_coalesce(const Formula& a, const Formula& b);
// Derived operators expand into the core ones.
Formula pcl_meet(const Formula& a, const Formula& b);         // not(not a \/ not b)
Formula pcl_implies(const Formula& a, const Formula& b);      // not a \/ b
Formula pcl_closure(const Formula& f);                        // f + true
Formula pcl_disjunction(const Formula& a, const Formula& b);  // a \/ b \/ (a + b)

Formula focl_exists(Binder b, const Formula& body);
Formula focl_sum(Binder b, const Formula& body);
Formula focl_forall(Binder b, const Formula& body);  // not exists not
Formula focl_cond(const Predicate& p);

// ---------------------------------------------------------------------------
// Weighted configuration formulas.
// ---------------------------------------------------------------------------

class WFormula {
 public:
  enum class Kind { Const, Bool, Plus, Times, Coalesce, Closure, OplusQ, OtimesQ, OuplusQ };

  Kind kind() const;
  const Value& value() const;       // Const
  const Formula& boolean() const;   // Bool
  const WFormula& lhs() const;      // unary operand, binary left, quantifier body
  const WFormula& rhs() const;
  const Binder& binder() const;

  friend bool operator==(const WFormula& a, const WFormula& b);

  struct Node;
  explicit WFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  const Node* node() const { return n_.get(); }

 private:
  std::shared_ptr<const Node> n_;
};

struct WFormula::Node {
  Kind kind;
  Value value;
  std::optional<Formula> boolean;
  Binder binder;
  std::vector<WFormula> kids;
};

WFormula w_const(const Value& k);
WFormula w_bool(const Formula& f);
WFormula w_plus(const WFormula& a, const WFormula& b);
WFormula w_times(const WFormula& a, const WFormula& b);
WFormula w_coalesce(const WFormula& a, const WFormula& b);
// Sums the operand over every nonempty sub-configuration.
WFormula w_closure(const WFormula& z);
// a (+) b (+) (a (#) b)
WFormula w_disjunction(const WFormula& a, const WFormula& b);
// Yields z where f holds and one elsewhere: not f (+) (f (*) z).
WFormula w_guard(const Formula& f, const WFormula& z);

WFormula w_oplus_q(Binder b, const WFormula& body);
WFormula w_otimes_q(Binder b, const WFormula& body);
WFormula w_ouplus_q(Binder b, const WFormula& body);

// Folds of several operands; the operand list must be nonempty.
WFormula w_plus_all(const std::vector<WFormula>& zs);
WFormula w_times_all(const std::vector<WFormula>& zs);
WFormula w_coalesce_all(const std::vector<WFormula>& zs);
Formula pcl_coalesce_all(const std::vector<Formula>& fs);

// ---------------------------------------------------------------------------
// Structural queries.
// ---------------------------------------------------------------------------

bool is_first_order(const Formula& f);
bool is_first_order(const WFormula& z);
// True when the weighted formula has no coalescing or closure and every
// Boolean leaf is an interaction formula.
bool is_weighted_interaction_formula(const WFormula& z);
// Semiring of the constants, if any; throws UsageError when constants disagree.
std::optional<SemiringId> constant_semiring(const WFormula& z);
std::size_t formula_size(const Formula& f);
std::size_t formula_size(const WFormula& z);

// Canonical text, parseable by parse_formula.
std::string to_string(const Pil& phi);
std::string to_string(const Predicate& p);
std::string to_string(const Formula& f);
std::string to_string(const WFormula& z);

}  // namespace wcl
