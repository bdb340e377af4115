#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wcl/formula.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

enum class Strategy { Auto, Direct, Sparse };

struct EvalOptions {
  Strategy strategy = Strategy::Auto;
  // Largest |gamma| the direct strategy accepts; it enumerates 3^|gamma|
  // splits per coalescing node.
  std::size_t direct_cap = 12;
  // Largest |gamma| the sparse strategy accepts, and the largest down-closed
  // block it will expand into explicit entries.
  std::size_t sparse_cap = 22;
  // Auto picks direct up to this size and sparse beyond it.
  std::size_t auto_direct_max = 10;
};

// gamma |= f. Ports of f must belong to u.
bool pcl_satisfies(const Configuration& g, const Formula& f, const PortUniverse& u,
                   const EvalOptions& opts = {});

// Ordered pairs (g1, g2) of nonempty sub-configurations with g1 u g2 = g.
// There are 3^n - 2 of them for |g| = n.
std::vector<std::pair<Configuration, Configuration>> decompositions2(const Configuration& g);
std::size_t decomposition_count(std::size_t n);

// Weighted value at gamma, clause by clause over explicit decompositions.
Value wpcl_eval(const WFormula& z, const Configuration& g, const PortUniverse& u, SemiringId k,
                const EvalOptions& opts = {});
// Same value, computed bottom-up on the supports of every subformula.
Value wpcl_eval_sparse(const WFormula& z, const Configuration& g, const PortUniverse& u,
                       SemiringId k, const EvalOptions& opts = {});
// Dispatches on opts.strategy.
Value wpcl_evaluate(const WFormula& z, const Configuration& g, const PortUniverse& u,
                    SemiringId k, const EvalOptions& opts = {});

// Weighted interaction formula at a single interaction.
Value wpil_eval(const WFormula& z, PortMask a, const PortUniverse& u, SemiringId k);

// First configuration, in canonical order, on which the formulas disagree.
std::optional<Configuration> pcl_difference(const Formula& f1, const Formula& f2,
                                            const PortUniverse& u,
                                            std::size_t cap = kDefaultEnumerationCap);
// First configuration satisfying f1 but not f2.
std::optional<Configuration> pcl_implication_failure(const Formula& f1, const Formula& f2,
                                                     const PortUniverse& u,
                                                     std::size_t cap = kDefaultEnumerationCap);

struct EquivResult {
  bool equivalent = true;
  std::optional<Configuration> witness;
  std::optional<Value> left, right;
};

// Compares values on every configuration of C(P), with tolerance for reals.
EquivResult wpcl_equiv(const WFormula& z1, const WFormula& z2, const PortUniverse& u,
                       SemiringId k, std::size_t cap = kDefaultEnumerationCap,
                       double tol = kDefaultTolerance, const EvalOptions& opts = {});

// A formal series over C(P): explicit coefficients on top of an optional
// constant background (the dense marker).
class Polynomial {
 public:
  explicit Polynomial(SemiringId k) : k_(k) {}
  static Polynomial constant(SemiringId k, const Value& c);

  SemiringId semiring() const { return k_; }
  bool is_dense() const { return fill_.has_value(); }
  Value at(const Configuration& g) const;
  // Zero coefficients are not stored.
  void set(const Configuration& g, const Value& v);
  // Explicit entries in canonical order.
  std::vector<std::pair<Configuration, Value>> entries() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  // Coefficientwise product.
  friend Polynomial hadamard(const Polynomial& a, const Polynomial& b);
  friend Polynomial scale(const Value& c, const Polynomial& a);

 private:
  struct Less {
    bool operator()(const Configuration& a, const Configuration& b) const {
      return configuration_less(a, b);
    }
  };
  SemiringId k_;
  std::optional<Value> fill_;
  std::map<Configuration, Value, Less> terms_;
};

// The series of z, one coefficient per member of C(P).
Polynomial wpcl_series(const WFormula& z, const PortUniverse& u, SemiringId k,
                       std::size_t cap = kDefaultEnumerationCap, const EvalOptions& opts = {});

}  // namespace wcl
