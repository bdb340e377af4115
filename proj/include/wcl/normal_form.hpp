#pragma once

#include <string>
#include <vector>

#include "wcl/formula.hpp"
#include "wcl/pcl.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

// The conjunction over every port of the universe, positive exactly on
// `positive`. Full monomials correspond one to one with interactions.
struct FullMonomial {
  PortMask positive = 0;
  friend bool operator==(const FullMonomial&, const FullMonomial&) = default;
};

Pil monomial_formula(const FullMonomial& m, const PortUniverse& u);

// A weighted formula written as a sum of coefficients times coalescings of
// pairwise distinct full monomials. Each monomial set is a configuration, so
// terms are stored against ConfigKey and zero coefficients are never kept.
class FullNormalForm {
 public:
  struct Term {
    std::vector<FullMonomial> monomials;
    Value coefficient;
  };

  FullNormalForm(PortUniverse u, SemiringId k);

  const PortUniverse& universe() const { return u_; }
  SemiringId semiring() const { return k_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  Value coefficient(ConfigKey key) const;
  // Accumulates with (+); a resulting zero removes the term.
  void add(ConfigKey key, const Value& v);
  // Terms in canonical order of their monomial sets.
  std::vector<Term> terms() const;
  // Keys with nonzero coefficients, ascending.
  std::vector<ConfigKey> keys() const;

 private:
  friend class FnfBuilder;
  PortUniverse u_;
  SemiringId k_;
  std::vector<Value> coef_;  // indexed by ConfigKey; zero means absent
};

// Caps |P| (default 4) since a constant expands to 2^(2^|P|-1)-1 terms.
FullNormalForm fnf_of_pcl(const Formula& f, const PortUniverse& u, SemiringId k,
                          std::size_t cap = kDefaultEnumerationCap);
FullNormalForm fnf_of_wpcl(const WFormula& z, const PortUniverse& u, SemiringId k,
                           std::size_t cap = kDefaultEnumerationCap);

Value fnf_eval(const FullNormalForm& n, const Configuration& g);
bool fnf_equiv(const FullNormalForm& a, const FullNormalForm& b, double tol = kDefaultTolerance);
// Sum of coefficient (*) coalescing of the term's monomials; 0 when empty.
WFormula fnf_to_formula(const FullNormalForm& n);
Polynomial fnf_to_polynomial(const FullNormalForm& n);

// Checks that monomials within a term are distinct, monomial sets across terms
// are distinct, every monomial has a positive port and no coefficient is zero.
bool fnf_well_formed(const FullNormalForm& n);

// One line per term: "k (*) { m1 + m2 }".
std::string fnf_to_text(const FullNormalForm& n);
// One line per term: coefficient, tab, configuration literal.
std::string fnf_to_tsv(const FullNormalForm& n);

}  // namespace wcl
