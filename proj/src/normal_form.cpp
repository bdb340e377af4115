#include "wcl/normal_form.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "wcl/errors.hpp"

namespace wcl {

Pil monomial_formula(const FullMonomial& m, const PortUniverse& u) {
  if (m.positive == 0) throw UsageError("a full monomial needs at least one positive port");
  return characteristic_monomial(m.positive, u);
}

namespace {

std::size_t key_space(const PortUniverse& u) {
  const std::size_t monomials = (std::size_t{1} << u.size()) - 1;
  return std::size_t{1} << monomials;
}

void check_cap(const PortUniverse& u, std::size_t cap) {
  if (u.size() == 0) throw UsageError("empty port universe");
  const std::size_t limit = std::min<std::size_t>(cap, 4);
  if (u.size() > limit) {
    throw CapExceeded("universe too large for a full normal form: |P| = " +
                      std::to_string(u.size()) + ", cap " + std::to_string(limit));
  }
}

// Model set of a Boolean formula as a flag per ConfigKey.
using Models = std::vector<std::uint8_t>;

class ModelBuilder {
 public:
  explicit ModelBuilder(const PortUniverse& u)
      : u_(u), m_((std::size_t{1} << u.size()) - 1), space_(std::size_t{1} << m_) {}

  Models build(const Formula& f) {
    Models out(space_, 0);
    switch (f.kind()) {
      case Formula::Kind::True:
        std::fill(out.begin() + 1, out.end(), 1);
        break;
      case Formula::Kind::Interaction: {
        ConfigKey a = 0;
        for (PortMask i = 1; i <= u_.full_mask(); ++i) {
          if (pil_satisfies(i, f.pil(), u_)) a |= ConfigKey{1} << (i - 1);
        }
        check_atoms(f.pil());
        for (ConfigKey s = a; s != 0; s = (s - 1) & a) out[s] = 1;
        break;
      }
      case Formula::Kind::Not: {
        Models x = build(f.lhs());
        for (std::size_t s = 1; s < space_; ++s) out[s] = !x[s];
        break;
      }
      case Formula::Kind::Union: {
        Models x = build(f.lhs());
        Models y = build(f.rhs());
        for (std::size_t s = 1; s < space_; ++s) out[s] = x[s] || y[s];
        break;
      }
      case Formula::Kind::Coalesce: out = coalesce(build(f.lhs()), build(f.rhs())); break;
      default: throw UsageError("first-order formula has no normal form without a model");
    }
    return out;
  }

 private:
  void check_atoms(const Pil& phi) const {
    if (phi.kind() == Pil::Kind::Atom && !u_.index_of(phi.port())) {
      throw UsageError("port '" + phi.port().qualified() + "' is not in the port universe");
    }
    if (phi.kind() == Pil::Kind::Not || phi.kind() == Pil::Kind::Or) check_atoms(phi.lhs());
    if (phi.kind() == Pil::Kind::Or) check_atoms(phi.rhs());
  }

  // Counts pairs with union exactly S: subset-sum both sides, multiply, then
  // invert the subset sum.
  Models coalesce(const Models& x, const Models& y) const {
    std::vector<std::int64_t> fx(space_), fy(space_);
    for (std::size_t s = 0; s < space_; ++s) {
      fx[s] = x[s];
      fy[s] = y[s];
    }
    zeta(fx);
    zeta(fy);
    std::vector<std::int64_t> h(space_);
    for (std::size_t s = 0; s < space_; ++s) h[s] = fx[s] * fy[s];
    mobius(h);
    Models out(space_, 0);
    for (std::size_t s = 1; s < space_; ++s) out[s] = h[s] > 0;
    return out;
  }

  void zeta(std::vector<std::int64_t>& v) const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t s = 0; s < space_; ++s) {
        if (s >> i & 1) v[s] += v[s ^ (std::size_t{1} << i)];
      }
    }
  }
  void mobius(std::vector<std::int64_t>& v) const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t s = 0; s < space_; ++s) {
        if (s >> i & 1) v[s] -= v[s ^ (std::size_t{1} << i)];
      }
    }
  }

  const PortUniverse& u_;
  std::size_t m_;
  std::size_t space_;
};

}  // namespace

class FnfBuilder {
 public:
  FnfBuilder(const PortUniverse& u, SemiringId k)
      : u_(u), k_(k), m_((std::size_t{1} << u.size()) - 1), space_(key_space(u)) {}

  FullNormalForm build(const WFormula& z) {
    FullNormalForm out(u_, k_);
    switch (z.kind()) {
      case WFormula::Kind::Const:
        if (z.value().semiring() != k_) {
          throw UsageError("constant " + to_string(z.value()) + " is not in " +
                           std::string(semiring_name(k_)));
        }
        if (!z.value().is_zero()) std::fill(out.coef_.begin() + 1, out.coef_.end(), z.value());
        break;
      case WFormula::Kind::Bool: {
        Models ms = ModelBuilder(u_).build(z.boolean());
        for (std::size_t s = 1; s < space_; ++s) {
          if (ms[s]) out.coef_[s] = Value::one(k_);
        }
        break;
      }
      case WFormula::Kind::Plus: {
        out = build(z.lhs());
        FullNormalForm r = build(z.rhs());
        for (std::size_t s = 1; s < space_; ++s) {
          if (!r.coef_[s].is_zero()) out.coef_[s] = oplus(out.coef_[s], r.coef_[s]);
        }
        break;
      }
      case WFormula::Kind::Times: {
        // Monomial sets are configurations; distinct sets share no configuration,
        // so only equal keys survive a product.
        FullNormalForm l = build(z.lhs());
        FullNormalForm r = build(z.rhs());
        for (std::size_t s = 1; s < space_; ++s) {
          if (!l.coef_[s].is_zero() && !r.coef_[s].is_zero()) {
            out.coef_[s] = otimes(l.coef_[s], r.coef_[s]);
          }
        }
        break;
      }
      case WFormula::Kind::Coalesce: {
        FullNormalForm l = build(z.lhs());
        FullNormalForm r = build(z.rhs());
        const auto lk = l.keys();
        const auto rk = r.keys();
        for (ConfigKey a : lk) {
          for (ConfigKey b : rk) {
            Value& c = out.coef_[a | b];
            c = oplus(c, otimes(l.coef_[a], r.coef_[b]));
          }
        }
        break;
      }
      case WFormula::Kind::Closure: {
        // Sum over every nonempty sub-configuration: a subset-sum transform.
        out = build(z.lhs());
        for (std::size_t i = 0; i < m_; ++i) {
          for (std::size_t s = 1; s < space_; ++s) {
            const std::size_t t = s ^ (std::size_t{1} << i);
            if ((s >> i & 1) && t != 0 && !out.coef_[t].is_zero()) {
              out.coef_[s] = oplus(out.coef_[s], out.coef_[t]);
            }
          }
        }
        break;
      }
      default: throw UsageError("first-order formula has no normal form without a model");
    }
    return out;
  }

 private:
  const PortUniverse& u_;
  SemiringId k_;
  std::size_t m_;
  std::size_t space_;
};

FullNormalForm::FullNormalForm(PortUniverse u, SemiringId k)
    : u_(std::move(u)), k_(k), coef_(key_space(u_), Value::zero(k)) {}

std::size_t FullNormalForm::size() const {
  return static_cast<std::size_t>(
      std::count_if(coef_.begin(), coef_.end(), [](const Value& v) { return !v.is_zero(); }));
}

Value FullNormalForm::coefficient(ConfigKey key) const {
  return key < coef_.size() ? coef_[key] : Value::zero(k_);
}

void FullNormalForm::add(ConfigKey key, const Value& v) {
  if (key == 0 || key >= coef_.size()) throw UsageError("monomial set outside the universe");
  coef_[key] = oplus(coef_[key], v);
}

std::vector<ConfigKey> FullNormalForm::keys() const {
  std::vector<ConfigKey> out;
  for (std::size_t s = 1; s < coef_.size(); ++s) {
    if (!coef_[s].is_zero()) out.push_back(s);
  }
  return out;
}

std::vector<FullNormalForm::Term> FullNormalForm::terms() const {
  std::vector<std::pair<Configuration, Value>> rows;
  for (ConfigKey key : keys()) rows.emplace_back(configuration_from_key(key), coef_[key]);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return configuration_less(a.first, b.first); });
  std::vector<Term> out;
  for (const auto& [g, v] : rows) {
    Term t;
    for (PortMask a : g.interactions()) t.monomials.push_back(FullMonomial{a});
    t.coefficient = v;
    out.push_back(std::move(t));
  }
  return out;
}

FullNormalForm fnf_of_pcl(const Formula& f, const PortUniverse& u, SemiringId k,
                          std::size_t cap) {
  return fnf_of_wpcl(w_bool(f), u, k, cap);
}

FullNormalForm fnf_of_wpcl(const WFormula& z, const PortUniverse& u, SemiringId k,
                           std::size_t cap) {
  check_cap(u, cap);
  return FnfBuilder(u, k).build(z);
}

Value fnf_eval(const FullNormalForm& n, const Configuration& g) {
  for (PortMask a : g.interactions()) {
    if ((a & ~n.universe().full_mask()) != 0) {
      throw UsageError("configuration uses ports outside the universe");
    }
  }
  return n.coefficient(config_key(g));
}

bool fnf_equiv(const FullNormalForm& a, const FullNormalForm& b, double tol) {
  if (!(a.universe() == b.universe()) || a.semiring() != b.semiring()) return false;
  const std::size_t space = key_space(a.universe());
  for (ConfigKey s = 1; s < space; ++s) {
    if (!approx_equal(a.coefficient(s), b.coefficient(s), tol)) return false;
  }
  return true;
}

WFormula fnf_to_formula(const FullNormalForm& n) {
  std::vector<WFormula> parts;
  for (const auto& t : n.terms()) {
    std::vector<Formula> ms;
    for (const auto& m : t.monomials) ms.push_back(pcl_interaction(monomial_formula(m, n.universe())));
    parts.push_back(w_times(w_const(t.coefficient), w_bool(pcl_coalesce_all(ms))));
  }
  if (parts.empty()) return w_const(Value::zero(n.semiring()));
  return w_plus_all(parts);
}

Polynomial fnf_to_polynomial(const FullNormalForm& n) {
  Polynomial p(n.semiring());
  for (ConfigKey key : n.keys()) p.set(configuration_from_key(key), n.coefficient(key));
  return p;
}

bool fnf_well_formed(const FullNormalForm& n) {
  std::set<std::vector<PortMask>> seen;
  for (const auto& t : n.terms()) {
    if (t.coefficient.is_zero() || t.monomials.empty()) return false;
    std::vector<PortMask> ps;
    for (const auto& m : t.monomials) {
      if (m.positive == 0 || (m.positive & ~n.universe().full_mask()) != 0) return false;
      ps.push_back(m.positive);
    }
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return false;
    if (!seen.insert(ps).second) return false;
  }
  return true;
}

std::string fnf_to_text(const FullNormalForm& n) {
  std::string out;
  for (const auto& t : n.terms()) {
    out += to_string(t.coefficient) + " (*) { ";
    for (std::size_t i = 0; i < t.monomials.size(); ++i) {
      if (i) out += " + ";
      out += to_string(monomial_formula(t.monomials[i], n.universe()));
    }
    out += " }\n";
  }
  return out;
}

std::string fnf_to_tsv(const FullNormalForm& n) {
  std::string out;
  for (const auto& t : n.terms()) {
    std::vector<PortMask> items;
    for (const auto& m : t.monomials) items.push_back(m.positive);
    out += to_string(t.coefficient) + "\t" +
           configuration_to_string(Configuration(items), n.universe()) + "\n";
  }
  return out;
}

}  // namespace wcl
