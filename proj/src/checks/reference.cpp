#include "wcl/checks/reference.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wcl::checks {

namespace {

using Env = Bindings;
using Sub = std::uint32_t;  // subset of gamma's interactions

class Oracle {
 public:
  Oracle(const Model* b, const PortUniverse& u, const Configuration& g, SemiringId k)
      : b_(b), u_(u), items_(g.interactions()), k_(k), n_(items_.size()) {
    if (n_ > 16) throw std::length_error("reference evaluator: gamma too large");
    count_ = Sub{1} << n_;
  }

  Sub full() const { return count_ - 1; }

  std::vector<char> sat(const Formula& f, const Env& env) const {
    std::vector<char> t(count_, 0);
    switch (f.kind()) {
      case Formula::Kind::True:
        for (Sub s = 1; s < count_; ++s) t[s] = 1;
        break;
      case Formula::Kind::Interaction:
        for (Sub s = 1; s < count_; ++s) {
          bool all = true;
          for (std::size_t i = 0; i < n_ && all; ++i) {
            if ((s >> i) & 1u) all = pil(f.pil(), items_[i], env);
          }
          t[s] = all;
        }
        break;
      case Formula::Kind::Not: {
        auto a = sat(f.lhs(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = !a[s];
        break;
      }
      case Formula::Kind::Union: {
        auto a = sat(f.lhs(), env), c = sat(f.rhs(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = a[s] || c[s];
        break;
      }
      case Formula::Kind::Coalesce: {
        auto a = sat(f.lhs(), env), c = sat(f.rhs(), env);
        for (Sub s = 1; s < count_; ++s) {
          for_each_split(s, [&](Sub x, Sub y) {
            if (a[x] && c[y]) t[s] = 1;
          });
        }
        break;
      }
      case Formula::Kind::Exists:
        for (const auto& c : matches(f.binder(), env)) {
          auto a = sat(f.lhs(), bind(env, f.binder().var, c));
          for (Sub s = 1; s < count_; ++s) t[s] = t[s] || a[s];
        }
        break;
      case Formula::Kind::Sum: {
        // Which unions of one satisfying part per match are reachable.
        auto ms = matches(f.binder(), env);
        if (ms.empty()) break;
        std::vector<char> reach(count_, 0);
        reach[0] = 1;
        for (const auto& c : ms) {
          auto a = sat(f.lhs(), bind(env, f.binder().var, c));
          std::vector<char> next(count_, 0);
          for (Sub u = 0; u < count_; ++u) {
            if (!reach[u]) continue;
            for (Sub s = 1; s < count_; ++s) {
              if (a[s]) next[u | s] = 1;
            }
          }
          reach = std::move(next);
        }
        for (Sub s = 1; s < count_; ++s) t[s] = reach[s];
        break;
      }
      case Formula::Kind::Cond: {
        bool holds = pred(f.condition(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = holds;
        break;
      }
    }
    return t;
  }

  std::vector<Value> eval(const WFormula& z, const Env& env) const {
    const Value zero = Value::zero(k_), one = Value::one(k_);
    std::vector<Value> t(count_, zero);
    switch (z.kind()) {
      case WFormula::Kind::Const:
        for (Sub s = 1; s < count_; ++s) t[s] = z.value();
        break;
      case WFormula::Kind::Bool: {
        auto a = sat(z.boolean(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = a[s] ? one : zero;
        break;
      }
      case WFormula::Kind::Plus: {
        auto a = eval(z.lhs(), env), c = eval(z.rhs(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = oplus(a[s], c[s]);
        break;
      }
      case WFormula::Kind::Times: {
        auto a = eval(z.lhs(), env), c = eval(z.rhs(), env);
        for (Sub s = 1; s < count_; ++s) t[s] = otimes(a[s], c[s]);
        break;
      }
      case WFormula::Kind::Coalesce: {
        auto a = eval(z.lhs(), env), c = eval(z.rhs(), env);
        for (Sub s = 1; s < count_; ++s) {
          for_each_split(s, [&](Sub x, Sub y) { t[s] = oplus(t[s], otimes(a[x], c[y])); });
        }
        break;
      }
      case WFormula::Kind::Closure: {
        auto a = eval(z.lhs(), env);
        for (Sub s = 1; s < count_; ++s) {
          for (Sub x = s; x; x = (x - 1) & s) t[s] = oplus(t[s], a[x]);
        }
        break;
      }
      case WFormula::Kind::OplusQ:
        for (const auto& c : matches(z.binder(), env)) {
          auto a = eval(z.lhs(), bind(env, z.binder().var, c));
          for (Sub s = 1; s < count_; ++s) t[s] = oplus(t[s], a[s]);
        }
        break;
      case WFormula::Kind::OtimesQ:
        for (Sub s = 1; s < count_; ++s) t[s] = one;
        for (const auto& c : matches(z.binder(), env)) {
          auto a = eval(z.lhs(), bind(env, z.binder().var, c));
          for (Sub s = 1; s < count_; ++s) t[s] = otimes(t[s], a[s]);
        }
        break;
      case WFormula::Kind::OuplusQ: {
        // acc[u]: sum over families chosen so far with union u of their products.
        auto ms = matches(z.binder(), env);
        if (ms.empty()) break;
        std::vector<Value> acc(count_, zero);
        acc[0] = one;
        for (const auto& c : ms) {
          auto a = eval(z.lhs(), bind(env, z.binder().var, c));
          std::vector<Value> next(count_, zero);
          for (Sub u = 0; u < count_; ++u) {
            if (acc[u].is_zero()) continue;
            for (Sub s = 1; s < count_; ++s) next[u | s] = oplus(next[u | s], otimes(acc[u], a[s]));
          }
          acc = std::move(next);
        }
        for (Sub s = 1; s < count_; ++s) t[s] = acc[s];
        break;
      }
    }
    return t;
  }

 private:
  // Ordered pairs of nonempty parts covering s, by assigning each member of s
  // to the left part, the right part or both.
  template <class F>
  void for_each_split(Sub s, F&& f) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((s >> i) & 1u) idx.push_back(i);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Sub x = 0, y = 0;
      std::size_t c = code;
      for (std::size_t i : idx) {
        switch (c % 3) {
          case 0: x |= Sub{1} << i; break;
          case 1: y |= Sub{1} << i; break;
          default: x |= Sub{1} << i; y |= Sub{1} << i; break;
        }
        c /= 3;
      }
      if (x && y) f(x, y);
    }
  }

  static Env bind(const Env& env, const std::string& var, const std::string& comp) {
    Env out = env;
    out[var] = comp;
    return out;
  }

  std::string resolve(const std::string& term, const Env& env) const {
    auto it = env.find(term);
    return it == env.end() ? term : it->second;
  }

  bool pred(const Predicate& p, const Env& env) const {
    switch (p.kind()) {
      case Predicate::Kind::True: return true;
      case Predicate::Kind::Eq: return resolve(p.left_term(), env) == resolve(p.right_term(), env);
      case Predicate::Kind::Neq: return resolve(p.left_term(), env) != resolve(p.right_term(), env);
      case Predicate::Kind::And: return pred(p.lhs(), env) && pred(p.rhs(), env);
    }
    return false;
  }

  std::vector<std::string> matches(const Binder& bd, const Env& env) const {
    if (!b_) throw std::logic_error("reference evaluator: quantifier without a model");
    std::vector<std::string> out;
    for (const auto& c : b_->components()) {
      if (bd.type != kUniversalType && bd.type != c.type) continue;
      if (pred(bd.where, bind(env, bd.var, c.name))) out.push_back(c.name);
    }
    return out;
  }

  bool pil(const Pil& phi, PortMask a, const Env& env) const {
    switch (phi.kind()) {
      case Pil::Kind::True: return true;
      case Pil::Kind::Atom: {
        Port p{resolve(phi.port().owner, env), phi.port().name};
        auto i = u_.index_of(p);
        return i && ((a >> *i) & 1u);
      }
      case Pil::Kind::Not: return !pil(phi.lhs(), a, env);
      case Pil::Kind::Or: return pil(phi.lhs(), a, env) || pil(phi.rhs(), a, env);
    }
    return false;
  }

  const Model* b_;
  const PortUniverse& u_;
  std::vector<PortMask> items_;
  SemiringId k_;
  std::size_t n_;
  Sub count_;
};

}  // namespace

bool reference_satisfies(const Model* b, const PortUniverse& u, const Configuration& g,
                         const Formula& f) {
  Oracle o(b, u, g, SemiringId::boolean);
  return o.sat(f, {})[o.full()];
}

Value reference_eval(const Model* b, const PortUniverse& u, const Configuration& g,
                     const WFormula& z, SemiringId k) {
  Oracle o(b, u, g, k);
  return o.eval(z, {})[o.full()];
}

}  // namespace wcl::checks
