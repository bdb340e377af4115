#include "wcl/pcl.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "wcl/errors.hpp"

namespace wcl {

namespace {

// Sub-configurations of the configuration under evaluation, as bitmasks over
// the positions of its interactions.
using Mask = std::uint64_t;

void check_ports(const Pil& phi, const PortUniverse& u) {
  switch (phi.kind()) {
    case Pil::Kind::True: return;
    case Pil::Kind::Atom:
      if (!u.index_of(phi.port())) {
        throw UsageError("port '" + phi.port().qualified() + "' is not in the port universe");
      }
      return;
    case Pil::Kind::Not: check_ports(phi.lhs(), u); return;
    case Pil::Kind::Or:
      check_ports(phi.lhs(), u);
      check_ports(phi.rhs(), u);
      return;
  }
}

// Flattened formula DAG, with every interaction formula resolved to the set
// of positions of gamma whose interaction satisfies it.
struct Program {
  struct BNode {
    Formula::Kind kind;
    Mask sat = 0;
    int a = -1, b = -1;
  };
  struct WNode {
    WFormula::Kind kind;
    Value k;
    int a = -1, b = -1;  // for Bool, a indexes the Boolean nodes
  };

  const PortUniverse& u;
  const std::vector<PortMask>& items;
  SemiringId semiring;
  std::vector<BNode> bnodes;
  std::vector<WNode> wnodes;
  std::unordered_map<const void*, int> bseen, wseen;

  Program(const PortUniverse& u_, const std::vector<PortMask>& items_, SemiringId k)
      : u(u_), items(items_), semiring(k) {}

  int add(const Formula& f) {
    if (auto it = bseen.find(f.node()); it != bseen.end()) return it->second;
    BNode n{f.kind()};
    switch (f.kind()) {
      case Formula::Kind::True: break;
      case Formula::Kind::Interaction:
        check_ports(f.pil(), u);
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (pil_satisfies(items[i], f.pil(), u)) n.sat |= Mask{1} << i;
        }
        break;
      case Formula::Kind::Not: n.a = add(f.lhs()); break;
      case Formula::Kind::Union:
      case Formula::Kind::Coalesce:
        n.a = add(f.lhs());
        n.b = add(f.rhs());
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Sum:
      case Formula::Kind::Cond:
        throw UsageError("first-order formula: evaluate it against a component model");
    }
    bnodes.push_back(n);
    return bseen[f.node()] = static_cast<int>(bnodes.size()) - 1;
  }

  int add(const WFormula& z) {
    if (auto it = wseen.find(z.node()); it != wseen.end()) return it->second;
    WNode n{z.kind(), Value::zero(semiring)};
    switch (z.kind()) {
      case WFormula::Kind::Const:
        if (z.value().semiring() != semiring) {
          throw UsageError("constant " + to_string(z.value()) + " belongs to " +
                           std::string(semiring_name(z.value().semiring())) +
                           ", evaluating over " + std::string(semiring_name(semiring)));
        }
        n.k = z.value();
        break;
      case WFormula::Kind::Bool: n.a = add(z.boolean()); break;
      case WFormula::Kind::Closure: n.a = add(z.lhs()); break;
      case WFormula::Kind::Plus:
      case WFormula::Kind::Times:
      case WFormula::Kind::Coalesce:
        n.a = add(z.lhs());
        n.b = add(z.rhs());
        break;
      case WFormula::Kind::OplusQ:
      case WFormula::Kind::OtimesQ:
      case WFormula::Kind::OuplusQ:
        throw UsageError("first-order formula: evaluate it against a component model");
    }
    wnodes.push_back(n);
    return wseen[z.node()] = static_cast<int>(wnodes.size()) - 1;
  }
};

Mask full_of(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// ---------------------------------------------------------------------------
// Direct strategy: memoized recursion over sub-configurations.
// ---------------------------------------------------------------------------

class DirectEval {
 public:
  DirectEval(const Program& p, std::size_t n)
      : p_(p), size_(std::size_t{1} << n), bmemo_(p.bnodes.size()), wmemo_(p.wnodes.size()),
        wdone_(p.wnodes.size()) {}

  bool sat(int id, Mask s) {
    auto& memo = bmemo_[id];
    if (memo.empty()) memo.assign(size_, -1);
    if (memo[s] >= 0) return memo[s] != 0;
    const auto& n = p_.bnodes[id];
    bool r = false;
    switch (n.kind) {
      case Formula::Kind::True: r = true; break;
      case Formula::Kind::Interaction: r = (s & ~n.sat) == 0; break;
      case Formula::Kind::Not: r = !sat(n.a, s); break;
      case Formula::Kind::Union: r = sat(n.a, s) || sat(n.b, s); break;
      case Formula::Kind::Coalesce: r = coalesce_sat(n.a, n.b, s); break;
      default: break;
    }
    memo[s] = r ? 1 : 0;
    return r;
  }

  Value val(int id, Mask s) {
    auto& memo = wmemo_[id];
    auto& done = wdone_[id];
    if (memo.empty()) {
      memo.resize(size_);
      done.assign(size_, false);
    }
    if (done[s]) return memo[s];
    const auto& n = p_.wnodes[id];
    const SemiringId k = p_.semiring;
    Value r;
    switch (n.kind) {
      case WFormula::Kind::Const: r = n.k; break;
      case WFormula::Kind::Bool: r = sat(n.a, s) ? Value::one(k) : Value::zero(k); break;
      case WFormula::Kind::Plus: r = oplus(val(n.a, s), val(n.b, s)); break;
      case WFormula::Kind::Times: r = otimes(val(n.a, s), val(n.b, s)); break;
      case WFormula::Kind::Coalesce: {
        r = Value::zero(k);
        for (Mask s1 = s; s1 != 0; s1 = (s1 - 1) & s) {
          const Value v1 = val(n.a, s1);
          if (v1.is_zero()) continue;
          const Mask rest = s & ~s1;
          // g2 must cover what g1 misses and may share any part of g1.
          for (Mask t = s1;; t = (t - 1) & s1) {
            const Mask s2 = rest | t;
            if (s2 != 0) r = oplus(r, otimes(v1, val(n.b, s2)));
            if (t == 0) break;
          }
        }
        break;
      }
      case WFormula::Kind::Closure:
        r = Value::zero(k);
        for (Mask s1 = s; s1 != 0; s1 = (s1 - 1) & s) r = oplus(r, val(n.a, s1));
        break;
      default: break;
    }
    memo[s] = r;
    done[s] = true;
    return r;
  }

 private:
  bool coalesce_sat(int a, int b, Mask s) {
    for (Mask s1 = s; s1 != 0; s1 = (s1 - 1) & s) {
      if (!sat(a, s1)) continue;
      const Mask rest = s & ~s1;
      for (Mask t = s1;; t = (t - 1) & s1) {
        const Mask s2 = rest | t;
        if (s2 != 0 && sat(b, s2)) return true;
        if (t == 0) break;
      }
    }
    return false;
  }

  const Program& p_;
  std::size_t size_;
  std::vector<std::vector<signed char>> bmemo_;
  std::vector<std::vector<Value>> wmemo_;
  std::vector<std::vector<bool>> wdone_;
};

// ---------------------------------------------------------------------------
// Sparse strategy: each subformula becomes its support with coefficients.
// ---------------------------------------------------------------------------

struct Poly {
  // A down-closed block: `value` on every nonempty subset of `block`.
  bool down = false;
  Mask block = 0;
  Value value;
  // Otherwise explicit entries, sorted by mask, zeros dropped.
  std::vector<std::pair<Mask, Value>> entries;
};

class SparseEval {
 public:
  SparseEval(const Program& p, std::size_t n, std::size_t cap)
      : p_(p), full_(full_of(n)), cap_(cap), bpolys_(p.bnodes.size()), wpolys_(p.wnodes.size()) {}

  Value value_at_full(int id) {
    const auto& n = p_.wnodes[id];
    const SemiringId k = p_.semiring;
    switch (n.kind) {
      case WFormula::Kind::Const: return n.k;
      case WFormula::Kind::Bool: return bool_at_full(n.a) ? Value::one(k) : Value::zero(k);
      case WFormula::Kind::Plus: return oplus(value_at_full(n.a), value_at_full(n.b));
      case WFormula::Kind::Times: return otimes(value_at_full(n.a), value_at_full(n.b));
      case WFormula::Kind::Coalesce: {
        const auto xs = expand(wpoly(n.a));
        const auto ys = expand(wpoly(n.b));
        Value acc = Value::zero(k);
        for (const auto& [s1, v1] : xs) {
          for (const auto& [s2, v2] : ys) {
            if ((s1 | s2) == full_) acc = oplus(acc, otimes(v1, v2));
          }
        }
        return acc;
      }
      case WFormula::Kind::Closure: {
        const Poly& c = wpoly(n.a);
        if (c.down) return closure_of_block(c);
        Value acc = Value::zero(k);
        for (const auto& e : c.entries) acc = oplus(acc, e.second);
        return acc;
      }
      default: break;
    }
    return Value::zero(k);
  }

  bool bool_at_full(int id) {
    const auto& n = p_.bnodes[id];
    switch (n.kind) {
      case Formula::Kind::True: return true;
      case Formula::Kind::Interaction: return (full_ & ~n.sat) == 0;
      case Formula::Kind::Not: return !bool_at_full(n.a);
      case Formula::Kind::Union: return bool_at_full(n.a) || bool_at_full(n.b);
      case Formula::Kind::Coalesce: return lookup(bpoly(id), full_).is_one();
      default: return false;
    }
  }

 private:
  Value one() const { return Value::one(p_.semiring); }
  Value zero() const { return Value::zero(p_.semiring); }

  static Poly block(Mask b, const Value& v) {
    Poly p;
    if (b != 0 && !v.is_zero()) {
      p.down = true;
      p.block = b;
      p.value = v;
    }
    return p;
  }

  std::vector<std::pair<Mask, Value>> expand(const Poly& p) const {
    if (!p.down) return p.entries;
    if (static_cast<std::size_t>(std::popcount(p.block)) > cap_) {
      throw CapExceeded("a dense block of " + std::to_string(std::popcount(p.block)) +
                        " interactions exceeds the sparse cap of " + std::to_string(cap_));
    }
    std::vector<std::pair<Mask, Value>> out;
    for (Mask s = p.block; s != 0; s = (s - 1) & p.block) out.emplace_back(s, p.value);
    std::reverse(out.begin(), out.end());
    return out;
  }

  Value lookup(const Poly& p, Mask s) const {
    if (p.down) return (s & ~p.block) == 0 && s != 0 ? p.value : zero();
    auto it = std::lower_bound(p.entries.begin(), p.entries.end(), s,
                               [](const auto& e, Mask m) { return e.first < m; });
    return it != p.entries.end() && it->first == s ? it->second : zero();
  }

  static Poly from_map(std::unordered_map<Mask, Value>& acc) {
    Poly p;
    for (auto& [s, v] : acc) {
      if (!v.is_zero()) p.entries.emplace_back(s, v);
    }
    std::sort(p.entries.begin(), p.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return p;
  }

  Poly merge(const Poly& a, const Poly& b) const {
    if (a.down && b.down && a.block == b.block) return block(a.block, oplus(a.value, b.value));
    std::unordered_map<Mask, Value> acc;
    for (const auto& [s, v] : expand(a)) acc.emplace(s, v);
    for (const auto& [s, v] : expand(b)) {
      auto [it, fresh] = acc.emplace(s, v);
      if (!fresh) it->second = oplus(it->second, v);
    }
    return from_map(acc);
  }

  Poly product(const Poly& a, const Poly& b) const {
    if (a.down && b.down) return block(a.block & b.block, otimes(a.value, b.value));
    Poly out;
    if (a.down || b.down) {
      const Poly& d = a.down ? a : b;
      const Poly& e = a.down ? b : a;
      for (const auto& [s, v] : e.entries) {
        if ((s & ~d.block) != 0) continue;
        Value r = a.down ? otimes(d.value, v) : otimes(v, d.value);
        if (!r.is_zero()) out.entries.emplace_back(s, r);
      }
      return out;
    }
    for (const auto& [s, v] : a.entries) {
      Value w = lookup(b, s);
      if (w.is_zero()) continue;
      Value r = otimes(v, w);
      if (!r.is_zero()) out.entries.emplace_back(s, r);
    }
    return out;
  }

  Poly union_convolution(const Poly& a, const Poly& b) const {
    const auto xs = expand(a);
    const auto ys = expand(b);
    std::unordered_map<Mask, Value> acc;
    for (const auto& [s1, v1] : xs) {
      for (const auto& [s2, v2] : ys) {
        Value r = otimes(v1, v2);
        auto [it, fresh] = acc.emplace(s1 | s2, r);
        if (!fresh) it->second = oplus(it->second, r);
      }
    }
    return from_map(acc);
  }

  void check_superset_room(Mask s) const {
    const std::size_t free_bits = static_cast<std::size_t>(std::popcount(full_ & ~s));
    if (free_bits > cap_) {
      throw CapExceeded("closure would expand into 2^" + std::to_string(free_bits) +
                        " entries, beyond the sparse cap");
    }
  }

  Poly closure(const Poly& c) const {
    std::unordered_map<Mask, Value> acc;
    for (const auto& [s1, v] : expand(c)) {
      check_superset_room(s1);
      const Mask free = full_ & ~s1;
      for (Mask t = free;; t = (t - 1) & free) {
        auto [it, fresh] = acc.emplace(s1 | t, v);
        if (!fresh) it->second = oplus(it->second, v);
        if (t == 0) break;
      }
    }
    return from_map(acc);
  }

  // Sum over all nonempty subsets of the block, done without expanding it in
  // the idempotent case.
  Value closure_of_block(const Poly& c) const {
    if (is_idempotent(p_.semiring)) return c.value;
    Value acc = zero();
    for (const auto& e : expand(c)) acc = oplus(acc, e.second);
    return acc;
  }

  Poly complement(const Poly& c) const {
    if (static_cast<std::size_t>(std::popcount(full_)) > cap_) {
      throw CapExceeded("complement over 2^|gamma| sub-configurations exceeds the sparse cap");
    }
    Poly out;
    for (Mask s = 1; s <= full_; ++s) {
      if (lookup(c, s).is_zero()) out.entries.emplace_back(s, one());
      if (s == full_) break;
    }
    return out;
  }

  Poly boolean_set(const Poly& p) const {
    // Boolean results carry the value one on their members.
    if (p.down) return block(p.block, one());
    Poly out;
    for (const auto& e : p.entries) out.entries.emplace_back(e.first, one());
    return out;
  }

  const Poly& bpoly(int id) {
    if (bpolys_[id]) return *bpolys_[id];
    const auto& n = p_.bnodes[id];
    Poly r;
    switch (n.kind) {
      case Formula::Kind::True: r = block(full_, one()); break;
      case Formula::Kind::Interaction: r = block(n.sat, one()); break;
      case Formula::Kind::Not: r = complement(bpoly(n.a)); break;
      case Formula::Kind::Union: r = boolean_set(merge(bpoly(n.a), bpoly(n.b))); break;
      case Formula::Kind::Coalesce:
        r = boolean_set(union_convolution(bpoly(n.a), bpoly(n.b)));
        break;
      default: break;
    }
    bpolys_[id] = std::move(r);
    return *bpolys_[id];
  }

  const Poly& wpoly(int id) {
    if (wpolys_[id]) return *wpolys_[id];
    const auto& n = p_.wnodes[id];
    Poly r;
    switch (n.kind) {
      case WFormula::Kind::Const: r = block(full_, n.k); break;
      case WFormula::Kind::Bool: r = bpoly(n.a); break;
      case WFormula::Kind::Plus: r = merge(wpoly(n.a), wpoly(n.b)); break;
      case WFormula::Kind::Times: r = product(wpoly(n.a), wpoly(n.b)); break;
      case WFormula::Kind::Coalesce: r = union_convolution(wpoly(n.a), wpoly(n.b)); break;
      case WFormula::Kind::Closure: r = closure(wpoly(n.a)); break;
      default: break;
    }
    wpolys_[id] = std::move(r);
    return *wpolys_[id];
  }

  const Program& p_;
  Mask full_;
  std::size_t cap_;
  std::vector<std::optional<Poly>> bpolys_;
  std::vector<std::optional<Poly>> wpolys_;
};

}  // namespace

bool pcl_satisfies(const Configuration& g, const Formula& f, const PortUniverse& u,
                   const EvalOptions& opts) {
  if (g.empty()) throw UsageError("empty configuration");
  const std::size_t n = g.size();
  Program p(u, g.interactions(), SemiringId::boolean);
  const int root = p.add(f);
  const bool direct = opts.strategy == Strategy::Direct ||
                      (opts.strategy == Strategy::Auto && n <= opts.auto_direct_max);
  if (direct) {
    if (n > opts.direct_cap) {
      throw CapExceeded("|gamma| = " + std::to_string(n) + " exceeds the direct cap of " +
                        std::to_string(opts.direct_cap));
    }
    DirectEval e(p, n);
    return e.sat(root, full_of(n));
  }
  if (n > opts.sparse_cap || n > 63) {
    throw CapExceeded("|gamma| = " + std::to_string(n) + " exceeds the sparse cap");
  }
  SparseEval e(p, n, opts.sparse_cap);
  return e.bool_at_full(root);
}

std::size_t decomposition_count(std::size_t n) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p - 2;
}

std::vector<std::pair<Configuration, Configuration>> decompositions2(const Configuration& g) {
  const std::size_t n = g.size();
  if (n > 12) throw CapExceeded("too many decompositions to list for |gamma| > 12");
  const auto& items = g.interactions();
  auto sub = [&](Mask s) {
    std::vector<PortMask> xs;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) xs.push_back(items[i]);
    }
    return Configuration(std::move(xs));
  };
  const Mask full = full_of(n);
  std::vector<std::pair<Configuration, Configuration>> out;
  for (Mask s1 = 1; s1 <= full; ++s1) {
    for (Mask s2 = 1; s2 <= full; ++s2) {
      if ((s1 | s2) == full) out.emplace_back(sub(s1), sub(s2));
    }
  }
  return out;
}

Value wpcl_eval(const WFormula& z, const Configuration& g, const PortUniverse& u, SemiringId k,
                const EvalOptions& opts) {
  if (g.empty()) throw UsageError("empty configuration");
  const std::size_t n = g.size();
  if (n > opts.direct_cap) {
    throw CapExceeded("|gamma| = " + std::to_string(n) + " exceeds the direct cap of " +
                      std::to_string(opts.direct_cap) + "; use the sparse strategy");
  }
  Program p(u, g.interactions(), k);
  const int root = p.add(z);
  DirectEval e(p, n);
  return e.val(root, full_of(n));
}

Value wpcl_eval_sparse(const WFormula& z, const Configuration& g, const PortUniverse& u,
                       SemiringId k, const EvalOptions& opts) {
  if (g.empty()) throw UsageError("empty configuration");
  const std::size_t n = g.size();
  if (n > opts.sparse_cap || n > 63) {
    throw CapExceeded("|gamma| = " + std::to_string(n) + " exceeds the sparse cap of " +
                      std::to_string(opts.sparse_cap));
  }
  Program p(u, g.interactions(), k);
  const int root = p.add(z);
  SparseEval e(p, n, opts.sparse_cap);
  return e.value_at_full(root);
}

Value wpcl_evaluate(const WFormula& z, const Configuration& g, const PortUniverse& u,
                    SemiringId k, const EvalOptions& opts) {
  switch (opts.strategy) {
    case Strategy::Direct: return wpcl_eval(z, g, u, k, opts);
    case Strategy::Sparse: return wpcl_eval_sparse(z, g, u, k, opts);
    case Strategy::Auto: break;
  }
  if (g.size() <= opts.auto_direct_max) return wpcl_eval(z, g, u, k, opts);
  return wpcl_eval_sparse(z, g, u, k, opts);
}

Value wpil_eval(const WFormula& z, PortMask a, const PortUniverse& u, SemiringId k) {
  switch (z.kind()) {
    case WFormula::Kind::Const:
      if (z.value().semiring() != k) throw UsageError("constant from a different semiring");
      return z.value();
    case WFormula::Kind::Bool:
      if (z.boolean().kind() != Formula::Kind::Interaction) break;
      check_ports(z.boolean().pil(), u);
      return pil_satisfies(a, z.boolean().pil(), u) ? Value::one(k) : Value::zero(k);
    case WFormula::Kind::Plus: return oplus(wpil_eval(z.lhs(), a, u, k), wpil_eval(z.rhs(), a, u, k));
    case WFormula::Kind::Times:
      return otimes(wpil_eval(z.lhs(), a, u, k), wpil_eval(z.rhs(), a, u, k));
    default: break;
  }
  throw UsageError("not a weighted interaction formula");
}

std::optional<Configuration> pcl_difference(const Formula& f1, const Formula& f2,
                                            const PortUniverse& u, std::size_t cap) {
  for (const Configuration& g : enumerate_configurations(u, cap)) {
    if (pcl_satisfies(g, f1, u) != pcl_satisfies(g, f2, u)) return g;
  }
  return std::nullopt;
}

std::optional<Configuration> pcl_implication_failure(const Formula& f1, const Formula& f2,
                                                     const PortUniverse& u, std::size_t cap) {
  for (const Configuration& g : enumerate_configurations(u, cap)) {
    if (pcl_satisfies(g, f1, u) && !pcl_satisfies(g, f2, u)) return g;
  }
  return std::nullopt;
}

EquivResult wpcl_equiv(const WFormula& z1, const WFormula& z2, const PortUniverse& u,
                       SemiringId k, std::size_t cap, double tol, const EvalOptions& opts) {
  EquivResult r;
  for (const Configuration& g : enumerate_configurations(u, cap)) {
    Value a = wpcl_evaluate(z1, g, u, k, opts);
    Value b = wpcl_evaluate(z2, g, u, k, opts);
    if (!approx_equal(a, b, tol)) {
      r.equivalent = false;
      r.witness = g;
      r.left = a;
      r.right = b;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(SemiringId k, const Value& c) {
  Polynomial p(k);
  if (!c.is_zero()) p.fill_ = c;
  return p;
}

Value Polynomial::at(const Configuration& g) const {
  auto it = terms_.find(g);
  if (it != terms_.end()) return it->second;
  return fill_ ? *fill_ : Value::zero(k_);
}

void Polynomial::set(const Configuration& g, const Value& v) {
  if (v.semiring() != k_) throw UsageError("coefficient from a different semiring");
  if (v.is_zero() && !fill_) {
    terms_.erase(g);
  } else {
    terms_[g] = v;
  }
}

std::vector<std::pair<Configuration, Value>> Polynomial::entries() const {
  return {terms_.begin(), terms_.end()};
}

namespace {

template <class Op>
Polynomial combine(const Polynomial& a, const Polynomial& b, Op op,
                   std::optional<Value> fill) {
  Polynomial out = fill ? Polynomial::constant(a.semiring(), *fill) : Polynomial(a.semiring());
  for (const auto& [g, v] : a.entries()) out.set(g, op(v, b.at(g)));
  for (const auto& [g, v] : b.entries()) out.set(g, op(a.at(g), v));
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.k_ != b.k_) throw UsageError("series over different semirings");
  std::optional<Value> fill;
  if (a.fill_ || b.fill_) {
    fill = oplus(a.fill_.value_or(Value::zero(a.k_)), b.fill_.value_or(Value::zero(a.k_)));
  }
  return combine(a, b, oplus, fill);
}

Polynomial hadamard(const Polynomial& a, const Polynomial& b) {
  if (a.k_ != b.k_) throw UsageError("series over different semirings");
  std::optional<Value> fill;
  if (a.fill_ && b.fill_) fill = otimes(*a.fill_, *b.fill_);
  return combine(a, b, otimes, fill);
}

Polynomial scale(const Value& c, const Polynomial& a) {
  Polynomial out = a.fill_ ? Polynomial::constant(a.k_, otimes(c, *a.fill_)) : Polynomial(a.k_);
  for (const auto& [g, v] : a.terms_) out.set(g, otimes(c, v));
  return out;
}

Polynomial wpcl_series(const WFormula& z, const PortUniverse& u, SemiringId k, std::size_t cap,
                       const EvalOptions& opts) {
  Polynomial p(k);
  for (const Configuration& g : enumerate_configurations(u, cap)) {
    p.set(g, wpcl_evaluate(z, g, u, k, opts));
  }
  return p;
}

}  // namespace wcl
