#include "wcl/checks/generators.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>

namespace wcl::checks {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Pil pil_over(Rng& rng, const std::vector<Port>& atoms, int depth) {
  if (depth <= 0 || coin(rng, 0.3)) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.08) return pil_true();
    if (r < 0.12) return pil_false();
    return pil_atom(atoms[pick(rng, atoms.size())]);
  }
  switch (pick(rng, 3)) {
    case 0: return pil_not(pil_over(rng, atoms, depth - 1));
    case 1: return pil_or(pil_over(rng, atoms, depth - 1), pil_over(rng, atoms, depth - 1));
    default: return pil_and(pil_over(rng, atoms, depth - 1), pil_over(rng, atoms, depth - 1));
  }
}

// Port names every component a variable of this type may denote carries.
std::vector<std::string> ports_for_type(const Model& b, const std::string& type) {
  std::optional<std::set<std::string>> common;
  for (const auto& c : b.components()) {
    if (type != kUniversalType && c.type != type) continue;
    const auto& ps = b.type(c.type).ports;
    std::set<std::string> here(ps.begin(), ps.end());
    if (!common) {
      common = here;
    } else {
      std::set<std::string> keep;
      std::set_intersection(common->begin(), common->end(), here.begin(), here.end(),
                            std::inserter(keep, keep.end()));
      common = keep;
    }
  }
  if (!common) {
    // No component of the type; any port name of the type will do.
    if (type != kUniversalType && b.has_type(type)) return b.type(type).ports;
    return {"p"};
  }
  return {common->begin(), common->end()};
}

std::vector<Port> term_ports(const Model& b, const std::vector<ScopeVar>& scope) {
  std::vector<Port> out;
  for (const auto& c : b.components()) {
    for (const auto& p : b.type(c.type).ports) out.push_back({c.name, p});
  }
  for (const auto& v : scope) {
    for (const auto& p : ports_for_type(b, v.type)) out.push_back({v.name, p});
  }
  return out;
}

std::vector<std::string> owners(const Model& b, const std::vector<ScopeVar>& scope) {
  std::vector<std::string> out;
  for (const auto& c : b.components()) out.push_back(c.name);
  for (const auto& v : scope) out.push_back(v.name);
  return out;
}

std::vector<std::string> inhabited_types(const Model& b) {
  std::set<std::string> ts;
  for (const auto& c : b.components()) ts.insert(c.type);
  std::vector<std::string> out(ts.begin(), ts.end());
  out.push_back(kUniversalType);
  return out;
}

// Binder for a nested quantifier; the side condition may mention scope
// variables, so its match set can be empty.
Binder nested_binder(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope,
                     const std::string& var) {
  auto types = inhabited_types(b);
  Binder bd{var, types[pick(rng, types.size())], Predicate()};
  if (coin(rng, 0.35)) {
    auto os = owners(b, scope);
    bd.where = Predicate::neq(var, os[pick(rng, os.size())]);
  }
  return bd;
}

Predicate random_condition(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope) {
  auto os = owners(b, scope);
  const std::string& x = scope[pick(rng, scope.size())].name;
  const std::string& y = os[pick(rng, os.size())];
  return coin(rng, 0.5) ? Predicate::eq(x, y) : Predicate::neq(x, y);
}

std::string fresh_var(const std::vector<ScopeVar>& scope) {
  return "x" + std::to_string(scope.size());
}

}  // namespace

Value random_value(Rng& rng, SemiringId k) {
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  switch (k) {
    case SemiringId::natural:
      return Value::natural(std::uniform_int_distribution<std::uint64_t>(0, 3)(rng));
    case SemiringId::boolean: return Value::boolean(r < 0.6);
    case SemiringId::minplus:
    case SemiringId::maxplus:
      if (r < 0.1) return Value::zero(k);
      if (r < 0.2) return Value::one(k);
      return Value::real(k, std::uniform_real_distribution<double>(0, 10)(rng));
    case SemiringId::viterbi:
    case SemiringId::fuzzy:
      if (r < 0.1) return Value::zero(k);
      if (r < 0.2) return Value::one(k);
      return Value::real(k, std::uniform_real_distribution<double>(0, 1)(rng));
  }
  return Value::zero(k);
}

Pil random_pil(Rng& rng, const PortUniverse& u, int depth) {
  return pil_over(rng, u.ports(), depth);
}

Formula random_interaction_formula(Rng& rng, const PortUniverse& u, int depth) {
  return pcl_interaction(random_pil(rng, u, depth));
}

Formula random_pcl(Rng& rng, const PortUniverse& u, int depth) {
  if (depth <= 0 || coin(rng, 0.25)) {
    if (coin(rng, 0.12)) return pcl_true();
    return random_interaction_formula(rng, u, 2);
  }
  auto sub = [&] { return random_pcl(rng, u, depth - 1); };
  switch (pick(rng, 7)) {
    case 0: return pcl_not(sub());
    case 1: return pcl_union(sub(), sub());
    case 2: return pcl_coalesce(sub(), sub());
    case 3: return pcl_meet(sub(), sub());
    case 4: return pcl_closure(sub());
    case 5: return pcl_disjunction(sub(), sub());
    default: return pcl_implies(sub(), sub());
  }
}

WFormula random_wpcl(Rng& rng, const PortUniverse& u, SemiringId k, int depth) {
  if (depth <= 0 || coin(rng, 0.2)) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.4) return w_const(random_value(rng, k));
    if (r < 0.8) return w_bool(random_interaction_formula(rng, u, 2));
    return w_bool(random_pcl(rng, u, 1));
  }
  auto sub = [&] { return random_wpcl(rng, u, k, depth - 1); };
  switch (pick(rng, 4)) {
    case 0: return w_plus(sub(), sub());
    case 1: return w_times(sub(), sub());
    case 2: return w_coalesce(sub(), sub());
    default: return w_closure(sub());
  }
}

Configuration random_configuration(Rng& rng, const PortUniverse& u, double density) {
  auto all = enumerate_interactions(u);
  std::vector<PortMask> keep;
  for (PortMask a : all) {
    if (coin(rng, density)) keep.push_back(a);
  }
  if (keep.empty()) keep.push_back(all[pick(rng, all.size())]);
  return Configuration(std::move(keep));
}

Configuration random_small_configuration(Rng& rng, const PortUniverse& u, std::size_t max_size) {
  auto all = enumerate_interactions(u);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(1, std::min(max_size, all.size()))(rng);
  all.resize(n);
  return Configuration(std::move(all));
}

Model random_model(Rng& rng, const ModelShape& shape) {
  for (;;) {
    Model b;
    bool wide = coin(rng, 0.5);
    b.add_type({"T1", wide ? std::vector<std::string>{"p", "q"} : std::vector<std::string>{"p"}});
    b.add_type({"T2", {"p"}});
    std::size_t n =
        std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, shape.max_components))(rng);
    std::size_t total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      std::string t = coin(rng, 0.6) ? "T1" : "T2";
      total += b.type(t).ports.size();
      b.add_component({"c" + std::to_string(i), t});
    }
    if (total <= shape.max_total_ports) return b;
  }
}

bool random_binder(Rng& rng, const Model& b, const std::string& var, Binder& out) {
  auto types = inhabited_types(b);
  if (b.components().empty()) return false;
  Binder bd{var, types[pick(rng, types.size())], Predicate()};
  if (coin(rng, 0.35)) {
    const auto& cs = b.components();
    Binder with = bd;
    with.where = Predicate::neq(var, cs[pick(rng, cs.size())].name);
    if (!matching_components(b, with).empty()) bd = with;
  }
  out = bd;
  return !matching_components(b, bd).empty();
}

Formula random_focl(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope, int depth,
                    bool quantifiers) {
  if (depth <= 0 || coin(rng, 0.25)) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.1) return pcl_true();
    if (r < 0.18 && !scope.empty()) return focl_cond(random_condition(rng, b, scope));
    return pcl_interaction(pil_over(rng, term_ports(b, scope), 1));
  }
  auto sub = [&] { return random_focl(rng, b, scope, depth - 1, quantifiers); };
  std::size_t choices = quantifiers ? 8 : 5;
  switch (pick(rng, choices)) {
    case 0: return pcl_not(sub());
    case 1: return pcl_union(sub(), sub());
    case 2: return pcl_coalesce(sub(), sub());
    case 3: return pcl_meet(sub(), sub());
    case 4: return pcl_closure(sub());
    default: {
      std::string v = fresh_var(scope);
      Binder bd = nested_binder(rng, b, scope, v);
      auto inner = scope;
      inner.push_back({v, bd.type});
      Formula body = random_focl(rng, b, inner, depth - 1, quantifiers);
      switch (pick(rng, 3)) {
        case 0: return focl_exists(bd, body);
        case 1: return focl_sum(bd, body);
        default: return focl_forall(bd, body);
      }
    }
  }
}

WFormula random_wfocl(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope,
                      SemiringId k, int depth, bool quantifiers) {
  if (depth <= 0 || coin(rng, 0.2)) {
    if (coin(rng, 0.35)) return w_const(random_value(rng, k));
    return w_bool(random_focl(rng, b, scope, 1, quantifiers));
  }
  auto sub = [&] { return random_wfocl(rng, b, scope, k, depth - 1, quantifiers); };
  std::size_t choices = quantifiers ? 7 : 4;
  switch (pick(rng, choices)) {
    case 0: return w_plus(sub(), sub());
    case 1: return w_times(sub(), sub());
    case 2: return w_coalesce(sub(), sub());
    case 3: return w_closure(sub());
    default: {
      std::string v = fresh_var(scope);
      Binder bd = nested_binder(rng, b, scope, v);
      auto inner = scope;
      inner.push_back({v, bd.type});
      WFormula body = random_wfocl(rng, b, inner, k, depth - 1, quantifiers);
      switch (pick(rng, 3)) {
        case 0: return w_oplus_q(bd, body);
        case 1: return w_otimes_q(bd, body);
        default: return w_ouplus_q(bd, body);
      }
    }
  }
}

}  // namespace wcl::checks
