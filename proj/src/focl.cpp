#include "wcl/focl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wcl/errors.hpp"

namespace wcl {

// ---------------------------------------------------------------------------
// Model
// ---------------------------------------------------------------------------

void Model::add_type(ComponentType t) {
  if (t.name == kUniversalType) throw UsageError("type name U is reserved");
  if (types_.count(t.name)) throw UsageError("duplicate type '" + t.name + "'");
  std::sort(t.ports.begin(), t.ports.end());
  if (std::adjacent_find(t.ports.begin(), t.ports.end()) != t.ports.end()) {
    throw UsageError("duplicate port in type '" + t.name + "'");
  }
  types_.emplace(t.name, std::move(t));
}

void Model::add_component(Component c) {
  if (!has_type(c.type)) throw UsageError("unknown type '" + c.type + "' for component " + c.name);
  if (find(c.name)) throw UsageError("duplicate component '" + c.name + "'");
  auto pos = std::lower_bound(components_.begin(), components_.end(), c.name,
                              [](const Component& x, const std::string& n) { return x.name < n; });
  components_.insert(pos, std::move(c));
}

bool Model::has_type(const std::string& name) const { return types_.count(name) != 0; }

const ComponentType& Model::type(const std::string& name) const {
  auto it = types_.find(name);
  if (it == types_.end()) throw UsageError("unknown type '" + name + "'");
  return it->second;
}

const Component* Model::find(const std::string& name) const {
  auto pos = std::lower_bound(components_.begin(), components_.end(), name,
                              [](const Component& x, const std::string& n) { return x.name < n; });
  return pos != components_.end() && pos->name == name ? &*pos : nullptr;
}

PortUniverse Model::ports() const {
  std::vector<Port> ps;
  for (const auto& c : components_) {
    for (const auto& p : type(c.type).ports) ps.push_back(Port{c.name, p});
  }
  return PortUniverse(std::move(ps));
}

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

Model Model::parse(std::string_view text) {
  Model m;
  std::stringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      return UsageError("model line " + std::to_string(lineno) + ": " + why);
    };
    std::stringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "type") {
      ComponentType t;
      std::string kw;
      ls >> t.name >> kw;
      if (t.name.empty() || kw != "ports") throw fail("expected 'type <Name> ports p1,p2'");
      std::string rest;
      std::getline(ls, rest);
      for (auto& p : split(rest, ',')) {
        if (p.empty()) throw fail("empty port name");
        parse_port(p);
        t.ports.push_back(p);
      }
      if (t.ports.empty()) throw fail("a type needs at least one port");
      m.add_type(std::move(t));
    } else if (word == "component") {
      std::string rest;
      std::getline(ls, rest);
      auto parts = split(rest, ':');
      if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
        throw fail("expected 'component <name> : <Type>'");
      }
      parse_port(parts[0]);
      m.add_component(Component{parts[0], parts[1]});
    } else {
      throw fail("unknown directive '" + word + "'");
    }
  }
  return m;
}

std::string Model::to_text() const {
  std::string out;
  for (const auto& [name, t] : types_) {
    out += "type " + name + " ports ";
    for (std::size_t i = 0; i < t.ports.size(); ++i) out += (i ? "," : "") + t.ports[i];
    out += "\n";
  }
  for (const auto& c : components_) out += "component " + c.name + " : " + c.type + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Matching and substitution
// ---------------------------------------------------------------------------

namespace {

std::string resolve_term(const std::string& term, const Model& b, const Bindings& env) {
  if (auto it = env.find(term); it != env.end()) return it->second;
  if (!b.find(term)) {
    throw UsageError("'" + term + "' is neither a bound variable nor a component of the model");
  }
  return term;
}

bool holds(const Predicate& p, const Model& b, const Bindings& env) {
  switch (p.kind()) {
    case Predicate::Kind::True: return true;
    case Predicate::Kind::Eq:
      return resolve_term(p.left_term(), b, env) == resolve_term(p.right_term(), b, env);
    case Predicate::Kind::Neq:
      return resolve_term(p.left_term(), b, env) != resolve_term(p.right_term(), b, env);
    case Predicate::Kind::And: return holds(p.lhs(), b, env) && holds(p.rhs(), b, env);
  }
  return false;
}

std::string rename(const std::string& term, const std::string& var, const std::string& comp) {
  return term == var ? comp : term;
}

Predicate substitute_pred(const Predicate& p, const std::string& var, const std::string& comp) {
  switch (p.kind()) {
    case Predicate::Kind::True: return p;
    case Predicate::Kind::Eq:
      return Predicate::eq(rename(p.left_term(), var, comp), rename(p.right_term(), var, comp));
    case Predicate::Kind::Neq:
      return Predicate::neq(rename(p.left_term(), var, comp), rename(p.right_term(), var, comp));
    case Predicate::Kind::And:
      return Predicate::conj(substitute_pred(p.lhs(), var, comp),
                             substitute_pred(p.rhs(), var, comp));
  }
  return p;
}

Pil substitute_pil(const Pil& phi, const std::string& var, const std::string& comp) {
  switch (phi.kind()) {
    case Pil::Kind::True: return phi;
    case Pil::Kind::Atom:
      if (phi.port().owner != var) return phi;
      return pil_atom(Port{comp, phi.port().name});
    case Pil::Kind::Not: return pil_not(substitute_pil(phi.lhs(), var, comp));
    case Pil::Kind::Or:
      return pil_or(substitute_pil(phi.lhs(), var, comp), substitute_pil(phi.rhs(), var, comp));
  }
  return phi;
}

Binder substitute_binder(const Binder& bd, const std::string& var, const std::string& comp) {
  if (bd.var == var) {
    throw UsageError("cannot substitute '" + var + "': it is bound by an inner quantifier");
  }
  return Binder{bd.var, bd.type, substitute_pred(bd.where, var, comp)};
}

}  // namespace

std::vector<std::string> matching_components(const Model& b, const Binder& binder,
                                             const Bindings& env) {
  if (binder.type != kUniversalType && !b.has_type(binder.type)) {
    throw UsageError("unknown component type '" + binder.type + "'");
  }
  std::vector<std::string> out;
  for (const auto& c : b.components()) {
    if (binder.type != kUniversalType && c.type != binder.type) continue;
    Bindings local = env;
    local[binder.var] = c.name;
    if (holds(binder.where, b, local)) out.push_back(c.name);
  }
  return out;
}

Formula substitute(const Formula& f, const std::string& var, const std::string& comp) {
  switch (f.kind()) {
    case Formula::Kind::True: return f;
    case Formula::Kind::Interaction: return pcl_interaction(substitute_pil(f.pil(), var, comp));
    case Formula::Kind::Not: return pcl_not(substitute(f.lhs(), var, comp));
    case Formula::Kind::Union:
      return pcl_union(substitute(f.lhs(), var, comp), substitute(f.rhs(), var, comp));
    case Formula::Kind::Coalesce:
      return pcl_coalesce(substitute(f.lhs(), var, comp), substitute(f.rhs(), var, comp));
    case Formula::Kind::Exists:
      return focl_exists(substitute_binder(f.binder(), var, comp), substitute(f.lhs(), var, comp));
    case Formula::Kind::Sum:
      return focl_sum(substitute_binder(f.binder(), var, comp), substitute(f.lhs(), var, comp));
    case Formula::Kind::Cond: return focl_cond(substitute_pred(f.condition(), var, comp));
  }
  return f;
}

WFormula substitute(const WFormula& z, const std::string& var, const std::string& comp) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return z;
    case WFormula::Kind::Bool: return w_bool(substitute(z.boolean(), var, comp));
    case WFormula::Kind::Plus:
      return w_plus(substitute(z.lhs(), var, comp), substitute(z.rhs(), var, comp));
    case WFormula::Kind::Times:
      return w_times(substitute(z.lhs(), var, comp), substitute(z.rhs(), var, comp));
    case WFormula::Kind::Coalesce:
      return w_coalesce(substitute(z.lhs(), var, comp), substitute(z.rhs(), var, comp));
    case WFormula::Kind::Closure: return w_closure(substitute(z.lhs(), var, comp));
    case WFormula::Kind::OplusQ:
      return w_oplus_q(substitute_binder(z.binder(), var, comp), substitute(z.lhs(), var, comp));
    case WFormula::Kind::OtimesQ:
      return w_otimes_q(substitute_binder(z.binder(), var, comp), substitute(z.lhs(), var, comp));
    case WFormula::Kind::OuplusQ:
      return w_ouplus_q(substitute_binder(z.binder(), var, comp), substitute(z.lhs(), var, comp));
  }
  return z;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

void check_grounded(const Pil& phi, const Model& b) {
  switch (phi.kind()) {
    case Pil::Kind::True: return;
    case Pil::Kind::Atom: {
      const Port& p = phi.port();
      if (p.owner.empty()) {
        throw UsageError("port '" + p.name + "' must be qualified by a component or variable");
      }
      const Component* c = b.find(p.owner);
      if (!c) {
        throw UsageError("'" + p.owner + "' is neither a bound variable nor a component");
      }
      const auto& ports = b.type(c->type).ports;
      if (!std::binary_search(ports.begin(), ports.end(), p.name)) {
        throw UsageError("component " + c->name + " of type " + c->type + " has no port '" +
                         p.name + "'");
      }
      return;
    }
    case Pil::Kind::Not: check_grounded(phi.lhs(), b); return;
    case Pil::Kind::Or:
      check_grounded(phi.lhs(), b);
      check_grounded(phi.rhs(), b);
      return;
  }
}

std::vector<std::string> matches_of(const Model& b, const Binder& bd) {
  return matching_components(b, bd);
}

}  // namespace

Formula ground(const Formula& f, const Model& b) {
  switch (f.kind()) {
    case Formula::Kind::True: return f;
    case Formula::Kind::Interaction: check_grounded(f.pil(), b); return f;
    case Formula::Kind::Not: return pcl_not(ground(f.lhs(), b));
    case Formula::Kind::Union: return pcl_union(ground(f.lhs(), b), ground(f.rhs(), b));
    case Formula::Kind::Coalesce: return pcl_coalesce(ground(f.lhs(), b), ground(f.rhs(), b));
    case Formula::Kind::Exists:
    case Formula::Kind::Sum: {
      std::vector<Formula> parts;
      for (const auto& c : matches_of(b, f.binder())) {
        parts.push_back(ground(substitute(f.lhs(), f.binder().var, c), b));
      }
      if (parts.empty()) return pcl_false();
      if (f.kind() == Formula::Kind::Sum) return pcl_coalesce_all(parts);
      Formula acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) acc = pcl_union(acc, parts[i]);
      return acc;
    }
    case Formula::Kind::Cond: return holds(f.condition(), b, {}) ? pcl_true() : pcl_false();
  }
  return f;
}

WFormula ground(const WFormula& z, const Model& b, SemiringId k) {
  switch (z.kind()) {
    case WFormula::Kind::Const: return z;
    case WFormula::Kind::Bool: return w_bool(ground(z.boolean(), b));
    case WFormula::Kind::Plus: return w_plus(ground(z.lhs(), b, k), ground(z.rhs(), b, k));
    case WFormula::Kind::Times: return w_times(ground(z.lhs(), b, k), ground(z.rhs(), b, k));
    case WFormula::Kind::Coalesce:
      return w_coalesce(ground(z.lhs(), b, k), ground(z.rhs(), b, k));
    case WFormula::Kind::Closure: return w_closure(ground(z.lhs(), b, k));
    case WFormula::Kind::OplusQ:
    case WFormula::Kind::OtimesQ:
    case WFormula::Kind::OuplusQ: {
      std::vector<WFormula> parts;
      for (const auto& c : matches_of(b, z.binder())) {
        parts.push_back(ground(substitute(z.lhs(), z.binder().var, c), b, k));
      }
      if (parts.empty()) {
        return w_const(z.kind() == WFormula::Kind::OtimesQ ? Value::one(k) : Value::zero(k));
      }
      if (z.kind() == WFormula::Kind::OplusQ) return w_plus_all(parts);
      if (z.kind() == WFormula::Kind::OtimesQ) return w_times_all(parts);
      // Iterated binary coalescing sums over exactly the families of nonempty
      // parts whose union is the whole configuration.
      return w_coalesce_all(parts);
    }
  }
  return z;
}

namespace {

// Re-expresses gamma over the model's ports; nullopt when it uses a port the
// model does not have.
std::optional<Configuration> onto_model(const PortUniverse& mu, const PortUniverse& gu,
                                        const Configuration& g) {
  std::vector<PortMask> items;
  for (PortMask a : g.interactions()) {
    PortMask m = 0;
    for (std::size_t i = 0; i < gu.size(); ++i) {
      if (!(a >> i & 1)) continue;
      auto j = mu.index_of(gu.at(i));
      if (!j) return std::nullopt;
      m |= PortMask{1} << *j;
    }
    items.push_back(m);
  }
  return Configuration(std::move(items));
}

}  // namespace

bool focl_satisfies(const Model& b, const Configuration& g, const Formula& f,
                    const EvalOptions& opts) {
  return focl_satisfies(b, b.ports(), g, f, opts);
}

bool focl_satisfies(const Model& b, const PortUniverse& gu, const Configuration& g,
                    const Formula& f, const EvalOptions& opts) {
  const PortUniverse mu = b.ports();
  Formula grounded = ground(f, b);
  auto mg = onto_model(mu, gu, g);
  if (!mg) return false;
  return pcl_satisfies(*mg, grounded, mu, opts);
}

Value wfocl_eval(const WFormula& z, const Model& b, const Configuration& g, SemiringId k,
                 const EvalOptions& opts) {
  return wfocl_eval(z, b, b.ports(), g, k, opts);
}

Value wfocl_eval(const WFormula& z, const Model& b, const PortUniverse& gu,
                 const Configuration& g, SemiringId k, const EvalOptions& opts) {
  const PortUniverse mu = b.ports();
  WFormula grounded = ground(z, b, k);
  auto mg = onto_model(mu, gu, g);
  if (!mg) return Value::zero(k);
  return wpcl_evaluate(grounded, *mg, mu, k, opts);
}

}  // namespace wcl
