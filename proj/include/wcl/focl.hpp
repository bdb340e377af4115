#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wcl/formula.hpp"
#include "wcl/pcl.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

struct ComponentType {
  std::string name;
  std::vector<std::string> ports;
};

struct Component {
  std::string name;
  std::string type;
};

// A finite set of typed components. Its instance ports c.p form the port
// universe that configurations range over.
class Model {
 public:
  void add_type(ComponentType t);
  void add_component(Component c);

  // Sorted by name.
  const std::vector<Component>& components() const { return components_; }
  bool has_type(const std::string& name) const;
  const ComponentType& type(const std::string& name) const;
  const Component* find(const std::string& name) const;
  PortUniverse ports() const;

  // Lines "type T ports p,q" and "component c : T"; '#' starts a comment.
  static Model parse(std::string_view text);
  std::string to_text() const;

 private:
  std::map<std::string, ComponentType> types_;
  std::vector<Component> components_;
};

using Bindings = std::map<std::string, std::string>;

// Components of the binder's type, in name order, whose side condition holds
// with the binder variable bound to them. Other predicate terms resolve
// through env first and otherwise must name components.
std::vector<std::string> matching_components(const Model& b, const Binder& binder,
                                             const Bindings& env = {});

// Replaces free occurrences of var by the component name. Substituting a
// variable that some quantifier inside binds is a UsageError.
Formula substitute(const Formula& f, const std::string& var, const std::string& comp);
WFormula substitute(const WFormula& z, const std::string& var, const std::string& comp);

// Expands every quantifier over the model: exists becomes a union, sum a
// coalescing (false when nothing matches), Oplus a sum (0 when empty),
// Otimes a product (1 when empty) and Ouplus a coalescing (0 when empty).
// The result is a configuration formula over model.ports().
Formula ground(const Formula& f, const Model& b);
WFormula ground(const WFormula& z, const Model& b, SemiringId k);

// gamma is read over model.ports(). The overloads taking a universe accept a
// configuration over wider ports; any port outside the model gives false / 0.
bool focl_satisfies(const Model& b, const Configuration& g, const Formula& f,
                    const EvalOptions& opts = {});
bool focl_satisfies(const Model& b, const PortUniverse& gu, const Configuration& g,
                    const Formula& f, const EvalOptions& opts = {});
Value wfocl_eval(const WFormula& z, const Model& b, const Configuration& g, SemiringId k,
                 const EvalOptions& opts = {});
Value wfocl_eval(const WFormula& z, const Model& b, const PortUniverse& gu,
                 const Configuration& g, SemiringId k, const EvalOptions& opts = {});

}  // namespace wcl
