#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wcl/focl.hpp"
#include "wcl/formula.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

// Seeded random instances for property checks. Every draw goes through the
// caller's engine, so a fixed seed reproduces a whole run.
namespace wcl::checks {

using Rng = std::mt19937_64;

// Mostly small values; the zero and one of the semiring appear often enough
// to exercise absorption and identities.
Value random_value(Rng& rng, SemiringId k);

Pil random_pil(Rng& rng, const PortUniverse& u, int depth);
// pcl_interaction of a random PIL formula.
Formula random_interaction_formula(Rng& rng, const PortUniverse& u, int depth);
Formula random_pcl(Rng& rng, const PortUniverse& u, int depth);
WFormula random_wpcl(Rng& rng, const PortUniverse& u, SemiringId k, int depth);

// Each interaction of I(P) is kept with probability `density`; never empty.
Configuration random_configuration(Rng& rng, const PortUniverse& u, double density = 0.4);
// Between 1 and max_size distinct interactions, uniformly many.
Configuration random_small_configuration(Rng& rng, const PortUniverse& u, std::size_t max_size);

// Types T1 (ports p, or p and q) and T2 (port p), components c1..cn.
struct ModelShape {
  std::size_t max_components = 3;
  std::size_t max_total_ports = 3;
};
Model random_model(Rng& rng, const ModelShape& shape = {});

// A variable in scope while generating first-order formulas.
struct ScopeVar {
  std::string name;
  std::string type;  // kUniversalType allowed
};

// Formulas whose port owners are components of b or the variables in scope.
// Port names are chosen to exist on every component a variable can denote.
// `quantifiers` allows nested quantifiers with fresh variable names.
Formula random_focl(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope, int depth,
                    bool quantifiers = true);
WFormula random_wfocl(Rng& rng, const Model& b, const std::vector<ScopeVar>& scope,
                      SemiringId k, int depth, bool quantifiers = true);

// A binder for `var` over a type with at least one component, or U, with an
// optional inequality side condition. Returns false when the model offers no
// binder whose match set is nonempty.
bool random_binder(Rng& rng, const Model& b, const std::string& var, Binder& out);

}  // namespace wcl::checks
