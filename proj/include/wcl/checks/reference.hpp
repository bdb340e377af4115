#pragma once

#include "wcl/focl.hpp"
#include "wcl/formula.hpp"
#include "wcl/ports.hpp"
#include "wcl/semiring.hpp"

// A deliberately plain evaluator used as a test oracle. It keeps variable
// bindings in an environment instead of substituting, tabulates every
// subformula on all sub-configurations of gamma, and enumerates coalescing
// families literally. Exponential in |gamma|; meant for |gamma| <= 8 or so.
namespace wcl::checks {

// gamma over u. Port owners resolve through the environment first; ports
// outside u make an atom false. Pass a null model for formulas without
// quantifiers.
bool reference_satisfies(const Model* b, const PortUniverse& u, const Configuration& g,
                         const Formula& f);
Value reference_eval(const Model* b, const PortUniverse& u, const Configuration& g,
                     const WFormula& z, SemiringId k);

}  // namespace wcl::checks
