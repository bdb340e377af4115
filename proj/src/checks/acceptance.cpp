#include "wcl/checks/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wcl/checks/generators.hpp"
#include "wcl/checks/reference.hpp"
#include "wcl/errors.hpp"
#include "wcl/focl.hpp"
#include "wcl/normal_form.hpp"
#include "wcl/pcl.hpp"

namespace wcl::checks {

namespace {

// Runtime limits, in seconds.
constexpr double kLimitCounterexample = 0.001;
constexpr double kLimitTsp = 10;
constexpr double kLimitWeightedLaws = 60;
constexpr double kLimitPclLaws = 30;
constexpr double kLimitFnf = 120;
constexpr double kLimitFocl = 60;
constexpr double kLimitPubSub = 5;
constexpr double kLimitStrategies = 30;

constexpr double kTol = kDefaultTolerance;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const PortUniverse& two_ports() {
  static const PortUniverse u = PortUniverse::parse("p,q");
  return u;
}

const PortUniverse& three_ports() {
  static const PortUniverse u = PortUniverse::parse("p,q,r");
  return u;
}

std::string mismatch(const std::string& law, SemiringId k, const std::string& lhs,
                     const std::string& rhs, const std::string& gamma, const Value& a,
                     const Value& b) {
  std::ostringstream os;
  os << law << " over " << semiring_name(k) << ": " << lhs << "  vs  " << rhs << "  at "
     << gamma << ": " << to_exact_string(a) << " != " << to_exact_string(b);
  return os.str();
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& ch : s) {
    if (ch == '\n') ch = ';';
  }
  return s;
}

// ---------------------------------------------------------------------------
// 1. Non-distributivity counterexample
// ---------------------------------------------------------------------------

void counterexample(CriterionResult& r) {
  const PortUniverse& u = two_ports();
  const auto nat = [](std::uint64_t n) { return w_const(Value::natural(n)); };
  const WFormula pq =
      w_bool(pcl_interaction(pil_and(pil_atom({"", "p"}), pil_atom({"", "q"}))));
  const WFormula five_or_pq = w_plus(nat(5), pq);
  const WFormula left =
      w_times(five_or_pq, w_coalesce(w_times(pq, nat(6)), w_times(pq, nat(3))));
  const WFormula right = w_coalesce(w_times(five_or_pq, w_times(pq, nat(6))),
                                    w_times(five_or_pq, w_times(pq, nat(3))));
  const Configuration g = parse_configuration("{{p, q}}", u);

  const auto t0 = Clock::now();
  const Value a = wpcl_eval(left, g, u, SemiringId::natural);
  const Value b = wpcl_eval(right, g, u, SemiringId::natural);
  r.seconds = since(t0);

  r.correct = a == Value::natural(108) && b == Value::natural(648);
  r.notes.push_back("product over coalescing: " + to_string(a) + ", coalescing of products: " +
                    to_string(b));
  if (!r.correct) r.notes.push_back("expected 108 and 648");
}

// ---------------------------------------------------------------------------
// 2. TSP against brute force
// ---------------------------------------------------------------------------

void tsp(CriterionResult& r, Rng& rng, bool perturb) {
  const auto t0 = Clock::now();
  bool ok = true;
  EvalOptions sparse;
  sparse.strategy = Strategy::Sparse;

  const std::map<std::size_t, std::size_t> tour_counts = {{4, 3}, {5, 12}, {6, 60}};
  for (auto [n, expected] : tour_counts) {
    const std::size_t got = cyclic_tours(n).size();
    if (got != expected) {
      ok = false;
      r.notes.push_back(std::to_string(n) + " cities: " + std::to_string(got) + " tours, expected " +
                        std::to_string(expected));
    }
  }

  {
    const DistanceMatrix d = pinned_tsp_fixture(perturb);
    const WpclInstance inst = tsp_instance(d);
    const Value v = wpcl_evaluate(inst.formula, inst.config, inst.ports, SemiringId::minplus, sparse);
    if (v != Value::real(SemiringId::minplus, kPinnedTspOptimum)) {
      ok = false;
      r.notes.push_back("pinned fixture: expected " + to_string(Value::real(SemiringId::minplus, kPinnedTspOptimum)) +
                        ", got " + to_string(v));
    }
  }

  std::uniform_int_distribution<int> weight(1, 20);
  std::size_t checked = 0;
  for (std::size_t n : {4u, 5u, 6u}) {
    for (int trial = 0; trial < 100; ++trial) {
      DistanceMatrix d(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, weight(rng));
      }
      const WpclInstance inst = tsp_instance(d);
      const Value v =
          wpcl_evaluate(inst.formula, inst.config, inst.ports, SemiringId::minplus, sparse);
      const double best = tsp_brute_force(d);
      ++checked;
      if (v != Value::real(SemiringId::minplus, best)) {
        ok = false;
        r.notes.push_back(std::to_string(n) + " cities, trial " + std::to_string(trial) +
                          ": formula " + to_string(v) + ", brute force " +
                          to_string(Value::real(SemiringId::minplus, best)));
        break;
      }
    }
  }
  r.seconds = since(t0);
  r.correct = ok;
  r.notes.push_back(std::to_string(checked) + " random matrices agree with brute force");
}

// ---------------------------------------------------------------------------
// 3. Weighted laws
// ---------------------------------------------------------------------------

struct WeightedLaw {
  const char* name;
  bool idempotent_only;
  // z[0..2] random weighted formulas, phi a Boolean interaction formula.
  std::function<std::pair<WFormula, WFormula>(const WFormula* z, const WFormula& phi,
                                              SemiringId k)>
      build;
};

const std::vector<WeightedLaw>& weighted_laws() {
  static const std::vector<WeightedLaw> laws = {
      {"coalescing is associative", false,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_coalesce(w_coalesce(z[0], z[1]), z[2]),
                          w_coalesce(z[0], w_coalesce(z[1], z[2]))};
       }},
      {"coalescing with zero", false,
       [](const WFormula* z, const WFormula&, SemiringId k) {
         const WFormula zero = w_const(Value::zero(k));
         return std::pair{w_coalesce(z[0], zero), zero};
       }},
      {"coalescing is commutative", false,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_coalesce(z[0], z[1]), w_coalesce(z[1], z[0])};
       }},
      {"coalescing distributes over sum", false,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_coalesce(z[0], w_plus(z[1], z[2])),
                          w_plus(w_coalesce(z[0], z[1]), w_coalesce(z[0], z[2]))};
       }},
      {"interaction factor over coalescing", false,
       [](const WFormula* z, const WFormula& phi, SemiringId) {
         return std::pair{w_times(phi, w_coalesce(z[0], z[1])),
                          w_coalesce(w_times(phi, z[0]), w_times(phi, z[1]))};
       }},
      {"closure of a sum", false,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_closure(w_plus(z[0], z[1])), w_plus(w_closure(z[0]), w_closure(z[1]))};
       }},
      {"closure of a coalescing is a product", false,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_closure(w_coalesce(z[0], z[1])),
                          w_times(w_closure(z[0]), w_closure(z[1]))};
       }},
      {"disjunction distributes over sum", true,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_disjunction(z[0], w_plus(z[1], z[2])),
                          w_plus(w_disjunction(z[0], z[1]), w_disjunction(z[0], z[2]))};
       }},
      {"closure of a coalescing is a coalescing", true,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_closure(w_coalesce(z[0], z[1])),
                          w_coalesce(w_closure(z[0]), w_closure(z[1]))};
       }},
      {"closure is idempotent", true,
       [](const WFormula* z, const WFormula&, SemiringId) {
         return std::pair{w_closure(w_closure(z[0])), w_closure(z[0])};
       }},
  };
  return laws;
}

struct LawFailure {
  Configuration gamma;
  Value left, right;
};

// Exhaustive over C(u) when |u| <= 2 (small enough to enumerate), otherwise
// on `samples` random configurations.
std::optional<LawFailure> weighted_law_fails(Rng& rng, const WFormula& l, const WFormula& r,
                                             const PortUniverse& u, SemiringId k,
                                             std::size_t samples) {
  auto check = [&](const Configuration& g) -> std::optional<LawFailure> {
    const Value a = wpcl_evaluate(l, g, u, k);
    const Value b = wpcl_evaluate(r, g, u, k);
    if (!approx_equal(a, b, kTol)) return LawFailure{g, a, b};
    return std::nullopt;
  };
  if (u.size() <= 2) {
    for (const auto& g : enumerate_configurations(u)) {
      if (auto f = check(g)) return f;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    if (auto f = check(random_configuration(rng, u))) return f;
  }
  return std::nullopt;
}

void weighted_law_suite(CriterionResult& r, Rng& rng) {
  constexpr int kInstances = 200;
  constexpr std::size_t kSamples = 8;
  const auto t0 = Clock::now();
  bool ok = true;
  const auto& laws = weighted_laws();
  for (std::size_t li = 0; li < laws.size() && ok; ++li) {
    const WeightedLaw& law = laws[li];
    for (SemiringId k : kAllSemirings) {
      if (law.idempotent_only && !is_idempotent(k)) continue;
      for (const PortUniverse* u : {&two_ports(), &three_ports()}) {
        for (int i = 0; i < kInstances && ok; ++i) {
          WFormula z[3] = {random_wpcl(rng, *u, k, 2), random_wpcl(rng, *u, k, 2),
                           random_wpcl(rng, *u, k, 2)};
          const WFormula phi = w_bool(random_interaction_formula(rng, *u, 2));
          auto [lhs, rhs] = law.build(z, phi, k);
          if (auto f = weighted_law_fails(rng, lhs, rhs, *u, k, kSamples)) {
            ok = false;
            r.notes.push_back(mismatch(law.name, k, to_string(lhs), to_string(rhs),
                                       configuration_to_string(f->gamma, *u), f->left, f->right));
          }
        }
      }
    }
  }

  // The idempotent-only laws must fail somewhere over the natural numbers.
  for (std::size_t li = 0; li < laws.size(); ++li) {
    const WeightedLaw& law = laws[li];
    if (!law.idempotent_only) continue;
    bool found = false;
    for (int attempt = 0; attempt < 5000 && !found; ++attempt) {
      const PortUniverse& u = two_ports();
      const SemiringId k = SemiringId::natural;
      WFormula z[3] = {random_wpcl(rng, u, k, 1), random_wpcl(rng, u, k, 1),
                       random_wpcl(rng, u, k, 1)};
      const WFormula phi = w_bool(random_interaction_formula(rng, u, 1));
      auto [lhs, rhs] = law.build(z, phi, k);
      if (auto f = weighted_law_fails(rng, lhs, rhs, u, k, 0)) {
        found = true;
        r.notes.push_back(std::string("counterexample, ") +
                          mismatch(law.name, k, to_string(lhs), to_string(rhs),
                                   configuration_to_string(f->gamma, u), f->left, f->right));
      }
    }
    if (!found) {
      ok = false;
      r.notes.push_back(std::string("no natural-number counterexample found for: ") + law.name);
    }
  }
  r.seconds = since(t0);
  r.correct = ok;
}

// ---------------------------------------------------------------------------
// 4. Unweighted laws
// ---------------------------------------------------------------------------

struct BooleanLaw {
  const char* name;
  bool implication;  // lhs => rhs rather than lhs == rhs
  // f[0..2] random formulas, phi[0..1] random interaction formulas.
  std::function<std::pair<Formula, Formula>(const Formula* f, const Formula* phi)> build;
};

const std::vector<BooleanLaw>& boolean_laws() {
  static const std::vector<BooleanLaw> laws = {
      {"conjunction of interaction formulas is intersection", false,
       [](const Formula*, const Formula* phi) {
         return std::pair{pcl_interaction(pil_and(phi[0].pil(), phi[1].pil())),
                          pcl_meet(phi[0], phi[1])};
       }},
      {"interaction formula distributes over coalescing", false,
       [](const Formula* f, const Formula* phi) {
         return std::pair{pcl_meet(phi[0], pcl_coalesce(f[0], f[1])),
                          pcl_coalesce(pcl_meet(phi[0], f[0]), pcl_meet(phi[0], f[1]))};
       }},
      {"coalescing distributes over union", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_coalesce(f[0], pcl_union(f[1], f[2])),
                          pcl_union(pcl_coalesce(f[0], f[1]), pcl_coalesce(f[0], f[2]))};
       }},
      {"disjunction distributes over union", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_disjunction(f[0], pcl_union(f[1], f[2])),
                          pcl_union(pcl_disjunction(f[0], f[1]), pcl_disjunction(f[0], f[2]))};
       }},
      {"coalescing into an intersection", true,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_coalesce(f[0], pcl_meet(f[1], f[2])),
                          pcl_meet(pcl_coalesce(f[0], f[1]), pcl_coalesce(f[0], f[2]))};
       }},
      {"union-closed coalescing distributes over disjunction", false,
       [](const Formula* f, const Formula* phi) {
         return std::pair{pcl_coalesce(phi[0], pcl_disjunction(f[1], f[2])),
                          pcl_disjunction(pcl_coalesce(phi[0], f[1]), pcl_coalesce(phi[0], f[2]))};
       }},
      {"union-closed formulas absorb self-coalescing", false,
       [](const Formula*, const Formula* phi) {
         return std::pair{pcl_coalesce(phi[0], phi[0]), phi[0]};
       }},
      {"interaction formulas are coalescing-idempotent", false,
       [](const Formula*, const Formula* phi) {
         return std::pair{pcl_coalesce(phi[1], phi[1]), phi[1]};
       }},
      {"closure is idempotent", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_closure(pcl_closure(f[0])), pcl_closure(f[0])};
       }},
      {"a formula implies its closure", true,
       [](const Formula* f, const Formula*) { return std::pair{f[0], pcl_closure(f[0])}; }},
      {"dual closure implies the formula", true,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_not(pcl_closure(pcl_not(f[0]))), f[0]};
       }},
      {"closure of a union", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_closure(pcl_union(f[0], f[1])),
                          pcl_union(pcl_closure(f[0]), pcl_closure(f[1]))};
       }},
      {"closure of a disjunction", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_closure(pcl_union(f[0], f[1])),
                          pcl_closure(pcl_disjunction(f[0], f[1]))};
       }},
      {"coalescing of closures", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_coalesce(pcl_closure(f[0]), pcl_closure(f[1])),
                          pcl_closure(pcl_coalesce(f[0], f[1]))};
       }},
      {"closure of a coalescing is an intersection", false,
       [](const Formula* f, const Formula*) {
         return std::pair{pcl_closure(pcl_coalesce(f[0], f[1])),
                          pcl_meet(pcl_closure(f[0]), pcl_closure(f[1]))};
       }},
  };
  return laws;
}

void boolean_law_suite(CriterionResult& r, Rng& rng) {
  constexpr int kInstances = 200;
  const auto t0 = Clock::now();
  const PortUniverse& u = two_ports();
  bool ok = true;
  for (const auto& law : boolean_laws()) {
    for (int i = 0; i < kInstances && ok; ++i) {
      Formula f[3] = {random_pcl(rng, u, 3), random_pcl(rng, u, 3), random_pcl(rng, u, 3)};
      Formula phi[2] = {random_interaction_formula(rng, u, 3),
                        random_interaction_formula(rng, u, 3)};
      auto [lhs, rhs] = law.build(f, phi);
      auto witness = law.implication ? pcl_implication_failure(lhs, rhs, u)
                                     : pcl_difference(lhs, rhs, u);
      if (witness) {
        ok = false;
        r.notes.push_back(std::string(law.name) + ": " + to_string(lhs) +
                          (law.implication ? "  =>  " : "  ==  ") + to_string(rhs) +
                          " fails at " + configuration_to_string(*witness, u));
      }
    }
  }
  r.seconds = since(t0);
  r.correct = ok;
}

// ---------------------------------------------------------------------------
// 5. Full normal form
// ---------------------------------------------------------------------------

// Pairs equivalent by the weighted laws (and the semiring axioms), wrapped in
// a random context so the rewrite happens below the root.
std::pair<WFormula, WFormula> rewritten_pair(Rng& rng, const PortUniverse& u, SemiringId k) {
  const auto& laws = weighted_laws();
  std::size_t li;
  do {
    li = std::uniform_int_distribution<std::size_t>(0, laws.size() + 1)(rng);
  } while (li < laws.size() && laws[li].idempotent_only && !is_idempotent(k));
  WFormula z[3] = {random_wpcl(rng, u, k, 2), random_wpcl(rng, u, k, 2),
                   random_wpcl(rng, u, k, 2)};
  const WFormula phi = w_bool(random_interaction_formula(rng, u, 2));
  std::pair<WFormula, WFormula> p = [&] {
    if (li == laws.size()) return std::pair{w_plus(z[0], z[1]), w_plus(z[1], z[0])};
    if (li == laws.size() + 1) {
      return std::pair{w_times(z[0], w_plus(z[1], z[2])),
                       w_plus(w_times(z[0], z[1]), w_times(z[0], z[2]))};
    }
    return laws[li].build(z, phi, k);
  }();
  const WFormula ctx = random_wpcl(rng, u, k, 1);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return {w_plus(ctx, p.first), w_plus(ctx, p.second)};
    case 1: return {w_times(p.first, ctx), w_times(p.second, ctx)};
    case 2: return {w_coalesce(ctx, p.first), w_coalesce(ctx, p.second)};
    default: return p;
  }
}

std::string first_fnf_difference(const FullNormalForm& a, const FullNormalForm& b) {
  if (a.keys() != b.keys()) return "different monomial sets";
  for (ConfigKey key : a.keys()) {
    if (!approx_equal(a.coefficient(key), b.coefficient(key), kTol)) {
      return "coefficient " + to_exact_string(a.coefficient(key)) + " vs " +
             to_exact_string(b.coefficient(key)) + " at " +
             configuration_to_string(configuration_from_key(key), a.universe());
    }
  }
  return {};
}

bool master_slave_fnf(CriterionResult& r, Rng& rng) {
  // Max-plus with integer weights keeps every coefficient exact.
  const SemiringId k = SemiringId::maxplus;
  WeightTable w(2, 2, k);
  std::uniform_int_distribution<int> d(1, 50);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) w.set(i, j, Value::real(k, d(rng)));
  }
  const WpclInstance inst = master_slave_wpcl(w);
  const FullNormalForm n = fnf_of_wpcl(inst.formula, inst.ports, k);
  const PortUniverse& u = inst.ports;

  // The expansion written out term by term: for each choice of master per
  // slave, every family N of full monomials joins the chosen pair.
  auto bit = [&](const char* a, const char* b) {
    return PortMask{1} << *u.index_of({"", a}) | PortMask{1} << *u.index_of({"", b});
  };
  const char* masters[2] = {"m1", "m2"};
  const char* slaves[2] = {"s1", "s2"};
  std::map<ConfigKey, Value> expected;
  std::vector<Value> products;
  const ConfigKey all = (ConfigKey{1} << enumerate_interactions(u).size()) - 1;
  for (std::size_t j1 = 0; j1 < 2; ++j1) {
    for (std::size_t j2 = 0; j2 < 2; ++j2) {
      const Value c = otimes(w.at(0, j1), w.at(1, j2));
      products.push_back(c);
      const ConfigKey pair = (ConfigKey{1} << (bit(slaves[0], masters[j1]) - 1)) |
                             (ConfigKey{1} << (bit(slaves[1], masters[j2]) - 1));
      for (ConfigKey family = 1; family <= all; ++family) {
        auto [it, fresh] = expected.emplace(pair | family, c);
        if (!fresh) it->second = oplus(it->second, c);
      }
    }
  }

  bool ok = true;
  std::vector<ConfigKey> keys;
  for (const auto& [key, _] : expected) keys.push_back(key);
  if (keys != n.keys()) {
    ok = false;
    r.notes.push_back("Master/Slave normal form: " + std::to_string(n.size()) + " terms, expected " +
                      std::to_string(keys.size()));
  }
  for (const auto& [key, v] : expected) {
    if (!ok) break;
    if (n.coefficient(key) != v) {
      ok = false;
      r.notes.push_back("Master/Slave normal form: coefficient " + to_string(n.coefficient(key)) +
                        " at " + configuration_to_string(configuration_from_key(key), u) +
                        ", expected " + to_string(v));
    }
  }
  // Every coefficient is one of the four products, and each product occurs.
  std::vector<bool> seen(products.size(), false);
  for (ConfigKey key : n.keys()) {
    bool member = false;
    for (std::size_t i = 0; i < products.size(); ++i) {
      if (n.coefficient(key) == products[i]) member = seen[i] = true;
    }
    if (!member) ok = false;
  }
  for (bool s : seen) ok = ok && s;
  r.notes.push_back("Master/Slave (2,2): " + std::to_string(n.size()) +
                    " terms over the four products of one weight per slave");
  return ok;
}

void fnf_suite(CriterionResult& r, Rng& rng) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t idx = 0;
  for (auto [u, count] : {std::pair{&two_ports(), 200}, std::pair{&three_ports(), 50}}) {
    for (int i = 0; i < count && ok; ++i, ++idx) {
      const SemiringId k = kAllSemirings[idx % kAllSemirings.size()];
      const WFormula z = random_wpcl(rng, *u, k, 3);
      const FullNormalForm n = fnf_of_wpcl(z, *u, k);
      if (!fnf_well_formed(n)) {
        ok = false;
        r.notes.push_back("ill-formed normal form for " + to_string(z));
        break;
      }
      for (const auto& g : enumerate_configurations(*u)) {
        const Value a = fnf_eval(n, g);
        const Value b = wpcl_evaluate(z, g, *u, k);
        if (!approx_equal(a, b, kTol)) {
          ok = false;
          r.notes.push_back(mismatch("normal form value", k, fnf_to_text(n), to_string(z),
                                     configuration_to_string(g, *u), a, b));
          break;
        }
      }
      if (!ok) break;
      const FullNormalForm again = fnf_of_wpcl(fnf_to_formula(n), *u, k);
      if (std::string d = first_fnf_difference(n, again); !d.empty()) {
        ok = false;
        r.notes.push_back("normal form of the normal form differs for " + to_string(z) + ": " + d);
        break;
      }
      auto [x, y] = rewritten_pair(rng, *u, k);
      if (std::string d = first_fnf_difference(fnf_of_wpcl(x, *u, k), fnf_of_wpcl(y, *u, k));
          !d.empty()) {
        ok = false;
        r.notes.push_back(std::string("equivalent pair over ") + std::string(semiring_name(k)) +
                          " has different normal forms: " + to_string(x) + "  vs  " +
                          to_string(y) + ": " + d);
      }
    }
  }
  ok = master_slave_fnf(r, rng) && ok;
  r.seconds = since(t0);
  r.correct = ok;
}

// ---------------------------------------------------------------------------
// 6. First-order suites
// ---------------------------------------------------------------------------

// Models small enough to enumerate C(P_B), and wider ones checked on samples.
constexpr ModelShape kExhaustiveShape{3, 3};
constexpr ModelShape kSampledShape{3, 6};
constexpr std::size_t kFoclSamples = 12;
constexpr std::size_t kSampledMaxGamma = 6;
constexpr std::size_t kReferenceMaxGamma = 4;

struct FoclCheck {
  Rng& rng;
  std::vector<std::string>& notes;
  // Natural-number values past 2^64 cannot be compared; those
  // configurations are counted and reported instead.
  std::size_t weighted_checks = 0;
  std::size_t overflow_skips = 0;

  std::vector<Configuration> gammas(const Model& b) {
    const PortUniverse u = b.ports();
    if (u.size() <= 3) return enumerate_configurations(u, 3);
    std::vector<Configuration> out;
    for (std::size_t i = 0; i < kFoclSamples; ++i) out.push_back(random_small_configuration(rng, u, kSampledMaxGamma));
    return out;
  }

  // lhs == rhs (or lhs => rhs) on every gamma tried; the library is also
  // compared with the reference evaluator on the smaller configurations.
  bool relation(const char* name, const Model& b, const Formula& lhs, const Formula& rhs,
                bool implication) {
    const PortUniverse u = b.ports();
    const Formula gl = ground(lhs, b), gr = ground(rhs, b);
    for (const auto& g : gammas(b)) {
      const bool x = pcl_satisfies(g, gl, u), y = pcl_satisfies(g, gr, u);
      if (implication ? (x && !y) : (x != y)) {
        notes.push_back(std::string(name) + ": " + to_string(lhs) +
                        (implication ? "  =>  " : "  ==  ") + to_string(rhs) + " fails at " +
                        configuration_to_string(g, u) + " in model " + one_line(b.to_text()));
        return false;
      }
      if (g.size() <= kReferenceMaxGamma &&
          (reference_satisfies(&b, u, g, lhs) != x || reference_satisfies(&b, u, g, rhs) != y)) {
        notes.push_back(std::string(name) + ": library and reference disagree on " +
                        to_string(lhs) + " or " + to_string(rhs) + " at " +
                        configuration_to_string(g, u));
        return false;
      }
    }
    return true;
  }

  bool weighted(const char* name, const Model& b, const WFormula& lhs, const WFormula& rhs,
                SemiringId k) {
    const PortUniverse u = b.ports();
    const WFormula gl = ground(lhs, b, k), gr = ground(rhs, b, k);
    for (const auto& g : gammas(b)) {
      Value x, y;
      try {
        x = wpcl_evaluate(gl, g, u, k);
        y = wpcl_evaluate(gr, g, u, k);
      } catch (const std::overflow_error&) {
        ++overflow_skips;
        continue;
      }
      ++weighted_checks;
      if (!approx_equal(x, y, kTol)) {
        notes.push_back(mismatch(name, k, to_string(lhs), to_string(rhs),
                                 configuration_to_string(g, u), x, y));
        return false;
      }
      if (g.size() <= kReferenceMaxGamma &&
          (!approx_equal(reference_eval(&b, u, g, lhs, k), x, kTol) ||
           !approx_equal(reference_eval(&b, u, g, rhs, k), y, kTol))) {
        notes.push_back(std::string(name) + ": library and reference disagree on " +
                        to_string(lhs) + " or " + to_string(rhs) + " at " +
                        configuration_to_string(g, u));
        return false;
      }
    }
    return true;
  }
};

bool known_counterexamples(std::vector<std::string>& notes) {
  bool ok = true;
  {
    Model b;
    b.add_type({"T", {"p"}});
    b.add_component({"c1", "T"});
    b.add_component({"c2", "T"});
    const Formula cp = pcl_interaction(pil_atom({"c", "p"}));
    const Formula c1p = pcl_interaction(pil_atom({"c1", "p"}));
    const Formula f1 = pcl_coalesce(cp, c1p), f2 = c1p;
    const Binder bd{"c", "T", Predicate()};
    const Formula all = focl_forall(bd, pcl_coalesce(f1, f2));
    const Formula sums = pcl_coalesce(focl_sum(bd, f1), focl_sum(bd, f2));
    const Configuration g = parse_configuration("{{c1.p}, {c2.p}}", b.ports());
    const bool l = focl_satisfies(b, g, all), r = focl_satisfies(b, g, sums);
    const bool reproduced = !l && r;
    ok = ok && reproduced;
    notes.push_back(std::string("universal coalescing counterexample at {{c1.p}, {c2.p}}: ") +
                    "forall side " + (l ? "holds" : "fails") + ", sum side " +
                    (r ? "holds" : "fails"));
  }
  {
    Model b;
    b.add_type({"T1", {"p"}});
    b.add_type({"T2", {"q"}});
    b.add_component({"b", "T1"});
    b.add_component({"c", "T1"});
    b.add_component({"d", "T2"});
    const Formula sp_dq =
        pcl_interaction(pil_and(pil_atom({"s", "p"}), pil_atom({"d", "q"})));
    const Formula f1 = sp_dq;
    const Formula f2 = pcl_coalesce(pcl_interaction(pil_atom({"c", "p"})), sp_dq);
    const Binder bd{"s", "T1", Predicate()};
    const Formula joint = focl_sum(bd, pcl_meet(f1, f2));
    const Formula split = pcl_meet(focl_sum(bd, f1), focl_sum(bd, f2));
    const Configuration g = parse_configuration("{{b.p, d.q}, {c.p, d.q}}", b.ports());
    const bool l = focl_satisfies(b, g, joint), r = focl_satisfies(b, g, split);
    ok = ok && !l && r;
    notes.push_back(std::string("coalescing-intersection counterexample at {{b.p, d.q}, {c.p, d.q}}: ") +
                    "joint side " + (l ? "holds" : "fails") + ", split side " +
                    (r ? "holds" : "fails"));
  }
  return ok;
}

void focl_suite(CriterionResult& r, Rng& rng) {
  constexpr int kInstances = 200;
  const auto t0 = Clock::now();
  FoclCheck check{rng, r.notes};
  bool ok = known_counterexamples(r.notes);
  int binder_instances = 0;

  for (int i = 0; i < kInstances && ok; ++i) {
    const bool wide = i % 4 == 3;
    const Model b = random_model(rng, wide ? kSampledShape : kExhaustiveShape);

    // Closed formulas.
    const Formula f = random_focl(rng, b, {}, 2);
    const Formula f1 = random_focl(rng, b, {}, 2), f2 = random_focl(rng, b, {}, 2);
    ok = ok && check.relation("closure is idempotent", b, pcl_closure(pcl_closure(f)),
                              pcl_closure(f), false);
    ok = ok && check.relation("a formula implies its closure", b, f, pcl_closure(f), true);
    ok = ok && check.relation("dual closure implies the formula", b,
                              pcl_not(pcl_closure(pcl_not(f))), f, true);
    ok = ok && check.relation("closure of a union", b, pcl_closure(pcl_union(f1, f2)),
                              pcl_union(pcl_closure(f1), pcl_closure(f2)), false);
    ok = ok && check.relation("closure of a coalescing", b, pcl_closure(pcl_coalesce(f1, f2)),
                              pcl_coalesce(pcl_closure(f1), pcl_closure(f2)), false);

    // Formulas with a free variable under a binder whose match set is nonempty.
    Binder bd;
    if (!random_binder(rng, b, "c", bd)) continue;
    ++binder_instances;
    const std::vector<ScopeVar> scope = {{"c", bd.type}};
    const Formula g = random_focl(rng, b, scope, 2);
    const Formula g1 = random_focl(rng, b, scope, 2), g2 = random_focl(rng, b, scope, 2);
    ok = ok && check.relation("closure commutes with exists", b,
                              pcl_closure(focl_exists(bd, g)), focl_exists(bd, pcl_closure(g)),
                              false);
    ok = ok && check.relation("closure commutes with sum", b, pcl_closure(focl_sum(bd, g)),
                              focl_sum(bd, pcl_closure(g)), false);
    ok = ok && check.relation("closed sum is a universal closure", b,
                              focl_sum(bd, pcl_closure(g)), focl_forall(bd, pcl_closure(g)),
                              false);
    ok = ok && check.relation("exists distributes over union", b,
                              focl_exists(bd, pcl_union(g1, g2)),
                              pcl_union(focl_exists(bd, g1), focl_exists(bd, g2)), false);
    ok = ok && check.relation("forall distributes over intersection", b,
                              focl_forall(bd, pcl_meet(g1, g2)),
                              pcl_meet(focl_forall(bd, g1), focl_forall(bd, g2)), false);
    ok = ok && check.relation("sum distributes over coalescing", b,
                              focl_sum(bd, pcl_coalesce(g1, g2)),
                              pcl_coalesce(focl_sum(bd, g1), focl_sum(bd, g2)), false);
    ok = ok && check.relation("closed sums meet as a universal closure", b,
                              pcl_meet(pcl_closure(focl_sum(bd, g1)), pcl_closure(focl_sum(bd, g2))),
                              focl_forall(bd, pcl_closure(pcl_coalesce(g1, g2))), false);
    ok = ok && check.relation("universal coalescing implies coalesced sums", b,
                              focl_forall(bd, pcl_coalesce(g1, g2)),
                              pcl_coalesce(focl_sum(bd, g1), focl_sum(bd, g2)), true);
    ok = ok && check.relation("sum of an intersection implies intersected sums", b,
                              focl_sum(bd, pcl_meet(g1, g2)),
                              pcl_meet(focl_sum(bd, g1), focl_sum(bd, g2)), true);

    // Weighted proposition, cycling through the semirings. Natural numbers
    // overflow 64 bits on nested closures over the wide models, so they get
    // a small model of their own.
    const SemiringId k = kAllSemirings[static_cast<std::size_t>(i) % kAllSemirings.size()];
    Model wb = b;
    Binder wbd = bd;
    if (k == SemiringId::natural && wide) {
      do {
        wb = random_model(rng, kExhaustiveShape);
      } while (!random_binder(rng, wb, "c", wbd));
    }
    const std::vector<ScopeVar> wscope = {{"c", wbd.type}};
    const WFormula z = random_wfocl(rng, wb, wscope, k, 2);
    const WFormula z1 = random_wfocl(rng, wb, wscope, k, 2);
    const WFormula z2 = random_wfocl(rng, wb, wscope, k, 2);
    ok = ok && check.weighted("closure commutes with the sum quantifier", wb,
                              w_closure(w_oplus_q(wbd, z)), w_oplus_q(wbd, w_closure(z)), k);
    ok = ok && check.weighted("sum quantifier distributes over sum", wb,
                              w_oplus_q(wbd, w_plus(z1, z2)),
                              w_plus(w_oplus_q(wbd, z1), w_oplus_q(wbd, z2)), k);
    ok = ok && check.weighted("product quantifier distributes over product", wb,
                              w_otimes_q(wbd, w_times(z1, z2)),
                              w_times(w_otimes_q(wbd, z1), w_otimes_q(wbd, z2)), k);
    ok = ok && check.weighted("coalescing quantifier distributes over coalescing", wb,
                              w_ouplus_q(wbd, w_coalesce(z1, z2)),
                              w_coalesce(w_ouplus_q(wbd, z1), w_ouplus_q(wbd, z2)), k);
  }
  r.seconds = since(t0);
  r.correct = ok;
  r.notes.push_back(std::to_string(kInstances) + " models, " + std::to_string(binder_instances) +
                    " with quantifier laws");
  r.notes.push_back(std::to_string(check.weighted_checks) +
                    " weighted comparisons, " + std::to_string(check.overflow_skips) +
                    " skipped for natural-number overflow");
}

// ---------------------------------------------------------------------------
// 7. Publish/Subscribe
// ---------------------------------------------------------------------------

void pubsub(CriterionResult& r, Rng& rng) {
  const auto t0 = Clock::now();
  const SemiringId k = SemiringId::viterbi;
  std::uniform_real_distribution<double> d(0, 1);
  bool ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    WeightTable w(3, 2, k);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) w.set(i, j, Value::real(k, d(rng)));
    }
    const WfoclInstance inst = pubsub_instance(w);
    const Value got = wfocl_eval(inst.formula, inst.model, inst.config, k);
    const Value want = otimes(w.at(0, 0), w.at(2, 1));
    if (!approx_equal(got, want, kTol)) {
      ok = false;
      r.notes.push_back("trial " + std::to_string(trial) + ": " + to_exact_string(got) +
                        ", expected " + to_exact_string(want));
    }
  }
  r.seconds = since(t0);
  r.correct = ok;
}

// ---------------------------------------------------------------------------
// 8. Strategy agreement
// ---------------------------------------------------------------------------

void strategies(CriterionResult& r, Rng& rng) {
  const auto t0 = Clock::now();
  const PortUniverse& u = three_ports();
  bool ok = true;
  for (int i = 0; i < 500 && ok; ++i) {
    const SemiringId k = kAllSemirings[static_cast<std::size_t>(i) % kAllSemirings.size()];
    const WFormula z = random_wpcl(rng, u, k, 3);
    const Configuration g = random_configuration(rng, u, 0.5);
    const Value a = wpcl_eval(z, g, u, k);
    const Value b = wpcl_eval_sparse(z, g, u, k);
    if (!approx_equal(a, b, kTol)) {
      ok = false;
      r.notes.push_back(mismatch("direct vs sparse", k, to_string(z), to_string(z),
                                 configuration_to_string(g, u), a, b));
    }
  }
  r.seconds = since(t0);
  r.correct = ok;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> all = {
      {1, "counterexample", "product does not distribute over coalescing (108 vs 648)"},
      {2, "tsp", "TSP formula matches brute force"},
      {3, "wpcl-laws", "weighted configuration laws"},
      {4, "pcl-laws", "unweighted configuration laws"},
      {5, "fnf", "full normal form"},
      {6, "focl", "first-order laws and counterexamples"},
      {7, "pubsub", "Publish/Subscribe priority"},
      {8, "strategies", "direct and sparse evaluation agree"},
  };
  return all;
}

DistanceMatrix pinned_tsp_fixture(bool perturbed) {
  DistanceMatrix d(4);
  d.set(0, 1, perturbed ? 2 : 1);
  d.set(0, 2, 9);
  d.set(0, 3, 4);
  d.set(1, 2, 2);
  d.set(1, 3, 9);
  d.set(2, 3, 3);
  return d;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  static const std::map<int, double> limits = {
      {1, kLimitCounterexample}, {2, kLimitTsp},  {3, kLimitWeightedLaws}, {4, kLimitPclLaws},
      {5, kLimitFnf},            {6, kLimitFocl}, {7, kLimitPubSub},       {8, kLimitStrategies}};
  std::vector<CriterionResult> out;
  for (const auto& info : acceptance_criteria()) {
    if (!opts.filter.empty() && std::string(info.tag).find(opts.filter) == std::string::npos) {
      continue;
    }
    CriterionResult r;
    r.id = info.id;
    r.tag = info.tag;
    r.title = info.title;
    r.limit_seconds = limits.at(info.id);
    // Each criterion has its own stream, so filtering does not shift draws.
    Rng rng(opts.seed + static_cast<std::uint64_t>(info.id));
    const auto t0 = Clock::now();
    try {
      switch (info.id) {
        case 1: counterexample(r); break;
        case 2: tsp(r, rng, opts.perturb_fixture); break;
        case 3: weighted_law_suite(r, rng); break;
        case 4: boolean_law_suite(r, rng); break;
        case 5: fnf_suite(r, rng); break;
        case 6: focl_suite(r, rng); break;
        case 7: pubsub(r, rng); break;
        case 8: strategies(r, rng); break;
      }
    } catch (const std::exception& e) {
      r.correct = false;
      r.seconds = since(t0);
      r.notes.push_back(std::string("error: ") + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char timing[96];
  std::snprintf(timing, sizeof timing, "(%.3f s, limit %g s)", r.seconds, r.limit_seconds);
  std::string line = std::string(r.passed() ? "PASS" : "FAIL") + "  " + std::to_string(r.id) +
                     " " + r.tag + "  " + r.title + "  " + timing;
  if (r.correct && !r.passed()) line += "  too slow";
  return line;
}

}  // namespace wcl::checks
