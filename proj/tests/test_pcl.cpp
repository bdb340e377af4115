#include <doctest.h>

#include <set>
#include <stdexcept>
#include <utility>

#include "wcl/checks/generators.hpp"
#include "wcl/checks/reference.hpp"
#include "wcl/errors.hpp"
#include "wcl/parser.hpp"
#include "wcl/pcl.hpp"

using namespace wcl;

namespace {

const PortUniverse kPQ = PortUniverse::parse("p,q");

Formula atom(const char* name) { return pcl_interaction(pil_atom({"", name})); }
WFormula nat(std::uint64_t n) { return w_const(Value::natural(n)); }
Configuration cfg(const char* text, const PortUniverse& u = kPQ) {
  return parse_configuration(text, u);
}

// Ordered pairs of nonempty subsets of an n-set whose union is the whole set.
std::size_t count_covers(std::size_t n) {
  const unsigned full = (1u << n) - 1;
  std::size_t c = 0;
  for (unsigned a = 1; a <= full; ++a)
    for (unsigned b = 1; b <= full; ++b)
      if ((a | b) == full) ++c;
  return c;
}

}  // namespace

TEST_CASE("interaction formulas") {
  const Pil p = pil_atom({"", "p"}), q = pil_atom({"", "q"});
  CHECK(pil_satisfies(0b01, p, kPQ));
  CHECK_FALSE(pil_satisfies(0b10, p, kPQ));
  CHECK(pil_satisfies(0b11, pil_and(p, q), kPQ));
  CHECK(pil_satisfies(0b10, pil_not(p), kPQ));
  CHECK_FALSE(pil_satisfies(0b11, pil_atom({"", "r"}), kPQ));
  CHECK(pil_not(pil_not(p)) == p);
  for (PortMask a : enumerate_interactions(kPQ)) {
    for (PortMask b : enumerate_interactions(kPQ)) {
      CHECK(pil_satisfies(b, characteristic_monomial(a, kPQ), kPQ) == (a == b));
    }
  }
}

TEST_CASE("decompositions: 3^n - 2 ordered covers") {
  const PortUniverse u = PortUniverse::parse("p,q,r");
  const auto all = enumerate_interactions(u);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Configuration g(std::vector<PortMask>(all.begin(), all.begin() + n));
    const auto ds = decompositions2(g);
    CHECK(ds.size() == count_covers(n));
    CHECK(decomposition_count(n) == count_covers(n));
    std::set<std::pair<ConfigKey, ConfigKey>> seen;
    for (const auto& [a, b] : ds) seen.insert({config_key(a), config_key(b)});
    CHECK(seen.size() == ds.size());
  }
  CHECK(decomposition_count(1) == 1);
  CHECK(decomposition_count(2) == 7);
  CHECK(decomposition_count(3) == 25);
}

TEST_CASE("Boolean semantics on small configurations") {
  CHECK(pcl_satisfies(cfg("{{p}}"), atom("p"), kPQ));
  CHECK_FALSE(pcl_satisfies(cfg("{{p}, {q}}"), atom("p"), kPQ));
  CHECK(pcl_satisfies(cfg("{{p}, {q}}"), pcl_coalesce(atom("p"), atom("q")), kPQ));
  CHECK(pcl_satisfies(cfg("{{p}, {q}}"), pcl_union(atom("p"), pcl_true()), kPQ));
  CHECK(pcl_satisfies(cfg("{{p}, {q}}"), pcl_closure(atom("p")), kPQ));
  CHECK_FALSE(pcl_satisfies(cfg("{{q}}"), pcl_closure(atom("p")), kPQ));
  CHECK_FALSE(pcl_satisfies(cfg("{{q}}"), pcl_false(), kPQ));
  // a \/ b also accepts a coalescing of both
  CHECK(pcl_satisfies(cfg("{{p}, {q}}"), pcl_disjunction(atom("p"), atom("q")), kPQ));
  CHECK_FALSE(pcl_satisfies(cfg("{{p}, {q}}"), pcl_union(atom("p"), atom("q")), kPQ));
  CHECK(pcl_implication_failure(atom("p"), pcl_closure(atom("p")), kPQ) == std::nullopt);
  CHECK(pcl_difference(pcl_closure(atom("p")), atom("p"), kPQ).has_value());
}

TEST_CASE("product does not distribute over coalescing: 108 vs 648") {
  const WFormula pq = w_bool(pcl_interaction(pil_and(pil_atom({"", "p"}), pil_atom({"", "q"}))));
  const WFormula k = w_plus(nat(5), pq);
  const WFormula left = w_times(k, w_coalesce(w_times(pq, nat(6)), w_times(pq, nat(3))));
  const WFormula right = w_coalesce(w_times(k, w_times(pq, nat(6))), w_times(k, w_times(pq, nat(3))));
  const Configuration g = cfg("{{p, q}}");
  // (5 + 1) * (6 * 3) against (6 * 6) * (6 * 3): the only cover of a single
  // interaction is the pair (g, g).
  CHECK(wpcl_eval(left, g, kPQ, SemiringId::natural) == Value::natural(6 * 6 * 3));
  CHECK(wpcl_eval(right, g, kPQ, SemiringId::natural) == Value::natural(6 * 6 * 6 * 3));
  CHECK(wpcl_eval(left, g, kPQ, SemiringId::natural) == Value::natural(108));
  CHECK(wpcl_eval(right, g, kPQ, SemiringId::natural) == Value::natural(648));
}

TEST_CASE("coalescing of weighted interactions") {
  const WFormula z = w_coalesce(w_times(nat(2), w_bool(atom("p"))), w_times(nat(3), w_bool(atom("q"))));
  CHECK(wpcl_eval(z, cfg("{{p}, {q}}"), kPQ, SemiringId::natural) == Value::natural(6));
  CHECK(wpcl_eval(z, cfg("{{p}}"), kPQ, SemiringId::natural) == Value::natural(0));
  // An interaction formula holds when every interaction satisfies it, so
  // {p, q} may go to either side or both: 3 covers of weight 6.
  CHECK(wpcl_eval(z, cfg("{{p}, {q}, {p, q}}"), kPQ, SemiringId::natural) == Value::natural(18));
}

TEST_CASE("closure sums over nonempty sub-configurations") {
  // close(c) at gamma is c * (2^|gamma| - 1); iterating sums the previous
  // level over sub-configurations.
  const auto closure_of_const = [](int depth, std::size_t n) {
    const std::uint64_t binom[4][4] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}};
    std::uint64_t level[4] = {2, 2, 2, 2};
    for (int d = 0; d < depth; ++d) {
      std::uint64_t next[4] = {0, 0, 0, 0};
      for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t j = 1; j <= m; ++j) next[m] += binom[m][j] * level[j];
      for (int i = 0; i < 4; ++i) level[i] = next[i];
    }
    return level[n];
  };
  const Configuration g = cfg("{{p}, {p, q}}");
  WFormula z = nat(2);
  for (int depth = 1; depth <= 3; ++depth) {
    z = w_closure(z);
    CHECK(wpcl_eval(z, g, kPQ, SemiringId::natural) == Value::natural(closure_of_const(depth, 2)));
  }
  CHECK(closure_of_const(2, 2) == 10);
  CHECK(closure_of_const(3, 2) == 14);
  // Idempotent semirings collapse the iteration.
  const WFormula half = w_const(Value::real(SemiringId::viterbi, 0.5));
  CHECK(approx_equal(wpcl_eval(w_closure(w_closure(half)), g, kPQ, SemiringId::viterbi),
                     wpcl_eval(w_closure(half), g, kPQ, SemiringId::viterbi)));
}

TEST_CASE("frozen natural-number counterexamples to idempotent-only laws") {
  const Configuration g = cfg("{{p}, {p, q}}");
  const WFormula c2 = nat(2);
  const EquivResult r =
      wpcl_equiv(w_closure(w_closure(c2)), w_closure(c2), kPQ, SemiringId::natural);
  CHECK_FALSE(r.equivalent);
  CHECK(wpcl_eval(w_closure(w_closure(w_closure(c2))), g, kPQ, SemiringId::natural) ==
        Value::natural(14));
  CHECK(wpcl_eval(w_closure(w_closure(c2)), g, kPQ, SemiringId::natural) == Value::natural(10));

  const WFormula a = w_plus(nat(3), w_bool(atom("p")));
  const WFormula b = w_plus(w_bool(pcl_interaction(pil_and(pil_not(pil_atom({"", "q"})),
                                                            pil_not(pil_atom({"", "p"}))))),
                            w_bool(atom("q")));
  const Value joint = wpcl_eval(w_closure(w_coalesce(a, b)), g, kPQ, SemiringId::natural);
  const Value split =
      wpcl_eval(w_coalesce(w_closure(a), w_closure(b)), g, kPQ, SemiringId::natural);
  CHECK(joint == Value::natural(12));
  CHECK(split == Value::natural(36));
}

TEST_CASE("strategies and the reference evaluator agree") {
  checks::Rng rng(2024);
  const PortUniverse u3 = PortUniverse::parse("p,q,r");
  for (SemiringId k : kAllSemirings) {
    for (int i = 0; i < 60; ++i) {
      const PortUniverse& u = i % 2 ? u3 : kPQ;
      const WFormula z = checks::random_wpcl(rng, u, k, 3);
      const Configuration g = checks::random_small_configuration(rng, u, 4);
      Value direct, sparse;
      try {
        direct = wpcl_evaluate(z, g, u, k, {.strategy = Strategy::Direct});
        sparse = wpcl_evaluate(z, g, u, k, {.strategy = Strategy::Sparse});
      } catch (const std::overflow_error&) {
        continue;
      }
      CHECK(approx_equal(direct, sparse));
      CHECK(approx_equal(direct, checks::reference_eval(nullptr, u, g, z, k)));
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Formula f = checks::random_pcl(rng, kPQ, 3);
    const Configuration g = checks::random_configuration(rng, kPQ, 0.5);
    CHECK(pcl_satisfies(g, f, kPQ, {.strategy = Strategy::Direct}) ==
          pcl_satisfies(g, f, kPQ, {.strategy = Strategy::Sparse}));
    CHECK(pcl_satisfies(g, f, kPQ) == checks::reference_satisfies(nullptr, kPQ, g, f));
  }
}

TEST_CASE("caps and series") {
  const WFormula z = w_closure(nat(1));
  const PortUniverse u = PortUniverse::parse("a,b,c,d");
  const auto all = enumerate_interactions(u);
  const Configuration big(all);
  CHECK_THROWS_AS(wpcl_eval(z, big, u, SemiringId::boolean, {.strategy = Strategy::Direct}),
                  CapExceeded);

  const Polynomial s = wpcl_series(w_bool(atom("p")), kPQ, SemiringId::natural);
  CHECK(s.entries().size() == 3);  // {{p}}, {{p, q}} and both
  CHECK(s.at(cfg("{{p}}")) == Value::natural(1));
  CHECK(s.at(cfg("{{q}}")) == Value::natural(0));
}
