#include <doctest.h>

#include <stdexcept>

#include "wcl/checks/generators.hpp"
#include "wcl/errors.hpp"
#include "wcl/normal_form.hpp"
#include "wcl/parser.hpp"
#include "wcl/pcl.hpp"

using namespace wcl;

namespace {

const PortUniverse kPQ = PortUniverse::parse("p,q");

}  // namespace

TEST_CASE("the always-true formula has one unit term per configuration") {
  const FullNormalForm n = fnf_of_pcl(pcl_true(), kPQ, SemiringId::natural);
  CHECK(n.size() == 7);
  for (const auto& t : n.terms()) CHECK(t.coefficient == Value::natural(1));
  CHECK(fnf_well_formed(n));

  const FullNormalForm f = fnf_of_pcl(pcl_false(), kPQ, SemiringId::natural);
  CHECK(f.empty());
  CHECK(fnf_to_formula(f) == w_const(Value::zero(SemiringId::natural)));
}

TEST_CASE("a constant spreads over every configuration") {
  const FullNormalForm n = fnf_of_wpcl(w_const(Value::natural(5)), kPQ, SemiringId::natural);
  CHECK(n.size() == 7);
  for (const Configuration& g : enumerate_configurations(kPQ)) {
    CHECK(fnf_eval(n, g) == Value::natural(5));
  }
}

TEST_CASE("coefficients match a direct evaluation") {
  // 2 (*) {p} (#) 3 (*) {q}: an interaction formula holds when every
  // interaction satisfies it.
  const WFormula z = parse_weighted("(2 (*) {p}) (#) (3 (*) {q})", Dialect::wpcl);
  const FullNormalForm n = fnf_of_wpcl(z, kPQ, SemiringId::natural);
  CHECK(fnf_well_formed(n));
  for (const Configuration& g : enumerate_configurations(kPQ)) {
    CHECK(fnf_eval(n, g) == wpcl_evaluate(z, g, kPQ, SemiringId::natural));
  }
  CHECK(n.coefficient(config_key(parse_configuration("{{p}, {q}}", kPQ))) == Value::natural(6));
  CHECK(n.coefficient(config_key(parse_configuration("{{p, q}}", kPQ))) == Value::natural(6));
  // {p,q} can sit on either side or both
  CHECK(n.coefficient(config_key(parse_configuration("{{p}, {q}, {p, q}}", kPQ))) ==
        Value::natural(18));
  CHECK(n.coefficient(config_key(parse_configuration("{{p}}", kPQ))) == Value::natural(0));
}

TEST_CASE("normal forms round-trip and agree pointwise") {
  checks::Rng rng(99);
  for (int i = 0; i < 120; ++i) {
    const SemiringId k = kAllSemirings[i % kAllSemirings.size()];
    const WFormula z = checks::random_wpcl(rng, kPQ, k, 3);
    FullNormalForm n(kPQ, k);
    try {
      n = fnf_of_wpcl(z, kPQ, k);
    } catch (const std::overflow_error&) {
      continue;
    }
    REQUIRE(fnf_well_formed(n));
    for (const Configuration& g : enumerate_configurations(kPQ)) {
      CHECK(approx_equal(fnf_eval(n, g), wpcl_evaluate(z, g, kPQ, k)));
    }
    const FullNormalForm again = fnf_of_wpcl(fnf_to_formula(n), kPQ, k);
    CHECK(fnf_equiv(n, again));
    CHECK(n.keys() == again.keys());
  }
}

TEST_CASE("text renderings") {
  const WFormula z = parse_weighted("3 (*) {p & !q}", Dialect::wpcl);
  const FullNormalForm n = fnf_of_wpcl(z, kPQ, SemiringId::natural);
  CHECK(fnf_to_tsv(n) == "3\t{{p}}\n");
  CHECK(fnf_to_text(n).find("3 (*)") == 0);
  const WFormula back = parse_weighted(to_string(fnf_to_formula(n)), Dialect::wpcl);
  CHECK(fnf_equiv(fnf_of_wpcl(back, kPQ, SemiringId::natural), n));
}

TEST_CASE("the cap on the universe is enforced") {
  const PortUniverse u5 = PortUniverse::parse("a,b,c,d,e");
  CHECK_THROWS_AS(fnf_of_pcl(pcl_true(), u5, SemiringId::boolean), CapExceeded);
}
