#include <doctest.h>

#include "wcl/checks/generators.hpp"
#include "wcl/checks/reference.hpp"
#include "wcl/errors.hpp"
#include "wcl/focl.hpp"
#include "wcl/parser.hpp"

using namespace wcl;

namespace {

Model parse_model(const char* text) { return Model::parse(text); }

const Model& master_slave_model() {
  static const Model b = parse_model(
      "type M ports m\n"
      "type S ports s\n"
      "component b1 : M\n"
      "component b2 : M\n"
      "component d1 : S\n");
  return b;
}

Formula focl(const char* text) { return parse_boolean(text, Dialect::focl); }

}  // namespace

TEST_CASE("model text") {
  const Model& b = master_slave_model();
  CHECK(b.components().size() == 3);
  CHECK(b.ports() == PortUniverse::parse("b1.m,b2.m,d1.s"));
  CHECK(Model::parse(b.to_text()).ports() == b.ports());
  CHECK_THROWS_AS(parse_model("component x : Missing\n"), UsageError);
  CHECK_THROWS_AS(parse_model("type T ports p\ncomponent x : T\ncomponent x : T\n"), UsageError);
}

TEST_CASE("matching components") {
  const Model& b = master_slave_model();
  CHECK(matching_components(b, {"c", "M", Predicate()}) == std::vector<std::string>{"b1", "b2"});
  CHECK(matching_components(b, {"c2", "M", Predicate::neq("c2", "c1")}, {{"c1", "b1"}}) ==
        std::vector<std::string>{"b2"});
  CHECK(matching_components(b, {"c", kUniversalType, Predicate()}) ==
        std::vector<std::string>{"b1", "b2", "d1"});
  CHECK(matching_components(b, {"c", "S", Predicate::neq("c", "d1")}).empty());
}

TEST_CASE("substitution") {
  const Formula f = focl("{c.s & c1.m}");
  CHECK(substitute(f, "c", "d1") == focl("{d1.s & c1.m}"));
  CHECK(substitute(f, "x", "d1") == f);
  // inner binders keep their own variable
  const Formula g = focl("{c.s} + exists e:M . {e.m & c.s}");
  CHECK(substitute(g, "c", "d1") == focl("{d1.s} + exists e:M . {e.m & d1.s}"));
  CHECK_THROWS_AS(substitute(focl("exists c:M . {c.m}"), "c", "b1"), UsageError);
}

TEST_CASE("grounding conventions for empty match sets") {
  const Model& b = master_slave_model();
  const Configuration g = parse_configuration("{{b1.m}}", b.ports());
  const Binder none{"c", "S", Predicate::neq("c", "d1")};
  CHECK_FALSE(focl_satisfies(b, g, focl_sum(none, pcl_true())));
  CHECK_FALSE(focl_satisfies(b, g, focl_exists(none, pcl_true())));
  CHECK(focl_satisfies(b, g, focl_forall(none, pcl_false())));
  const WFormula two = w_const(Value::natural(2));
  CHECK(wfocl_eval(w_oplus_q(none, two), b, g, SemiringId::natural) == Value::natural(0));
  CHECK(wfocl_eval(w_otimes_q(none, two), b, g, SemiringId::natural) == Value::natural(1));
  CHECK(wfocl_eval(w_ouplus_q(none, two), b, g, SemiringId::natural) == Value::natural(0));
}

TEST_CASE("configurations with ports outside the model are rejected") {
  const Model& b = master_slave_model();
  const PortUniverse wide = PortUniverse::parse("b1.m,b2.m,d1.s,z.x");
  const Configuration g = parse_configuration("{{b1.m}, {z.x}}", wide);
  CHECK_FALSE(focl_satisfies(b, wide, g, pcl_true()));
  CHECK(wfocl_eval(w_const(Value::natural(3)), b, wide, g, SemiringId::natural) ==
        Value::natural(0));
  const Configuration inside = parse_configuration("{{b1.m}}", wide);
  CHECK(focl_satisfies(b, wide, inside, pcl_true()));
}

TEST_CASE("a universal coalescing is weaker than a coalescing of sums") {
  // sum c:T . F1 + sum c:T . F2 does not entail forall c:T . (F1 + F2)
  const Model b = parse_model("type T ports p\ncomponent c1 : T\ncomponent c2 : T\n");
  const Configuration g = parse_configuration("{{c1.p}, {c2.p}}", b.ports());
  const Formula f1 = focl("{c.p} + {c1.p}");
  const Formula f2 = focl("{c1.p}");
  const Binder bt{"c", "T", Predicate()};
  const Formula split = pcl_coalesce(focl_sum(bt, f1), focl_sum(bt, f2));
  const Formula joint = focl_forall(bt, pcl_coalesce(f1, f2));
  CHECK(focl_satisfies(b, g, split));
  CHECK_FALSE(focl_satisfies(b, g, joint));
  CHECK(checks::reference_satisfies(&b, b.ports(), g, split));
  CHECK_FALSE(checks::reference_satisfies(&b, b.ports(), g, joint));
}

TEST_CASE("a sum of meets is stronger than a meet of sums") {
  const Model b = parse_model(
      "type T1 ports p\ntype T2 ports q\n"
      "component b : T1\ncomponent c : T1\ncomponent d : T2\n");
  const Configuration g = parse_configuration("{{b.p, d.q}, {c.p, d.q}}", b.ports());
  const Binder bs{"s", "T1", Predicate()};
  const Formula f1 = focl("{s.p & d.q}");
  const Formula f2 = focl("{c.p} + {s.p & d.q}");
  const Formula joint = focl_sum(bs, pcl_meet(f1, f2));
  const Formula split = pcl_meet(focl_sum(bs, f1), focl_sum(bs, f2));
  CHECK_FALSE(focl_satisfies(b, g, joint));
  CHECK(focl_satisfies(b, g, split));
  CHECK_FALSE(checks::reference_satisfies(&b, b.ports(), g, joint));
  CHECK(checks::reference_satisfies(&b, b.ports(), g, split));
}

TEST_CASE("parsed quantifiers with side conditions") {
  const Model& b = master_slave_model();
  const Configuration g = parse_configuration("{{b1.m, d1.s}, {b2.m, d1.s}}", b.ports());
  CHECK(focl_satisfies(b, g, focl("sum c:M . {c.m & d1.s}")));
  CHECK_FALSE(focl_satisfies(b, g, focl("sum c:M where c != b2 . {c.m & d1.s}")));
  CHECK(focl_satisfies(b, g, focl("forall c:M . exists e:S . ~{c.m & e.s}")));
  const WFormula z = parse_weighted("Ouplus c:M . ({c.m & d1.s} (*) 3)", Dialect::wfocl);
  CHECK(wfocl_eval(z, b, g, SemiringId::natural) == Value::natural(9));
}

TEST_CASE("grounded evaluation agrees with the reference evaluator") {
  checks::Rng rng(5150);
  for (int i = 0; i < 80; ++i) {
    const Model b = checks::random_model(rng);
    const PortUniverse u = b.ports();
    const Formula f = checks::random_focl(rng, b, {}, 3);
    const Configuration g = checks::random_small_configuration(rng, u, 4);
    CHECK(focl_satisfies(b, g, f) == checks::reference_satisfies(&b, u, g, f));
    const SemiringId k = kAllSemirings[1 + i % 5];
    const WFormula z = checks::random_wfocl(rng, b, {}, k, 3);
    CHECK(approx_equal(wfocl_eval(z, b, g, k), checks::reference_eval(&b, u, g, z, k)));
  }
}
