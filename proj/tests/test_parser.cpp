#include <doctest.h>

#include <string>

#include "wcl/checks/generators.hpp"
#include "wcl/errors.hpp"
#include "wcl/parser.hpp"

using namespace wcl;

TEST_CASE("printing then parsing gives back the same formula") {
  checks::Rng rng(77);
  const PortUniverse u = PortUniverse::parse("p,q,r");
  for (int i = 0; i < 1000; ++i) {
    const Pil phi = checks::random_pil(rng, u, 4);
    REQUIRE(parse_pil(to_string(phi)) == phi);
    const Formula f = checks::random_pcl(rng, u, 4);
    REQUIRE(parse_boolean(to_string(f), Dialect::pcl) == f);
  }
  for (SemiringId k : kAllSemirings) {
    const ParseOptions opts{k, {}};
    for (int i = 0; i < 1000; ++i) {
      const WFormula z = checks::random_wpcl(rng, u, k, 4);
      REQUIRE(parse_weighted(to_string(z), Dialect::wpcl, opts) == z);
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const Model b = checks::random_model(rng, {3, 6});
    const Formula f = checks::random_focl(rng, b, {}, 3);
    REQUIRE(parse_boolean(to_string(f), Dialect::focl) == f);
    const SemiringId k = kAllSemirings[i % kAllSemirings.size()];
    const WFormula z = checks::random_wfocl(rng, b, {}, k, 3);
    REQUIRE(parse_weighted(to_string(z), Dialect::wfocl, {k, {}}) == z);
  }
}

TEST_CASE("operators and precedence") {
  CHECK(parse_boolean("{p} + {q} | {r}") ==
        pcl_union(pcl_coalesce(pcl_interaction(pil_atom({"", "p"})),
                               pcl_interaction(pil_atom({"", "q"}))),
                  pcl_interaction(pil_atom({"", "r"}))));
  CHECK(parse_boolean("~{p}") == pcl_closure(pcl_interaction(pil_atom({"", "p"}))));
  CHECK(parse_pil("!p & q | r") ==
        pil_or(pil_and(pil_not(pil_atom({"", "p"})), pil_atom({"", "q"})), pil_atom({"", "r"})));
  const WFormula z = parse_weighted("2 (*) {p} (+) 3", Dialect::wpcl);
  CHECK(z == w_plus(w_times(w_const(Value::natural(2)),
                            w_bool(pcl_interaction(pil_atom({"", "p"})))),
                    w_const(Value::natural(3))));
}

TEST_CASE("named weights") {
  ParseOptions opts{SemiringId::minplus, {{"k12", Value::real(SemiringId::minplus, 4.5)}}};
  const WFormula z = parse_weighted("k12 (*) {p}", Dialect::wpcl, opts);
  CHECK(z == w_times(w_const(Value::real(SemiringId::minplus, 4.5)),
                     w_bool(pcl_interaction(pil_atom({"", "p"})))));
  CHECK_THROWS(parse_weighted("k13 (*) {p}", Dialect::wpcl, opts));
}

TEST_CASE("errors carry a position") {
  try {
    parse_boolean("{p &\n  & q}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_boolean("{p} +"), ParseError);
  CHECK_THROWS_AS(parse_boolean("{p} $ {q}"), ParseError);
  CHECK_THROWS_AS(parse_pil("(p"), ParseError);
}

TEST_CASE("dialects reject constructs they do not have") {
  CHECK_THROWS_AS(parse_boolean("exists c:T . {c.p}", Dialect::pcl), ParseError);
  CHECK_THROWS_AS(parse_boolean("2 (*) {p}", Dialect::pcl), ParseError);
  CHECK_THROWS_AS(parse_weighted("Oplus c:T . 2", Dialect::wpcl), ParseError);
  CHECK_THROWS_AS(parse_boolean("Oplus c:T . {c.p}", Dialect::focl), ParseError);
  CHECK_THROWS_AS(parse_boolean("exists c:T . exists c:T . {c.p}", Dialect::focl), ParseError);
  CHECK_NOTHROW(parse_weighted("{p} + {q}", Dialect::wpcl));
}

TEST_CASE("dialect names") {
  CHECK(dialect_of_path("dir/x.wfocl") == Dialect::wfocl);
  CHECK(dialect_of_path("x.pcl") == Dialect::pcl);
  CHECK_THROWS_AS(dialect_of_path("x.txt"), UsageError);
  CHECK_THROWS_AS(dialect_of_path("noext"), UsageError);
  CHECK(is_weighted(Dialect::wpcl));
  CHECK_FALSE(is_weighted(Dialect::focl));
}
