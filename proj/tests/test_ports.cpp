#include <doctest.h>

#include <set>
#include <string>

#include "wcl/errors.hpp"
#include "wcl/ports.hpp"

using namespace wcl;

TEST_CASE("universes sort ports into canonical order") {
  const PortUniverse u = PortUniverse::parse("q, b.x, p, a.y");
  REQUIRE(u.size() == 4);
  CHECK(u.at(0).qualified() == "p");
  CHECK(u.at(1).qualified() == "q");
  CHECK(u.at(2).qualified() == "a.y");
  CHECK(u.at(3).qualified() == "b.x");
  CHECK(u.index_of(parse_port("b.x")) == 3u);
  CHECK_FALSE(u.index_of(parse_port("c.x")).has_value());
  CHECK(u.full_mask() == 0xFu);
  CHECK_THROWS_AS(PortUniverse::parse("p,p"), UsageError);
}

TEST_CASE("interaction and configuration literals round-trip") {
  const PortUniverse u = PortUniverse::parse("p,q,r");
  const PortMask a = parse_interaction("{r, p}", u);
  CHECK(a == 0b101u);
  CHECK(interaction_to_string(a, u) == "{p, r}");

  const Configuration g = parse_configuration("{{q}, {p, r}, {p}, {q}}", u);
  CHECK(g.size() == 3);
  const std::string text = configuration_to_string(g, u);
  CHECK(parse_configuration(text, u) == g);
  CHECK(text == "{{p}, {p, r}, {q}}");

  CHECK_THROWS_AS(parse_configuration("{{s}}", u), UsageError);
  CHECK_THROWS_AS(parse_configuration("{}", u), UsageError);
  CHECK_THROWS_AS(parse_configuration("{{}}", u), UsageError);
  CHECK_THROWS_AS(Configuration(std::vector<PortMask>{}), UsageError);
}

TEST_CASE("enumeration sizes match 2^n - 1 and 2^(2^n - 1) - 1") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::string list;
    for (std::size_t i = 0; i < n; ++i) list += (i ? "," : "") + std::string(1, char('a' + i));
    const PortUniverse u = PortUniverse::parse(list);
    const std::size_t interactions = (std::size_t{1} << n) - 1;
    CHECK(enumerate_interactions(u).size() == interactions);
    const auto cs = enumerate_configurations(u);
    CHECK(cs.size() == (std::size_t{1} << interactions) - 1);
    std::set<ConfigKey> keys;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      keys.insert(config_key(cs[i]));
      CHECK(configuration_from_key(config_key(cs[i])) == cs[i]);
      if (i > 0) CHECK(configuration_less(cs[i - 1], cs[i]));
    }
    CHECK(keys.size() == cs.size());
  }
  CHECK_THROWS_AS(enumerate_configurations(PortUniverse::parse("a,b,c,d,e")), CapExceeded);
}

TEST_CASE("canonical interaction order is lexicographic on port sequences") {
  // Over p < q < r: {p} < {p,q} < {p,q,r} < {p,r} < {q} < {q,r} < {r}
  const PortUniverse u = PortUniverse::parse("p,q,r");
  const auto is = enumerate_interactions(u);
  std::vector<std::string> names;
  for (PortMask a : is) names.push_back(interaction_to_string(a, u));
  CHECK(names == std::vector<std::string>{"{p}", "{p, q}", "{p, q, r}", "{p, r}", "{q}",
                                          "{q, r}", "{r}"});
}
