#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "wcl/checks/generators.hpp"
#include "wcl/errors.hpp"
#include "wcl/pcl.hpp"
#include "wcl/styles.hpp"

using namespace wcl;

namespace {

using Tour = std::vector<std::size_t>;

// Every permutation fixing city 0, with a tour and its reversal identified.
std::set<Tour> tours_by_permutation(std::size_t n) {
  Tour rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::set<Tour> out;
  do {
    Tour t{0};
    t.insert(t.end(), rest.begin(), rest.end());
    Tour r{0};
    r.insert(r.end(), rest.rbegin(), rest.rend());
    out.insert(std::min(t, r));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

double shortest_round_trip(const DistanceMatrix& d) {
  double best = std::numeric_limits<double>::infinity();
  for (const Tour& t : tours_by_permutation(d.size())) {
    double len = 0;
    for (std::size_t i = 0; i < t.size(); ++i) len += d.at(t[i], t[(i + 1) % t.size()]);
    best = std::min(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("cyclic tours: (n-1)!/2 of them") {
  CHECK(cyclic_tours(4).size() == 3);
  CHECK(cyclic_tours(5).size() == 12);
  CHECK(cyclic_tours(6).size() == 60);
  for (std::size_t n = 3; n <= 6; ++n) {
    std::set<Tour> got;
    for (const Tour& t : cyclic_tours(n)) {
      CHECK(t.front() == 0);
      CHECK(t[1] < t.back());
      Tour r{0};
      r.insert(r.end(), t.rbegin(), t.rend() - 1);
      got.insert(std::min(t, r));
    }
    CHECK(got == tours_by_permutation(n));
  }
}

TEST_CASE("shortest round trip on small matrices") {
  // A square of side 1 with diagonals 5: the perimeter wins.
  DistanceMatrix sq(4);
  sq.set(0, 1, 1); sq.set(1, 2, 1); sq.set(2, 3, 1); sq.set(3, 0, 1);
  sq.set(0, 2, 5); sq.set(1, 3, 5);
  const WpclInstance inst = tsp_instance(sq);
  const Value v = wpcl_evaluate(inst.formula, inst.config, inst.ports, SemiringId::minplus);
  CHECK(v.real() == doctest::Approx(4.0));
  CHECK(tsp_brute_force(sq) == doctest::Approx(4.0));

  checks::Rng rng(8);
  std::uniform_int_distribution<int> w(1, 9);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 3 + i % 3;
    DistanceMatrix d(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) d.set(a, b, w(rng));
    const WpclInstance t = tsp_instance(d);
    const double want = shortest_round_trip(d);
    CHECK(tsp_brute_force(d) == doctest::Approx(want));
    CHECK(wpcl_evaluate(t.formula, t.config, t.ports, SemiringId::minplus).real() ==
          doctest::Approx(want));
  }
}

TEST_CASE("distance matrices are validated") {
  CHECK_THROWS_AS(DistanceMatrix::parse_csv("0,1\n2,0\n"), UsageError);
  CHECK_THROWS_AS(DistanceMatrix::parse_csv("1,1\n1,0\n"), UsageError);
  CHECK_THROWS_AS(DistanceMatrix::parse_csv("0,-1\n-1,0\n"), UsageError);
  CHECK_THROWS_AS(DistanceMatrix::parse_csv("0,3\n3,0\n"), UsageError);
  CHECK(DistanceMatrix::parse_csv("# three cities\n0,3,1\n3,0,2\n1,2,0\n").at(1, 0) == 3);
}

TEST_CASE("master/slave over maxplus picks the best master per slave") {
  checks::Rng rng(31);
  std::uniform_int_distribution<int> w(0, 9);
  for (int i = 0; i < 5; ++i) {
    WeightTable t(2, 2, SemiringId::maxplus);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t m = 0; m < 2; ++m) t.set(s, m, Value::real(SemiringId::maxplus, w(rng)));
    double want = 0;
    for (std::size_t s = 0; s < 2; ++s) want += std::max(t.at(s, 0).real(), t.at(s, 1).real());
    CHECK(master_slave_brute_force(t).real() == doctest::Approx(want));

    const WpclInstance prop = master_slave_wpcl(t);
    CHECK(wpcl_evaluate(prop.formula, prop.config, prop.ports, SemiringId::maxplus).real() ==
          doctest::Approx(want));
    const WfoclInstance fo = master_slave_wfocl(t);
    CHECK(wfocl_eval(fo.formula, fo.model, fo.config, SemiringId::maxplus).real() ==
          doctest::Approx(want));
  }
}

TEST_CASE("publish/subscribe weighs the topic links present in the configuration") {
  WeightTable t = WeightTable::parse_csv("0.4,0.2\n0.5,0.6\n0.3,0.8\n", SemiringId::viterbi);
  // r1 reaches s1 and r3 reaches s2; r2 carries no subscriber link.
  const WfoclInstance inst = pubsub_instance(t);
  const Value v = wfocl_eval(inst.formula, inst.model, inst.config, SemiringId::viterbi);
  CHECK(v.real() == doctest::Approx(0.4 * 0.8));
  CHECK_THROWS_AS(WeightTable::parse_csv("0.9,0.2\n0.5\n", SemiringId::viterbi), UsageError);
}
