#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "wcl/checks/generators.hpp"
#include "wcl/errors.hpp"
#include "wcl/semiring.hpp"

using namespace wcl;

namespace {

std::vector<Value> samples(SemiringId k) {
  checks::Rng rng(17 + static_cast<int>(k));
  std::vector<Value> xs{Value::zero(k), Value::one(k)};
  for (int i = 0; i < 10; ++i) xs.push_back(checks::random_value(rng, k));
  return xs;
}

}  // namespace

TEST_CASE("commutative semiring axioms hold on sampled elements") {
  for (SemiringId k : kAllSemirings) {
    CAPTURE(semiring_name(k));
    const auto xs = samples(k);
    const Value zero = Value::zero(k), one = Value::one(k);
    for (const Value& a : xs) {
      CHECK(approx_equal(oplus(a, zero), a));
      CHECK(approx_equal(otimes(a, one), a));
      CHECK(otimes(a, zero).is_zero());
      for (const Value& b : xs) {
        CHECK(approx_equal(oplus(a, b), oplus(b, a)));
        CHECK(approx_equal(otimes(a, b), otimes(b, a)));
        for (const Value& c : xs) {
          CHECK(approx_equal(oplus(oplus(a, b), c), oplus(a, oplus(b, c))));
          CHECK(approx_equal(otimes(otimes(a, b), c), otimes(a, otimes(b, c))));
          CHECK(approx_equal(otimes(a, oplus(b, c)), oplus(otimes(a, b), otimes(a, c))));
        }
      }
    }
  }
}

TEST_CASE("idempotence: only the naturals fail it") {
  for (SemiringId k : kAllSemirings) {
    bool idem = true;
    for (const Value& a : samples(k)) idem = idem && approx_equal(oplus(a, a), a);
    CHECK(idem == is_idempotent(k));
  }
  CHECK_FALSE(is_idempotent(SemiringId::natural));
}

TEST_CASE("operations agree with the plain arithmetic they model") {
  CHECK(oplus(Value::natural(4), Value::natural(5)) == Value::natural(9));
  CHECK(otimes(Value::natural(4), Value::natural(5)) == Value::natural(20));
  CHECK(oplus(Value::boolean(false), Value::boolean(true)) == Value::boolean(true));
  CHECK(otimes(Value::boolean(false), Value::boolean(true)) == Value::boolean(false));

  const auto mp = [](double x) { return Value::real(SemiringId::minplus, x); };
  CHECK(oplus(mp(3), mp(7)).real() == 3);
  CHECK(otimes(mp(3), mp(7)).real() == 10);
  CHECK(std::isinf(Value::zero(SemiringId::minplus).real()));
  CHECK(Value::one(SemiringId::minplus).real() == 0);

  const auto xp = [](double x) { return Value::real(SemiringId::maxplus, x); };
  CHECK(oplus(xp(3), xp(7)).real() == 7);
  CHECK(otimes(xp(3), xp(2)).real() == 5);
  CHECK(Value::zero(SemiringId::maxplus).real() == -std::numeric_limits<double>::infinity());

  const auto vt = [](double x) { return Value::real(SemiringId::viterbi, x); };
  CHECK(oplus(vt(0.25), vt(0.5)).real() == 0.5);
  CHECK(otimes(vt(0.25), vt(0.5)).real() == 0.125);

  const auto fz = [](double x) { return Value::real(SemiringId::fuzzy, x); };
  CHECK(oplus(fz(0.25), fz(0.5)).real() == 0.5);
  CHECK(otimes(fz(0.25), fz(0.5)).real() == 0.25);
}

TEST_CASE("carrier ranges and mixing are rejected") {
  CHECK_THROWS_AS(Value::real(SemiringId::viterbi, 1.5), UsageError);
  CHECK_THROWS_AS(Value::real(SemiringId::fuzzy, -0.1), UsageError);
  CHECK_THROWS_AS(Value::real(SemiringId::minplus, -std::numeric_limits<double>::infinity()),
                  UsageError);
  CHECK_THROWS_AS(oplus(Value::natural(1), Value::boolean(true)), UsageError);
  CHECK_THROWS_AS(otimes(Value::natural(1ull << 40), Value::natural(1ull << 40)),
                  std::overflow_error);
}

TEST_CASE("folds of empty lists give the identities") {
  for (SemiringId k : kAllSemirings) {
    CHECK(fold_sum(k, {}).is_zero());
    CHECK(fold_product(k, {}).is_one());
  }
  const std::vector<Value> xs{Value::natural(2), Value::natural(3), Value::natural(4)};
  CHECK(fold_sum(SemiringId::natural, xs) == Value::natural(9));
  CHECK(fold_product(SemiringId::natural, xs) == Value::natural(24));
}

TEST_CASE("printing and parsing") {
  CHECK(to_string(Value::natural(42)) == "42");
  CHECK(to_string(Value::boolean(true)) == "1");
  CHECK(to_string(Value::zero(SemiringId::minplus)) == "inf");
  CHECK(to_string(Value::zero(SemiringId::maxplus)) == "-inf");
  CHECK(to_string(Value::real(SemiringId::viterbi, 0.1)) == "0.1");
  CHECK(to_string(Value::real(SemiringId::minplus, 1.0 / 3.0)) == "0.333333333");

  CHECK(parse_value(SemiringId::minplus, "inf").is_zero());
  CHECK(parse_value(SemiringId::maxplus, "-inf").is_zero());
  CHECK_THROWS_AS(parse_value(SemiringId::maxplus, "inf"), UsageError);
  CHECK_THROWS_AS(parse_value(SemiringId::minplus, "-inf"), UsageError);
  CHECK_THROWS_AS(parse_value(SemiringId::natural, "-1"), UsageError);
  CHECK_THROWS_AS(parse_value(SemiringId::natural, "2.5"), UsageError);
  CHECK_THROWS_AS(parse_value(SemiringId::viterbi, "abc"), UsageError);

  checks::Rng rng(3);
  for (SemiringId k : kAllSemirings) {
    for (int i = 0; i < 50; ++i) {
      const Value v = checks::random_value(rng, k);
      CHECK(parse_value(k, to_exact_string(v)) == v);
    }
    CHECK(parse_semiring_id(semiring_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_semiring_id("tropical"), UsageError);
}

TEST_CASE("approximate equality") {
  const auto vt = [](double x) { return Value::real(SemiringId::viterbi, x); };
  CHECK(approx_equal(vt(0.3), vt(0.3 + 1e-12)));
  CHECK_FALSE(approx_equal(vt(0.3), vt(0.3 + 1e-6)));
  CHECK(approx_equal(Value::zero(SemiringId::minplus), Value::zero(SemiringId::minplus)));
  CHECK_FALSE(approx_equal(Value::zero(SemiringId::minplus),
                           Value::real(SemiringId::minplus, 1e300)));
}
