#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace wcl {

enum class SemiringId : std::uint8_t { natural, boolean, minplus, maxplus, viterbi, fuzzy };

inline constexpr std::array<SemiringId, 6> kAllSemirings = {
    SemiringId::natural, SemiringId::boolean, SemiringId::minplus,
    SemiringId::maxplus, SemiringId::viterbi, SemiringId::fuzzy};

std::string_view semiring_name(SemiringId id);
// Accepts the short names printed by semiring_name ("nat", "bool", ...).
SemiringId parse_semiring_id(std::string_view name);
bool is_idempotent(SemiringId id);

// A tagged element of one of the six semirings. Natural numbers and booleans
// are exact; the others hold a double, possibly infinite.
class Value {
 public:
  Value() = default;

  static Value zero(SemiringId id);
  static Value one(SemiringId id);
  static Value natural(std::uint64_t n);
  static Value boolean(bool b);
  // Range-checked; throws UsageError outside the carrier.
  static Value real(SemiringId id, double x);

  SemiringId semiring() const { return id_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_exact() const { return id_ == SemiringId::natural || id_ == SemiringId::boolean; }
  std::uint64_t exact() const { return n_; }
  double real() const { return r_; }

  friend bool operator==(const Value& a, const Value& b);

 private:
  SemiringId id_ = SemiringId::natural;
  std::uint64_t n_ = 0;
  double r_ = 0.0;
};

// Both operands must come from the same semiring (UsageError otherwise).
// Natural-number overflow throws std::overflow_error.
Value oplus(const Value& a, const Value& b);
Value otimes(const Value& a, const Value& b);

Value fold_sum(SemiringId id, std::span<const Value> xs);
Value fold_product(SemiringId id, std::span<const Value> xs);

inline constexpr double kDefaultTolerance = 1e-9;

// Exact for nat/bool. Reals compare within tol; an infinity equals only itself.
bool approx_equal(const Value& a, const Value& b, double tol = kDefaultTolerance);

// Integers bare, reals with up to 9 significant digits, inf / -inf.
std::string to_string(const Value& v);
// Shortest text that parses back to the same double.
std::string to_exact_string(const Value& v);

// Numeric literal for the given semiring. "inf" is accepted for minplus and
// "-inf" for maxplus, since those are the zero elements.
Value parse_value(SemiringId id, std::string_view text);

}  // namespace wcl
