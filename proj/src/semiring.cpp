#include "wcl/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wcl/errors.hpp"

namespace wcl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same(const Value& a, const Value& b) {
  if (a.semiring() != b.semiring()) {
    throw UsageError("semiring mismatch: " + std::string(semiring_name(a.semiring())) +
                     " vs " + std::string(semiring_name(b.semiring())));
  }
}

}  // namespace

std::string_view semiring_name(SemiringId id) {
  switch (id) {
    case SemiringId::natural: return "nat";
    case SemiringId::boolean: return "bool";
    case SemiringId::minplus: return "minplus";
    case SemiringId::maxplus: return "maxplus";
    case SemiringId::viterbi: return "viterbi";
    case SemiringId::fuzzy: return "fuzzy";
  }
  return "?";
}

SemiringId parse_semiring_id(std::string_view name) {
  for (SemiringId id : kAllSemirings) {
    if (semiring_name(id) == name) return id;
  }
  if (name == "natural") return SemiringId::natural;
  if (name == "boolean") return SemiringId::boolean;
  throw UsageError("unknown semiring '" + std::string(name) +
                   "' (expected nat, bool, minplus, maxplus, viterbi or fuzzy)");
}

bool is_idempotent(SemiringId id) { return id != SemiringId::natural; }

Value Value::zero(SemiringId id) {
  Value v;
  v.id_ = id;
  if (id == SemiringId::minplus) v.r_ = kInf;
  if (id == SemiringId::maxplus) v.r_ = -kInf;
  return v;
}

Value Value::one(SemiringId id) {
  Value v;
  v.id_ = id;
  switch (id) {
    case SemiringId::natural:
    case SemiringId::boolean: v.n_ = 1; break;
    case SemiringId::minplus:
    case SemiringId::maxplus: v.r_ = 0.0; break;
    case SemiringId::viterbi:
    case SemiringId::fuzzy: v.r_ = 1.0; break;
  }
  return v;
}

Value Value::natural(std::uint64_t n) {
  Value v;
  v.id_ = SemiringId::natural;
  v.n_ = n;
  return v;
}

Value Value::boolean(bool b) {
  Value v;
  v.id_ = SemiringId::boolean;
  v.n_ = b ? 1 : 0;
  return v;
}

Value Value::real(SemiringId id, double x) {
  auto bad = [&](const char* what) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", x);
    return UsageError(std::string(buf) + " is not in the " + std::string(semiring_name(id)) +
                      " carrier (" + what + ")");
  };
  if (std::isnan(x)) throw bad("NaN");
  switch (id) {
    case SemiringId::natural:
      if (x < 0 || x != std::floor(x) || x > 1.8e19) throw bad("expected a natural number");
      return natural(static_cast<std::uint64_t>(x));
    case SemiringId::boolean:
      if (x != 0.0 && x != 1.0) throw bad("expected 0 or 1");
      return boolean(x == 1.0);
    case SemiringId::minplus:
      if (x < 0) throw bad("expected a nonnegative real or inf");
      break;
    case SemiringId::maxplus:
      if (x < 0 && x != -kInf) throw bad("expected a nonnegative real or -inf");
      if (x == kInf) throw bad("+inf is not an element");
      break;
    case SemiringId::viterbi:
    case SemiringId::fuzzy:
      if (x < 0 || x > 1) throw bad("expected a value in [0,1]");
      break;
  }
  Value v;
  v.id_ = id;
  v.r_ = x;
  return v;
}

bool Value::is_zero() const { return *this == zero(id_); }
bool Value::is_one() const { return *this == one(id_); }

bool operator==(const Value& a, const Value& b) {
  if (a.id_ != b.id_) return false;
  if (a.is_exact()) return a.n_ == b.n_;
  return a.r_ == b.r_;
}

Value oplus(const Value& a, const Value& b) {
  require_same(a, b);
  switch (a.semiring()) {
    case SemiringId::natural: {
      std::uint64_t s = 0;
      if (__builtin_add_overflow(a.exact(), b.exact(), &s)) {
        throw std::overflow_error("natural-number overflow in addition");
      }
      return Value::natural(s);
    }
    case SemiringId::boolean: return Value::boolean(a.exact() != 0 || b.exact() != 0);
    case SemiringId::minplus: return a.real() <= b.real() ? a : b;
    case SemiringId::maxplus:
    case SemiringId::viterbi:
    case SemiringId::fuzzy: return a.real() >= b.real() ? a : b;
  }
  return a;
}

Value otimes(const Value& a, const Value& b) {
  require_same(a, b);
  switch (a.semiring()) {
    case SemiringId::natural: {
      std::uint64_t p = 0;
      if (__builtin_mul_overflow(a.exact(), b.exact(), &p)) {
        throw std::overflow_error("natural-number overflow in multiplication");
      }
      return Value::natural(p);
    }
    case SemiringId::boolean: return Value::boolean(a.exact() != 0 && b.exact() != 0);
    case SemiringId::minplus: return Value::real(SemiringId::minplus, a.real() + b.real());
    case SemiringId::maxplus: {
      // -inf absorbs; the sum of two nonnegative reals stays in range.
      if (a.is_zero() || b.is_zero()) return Value::zero(SemiringId::maxplus);
      return Value::real(SemiringId::maxplus, a.real() + b.real());
    }
    case SemiringId::viterbi: return Value::real(SemiringId::viterbi, a.real() * b.real());
    case SemiringId::fuzzy: return Value::real(SemiringId::fuzzy, std::min(a.real(), b.real()));
  }
  return a;
}

Value fold_sum(SemiringId id, std::span<const Value> xs) {
  Value acc = Value::zero(id);
  for (const Value& x : xs) acc = oplus(acc, x);
  return acc;
}

Value fold_product(SemiringId id, std::span<const Value> xs) {
  Value acc = Value::one(id);
  for (const Value& x : xs) acc = otimes(acc, x);
  return acc;
}

bool approx_equal(const Value& a, const Value& b, double tol) {
  if (a.semiring() != b.semiring()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  if (std::isinf(a.real()) || std::isinf(b.real())) return a.real() == b.real();
  return std::fabs(a.real() - b.real()) <= tol;
}

std::string to_string(const Value& v) {
  if (v.is_exact()) return std::to_string(v.exact());
  if (std::isinf(v.real())) return v.real() > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v.real());
  return buf;
}

std::string to_exact_string(const Value& v) {
  if (v.is_exact() || std::isinf(v.real())) return to_string(v);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v.real());
  return std::string(buf, res.ptr);
}

Value parse_value(SemiringId id, std::string_view text) {
  auto fail = [&](const std::string& why) {
    return UsageError("bad " + std::string(semiring_name(id)) + " literal '" + std::string(text) +
                      "': " + why);
  };
  if (text.empty()) throw fail("empty");
  if (text == "inf" || text == "-inf") {
    if (id == SemiringId::minplus && text == "inf") return Value::zero(id);
    if (id == SemiringId::maxplus && text == "-inf") return Value::zero(id);
    throw fail("infinity is only allowed as the zero element (inf for minplus, -inf for maxplus)");
  }
  if (id == SemiringId::natural || id == SemiringId::boolean) {
    std::uint64_t n = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), n);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw fail("expected a nonnegative integer");
    }
    if (id == SemiringId::boolean) {
      if (n > 1) throw fail("expected 0 or 1");
      return Value::boolean(n == 1);
    }
    return Value::natural(n);
  }
  double x = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) throw fail("not a number");
  return Value::real(id, x);
}

}  // namespace wcl
