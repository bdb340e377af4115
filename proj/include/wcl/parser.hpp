#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "wcl/formula.hpp"
#include "wcl/semiring.hpp"

namespace wcl {

enum class Dialect { pil, pcl, wpcl, focl, wfocl };

std::string_view dialect_name(Dialect d);
Dialect parse_dialect(std::string_view name);
// From a file name such as "f.wpcl". Throws UsageError for other extensions.
Dialect dialect_of_path(std::string_view path);
bool is_weighted(Dialect d);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct ParseOptions {
  // Numeric literals are read in this semiring.
  SemiringId semiring = SemiringId::natural;
  // Named weights such as k11, usable wherever a literal is.
  std::map<std::string, Value> weights;
};

Pil parse_pil(std::string_view text);
// pcl or focl.
Formula parse_boolean(std::string_view text, Dialect d = Dialect::pcl);
// wpcl or wfocl. A Boolean formula is accepted and read as its 0/1 weighting.
WFormula parse_weighted(std::string_view text, Dialect d, const ParseOptions& opts = {});

using ParsedFormula = std::variant<Pil, Formula, WFormula>;
ParsedFormula parse_formula(std::string_view text, Dialect d, const ParseOptions& opts = {});

}  // namespace wcl
