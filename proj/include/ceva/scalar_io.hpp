#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceva/quad.hpp"

namespace ceva {

/// A scalar parsed from command-line text. Fractions and sqrt5 terms are
/// exact literals; decimals (including scientific notation) parse losslessly
/// into value but count as float literals for mode selection.
struct ParsedScalar {
  Quad value;
  bool exact_literal = false;
  double to_double() const { return value.to_double(); }
};

/// Grammar: decimal | "n/d" | "p/q+r/s*sqrt5" (either part optional, integer
/// shorthands allowed, spaces ignored). Returns nullopt on malformed input.
std::optional<ParsedScalar> parse_scalar(std::string_view text);

/// Comma-separated scalars, e.g. "1/4,1/2,5/6".
std::optional<std::vector<ParsedScalar>> parse_scalar_list(std::string_view text, std::size_t count);

}  // namespace ceva
