#pragma once

// The element mini-language used on the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*'? factor)*
//   factor := rational | 'i' | 'L[' word ']' | 'L*[' word ']' | 'a:' word | '(' expr ')'
//
// Juxtaposition is the algebra product; a word is dotted edge ids or '@v'.
// A term made of scalars only stands for that multiple of the unit.

#include <optional>
#include <string_view>

#include "gwp/algebra.hpp"

namespace gwp {

struct ParsedElement {
  AlgebraElement element;
  /// The generating path when the text is a single L[w], L*[w] or a:w.
  std::optional<PathWord> word;
};

/// Throws ParseError (line 1, 1-based column) on malformed text and
/// PreconditionError on unknown identifiers. Under fock the products are
/// exact; the depth of b is not enforced while parsing.
ParsedElement parse_element(const Graph& g, const Backend& b, std::string_view text);

}  // namespace gwp
