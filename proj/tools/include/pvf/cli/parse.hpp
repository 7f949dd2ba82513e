#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pvf/affine.hpp"
#include "pvf/linalg.hpp"
#include "pvf/morphism.hpp"
#include "pvf/poly.hpp"
#include "pvf/vecfield.hpp"

namespace pvf::cli {

/// Malformed input text; offset is the byte position where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | variable | '(' expr ')'
// Variables are x1..xn, plus the aliases x, y, z when n <= 3. There is no
// implicit multiplication.

Poly parse_poly(std::string_view text, std::size_t n);

/// Number of top-level components of "[c1, ..., cn]".
std::size_t component_count(std::string_view text);

/// "[p1, ..., pn]"; when n is empty it is the component count.
VectorField parse_field(std::string_view text, std::optional<std::size_t> n = std::nullopt);
PolyMap parse_map(std::string_view text, std::optional<std::size_t> n = std::nullopt);
/// Fields separated by ';'.
std::vector<VectorField> parse_fields(std::string_view text,
                                      std::optional<std::size_t> n = std::nullopt);

RationalVector parse_rational_vector(std::string_view text);
/// "[[a, b], [c, d]]".
RationalMatrix parse_rational_matrix(std::string_view text);

/// Letters joined by '.': "affine:[[..],..];[b1,..]" or "elem:i:p" with a
/// 1-based index i.
AutWord parse_word(std::string_view text, std::optional<std::size_t> n = std::nullopt);

/// Images of the sl_n basis separated by ';' (see sl_basis for the order).
SlLinearMap parse_sl_map(std::string_view text);

/// Splits at top-level occurrences of `sep` (outside brackets/parentheses).
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

}  // namespace pvf::cli
