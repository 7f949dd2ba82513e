#pragma once

#include <string_view>
#include <vector>

#include "pvf/cli/parse.hpp"
#include "pvf/format.hpp"

namespace pvf::test {

inline Poly P(std::string_view text, std::size_t n = 2) { return cli::parse_poly(text, n); }
inline VectorField F(std::string_view text) { return cli::parse_field(text); }
inline PolyMap M(std::string_view text) { return cli::parse_map(text); }
inline std::vector<VectorField> Fs(std::string_view text) { return cli::parse_fields(text); }

}  // namespace pvf::test
