#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "pvf/linalg.hpp"
#include "pvf/morphism.hpp"
#include "pvf/poly.hpp"
#include "pvf/poly_matrix.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {

enum class VariableNaming {
  kAuto,     // x, y, z when n <= 3, else x1..xn
  kIndexed,  // always x1..xn
};

std::vector<std::string> variable_names(std::size_t n, VariableNaming naming = VariableNaming::kAuto);

// Terms in descending grlex order, e.g. "3*x^2*y - 1/2".
std::string to_string(const Poly& p, VariableNaming naming = VariableNaming::kAuto);
// Component lists "[p1, ..., pn]".
std::string to_string(const VectorField& v, VariableNaming naming = VariableNaming::kAuto);
std::string to_string(const PolyMap& m, VariableNaming naming = VariableNaming::kAuto);
std::string to_string(const std::vector<Poly>& ps, VariableNaming naming = VariableNaming::kAuto);
std::string to_string(const PolyMatrix& m, VariableNaming naming = VariableNaming::kAuto);
std::string to_string(const RationalVector& v);
std::string to_string(const RationalMatrix& m);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const VectorField& v);
std::ostream& operator<<(std::ostream& os, const PolyMap& m);

}  // namespace pvf
