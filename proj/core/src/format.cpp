#include "pvf/format.hpp"

#include <sstream>

namespace pvf {

std::vector<std::string> variable_names(std::size_t n, VariableNaming naming) {
  std::vector<std::string> names;
  if (naming == VariableNaming::kAuto && n <= 3) {
    static const char* const kAliases[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(kAliases[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

template <typename Range, typename F>
std::string bracketed(const Range& items, F&& item_text) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += item_text(item);
  }
  return out + "]";
}

}  // namespace

std::string to_string(const Poly& p, VariableNaming naming) {
  if (p.is_zero()) return "0";
  const auto names = variable_names(p.dimension(), naming);
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(m, names);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

std::string to_string(const std::vector<Poly>& ps, VariableNaming naming) {
  return bracketed(ps, [&](const Poly& p) { return to_string(p, naming); });
}

std::string to_string(const VectorField& v, VariableNaming naming) {
  return to_string(v.components(), naming);
}

std::string to_string(const PolyMap& m, VariableNaming naming) {
  return to_string(m.components(), naming);
}

std::string to_string(const PolyMatrix& m, VariableNaming naming) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += ", ";
    std::vector<Poly> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out += to_string(row, naming);
  }
  return out + "]";
}

std::string to_string(const RationalVector& v) {
  return bracketed(v, [](const Rational& r) { return to_string(r); });
}

std::string to_string(const RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += ", ";
    auto row = m.row(r);
    out += to_string(RationalVector(row.begin(), row.end()));
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const VectorField& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const PolyMap& m) { return os << to_string(m); }

}  // namespace pvf
