#include "pvf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pvf {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer zn(n, 10);
  Integer zd(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace pvf
