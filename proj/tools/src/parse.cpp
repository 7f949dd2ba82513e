#include "pvf/cli/parse.hpp"

#include <cctype>

#include "pvf/errors.hpp"

namespace pvf::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

class Parser {
 public:
  // `base` is the offset of `text` inside the string the user typed.
  Parser(std::string_view text, std::size_t n, std::size_t base = 0)
      : text_(text), n_(n), base_(base) {
    if (n == 0) fail("dimension must be positive");
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  std::vector<Poly> list() {
    skip_space();
    expect('[');
    std::vector<Poly> items{expr()};
    skip_space();
    while (accept(',')) {
      items.push_back(expr());
      skip_space();
    }
    expect(']');
    return items;
  }

  RationalVector rational_list() {
    skip_space();
    expect('[');
    RationalVector items{signed_rational()};
    skip_space();
    while (accept(',')) {
      items.push_back(signed_rational());
      skip_space();
    }
    expect(']');
    return items;
  }

  std::vector<RationalVector> rational_rows() {
    skip_space();
    expect('[');
    std::vector<RationalVector> rows{rational_list()};
    skip_space();
    while (accept(',')) {
      rows.push_back(rational_list());
      skip_space();
    }
    expect(']');
    return rows;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(base_ + pos_, message);
  }

 private:
  Poly term() {
    Poly acc = unary();
    while (true) {
      skip_space();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  Poly unary() {
    skip_space();
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    if (digits.size() > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  Poly primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      Poly inner = expr();
      skip_space();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(n_, rational());
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational rational() {
    std::string literal = take_digits();
    if (accept('/')) {
      const std::size_t start = pos_;
      const std::string den = take_digits();
      if (den.empty()) fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = start;
        fail("zero denominator");
      }
      literal += "/" + den;
    }
    return parse_rational(literal);
  }

  Rational signed_rational() {
    skip_space();
    const bool negative = accept('-');
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a rational number");
    }
    Rational r = rational();
    return negative ? Rational(-r) : r;
  }

  Poly variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    std::optional<std::size_t> index;
    if (name.size() == 1 && n_ <= 3) {
      const auto alias = std::string_view("xyz").find(name.front());
      if (alias != std::string_view::npos && alias < n_) index = alias;
    } else if (name.size() > 1 && name.front() == 'x' &&
               name.find_first_not_of("0123456789", 1) == std::string_view::npos &&
               name[1] != '0' && name.size() < 8) {
      const std::size_t k = std::stoul(std::string(name.substr(1)));
      if (k >= 1 && k <= n_) index = k - 1;
    }
    if (!index) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "' for n = " + std::to_string(n_));
    }
    return Poly::variable(n_, *index);
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::size_t offset_in(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data());
}

std::vector<Poly> parse_components(std::string_view text, std::optional<std::size_t> n,
                                   std::size_t base) {
  const std::size_t count = component_count(text);
  const std::size_t dim = n.value_or(count);
  Parser p(text, dim, base);
  auto items = p.list();
  p.finish();
  if (items.size() != dim) throw DimensionMismatch(dim, items.size());
  return items;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::size_t component_count(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos) throw ParseError(0, "expected '['");
  if (close == std::string_view::npos || close < open) throw ParseError(text.size(), "expected ']'");
  return split_top_level(text.substr(open + 1, close - open - 1), ',').size();
}

Poly parse_poly(std::string_view text, std::size_t n) {
  Parser p(text, n);
  Poly result = p.expr();
  p.finish();
  return result;
}

VectorField parse_field(std::string_view text, std::optional<std::size_t> n) {
  return VectorField(parse_components(text, n, 0));
}

PolyMap parse_map(std::string_view text, std::optional<std::size_t> n) {
  return PolyMap(parse_components(text, n, 0));
}

std::vector<VectorField> parse_fields(std::string_view text, std::optional<std::size_t> n) {
  std::vector<VectorField> fields;
  for (auto part : split_top_level(text, ';')) {
    if (trim(part).empty()) continue;
    auto components = parse_components(part, n, offset_in(text, part));
    if (!n) n = components.size();
    fields.emplace_back(std::move(components));
  }
  if (fields.empty()) throw ParseError(0, "no fields given");
  return fields;
}

RationalVector parse_rational_vector(std::string_view text) {
  Parser p(text, 1);
  auto v = p.rational_list();
  p.finish();
  return v;
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  Parser p(text, 1);
  auto rows = p.rational_rows();
  p.finish();
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError(0, "matrix rows differ in length");
  }
  return RationalMatrix::from_rows(rows);
}

AutWord parse_word(std::string_view text, std::optional<std::size_t> n) {
  std::vector<std::pair<std::string_view, std::size_t>> letters;
  for (auto part : split_top_level(text, '.')) letters.emplace_back(trim(part), offset_in(text, part));

  // Infer the dimension from the first affine letter when not given.
  if (!n) {
    for (const auto& [letter, base] : letters) {
      if (letter.starts_with("affine:")) {
        n = parse_rational_matrix(split_top_level(letter.substr(7), ';').front()).rows();
        break;
      }
    }
  }
  if (!n) throw ParseError(0, "cannot infer the dimension of a word without affine letters; pass --n");

  AutWord word(*n);
  for (const auto& [letter, base] : letters) {
    try {
      if (letter.starts_with("affine:")) {
        const auto parts = split_top_level(letter.substr(7), ';');
        if (parts.size() != 2) throw ParseError(0, "affine letter needs 'matrix;vector'");
        RationalMatrix g = parse_rational_matrix(parts[0]);
        RationalVector b = parse_rational_vector(parts[1]);
        word.append(AffineLetter{std::move(g), std::move(b)});
      } else if (letter.starts_with("elem:")) {
        const auto rest = letter.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw ParseError(5, "elementary letter needs 'i:p'");
        const std::string index_text(trim(rest.substr(0, colon)));
        if (index_text.empty() ||
            index_text.find_first_not_of("0123456789") != std::string::npos ||
            index_text.size() > 6) {
          throw ParseError(5, "expected a variable index");
        }
        const std::size_t i = std::stoul(index_text);
        if (i < 1 || i > *n) throw ParseError(5, "variable index out of range");
        word.append(ElementaryLetter{i - 1, parse_poly(rest.substr(colon + 1), *n)});
      } else {
        throw ParseError(0, "letters start with 'affine:' or 'elem:'");
      }
    } catch (const ParseError& e) {
      throw ParseError(base + e.offset(), e.what());
    }
  }
  return word;
}

SlLinearMap parse_sl_map(std::string_view text) {
  std::vector<RationalVector> images;
  for (auto part : split_top_level(text, ';')) {
    if (trim(part).empty()) continue;
    try {
      images.push_back(parse_rational_vector(part));
    } catch (const ParseError& e) {
      throw ParseError(offset_in(text, part) + e.offset(), e.what());
    }
  }
  if (images.empty()) throw ParseError(0, "no images given");
  const std::size_t n = images.front().size();
  return SlLinearMap(n, std::move(images));
}

}  // namespace pvf::cli
