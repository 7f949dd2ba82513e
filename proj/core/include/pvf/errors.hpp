#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pvf {

// Base class for mathematical failures (as opposed to programming errors,
// which surface as std::invalid_argument / std::out_of_range).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  // Short machine-readable tag, e.g. "not-etale".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public DomainError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : DomainError("dimension-mismatch",
                    "dimension mismatch: expected " + std::to_string(expected) +
                        ", got " + std::to_string(got)),
        expected_(expected),
        got_(got) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

inline void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(expected, got);
}

}  // namespace pvf
