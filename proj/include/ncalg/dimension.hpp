#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncalg {

/// A natural number or infinity (global and Gelfand-Kirillov dimensions).
class Dimension {
 public:
  static Dimension finite(std::size_t value) { return Dimension(value); }
  static Dimension infinite() { return Dimension(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw std::logic_error("infinite dimension has no value");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  explicit Dimension(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

}  // namespace ncalg
