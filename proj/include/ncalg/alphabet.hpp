#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/word.hpp"

namespace ncalg {

/// Ordered set of variable names with positive integer weights.
class Alphabet {
 public:
  /// Throws ValidationError on empty, duplicate or malformed names and on
  /// weights below 1.
  Alphabet(std::vector<std::string> names, std::vector<std::uint32_t> weights);

  /// Variables x1..xn, all of weight 1 unless `weights` is given.
  static Alphabet standard(std::size_t n, std::vector<std::uint32_t> weights = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  std::uint32_t weight(Letter a) const { return weights_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::optional<Letter> index_of(std::string_view name) const;

  /// Sum of letter weights; 0 for the empty word.
  std::uint64_t degree(const Word& w) const;

  /// "x1*x2*x1", or "1" for the empty word.
  std::string format(const Word& w) const;

  /// This alphabet with one more letter appended.
  Alphabet with_letter(std::string name, std::uint32_t weight) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
};

inline std::uint64_t weighted_degree(const Word& w, const Alphabet& alphabet) {
  return alphabet.degree(w);
}

bool is_identifier(std::string_view name);

}  // namespace ncalg
