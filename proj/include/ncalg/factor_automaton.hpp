#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncalg/word.hpp"

namespace ncalg {

/// Aho-Corasick automaton over a finite set of nonempty patterns.
///
/// States are the prefixes of the patterns (state 0 is the empty prefix). The
/// transition table is complete, so the automaton also serves as the
/// pattern-avoidance DFA: a word avoids every pattern iff its run never
/// enters a state with a nonempty match list.
class FactorAutomaton {
 public:
  struct Occurrence {
    std::size_t pattern;
    std::size_t start;
  };

  FactorAutomaton(std::span<const Word> patterns, std::size_t alphabet_size);

  std::size_t state_count() const noexcept { return matches_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t next(std::size_t state, Letter a) const { return delta_[state * alphabet_size_ + a]; }
  /// Patterns that end when this state is entered.
  const std::vector<std::size_t>& matches(std::size_t state) const { return matches_[state]; }
  bool is_match_state(std::size_t state) const { return !matches_[state].empty(); }
  std::size_t pattern_length(std::size_t pattern) const { return lengths_[pattern]; }

  bool matches_any(const Word& w) const;
  std::vector<Occurrence> occurrences(const Word& w) const;
  /// Occurrence with the smallest start; ties go to the longest pattern, then
  /// the lowest pattern index.
  std::optional<Occurrence> leftmost(const Word& w) const;

 private:
  std::size_t alphabet_size_;
  std::vector<std::size_t> delta_;
  std::vector<std::vector<std::size_t>> matches_;
  std::vector<std::size_t> lengths_;
};

}  // namespace ncalg
