#pragma once

#include <cstddef>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Reduced obstruction set: a finite antichain of nonempty words under the
/// factor relation, kept sorted shortlex.
class MonomialSet {
 public:
  MonomialSet() = default;

  /// Drops every word that has another input word as a factor (duplicates
  /// collapse). Throws ValidationError if the empty word is present.
  static MonomialSet interreduce(std::vector<Word> words);

  /// Throws ValidationError unless `words` is already a reduced antichain.
  static MonomialSet from_reduced(std::vector<Word> words);

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const;
  /// Longest member length; 0 when empty.
  std::size_t max_length() const noexcept;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  explicit MonomialSet(std::vector<Word> words) : words_(std::move(words)) {}
  std::vector<Word> words_;
};

/// True iff no member of `omega` occurs as a contiguous factor of `w`.
bool is_normal(const Word& w, const MonomialSet& omega);

/// Number of normal words of each weighted degree 0..up_to, by dynamic
/// programming over the factor-avoidance automaton of `omega`.
std::vector<BigInt> count_normal_words(const MonomialSet& omega, const Alphabet& alphabet,
                                       std::size_t up_to);

}  // namespace ncalg
