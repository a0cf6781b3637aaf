#include "ncalg/monomial_set.hpp"

#include <algorithm>

#include "ncalg/errors.hpp"
#include "ncalg/factor_automaton.hpp"

namespace ncalg {

MonomialSet MonomialSet::interreduce(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (!words.empty() && words.front().empty())
    throw ValidationError("obstruction set contains the empty word");
  std::vector<Word> kept;
  // Shortlex order visits every possible factor of a word before the word.
  for (const Word& w : words) {
    bool divisible = std::any_of(kept.begin(), kept.end(),
                                 [&](const Word& k) { return w.has_factor(k); });
    if (!divisible) kept.push_back(w);
  }
  return MonomialSet(std::move(kept));
}

MonomialSet MonomialSet::from_reduced(std::vector<Word> words) {
  std::size_t n = words.size();
  MonomialSet reduced = interreduce(std::move(words));
  if (reduced.size() != n) throw ValidationError("word set is not a reduced antichain");
  return reduced;
}

bool MonomialSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::size_t MonomialSet::max_length() const noexcept {
  std::size_t ell = 0;
  for (const Word& w : words_) ell = std::max(ell, w.size());
  return ell;
}

bool is_normal(const Word& w, const MonomialSet& omega) {
  return std::none_of(omega.words().begin(), omega.words().end(),
                      [&](const Word& u) { return w.has_factor(u); });
}

std::vector<BigInt> count_normal_words(const MonomialSet& omega, const Alphabet& alphabet,
                                       std::size_t up_to) {
  FactorAutomaton automaton(omega.words(), alphabet.size());
  const std::size_t states = automaton.state_count();
  // table[d][s]: normal words of weighted degree d whose run ends in state s.
  std::vector<std::vector<BigInt>> table(up_to + 1, std::vector<BigInt>(states, 0));
  table[0][0] = 1;
  std::vector<BigInt> counts(up_to + 1, 0);
  for (std::size_t d = 0; d <= up_to; ++d) {
    for (std::size_t s = 0; s < states; ++s) {
      const BigInt& here = table[d][s];
      if (here == 0) continue;
      counts[d] += here;
      for (Letter a = 0; a < alphabet.size(); ++a) {
        std::size_t target = d + alphabet.weight(a);
        if (target > up_to) continue;
        std::size_t t = automaton.next(s, a);
        if (automaton.is_match_state(t)) continue;
        table[target][t] += here;
      }
    }
  }
  return counts;
}

}  // namespace ncalg
