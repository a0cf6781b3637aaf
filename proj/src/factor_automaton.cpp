#include "ncalg/factor_automaton.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ncalg {

FactorAutomaton::FactorAutomaton(std::span<const Word> patterns, std::size_t alphabet_size)
    : alphabet_size_(alphabet_size) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> trie(alphabet_size_, kNone);
  matches_.emplace_back();

  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const Word& w = patterns[p];
    if (w.empty()) throw std::invalid_argument("empty pattern");
    lengths_.push_back(w.size());
    std::size_t state = 0;
    for (Letter a : w) {
      if (a >= alphabet_size_) throw std::invalid_argument("pattern letter out of range");
      std::size_t& slot = trie[state * alphabet_size_ + a];
      if (slot == kNone) {
        slot = matches_.size();
        matches_.emplace_back();
        trie.resize(trie.size() + alphabet_size_, kNone);
      }
      state = trie[state * alphabet_size_ + a];
    }
    matches_[state].push_back(p);
  }

  delta_ = trie;
  std::vector<std::size_t> fail(matches_.size(), 0);
  std::queue<std::size_t> queue;
  for (std::size_t a = 0; a < alphabet_size_; ++a) {
    std::size_t& slot = delta_[a];
    if (slot == kNone) {
      slot = 0;
    } else {
      fail[slot] = 0;
      queue.push(slot);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop();
    auto& own = matches_[s];
    const auto& inherited = matches_[fail[s]];
    own.insert(own.end(), inherited.begin(), inherited.end());
    for (std::size_t a = 0; a < alphabet_size_; ++a) {
      std::size_t& slot = delta_[s * alphabet_size_ + a];
      if (slot == kNone) {
        slot = delta_[fail[s] * alphabet_size_ + a];
      } else {
        fail[slot] = delta_[fail[s] * alphabet_size_ + a];
        queue.push(slot);
      }
    }
  }
}

bool FactorAutomaton::matches_any(const Word& w) const {
  std::size_t s = 0;
  for (Letter a : w) {
    s = next(s, a);
    if (is_match_state(s)) return true;
  }
  return false;
}

std::vector<FactorAutomaton::Occurrence> FactorAutomaton::occurrences(const Word& w) const {
  std::vector<Occurrence> out;
  std::size_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = next(s, w[i]);
    for (std::size_t p : matches_[s]) out.push_back({p, i + 1 - lengths_[p]});
  }
  return out;
}

std::optional<FactorAutomaton::Occurrence> FactorAutomaton::leftmost(const Word& w) const {
  std::optional<Occurrence> best;
  for (const auto& occ : occurrences(w)) {
    if (!best || occ.start < best->start ||
        (occ.start == best->start &&
         (lengths_[occ.pattern] > lengths_[best->pattern] ||
          (lengths_[occ.pattern] == lengths_[best->pattern] && occ.pattern < best->pattern))))
      best = occ;
  }
  return best;
}

}  // namespace ncalg
