#include "ncalg/word.hpp"

#include <algorithm>

namespace ncalg {

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

bool Word::has_prefix(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::has_suffix(const Word& s) const {
  return s.size() <= size() && std::equal(s.begin(), s.end(), end() - s.size());
}

std::optional<std::size_t> Word::find(const Word& factor) const {
  auto it = std::search(letters_.begin(), letters_.end(), factor.begin(), factor.end());
  if (it == letters_.end() && !factor.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter a : w) {
    h ^= a + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ncalg
