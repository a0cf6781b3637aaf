#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ncalg {

/// Index of a variable inside an Alphabet (0-based).
using Letter = std::uint16_t;

/// A monomial of the free algebra: a finite sequence of letters.
/// The empty word is the identity 1.
///
/// Words compare shortlex (length first, then letter indices). That is only
/// the canonical storage order; monomial orderings live in MonomialOrder.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word letter(Letter a) { return Word{a}; }
  static Word power(Letter a, std::size_t exponent) {
    return Word(std::vector<Letter>(exponent, a));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// First `n` letters.
  Word prefix(std::size_t n) const;
  /// Last `n` letters.
  Word suffix(std::size_t n) const;
  /// Contiguous factor starting at `pos` of length `len`.
  Word subword(std::size_t pos, std::size_t len) const;
  Word drop_front(std::size_t n) const { return suffix(size() - n); }
  Word drop_back(std::size_t n) const { return prefix(size() - n); }

  bool has_prefix(const Word& p) const;
  bool has_suffix(const Word& s) const;
  /// Leftmost start of `factor` inside this word.
  std::optional<std::size_t> find(const Word& factor) const;
  bool has_factor(const Word& factor) const { return find(factor).has_value(); }

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace ncalg
