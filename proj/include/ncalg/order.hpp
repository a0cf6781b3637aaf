#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/polynomial.hpp"

namespace ncalg {

enum class OrderKind { graded_lex, graded_reverse_lex };

std::string_view to_string(OrderKind kind);
/// "grlex" / "grevlex"; anything else is a ValidationError.
OrderKind parse_order_kind(std::string_view text);

/// Degree-first monomial ordering on words.
///
/// Words of different weighted degree compare by degree. Ties are broken by
/// the letter precedence (first entry is the smallest letter):
///   graded_lex          leftmost differing letter decides;
///   graded_reverse_lex  rightmost differing letter decides, and the word
///                       carrying the larger letter there is the smaller one.
///
/// An order may carry a homogenizing letter T (see rees.hpp). For graded_lex
/// T is simply the minimal letter. For graded_reverse_lex equal-degree words
/// are first compared with T deleted, then left to right with T minimal, so
/// that prepending powers of T never changes a leading word.
class MonomialOrder {
 public:
  /// Throws ValidationError unless `precedence` is a permutation of the letters.
  MonomialOrder(Alphabet alphabet, OrderKind kind, std::vector<Letter> precedence,
                std::optional<Letter> homogenizer = std::nullopt);

  /// Graded lex with precedence equal to declaration order.
  static MonomialOrder graded_lex(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  OrderKind kind() const noexcept { return kind_; }
  const std::vector<Letter>& precedence() const noexcept { return precedence_; }
  std::optional<Letter> homogenizer() const noexcept { return homogenizer_; }
  std::uint64_t degree(const Word& w) const { return alphabet_.degree(w); }

  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  /// Strict weak ordering adaptor for ordered containers.
  struct Less {
    const MonomialOrder* order;
    bool operator()(const Word& u, const Word& v) const { return order->less(u, v); }
  };
  Less less_fn() const { return Less{this}; }

 private:
  std::strong_ordering compare_letters(const Word& u, const Word& v, OrderKind kind) const;

  Alphabet alphabet_;
  OrderKind kind_;
  std::vector<Letter> precedence_;
  std::vector<std::size_t> rank_;
  std::optional<Letter> homogenizer_;
};

inline std::strong_ordering compare_words(const Word& u, const Word& v,
                                          const MonomialOrder& order) {
  return order.compare(u, v);
}

/// (LM(f), LC(f)). Throws std::invalid_argument on the zero polynomial.
std::pair<Word, Scalar> leading_data(const Polynomial& f, const MonomialOrder& order);

inline Word leading_word(const Polynomial& f, const MonomialOrder& order) {
  return leading_data(f, order).first;
}

/// Terms in descending order: "x2*x1 - 2*x1*x2 - 3/2*x2 + 1".
std::string format_polynomial(const Polynomial& f, const MonomialOrder& order);

}  // namespace ncalg
