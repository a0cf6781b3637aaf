#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Element of the free algebra K<X> with K = Q. Zero coefficients are never
/// stored, so the zero polynomial is the empty term map.
class Polynomial {
 public:
  using Terms = std::map<Word, Scalar>;

  Polynomial() = default;
  static Polynomial monomial(Word w, Scalar c = 1);
  static Polynomial constant(Scalar c) { return monomial(Word{}, std::move(c)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w, collecting with an existing term and dropping zeros.
  void add_term(const Word& w, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// left * this * right.
  Polynomial sandwich(const Word& left, const Word& right) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// Maximal weighted degree of a term; nullopt for zero.
std::optional<std::uint64_t> top_degree(const Polynomial& f, const Alphabet& alphabet);

bool is_homogeneous(const Polynomial& f, const Alphabet& alphabet);

/// Sum of the terms of maximal weighted degree. Throws std::invalid_argument on 0.
Polynomial leading_homogeneous(const Polynomial& f, const Alphabet& alphabet);

/// Terms grouped by weighted degree, ascending.
std::vector<std::pair<std::uint64_t, Polynomial>> homogeneous_components(
    const Polynomial& f, const Alphabet& alphabet);

}  // namespace ncalg
