#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ncalg/factor_automaton.hpp"
#include "ncalg/monomial_set.hpp"
#include "ncalg/order.hpp"
#include "ncalg/polynomial.hpp"

namespace ncalg {

struct VerificationResult;

/// Candidate Groebner basis: monic, LM-reduced polynomials under a fixed
/// degree-first order. Input order is preserved for diagnostics.
class GroebnerBasis {
 public:
  /// Normalizes every element to be monic. Throws ValidationError on a zero
  /// element or when one leading word divides another (the offending pair is
  /// named in the message).
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order);

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Word>& leading_words() const noexcept { return leading_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Alphabet& alphabet() const noexcept { return order_.alphabet(); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool verified() const noexcept { return verified_; }

  /// interreduce(LM(G)).
  MonomialSet obstruction_set() const { return MonomialSet::interreduce(leading_); }
  const FactorAutomaton& matcher() const { return *matcher_; }

 private:
  friend VerificationResult verify_groebner(GroebnerBasis& basis);

  std::vector<Polynomial> elements_;
  std::vector<Word> leading_;
  MonomialOrder order_;
  std::shared_ptr<const FactorAutomaton> matcher_;
  bool verified_ = false;
};

/// Reduces `f` until no term contains a leading word of `basis`.
///
/// The largest reducible term is rewritten first, at its leftmost
/// occurrence, using the element with the longest leading word there.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Superposition of two leading words: word = LM(left) * tail = head * LM(right),
/// where the two occurrences share `overlap` letters.
struct OverlapAmbiguity {
  std::size_t left;
  std::size_t right;
  std::size_t overlap;
  Word word;
  Word head;
  Word tail;

  friend bool operator==(const OverlapAmbiguity&, const OverlapAmbiguity&) = default;
};

/// Every proper suffix/prefix overlap LM(g_i) -> LM(g_j), self-overlaps
/// included, ordered by (left, right, overlap length).
std::vector<OverlapAmbiguity> overlap_ambiguities(const GroebnerBasis& basis);

/// g_left * tail - head * g_right.
Polynomial s_element(const OverlapAmbiguity& ambiguity, const GroebnerBasis& basis);

struct Counterexample {
  OverlapAmbiguity ambiguity;
  Polynomial remainder;
};

struct VerificationResult {
  bool ok = false;
  std::size_t ambiguities_checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Reduces the S-element of every overlap. Returns ok iff all vanish;
/// otherwise the first failure in enumeration order. Sets basis.verified().
VerificationResult verify_groebner(GroebnerBasis& basis);

}  // namespace ncalg
