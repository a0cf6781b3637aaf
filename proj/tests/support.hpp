#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/monomial_set.hpp"
#include "ncalg/order.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/ufnarovski.hpp"

namespace testing_support {

using namespace ncalg;

inline std::string presentation_path(const std::string& name) {
  return std::string(NCALG_PRESENTATIONS_DIR) + "/" + name + ".json";
}

/// "x1^2*x2" -> word; "1" -> empty word.
inline Word word(const Alphabet& alphabet, std::string_view text) {
  if (text == "1") return Word{};
  Polynomial p = parse_polynomial(text, alphabet);
  return p.terms().begin()->first;
}

inline std::vector<Word> words(const Alphabet& alphabet, std::initializer_list<std::string_view> texts) {
  std::vector<Word> out;
  for (auto t : texts) out.push_back(word(alphabet, t));
  return out;
}

inline Polynomial poly(const Alphabet& alphabet, std::string_view text) {
  return parse_polynomial(text, alphabet);
}

/// Naive factor test, independent of the automaton.
inline bool naive_normal(const Word& w, const std::vector<Word>& omega) {
  for (const Word& u : omega) {
    if (u.size() > w.size()) continue;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
      if (std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return false;
  }
  return true;
}

/// Normal words counted by weighted degree 0..max_degree, by depth-first
/// extension of normal words (normal words are closed under prefixes).
inline std::vector<BigInt> brute_counts_by_degree(const std::vector<Word>& omega,
                                                  const Alphabet& alphabet,
                                                  std::size_t max_degree) {
  std::vector<BigInt> counts(max_degree + 1, 0);
  std::vector<Letter> letters;
  std::function<void(std::size_t)> grow = [&](std::size_t degree) {
    counts[degree] += 1;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::size_t next = degree + alphabet.weight(static_cast<Letter>(a));
      if (next > max_degree) continue;
      letters.push_back(static_cast<Letter>(a));
      if (naive_normal(Word(letters), omega)) grow(next);
      letters.pop_back();
    }
  };
  grow(0);
  return counts;
}

/// Normal words counted by length 0..max_length.
inline std::vector<BigInt> brute_counts_by_length(const std::vector<Word>& omega, std::size_t n,
                                                  std::size_t max_length) {
  return brute_counts_by_degree(omega, Alphabet::standard(n), max_length);
}

/// Number of walks with exactly k edges, k = 0..max_edges.
inline std::vector<BigInt> walk_counts(const UfnarovskiGraph& g, std::size_t max_edges) {
  std::vector<BigInt> at(g.vertices.size(), 1), out;
  for (std::size_t k = 0; k <= max_edges; ++k) {
    BigInt total = 0;
    for (const auto& v : at) total += v;
    out.push_back(total);
    std::vector<BigInt> next(g.vertices.size(), 0);
    for (const auto& e : g.edges) next[e.to] += at[e.from];
    at = std::move(next);
  }
  return out;
}

struct Random {
  std::mt19937 gen;
  explicit Random(unsigned seed) : gen(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Word word(std::size_t n, std::size_t min_len, std::size_t max_len) {
    std::vector<Letter> letters(uniform(min_len, max_len));
    for (auto& a : letters) a = static_cast<Letter>(uniform(0, n - 1));
    return Word(std::move(letters));
  }

  Scalar scalar() {
    long num = static_cast<long>(uniform(1, 9)) * (coin() ? 1 : -1);
    long den = static_cast<long>(uniform(1, 4));
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  Alphabet alphabet(std::size_t min_n, std::size_t max_n, std::size_t max_weight) {
    std::size_t n = uniform(min_n, max_n);
    std::vector<std::uint32_t> weights(n);
    for (auto& w : weights) w = static_cast<std::uint32_t>(uniform(1, max_weight));
    return Alphabet::standard(n, weights);
  }

  MonomialOrder order(const Alphabet& alphabet) {
    std::vector<Letter> precedence(alphabet.size());
    for (std::size_t i = 0; i < precedence.size(); ++i) precedence[i] = static_cast<Letter>(i);
    std::shuffle(precedence.begin(), precedence.end(), gen);
    auto kind = coin() ? OrderKind::graded_lex : OrderKind::graded_reverse_lex;
    return MonomialOrder(alphabet, kind, std::move(precedence));
  }

  Polynomial polynomial(std::size_t n, std::size_t max_terms, std::size_t max_len) {
    Polynomial p;
    while (p.is_zero()) {
      std::size_t terms = uniform(1, max_terms);
      for (std::size_t i = 0; i < terms; ++i) p.add_term(word(n, 0, max_len), scalar());
    }
    return p;
  }

  /// A basis that always passes verification: either one relation whose
  /// leading word x_b^k x_a has no self-overlap, plus random lower terms, or the
  /// skew commutation relations x_j x_i - q_ij x_i x_j on three letters.
  GroebnerBasis groebner_basis() {
    if (coin()) {
      Alphabet a = Alphabet::standard(3);
      std::vector<Polynomial> rels;
      for (Letter i = 0; i < 3; ++i)
        for (Letter j = i + 1; j < 3; ++j) {
          Polynomial r = Polynomial::monomial(Word{j, i});
          r.add_term(Word{i, j}, -scalar());
          rels.push_back(r);
        }
      return GroebnerBasis(rels, MonomialOrder::graded_lex(a));
    }
    Alphabet a = alphabet(2, 3, 2);
    MonomialOrder ord = order(a);
    Letter x = static_cast<Letter>(uniform(0, a.size() - 1));
    Letter y = static_cast<Letter>((x + uniform(1, a.size() - 1)) % a.size());
    Word lead = Word::power(y, uniform(1, 3)) * Word::letter(x);
    Polynomial r = Polynomial::monomial(lead);
    for (std::size_t i = uniform(0, 4); i > 0; --i) {
      Word w = word(a.size(), 0, lead.size() + 1);
      if (ord.less(w, lead)) r.add_term(w, scalar());
    }
    return GroebnerBasis({r}, ord);
  }

  /// Reduced monomial set: 1..4 members of length 1..4, over `n` letters.
  MonomialSet omega(std::size_t n) {
    std::vector<Word> ws;
    std::size_t count = uniform(1, 4);
    for (std::size_t i = 0; i < count; ++i) {
      // Length-1 members are kept rare so that most sets leave every letter alive.
      std::size_t min_len = uniform(0, 7) == 0 ? 1 : 2;
      ws.push_back(word(n, min_len, 4));
    }
    return MonomialSet::interreduce(ws);
  }
};

}  // namespace testing_support
