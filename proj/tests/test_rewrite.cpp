#include <gtest/gtest.h>

#include "ncalg/errors.hpp"
#include "ncalg/factor_automaton.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/monomial_set.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace testing_support;

namespace {

const Alphabet kTwo = Alphabet::standard(2);

GroebnerBasis basis(const Alphabet& a, std::initializer_list<std::string_view> relations,
                    MonomialOrder order) {
  std::vector<Polynomial> elements;
  for (auto r : relations) elements.push_back(poly(a, r));
  return GroebnerBasis(elements, std::move(order));
}

GroebnerBasis down_up(const Scalar& alpha, const Scalar& beta, const Scalar& lambda,
                      const Scalar& gamma) {
  Word x1{0}, x2{1};
  Polynomial g1 = Polynomial::monomial(x1 * x1 * x2);
  g1.add_term(x1 * x2 * x1, -alpha);
  g1.add_term(x2 * x1 * x1, -beta);
  g1.add_term(x2 * x1, -lambda);
  g1.add_term(x1, -gamma);
  Polynomial g2 = Polynomial::monomial(x1 * x2 * x2);
  g2.add_term(x2 * x1 * x2, -alpha);
  g2.add_term(x2 * x2 * x1, -beta);
  g2.add_term(x2 * x2, -lambda);
  g2.add_term(x2, -gamma);
  return GroebnerBasis({g1, g2}, MonomialOrder(kTwo, OrderKind::graded_lex, {1, 0}));
}

}  // namespace

TEST(IsNormal, Examples) {
  auto omega = MonomialSet::from_reduced(words(kTwo, {"x1^2*x2", "x1*x2^2"}));
  EXPECT_TRUE(is_normal(Word{}, omega));
  EXPECT_TRUE(is_normal(word(kTwo, "x2*x1^2"), omega));
  EXPECT_FALSE(is_normal(word(kTwo, "x1^2*x2^2"), omega));
}

TEST(Interreduce, Examples) {
  EXPECT_EQ(MonomialSet::interreduce(words(kTwo, {"x1", "x2*x1"})).words(), words(kTwo, {"x1"}));
  EXPECT_EQ(MonomialSet::interreduce(words(kTwo, {"x2*x1", "x2*x1"})).words(),
            words(kTwo, {"x2*x1"}));
  EXPECT_EQ(MonomialSet::interreduce(words(kTwo, {"x1^2*x2", "x1*x2^2", "x1^2*x2^2"})).words(),
            words(kTwo, {"x1^2*x2", "x1*x2^2"}));
  EXPECT_THROW(MonomialSet::interreduce({Word{}}), ValidationError);
  EXPECT_THROW(MonomialSet::from_reduced(words(kTwo, {"x1", "x2*x1"})), ValidationError);
}

TEST(Interreduce, RandomSetsAreAntichainsGeneratingTheSameIdeal) {
  Random rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> input;
    for (std::size_t i = rng.uniform(1, 6); i > 0; --i) input.push_back(rng.word(3, 1, 4));
    auto omega = MonomialSet::interreduce(input);
    for (const Word& u : omega.words())
      for (const Word& v : omega.words())
        if (u != v) EXPECT_FALSE(v.has_factor(u));
    for (const Word& w : input) {
      bool covered = false;
      for (const Word& u : omega.words()) covered = covered || w.has_factor(u);
      EXPECT_TRUE(covered);
    }
  }
}

TEST(FactorAutomaton, LeftmostLongestOccurrence) {
  std::vector<Word> patterns = words(kTwo, {"x1", "x1*x2", "x2*x2"});
  FactorAutomaton automaton(patterns, 2);
  auto occ = automaton.leftmost(word(kTwo, "x2*x1*x2*x2"));
  ASSERT_TRUE(occ.has_value());
  EXPECT_EQ(occ->start, 1u);
  EXPECT_EQ(occ->pattern, 1u);
  EXPECT_EQ(automaton.occurrences(word(kTwo, "x2*x1*x2*x2")).size(), 3u);
  EXPECT_FALSE(automaton.matches_any(word(kTwo, "x2")));
}

TEST(GroebnerBasis, RejectsNonReducedAndZero) {
  MonomialOrder order = MonomialOrder::graded_lex(kTwo);
  try {
    basis(kTwo, {"x1 + 1", "x1*x2"}, order);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("x1*x2"), std::string::npos);
  }
  EXPECT_THROW(basis(kTwo, {"x1 - x1"}, order), ValidationError);
}

TEST(GroebnerBasis, ElementsAreMadeMonic) {
  auto g = basis(kTwo, {"2*x2*x1 - 4*x1"}, MonomialOrder::graded_lex(kTwo));
  EXPECT_EQ(g.elements()[0], poly(kTwo, "x2*x1 - 2*x1"));
}

TEST(NormalForm, Examples) {
  auto g = basis(kTwo, {"x2*x1 - x1*x2"}, MonomialOrder::graded_lex(kTwo));
  EXPECT_EQ(normal_form(poly(kTwo, "x2*x1*x2"), g), poly(kTwo, "x1*x2^2"));
  EXPECT_TRUE(normal_form(g.elements()[0], g).is_zero());
  EXPECT_EQ(normal_form(poly(kTwo, "x2^2*x1"), g), poly(kTwo, "x1*x2^2"));
  EXPECT_EQ(normal_form(poly(kTwo, "3"), g), poly(kTwo, "3"));
}

TEST(NormalForm, LeadingWordStrictlyDrops) {
  auto g = basis(kTwo, {"x2*x1 - 2*x1*x2 - x1"}, MonomialOrder::graded_lex(kTwo));
  Polynomial f = poly(kTwo, "x2*x1*x2");
  Polynomial nf = normal_form(f, g);
  EXPECT_TRUE(g.order().less(leading_word(nf, g.order()), leading_word(f, g.order())));
}

TEST(Overlaps, Examples) {
  auto down = down_up(1, 1, 0, 1);
  auto overlaps = overlap_ambiguities(down);
  ASSERT_EQ(overlaps.size(), 1u);
  EXPECT_EQ(overlaps[0].word, word(kTwo, "x1^2*x2^2"));
  EXPECT_EQ(overlaps[0].left, 0u);
  EXPECT_EQ(overlaps[0].right, 1u);

  auto commute = basis(kTwo, {"x2*x1"}, MonomialOrder::graded_lex(kTwo));
  EXPECT_TRUE(overlap_ambiguities(commute).empty());

  Alphabet one = Alphabet::standard(1);
  auto square = basis(one, {"x1^2"}, MonomialOrder::graded_lex(one));
  auto self = overlap_ambiguities(square);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].word, word(one, "x1^3"));
}

TEST(Overlaps, MatchBruteForceEnumeration) {
  Random rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto omega = rng.omega(2);
    std::vector<Polynomial> elements;
    for (const Word& w : omega.words()) elements.push_back(Polynomial::monomial(w));
    GroebnerBasis g(elements, MonomialOrder::graded_lex(kTwo));
    std::size_t expected = 0;
    for (const Word& a : omega.words())
      for (const Word& b : omega.words())
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k)
          if (a.suffix(k) == b.prefix(k)) ++expected;
    EXPECT_EQ(overlap_ambiguities(g).size(), expected);
  }
}

TEST(Verify, PositiveExamples) {
  auto down = down_up(1, 1, 0, 1);
  auto result = verify_groebner(down);
  EXPECT_TRUE(result.ok);
  EXPECT_TRUE(down.verified());

  auto ex3 = basis(kTwo, {"x2^2*x1 - 2*x1*x2^2 - x1"}, MonomialOrder::graded_lex(kTwo));
  EXPECT_TRUE(verify_groebner(ex3).ok);

  Alphabet one = Alphabet::standard(1);
  auto idem = basis(one, {"x1^2 - x1"}, MonomialOrder::graded_lex(one));
  EXPECT_TRUE(verify_groebner(idem).ok);
  EXPECT_TRUE(s_element(overlap_ambiguities(idem)[0], idem).is_zero());
}

TEST(Verify, CounterexampleIsReported) {
  Alphabet one = Alphabet::standard(1);
  auto bad = basis(one, {"x1^2 - 1"}, MonomialOrder::graded_lex(one));
  EXPECT_TRUE(verify_groebner(bad).ok);

  // x1*x2 -> x2 and x2*x2 -> x1: the overlap x1*x2*x2 gives x2*x2 vs x1*x1.
  auto g = basis(kTwo, {"x1*x2 - x2", "x2^2 - x1"}, MonomialOrder::graded_lex(kTwo));
  auto result = verify_groebner(g);
  ASSERT_FALSE(result.ok);
  ASSERT_TRUE(result.counterexample.has_value());
  EXPECT_FALSE(result.counterexample->remainder.is_zero());
  EXPECT_FALSE(g.verified());
}

TEST(CountNormalWords, Examples) {
  Alphabet one = Alphabet::standard(1);
  EXPECT_EQ(count_normal_words(MonomialSet{}, one, 3), (std::vector<BigInt>{1, 1, 1, 1}));
  auto m1 = MonomialSet::from_reduced(words(kTwo, {"x2*x1"}));
  EXPECT_EQ(count_normal_words(m1, kTwo, 3), (std::vector<BigInt>{1, 2, 3, 4}));
  auto m2 = MonomialSet::from_reduced(words(kTwo, {"x2^2*x1"}));
  EXPECT_EQ(count_normal_words(m2, kTwo, 4), (std::vector<BigInt>{1, 2, 4, 7, 12}));
}

TEST(CountNormalWords, MatchesBruteForceOnRandomSets) {
  Random rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Alphabet a = rng.alphabet(2, 3, 3);
    auto omega = rng.omega(a.size());
    EXPECT_EQ(count_normal_words(omega, a, 8), brute_counts_by_degree(omega.words(), a, 8));
  }
}

TEST(Properties, NormalFormIdempotentAndLinear) {
  Random rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = rng.groebner_basis();
    ASSERT_TRUE(verify_groebner(g).ok);
    const std::size_t n = g.alphabet().size();
    Polynomial f = rng.polynomial(n, 5, 5), h = rng.polynomial(n, 5, 5);
    Scalar c = rng.scalar();
    Polynomial nf = normal_form(f, g);
    EXPECT_EQ(normal_form(nf, g), nf);
    EXPECT_EQ(normal_form(f + h, g), nf + normal_form(h, g));
    EXPECT_EQ(normal_form(c * f, g), c * nf);
    for (const auto& [w, coeff] : nf.terms()) EXPECT_TRUE(is_normal(w, g.obstruction_set()));
  }
}

TEST(Properties, NormalWordsAreExactlyTheFixedPoints) {
  auto g = down_up(1, 1, 0, 1);
  ASSERT_TRUE(verify_groebner(g).ok);
  Random rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = rng.word(2, 0, 6);
    EXPECT_EQ(is_normal(w, g.obstruction_set()),
              normal_form(Polynomial::monomial(w), g) == Polynomial::monomial(w));
  }
}
