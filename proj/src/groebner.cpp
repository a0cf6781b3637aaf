#include "ncalg/groebner.hpp"

#include <map>

#include "ncalg/errors.hpp"

namespace ncalg {

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order)
    : elements_(std::move(elements)), order_(std::move(order)) {
  const Alphabet& alphabet = order_.alphabet();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    Polynomial& g = elements_[i];
    if (g.is_zero()) throw ValidationError("relation " + std::to_string(i + 1) + " is zero");
    for (const auto& [w, c] : g.terms())
      for (Letter a : w)
        if (a >= alphabet.size()) throw ValidationError("relation uses an undeclared letter");
    auto [lm, lc] = leading_data(g, order_);
    g *= Scalar(1) / lc;
    leading_.push_back(lm);
  }
  for (std::size_t i = 0; i < leading_.size(); ++i) {
    for (std::size_t j = 0; j < leading_.size(); ++j) {
      if (i == j || !leading_[j].has_factor(leading_[i])) continue;
      throw ValidationError("relations " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " are not LM-reduced: leading word " +
                            alphabet.format(leading_[i]) + " divides " +
                            alphabet.format(leading_[j]));
    }
  }
  matcher_ = std::make_shared<const FactorAutomaton>(leading_, alphabet.size());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  const MonomialOrder& order = basis.order();
  std::map<Word, Scalar, MonomialOrder::Less> work(order.less_fn());
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);

  Polynomial result;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word w = top->first;
    Scalar c = top->second;
    work.erase(top);
    auto occ = basis.matcher().leftmost(w);
    if (!occ) {
      // Rewrites only ever produce smaller words, so this term is final.
      result.add_term(w, c);
      continue;
    }
    const Polynomial& g = basis.elements()[occ->pattern];
    const Word& lm = basis.leading_words()[occ->pattern];
    Word left = w.prefix(occ->start);
    Word right = w.drop_front(occ->start + lm.size());
    for (const auto& [u, d] : g.terms()) {
      if (u == lm) continue;
      Word v = left * u * right;
      Scalar delta = -c * d;
      auto [it, inserted] = work.try_emplace(v, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return result;
}

std::vector<OverlapAmbiguity> overlap_ambiguities(const GroebnerBasis& basis) {
  std::vector<OverlapAmbiguity> out;
  const auto& lms = basis.leading_words();
  for (std::size_t i = 0; i < lms.size(); ++i) {
    for (std::size_t j = 0; j < lms.size(); ++j) {
      const Word& a = lms[i];
      const Word& b = lms[j];
      std::size_t limit = std::min(a.size(), b.size());
      for (std::size_t k = 1; k < limit; ++k) {
        if (a.suffix(k) != b.prefix(k)) continue;
        Word tail = b.drop_front(k);
        Word head = a.drop_back(k);
        out.push_back({i, j, k, a * tail, head, tail});
      }
    }
  }
  return out;
}

Polynomial s_element(const OverlapAmbiguity& amb, const GroebnerBasis& basis) {
  return basis.elements()[amb.left].sandwich(Word{}, amb.tail) -
         basis.elements()[amb.right].sandwich(amb.head, Word{});
}

VerificationResult verify_groebner(GroebnerBasis& basis) {
  VerificationResult result;
  for (const auto& amb : overlap_ambiguities(basis)) {
    ++result.ambiguities_checked;
    Polynomial r = normal_form(s_element(amb, basis), basis);
    if (!r.is_zero()) {
      result.counterexample = Counterexample{amb, std::move(r)};
      basis.verified_ = false;
      return result;
    }
  }
  result.ok = true;
  basis.verified_ = true;
  return result;
}

}  // namespace ncalg
