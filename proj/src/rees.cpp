#include "ncalg/rees.hpp"

#include <algorithm>
#include <stdexcept>
#include <cstddef>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

std::string free_name(const Alphabet& base) {
  std::string name = "T";
  while (base.index_of(name)) name += "_";
  return name;
}

std::vector<Word> level_words(const std::vector<Chain>& level) {
  std::vector<Word> out;
  for (const Chain& c : level) out.push_back(c.word);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExtendedAlphabet::ExtendedAlphabet(const Alphabet& base_alphabet)
    : base(base_alphabet),
      extended(base_alphabet.with_letter(free_name(base_alphabet), 1)),
      t(static_cast<Letter>(base_alphabet.size())) {}

MonomialOrder extended_order(const MonomialOrder& order, const ExtendedAlphabet& ext) {
  std::vector<Letter> precedence{ext.t};
  precedence.insert(precedence.end(), order.precedence().begin(), order.precedence().end());
  return MonomialOrder(ext.extended, order.kind(), std::move(precedence), ext.t);
}

Polynomial homogenize(const Polynomial& f, const MonomialOrder& order,
                      const ExtendedAlphabet& ext) {
  auto [lead, coeff] = leading_data(f, order);
  const std::uint64_t p = order.degree(lead);
  Polynomial out;
  for (const auto& [w, c] : f.terms()) {
    std::uint64_t q = order.degree(w);
    if (q > p) throw std::logic_error("lower term outweighs the leading word");
    out.add_term(Word::power(ext.t, p - q) * w, c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& f, Letter t) {
  Polynomial out;
  for (const auto& [w, c] : f.terms()) {
    std::vector<Letter> kept;
    for (Letter a : w)
      if (a != t) kept.push_back(a);
    out.add_term(Word(std::move(kept)), c);
  }
  return out;
}

Polynomial commutator_with(Letter x, Letter t) {
  Polynomial out = Polynomial::monomial(Word{x, t});
  out.add_term(Word{t, x}, -1);
  return out;
}

ReesPresentation tilde_basis(GroebnerBasis basis) {
  if (!basis.verified()) {
    auto result = verify_groebner(basis);
    if (!result.ok) throw VerificationFailure("relations do not form a Groebner basis");
  }
  ExtendedAlphabet ext(basis.alphabet());
  MonomialOrder order = extended_order(basis.order(), ext);
  std::vector<Polynomial> elements;
  for (const Polynomial& g : basis.elements())
    elements.push_back(homogenize(g, basis.order(), ext));

  std::vector<std::string> warnings;
  std::vector<Word> expected = basis.leading_words();
  const auto& leading = basis.leading_words();
  for (std::size_t a = 0; a < ext.base.size(); ++a) {
    auto x = static_cast<Letter>(a);
    if (std::find(leading.begin(), leading.end(), Word::letter(x)) != leading.end()) {
      warnings.push_back("commutator " + ext.base.name(x) + "*" + ext.extended.name(ext.t) +
                         " - " + ext.extended.name(ext.t) + "*" + ext.base.name(x) +
                         " omitted: " + ext.base.name(x) + " is a leading word");
      continue;
    }
    elements.push_back(commutator_with(x, ext.t));
    expected.push_back(Word{x, ext.t});
  }

  GroebnerBasis tilde(std::move(elements), order);
  if (tilde.leading_words() != expected)
    throw CrossCheckError("homogenized basis has unexpected leading words");
  if (!verify_groebner(tilde).ok)
    throw CrossCheckError("homogenized basis is not a Groebner basis");
  return ReesPresentation{std::move(ext), std::move(basis), std::move(tilde), std::move(warnings)};
}

ReesInvariants rees_invariants(const ReesPresentation& rees, std::size_t terms,
                               const ChainOptions& options) {
  const Alphabet& alphabet = rees.alphabet.extended;
  const Letter t = rees.alphabet.t;
  const Word tw = Word::letter(t);
  ReesInvariants inv;
  inv.omega = rees.tilde.obstruction_set();
  inv.growth = analyze_growth(build_ufnarovski(inv.omega, alphabet));
  inv.chain_graph = build_chain_graph(inv.omega, alphabet);
  inv.chains = chain_sets(inv.chain_graph, alphabet, options);
  inv.gldim = global_dimension(inv.chains);
  inv.hilbert = hilbert_series(inv.chains, inv.omega, alphabet, terms);

  const MonomialSet base_omega = rees.source.obstruction_set();
  const ChainSets base =
      chain_sets(build_chain_graph(base_omega, rees.alphabet.base), rees.alphabet.base, options);

  // C~_i = C_i + C_{i-1} T, with C_{-1} = {1}.
  auto base_level = [&](std::ptrdiff_t i) -> std::vector<Word> {
    if (i < 0) return {Word{}};
    if (static_cast<std::size_t>(i) < base.levels.size()) return level_words(base.levels[i]);
    return {};
  };
  std::size_t compared = inv.chains.levels.size();
  if (!inv.chains.finite || !base.finite) {
    compared = std::min(inv.chains.levels.size(), base.levels.size());
    if (inv.chains.finite != base.finite)
      inv.decomposition_errors.push_back("finiteness of chains differs");
  } else if (inv.chains.levels.size() != base.levels.size() + 1) {
    inv.decomposition_errors.push_back("number of chain levels is not one more than the base");
  }
  for (std::size_t i = 0; i < compared; ++i) {
    std::vector<Word> want = base_level(static_cast<std::ptrdiff_t>(i));
    for (const Word& w : base_level(static_cast<std::ptrdiff_t>(i) - 1)) want.push_back(w * tw);
    std::sort(want.begin(), want.end());
    if (level_words(inv.chains.levels[i]) != want)
      inv.decomposition_errors.push_back("chain level " + std::to_string(i) + " differs");
  }
  inv.decomposition_holds = inv.decomposition_errors.empty();

  const ChainGraph& g = inv.chain_graph;
  const std::size_t t_vertex = *g.index_of(tw);
  inv.no_edge_from_t = g.successors[t_vertex].empty();
  inv.edge_to_t = true;
  for (std::size_t v = 1; v < g.vertices.size(); ++v) {
    const Word& w = g.vertices[v];
    if (w.back() == t || inv.omega.contains(Word::letter(w.back()))) continue;
    const auto& out = g.successors[v];
    if (std::find(out.begin(), out.end(), t_vertex) == out.end()) inv.edge_to_t = false;
  }

  if (inv.chains.finite && base.finite && !inv.chains.levels.empty()) {
    const std::size_t top = inv.chains.levels.size() - 1;
    std::vector<Word> below = base_level(static_cast<std::ptrdiff_t>(top) - 1);
    bool ok = true;
    for (const Chain& c : inv.chains.levels[top]) {
      if (c.route.back() != t_vertex) ok = false;
      else if (!std::binary_search(below.begin(), below.end(), c.word.drop_back(1))) ok = false;
    }
    inv.top_chains_end_in_t = ok;
  }

  if (inv.hilbert.denominator && base.finite)
    inv.denominator_relation =
        *inv.hilbert.denominator == multiply(chain_denominator(base), IntPoly{1, -1});
  return inv;
}

}  // namespace ncalg
