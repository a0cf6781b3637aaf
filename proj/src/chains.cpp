#include "ncalg/chains.hpp"

#include <algorithm>

#include "ncalg/digraph.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/factor_automaton.hpp"

namespace ncalg {

std::optional<std::size_t> ChainGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

ChainGraph build_chain_graph(const MonomialSet& omega, const Alphabet& alphabet) {
  ChainGraph g;
  g.vertices.push_back(Word{});
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    g.vertices.push_back(Word::letter(static_cast<Letter>(a)));
  for (const Word& w : omega.words())
    for (std::size_t k = 1; k < w.size(); ++k) g.vertices.push_back(w.suffix(k));
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());

  FactorAutomaton automaton(omega.words(), alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    Word x = Word::letter(static_cast<Letter>(a));
    if (!omega.contains(x)) g.edges.push_back({ChainGraph::root, *g.index_of(x)});
  }
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    for (std::size_t j = 1; j < g.vertices.size(); ++j) {
      const Word& u = g.vertices[i];
      const Word& v = g.vertices[j];
      Word uv = u * v;
      bool prefix_normal = !automaton.matches_any(uv.drop_back(1));
      std::vector<const Word*> accepted;
      for (const Word& w : omega.words()) {
        if (w.size() <= v.size() || w.size() > uv.size() || !uv.has_suffix(w)) continue;
        if (w.size() == uv.size() || prefix_normal) accepted.push_back(&w);
      }
      if (accepted.size() == 1) {
        g.edges.push_back({i, j});
      } else if (accepted.size() > 1) {
        std::string msg = "chain edge " + alphabet.format(u) + " -> " + alphabet.format(v) +
                          " dropped: several obstructions qualify (";
        for (std::size_t k = 0; k < accepted.size(); ++k)
          msg += (k ? ", " : "") + alphabet.format(*accepted[k]);
        g.warnings.push_back(msg + ")");
      }
    }
  std::sort(g.edges.begin(), g.edges.end());
  g.successors.resize(g.vertices.size());
  for (auto [from, to] : g.edges) g.successors[from].push_back(to);
  return g;
}

ChainSets chain_sets(const ChainGraph& graph, const Alphabet& alphabet,
                     const ChainOptions& options) {
  ChainSets out;
  out.finite = !reaches_cycle(graph.successors, ChainGraph::root);
  std::vector<Chain> level{Chain{}};
  std::size_t total = 0;
  while (true) {
    if (!out.finite && out.levels.size() >= options.max_level) break;
    std::vector<Chain> next;
    for (const Chain& c : level) {
      std::size_t at = c.route.empty() ? ChainGraph::root : c.route.back();
      for (std::size_t to : graph.successors[at]) {
        Chain ext = c;
        ext.word *= graph.vertices[to];
        ext.route.push_back(to);
        ext.degree = alphabet.degree(ext.word);
        next.push_back(std::move(ext));
      }
    }
    if (next.empty()) break;
    total += next.size();
    std::sort(next.begin(), next.end(),
              [](const Chain& a, const Chain& b) { return a.word < b.word; });
    out.levels.push_back(next);
    if (total > options.max_chains) {
      if (out.finite) throw Error("chain enumeration exceeded the chain budget");
      out.truncated = true;
      break;
    }
    level = std::move(next);
  }
  return out;
}

Dimension global_dimension(const ChainSets& chains) {
  return chains.finite ? Dimension::finite(chains.levels.size()) : Dimension::infinite();
}

Dimension global_dimension_monomial(const MonomialSet& omega, const Alphabet& alphabet) {
  return global_dimension(chain_sets(build_chain_graph(omega, alphabet), alphabet));
}

IntPoly chain_denominator(const ChainSets& chains) {
  IntPoly d{1};
  for (std::size_t i = 0; i < chains.levels.size(); ++i)
    for (const Chain& c : chains.levels[i]) {
      if (d.size() <= c.degree) d.resize(c.degree + 1, 0);
      // - (-1)^i t^deg
      if (i % 2 == 0)
        d[c.degree] -= 1;
      else
        d[c.degree] += 1;
    }
  trim(d);
  return d;
}

HilbertSeries hilbert_series(const ChainSets& chains, const MonomialSet& omega,
                             const Alphabet& alphabet, std::size_t terms) {
  HilbertSeries h;
  std::vector<BigInt> counted;
  if (terms > 0) counted = count_normal_words(omega, alphabet, terms - 1);
  if (!chains.finite) {
    h.coefficients = std::move(counted);
    return h;
  }
  h.denominator = chain_denominator(chains);
  h.closed_form = true;
  h.coefficients = expand_reciprocal(*h.denominator, terms);
  if (h.coefficients != counted)
    throw CrossCheckError("Hilbert series from chains disagrees with the normal-word count");
  return h;
}

HilbertSeries hilbert_series(const MonomialSet& omega, const Alphabet& alphabet,
                             std::size_t terms, const ChainOptions& options) {
  auto chains = chain_sets(build_chain_graph(omega, alphabet), alphabet, options);
  return hilbert_series(chains, omega, alphabet, terms);
}

std::string emit_dot(const ChainGraph& graph, const Alphabet& alphabet) {
  std::vector<std::string> labels;
  for (const Word& w : graph.vertices) labels.push_back(alphabet.format(w));
  std::vector<DotEdge> edges;
  for (auto [from, to] : graph.edges) edges.push_back({from, to, ""});
  return render_dot("chains", labels, std::move(edges));
}

}  // namespace ncalg
