#include "ncalg/ufnarovski.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "ncalg/digraph.hpp"
#include "ncalg/factor_automaton.hpp"

namespace ncalg {

std::optional<std::size_t> UfnarovskiGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::vector<std::size_t>> UfnarovskiGraph::successors() const {
  std::vector<std::vector<std::size_t>> out(vertices.size());
  for (const auto& e : edges) out[e.from].push_back(e.to);
  return out;
}

UfnarovskiGraph build_ufnarovski(const MonomialSet& omega, const Alphabet& alphabet) {
  UfnarovskiGraph g;
  g.ell = omega.empty() ? 1 : omega.max_length();
  const auto& patterns = omega.words();
  FactorAutomaton automaton(patterns, alphabet.size());
  const auto n = static_cast<Letter>(alphabet.size());

  // Normal words are closed under prefixes, so extend level by level. Letters
  // are appended in ascending order, which keeps each level sorted.
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len + 1 < g.ell; ++len) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter a = 0; a < n; ++a) {
        Word ext = w * Word::letter(a);
        if (!automaton.matches_any(ext)) next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  g.vertices = std::move(level);
  g.out_edges.resize(g.vertices.size());
  g.in_edges.resize(g.vertices.size());

  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (Letter a = 0; a < n; ++a) {
      Word ext = g.vertices[i] * Word::letter(a);
      if (automaton.matches_any(ext)) continue;
      auto j = g.index_of(ext.drop_front(1));
      if (g.ell == 1) j = 0;
      if (!j) continue;
      g.out_edges[i].push_back(g.edges.size());
      g.in_edges[*j].push_back(g.edges.size());
      g.edges.push_back({i, *j, a});
    }
  return g;
}

std::string GrowthClass::to_string() const {
  return is_polynomial() ? "polynomial of degree " + std::to_string(degree) : "exponential";
}

namespace {

// Shortest edge path from `from` to `to` staying inside component `comp`.
std::vector<std::size_t> shortest_path(const UfnarovskiGraph& g,
                                       const std::vector<std::size_t>& component,
                                       std::size_t from, std::size_t to) {
  if (from == to) return {};
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(g.vertices.size(), kNone);
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_edges[v]) {
      std::size_t w = g.edges[e].to;
      if (seen[w] || component[w] != component[from]) continue;
      seen[w] = true;
      via[w] = e;
      if (w == to) {
        std::vector<std::size_t> path;
        for (std::size_t x = to; x != from; x = g.edges[via[x]].from) path.push_back(via[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

GrowthAnalysis analyze_growth(const UfnarovskiGraph& graph) {
  std::size_t count = 0;
  auto component = strongly_connected_components(graph.successors(), count);

  std::vector<bool> cyclic(count, false);
  for (const auto& e : graph.edges)
    if (component[e.from] == component[e.to]) cyclic[component[e.from]] = true;

  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    std::vector<std::size_t> inside;
    for (std::size_t e : graph.out_edges[v])
      if (component[graph.edges[e].to] == component[v]) inside.push_back(e);
    if (inside.size() < 2) continue;
    CycleWitness witness{v, {inside[0]}, {inside[1]}};
    for (auto* walk : {&witness.first, &witness.second}) {
      auto back = shortest_path(graph, component, graph.edges[walk->front()].to, v);
      walk->insert(walk->end(), back.begin(), back.end());
    }
    return {GrowthClass::exponential(), std::move(witness)};
  }

  // Tarjan numbers components so that successors have smaller ids.
  std::vector<std::size_t> best(count, 0);
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) members[component[v]].push_back(v);
  std::size_t m = 0;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t tail = 0;
    for (std::size_t v : members[c])
      for (std::size_t e : graph.out_edges[v]) {
        std::size_t d = component[graph.edges[e].to];
        if (d != c) tail = std::max(tail, best[d]);
      }
    best[c] = tail + (cyclic[c] ? 1 : 0);
    m = std::max(m, best[c]);
  }
  return {GrowthClass::polynomial(m), std::nullopt};
}

bool verify_witness(const UfnarovskiGraph& graph, const CycleWitness& witness) {
  auto closed = [&](const std::vector<std::size_t>& walk) {
    if (walk.empty()) return false;
    std::size_t at = witness.vertex;
    for (std::size_t e : walk) {
      if (e >= graph.edges.size() || graph.edges[e].from != at) return false;
      at = graph.edges[e].to;
    }
    return at == witness.vertex;
  };
  return witness.vertex < graph.vertices.size() && closed(witness.first) &&
         closed(witness.second) && witness.first != witness.second;
}

Dimension gk_dimension(const MonomialSet& omega, const Alphabet& alphabet) {
  auto growth = classify_growth(build_ufnarovski(omega, alphabet));
  return growth.is_polynomial() ? Dimension::finite(growth.degree) : Dimension::infinite();
}

std::string emit_dot(const UfnarovskiGraph& graph, const Alphabet& alphabet) {
  std::vector<std::string> labels;
  for (const Word& w : graph.vertices) labels.push_back(alphabet.format(w));
  std::vector<DotEdge> edges;
  for (const auto& e : graph.edges) edges.push_back({e.from, e.to, alphabet.name(e.label)});
  return render_dot("ufnarovski", labels, std::move(edges));
}

}  // namespace ncalg
