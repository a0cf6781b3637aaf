#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

struct DotEdge {
  std::size_t from;
  std::size_t to;
  std::string label;  // omitted from the output when empty
};

/// Tarjan's algorithm. Returns the component id of every vertex; ids are
/// numbered in reverse topological order of the condensation (a component's
/// successors always have smaller ids).
std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& successors, std::size_t& component_count);

/// True iff some vertex reachable from `root` lies on a directed cycle.
bool reaches_cycle(const std::vector<std::vector<std::size_t>>& successors, std::size_t root);

/// Graphviz text. Vertices are emitted in index order, edges sorted by
/// (from, to, label).
std::string render_dot(std::string_view name, const std::vector<std::string>& labels,
                       std::vector<DotEdge> edges);

}  // namespace ncalg
