#include "ncalg/digraph.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace ncalg {

std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& successors, std::size_t& component_count) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = successors.size();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), component(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  component_count = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = successors[f.vertex];
      if (f.edge < out.size()) {
        std::size_t w = out[f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.vertex] = std::min(low[f.vertex], index[w]);
        }
        continue;
      }
      std::size_t v = f.vertex;
      call.pop_back();
      if (!call.empty()) low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = component_count;
        } while (w != v);
        ++component_count;
      }
    }
  }
  return component;
}

bool reaches_cycle(const std::vector<std::vector<std::size_t>>& successors, std::size_t root) {
  // 0 = unseen, 1 = on the current path, 2 = finished
  std::vector<int> state(successors.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
  state[root] = 1;
  while (!call.empty()) {
    auto& [v, e] = call.back();
    if (e < successors[v].size()) {
      std::size_t w = successors[v][e++];
      if (state[w] == 1) return true;
      if (state[w] == 0) {
        state[w] = 1;
        call.push_back({w, 0});
      }
      continue;
    }
    state[v] = 2;
    call.pop_back();
  }
  return false;
}

namespace {
std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string render_dot(std::string_view name, const std::vector<std::string>& labels,
                       std::vector<DotEdge> edges) {
  std::sort(edges.begin(), edges.end(), [](const DotEdge& a, const DotEdge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  std::string out = "digraph " + std::string(name) + " {\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=" + quote(labels[i]) + "];\n";
  for (const auto& e : edges) {
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to);
    if (!e.label.empty()) out += " [label=" + quote(e.label) + "]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace ncalg
