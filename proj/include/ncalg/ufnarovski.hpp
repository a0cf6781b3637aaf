#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/dimension.hpp"
#include "ncalg/monomial_set.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Growth graph of a monomial algebra K<X>/<omega>.
///
/// Vertices are the normal words of length ell-1 (ell = longest member of
/// omega, or 1 when omega is empty), sorted shortlex. There is an edge
/// v -> w labeled a whenever v*a is normal and v*a = b*w for a letter b.
/// With ell = 1 the only vertex is 1 and every live letter gives a loop.
struct UfnarovskiGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Letter label;
  };

  std::size_t ell = 1;
  std::vector<Word> vertices;
  std::vector<Edge> edges;
  /// Edge indices leaving / entering each vertex.
  std::vector<std::vector<std::size_t>> out_edges;
  std::vector<std::vector<std::size_t>> in_edges;

  std::optional<std::size_t> index_of(const Word& w) const;
  /// Successor vertex lists (with repetition for parallel edges).
  std::vector<std::vector<std::size_t>> successors() const;
};

UfnarovskiGraph build_ufnarovski(const MonomialSet& omega, const Alphabet& alphabet);

enum class GrowthKind { polynomial, exponential };

struct GrowthClass {
  GrowthKind kind = GrowthKind::polynomial;
  std::size_t degree = 0;  // meaningful for polynomial growth only

  static GrowthClass polynomial(std::size_t m) { return {GrowthKind::polynomial, m}; }
  static GrowthClass exponential() { return {GrowthKind::exponential, 0}; }
  bool is_polynomial() const noexcept { return kind == GrowthKind::polynomial; }
  std::string to_string() const;
  friend bool operator==(const GrowthClass&, const GrowthClass&) = default;
};

/// Two distinct closed walks through a common vertex, as edge index lists
/// starting at `vertex`.
struct CycleWitness {
  std::size_t vertex;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

struct GrowthAnalysis {
  GrowthClass growth;
  std::optional<CycleWitness> witness;  // present iff growth is exponential
};

GrowthAnalysis analyze_growth(const UfnarovskiGraph& graph);

inline GrowthClass classify_growth(const UfnarovskiGraph& graph) {
  return analyze_growth(graph).growth;
}

/// Both walks are closed, start at the witness vertex, use existing edges
/// and differ.
bool verify_witness(const UfnarovskiGraph& graph, const CycleWitness& witness);

Dimension gk_dimension(const MonomialSet& omega, const Alphabet& alphabet);

std::string emit_dot(const UfnarovskiGraph& graph, const Alphabet& alphabet);

}  // namespace ncalg
