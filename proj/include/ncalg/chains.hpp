#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/dimension.hpp"
#include "ncalg/monomial_set.hpp"
#include "ncalg/scalar.hpp"
#include "ncalg/series.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Graph of chains of a reduced monomial set.
///
/// Vertices: 1, the letters and the proper suffixes of omega, sorted shortlex
/// (so the root 1 has index 0). The root points at every letter that is not
/// itself in omega. For u, v != 1 there is an edge u -> v iff exactly one
/// w in omega is a suffix of uv starting inside u and either uv = w or uv with
/// its last letter removed is normal.
struct ChainGraph {
  std::vector<Word> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
  std::vector<std::vector<std::size_t>> successors;
  /// Pairs (u, v) rejected because several members of omega qualified.
  std::vector<std::string> warnings;

  static constexpr std::size_t root = 0;
  std::optional<std::size_t> index_of(const Word& w) const;
};

ChainGraph build_chain_graph(const MonomialSet& omega, const Alphabet& alphabet);

struct Chain {
  Word word;
  std::vector<std::size_t> route;  // vertex indices after the root
  std::uint64_t degree = 0;        // weighted degree of `word`
};

struct ChainOptions {
  /// Levels enumerated when a cycle is reachable from the root.
  std::size_t max_level = 64;
  /// Total chains enumerated before giving up on further levels.
  std::size_t max_chains = 200000;
};

/// levels[i] is C_i (routes with i+1 edges from the root), i = 0, 1, ...
/// When `finite`, enumeration ran to the first empty level, which is not
/// stored. Otherwise levels were cut off by the options and `truncated` says
/// whether the chain budget ran out first.
struct ChainSets {
  std::vector<std::vector<Chain>> levels;
  bool finite = true;
  bool truncated = false;
};

ChainSets chain_sets(const ChainGraph& graph, const Alphabet& alphabet,
                     const ChainOptions& options = {});

/// min{m : C_m empty}, or infinity when a cycle is reachable from the root.
Dimension global_dimension(const ChainSets& chains);
Dimension global_dimension_monomial(const MonomialSet& omega, const Alphabet& alphabet);

struct HilbertSeries {
  /// D(t) with series 1/D; present exactly when the chains are finite.
  std::optional<IntPoly> denominator;
  std::vector<BigInt> coefficients;
  bool closed_form = false;
};

/// 1 - sum_{i>=0} (-1)^i H_{C_i}(t).
IntPoly chain_denominator(const ChainSets& chains);

/// `terms` coefficients (degrees 0..terms-1). With finite chains they come from
/// 1/D and are cross-checked against count_normal_words (CrossCheckError on
/// mismatch); otherwise they come from count_normal_words alone.
HilbertSeries hilbert_series(const ChainSets& chains, const MonomialSet& omega,
                             const Alphabet& alphabet, std::size_t terms);
HilbertSeries hilbert_series(const MonomialSet& omega, const Alphabet& alphabet,
                             std::size_t terms, const ChainOptions& options = {});

std::string emit_dot(const ChainGraph& graph, const Alphabet& alphabet);

}  // namespace ncalg
