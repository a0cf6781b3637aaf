#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/alphabet.hpp"
#include "ncalg/chains.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/order.hpp"
#include "ncalg/polynomial.hpp"
#include "ncalg/ufnarovski.hpp"

namespace ncalg {

/// Base alphabet plus a homogenizing letter T of weight 1, appended last.
/// T is named "T" unless that name is taken, in which case underscores are
/// appended until it is free.
struct ExtendedAlphabet {
  Alphabet base;
  Alphabet extended;
  Letter t;

  explicit ExtendedAlphabet(const Alphabet& base_alphabet);
};

/// Same kind and precedence as `order`, with T below every base letter.
MonomialOrder extended_order(const MonomialOrder& order, const ExtendedAlphabet& ext);

/// LC(f)LM(f) + sum_i c_i T^(p - q_i) w_i, with p the degree of LM(f) and q_i
/// the degree of each lower word w_i. The result lives over ext.extended.
/// Throws std::invalid_argument on zero and std::logic_error if a lower term
/// outweighs the leading word.
Polynomial homogenize(const Polynomial& f, const MonomialOrder& order,
                      const ExtendedAlphabet& ext);

/// Deletes every occurrence of `t` and collects terms.
Polynomial dehomogenize(const Polynomial& f, Letter t);

/// X_i T - T X_i.
Polynomial commutator_with(Letter x, Letter t);

struct ReesPresentation {
  ExtendedAlphabet alphabet;
  GroebnerBasis source;
  GroebnerBasis tilde;
  std::vector<std::string> warnings;
};

/// Homogenizes every element of `basis` and appends the commutators X_i T - T X_i.
/// A commutator whose leading word X_i T would be divisible by a leading word
/// of `basis` (X_i itself is a leading word) is left out with a warning.
///
/// Runs verify_groebner on `basis` first if needed (VerificationFailure when it
/// fails). The new leading words and the Groebner property of the result are
/// checked; either failing raises CrossCheckError.
ReesPresentation tilde_basis(GroebnerBasis basis);

struct ReesInvariants {
  MonomialSet omega;
  ChainGraph chain_graph;
  GrowthAnalysis growth;
  ChainSets chains;
  Dimension gldim = Dimension::infinite();
  HilbertSeries hilbert;

  /// C~_i = C_i + C_{i-1}*T on every level enumerated on both sides.
  bool decomposition_holds = false;
  std::vector<std::string> decomposition_errors;
  /// No edge leaves T.
  bool no_edge_from_t = false;
  /// Every vertex ending in a live base letter has an edge to T.
  bool edge_to_t = false;
  /// Every top-level chain ends in T and drops to a base chain; only decided
  /// when the chains are finite.
  std::optional<bool> top_chains_end_in_t;
  /// D~ = (1 - t) D; only decided when both denominators exist.
  std::optional<bool> denominator_relation;
};

ReesInvariants rees_invariants(const ReesPresentation& rees, std::size_t terms,
                               const ChainOptions& options = {});

}  // namespace ncalg
