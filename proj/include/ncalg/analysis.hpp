#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/chains.hpp"
#include "ncalg/groebner.hpp"
#include "ncalg/presentation.hpp"
#include "ncalg/rees.hpp"
#include "ncalg/ufnarovski.hpp"

namespace ncalg {

struct AnalysisOptions {
  std::size_t terms = 16;
  ChainOptions chains;
};

/// Everything derived from a verified presentation.
///
/// `applicable` holds when the monomial algebra K<X>/<omega> has polynomial
/// growth and finite global dimension. Only then are the exact values
/// gldim_assoc_graded (= m) and the Rees values m+1 asserted; otherwise the
/// report carries the chain of upper bounds ending in gldim_monomial.
struct AnalysisReport {
  explicit AnalysisReport(Presentation p) : presentation(std::move(p)) {}

  Presentation presentation;
  bool gb_verified = false;
  std::size_t ambiguities_checked = 0;
  MonomialSet omega;
  UfnarovskiGraph ufnarovski;
  GrowthAnalysis growth;
  ChainGraph chain_graph;
  ChainSets chains;
  Dimension gldim_monomial = Dimension::infinite();
  bool applicable = false;
  std::optional<std::size_t> gldim_assoc_graded;
  std::vector<Polynomial> lh_basis;
  HilbertSeries hilbert;
  std::optional<std::vector<std::size_t>> product_form;
  std::optional<ReesPresentation> rees;
  ReesInvariants rees_invariants;
  bool pbw = false;
  std::vector<std::string> warnings;
};

/// Verifies the presentation and runs every analysis step.
///
/// Throws ValidationError for relation sets that are not LM-reduced,
/// VerificationFailure (with the failing overlap) when the relations are not a
/// Groebner basis, and CrossCheckError when two independent computations
/// disagree.
AnalysisReport analyze(const Presentation& presentation, const AnalysisOptions& options = {});

/// interreduce(LM(G)) is exactly {X_j X_i : i < j} in declaration order.
bool pbw_check(const GroebnerBasis& basis);

/// Human-readable overlap failure.
std::string describe_counterexample(const Counterexample& c, const GroebnerBasis& basis);

}  // namespace ncalg
