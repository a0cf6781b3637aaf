#include "ncalg/analysis.hpp"

#include <stdexcept>

#include "ncalg/errors.hpp"

namespace ncalg {

bool pbw_check(const GroebnerBasis& basis) {
  std::vector<Word> expected;
  const auto n = static_cast<Letter>(basis.alphabet().size());
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j) expected.push_back(Word{j, i});
  return basis.obstruction_set() == MonomialSet::interreduce(expected);
}

std::string describe_counterexample(const Counterexample& c, const GroebnerBasis& basis) {
  const auto& alphabet = basis.alphabet();
  return "overlap of relations " + std::to_string(c.ambiguity.left + 1) + " and " +
         std::to_string(c.ambiguity.right + 1) + " at " + alphabet.format(c.ambiguity.word) +
         " leaves the nonzero remainder " + format_polynomial(c.remainder, basis.order());
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw CrossCheckError(message);
}

}  // namespace

AnalysisReport analyze(const Presentation& presentation, const AnalysisOptions& options) {
  AnalysisReport r(presentation);
  const Alphabet& alphabet = presentation.alphabet;
  GroebnerBasis basis = presentation.basis();

  auto verification = verify_groebner(basis);
  r.ambiguities_checked = verification.ambiguities_checked;
  if (!verification.ok)
    throw VerificationFailure("relations do not form a Groebner basis: " +
                              describe_counterexample(*verification.counterexample, basis));
  r.gb_verified = true;

  r.omega = basis.obstruction_set();
  for (const Word& w : r.omega.words())
    if (w.size() == 1)
      r.warnings.push_back("variable " + alphabet.format(w) +
                           " is a leading word; it never occurs in normal words and is left "
                           "out of the chains");

  r.ufnarovski = build_ufnarovski(r.omega, alphabet);
  r.growth = analyze_growth(r.ufnarovski);
  if (r.growth.witness)
    require(verify_witness(r.ufnarovski, *r.growth.witness), "exponential growth witness is invalid");

  r.chain_graph = build_chain_graph(r.omega, alphabet);
  r.warnings.insert(r.warnings.end(), r.chain_graph.warnings.begin(), r.chain_graph.warnings.end());
  r.chains = chain_sets(r.chain_graph, alphabet, options.chains);
  r.gldim_monomial = global_dimension(r.chains);
  if (r.chains.truncated)
    r.warnings.push_back("chain enumeration stopped at the chain budget");
  r.hilbert = hilbert_series(r.chains, r.omega, alphabet, options.terms);

  if (r.growth.growth.is_polynomial() && r.hilbert.denominator) {
    try {
      r.product_form = product_form_decomposition(*r.hilbert.denominator, r.growth.growth.degree);
    } catch (const std::invalid_argument&) {
      r.product_form.reset();
    }
  }

  for (const Polynomial& g : basis.elements())
    r.lh_basis.push_back(leading_homogeneous(g, alphabet));
  {
    GroebnerBasis lh(r.lh_basis, basis.order());
    require(lh.leading_words() == basis.leading_words(),
            "leading homogeneous parts changed a leading word");
    require(verify_groebner(lh).ok, "leading homogeneous parts do not form a Groebner basis");
  }

  r.rees = tilde_basis(basis);
  r.warnings.insert(r.warnings.end(), r.rees->warnings.begin(), r.rees->warnings.end());
  r.rees_invariants = rees_invariants(*r.rees, options.terms, options.chains);
  const ReesInvariants& inv = r.rees_invariants;
  for (const auto& e : inv.decomposition_errors) r.warnings.push_back("Rees chains: " + e);
  require(inv.decomposition_holds, "Rees chains do not split as C_i + C_(i-1)*T");
  require(inv.no_edge_from_t, "Rees chain graph has an edge leaving T");
  require(inv.edge_to_t, "Rees chain graph misses an edge into T");
  require(inv.top_chains_end_in_t.value_or(true),
          "a top-level Rees chain does not end in T over a base chain");
  if (inv.denominator_relation && !*inv.denominator_relation)
    r.warnings.push_back("Rees series denominator differs from (1 - t) times the base denominator");

  r.applicable = r.growth.growth.is_polynomial() && r.gldim_monomial.is_finite();
  if (r.applicable) {
    const std::size_t m = r.growth.growth.degree;
    require(r.gldim_monomial.value() == m,
            "global dimension " + r.gldim_monomial.to_string() +
                " differs from the growth degree " + std::to_string(m));
    require(inv.gldim == Dimension::finite(m + 1), "Rees global dimension is not m+1");
    require(inv.growth.growth == GrowthClass::polynomial(m + 1), "Rees growth degree is not m+1");
    r.gldim_assoc_graded = m;
  }

  r.pbw = pbw_check(basis);
  if (r.pbw) {
    const std::size_t n = alphabet.size();
    require(r.gldim_monomial == Dimension::finite(n), "PBW presentation without gl.dim n");
    require(inv.gldim == Dimension::finite(n + 1), "PBW presentation without Rees gl.dim n+1");
  }
  return r;
}

}  // namespace ncalg
