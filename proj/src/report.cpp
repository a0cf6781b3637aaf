#include "ncalg/report.hpp"

#include <climits>

#include "json.hpp"
#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

using nlohmann::ordered_json;

ordered_json big(const BigInt& v) {
  if (v.fits_slong_p() && sizeof(long) >= 8) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json big_list(const std::vector<BigInt>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(big(v));
  return out;
}

ordered_json dimension(const Dimension& d) {
  return d.is_finite() ? ordered_json(d.value()) : ordered_json("infinity");
}

ordered_json words(const std::vector<Word>& ws, const Alphabet& alphabet) {
  ordered_json out = ordered_json::array();
  for (const Word& w : ws) out.push_back(alphabet.format(w));
  return out;
}

ordered_json growth(const GrowthClass& g) {
  ordered_json out;
  out["class"] = g.is_polynomial() ? "polynomial" : "exponential";
  out["degree"] = g.is_polynomial() ? ordered_json(g.degree) : ordered_json(nullptr);
  return out;
}

ordered_json hilbert(const HilbertSeries& h) {
  ordered_json out;
  out["denominator"] = h.denominator ? big_list(*h.denominator) : ordered_json(nullptr);
  out["coefficients"] = big_list(h.coefficients);
  out["closed_form"] = h.closed_form;
  return out;
}

ordered_json chains(const ChainSets& c, const Alphabet& alphabet) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : c.levels) {
    ordered_json l = ordered_json::array();
    for (const Chain& chain : level) l.push_back(alphabet.format(chain.word));
    levels.push_back(l);
  }
  ordered_json out;
  out["levels"] = levels;
  out["finite"] = c.finite;
  return out;
}

ordered_json optional_bool(const std::optional<bool>& b) {
  return b ? ordered_json(*b) : ordered_json(nullptr);
}

std::string conclusion(const AnalysisReport& r) {
  if (r.applicable) {
    std::size_t m = *r.gldim_assoc_graded;
    return "gl.dim G(A) = " + std::to_string(m) + " (exact); gl.dim Rees(A) = " +
           std::to_string(m + 1) + " (exact)";
  }
  if (!r.gldim_monomial.is_finite())
    return "gl.dim A <= gl.dim G(A) <= gl.dim K<X>/<LM(I)> = infinity (no finite bound)";
  std::size_t d = r.gldim_monomial.value();
  return "gl.dim A <= gl.dim G(A) <= gl.dim K<X>/<LM(I)> <= " + std::to_string(d) +
         "; gl.dim Rees(A) <= " + std::to_string(d + 1) + " (bounds only)";
}

std::string render_json(const AnalysisReport& r) {
  const Alphabet& alphabet = r.presentation.alphabet;
  const MonomialOrder& order = r.presentation.order;
  ordered_json j;
  j["gb_verified"] = r.gb_verified;
  j["ambiguities_checked"] = r.ambiguities_checked;
  ordered_json vars = ordered_json::array();
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    vars.push_back({{"name", alphabet.names()[i]}, {"weight", alphabet.weights()[i]}});
  j["variables"] = vars;
  ordered_json prec = ordered_json::array();
  for (Letter a : order.precedence()) prec.push_back(alphabet.name(a));
  j["order"] = {{"kind", std::string(to_string(order.kind()))}, {"precedence", prec}};
  j["omega"] = words(r.omega.words(), alphabet);
  j["growth"] = growth(r.growth.growth);
  j["gldim_monomial"] = dimension(r.gldim_monomial);
  j["applicable"] = r.applicable;
  j["gldim_assoc_graded"] =
      r.gldim_assoc_graded ? ordered_json(*r.gldim_assoc_graded) : ordered_json(nullptr);
  j["conclusion"] = conclusion(r);
  ordered_json lh = ordered_json::array();
  for (const auto& p : r.lh_basis) lh.push_back(format_polynomial(p, order));
  j["lh_basis"] = lh;
  j["hilbert"] = hilbert(r.hilbert);
  if (r.product_form) {
    j["product_form"] = *r.product_form;
  } else {
    j["product_form"] = nullptr;
  }
  j["chains"] = chains(r.chains, alphabet);

  ordered_json rees;
  if (r.rees) {
    const Alphabet& ext = r.rees->alphabet.extended;
    const MonomialOrder& ext_order = r.rees->tilde.order();
    const ReesInvariants& inv = r.rees_invariants;
    rees["variable"] = ext.name(r.rees->alphabet.t);
    ordered_json tilde = ordered_json::array();
    for (const auto& p : r.rees->tilde.elements()) tilde.push_back(format_polynomial(p, ext_order));
    rees["tilde_basis"] = tilde;
    rees["omega"] = words(inv.omega.words(), ext);
    rees["growth"] = growth(inv.growth.growth);
    rees["gldim"] = dimension(inv.gldim);
    rees["hilbert"] = hilbert(inv.hilbert);
    rees["chains"] = chains(inv.chains, ext);
    rees["decomposition"] = inv.decomposition_holds;
    rees["denominator_relation"] = optional_bool(inv.denominator_relation);
  }
  j["rees"] = rees;
  j["pbw"] = r.pbw;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string join_words(const std::vector<Word>& ws, const Alphabet& alphabet) {
  if (ws.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + alphabet.format(ws[i]);
  return out + "}";
}

std::string chain_lines(const ChainSets& c, const Alphabet& alphabet, const std::string& indent) {
  constexpr std::size_t kShown = 8;
  std::string out;
  for (std::size_t i = 0; i < c.levels.size() && (c.finite || i < kShown); ++i) {
    std::vector<Word> ws;
    for (const Chain& chain : c.levels[i]) ws.push_back(chain.word);
    out += indent + "C" + std::to_string(i) + " = " + join_words(ws, alphabet) + "\n";
  }
  if (c.finite)
    out += indent + "C" + std::to_string(c.levels.size()) + " = {} (and every later level)\n";
  else
    out += indent + "... (" + std::to_string(c.levels.size()) +
           " levels enumerated; a cycle is reachable from 1, so chains never vanish)\n";
  return out;
}

std::string series_line(const HilbertSeries& h) {
  std::string out;
  if (h.denominator) out = "1/(" + format_int_poly(*h.denominator) + ")";
  else out = "no closed form (chains are infinite)";
  out += "\n    coefficients:";
  for (const auto& c : h.coefficients) out += " " + c.get_str();
  return out + "\n";
}

std::string render_text(const AnalysisReport& r) {
  const Alphabet& alphabet = r.presentation.alphabet;
  const MonomialOrder& order = r.presentation.order;
  std::string out;
  out += "Groebner basis: verified (" + std::to_string(r.ambiguities_checked) +
         " overlaps checked, order " + std::string(to_string(order.kind())) + ")\n";
  out += "Obstruction set LM(G): " + join_words(r.omega.words(), alphabet) + "\n\n";

  out += "Step 1. Growth of K<X>/<LM(G)> from the Ufnarovski graph (" +
         std::to_string(r.ufnarovski.vertices.size()) + " vertices, " +
         std::to_string(r.ufnarovski.edges.size()) + " edges)\n";
  out += "    " + r.growth.growth.to_string() + "\n";
  if (r.growth.witness) {
    const auto& w = *r.growth.witness;
    out += "    two cycles share the vertex " + alphabet.format(r.ufnarovski.vertices[w.vertex]) +
           " (lengths " + std::to_string(w.first.size()) + " and " +
           std::to_string(w.second.size()) + ")\n";
  }
  out += "\nStep 2. Chains of LM(G)\n";
  out += chain_lines(r.chains, alphabet, "    ");
  out += "    gl.dim K<X>/<LM(G)> = " + r.gldim_monomial.to_string() + "\n";

  out += "\nStep 3. ";
  if (r.applicable) {
    std::size_t m = *r.gldim_assoc_graded;
    out += "Polynomial growth and finite global dimension both hold.\n";
    out += "    gl.dim G(A) = " + std::to_string(m) + " (exact)\n";
    out += "    gl.dim Rees(A) = " + std::to_string(m + 1) + " (exact)\n";
    out += "    GK dimension of Rees(A) = " + std::to_string(m + 1) + "\n";
  } else {
    out += "Not applicable (";
    out += r.growth.growth.is_polynomial() ? "" : "exponential growth";
    if (!r.growth.growth.is_polynomial() && !r.gldim_monomial.is_finite()) out += ", ";
    out += r.gldim_monomial.is_finite() ? "" : "infinite global dimension";
    out += "); bounds only:\n";
    if (r.gldim_monomial.is_finite()) {
      std::size_t d = r.gldim_monomial.value();
      out += "    gl.dim A <= gl.dim G(A) <= gl.dim K<X>/<LM(I)> <= " + std::to_string(d) + "\n";
      out += "    gl.dim Rees(A) <= " + std::to_string(d + 1) + "\n";
    } else {
      out += "    gl.dim A <= gl.dim G(A) <= gl.dim K<X>/<LM(I)> = infinity\n";
    }
  }
  out += "    (applicability is decided by polynomial growth and finite global dimension of\n"
         "    K<X>/<LM(G)>, in place of the absence of a free subalgebra on two generators)\n";

  out += "\nAssociated graded algebra G(A) = K<X>/<LH(G)>:\n";
  for (const auto& p : r.lh_basis) out += "    " + format_polynomial(p, order) + "\n";
  if (r.lh_basis.empty()) out += "    (no relations)\n";

  out += "\nHilbert series of G(A): " + series_line(r.hilbert);
  out += "Product form: ";
  if (r.product_form) {
    out += "prod 1/(1 - t^e) with e =";
    for (std::size_t e : *r.product_form) out += " " + std::to_string(e);
    if (r.product_form->empty()) out += " (empty)";
    out += "\n";
  } else {
    out += "none\n";
  }

  if (r.rees) {
    const Alphabet& ext = r.rees->alphabet.extended;
    const ReesInvariants& inv = r.rees_invariants;
    out += "\nRees algebra (homogenizing variable " + ext.name(r.rees->alphabet.t) + "):\n";
    for (const auto& p : r.rees->tilde.elements())
      out += "    " + format_polynomial(p, r.rees->tilde.order()) + "\n";
    out += "    LM: " + join_words(inv.omega.words(), ext) + "\n";
    out += "    growth: " + inv.growth.growth.to_string() + "\n";
    out += chain_lines(inv.chains, ext, "    ");
    out += "    gl.dim of the Rees monomial algebra = " + inv.gldim.to_string() + "\n";
    out += "    Hilbert series: " + series_line(inv.hilbert);
    if (inv.denominator_relation)
      out += std::string("    denominator equals (1 - t) times the base denominator: ") +
             (*inv.denominator_relation ? "yes" : "no") + " (empirical check)\n";
  }

  out += "\nPBW basis: " + std::string(r.pbw ? "yes" : "no") + "\n";
  if (!r.warnings.empty()) {
    out += "\nWarnings:\n";
    for (const auto& w : r.warnings) out += "    " + w + "\n";
  }
  return out;
}

std::string render_dot_bundle(const AnalysisReport& r) {
  std::string out = "// Ufnarovski graph\n" + emit_dot(r.ufnarovski, r.presentation.alphabet);
  out += "// chain graph\n" + emit_dot(r.chain_graph, r.presentation.alphabet);
  if (r.rees)
    out += "// Rees chain graph\n" +
           emit_dot(r.rees_invariants.chain_graph, r.rees->alphabet.extended);
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "text") return ReportFormat::text;
  if (text == "dot-bundle") return ReportFormat::dot_bundle;
  throw ValidationError("unknown report format '" + std::string(text) + "'");
}

std::string render_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return render_json(report);
    case ReportFormat::text:
      return render_text(report);
    case ReportFormat::dot_bundle:
      return render_dot_bundle(report);
  }
  throw ValidationError("unknown report format");
}

}  // namespace ncalg
