#include "cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "ncalg/analysis.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/presentation.hpp"
#include "ncalg/report.hpp"

namespace ncalg::cli {

namespace {

struct Settings {
  std::string file;
  std::size_t terms = 16;
  std::size_t max_chain_level = 64;
  std::string which = "uf";
  bool dot = false;
  std::string format = "json";
};

AnalysisReport run_analysis(const Settings& s) {
  AnalysisOptions options;
  options.terms = s.terms;
  options.chains.max_level = s.max_chain_level;
  return analyze(load_presentation(s.file), options);
}

std::string coefficients(const std::vector<BigInt>& cs) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? " " : "") + cs[i].get_str();
  return out;
}

void print_series(std::ostream& out, const std::string& label, const HilbertSeries& h) {
  out << label << " denominator: "
      << (h.denominator ? format_int_poly(*h.denominator) : std::string("none (chains are infinite)"))
      << "\n"
      << label << " coefficients: " << coefficients(h.coefficients) << "\n";
}

void print_chains(std::ostream& out, const ChainSets& chains, const Alphabet& alphabet) {
  for (std::size_t i = 0; i < chains.levels.size(); ++i) {
    out << "C" << i << ":";
    for (const Chain& c : chains.levels[i]) out << " " << alphabet.format(c.word);
    out << "\n";
  }
  out << (chains.finite ? "finite" : "infinite") << "\n";
}

int cmd_check_gb(const Settings& s, std::ostream& out) {
  GroebnerBasis basis = load_presentation(s.file).basis();
  auto result = verify_groebner(basis);
  if (!result.ok) {
    out << "not a Groebner basis: " << describe_counterexample(*result.counterexample, basis)
        << "\n";
    return kVerificationFailed;
  }
  out << "Groebner basis verified (" << result.ambiguities_checked << " overlaps checked)\n";
  return kOk;
}

int cmd_growth(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  const Alphabet& alphabet = r.presentation.alphabet;
  out << "growth: " << r.growth.growth.to_string() << "\n";
  out << "gk dimension: "
      << (r.growth.growth.is_polynomial() ? std::to_string(r.growth.growth.degree) : "infinity")
      << "\n";
  if (r.growth.witness) {
    const auto& w = *r.growth.witness;
    auto walk = [&](const std::vector<std::size_t>& edges) {
      std::string text = alphabet.format(r.ufnarovski.vertices[w.vertex]);
      for (std::size_t e : edges)
        text += " -> " + alphabet.format(r.ufnarovski.vertices[r.ufnarovski.edges[e].to]);
      return text;
    };
    out << "witness cycle 1: " << walk(w.first) << "\n";
    out << "witness cycle 2: " << walk(w.second) << "\n";
  }
  out << "rees growth: " << r.rees_invariants.growth.growth.to_string() << "\n";
  return kOk;
}

int cmd_gldim(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  print_chains(out, r.chains, r.presentation.alphabet);
  out << "gldim monomial: " << r.gldim_monomial.to_string() << "\n";
  out << "applicable: " << (r.applicable ? "true" : "false") << "\n";
  if (r.applicable) {
    out << "gldim associated graded: " << *r.gldim_assoc_graded << " (exact)\n";
    out << "gldim rees: " << *r.gldim_assoc_graded + 1 << " (exact)\n";
  } else if (r.gldim_monomial.is_finite()) {
    out << "gldim associated graded: <= " << r.gldim_monomial.value() << " (bound)\n";
    out << "gldim rees: <= " << r.gldim_monomial.value() + 1 << " (bound)\n";
  }
  return kOk;
}

int cmd_hilbert(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  print_series(out, "hilbert", r.hilbert);
  out << "product form: ";
  if (r.product_form) {
    for (std::size_t i = 0; i < r.product_form->size(); ++i)
      out << (i ? " " : "") << (*r.product_form)[i];
    out << "\n";
  } else {
    out << "none\n";
  }
  return kOk;
}

int cmd_rees(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  const auto& rees = *r.rees;
  const Alphabet& ext = rees.alphabet.extended;
  out << "tilde basis:\n";
  for (const auto& p : rees.tilde.elements())
    out << "  " << format_polynomial(p, rees.tilde.order()) << "\n";
  out << "growth: " << r.rees_invariants.growth.growth.to_string() << "\n";
  print_chains(out, r.rees_invariants.chains, ext);
  out << "gldim: " << r.rees_invariants.gldim.to_string() << "\n";
  print_series(out, "hilbert", r.rees_invariants.hilbert);
  return kOk;
}

int cmd_pbw(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  out << "pbw: " << (r.pbw ? "true" : "false") << "\n";
  if (r.pbw) {
    out << "gldim: " << r.gldim_monomial.to_string() << "\n";
    out << "rees gldim: " << r.rees_invariants.gldim.to_string() << "\n";
  }
  return kOk;
}

int cmd_graph(const Settings& s, std::ostream& out) {
  auto r = run_analysis(s);
  const Alphabet& base = r.presentation.alphabet;
  const Alphabet& ext = r.rees->alphabet.extended;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (s.which == "uf") {
    if (s.dot) {
      out << emit_dot(r.ufnarovski, base);
      return kOk;
    }
    for (const Word& w : r.ufnarovski.vertices) labels.push_back(base.format(w));
    for (const auto& e : r.ufnarovski.edges) edges.push_back({e.from, e.to});
  } else {
    const ChainGraph& g = s.which == "chains" ? r.chain_graph : r.rees_invariants.chain_graph;
    const Alphabet& alphabet = s.which == "chains" ? base : ext;
    if (s.dot) {
      out << emit_dot(g, alphabet);
      return kOk;
    }
    for (const Word& w : g.vertices) labels.push_back(alphabet.format(w));
    edges = g.edges;
  }
  std::sort(edges.begin(), edges.end());
  out << "vertices:";
  for (const auto& l : labels) out << " " << l;
  out << "\nedges:\n";
  for (auto [from, to] : edges) out << "  " << labels[from] << " -> " << labels[to] << "\n";
  return kOk;
}

int cmd_report(const Settings& s, std::ostream& out) {
  auto format = parse_report_format(s.format);
  out << render_report(run_analysis(s), format);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth, chains, Hilbert series and Rees algebras of graded presentations", "ncalg"};
  app.require_subcommand(1);
  Settings s;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", s.file, "presentation file (JSON)")->required();
    sub->add_option("--terms", s.terms, "number of Hilbert series coefficients");
    sub->add_option("--max-chain-level", s.max_chain_level,
                    "levels enumerated when chains are infinite");
    return sub;
  };
  auto* check = add("check-gb", "verify that the relations form a Groebner basis");
  auto* growth = add("growth", "growth class from the Ufnarovski graph");
  auto* gldim = add("gldim", "chains and global dimension");
  auto* hilbert = add("hilbert", "Hilbert series of the associated graded algebra");
  auto* rees = add("rees", "Rees algebra presentation and invariants");
  auto* pbw = add("pbw", "PBW criterion");
  auto* graph = add("graph", "print a graph");
  graph->add_option("--which", s.which, "uf, chains or rees-chains")
      ->check(CLI::IsMember({"uf", "chains", "rees-chains"}));
  graph->add_flag("--dot", s.dot, "Graphviz output");
  auto* report = add("report", "full analysis report");
  report->add_option("--format", s.format, "json, text or dot-bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check_gb(s, out);
    if (growth->parsed()) return cmd_growth(s, out);
    if (gldim->parsed()) return cmd_gldim(s, out);
    if (hilbert->parsed()) return cmd_hilbert(s, out);
    if (rees->parsed()) return cmd_rees(s, out);
    if (pbw->parsed()) return cmd_pbw(s, out);
    if (graph->parsed()) return cmd_graph(s, out);
    if (report->parsed()) return cmd_report(s, out);
  } catch (const IoError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kCrossCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCrossCheckFailed;
  }
  return kInputError;
}

}  // namespace ncalg::cli
