#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdm/characterization.hpp"
#include "pdm/harness.hpp"
#include "pdm/matching.hpp"
#include "pdm/pair_solver.hpp"
#include "pdm/structure.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes are a stable contract; keep in sync with the README.
constexpr int kExitPass = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInconclusive = 4;

// Lower rank wins when several exit reasons coexist in a batch.
int severity_rank(int code) {
  switch (code) {
    case kExitDisagreement:
      return 0;
    case kExitParse:
      return 1;
    case kExitPrecondition:
      return 2;
    case kExitInconclusive:
      return 3;
    default:
      return 4;
  }
}

void escalate(int& current, int code) {
  if (severity_rank(code) < severity_rank(current)) current = code;
}

struct CommonOpts {
  std::string input = "-";
  std::string format = "graph6";
  std::size_t m2_cap = 1000000;
  std::size_t cycle_cap = 100000;
  std::size_t forest_cap = 10000;
  std::string out;
  std::string output_format = "human";
  int jobs = 1;

  pdm::Caps caps() const { return {forest_cap, cycle_cap, m2_cap}; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  if (with_input)
    cmd->add_option("--input", o.input, "input file, or - for stdin");
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--m2-cap", o.m2_cap, "optimal-pair enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cycle-cap", o.cycle_cap, "alternating-cycle cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--forest-cap", o.forest_cap, "spanning-forest cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "write output here instead of stdout");
  cmd->add_option("--output-format", o.output_format, "report format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--jobs", o.jobs, "worker threads for batch commands")
      ->check(CLI::PositiveNumber);
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One raw item per graph: graph6 yields one item per nonempty line, an edge
// list is a single whole-file item.
std::vector<std::string> read_items(const CommonOpts& o) {
  std::string text;
  if (o.input == "-") {
    text = slurp(std::cin);
  } else {
    std::ifstream f(o.input);
    if (!f) throw pdm::DomainError("cannot open input: " + o.input);
    text = slurp(f);
  }
  if (o.format == "edgelist") return {text};
  std::vector<std::string> items;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) items.push_back(line);
  }
  return items;
}

pdm::Graph parse_item(const std::string& item, const CommonOpts& o) {
  if (o.format == "edgelist") return pdm::parse_edge_list(item);
  return pdm::parse_graph6(item);
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw pdm::DomainError("cannot open output: " + o.out);
  f << text;
}

std::string ratio_string(int b, int a) {
  if (a == 0) return "-";
  int d = std::gcd(b, a);
  return std::to_string(b / d) + "/" + std::to_string(a / d);
}

std::string human_record(const pdm::GraphRecord& r) {
  std::ostringstream out;
  out << "[" << r.index << "] " << r.graph6;
  if (!r.error.empty()) {
    out << "  error: " << r.error << "\n";
    return out.str();
  }
  if (!r.skipped.empty()) {
    out << "  skipped: " << r.skipped << "\n";
    return out.str();
  }
  out << "  n=" << r.n << " m=" << r.m << " beta=" << r.beta
      << " lambda=" << r.lambda << " alpha=" << r.alpha << " ratio=" << r.ratio
      << (r.ratio_extremal ? " extremal" : "");
  if (r.ratio_bound_ok)
    out << " ratio_bound=" << (*r.ratio_bound_ok ? "ok" : "VIOLATED");
  if (r.alpha_equals_beta_ok)
    out << " alpha=beta:" << (*r.alpha_equals_beta_ok ? "yes" : "NO");
  if (r.agreement) out << " agreement=" << pdm::to_string(*r.agreement);
  if (r.every_forest)
    out << " every_forest=" << pdm::to_string(*r.every_forest);
  if (r.lemma_verdict)
    out << " lemmas=" << pdm::to_string(*r.lemma_verdict);
  out << "\n";
  return out.str();
}

void emit(const CommonOpts& o, pdm::VerificationReport& rep) {
  pdm::finalize_report(rep);
  if (o.output_format == "json") {
    write_output(o, pdm::emit_report(rep, pdm::ReportFormat::json));
    return;
  }
  if (o.output_format == "csv") {
    write_output(o, pdm::emit_report(rep, pdm::ReportFormat::csv));
    return;
  }
  std::ostringstream out;
  for (const pdm::GraphRecord& r : rep.records) out << human_record(r);
  const pdm::SweepSummary& s = rep.summary;
  out << "total=" << s.total << " analyzed=" << s.analyzed
      << " errors=" << s.parse_errors << " skipped=" << s.skipped_isolated
      << " extremal=" << s.ratio_extremal_count << "\n";
  for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
  write_output(o, out.str());
}

int cmd_analyze(const CommonOpts& o) {
  std::vector<std::string> items = read_items(o);
  pdm::VerificationReport rep;
  rep.campaign = "analyze";
  rep.config = {{"input", o.input}, {"format", o.format}};
  int exit_code = kExitPass;
  for (std::size_t i = 0; i < items.size(); ++i) {
    pdm::GraphRecord rec;
    rec.index = static_cast<int>(i);
    try {
      pdm::Graph g = parse_item(items[i], o);
      rec.graph6 = pdm::to_graph6(g);
      rec.n = g.vertex_count();
      rec.m = g.edge_count();
      std::size_t isolated = pdm::isolated_vertices(g).size();
      if (isolated > 0) {
        rec.skipped = "has " + std::to_string(isolated) +
                      " isolated vertices; analysis assumes graphs without "
                      "isolated vertices";
        escalate(exit_code, kExitPrecondition);
      } else {
        rec.beta = pdm::beta(g);
        pdm::PairSolution sol = pdm::solve(g);
        rec.lambda = sol.lambda;
        rec.alpha = sol.alpha;
        rec.ratio = ratio_string(rec.beta, rec.alpha);
        rec.ratio_extremal = 4 * rec.beta == 5 * rec.alpha;
      }
    } catch (const pdm::ParseError& err) {
      rec.graph6 = items[i].substr(0, 80);
      rec.error = err.what();
      escalate(exit_code, kExitParse);
    } catch (const pdm::DomainError& err) {
      rec.error = err.what();
      escalate(exit_code, kExitPrecondition);
    }
    rep.records.push_back(std::move(rec));
  }
  emit(o, rep);
  return exit_code;
}

int cmd_check(const CommonOpts& o) {
  std::vector<std::string> items = read_items(o);
  pdm::VerificationReport rep;
  rep.campaign = "check";
  rep.config = {{"input", o.input}, {"format", o.format}};
  int exit_code = kExitPass;
  for (std::size_t i = 0; i < items.size(); ++i) {
    pdm::GraphRecord rec;
    rec.index = static_cast<int>(i);
    try {
      pdm::Graph g = parse_item(items[i], o);
      rec.graph6 = pdm::to_graph6(g);
      rec.n = g.vertex_count();
      rec.m = g.edge_count();
      pdm::TheoremVerdict v = pdm::verify_theorem(g, o.caps());
      rec.beta = v.beta;
      rec.lambda = v.lambda;
      rec.alpha = v.alpha;
      rec.ratio = ratio_string(v.beta, v.alpha);
      rec.ratio_extremal = v.ratio_extremal;
      rec.agreement = v.agreement;
      rec.every_forest = v.every_forest;
      if (v.agreement == pdm::Verdict::fail ||
          v.every_forest == pdm::Verdict::fail)
        escalate(exit_code, kExitDisagreement);
      else if (v.agreement == pdm::Verdict::inconclusive ||
               v.every_forest == pdm::Verdict::inconclusive)
        escalate(exit_code, kExitInconclusive);
    } catch (const pdm::ParseError& err) {
      rec.graph6 = items[i].substr(0, 80);
      rec.error = err.what();
      escalate(exit_code, kExitParse);
    } catch (const pdm::DomainError& err) {
      rec.error = err.what();
      escalate(exit_code, kExitPrecondition);
    } catch (const pdm::SizeError& err) {
      rec.error = err.what();
      escalate(exit_code, kExitPrecondition);
    }
    rep.records.push_back(std::move(rec));
  }
  emit(o, rep);
  return exit_code;
}

int cmd_lemmas(const CommonOpts& o) {
  std::vector<std::string> items = read_items(o);
  std::ostringstream human;
  ordered_json records = ordered_json::array();
  int exit_code = kExitPass;
  for (std::size_t i = 0; i < items.size(); ++i) {
    ordered_json j;
    j["index"] = i;
    try {
      pdm::Graph g = parse_item(items[i], o);
      std::string g6 = pdm::to_graph6(g);
      j["graph6"] = g6;
      if (!pdm::isolated_vertices(g).empty())
        throw pdm::DomainError("graph has isolated vertices");
      pdm::LemmaReport rep = pdm::lemma_suite(g, o.caps());
      j["overall"] = pdm::to_string(rep.overall);
      j["end_edges_in_h_prime"] = pdm::to_string(rep.end_edges_in_h_prime);
      j["odd_path_length_ge5"] = pdm::to_string(rep.odd_path_length_ge5);
      j["vertices_covered"] = pdm::to_string(rep.vertices_covered);
      j["y_count"] = pdm::to_string(rep.y_count);
      j["extremal_lengths"] = pdm::to_string(rep.extremal_lengths);
      j["pairs_checked"] = rep.pairs_checked;
      j["odd_paths_seen"] = rep.odd_paths_seen;
      j["witnesses"] = rep.witnesses;
      human << "[" << i << "] " << g6 << "  overall="
            << pdm::to_string(rep.overall)
            << " pairs=" << rep.pairs_checked
            << " odd_paths=" << rep.odd_paths_seen << "\n";
      for (const std::string& w : rep.witnesses)
        human << "    " << w << "\n";
      if (rep.overall == pdm::Verdict::fail)
        escalate(exit_code, kExitDisagreement);
      else if (rep.overall == pdm::Verdict::inconclusive)
        escalate(exit_code, kExitInconclusive);
    } catch (const pdm::ParseError& err) {
      j["error"] = err.what();
      human << "[" << i << "] error: " << err.what() << "\n";
      escalate(exit_code, kExitParse);
    } catch (const pdm::DomainError& err) {
      j["error"] = err.what();
      human << "[" << i << "] error: " << err.what() << "\n";
      escalate(exit_code, kExitPrecondition);
    }
    records.push_back(std::move(j));
  }
  if (o.output_format == "json") {
    ordered_json out;
    out["schema_version"] = 1;
    out["campaign"] = "lemmas";
    out["records"] = records;
    write_output(o, out.dump(2) + "\n");
  } else {
    write_output(o, human.str());
  }
  return exit_code;
}

struct CorpusOpts {
  std::string kind = "s_forest";
  int k = 1;
  std::string policy = "none";
  int count = 1;
  std::uint64_t seed = 0;
  int max_vertices = 12;
  int max_edges = 16;
  std::string stream;
};

void add_corpus(CLI::App* cmd, CorpusOpts& c) {
  cmd->add_option("--kind", c.kind, "corpus kind")
      ->check(CLI::IsMember({"s_forest", "s_graph", "exhaustive_stream",
                             "random"}));
  cmd->add_option("--k", c.k, "spanners per instance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--policy", c.policy, "extra-edge policy for s_graph")
      ->check(CLI::IsMember({"none", "delta_only", "random_b", "violate_a",
                             "violate_b", "violate_c_attempt"}));
  cmd->add_option("--count", c.count, "instances to generate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "corpus seed");
  cmd->add_option("--max-vertices", c.max_vertices,
                  "vertex budget for random graphs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-edges", c.max_edges, "edge budget for random graphs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--stream", c.stream,
                  "graph6 stream file for exhaustive sweeps");
}

pdm::CorpusSpec corpus_spec(const CorpusOpts& c, const CLI::App* cmd,
                            const pdm::Caps& caps) {
  pdm::CorpusSpec spec;
  std::optional<pdm::CorpusKind> kind = pdm::corpus_kind_from(c.kind);
  std::optional<pdm::EdgePolicy> policy = pdm::edge_policy_from(c.policy);
  if (!kind || !policy) throw pdm::DomainError("unknown corpus kind or policy");
  if ((*kind == pdm::CorpusKind::s_graph ||
       *kind == pdm::CorpusKind::random) &&
      cmd->count("--seed") == 0)
    throw pdm::DomainError("randomized corpora require --seed");
  spec.kind = *kind;
  spec.k = c.k;
  spec.policy = *policy;
  spec.count = c.count;
  spec.seed = c.seed;
  spec.caps = caps;
  spec.max_vertices = c.max_vertices;
  spec.max_edges = c.max_edges;
  spec.path = c.stream;
  if (spec.kind == pdm::CorpusKind::exhaustive_stream && spec.path.empty())
    throw pdm::DomainError("exhaustive_stream corpora require --stream");
  return spec;
}

int cmd_gen(const CommonOpts& o, const CorpusOpts& c, const CLI::App* cmd) {
  pdm::Corpus corpus = pdm::gen_corpus(corpus_spec(c, cmd, o.caps()));
  for (const std::string& w : corpus.warnings)
    std::cerr << "warning: " << w << "\n";
  if (o.output_format == "json") {
    ordered_json out;
    out["schema_version"] = 1;
    out["campaign"] = "gen";
    ordered_json arr = ordered_json::array();
    for (const pdm::CorpusInstance& inst : corpus.instances) {
      ordered_json j;
      j["label"] = inst.label;
      j["graph6"] = pdm::to_graph6(inst.graph);
      ordered_json forest = ordered_json::array();
      for (const pdm::SpannerEmbedding& e : inst.intended_forest.spanners) {
        ordered_json emb;
        emb["side1"] = e.side1;
        emb["side2"] = e.side2;
        forest.push_back(std::move(emb));
      }
      j["forest"] = forest;
      arr.push_back(std::move(j));
    }
    out["instances"] = arr;
    out["warnings"] = corpus.warnings;
    write_output(o, out.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const pdm::CorpusInstance& inst : corpus.instances)
      out << pdm::to_graph6(inst.graph) << "\n";
    write_output(o, out.str());
  }
  if (corpus.instances.empty() && c.count > 0)
    return kExitPrecondition;
  return kExitPass;
}

int cmd_verify(const CommonOpts& o, const CorpusOpts& c,
               const std::vector<std::string>& check_names,
               const CLI::App* cmd) {
  pdm::SweepChecks checks;
  checks.ratio_bound = false;
  if (check_names.empty()) checks.ratio_bound = true;
  for (const std::string& name : check_names) {
    if (name == "ratio-bound")
      checks.ratio_bound = true;
    else if (name == "alpha-beta")
      checks.alpha_equals_beta = true;
    else if (name == "theorem")
      checks.theorem = true;
    else if (name == "lemmas")
      checks.lemmas = true;
    else
      throw pdm::DomainError("unknown check: " + name);
  }

  pdm::VerificationReport rep;
  if (!c.stream.empty() && cmd->count("--kind") == 0) {
    std::ifstream in(c.stream);
    if (!in) throw pdm::DomainError("cannot open stream file: " + c.stream);
    rep = pdm::sweep_stream(in, checks, o.caps(), o.jobs);
    rep.campaign = "verify stream=" + c.stream;
  } else {
    pdm::Corpus corpus = pdm::gen_corpus(corpus_spec(c, cmd, o.caps()));
    rep = pdm::sweep_corpus(corpus, checks, o.caps(), o.jobs);
    rep.campaign = "verify kind=" + c.kind + " k=" + std::to_string(c.k) +
                   " policy=" + c.policy;
  }
  emit(o, rep);

  const pdm::SweepSummary& s = rep.summary;
  int exit_code = kExitPass;
  if (s.ratio_bound_violations > 0 || s.alpha_neq_beta > 0 ||
      s.agreement_failures > 0 || s.every_forest_failures > 0 ||
      s.lemma_failures > 0)
    escalate(exit_code, kExitDisagreement);
  if (s.parse_errors > 0) escalate(exit_code, kExitParse);
  if (s.inconclusive > 0) escalate(exit_code, kExitInconclusive);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  pdm::spanner_self_check();

  CLI::App app{"pair-of-disjoint-matchings analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  CorpusOpts c;
  std::vector<std::string> check_names;

  CLI::App* analyze =
      app.add_subcommand("analyze", "matching parameters per graph");
  add_common(analyze, o);

  CLI::App* check = app.add_subcommand(
      "check", "characterization agreement per graph");
  add_common(check, o);

  CLI::App* verify =
      app.add_subcommand("verify", "sweep a corpus or stream with checks");
  add_common(verify, o, false);
  add_corpus(verify, c);
  verify
      ->add_option("--checks", check_names,
                   "checks to run: ratio-bound, alpha-beta, theorem, lemmas")
      ->delimiter(',');

  CLI::App* gen = app.add_subcommand("gen", "generate a corpus");
  add_common(gen, o, false);
  add_corpus(gen, c);

  CLI::App* lemmas =
      app.add_subcommand("lemmas", "alternating-path lemma checks per graph");
  add_common(lemmas, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (check->parsed()) return cmd_check(o);
    if (verify->parsed()) return cmd_verify(o, c, check_names, verify);
    if (gen->parsed()) return cmd_gen(o, c, gen);
    if (lemmas->parsed()) return cmd_lemmas(o);
  } catch (const pdm::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  } catch (const pdm::SizeError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  } catch (const pdm::DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPass;
}
