#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdm/characterization.hpp"
#include "pdm/graph.hpp"
#include "pdm/structure.hpp"

namespace pdm {

enum class CorpusKind { s_forest, s_graph, exhaustive_stream, random };
enum class EdgePolicy {
  none,
  delta_only,
  random_b,
  violate_a,
  violate_b,
  violate_c_attempt
};

std::string to_string(CorpusKind k);
std::string to_string(EdgePolicy p);
std::optional<CorpusKind> corpus_kind_from(const std::string& name);
std::optional<EdgePolicy> edge_policy_from(const std::string& name);

struct CorpusSpec {
  CorpusKind kind = CorpusKind::s_forest;
  int k = 1;           // spanners per instance
  EdgePolicy policy = EdgePolicy::none;
  int count = 1;       // instances to generate
  std::uint64_t seed = 0;
  Caps caps;
  // random kind only
  int max_vertices = 12;
  int max_edges = 16;
  // exhaustive_stream only
  std::string path;
};

struct CorpusInstance {
  Graph graph;
  SForest intended_forest;  // empty for random and stream kinds
  std::string label;
};

struct Corpus {
  std::vector<CorpusInstance> instances;
  // One entry per dropped or downgraded instance, never silent.
  std::vector<std::string> warnings;
};

// Deterministic: equal specs produce equal corpora, on any platform.
Corpus gen_corpus(const CorpusSpec& spec);

struct SweepChecks {
  bool ratio_bound = true;        // 4*beta <= 5*alpha
  bool alpha_equals_beta = false; // minimality sweeps below ten vertices
  bool theorem = false;           // characterization agreement
  bool lemmas = false;            // decomposition lemma suite
};

struct GraphRecord {
  int index = -1;  // position in the input
  std::string graph6;
  std::string error;    // parse or precondition failure, empty otherwise
  std::string skipped;  // reason this graph was not analyzed
  int n = 0, m = 0;
  int beta = 0, lambda = 0, alpha = 0;
  std::string ratio;  // reduced fraction, "-" when alpha is zero
  bool ratio_extremal = false;
  std::optional<bool> ratio_bound_ok;
  std::optional<bool> alpha_equals_beta_ok;
  std::optional<Verdict> agreement;
  std::optional<Verdict> every_forest;
  std::optional<Verdict> lemma_verdict;
  double time_ms = 0.0;
};

struct SweepSummary {
  int total = 0;
  int analyzed = 0;
  int parse_errors = 0;
  int skipped_isolated = 0;
  int ratio_bound_violations = 0;
  int alpha_neq_beta = 0;
  // Smallest offending sizes among alpha != beta graphs, -1 when none.
  int alpha_neq_beta_min_vertices = -1;
  int alpha_neq_beta_min_edges = -1;
  int ratio_extremal_count = 0;
  int agreement_failures = 0;
  int every_forest_failures = 0;
  int lemma_failures = 0;
  int inconclusive = 0;
};

struct VerificationReport {
  std::string campaign;
  std::vector<std::pair<std::string, std::string>> config;  // echoed settings
  std::vector<GraphRecord> records;
  SweepSummary summary;
  std::vector<std::string> warnings;
};

// Recomputes summary from records and restores input order.
void finalize_report(VerificationReport& rep);

// Runs the selected checks over a graph6 stream, one graph per line.
// Graphs with isolated vertices are recorded as skipped. jobs > 1 fans the
// per-graph work out to that many threads; output is unaffected.
VerificationReport sweep_stream(std::istream& in, const SweepChecks& checks,
                                const Caps& caps = {}, int jobs = 1);

// Same checks over an in-memory corpus.
VerificationReport sweep_corpus(const Corpus& corpus,
                                const SweepChecks& checks,
                                const Caps& caps = {}, int jobs = 1);

struct LemmaReport {
  Verdict overall = Verdict::pass;
  Verdict end_edges_in_h_prime = Verdict::pass;   // odd-path end edges
  Verdict odd_path_length_ge5 = Verdict::pass;
  Verdict vertices_covered = Verdict::pass;       // by the second matching
  Verdict y_count = Verdict::pass;                // |Y| = 2|MP_o| = 2(beta-alpha)
  Verdict extremal_lengths = Verdict::pass;       // only when 4*beta = 5*alpha
  int pairs_checked = 0;
  int odd_paths_seen = 0;
  std::vector<std::string> witnesses;
};

// Decomposition facts for the overlap-maximizing optimal pairs of a
// deterministic maximum matching. Inconclusive when enumeration truncates.
LemmaReport lemma_suite(const Graph& g, const Caps& caps = {});

enum class ReportFormat { json, csv };

std::string emit_report(const VerificationReport& rep, ReportFormat fmt,
                        bool include_timings = true);

}  // namespace pdm
