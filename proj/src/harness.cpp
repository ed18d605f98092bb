#include "pdm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pdm/alternating.hpp"
#include "pdm/matching.hpp"
#include "pdm/pair_solver.hpp"

namespace pdm {

namespace {

// splitmix64; tiny, stateful and identical everywhere, which keeps corpora
// byte-reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(below(static_cast<int>(v.size())))];
  }

 private:
  std::uint64_t state_;
};

}  // namespace

std::string to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::s_forest:
      return "s_forest";
    case CorpusKind::s_graph:
      return "s_graph";
    case CorpusKind::exhaustive_stream:
      return "exhaustive_stream";
    default:
      return "random";
  }
}

std::string to_string(EdgePolicy p) {
  switch (p) {
    case EdgePolicy::none:
      return "none";
    case EdgePolicy::delta_only:
      return "delta_only";
    case EdgePolicy::random_b:
      return "random_b";
    case EdgePolicy::violate_a:
      return "violate_a";
    case EdgePolicy::violate_b:
      return "violate_b";
    default:
      return "violate_c_attempt";
  }
}

std::optional<CorpusKind> corpus_kind_from(const std::string& name) {
  for (CorpusKind k : {CorpusKind::s_forest, CorpusKind::s_graph,
                       CorpusKind::exhaustive_stream, CorpusKind::random})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::optional<EdgePolicy> edge_policy_from(const std::string& name) {
  for (EdgePolicy p :
       {EdgePolicy::none, EdgePolicy::delta_only, EdgePolicy::random_b,
        EdgePolicy::violate_a, EdgePolicy::violate_b,
        EdgePolicy::violate_c_attempt})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

namespace {

// Column of spanner vertices: offset + 0..4 is one side path, offset + 5..9
// the other, bridge between the midpoints.
std::vector<Edge> forest_edges(int k) {
  std::vector<Edge> edges;
  for (int s = 0; s < k; ++s) {
    int off = 10 * s;
    for (int side = 0; side < 2; ++side)
      for (int i = 0; i < 4; ++i)
        edges.emplace_back(off + 5 * side + i, off + 5 * side + i + 1);
    edges.emplace_back(off + 2, off + 7);
  }
  return edges;
}

SForest intended_forest(int k) {
  SForest f;
  for (int s = 0; s < k; ++s) {
    int off = 10 * s;
    f.spanners.push_back(canonical_embedding(SpannerEmbedding{
        {off + 0, off + 1, off + 2, off + 3, off + 4},
        {off + 5, off + 6, off + 7, off + 8, off + 9}}));
  }
  return f;
}

// Vertex helpers against the canonical forest layout above. Per spanner s:
// 1-vertices are offsets {0,4,5,9}, their 2-vertex neighbors {1,3,6,8} in
// the same order, bases {2,2,7,7}.
constexpr int kOneOff[4] = {0, 4, 5, 9};
constexpr int kTwoOff[4] = {1, 3, 6, 8};
constexpr int kBaseOff[4] = {2, 2, 7, 7};

struct PolicyResult {
  std::vector<Edge> extra;
  bool ok = true;
  std::string why;
};

PolicyResult apply_policy(EdgePolicy policy, int k, Rng& rng) {
  PolicyResult res;
  auto exists = [&](int a, int b) {
    Edge probe(a, b);
    for (const Edge& e : res.extra)
      if (e == probe) return true;
    // Forest edges per spanner.
    int sa = a / 10, sb = b / 10;
    if (sa != sb) return false;
    int ra = a % 10, rb = b % 10;
    if (ra > rb) std::swap(ra, rb);
    if (rb == ra + 1 && ra != 4) return true;  // side path edges
    return ra == 2 && rb == 7;                 // bridge
  };
  auto add = [&](int a, int b) { res.extra.emplace_back(a, b); };

  switch (policy) {
    case EdgePolicy::none:
      break;
    case EdgePolicy::delta_only: {
      for (int s = 0; s < k; ++s)
        for (int i = 0; i < 4; ++i)
          if (rng.below(2) == 1)
            add(10 * s + kOneOff[i], 10 * s + kBaseOff[i]);
      break;
    }
    case EdgePolicy::random_b: {
      // A few chords between non-1-vertices; such edges are never forest
      // edges or delta edges, so they all land in b.
      int want = 1 + rng.below(3);
      std::vector<int> pool;
      for (int s = 0; s < k; ++s)
        for (int r : {1, 2, 3, 6, 7, 8}) pool.push_back(10 * s + r);
      for (int tries = 0; want > 0 && tries < 64; ++tries) {
        int a = rng.pick(pool), b = rng.pick(pool);
        if (a == b || exists(a, b)) continue;
        add(a, b);
        --want;
      }
      break;
    }
    case EdgePolicy::violate_a: {
      int s = rng.below(k);
      int i = rng.below(4);
      int u = 10 * s + kOneOff[i];
      // Anything but u itself, its forest neighbor, and its base lands in
      // b while touching the 1-vertex u.
      std::vector<int> pool;
      for (int v = 0; v < 10 * k; ++v)
        if (v != u && v != 10 * s + kTwoOff[i] && v != 10 * s + kBaseOff[i])
          pool.push_back(v);
      for (int tries = 0; tries < 64; ++tries) {
        int w = rng.pick(pool);
        if (exists(u, w)) continue;
        add(u, w);
        return res;
      }
      res.ok = false;
      res.why = "no free endpoint for the violating edge";
      break;
    }
    case EdgePolicy::violate_b: {
      int s = rng.below(k);
      int i = rng.below(4);
      int u = 10 * s + kOneOff[i];
      int two = 10 * s + kTwoOff[i];
      int base = 10 * s + kBaseOff[i];
      add(u, base);  // delta edge at u
      std::vector<int> pool;
      for (int v = 0; v < 10 * k; ++v)
        if (v != two && v != u && v != base) pool.push_back(v);
      for (int tries = 0; tries < 64; ++tries) {
        int w = rng.pick(pool);
        if (exists(two, w)) continue;
        // Keep the b edge off 1-vertices so only (b) is at stake.
        if (w % 10 == 0 || w % 10 == 4 || w % 10 == 5 || w % 10 == 9) continue;
        add(two, w);
        return res;
      }
      res.ok = false;
      res.why = "no free endpoint for the b edge at the 2-vertex";
      break;
    }
    case EdgePolicy::violate_c_attempt: {
      // Close an l-b alternating 4-cycle through a 2-2 chord while the b
      // side stays bipartite. Within one spanner the forest bridge serves
      // as the 3-3 half; across spanners a chord between midpoints does.
      bool cross = k >= 2 && rng.below(2) == 1;
      if (!cross) {
        int s = rng.below(k);
        int v1 = 10 * s + (rng.below(2) == 0 ? 1 : 3);
        int v2 = 10 * s + (rng.below(2) == 0 ? 6 : 8);
        add(v1, v2);
      } else {
        int s = rng.below(k);
        int t = rng.below(k);
        while (t == s) t = rng.below(k);
        int side_s = rng.below(2), side_t = rng.below(2);
        int cs = 10 * s + (side_s == 0 ? 2 : 7);
        int ct = 10 * t + (side_t == 0 ? 2 : 7);
        int vs = 10 * s + (side_s == 0 ? (rng.below(2) == 0 ? 1 : 3)
                                       : (rng.below(2) == 0 ? 6 : 8));
        int vt = 10 * t + (side_t == 0 ? (rng.below(2) == 0 ? 1 : 3)
                                       : (rng.below(2) == 0 ? 6 : 8));
        add(cs, ct);
        add(vs, vt);
      }
      break;
    }
  }
  return res;
}

Graph random_graph(Rng& rng, int max_vertices, int max_edges) {
  int n = 2 + rng.below(std::max(1, max_vertices - 1));
  int want = 1 + rng.below(max_edges);
  std::vector<Edge> edges;
  for (int tries = 0; want > 0 && tries < 16 * max_edges; ++tries) {
    int a = rng.below(n), b = rng.below(n);
    if (a == b) continue;
    Edge e(a, b);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    --want;
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Corpus gen_corpus(const CorpusSpec& spec) {
  Corpus corpus;
  Rng rng(spec.seed);

  if (spec.kind == CorpusKind::exhaustive_stream) {
    std::ifstream in(spec.path);
    if (!in) throw DomainError("cannot open stream file: " + spec.path);
    std::string line;
    int idx = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      CorpusInstance inst{parse_graph6(line), {},
                          "stream[" + std::to_string(idx++) + "]"};
      corpus.instances.push_back(std::move(inst));
    }
    return corpus;
  }

  if (spec.kind == CorpusKind::random) {
    for (int i = 0; i < spec.count; ++i) {
      corpus.instances.push_back(
          {random_graph(rng, spec.max_vertices, spec.max_edges),
           {},
           "random[" + std::to_string(i) + "]"});
    }
    return corpus;
  }

  if (spec.k < 1) throw DomainError("spanner count must be at least 1");
  EdgePolicy policy =
      spec.kind == CorpusKind::s_forest ? EdgePolicy::none : spec.policy;

  for (int i = 0; i < spec.count; ++i) {
    std::string label = to_string(spec.kind) + "[" + std::to_string(i) +
                        "] k=" + std::to_string(spec.k) +
                        " policy=" + to_string(policy);
    PolicyResult extra = apply_policy(policy, spec.k, rng);
    if (!extra.ok) {
      corpus.warnings.push_back(label + " dropped: " + extra.why);
      continue;
    }
    std::vector<Edge> edges = forest_edges(spec.k);
    edges.insert(edges.end(), extra.extra.begin(), extra.extra.end());
    Graph g(10 * spec.k, std::move(edges));
    SForest f = intended_forest(spec.k);

    // Emitted instances must actually exhibit what the policy promises.
    EdgePartition part = classify_edges(g, f);
    bool valid = true;
    std::string why;
    switch (policy) {
      case EdgePolicy::violate_a:
        if (check_condition_a(g, f, part).verdict != Verdict::fail) {
          valid = false;
          why = "condition (a) did not fail";
        }
        break;
      case EdgePolicy::violate_b:
        if (check_condition_b(g, f, part).verdict != Verdict::fail) {
          valid = false;
          why = "condition (b) did not fail";
        }
        break;
      case EdgePolicy::violate_c_attempt: {
        ConditionReport c =
            check_condition_c(g, f, part, spec.caps.cycle_cap);
        if (c.verdict != Verdict::fail) {
          valid = false;
          why = "no alternating cycle with bipartite b part materialized";
        }
        break;
      }
      case EdgePolicy::random_b:
        for (const Edge& e : extra.extra) {
          int id = g.edge_id(e.u, e.v);
          if (!std::binary_search(part.b.begin(), part.b.end(), id)) {
            valid = false;
            why = "an added chord did not land in b";
          }
        }
        break;
      case EdgePolicy::delta_only:
        for (const Edge& e : extra.extra) {
          int id = g.edge_id(e.u, e.v);
          if (!std::binary_search(part.delta.begin(), part.delta.end(), id)) {
            valid = false;
            why = "an added chord did not land in delta";
          }
        }
        break;
      case EdgePolicy::none:
        break;
    }
    if (!valid) {
      corpus.warnings.push_back(label + " dropped: " + why);
      continue;
    }
    corpus.instances.push_back({std::move(g), std::move(f), label});
  }
  return corpus;
}

namespace {

std::string ratio_string(int b, int a) {
  if (a == 0) return "-";
  int d = std::gcd(b, a);
  return std::to_string(b / d) + "/" + std::to_string(a / d);
}

GraphRecord analyze_one(const Graph& g, const SweepChecks& checks,
                        const Caps& caps) {
  GraphRecord rec;
  rec.n = g.vertex_count();
  rec.m = g.edge_count();

  auto started = std::chrono::steady_clock::now();
  rec.beta = beta(g);
  PairSolution sol = solve(g);
  rec.lambda = sol.lambda;
  rec.alpha = sol.alpha;
  rec.ratio = ratio_string(rec.beta, rec.alpha);
  rec.ratio_extremal = 4 * rec.beta == 5 * rec.alpha;

  if (checks.ratio_bound) rec.ratio_bound_ok = 4 * rec.beta <= 5 * rec.alpha;
  if (checks.alpha_equals_beta) rec.alpha_equals_beta_ok = rec.alpha == rec.beta;
  if (checks.theorem) {
    TheoremVerdict v = verify_theorem(g, caps);
    rec.agreement = v.agreement;
    rec.every_forest = v.every_forest;
  }
  if (checks.lemmas) rec.lemma_verdict = lemma_suite(g, caps).overall;

  rec.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
  return rec;
}

void run_indexed(int total, int jobs, const std::function<void(int)>& work) {
  if (jobs <= 1) {
    for (int i = 0; i < total; ++i) work(i);
    return;
  }
  std::atomic<int> cursor{0};
  std::vector<std::thread> pool;
  int workers = std::min(jobs, total);
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = cursor.fetch_add(1); i < total; i = cursor.fetch_add(1))
        work(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

void sweep_into(VerificationReport& rep, const std::vector<std::string>& lines,
                const std::vector<const Graph*>& graphs,
                const SweepChecks& checks, const Caps& caps, int jobs) {
  int total = static_cast<int>(lines.size());
  rep.records.assign(static_cast<size_t>(total), {});
  run_indexed(total, jobs, [&](int i) {
    GraphRecord& rec = rep.records[static_cast<size_t>(i)];
    rec.index = i;
    Graph parsed;
    const Graph* g = graphs.empty() ? nullptr : graphs[static_cast<size_t>(i)];
    try {
      if (g == nullptr) {
        parsed = parse_graph6(lines[static_cast<size_t>(i)]);
        g = &parsed;
      }
      rec.graph6 = to_graph6(*g);
      rec.n = g->vertex_count();
      rec.m = g->edge_count();
      size_t isolated = isolated_vertices(*g).size();
      if (isolated > 0 && g->vertex_count() > 0) {
        rec.skipped =
            "isolated vertices (" + std::to_string(isolated) + ")";
        return;
      }
      rec = analyze_one(*g, checks, caps);
      rec.index = i;
      rec.graph6 = to_graph6(*g);
    } catch (const ParseError& err) {
      rec.graph6 = lines[static_cast<size_t>(i)];
      rec.error = err.what();
    } catch (const std::exception& err) {
      rec.error = err.what();
    }
  });
}

}  // namespace

void finalize_report(VerificationReport& rep) {
  std::sort(rep.records.begin(), rep.records.end(),
            [](const GraphRecord& x, const GraphRecord& y) {
              return x.index < y.index;
            });
  SweepSummary s;
  s.total = static_cast<int>(rep.records.size());
  for (const GraphRecord& r : rep.records) {
    if (!r.error.empty()) {
      ++s.parse_errors;
      continue;
    }
    if (!r.skipped.empty()) {
      ++s.skipped_isolated;
      continue;
    }
    ++s.analyzed;
    if (r.ratio_extremal) ++s.ratio_extremal_count;
    if (r.ratio_bound_ok && !*r.ratio_bound_ok) ++s.ratio_bound_violations;
    if (r.alpha_equals_beta_ok && !*r.alpha_equals_beta_ok) {
      ++s.alpha_neq_beta;
      if (s.alpha_neq_beta_min_vertices < 0 ||
          r.n < s.alpha_neq_beta_min_vertices)
        s.alpha_neq_beta_min_vertices = r.n;
      if (s.alpha_neq_beta_min_edges < 0 || r.m < s.alpha_neq_beta_min_edges)
        s.alpha_neq_beta_min_edges = r.m;
    }
    if (r.agreement && *r.agreement == Verdict::fail) ++s.agreement_failures;
    if (r.every_forest && *r.every_forest == Verdict::fail)
      ++s.every_forest_failures;
    if (r.lemma_verdict && *r.lemma_verdict == Verdict::fail)
      ++s.lemma_failures;
    bool inconclusive =
        (r.agreement && *r.agreement == Verdict::inconclusive) ||
        (r.every_forest && *r.every_forest == Verdict::inconclusive) ||
        (r.lemma_verdict && *r.lemma_verdict == Verdict::inconclusive);
    if (inconclusive) ++s.inconclusive;
  }
  rep.summary = s;
}

VerificationReport sweep_stream(std::istream& in, const SweepChecks& checks,
                                const Caps& caps, int jobs) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  VerificationReport rep;
  rep.campaign = "stream sweep";
  rep.config = {{"graphs", std::to_string(lines.size())},
                {"jobs", std::to_string(jobs)}};
  sweep_into(rep, lines, {}, checks, caps, jobs);
  finalize_report(rep);
  return rep;
}

VerificationReport sweep_corpus(const Corpus& corpus,
                                const SweepChecks& checks, const Caps& caps,
                                int jobs) {
  std::vector<std::string> lines;
  std::vector<const Graph*> graphs;
  for (const CorpusInstance& inst : corpus.instances) {
    lines.push_back(inst.label);
    graphs.push_back(&inst.graph);
  }
  VerificationReport rep;
  rep.campaign = "corpus sweep";
  rep.config = {{"instances", std::to_string(corpus.instances.size())},
                {"jobs", std::to_string(jobs)}};
  rep.warnings = corpus.warnings;
  sweep_into(rep, lines, graphs, checks, caps, jobs);
  finalize_report(rep);
  return rep;
}

LemmaReport lemma_suite(const Graph& g, const Caps& caps) {
  LemmaReport rep;
  Matching m = maximum_matching(g);
  OverlapSelection sel = select_m2_overlap(g, m, caps.m2_cap);
  if (sel.truncated) {
    rep.overall = Verdict::inconclusive;
    rep.witnesses.push_back("optimal pair enumeration truncated");
    return rep;
  }

  int b = m.size();
  bool extremal = 4 * b == 5 * solve(g).alpha;
  auto note = [&](Verdict& clause, const std::string& what) {
    clause = Verdict::fail;
    if (rep.witnesses.size() < 32) rep.witnesses.push_back(what);
  };

  for (const DisjointPair& p : sel.pairs) {
    ++rep.pairs_checked;
    Matching h = make_matching(g, p.h);
    Matching hp = make_matching(g, p.h_prime);
    AlternatingDecomposition mh = decompose(g, m, h);
    AlternatingDecomposition hhp = decompose(g, h, hp);

    std::string tag = "pair#" + std::to_string(rep.pairs_checked - 1);
    std::vector<std::vector<int>> y_keys;

    for (const Trail& path : mh.odd_paths_a) {
      ++rep.odd_paths_seen;
      if (path.length() < 5)
        note(rep.odd_path_length_ge5,
             tag + ": odd path of length " + std::to_string(path.length()));
      for (int f : {path.edges.front(), path.edges.back()}) {
        if (!std::binary_search(p.h_prime.begin(), p.h_prime.end(), f))
          note(rep.end_edges_in_h_prime,
               tag + ": end edge " + std::to_string(f) +
                   " not in the second matching");
        // Locate the even path of the (H, H') decomposition carrying f.
        bool found = false;
        for (const Trail& pf : hhp.even_paths) {
          if (pf.edges.front() == f || pf.edges.back() == f) {
            found = true;
            std::vector<int> key = canonical_edge_sequence(pf);
            if (std::find(y_keys.begin(), y_keys.end(), key) == y_keys.end())
              y_keys.push_back(key);
            if (extremal && pf.length() != 4)
              note(rep.extremal_lengths,
                   tag + ": hanging path of length " +
                       std::to_string(pf.length()) + ", expected 4");
            break;
          }
        }
        if (!found)
          note(rep.y_count, tag + ": end edge " + std::to_string(f) +
                                " is not the end of an even path");
      }
      if (extremal && path.length() != 5)
        note(rep.extremal_lengths, tag + ": odd path of length " +
                                       std::to_string(path.length()) +
                                       ", expected 5");
      for (int v : path.vertices)
        if (!hp.covers(v))
          note(rep.vertices_covered,
               tag + ": vertex " + std::to_string(v) +
                   " on an odd path misses the second matching");
    }

    int odd = static_cast<int>(mh.odd_paths_a.size());
    int deficit = b - h.size();
    if (odd != deficit)
      note(rep.y_count, tag + ": " + std::to_string(odd) +
                            " odd paths, expected " + std::to_string(deficit));
    if (static_cast<int>(y_keys.size()) != 2 * odd)
      note(rep.y_count, tag + ": |Y| = " + std::to_string(y_keys.size()) +
                            ", expected " + std::to_string(2 * odd));
  }

  for (Verdict v : {rep.end_edges_in_h_prime, rep.odd_path_length_ge5,
                    rep.vertices_covered, rep.y_count, rep.extremal_lengths})
    if (v == Verdict::fail) rep.overall = Verdict::fail;
  return rep;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const GraphRecord& r, bool include_timings) {
  ordered_json j;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  if (!r.skipped.empty()) {
    j["skipped"] = r.skipped;
    return j;
  }
  j["n"] = r.n;
  j["m"] = r.m;
  j["beta"] = r.beta;
  j["lambda"] = r.lambda;
  j["alpha"] = r.alpha;
  j["ratio"] = r.ratio;
  j["ratio_extremal"] = r.ratio_extremal;
  if (r.ratio_bound_ok) j["ratio_bound_ok"] = *r.ratio_bound_ok;
  if (r.alpha_equals_beta_ok)
    j["alpha_equals_beta_ok"] = *r.alpha_equals_beta_ok;
  if (r.agreement) j["agreement"] = to_string(*r.agreement);
  if (r.every_forest) j["every_forest"] = to_string(*r.every_forest);
  if (r.lemma_verdict) j["lemma_verdict"] = to_string(*r.lemma_verdict);
  if (include_timings) j["time_ms"] = r.time_ms;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_report(const VerificationReport& rep, ReportFormat fmt,
                        bool include_timings) {
  if (fmt == ReportFormat::json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["campaign"] = rep.campaign;
    ordered_json cfg;
    for (const auto& [key, value] : rep.config) cfg[key] = value;
    j["config"] = cfg;
    ordered_json sum;
    const SweepSummary& s = rep.summary;
    sum["total"] = s.total;
    sum["analyzed"] = s.analyzed;
    sum["parse_errors"] = s.parse_errors;
    sum["skipped_isolated"] = s.skipped_isolated;
    sum["ratio_bound_violations"] = s.ratio_bound_violations;
    sum["alpha_neq_beta"] = s.alpha_neq_beta;
    sum["alpha_neq_beta_min_vertices"] = s.alpha_neq_beta_min_vertices;
    sum["alpha_neq_beta_min_edges"] = s.alpha_neq_beta_min_edges;
    sum["ratio_extremal_count"] = s.ratio_extremal_count;
    sum["agreement_failures"] = s.agreement_failures;
    sum["every_forest_failures"] = s.every_forest_failures;
    sum["lemma_failures"] = s.lemma_failures;
    sum["inconclusive"] = s.inconclusive;
    j["summary"] = sum;
    j["warnings"] = rep.warnings;
    ordered_json records = ordered_json::array();
    for (const GraphRecord& r : rep.records)
      records.push_back(record_json(r, include_timings));
    j["records"] = records;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "index,graph6,status,n,m,beta,lambda,alpha,ratio,ratio_extremal,"
         "ratio_bound_ok,alpha_equals_beta_ok,agreement,every_forest,"
         "lemma_verdict";
  if (include_timings) out << ",time_ms";
  out << "\n";
  auto opt_bool = [](const std::optional<bool>& v) {
    return !v ? std::string() : (*v ? std::string("true") : std::string("false"));
  };
  auto opt_verdict = [](const std::optional<Verdict>& v) {
    return v ? to_string(*v) : std::string();
  };
  for (const GraphRecord& r : rep.records) {
    std::string status = !r.error.empty()    ? "error: " + r.error
                         : !r.skipped.empty() ? "skipped: " + r.skipped
                                              : "ok";
    out << r.index << ',' << csv_escape(r.graph6) << ',' << csv_escape(status);
    if (!r.error.empty() && r.n == 0) {
      out << ",,,,,,,,,,,";
      if (include_timings) out << ',';
      out << "\n";
      continue;
    }
    out << ',' << r.n << ',' << r.m;
    if (!r.skipped.empty() || !r.error.empty()) {
      out << ",,,,,,,,,";
      if (include_timings) out << ',';
      out << "\n";
      continue;
    }
    out << ',' << r.beta << ',' << r.lambda << ',' << r.alpha << ','
        << csv_escape(r.ratio) << ',' << (r.ratio_extremal ? "true" : "false")
        << ',' << opt_bool(r.ratio_bound_ok) << ','
        << opt_bool(r.alpha_equals_beta_ok) << ',' << opt_verdict(r.agreement)
        << ',' << opt_verdict(r.every_forest) << ','
        << opt_verdict(r.lemma_verdict);
    if (include_timings) out << ',' << r.time_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace pdm
