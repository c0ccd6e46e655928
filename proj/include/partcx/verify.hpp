#pragma once

// Verification suites. Each suite checks one family of structural claims for
// a single n and yields one outcome; runs over several n are dispatched to a
// worker pool and merged in order of n.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "partcx/complex.hpp"
#include "partcx/homology.hpp"
#include "partcx/io.hpp"
#include "partcx/loops.hpp"
#include "partcx/nerve.hpp"
#include "partcx/oracle.hpp"
#include "partcx/reference.hpp"

namespace partcx {

enum class Suite {
  triangles,
  cliques,
  facets,
  cover,
  nerve,
  anchors,
  poset,
  closure,
  heights,
  loops,
  homology,
  euler
};

struct SuiteInfo {
  Suite suite;
  std::string_view name;
  int budget;  // largest n run without --ignore-budget
};

inline constexpr std::array<SuiteInfo, 12> suite_table{{
    {Suite::triangles, "triangles", 12},
    {Suite::cliques, "cliques", 10},
    {Suite::facets, "facets", 10},
    {Suite::cover, "cover", 10},
    {Suite::nerve, "nerve", 12},
    {Suite::anchors, "anchors", 10},
    {Suite::poset, "poset", 12},
    {Suite::closure, "closure", 8},
    {Suite::heights, "heights", 14},
    {Suite::loops, "loops", 10},
    {Suite::homology, "homology", 14},
    {Suite::euler, "euler", 25},
}};

inline const SuiteInfo& suite_info(Suite s) {
  return suite_table[static_cast<std::size_t>(s)];
}

inline std::string_view to_string(Suite s) { return suite_info(s).name; }

/// Resolves a suite name; "all" expands to every suite.
inline std::vector<Suite> parse_suite(std::string_view name) {
  if (name == "all") {
    std::vector<Suite> all;
    for (const auto& info : suite_table) all.push_back(info.suite);
    return all;
  }
  for (const auto& info : suite_table) {
    if (info.name == name) return {info.suite};
  }
  throw Error(ErrorKind::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

struct RunConfig {
  int max_n = 1;
  std::vector<Suite> suites;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool ignore_budget = false;
  /// Random closed walks per n in the loops suite.
  int loop_walks = 1000;
  std::size_t loop_max_length = 40;
};

enum class Status { pass, fail, vacuous, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

struct Counterexample {
  std::string message;
  std::vector<Partition> partitions;
};

struct VerificationOutcome {
  Suite suite = Suite::euler;
  int n = 0;
  Status status = Status::pass;
  std::string detail;  // what was checked, or why the run was skipped
  std::optional<Counterexample> counterexample;
};

// ---------------------------------------------------------------------------
// Per-n workspace, shared across suites.

class Workspace {
 public:
  explicit Workspace(int n) : graph_(build_graph(n)) {}

  const PartitionGraph& graph() const { return graph_; }

  const NerveComplex& nerve() {
    if (!nerve_) nerve_.emplace(build_nerve(graph_));
    return *nerve_;
  }
  const std::vector<Simplex>& facets() {
    if (!facets_) facets_ = maximal_simplices(graph_);
    return *facets_;
  }
  const SimplexEnumeration& simplices() {
    if (!simplices_) {
      auto faces = all_faces(facets());
      FVector f = fvector_of(faces);
      simplices_ = SimplexEnumeration{std::move(f), std::move(faces)};
    }
    return *simplices_;
  }
  /// Brute-force clique list, independent of the classification code.
  const std::vector<Simplex>& oracle_cliques() {
    if (!cliques_) cliques_ = oracle::all_cliques(graph_);
    return *cliques_;
  }

 private:
  PartitionGraph graph_;
  std::optional<NerveComplex> nerve_;
  std::optional<std::vector<Simplex>> facets_;
  std::optional<SimplexEnumeration> simplices_;
  std::optional<std::vector<Simplex>> cliques_;
};

namespace detail {

struct SuiteFailure {
  Counterexample witness;
};

inline std::vector<Partition> partitions_of(const PartitionGraph& g,
                                            const std::vector<VertexId>& ids) {
  std::vector<Partition> out;
  for (VertexId v : ids) out.push_back(g.vertex(v));
  return out;
}

[[noreturn]] inline void fail(const PartitionGraph& g, std::string message,
                              const std::vector<VertexId>& ids = {}) {
  throw SuiteFailure{{std::move(message), partitions_of(g, ids)}};
}

inline std::string checked(std::size_t count, std::string_view what) {
  return "checked " + std::to_string(count) + " " + std::string(what);
}

// Result of a suite body: either a pass detail or "nothing to check".
struct Verdict {
  Status status;
  std::string detail;
};

inline Verdict pass_or_vacuous(std::size_t count, std::string_view what) {
  return {count == 0 ? Status::vacuous : Status::pass, checked(count, what)};
}

inline Verdict check_triangles(Workspace& ws) {
  const auto& g = ws.graph();
  if (g.edges() != oracle::conjugate_edges(g)) {
    fail(g, "transfer edges differ from the conjugate criterion");
  }
  std::size_t paths = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++paths;
        const bool typed = classify_triangle(g, v, nb[i], nb[j]).type != TriangleType::not_triangle;
        if (typed != g.adjacent(nb[i], nb[j])) {
          fail(g, typed ? "shared corner but not adjacent" : "adjacent without a shared corner",
               {nb[i], v, nb[j]});
        }
      }
    }
  }
  return pass_or_vacuous(paths, "paths");
}

inline Verdict check_cliques(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& cliques = ws.oracle_cliques();
  if (ws.simplices().simplices != cliques) {
    fail(g, "facet-subset enumeration differs from brute-force clique enumeration");
  }
  std::size_t large = 0;
  for (const auto& s : cliques) {
    std::set<std::int64_t> heights;
    for (VertexId v : s) heights.insert(g.height_of(v));
    if (heights.size() != s.size()) fail(g, "clique with repeated heights", s);
    if (s.size() < 3) continue;
    ++large;
    const auto c = classify_clique(g, s);
    const auto fiber = c.kind == CliqueKind::star ? star_fiber(g, c.base, *c.corner)
                                                  : top_fiber(g, c.base, *c.corner);
    if (!is_subset(s, detail::with_apex(c.base, fiber))) {
      fail(g, "classification witness does not contain the clique", s);
    }
  }
  return {Status::pass, checked(cliques.size(), "cliques") + ", " +
                            std::to_string(large) + " classified"};
}

inline Verdict check_facets(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& facets = ws.facets();
  const auto expected = oracle::maximal_cliques(g);
  if (facets != expected) {
    for (const auto& f : facets) {
      if (!std::binary_search(expected.begin(), expected.end(), f)) {
        fail(g, "classified facet is not a maximal clique", f);
      }
    }
    for (const auto& f : expected) {
      if (!std::binary_search(facets.begin(), facets.end(), f)) {
        fail(g, "maximal clique missing from classified facets", f);
      }
    }
  }
  std::size_t edges = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Partition& p = g.vertex(v);
    for (const Transfer& t : admissible_transfers(p)) {
      const VertexId w = g.id_of(apply_transfer(p, t));
      const bool singletons =
          star_fiber(p, t.source).size() == 1 && top_fiber(p, t.target).size() == 1;
      const bool facet = std::binary_search(facets.begin(), facets.end(), make_simplex({v, w}));
      ++edges;
      if (singletons != facet) fail(g, "maximal-edge criterion fails", {v, w});
    }
  }
  return {Status::pass, checked(facets.size(), "facets") + ", " + std::to_string(edges) +
                            " transfers for the maximal-edge criterion"};
}

inline Verdict check_cover(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& nerve = ws.nerve();
  if (nerve.empty()) return {Status::vacuous, "empty cover"};
  const auto& members = nerve.members();
  for (const auto& m : members) {
    if (!is_clique(g, m.vertices)) fail(g, "cover member is not a clique", m.vertices);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Simplex meet = intersect(members[i].vertices, members[j].vertices);
      if (!meet.empty() && !is_clique(g, meet)) fail(g, "member intersection is not a clique", meet);
    }
  }
  const auto& cliques = ws.oracle_cliques();
  for (const auto& s : cliques) {
    // Every clique sits in the members containing its first vertex, if anywhere.
    const auto& a = nerve.anchor_of(s.front());
    const bool covered = std::any_of(a.begin(), a.end(), [&](MemberId m) {
      return is_subset(s, members[m].vertices);
    });
    if (!covered && s.size() > 1) fail(g, "clique lies in no cover member", s);
  }
  // Rigidity: a member through λ and two elements of one fiber is that full simplex.
  for (VertexId v = 0; v < g.size(); ++v) {
    const Partition& p = g.vertex(v);
    auto rigid = [&](const std::vector<VertexId>& fiber) {
      if (fiber.size() < 2) return;
      const Simplex full = detail::with_apex(v, fiber);
      for (MemberId m : nerve.anchor_of(v)) {
        const auto& vs = members[m].vertices;
        const auto hits = std::count_if(fiber.begin(), fiber.end(), [&](VertexId w) {
          return std::binary_search(vs.begin(), vs.end(), w);
        });
        if (hits >= 2 && vs != full) fail(g, "member through two fiber elements is not rigid", vs);
      }
    };
    for (const Corner& c : removable_corners(p)) rigid(star_fiber(g, v, c));
    for (const Corner& a : addable_corners(p)) rigid(top_fiber(g, v, a));
  }
  return {Status::pass, checked(members.size(), "members") + " against " +
                            std::to_string(cliques.size()) + " cliques"};
}

inline Verdict check_nerve(Workspace& ws) {
  const auto& nerve = ws.nerve();
  if (nerve.empty()) return {Status::vacuous, "empty cover"};
  const auto fn = nerve_fvector(nerve);
  const auto chi_k = ws.simplices().fvector.euler_characteristic;
  if (fn.euler_characteristic != chi_k) {
    fail(ws.graph(), "chi(N)=" + std::to_string(fn.euler_characteristic) +
                         " but chi(K)=" + std::to_string(chi_k));
  }
  return {Status::pass, "chi(N)=chi(K)=" + std::to_string(chi_k)};
}

inline Verdict check_anchors(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& nerve = ws.nerve();
  if (nerve.empty()) return {Status::vacuous, "empty cover"};
  for (VertexId v = 0; v < g.size(); ++v) {
    for (MemberId m : nerve.anchor_of(v)) {
      const auto& vs = nerve.members()[m].vertices;
      if (!std::binary_search(vs.begin(), vs.end(), v)) fail(g, "anchor lists a foreign member", {v});
    }
  }
  const auto& cliques = ws.oracle_cliques();
  for (const auto& s : cliques) {
    const auto a = anchor_intersection(nerve, s);
    if (a.empty()) fail(g, "clique with empty anchor intersection", s);
    if (s.size() >= 3 && a.size() != 1) {
      fail(g, "anchor intersection of a large clique has " + std::to_string(a.size()) + " members", s);
    }
    if (s.size() == 2) {
      if (a.size() > 3) fail(g, "edge anchor intersection has more than three members", s);
      const VertexId lo = g.height_of(s[0]) < g.height_of(s[1]) ? s[0] : s[1];
      const VertexId hi = lo == s[0] ? s[1] : s[0];
      const Transfer t = decompositions(g, lo, hi).front();
      const std::array<Simplex, 3> allowed{detail::with_apex(lo, star_fiber(g, lo, t.source)),
                                           detail::with_apex(lo, top_fiber(g, lo, t.target)), s};
      for (MemberId m : a) {
        const auto& vs = nerve.members()[m].vertices;
        if (std::find(allowed.begin(), allowed.end(), vs) == allowed.end()) {
          fail(g, "edge anchor member is not the star, top or edge simplex", vs);
        }
      }
    }
  }
  return {Status::pass, checked(cliques.size(), "cliques")};
}

inline Verdict check_poset(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& nerve = ws.nerve();
  if (nerve.empty()) return {Status::vacuous, "empty cover"};
  const auto poset = build_poset(nerve);
  const int chain = max_chain_length(poset);
  if (chain > 2) fail(g, "strict chain of length " + std::to_string(chain));
  const auto oc = order_complex(poset);
  const auto chi_k = ws.simplices().fvector.euler_characteristic;
  const auto chi_n = nerve_fvector(nerve).euler_characteristic;
  const auto chi_j = oc.fvector.euler_characteristic;
  if (chi_j != chi_n || chi_n != chi_k) {
    fail(g, "chi(Delta(J))=" + std::to_string(chi_j) + " chi(N)=" + std::to_string(chi_n) +
                " chi(K)=" + std::to_string(chi_k));
  }
  std::string detail = std::to_string(poset.elements.size()) + " elements, longest chain " +
                       std::to_string(chain) + ", chi=" + std::to_string(chi_k);
  if (g.n() <= 8) {
    if (build_poset(nerve, ws.oracle_cliques()).elements != poset.elements) {
      fail(g, "restricted and unrestricted posets differ");
    }
    detail += ", matches unrestricted construction";
  }
  return {Status::pass, detail};
}

inline Verdict check_closure(Workspace& ws) {
  const auto& g = ws.graph();
  const auto& nerve = ws.nerve();
  if (nerve.empty()) return {Status::vacuous, "empty cover"};
  const auto& cliques = ws.oracle_cliques();
  std::map<Simplex, Simplex> cl;
  for (const auto& s : cliques) {
    const Simplex c = closure(nerve, s);
    if (!is_subset(s, c)) fail(g, "closure is not extensive", s);
    if (!is_clique(g, c)) fail(g, "closure is not a clique", s);
    if (closure(nerve, c) != c) fail(g, "closure is not idempotent", s);
    cl.emplace(s, c);
  }
  std::vector<Simplex> fixed;
  for (const auto& s : cliques) {
    if (cl[s] == s) fixed.push_back(s);
    for (const auto& t : cliques) {
      if (s.size() < t.size() && is_subset(s, t) && !is_subset(cl[s], cl[t])) {
        fail(g, "closure is not monotone", t);
      }
    }
  }
  // S -> A_S is an order-reversing bijection from closed cliques onto J_n.
  std::set<MemberSet> images;
  for (const auto& s : fixed) {
    if (!images.insert(anchor_intersection(nerve, s)).second) {
      fail(g, "two closed cliques share an anchor intersection", s);
    }
  }
  const auto poset = build_poset(nerve);
  if (images != std::set<MemberSet>(poset.elements.begin(), poset.elements.end())) {
    fail(g, "closed cliques do not biject onto the intersection poset");
  }
  for (const auto& s : fixed) {
    const auto as = anchor_intersection(nerve, s);
    for (const auto& t : fixed) {
      const auto at = anchor_intersection(nerve, t);
      if (is_subset(s, t) != std::includes(as.begin(), as.end(), at.begin(), at.end())) {
        fail(g, "anchor map is not order-reversing on closed cliques", t);
      }
    }
  }
  return {Status::pass, checked(cliques.size(), "cliques") + ", " +
                            std::to_string(fixed.size()) + " closed"};
}

inline Verdict check_heights(Workspace& ws) {
  const auto& g = ws.graph();
  std::size_t transfers = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Partition& p = g.vertex(v);
    for (const Transfer& t : admissible_transfers(p)) {
      ++transfers;
      const Partition q = apply_transfer(p, t);
      if (height(q) - height(p) != t.target.row - t.source.row) {
        fail(g, "height change differs from r(a) - r(c)", {v, g.id_of(q)});
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (g.height_of(u) == g.height_of(v)) fail(g, "adjacent vertices of equal height", {u, v});
  }
  return pass_or_vacuous(transfers, "transfers");
}

inline Verdict check_loops(Workspace& ws, const RunConfig& cfg) {
  const auto& g = ws.graph();
  if (g.edge_count() == 0) return {Status::vacuous, "no edges"};
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(g.n())};
  std::mt19937_64 rng(seq);
  int walks = 0;
  std::size_t steps = 0;
  const long attempts_cap = 100L * cfg.loop_walks;
  for (long attempt = 0; walks < cfg.loop_walks && attempt < attempts_cap; ++attempt) {
    const auto start = static_cast<VertexId>(rng() % g.size());
    auto walk = random_closed_walk(g, start, rng, cfg.loop_max_length);
    if (!walk) continue;
    ++walks;
    try {
      const auto trace = reduce_loop(g, *walk);
      if (!trace.final_loop().is_constant()) fail(g, "reduction ended on a nonconstant loop");
      steps += trace.steps.size() - 1;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::theorem_violation) throw;
      fail(g, std::string(e.what()) + " while reducing " + format_loop(g, *walk));
    }
  }
  if (walks < cfg.loop_walks) {
    fail(g, "only " + std::to_string(walks) + " closed walks found in " +
                std::to_string(attempts_cap) + " attempts");
  }
  return {Status::pass, "reduced " + std::to_string(walks) + " walks in " +
                            std::to_string(steps) + " steps"};
}

inline Verdict check_homology(Workspace& ws) {
  const auto& g = ws.graph();
  const auto cc = build_chain_complex(ws.facets());
  if (!boundary_squares_to_zero(cc)) fail(g, "boundary of boundary is nonzero");
  const auto h = reduced_homology(cc);
  std::int64_t alternating = 0;
  for (std::size_t p = 0; p < h.betti.size(); ++p) alternating += (p % 2 == 0 ? 1 : -1) * h.betti[p];
  if (alternating != h.euler_characteristic) fail(g, "Betti numbers do not sum to chi");
  if (!h.concentrated_in_degree_two()) fail(g, "homology not concentrated in degree 2: " + homology_summary(h));
  return {Status::pass, homology_summary(h)};
}

inline Verdict check_euler(Workspace& ws) {
  const auto chi = ws.simplices().fvector.euler_characteristic;
  const auto expected = reference::published_chi(ws.graph().n());
  if (!expected) return {Status::pass, "chi=" + std::to_string(chi) + " (no reference value)"};
  if (chi != *expected) {
    fail(ws.graph(), "chi=" + std::to_string(chi) + " but reference " + std::to_string(*expected));
  }
  return {Status::pass, "chi=" + std::to_string(chi) + " matches reference"};
}

}  // namespace detail

/// Runs one suite for one n. Failures carry a witness; errors of kind
/// budget-exceeded become skip records.
inline VerificationOutcome run_suite(Suite suite, Workspace& ws, const RunConfig& cfg) {
  const int n = ws.graph().n();
  VerificationOutcome out{suite, n, Status::pass, {}, std::nullopt};
  if (n > suite_info(suite).budget && !cfg.ignore_budget) {
    out.status = Status::skipped;
    out.detail = "beyond budget n<=" + std::to_string(suite_info(suite).budget);
    return out;
  }
  try {
    detail::Verdict v{Status::pass, {}};
    switch (suite) {
      case Suite::triangles: v = detail::check_triangles(ws); break;
      case Suite::cliques: v = detail::check_cliques(ws); break;
      case Suite::facets: v = detail::check_facets(ws); break;
      case Suite::cover: v = detail::check_cover(ws); break;
      case Suite::nerve: v = detail::check_nerve(ws); break;
      case Suite::anchors: v = detail::check_anchors(ws); break;
      case Suite::poset: v = detail::check_poset(ws); break;
      case Suite::closure: v = detail::check_closure(ws); break;
      case Suite::heights: v = detail::check_heights(ws); break;
      case Suite::loops: v = detail::check_loops(ws, cfg); break;
      case Suite::homology: v = detail::check_homology(ws); break;
      case Suite::euler: v = detail::check_euler(ws); break;
    }
    out.status = v.status;
    out.detail = std::move(v.detail);
  } catch (const detail::SuiteFailure& f) {
    out.status = Status::fail;
    out.detail = f.witness.message;
    out.counterexample = f.witness;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::budget_exceeded) {
      out.status = Status::skipped;
      out.detail = e.what();
    } else {
      out.status = Status::fail;
      out.detail = std::string(to_string(e.kind())) + ": " + e.what();
      out.counterexample = Counterexample{out.detail, {}};
    }
  }
  return out;
}

/// All requested suites for n = 1..max_n, ordered by (n, suite order in cfg).
inline std::vector<VerificationOutcome> run_verification(const RunConfig& cfg) {
  if (cfg.max_n < 1) throw Error(ErrorKind::invalid_argument, "max-n must be at least 1");
  std::vector<std::vector<VerificationOutcome>> per_n(static_cast<std::size_t>(cfg.max_n));
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int n = next++; n <= cfg.max_n; n = next++) {
      Workspace ws(n);
      auto& bucket = per_n[static_cast<std::size_t>(n - 1)];
      for (Suite s : cfg.suites) bucket.push_back(run_suite(s, ws, cfg));
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.max_n)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<VerificationOutcome> merged;
  for (auto& bucket : per_n) {
    for (auto& o : bucket) merged.push_back(std::move(o));
  }
  return merged;
}

inline bool any_failed(const std::vector<VerificationOutcome>& outcomes) {
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [](const VerificationOutcome& o) { return o.status == Status::fail; });
}

// ---------------------------------------------------------------------------
// Reports. Deterministic: no timings, no addresses.

inline Json to_json(const VerificationOutcome& o) {
  Json j{{"suite", to_string(o.suite)},
         {"n", o.n},
         {"status", to_string(o.status)},
         {"detail", o.detail}};
  if (o.counterexample) {
    Json parts = Json::array();
    for (const auto& p : o.counterexample->partitions) parts.push_back(format_partition(p));
    j["counterexample"] = Json{{"message", o.counterexample->message}, {"partitions", parts}};
  }
  return j;
}

inline std::map<Status, int> tally(const std::vector<VerificationOutcome>& outcomes) {
  std::map<Status, int> counts{
      {Status::pass, 0}, {Status::fail, 0}, {Status::vacuous, 0}, {Status::skipped, 0}};
  for (const auto& o : outcomes) ++counts[o.status];
  return counts;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string witness_text(const Counterexample& c) {
  std::string out;
  for (const auto& p : c.partitions) out += (out.empty() ? "" : " ") + format_partition(p);
  return out;
}

}  // namespace detail

inline void write_report(std::ostream& os, const std::vector<VerificationOutcome>& outcomes,
                         const RunConfig& cfg) {
  const auto counts = tally(outcomes);
  switch (cfg.format) {
    case OutputFormat::json: {
      Json suites = Json::array();
      for (Suite s : cfg.suites) suites.push_back(to_string(s));
      Json arr = Json::array();
      for (const auto& o : outcomes) arr.push_back(to_json(o));
      Json summary = Json::object();
      for (auto [s, c] : counts) summary[std::string(to_string(s))] = c;
      Json report{{"config",
                   {{"max_n", cfg.max_n},
                    {"suites", suites},
                    {"seed", cfg.seed},
                    {"ignore_budget", cfg.ignore_budget}}},
                  {"outcomes", arr},
                  {"summary", summary}};
      os << report.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "suite,n,status,detail,witness\n";
      for (const auto& o : outcomes) {
        os << to_string(o.suite) << ',' << o.n << ',' << to_string(o.status) << ','
           << detail::csv_quote(o.detail) << ','
           << detail::csv_quote(o.counterexample ? detail::witness_text(*o.counterexample) : "")
           << '\n';
      }
      break;
    case OutputFormat::text:
      for (const auto& o : outcomes) {
        os << to_string(o.suite) << " n=" << o.n << ' ' << to_string(o.status) << ": " << o.detail;
        if (o.counterexample && !o.counterexample->partitions.empty()) {
          os << " [" << detail::witness_text(*o.counterexample) << ']';
        }
        os << '\n';
      }
      os << "summary:";
      for (auto [s, c] : counts) os << ' ' << to_string(s) << '=' << c;
      os << '\n';
      break;
  }
}

}  // namespace partcx
