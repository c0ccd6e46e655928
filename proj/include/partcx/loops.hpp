#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partcx/complex.hpp"
#include "partcx/error.hpp"
#include "partcx/graph.hpp"

namespace partcx {

/// Closed edge-path λ_0, ..., λ_m = λ_0 in G_n. Repeated consecutive entries
/// are stationary steps.
struct EdgeLoop {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool is_constant() const {
    return std::adjacent_find(vertices.begin(), vertices.end(), std::not_equal_to<>()) ==
           vertices.end();
  }

  friend bool operator==(const EdgeLoop&, const EdgeLoop&) = default;
};

struct LoopComplexity {
  std::int64_t max_height = 0;  // H
  std::int64_t peak_count = 0;  // M

  friend auto operator<=>(const LoopComplexity&, const LoopComplexity&) = default;
};

inline void validate_loop(const PartitionGraph& g, const EdgeLoop& loop) {
  const auto& v = loop.vertices;
  if (v.empty()) throw Error(ErrorKind::invalid_loop, "empty loop");
  if (v.front() != v.back()) throw Error(ErrorKind::invalid_loop, "loop is not closed");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= g.size()) throw Error(ErrorKind::invalid_loop, "vertex outside G_n");
    if (i > 0 && v[i] != v[i - 1] && !g.adjacent(v[i - 1], v[i])) {
      throw Error(ErrorKind::invalid_loop, format_partition(g.vertex(v[i - 1])) + " and " +
                                               format_partition(g.vertex(v[i])) +
                                               " are not adjacent");
    }
  }
}

/// (H, M); the closing vertex is not counted twice.
inline LoopComplexity complexity(const PartitionGraph& g, const EdgeLoop& loop) {
  validate_loop(g, loop);
  LoopComplexity c{g.height_of(loop.vertices.front()), 0};
  for (std::size_t i = 0; i < loop.length(); ++i) {
    const auto h = g.height_of(loop.vertices[i]);
    if (h > c.max_height) {
      c = {h, 1};
    } else if (h == c.max_height) {
      ++c.peak_count;
    }
  }
  return c;
}

namespace detail {

inline std::vector<VertexId> open_cycle(const EdgeLoop& loop) {
  return {loop.vertices.begin(), loop.vertices.end() - 1};
}

inline EdgeLoop close_cycle(std::vector<VertexId> cyc) {
  cyc.push_back(cyc.front());
  return {std::move(cyc)};
}

// Drops stationary steps and immediate backtracks x,y,x -> x, cyclically.
// Keeps the basepoint unless the basepoint itself is a spur tip.
inline std::vector<VertexId> normalize_cycle(std::vector<VertexId> cyc) {
  using diff_t = std::ptrdiff_t;
  bool changed = true;
  while (changed && cyc.size() > 1) {
    changed = false;
    const std::size_t s = cyc.size();
    for (std::size_t i = 0; i < s; ++i) {
      if (cyc[i] == cyc[(i + 1) % s]) {
        cyc.erase(cyc.begin() + static_cast<diff_t>(i + 1 < s ? i + 1 : i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (s == 2) {
      cyc.resize(1);
      changed = true;
      continue;
    }
    for (std::size_t k = 1; k <= s; ++k) {  // the basepoint is tried last
      const std::size_t i = k % s;
      const std::size_t prev = (i + s - 1) % s;
      const std::size_t next = (i + 1) % s;
      if (cyc[prev] != cyc[next]) continue;
      // Remove the tip and one copy of its base.
      std::size_t a = i;
      std::size_t b = next == 0 ? prev : next;
      if (a < b) std::swap(a, b);
      cyc.erase(cyc.begin() + static_cast<diff_t>(a));
      cyc.erase(cyc.begin() + static_cast<diff_t>(b));
      changed = true;
      break;
    }
  }
  return cyc;
}

}  // namespace detail

inline EdgeLoop normalize(const EdgeLoop& loop) {
  if (loop.vertices.size() <= 1) return loop;
  return detail::close_cycle(detail::normalize_cycle(detail::open_cycle(loop)));
}

enum class ReductionRule { start, normalize, triangle, detour };

inline std::string_view to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::start: return "start";
    case ReductionRule::normalize: return "normalize";
    case ReductionRule::triangle: return "triangle";
    case ReductionRule::detour: return "detour";
  }
  return "unknown";
}

struct ReductionStep {
  EdgeLoop loop;  // the loop after this step
  ReductionRule rule = ReductionRule::start;
  LoopComplexity complexity;
  std::optional<VertexId> peak;
  std::optional<VertexId> inserted;  // ν for detours
};

namespace detail {

[[noreturn]] inline void violation(const PartitionGraph& g, const std::string& what,
                                   std::initializer_list<VertexId> witnesses) {
  std::ostringstream os;
  os << what << " at";
  for (VertexId v : witnesses) os << ' ' << g.vertex(v);
  throw Error(ErrorKind::theorem_violation, os.str());
}

}  // namespace detail

/// One reduction step. Loops that are not normalized are only normalized.
/// Otherwise the first vertex of maximal height λ, with cyclic neighbors
/// μ1, μ2, is replaced by nothing (when λ, μ1, μ2 span a triangle) or by
/// ν = λ(c2 -> a1), with the transfers ordered so that r(c1) <= r(c2).
inline ReductionStep peak_reduce_step(const PartitionGraph& g, const EdgeLoop& loop) {
  const LoopComplexity before = complexity(g, loop);
  EdgeLoop norm = normalize(loop);
  if (norm.is_constant() && loop.is_constant()) {
    throw Error(ErrorKind::invalid_argument, "loop is already constant");
  }
  if (norm != loop) {
    const auto c = complexity(g, norm);
    return {std::move(norm), ReductionRule::normalize, c, std::nullopt, std::nullopt};
  }

  std::vector<VertexId> cyc = detail::open_cycle(loop);
  const std::size_t s = cyc.size();
  std::size_t peak = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (g.height_of(cyc[i]) == before.max_height) {
      peak = i;
      break;
    }
  }
  const VertexId apex = cyc[peak];
  const VertexId mu1 = cyc[(peak + s - 1) % s];
  const VertexId mu2 = cyc[(peak + 1) % s];
  const auto top = before.max_height;
  if (g.height_of(mu1) >= top || g.height_of(mu2) >= top) {
    detail::violation(g, "peak is not isolated", {mu1, apex, mu2});
  }

  ReductionStep step;
  step.peak = apex;
  const TriangleClass tri = classify_triangle(g, apex, mu1, mu2);
  if (tri.type != TriangleType::not_triangle) {
    if (!is_clique(g, make_simplex({apex, mu1, mu2}))) {
      detail::violation(g, "shared corner without a triangle", {mu1, apex, mu2});
    }
    cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(peak));
    step.rule = ReductionRule::triangle;
  } else {
    if (g.adjacent(mu1, mu2)) detail::violation(g, "mixed transfers are adjacent", {mu1, apex, mu2});
    const Partition& lam = g.vertex(apex);
    std::optional<std::pair<std::pair<int, int>, Transfer>> best;
    for (const Transfer& t1 : decompositions(g, apex, mu1)) {
      for (const Transfer& t2 : decompositions(g, apex, mu2)) {
        const Transfer t = t1.source.row <= t2.source.row ? Transfer{t2.source, t1.target}
                                                          : Transfer{t1.source, t2.target};
        const std::pair<int, int> key{t.source.col, t.target.col};
        if (!best || key < best->first) best = {key, t};
      }
    }
    if (!best || !is_admissible(lam, best->second.source, best->second.target)) {
      detail::violation(g, "detour transfer is inadmissible", {mu1, apex, mu2});
    }
    const VertexId nu = g.id_of(apply_transfer(lam, best->second));
    if (!is_clique(g, make_simplex({apex, mu1, nu})) ||
        !is_clique(g, make_simplex({apex, nu, mu2}))) {
      detail::violation(g, "detour does not span two triangles", {mu1, apex, nu, mu2});
    }
    if (g.height_of(nu) >= top) detail::violation(g, "detour vertex is not lower", {apex, nu});
    cyc[peak] = nu;
    step.rule = ReductionRule::detour;
    step.inserted = nu;
  }

  step.loop = normalize(detail::close_cycle(std::move(cyc)));
  step.complexity = complexity(g, step.loop);
  if (!(step.complexity < before)) {
    detail::violation(g, "complexity did not decrease", {apex});
  }
  return step;
}

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // steps.front() is the input loop

  const EdgeLoop& final_loop() const { return steps.back().loop; }
};

/// Applies peak_reduce_step until the loop is constant, checking that every
/// step lowers (H, M), or keeps it and shortens the loop.
inline ReductionTrace reduce_loop(const PartitionGraph& g, const EdgeLoop& loop) {
  ReductionTrace trace;
  trace.steps.push_back({loop, ReductionRule::start, complexity(g, loop), {}, {}});
  while (!trace.final_loop().is_constant()) {
    const ReductionStep& last = trace.steps.back();
    ReductionStep next = peak_reduce_step(g, last.loop);
    const bool lower = next.complexity < last.complexity;
    const bool shorter =
        next.complexity == last.complexity && next.loop.length() < last.loop.length();
    if (!lower && !shorter) {
      throw Error(ErrorKind::theorem_violation, "reduction step made no progress");
    }
    trace.steps.push_back(std::move(next));
  }
  return trace;
}

/// Random walk from `start` until it first returns; nothing if that takes
/// more than `max_length` steps.
template <class Rng>
std::optional<EdgeLoop> random_closed_walk(const PartitionGraph& g, VertexId start, Rng& rng,
                                           std::size_t max_length) {
  EdgeLoop loop{{start}};
  VertexId cur = start;
  for (std::size_t step = 0; step < max_length; ++step) {
    const auto& nbrs = g.neighbors(cur);
    if (nbrs.empty()) return std::nullopt;
    cur = nbrs[static_cast<std::size_t>(rng() % nbrs.size())];
    loop.vertices.push_back(cur);
    if (cur == start) return loop;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text form: "[4] [3,1] [4]".

inline EdgeLoop parse_loop(const PartitionGraph& g, std::string_view text) {
  EdgeLoop loop;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    const std::size_t end = text.find(']', pos);
    if (end == std::string_view::npos) throw Error(ErrorKind::invalid_argument, "unbalanced '['");
    loop.vertices.push_back(g.id_of(parse_partition(text.substr(pos, end - pos + 1))));
    pos = end + 1;
  }
  validate_loop(g, loop);
  return loop;
}

inline std::string format_loop(const PartitionGraph& g, const EdgeLoop& loop) {
  std::string out;
  for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
    if (i) out += ' ';
    out += format_partition(g.vertex(loop.vertices[i]));
  }
  return out;
}

}  // namespace partcx
