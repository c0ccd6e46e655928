#pragma once

// Brute-force reference computations. Nothing here touches corners or
// transfers; these routines only see adjacency or conjugate vectors, so they
// can be used to cross-check the classification-based code paths.

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "partcx/graph.hpp"
#include "partcx/partition.hpp"
#include "partcx/simplicial.hpp"

namespace partcx::oracle {

/// Recursive enumeration with a part bound; same order as enumerate_partitions.
inline std::vector<std::vector<int>> partitions_recursive(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, bound); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Edge set of G_n from the pairwise conjugate test over all vertex pairs.
inline std::vector<std::pair<VertexId, VertexId>> conjugate_edges(const PartitionGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      if (adjacency_by_conjugate(g.vertex(u), g.vertex(v))) out.emplace_back(u, v);
    }
  }
  return out;
}

/// Every clique of the graph, by extension with higher-indexed common neighbors.
inline std::vector<Simplex> all_cliques(const PartitionGraph& g) {
  std::vector<Simplex> out;
  Simplex cur;
  std::function<void(const std::vector<VertexId>&)> rec = [&](const std::vector<VertexId>& cand) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const VertexId v = cand[i];
      cur.push_back(v);
      out.push_back(cur);
      std::vector<VertexId> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      rec(next);
      cur.pop_back();
    }
  };
  std::vector<VertexId> all(g.size());
  for (VertexId v = 0; v < g.size(); ++v) all[v] = v;
  rec(all);
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting. Sorted.
inline std::vector<Simplex> maximal_cliques(const PartitionGraph& g) {
  std::vector<Simplex> out;
  std::function<void(Simplex&, std::vector<VertexId>, std::vector<VertexId>)> expand =
      [&](Simplex& r, std::vector<VertexId> p, std::vector<VertexId> x) {
        if (p.empty() && x.empty()) {
          out.push_back(make_simplex(r));
          return;
        }
        VertexId pivot = 0;
        std::size_t best = 0;
        bool have = false;
        for (const auto* set : {&p, &x}) {
          for (VertexId u : *set) {
            std::size_t hits = 0;
            for (VertexId w : p) hits += g.adjacent(u, w) ? 1 : 0;
            if (!have || hits > best) {
              pivot = u;
              best = hits;
              have = true;
            }
          }
        }
        std::vector<VertexId> candidates;
        for (VertexId v : p) {
          if (!g.adjacent(pivot, v)) candidates.push_back(v);
        }
        for (VertexId v : candidates) {
          std::vector<VertexId> np, nx;
          for (VertexId w : p) {
            if (g.adjacent(v, w)) np.push_back(w);
          }
          for (VertexId w : x) {
            if (g.adjacent(v, w)) nx.push_back(w);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  Simplex r;
  std::vector<VertexId> all(g.size());
  for (VertexId v = 0; v < g.size(); ++v) all[v] = v;
  expand(r, std::move(all), {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace partcx::oracle
