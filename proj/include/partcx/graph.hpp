#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partcx/error.hpp"
#include "partcx/partition.hpp"

namespace partcx {

using VertexId = std::uint32_t;

/// The transfer graph G_n. Vertex ids follow enumerate_partitions order.
class PartitionGraph {
 public:
  explicit PartitionGraph(int n) : n_(n), vertices_(enumerate_partitions(n)) {
    const std::size_t count = vertices_.size();
    index_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) index_.emplace(vertices_[i], static_cast<VertexId>(i));

    conjugates_.reserve(count);
    heights_.reserve(count);
    for (const auto& p : vertices_) {
      conjugates_.push_back(conjugate(p).parts());
      heights_.push_back(height(p));
    }

    adjacency_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto& list = adjacency_[i];
      for (const Transfer& t : admissible_transfers(vertices_[i])) {
        list.push_back(index_.at(detail::move_cell(vertices_[i], t.source.row, t.target.row)));
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (const auto& list : adjacency_) edge_count_ += list.size();
    edge_count_ /= 2;
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Partition>& vertices() const noexcept { return vertices_; }
  const Partition& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<int>& conjugate_of(VertexId v) const { return conjugates_.at(v); }
  std::int64_t height_of(VertexId v) const { return heights_.at(v); }

  std::optional<VertexId> find(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id_of(const Partition& p) const {
    if (auto v = find(p)) return *v;
    throw Error(ErrorKind::unknown_vertex,
                format_partition(p) + " is not a partition of " + std::to_string(n_));
  }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// Undirected edges (u < v), lexicographic.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < size(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<Partition> vertices_;
  std::unordered_map<Partition, VertexId> index_;
  std::vector<std::vector<int>> conjugates_;
  std::vector<std::int64_t> heights_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline PartitionGraph build_graph(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be at least 1");
  return PartitionGraph(n);
}

inline std::vector<Partition> neighbors(const PartitionGraph& g, const Partition& p) {
  std::vector<Partition> out;
  for (VertexId v : g.neighbors(g.id_of(p))) out.push_back(g.vertex(v));
  return out;
}

inline bool are_adjacent(const PartitionGraph& g, const Partition& p, const Partition& q) {
  return g.adjacent(g.id_of(p), g.id_of(q));
}

/// Columns (u, v) with q' = p' - e_u + e_v, u != v, or nothing.
/// Decided purely on conjugates; independent of corner enumeration.
inline std::optional<std::pair<int, int>> adjacency_by_conjugate(const Partition& p,
                                                                const Partition& q) {
  if (p.total() != q.total()) {
    throw Error(ErrorKind::invalid_argument, "partitions of different totals");
  }
  const Partition pc = conjugate(p);
  const Partition qc = conjugate(q);
  const int width = std::max(pc.length(), qc.length());
  int lowered = 0;
  int raised = 0;
  for (int j = 1; j <= width; ++j) {
    const int d = qc.row(j) - pc.row(j);
    if (d == 0) continue;
    if (d == -1 && lowered == 0) {
      lowered = j;
    } else if (d == 1 && raised == 0) {
      raised = j;
    } else {
      return std::nullopt;
    }
  }
  if (lowered == 0 || raised == 0) return std::nullopt;
  return std::make_pair(lowered, raised);
}

// ---------------------------------------------------------------------------
// Exports. All file formats use 1-based vertex ids.

inline void write_dimacs(std::ostream& os, const PartitionGraph& g) {
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_edge_list(std::ostream& os, const PartitionGraph& g) {
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_legend(std::ostream& os, const PartitionGraph& g) {
  for (VertexId v = 0; v < g.size(); ++v) os << v + 1 << ' ' << g.vertex(v) << '\n';
}

}  // namespace partcx
