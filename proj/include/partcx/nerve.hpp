#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "partcx/complex.hpp"
#include "partcx/error.hpp"
#include "partcx/simplicial.hpp"

namespace partcx {

using MemberId = std::uint32_t;
/// Sorted set of cover-member ids.
using MemberSet = std::vector<MemberId>;

/// N(C_n): vertices are cover members; a family spans a simplex iff the
/// members share a vertex of K_n. Simplices are not materialized.
class NerveComplex {
 public:
  NerveComplex(std::vector<CoverMember> cover, std::size_t vertex_count)
      : members_(std::move(cover)), anchors_(vertex_count) {
    for (MemberId m = 0; m < members_.size(); ++m) {
      for (VertexId v : members_[m].vertices) {
        if (v >= vertex_count) throw Error(ErrorKind::unknown_vertex, "cover member outside K_n");
        anchors_[v].push_back(m);
      }
    }
  }

  const std::vector<CoverMember>& members() const noexcept { return members_; }
  std::size_t member_count() const noexcept { return members_.size(); }
  std::size_t vertex_count() const noexcept { return anchors_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  /// A_λ: members containing λ, ascending.
  const MemberSet& anchor_of(VertexId v) const {
    if (v >= anchors_.size()) throw Error(ErrorKind::unknown_vertex, "vertex outside K_n");
    return anchors_[v];
  }

  /// Vertices of K_n lying in every listed member. Empty family -> empty.
  Simplex common_vertices(std::span<const MemberId> family) const {
    if (family.empty()) return {};
    Simplex common = members_.at(family.front()).vertices;
    for (MemberId m : family.subspan(1)) {
      common = intersect(common, members_.at(m).vertices);
      if (common.empty()) break;
    }
    return common;
  }

  bool spans_simplex(std::span<const MemberId> family) const {
    return !family.empty() && !common_vertices(family).empty();
  }

 private:
  std::vector<CoverMember> members_;
  std::vector<MemberSet> anchors_;
};

inline NerveComplex build_nerve(std::vector<CoverMember> cover, std::size_t vertex_count) {
  return NerveComplex(std::move(cover), vertex_count);
}

inline NerveComplex build_nerve(const PartitionGraph& g) {
  return NerveComplex(canonical_cover(g), g.size());
}

struct AnchorSimplex {
  VertexId vertex = 0;
  MemberSet members;
};

inline AnchorSimplex anchor(const NerveComplex& nerve, VertexId v) {
  return {v, nerve.anchor_of(v)};
}

/// A_S = ∩ A_λ over λ in S. Nonempty exactly when S is a clique.
inline MemberSet anchor_intersection(const NerveComplex& nerve, const Simplex& s) {
  if (s.empty()) return {};
  MemberSet acc = nerve.anchor_of(s.front());
  for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) {
    const MemberSet& next = nerve.anchor_of(s[i]);
    MemberSet tmp;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                          std::back_inserter(tmp));
    acc = std::move(tmp);
  }
  return acc;
}

/// cl(S) = {μ : A_S ⊆ A_μ}, i.e. the vertices common to every member of A_S.
inline Simplex closure(const NerveComplex& nerve, const Simplex& s) {
  const MemberSet a = anchor_intersection(nerve, s);
  if (a.empty()) throw Error(ErrorKind::not_a_clique, "closure needs a clique");
  return nerve.common_vertices(a);
}

/// f-vector of the nerve. Each intersecting family σ is counted once, from the
/// anchor of the smallest vertex in its common intersection.
inline FVector nerve_fvector(const NerveComplex& nerve, std::size_t max_anchor = 40) {
  std::vector<std::int64_t> counts;
  for (VertexId v = 0; v < nerve.vertex_count(); ++v) {
    const MemberSet& a = nerve.anchor_of(v);
    if (a.size() > max_anchor) {
      throw Error(ErrorKind::budget_exceeded, "anchor too large for subset enumeration");
    }
    if (counts.size() < a.size()) counts.resize(a.size(), 0);
    // Depth-first over subsets of A_v, carrying the running intersection.
    std::function<void(std::size_t, std::size_t, const Simplex&)> rec =
        [&](std::size_t next, std::size_t chosen, const Simplex& common) {
          for (std::size_t i = next; i < a.size(); ++i) {
            Simplex meet = chosen == 0 ? nerve.members()[a[i]].vertices
                                       : intersect(common, nerve.members()[a[i]].vertices);
            // v is in every member of A_v, so meet is nonempty and contains v.
            if (meet.front() == v) ++counts[chosen];
            rec(i + 1, chosen + 1, meet);
          }
        };
    rec(0, 0, {});
  }
  return FVector::from_counts(std::move(counts));
}

// ---------------------------------------------------------------------------
// Intersection poset J_n and its order complex.

struct IntersectionPoset {
  /// Distinct nonempty A_S, ordered by (size, lexicographic).
  std::vector<MemberSet> elements;
  /// below[i]: indices j with elements[j] strictly contained in elements[i].
  std::vector<std::vector<std::uint32_t>> below;

  bool empty() const noexcept { return elements.empty(); }

  /// Covering relations (lower, upper).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      for (std::uint32_t j : below[i]) {
        bool covered = std::none_of(below[i].begin(), below[i].end(), [&](std::uint32_t k) {
          return std::binary_search(below[k].begin(), below[k].end(), j);
        });
        if (covered) out.emplace_back(j, i);
      }
    }
    return out;
  }
};

inline IntersectionPoset build_poset(const NerveComplex& nerve, std::span<const Simplex> cliques) {
  IntersectionPoset poset;
  for (const Simplex& s : cliques) {
    MemberSet a = anchor_intersection(nerve, s);
    if (a.empty()) throw Error(ErrorKind::not_a_clique, "poset generator is not a clique");
    poset.elements.push_back(std::move(a));
  }
  auto& el = poset.elements;
  std::sort(el.begin(), el.end(), [](const MemberSet& a, const MemberSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  el.erase(std::unique(el.begin(), el.end()), el.end());
  poset.below.resize(el.size());
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    for (std::uint32_t j = 0; j < i; ++j) {
      if (el[j].size() < el[i].size() &&
          std::includes(el[i].begin(), el[i].end(), el[j].begin(), el[j].end())) {
        poset.below[i].push_back(j);
      }
    }
  }
  return poset;
}

/// J_n generated by cliques of size at most three, taken as faces of cover
/// members (every clique lies in some member).
inline IntersectionPoset build_poset(const NerveComplex& nerve) {
  std::vector<Simplex> generators;
  for (const CoverMember& m : nerve.members()) {
    const Simplex& s = m.vertices;
    for (std::size_t i = 0; i < s.size(); ++i) {
      generators.push_back({s[i]});
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        generators.push_back({s[i], s[j]});
        for (std::size_t k = j + 1; k < s.size(); ++k) generators.push_back({s[i], s[j], s[k]});
      }
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return build_poset(nerve, generators);
}

/// Number of strict inclusions in a longest chain; 0 for an empty poset.
inline int max_chain_length(const IntersectionPoset& poset) {
  std::vector<int> depth(poset.elements.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {  // sizes ascend
    for (std::uint32_t j : poset.below[i]) depth[i] = std::max(depth[i], depth[j] + 1);
    best = std::max(best, depth[i]);
  }
  return best;
}

struct OrderComplex {
  /// Maximal chains as sets of poset element indices.
  std::vector<Simplex> facets;
  FVector fvector;
};

inline OrderComplex order_complex(const IntersectionPoset& poset) {
  OrderComplex out;
  std::vector<std::int64_t> counts;
  std::vector<std::uint32_t> chain;
  // Every chain, enumerated top-down.
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t top) {
    chain.push_back(top);
    if (counts.size() < chain.size()) counts.resize(chain.size(), 0);
    ++counts[chain.size() - 1];
    for (std::uint32_t j : poset.below[top]) grow(j);
    chain.pop_back();
  };
  std::vector<bool> has_above(poset.elements.size(), false);
  for (const auto& b : poset.below) {
    for (std::uint32_t j : b) has_above[j] = true;
  }
  for (std::uint32_t i = 0; i < poset.elements.size(); ++i) grow(i);
  out.fvector = FVector::from_counts(std::move(counts));

  // Maximal chains are Hasse paths from a maximal to a minimal element.
  std::vector<std::vector<std::uint32_t>> covers(poset.elements.size());
  for (auto [lo, hi] : poset.hasse_edges()) covers[hi].push_back(lo);
  std::function<void(std::uint32_t)> descend = [&](std::uint32_t top) {
    chain.push_back(top);
    if (covers[top].empty()) {
      out.facets.push_back(make_simplex(std::vector<VertexId>(chain.begin(), chain.end())));
    }
    for (std::uint32_t j : covers[top]) descend(j);
    chain.pop_back();
  };
  for (std::uint32_t i = 0; i < poset.elements.size(); ++i) {
    if (!has_above[i]) descend(i);
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

}  // namespace partcx
