#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "partcx/error.hpp"
#include "partcx/graph.hpp"
#include "partcx/partition.hpp"
#include "partcx/simplicial.hpp"

namespace partcx {

// ---------------------------------------------------------------------------
// Fibers. The star fiber of (λ, c) collects λ(c -> a) over all admissible a;
// the top fiber of (λ, a) collects λ(c -> a) over all admissible c.

inline std::vector<Partition> star_fiber(const Partition& p, const Corner& c) {
  if (!is_removable_corner(p, c)) {
    std::ostringstream os;
    os << c << " is not a removable corner of " << p;
    throw Error(ErrorKind::invalid_corner, os.str());
  }
  std::vector<Partition> out;
  for (const Corner& a : addable_corners(p)) {
    if (is_admissible(p, c, a)) out.push_back(apply_transfer(p, c, a));
  }
  return out;
}

inline std::vector<Partition> top_fiber(const Partition& p, const Corner& a) {
  if (!is_addable_corner(p, a)) {
    std::ostringstream os;
    os << a << " is not an addable corner of " << p;
    throw Error(ErrorKind::invalid_corner, os.str());
  }
  std::vector<Partition> out;
  for (const Corner& c : removable_corners(p)) {
    if (is_admissible(p, c, a)) out.push_back(apply_transfer(p, c, a));
  }
  return out;
}

namespace detail {

inline std::vector<VertexId> fiber_ids(const PartitionGraph& g, const std::vector<Partition>& f) {
  std::vector<VertexId> ids;
  ids.reserve(f.size());
  for (const auto& p : f) ids.push_back(g.id_of(p));
  return ids;
}

inline Simplex with_apex(VertexId apex, std::vector<VertexId> fiber) {
  fiber.push_back(apex);
  return make_simplex(std::move(fiber));
}

}  // namespace detail

inline std::vector<VertexId> star_fiber(const PartitionGraph& g, VertexId v, const Corner& c) {
  return detail::fiber_ids(g, star_fiber(g.vertex(v), c));
}

inline std::vector<VertexId> top_fiber(const PartitionGraph& g, VertexId v, const Corner& a) {
  return detail::fiber_ids(g, top_fiber(g.vertex(v), a));
}

// ---------------------------------------------------------------------------
// Cover members.

enum class CoverKind { star_max, top_max, edge };

struct Provenance {
  CoverKind kind = CoverKind::star_max;  // star_max or top_max
  VertexId base = 0;
  Corner corner;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A full star- or top-simplex. Members that are bare edges keep every
/// (base, corner) description that produced them.
struct CoverMember {
  CoverKind kind = CoverKind::edge;
  std::vector<Provenance> provenance;
  Simplex vertices;
};

inline std::vector<CoverMember> canonical_cover(const PartitionGraph& g) {
  std::map<Simplex, std::vector<Provenance>> members;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Partition& p = g.vertex(v);
    for (const Corner& c : removable_corners(p)) {
      auto f = star_fiber(g, v, c);
      if (!f.empty()) {
        members[detail::with_apex(v, std::move(f))].push_back({CoverKind::star_max, v, c});
      }
    }
    for (const Corner& a : addable_corners(p)) {
      auto f = top_fiber(g, v, a);
      if (!f.empty()) {
        members[detail::with_apex(v, std::move(f))].push_back({CoverKind::top_max, v, a});
      }
    }
  }
  std::vector<CoverMember> out;
  out.reserve(members.size());
  for (auto& [vertices, prov] : members) {
    CoverKind kind = vertices.size() == 2 ? CoverKind::edge : prov.front().kind;
    out.push_back({kind, std::move(prov), vertices});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cliques and their classification.

inline bool is_clique(const PartitionGraph& g, const Simplex& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size() || (i > 0 && s[i] <= s[i - 1])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.adjacent(s[j], s[i])) return false;
    }
  }
  return true;
}

inline std::vector<Transfer> decompositions(const PartitionGraph& g, VertexId from, VertexId to) {
  return transfers_between(g.vertex(from), g.vertex(to));
}

enum class TriangleType { star, top, not_triangle };

struct TriangleClass {
  TriangleType type = TriangleType::not_triangle;
  std::optional<Corner> corner;  // shared removable (star) or addable (top) corner
};

/// Decides whether μ1 - λ - μ2 closes to a triangle from the transfer
/// decompositions alone, without consulting adjacency of μ1 and μ2.
inline TriangleClass classify_triangle(const PartitionGraph& g, VertexId apex, VertexId first,
                                       VertexId second) {
  if (first == second || !g.adjacent(apex, first) || !g.adjacent(apex, second)) {
    throw Error(ErrorKind::invalid_argument, "classify_triangle needs two distinct neighbors");
  }
  const auto d1 = decompositions(g, apex, first);
  const auto d2 = decompositions(g, apex, second);
  for (const auto& t1 : d1) {
    for (const auto& t2 : d2) {
      if (t1.source == t2.source) return {TriangleType::star, t1.source};
    }
  }
  for (const auto& t1 : d1) {
    for (const auto& t2 : d2) {
      if (t1.target == t2.target) return {TriangleType::top, t1.target};
    }
  }
  return {};
}

enum class CliqueKind { star, top, small };

struct CliqueClass {
  CliqueKind kind = CliqueKind::small;
  VertexId base = 0;
  std::optional<Corner> corner;
};

/// Witness (λ, corner) with S inside the star- or top-simplex at λ, where λ
/// is the lowest vertex of S.
inline CliqueClass classify_clique(const PartitionGraph& g, const Simplex& s) {
  if (!is_clique(g, s)) throw Error(ErrorKind::not_a_clique, "vertex set is not a clique");
  const VertexId base = *std::min_element(s.begin(), s.end(), [&](VertexId a, VertexId b) {
    return g.height_of(a) < g.height_of(b);
  });
  if (s.size() <= 2) return {CliqueKind::small, base, std::nullopt};

  std::vector<std::vector<Transfer>> decomp;
  for (VertexId v : s) {
    if (v != base) decomp.push_back(decompositions(g, base, v));
  }
  auto covers_all = [&](auto&& shares) {
    return std::all_of(decomp.begin(), decomp.end(), [&](const std::vector<Transfer>& ts) {
      return std::any_of(ts.begin(), ts.end(), shares);
    });
  };
  for (const Corner& c : removable_corners(g.vertex(base))) {
    if (covers_all([&](const Transfer& t) { return t.source == c; })) {
      return {CliqueKind::star, base, c};
    }
  }
  for (const Corner& a : addable_corners(g.vertex(base))) {
    if (covers_all([&](const Transfer& t) { return t.target == a; })) {
      return {CliqueKind::top, base, a};
    }
  }
  throw Error(ErrorKind::theorem_violation, "clique lies in no star- or top-simplex");
}

/// Facets from the classification: full star/top simplices with at least two
/// fiber elements, edges whose star and top fibers are both singletons, and
/// isolated vertices.
inline std::vector<Simplex> maximal_simplices(const PartitionGraph& g) {
  std::vector<Simplex> facets;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Partition& p = g.vertex(v);
    if (g.neighbors(v).empty()) facets.push_back({v});
    for (const Corner& c : removable_corners(p)) {
      auto f = star_fiber(g, v, c);
      if (f.size() >= 2) facets.push_back(detail::with_apex(v, std::move(f)));
    }
    for (const Corner& a : addable_corners(p)) {
      auto f = top_fiber(g, v, a);
      if (f.size() >= 2) facets.push_back(detail::with_apex(v, std::move(f)));
    }
    for (const Transfer& t : admissible_transfers(p)) {
      if (star_fiber(p, t.source).size() == 1 && top_fiber(p, t.target).size() == 1) {
        facets.push_back(make_simplex({v, g.id_of(apply_transfer(p, t))}));
      }
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

struct SimplexEnumeration {
  FVector fvector;
  std::vector<Simplex> simplices;
};

/// Every clique exactly once, generated as faces of the facets.
inline SimplexEnumeration enumerate_simplices(const PartitionGraph& g) {
  auto simplices = all_faces(maximal_simplices(g));
  FVector f = fvector_of(simplices);
  return {std::move(f), std::move(simplices)};
}

struct EulerPair {
  std::int64_t chi = 0;
  std::int64_t b = 0;
};

inline EulerPair euler_characteristic(int n) {
  const auto chi = enumerate_simplices(build_graph(n)).fvector.euler_characteristic;
  return {chi, chi - 1};
}

}  // namespace partcx
