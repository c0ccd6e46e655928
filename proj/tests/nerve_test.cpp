#include <gtest/gtest.h>

#include <map>
#include <set>

#include "partcx/nerve.hpp"
#include "partcx/oracle.hpp"
#include "partcx/reference.hpp"
#include "test_util.hpp"

namespace partcx {
namespace {

using test::error_kind_of;
using test::P;
using test::rem;

Simplex full_star(const PartitionGraph& g, VertexId v, const Corner& c) {
  return detail::with_apex(v, star_fiber(g, v, c));
}

Simplex full_top(const PartitionGraph& g, VertexId v, const Corner& a) {
  return detail::with_apex(v, top_fiber(g, v, a));
}

TEST(Nerve, SmallCases) {
  const auto n1 = build_nerve(build_graph(1));
  EXPECT_TRUE(n1.empty());
  EXPECT_TRUE(anchor(n1, 0).members.empty());
  EXPECT_EQ(nerve_fvector(n1).euler_characteristic, 0);

  const auto n2 = build_nerve(build_graph(2));
  EXPECT_EQ(n2.member_count(), 1u);
  EXPECT_EQ(nerve_fvector(n2).euler_characteristic, 1);

  EXPECT_EQ(nerve_fvector(build_nerve(build_graph(4))).euler_characteristic, 1);
  EXPECT_EQ(nerve_fvector(build_nerve(build_graph(8))).euler_characteristic, 2);
  EXPECT_EQ(error_kind_of([&] { n2.anchor_of(7); }), ErrorKind::unknown_vertex);
}

TEST(Nerve, FVectorMatchesBruteForce) {
  // Every subfamily of the cover, checked directly, for n small enough.
  for (int n = 2; n <= 6; ++n) {
    const auto nerve = build_nerve(build_graph(n));
    const std::size_t m = nerve.member_count();
    ASSERT_LT(m, 24u);
    std::vector<std::int64_t> counts;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      MemberSet family;
      for (MemberId i = 0; i < m; ++i) {
        if (mask >> i & 1) family.push_back(i);
      }
      if (!nerve.spans_simplex(family)) continue;
      if (counts.size() < family.size()) counts.resize(family.size(), 0);
      ++counts[family.size() - 1];
    }
    EXPECT_EQ(nerve_fvector(nerve).counts, counts) << "n=" << n;
  }
}

TEST(Nerve, EulerCharacteristicMatchesComplex) {
  for (int n = 2; n <= 12; ++n) {
    const auto nerve = build_nerve(build_graph(n));
    EXPECT_EQ(nerve_fvector(nerve).euler_characteristic, *reference::published_chi(n));
  }
}

TEST(Anchors, Examples) {
  const auto g3 = build_graph(3);
  const auto n3 = build_nerve(g3);
  const VertexId mid = g3.id_of(P({2, 1}));
  const auto a = anchor(n3, mid);
  std::vector<MemberId> expect;
  for (MemberId m = 0; m < n3.member_count(); ++m) {
    const auto& vs = n3.members()[m].vertices;
    if (std::binary_search(vs.begin(), vs.end(), mid)) expect.push_back(m);
  }
  EXPECT_EQ(a.members, expect);
  EXPECT_EQ(a.members.size(), 2u);
  EXPECT_TRUE(anchor_intersection(n3, make_simplex({g3.id_of(P({3})), g3.id_of(P({1, 1, 1}))}))
                  .empty());

  const auto g4 = build_graph(4);
  const auto n4 = build_nerve(g4);
  const VertexId v = g4.id_of(P({3, 1}));
  const Simplex star = full_star(g4, v, rem(1, 3));
  bool found = false;
  for (MemberId m : anchor(n4, v).members) found |= n4.members()[m].vertices == star;
  EXPECT_TRUE(found);
}

TEST(Anchors, IntersectionNonemptyIffClique) {
  for (int n = 2; n <= 7; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    for (VertexId u = 0; u < g.size(); ++u) {
      EXPECT_EQ(anchor_intersection(nerve, {u}), nerve.anchor_of(u));
      for (VertexId v = u + 1; v < g.size(); ++v) {
        EXPECT_EQ(!anchor_intersection(nerve, {u, v}).empty(), g.adjacent(u, v));
      }
    }
    for (const auto& s : oracle::all_cliques(g)) {
      MemberSet containing;
      for (MemberId m = 0; m < nerve.member_count(); ++m) {
        if (is_subset(s, nerve.members()[m].vertices)) containing.push_back(m);
      }
      EXPECT_EQ(anchor_intersection(nerve, s), containing);
    }
  }
}

TEST(Anchors, Trichotomy) {
  for (int n = 2; n <= 10; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    for (const auto& s : oracle::all_cliques(g)) {
      const auto a = anchor_intersection(nerve, s);
      ASSERT_FALSE(a.empty());
      if (s.size() >= 3) {
        EXPECT_EQ(a.size(), 1u) << "n=" << n;
      } else if (s.size() == 2) {
        EXPECT_LE(a.size(), 3u) << "n=" << n;
        // Members come from the star, top and edge simplices at the lower end.
        const VertexId lo = g.height_of(s[0]) < g.height_of(s[1]) ? s[0] : s[1];
        const VertexId hi = lo == s[0] ? s[1] : s[0];
        const auto t = decompositions(g, lo, hi).front();
        const std::set<Simplex> allowed{full_star(g, lo, t.source), full_top(g, lo, t.target), s};
        for (MemberId m : a) EXPECT_EQ(allowed.count(nerve.members()[m].vertices), 1u);
      }
    }
  }
}

TEST(Anchors, Rigidity) {
  for (int n = 3; n <= 10; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    for (VertexId v = 0; v < g.size(); ++v) {
      const Partition& p = g.vertex(v);
      for (const auto& c : removable_corners(p)) {
        const auto fiber = star_fiber(g, v, c);
        if (fiber.size() < 2) continue;
        const Simplex full = full_star(g, v, c);
        for (MemberId m : nerve.anchor_of(v)) {
          const auto& vs = nerve.members()[m].vertices;
          const auto hits = std::count_if(fiber.begin(), fiber.end(), [&](VertexId w) {
            return std::binary_search(vs.begin(), vs.end(), w);
          });
          if (hits >= 2) {
            EXPECT_EQ(vs, full);
          }
        }
      }
      for (const auto& a : addable_corners(p)) {
        const auto fiber = top_fiber(g, v, a);
        if (fiber.size() < 2) continue;
        const Simplex full = full_top(g, v, a);
        for (MemberId m : nerve.anchor_of(v)) {
          const auto& vs = nerve.members()[m].vertices;
          const auto hits = std::count_if(fiber.begin(), fiber.end(), [&](VertexId w) {
            return std::binary_search(vs.begin(), vs.end(), w);
          });
          if (hits >= 2) {
            EXPECT_EQ(vs, full);
          }
        }
      }
    }
  }
}

TEST(Closure, Laws) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    const auto cliques = oracle::all_cliques(g);
    std::map<Simplex, Simplex> cl;
    for (const auto& s : cliques) {
      const Simplex c = closure(nerve, s);
      EXPECT_TRUE(is_subset(s, c));
      EXPECT_TRUE(is_clique(g, c));
      EXPECT_EQ(closure(nerve, c), c);
      cl.emplace(s, c);
    }
    for (const auto& s : cliques) {
      for (const auto& t : cliques) {
        if (s.size() < t.size() && is_subset(s, t)) {
          EXPECT_TRUE(is_subset(cl[s], cl[t]));
        }
      }
    }
  }
}

TEST(Closure, StarTriangle) {
  const auto g4 = build_graph(4);
  const auto nerve = build_nerve(g4);
  const Simplex tri = full_star(g4, g4.id_of(P({3, 1})), rem(1, 3));
  EXPECT_EQ(closure(nerve, tri), tri);
  // The edge {(3,1),(2,2)} is itself a cover member (a top simplex with one
  // fiber element), so it is closed.
  const Simplex edge = make_simplex({g4.id_of(P({3, 1})), g4.id_of(P({2, 2}))});
  EXPECT_EQ(closure(nerve, edge), edge);
  EXPECT_EQ(error_kind_of([&] {
              closure(nerve, make_simplex({g4.id_of(P({4})), g4.id_of(P({2, 2}))}));
            }),
            ErrorKind::not_a_clique);
}

TEST(Closure, FixedPointsBijectOntoPoset) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    const auto poset = build_poset(nerve);
    std::vector<Simplex> fixed;
    std::set<MemberSet> images;
    for (const auto& s : oracle::all_cliques(g)) {
      if (closure(nerve, s) != s) continue;
      fixed.push_back(s);
      EXPECT_TRUE(images.insert(anchor_intersection(nerve, s)).second) << "not injective";
    }
    EXPECT_EQ(images, std::set<MemberSet>(poset.elements.begin(), poset.elements.end()));
    for (const auto& s : fixed) {
      for (const auto& t : fixed) {
        const auto as = anchor_intersection(nerve, s);
        const auto at = anchor_intersection(nerve, t);
        EXPECT_EQ(is_subset(s, t), std::includes(as.begin(), as.end(), at.begin(), at.end()));
      }
    }
  }
}

TEST(Poset, SmallCases) {
  const auto p1 = build_poset(build_nerve(build_graph(1)));
  EXPECT_TRUE(p1.empty());
  EXPECT_EQ(max_chain_length(p1), 0);

  EXPECT_EQ(build_poset(build_nerve(build_graph(2))).elements.size(), 1u);
  EXPECT_EQ(max_chain_length(build_poset(build_nerve(build_graph(4)))), 2);
  EXPECT_EQ(max_chain_length(build_poset(build_nerve(build_graph(8)))), 2);
}

TEST(Poset, RestrictedMatchesUnrestricted) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    if (nerve.empty()) continue;
    const auto all = oracle::all_cliques(g);
    EXPECT_EQ(build_poset(nerve).elements, build_poset(nerve, all).elements) << "n=" << n;
  }
}

TEST(Poset, NonSingletonElementsAreVertexOrEdgeAnchors) {
  for (int n = 2; n <= 9; ++n) {
    const auto g = build_graph(n);
    const auto nerve = build_nerve(g);
    std::set<MemberSet> small;
    for (VertexId v = 0; v < g.size(); ++v) small.insert(nerve.anchor_of(v));
    for (auto [u, v] : g.edges()) small.insert(anchor_intersection(nerve, {u, v}));
    for (const auto& e : build_poset(nerve).elements) {
      if (e.size() > 1) {
        EXPECT_EQ(small.count(e), 1u);
      }
    }
  }
}

TEST(Poset, OrderComplexDimensionAndEuler) {
  for (int n = 2; n <= 12; ++n) {
    const auto poset = build_poset(build_nerve(build_graph(n)));
    EXPECT_LE(max_chain_length(poset), 2);
    const auto oc = order_complex(poset);
    EXPECT_LE(oc.fvector.dimension(), 2);
    EXPECT_EQ(oc.fvector.euler_characteristic, *reference::published_chi(n)) << "n=" << n;
    EXPECT_EQ(fvector_of(all_faces(oc.facets)).counts, oc.fvector.counts);
  }
}

TEST(Poset, HasseEdgesAreCovers) {
  const auto poset = build_poset(build_nerve(build_graph(7)));
  for (auto [lo, hi] : poset.hasse_edges()) {
    const auto& b = poset.below[hi];
    EXPECT_TRUE(std::binary_search(b.begin(), b.end(), lo));
    for (std::uint32_t mid : b) {
      const auto& bm = poset.below[mid];
      EXPECT_FALSE(std::binary_search(bm.begin(), bm.end(), lo));
    }
  }
}

}  // namespace
}  // namespace partcx
