#include <gtest/gtest.h>

#include <random>

#include "partcx/loops.hpp"
#include "test_util.hpp"

namespace partcx {

void PrintTo(const EdgeLoop& loop, std::ostream* os) {
  *os << '(';
  for (VertexId v : loop.vertices) *os << ' ' << v;
  *os << " )";
}

namespace {

using test::error_kind_of;
using test::P;

EdgeLoop L(std::initializer_list<VertexId> v) { return EdgeLoop{std::vector<VertexId>(v)}; }

// Checks every property a trace must satisfy and returns its length.
std::size_t check_trace(const PartitionGraph& g, const ReductionTrace& trace) {
  EXPECT_TRUE(trace.final_loop().is_constant());
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const auto& prev = trace.steps[i - 1];
    const auto& step = trace.steps[i];
    const bool lower = step.complexity < prev.complexity;
    const bool shorter =
        step.complexity == prev.complexity && step.loop.length() < prev.loop.length();
    EXPECT_TRUE(lower || shorter);
    EXPECT_EQ(step.complexity, complexity(g, step.loop));
    if (step.rule == ReductionRule::detour) {
      EXPECT_TRUE(step.inserted.has_value());
      EXPECT_LT(g.height_of(*step.inserted), prev.complexity.max_height);
    }
  }
  return trace.steps.size();
}

TEST(Loops, ComplexityExamples) {
  const auto g4 = build_graph(4);
  const auto c = complexity(g4, parse_loop(g4, "[4] [4] [4]"));
  EXPECT_EQ(c.max_height, 4);
  EXPECT_EQ(c.peak_count, 2);

  const auto tri = complexity(g4, parse_loop(g4, "[3,1] [2,2] [2,1,1] [3,1]"));
  EXPECT_EQ(tri.max_height, 7);
  EXPECT_EQ(tri.peak_count, 1);

  const auto spur = complexity(g4, parse_loop(g4, "[4] [3,1] [4]"));
  EXPECT_EQ(spur.max_height, 5);
  EXPECT_EQ(spur.peak_count, 1);
}

TEST(Loops, InvalidLoops) {
  const auto g4 = build_graph(4);
  EXPECT_EQ(error_kind_of([&] { parse_loop(g4, "[4] [2,2] [4]"); }), ErrorKind::invalid_loop);
  EXPECT_EQ(error_kind_of([&] { parse_loop(g4, "[4] [3,1]"); }), ErrorKind::invalid_loop);
  EXPECT_EQ(error_kind_of([&] { complexity(g4, EdgeLoop{}); }), ErrorKind::invalid_loop);
  EXPECT_EQ(error_kind_of([&] { complexity(g4, L({0, 9, 0})); }), ErrorKind::invalid_loop);
  EXPECT_EQ(error_kind_of([&] { parse_loop(g4, "[4] [3]"); }), ErrorKind::unknown_vertex);
}

TEST(Loops, Normalize) {
  EXPECT_EQ(normalize(L({0, 1, 0})), L({0, 0}));
  EXPECT_EQ(normalize(L({0, 0, 1, 1, 0})), L({0, 0}));
  EXPECT_EQ(normalize(L({1, 2, 3, 2, 1})), L({1, 1}));
  EXPECT_EQ(normalize(L({1, 2, 3, 1})), L({1, 2, 3, 1}));
  EXPECT_EQ(normalize(L({1, 2, 3, 3, 1})), L({1, 2, 3, 1}));
}

TEST(Loops, ConstantLoopHasSingleStepTrace) {
  const auto g4 = build_graph(4);
  const auto trace = reduce_loop(g4, parse_loop(g4, "[2,2] [2,2]"));
  EXPECT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0].rule, ReductionRule::start);
  EXPECT_EQ(error_kind_of([&] { peak_reduce_step(g4, parse_loop(g4, "[4]")); }),
            ErrorKind::invalid_argument);
}

TEST(Loops, SpurLoopContracts) {
  const auto g4 = build_graph(4);
  const auto trace = reduce_loop(g4, parse_loop(g4, "[4] [3,1] [4]"));
  EXPECT_LE(trace.steps.size() - 1, 2u);
  EXPECT_TRUE(trace.final_loop().is_constant());
  EXPECT_EQ(trace.final_loop().vertices.front(), g4.id_of(P({4})));
  check_trace(g4, trace);
}

TEST(Loops, TriangleLoopUsesSharedCorner) {
  const auto g4 = build_graph(4);
  const auto loop = parse_loop(g4, "[3,1] [2,2] [2,1,1] [3,1]");
  const auto step = peak_reduce_step(g4, loop);
  EXPECT_EQ(step.rule, ReductionRule::triangle);
  EXPECT_EQ(step.peak, g4.id_of(P({2, 1, 1})));
  EXPECT_LT(step.loop.length(), loop.length());
  check_trace(g4, reduce_loop(g4, loop));
}

TEST(Loops, DetourRuleFires) {
  // A square (4,1,...) style fragment needs a detour; search G_6 for one.
  const auto g = build_graph(6);
  bool detour_seen = false;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400 && !detour_seen; ++i) {
    auto walk = random_closed_walk(g, static_cast<VertexId>(rng() % g.size()), rng, 30);
    if (!walk) continue;
    for (const auto& s : reduce_loop(g, *walk).steps) detour_seen |= s.rule == ReductionRule::detour;
  }
  EXPECT_TRUE(detour_seen);
}

TEST(Loops, RandomWalksReduce) {
  for (int n = 5; n <= 10; ++n) {
    const auto g = build_graph(n);
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(n));
    int reduced = 0;
    for (int i = 0; i < 300; ++i) {
      const auto start = static_cast<VertexId>(rng() % g.size());
      auto walk = random_closed_walk(g, start, rng, 40);
      if (!walk) continue;
      const auto trace = reduce_loop(g, *walk);
      check_trace(g, trace);
      ++reduced;
    }
    EXPECT_GT(reduced, 0);
  }
}

TEST(Loops, StepWithRepeatedPeaks) {
  // Every single step on a loop with M >= 2 lowers (H, M).
  const auto g = build_graph(9);
  std::mt19937_64 rng(99);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 50; ++i) {
    auto walk = random_closed_walk(g, static_cast<VertexId>(rng() % g.size()), rng, 40);
    if (!walk) continue;
    const EdgeLoop loop = normalize(*walk);
    if (loop.is_constant()) continue;
    const auto c = complexity(g, loop);
    if (c.peak_count < 2) continue;
    ++seen;
    const auto step = peak_reduce_step(g, loop);
    EXPECT_LT(step.complexity, c);
  }
  EXPECT_GT(seen, 0);
}

TEST(Loops, FormatRoundTrip) {
  const auto g4 = build_graph(4);
  const std::string text = "[4] [3,1] [2,2] [3,1] [4]";
  EXPECT_EQ(format_loop(g4, parse_loop(g4, text)), text);
}

}  // namespace
}  // namespace partcx
