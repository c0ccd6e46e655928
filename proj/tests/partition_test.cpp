#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "partcx/oracle.hpp"
#include "partcx/partition.hpp"
#include "test_util.hpp"

namespace partcx {
namespace {

using test::add;
using test::error_kind_of;
using test::P;
using test::rem;

// Conjugate as a vector padded to `width` columns.
std::vector<int> conj_vector(const Partition& p, int width) {
  auto v = conjugate(p).parts();
  v.resize(static_cast<std::size_t>(width), 0);
  return v;
}

TEST(Partition, RejectsInvalidParts) {
  EXPECT_EQ(error_kind_of([] { Partition({2, 3}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(error_kind_of([] { Partition({2, 0}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(error_kind_of([] { Partition({-1}); }), ErrorKind::invalid_argument);
}

TEST(Partition, EnumerateSmall) {
  EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{P({1})});
  const std::vector<Partition> four{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  EXPECT_EQ(enumerate_partitions(4), four);
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
}

TEST(Partition, EnumerateRejectsNonPositive) {
  EXPECT_EQ(error_kind_of([] { enumerate_partitions(0); }), ErrorKind::invalid_argument);
  EXPECT_EQ(error_kind_of([] { enumerate_partitions(-3); }), ErrorKind::invalid_argument);
}

TEST(Partition, EnumerateMatchesRecursiveOracle) {
  const std::vector<std::size_t> p_of_n{1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 1; n <= 15; ++n) {
    const auto fast = enumerate_partitions(n);
    const auto slow = oracle::partitions_recursive(n);
    ASSERT_EQ(fast.size(), slow.size()) << "n=" << n;
    EXPECT_EQ(fast.size(), p_of_n[static_cast<std::size_t>(n - 1)]);
    for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_EQ(fast[i].parts(), slow[i]);
    EXPECT_TRUE(std::is_sorted(fast.begin(), fast.end(), std::greater<>()));
    for (const auto& p : fast) EXPECT_EQ(p.total(), n);
  }
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(P({4})), P({1, 1, 1, 1}));
  EXPECT_EQ(conjugate(P({3, 1})), P({2, 1, 1}));
  for (const auto& p : enumerate_partitions(9)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, RemovableCorners) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(removable_corners(P({n})), std::vector<Corner>{rem(1, n)});
  }
  EXPECT_EQ(removable_corners(P({3, 1})), (std::vector<Corner>{rem(1, 3), rem(2, 1)}));
  EXPECT_EQ(removable_corners(P({2, 2})), std::vector<Corner>{rem(2, 2)});
}

TEST(Partition, AddableCorners) {
  EXPECT_EQ(addable_corners(P({1})), (std::vector<Corner>{add(1, 2), add(2, 1)}));
  EXPECT_EQ(addable_corners(P({3, 1})), (std::vector<Corner>{add(1, 4), add(2, 2), add(3, 1)}));
  EXPECT_EQ(addable_corners(P({2, 2})), (std::vector<Corner>{add(1, 3), add(3, 1)}));
}

TEST(Partition, CornerRowsFromConjugate) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const auto rc = removable_corners(p);
      const auto ac = addable_corners(p);
      const auto conj = conj_vector(p, n + 1);
      std::set<int> rcols, acols;
      for (const auto& c : rc) {
        EXPECT_EQ(c.row, conj[static_cast<std::size_t>(c.col - 1)]);
        rcols.insert(c.col);
      }
      for (const auto& a : ac) {
        EXPECT_EQ(a.row, conj[static_cast<std::size_t>(a.col - 1)] + 1);
        acols.insert(a.col);
      }
      EXPECT_EQ(rcols.size(), rc.size());
      EXPECT_EQ(acols.size(), ac.size());
      EXPECT_TRUE(std::is_sorted(rc.begin(), rc.end(),
                                 [](const Corner& x, const Corner& y) { return x.row < y.row; }));
    }
  }
}

TEST(Partition, ApplyTransferExamples) {
  EXPECT_EQ(apply_transfer(P({3, 1}), rem(1, 3), add(2, 2)), P({2, 2}));
  EXPECT_EQ(apply_transfer(P({1, 1, 1}), rem(3, 1), add(1, 2)), P({2, 1}));
  EXPECT_EQ(error_kind_of([] { apply_transfer(P({1, 1, 1}), rem(3, 1), add(4, 1)); }),
            ErrorKind::inadmissible_transfer);
  EXPECT_EQ(error_kind_of([] { apply_transfer(P({2}), rem(1, 2), add(1, 3)); }),
            ErrorKind::inadmissible_transfer);
  EXPECT_EQ(error_kind_of([] { apply_transfer(P({3, 1}), rem(1, 2), add(2, 2)); }),
            ErrorKind::invalid_corner);
  EXPECT_EQ(error_kind_of([] { apply_transfer(P({3, 1}), rem(1, 3), add(2, 3)); }),
            ErrorKind::invalid_corner);
  EXPECT_EQ(error_kind_of([] { apply_transfer(P({3, 1}), add(1, 4), add(2, 2)); }),
            ErrorKind::invalid_corner);
}

TEST(Partition, AdmissibilityExamples) {
  EXPECT_TRUE(is_admissible(P({3, 1}), rem(1, 3), add(2, 2)));
  EXPECT_FALSE(is_admissible(P({2}), rem(1, 2), add(1, 3)));
  EXPECT_FALSE(is_admissible(P({1, 1}), rem(2, 1), add(3, 1)));
  EXPECT_EQ(error_kind_of([] { is_admissible(P({2, 2}), rem(1, 2), add(3, 1)); }),
            ErrorKind::invalid_corner);
}

TEST(Partition, AdmissibleIffApplySucceeds) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      for (const auto& c : removable_corners(p)) {
        for (const auto& a : addable_corners(p)) {
          bool applied = true;
          try {
            apply_transfer(p, c, a);
          } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::inadmissible_transfer);
            applied = false;
          }
          EXPECT_EQ(is_admissible(p, c, a), applied) << p << ' ' << c << ' ' << a;
        }
      }
    }
  }
}

TEST(Partition, TransferMovesConjugateByUnitVectors) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const auto before = conj_vector(p, n + 1);
      for (const auto& t : admissible_transfers(p)) {
        const Partition q = apply_transfer(p, t);
        EXPECT_EQ(q.total(), n);
        auto expect = before;
        --expect[static_cast<std::size_t>(t.source.col - 1)];
        ++expect[static_cast<std::size_t>(t.target.col - 1)];
        EXPECT_EQ(conj_vector(q, n + 1), expect) << p << " -> " << q;
      }
    }
  }
}

TEST(Partition, Height) {
  EXPECT_EQ(height(P({7})), 7);
  EXPECT_EQ(height(P({1, 1, 1, 1})), 10);
  EXPECT_EQ(height(P({2, 1, 1})), 7);
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      std::int64_t via_conjugate = 0;
      const Partition conj = conjugate(p);
      for (int c : conj.parts()) via_conjugate += std::int64_t{c} * (c + 1) / 2;
      EXPECT_EQ(height(p), via_conjugate);
    }
  }
}

TEST(Partition, HeightChangeEqualsRowDifference) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      for (const auto& t : admissible_transfers(p)) {
        EXPECT_EQ(height(apply_transfer(p, t)) - height(p), t.target.row - t.source.row);
      }
    }
  }
}

TEST(Partition, ParseAndFormat) {
  EXPECT_EQ(parse_partition("[3,1]"), P({3, 1}));
  EXPECT_EQ(parse_partition(" [ 2 , 2 ,1 ] "), P({2, 2, 1}));
  EXPECT_EQ(format_partition(P({3, 1})), "[3,1]");
  for (const char* bad : {"[1,2]", "[0]", "[-1]", "[]", "3,1", "[3,,1]", "[3,1,]", "[a]"}) {
    EXPECT_EQ(error_kind_of([&] { parse_partition(bad); }), ErrorKind::invalid_argument) << bad;
  }
  for (const auto& p : enumerate_partitions(8)) EXPECT_EQ(parse_partition(format_partition(p)), p);
}

}  // namespace
}  // namespace partcx
