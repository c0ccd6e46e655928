#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partcx/error.hpp"
#include "partcx/simplicial.hpp"

namespace partcx {

using BigInt = boost::multiprecision::cpp_int;

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::invalid_argument, "ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Column-sparse small-integer matrix; boundary maps live here.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// columns[j] = (row, value) pairs, rows ascending, values nonzero.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  bool is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
  }
};

/// a * b, exact. Throws on dimension mismatch.
inline SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::invalid_argument, "dimension mismatch");
  SparseIntMatrix out{a.rows, b.cols, std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>(b.cols)};
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (auto [k, bv] : b.columns[j]) {
      for (auto [i, av] : a.columns[k]) acc[i] += av * bv;
    }
    for (auto [i, v] : acc) {
      if (v != 0) out.columns[j].emplace_back(i, v);
    }
  }
  return out;
}

struct SmithForm {
  std::size_t rank = 0;
  /// Diagonal entries greater than one, in divisibility order.
  std::vector<BigInt> invariant_factors;
};

namespace detail {

struct SparseEntry {
  std::uint32_t col;
  BigInt value;
};
using SparseRow = std::vector<SparseEntry>;

inline const BigInt* find_entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

// target -= q * source
inline SparseRow subtract_multiple(const SparseRow& target, const SparseRow& source,
                                   const BigInt& q) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].col < source[j].col)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || source[j].col < target[i].col) {
      out.push_back({source[j].col, -q * source[j].value});
      ++j;
    } else {
      BigInt v = target[i].value - q * source[j].value;
      if (v != 0) out.push_back({target[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Turns a diagonal into a divisibility chain by repeated (gcd, lcm) swaps.
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

inline SmithForm smith_from_rows(std::vector<SparseRow> rows, std::size_t cols) {
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) col_rows[e.col].push_back(r);
  }
  std::vector<bool> active(rows.size(), true);
  std::vector<BigInt> diagonal;

  while (true) {
    // Smallest magnitude entry; ties broken toward short rows.
    std::int64_t pr = -1;
    std::uint32_t pc = 0;
    BigInt best;
    std::size_t best_len = 0;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      for (const auto& e : rows[r]) {
        BigInt mag = abs(e.value);
        if (pr < 0 || mag < best || (mag == best && rows[r].size() < best_len)) {
          pr = r;
          pc = e.col;
          best = std::move(mag);
          best_len = rows[r].size();
        }
      }
      if (pr >= 0 && best == 1 && best_len == 1) break;
    }
    if (pr < 0) break;
    const auto prow = static_cast<std::uint32_t>(pr);
    const BigInt pivot = *find_entry(rows[prow], pc);

    bool reduced = true;
    // Row operations clear column pc below/above the pivot.
    std::vector<std::uint32_t> touching;
    std::swap(touching, col_rows[pc]);
    for (std::uint32_t r : touching) {
      if (r == prow || !active[r]) continue;
      const BigInt* v = find_entry(rows[r], pc);
      if (!v) continue;
      const BigInt q = *v / pivot;  // truncates toward zero
      if (*v - q * pivot != 0) reduced = false;
      if (q == 0) {
        col_rows[pc].push_back(r);
        continue;
      }
      SparseRow updated = subtract_multiple(rows[r], rows[prow], q);
      // Index fill-in; stale entries are filtered on lookup.
      for (const auto& e : rows[prow]) {
        if (e.col != pc && !find_entry(rows[r], e.col)) col_rows[e.col].push_back(r);
      }
      rows[r] = std::move(updated);
      if (find_entry(rows[r], pc)) col_rows[pc].push_back(r);
    }
    col_rows[pc].push_back(prow);
    if (!reduced) continue;

    // Column operations only touch the pivot row once its column is clear.
    SparseRow kept;
    for (auto& e : rows[prow]) {
      if (e.col == pc) {
        kept.push_back(e);
        continue;
      }
      BigInt rem = e.value - (e.value / pivot) * pivot;
      if (rem != 0) {
        reduced = false;
        kept.push_back({e.col, std::move(rem)});
      }
    }
    rows[prow] = std::move(kept);
    if (!reduced) continue;

    diagonal.push_back(abs(pivot));
    active[prow] = false;
  }

  SmithForm form;
  form.rank = diagonal.size();
  std::vector<BigInt> nontrivial;
  for (auto& d : diagonal) {
    if (d > 1) nontrivial.push_back(std::move(d));
  }
  for (auto& d : normalize_diagonal(std::move(nontrivial))) {
    if (d > 1) form.invariant_factors.push_back(std::move(d));
  }
  return form;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  std::vector<detail::SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) rows[r].push_back({static_cast<std::uint32_t>(c), m(r, c)});
    }
  }
  return detail::smith_from_rows(std::move(rows), m.cols());
}

inline SmithForm smith_normal_form(const SparseIntMatrix& m) {
  std::vector<detail::SparseRow> rows(m.rows);
  for (std::uint32_t c = 0; c < m.cols; ++c) {
    for (auto [r, v] : m.columns[c]) rows[r].push_back({c, BigInt(v)});
  }
  return detail::smith_from_rows(std::move(rows), m.cols);
}

// ---------------------------------------------------------------------------
// Chain complexes.

struct ChainComplex {
  /// basis[p]: the p-simplices, lexicographic.
  std::vector<std::vector<Simplex>> basis;
  /// boundaries[p]: C_p -> C_{p-1}; boundaries[0] is the zero map to 0.
  std::vector<SparseIntMatrix> boundaries;

  int dimension() const { return static_cast<int>(basis.size()) - 1; }
};

inline ChainComplex build_chain_complex(std::span<const Simplex> facets) {
  if (facets.empty()) throw Error(ErrorKind::empty_complex, "no facets");
  ChainComplex cc;
  for (auto& face : all_faces(facets)) {
    if (cc.basis.size() < face.size()) cc.basis.resize(face.size());
    cc.basis[face.size() - 1].push_back(std::move(face));
  }
  cc.boundaries.resize(cc.basis.size());
  cc.boundaries[0] = {0, cc.basis[0].size(), {}};
  cc.boundaries[0].columns.resize(cc.basis[0].size());
  for (std::size_t p = 1; p < cc.basis.size(); ++p) {
    const auto& lower = cc.basis[p - 1];
    SparseIntMatrix d{lower.size(), cc.basis[p].size(), {}};
    d.columns.resize(cc.basis[p].size());
    for (std::size_t j = 0; j < cc.basis[p].size(); ++j) {
      const Simplex& s = cc.basis[p][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = std::lower_bound(lower.begin(), lower.end(), face);
        d.columns[j].emplace_back(static_cast<std::uint32_t>(it - lower.begin()),
                                  i % 2 == 0 ? 1 : -1);
      }
      std::sort(d.columns[j].begin(), d.columns[j].end());
    }
    cc.boundaries[p] = std::move(d);
  }
  return cc;
}

inline ChainComplex build_chain_complex(const std::vector<Simplex>& facets) {
  return build_chain_complex(std::span<const Simplex>(facets));
}

/// True when ∂_{p-1} ∘ ∂_p vanishes for every p >= 2.
inline bool boundary_squares_to_zero(const ChainComplex& cc) {
  for (std::size_t p = 2; p < cc.boundaries.size(); ++p) {
    if (!multiply(cc.boundaries[p - 1], cc.boundaries[p]).is_zero()) return false;
  }
  return true;
}

struct DegreeHomology {
  std::int64_t betti = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
};

struct HomologyReport {
  /// Reduced homology in degrees 0..dim.
  std::vector<DegreeHomology> reduced;
  /// Unreduced Betti numbers in degrees 0..dim.
  std::vector<std::int64_t> betti;
  std::int64_t euler_characteristic = 0;
  std::int64_t reduced_euler_characteristic = 0;

  /// H̃_i = 0 for i != 2 and H̃_2 free of rank χ - 1.
  bool concentrated_in_degree_two() const {
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (i == 2) {
        if (!reduced[i].torsion.empty() || reduced[i].betti != reduced_euler_characteristic) {
          return false;
        }
      } else if (!reduced[i].trivial()) {
        return false;
      }
    }
    return reduced.size() > 2 || reduced_euler_characteristic == 0;
  }
};

inline HomologyReport reduced_homology(const ChainComplex& cc) {
  const std::size_t top = cc.basis.size();
  std::vector<SmithForm> forms(top + 1);  // forms[p] for ∂_p; forms[top] is the zero map
  for (std::size_t p = 1; p < top; ++p) forms[p] = smith_normal_form(cc.boundaries[p]);

  HomologyReport report;
  report.reduced.resize(top);
  report.betti.resize(top);
  for (std::size_t p = 0; p < top; ++p) {
    const auto cells = static_cast<std::int64_t>(cc.basis[p].size());
    const auto rank_out = static_cast<std::int64_t>(forms[p].rank);
    const auto rank_in = static_cast<std::int64_t>(forms[p + 1].rank);
    report.betti[p] = cells - rank_out - rank_in;
    report.reduced[p].betti = report.betti[p] - (p == 0 && cells > 0 ? 1 : 0);
    report.reduced[p].torsion = forms[p + 1].invariant_factors;
    report.euler_characteristic += (p % 2 == 0 ? 1 : -1) * cells;
  }
  report.reduced_euler_characteristic = report.euler_characteristic - 1;
  return report;
}

}  // namespace partcx
