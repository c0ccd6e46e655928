#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "partcx/error.hpp"

namespace partcx {

/// A partition of n stored as its rows, weakly decreasing, no zero parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) {
        throw Error(ErrorKind::invalid_argument, "partition parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw Error(ErrorKind::invalid_argument, "partition parts must be weakly decreasing");
      }
      total_ += parts_[i];
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Row length, 1-based; zero past the last row.
  int row(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

enum class CornerKind { removable, addable };

/// A cell position of a Ferrers diagram, 1-based.
struct Corner {
  int row = 0;
  int col = 0;
  CornerKind kind = CornerKind::removable;

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// One-cell move: remove `source`, add at `target`, reorder rows.
struct Transfer {
  Corner source;
  Corner target;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

// ---------------------------------------------------------------------------
// Text syntax: "[3,1]".

inline std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  out += ']';
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << format_partition(p);
}

inline std::ostream& operator<<(std::ostream& os, const Corner& c) {
  return os << (c.kind == CornerKind::removable ? "rem(" : "add(") << c.row << ','
            << c.col << ')';
}

inline Partition parse_partition(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorKind::invalid_argument,
                 std::string("cannot parse partition '") + std::string(text) + "': " + why);
  };
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  if (compact.size() < 3 || compact.front() != '[' || compact.back() != ']') {
    throw fail("expected [a,b,...]");
  }
  std::vector<int> parts;
  std::istringstream body(compact.substr(1, compact.size() - 2));
  std::string field;
  while (std::getline(body, field, ',')) {
    if (field.empty() || field.find_first_not_of("-0123456789") != std::string::npos) {
      throw fail("non-integer entry");
    }
    long value = 0;
    try {
      value = std::stol(field);
    } catch (const std::exception&) {
      throw fail("entry out of range");
    }
    if (value <= 0 || value > 1'000'000) throw fail("entries must be positive");
    if (!parts.empty() && value > parts.back()) throw fail("entries must be weakly decreasing");
    parts.push_back(static_cast<int>(value));
  }
  if (parts.empty() || compact[compact.size() - 2] == ',') throw fail("empty entry");
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Enumeration and basic statistics.

/// All partitions of n in lexicographically descending order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // Rightmost part greater than 1.
    std::size_t k = cur.size();
    int ones = 0;
    while (k > 0 && cur[k - 1] == 1) {
      --k;
      ++ones;
    }
    if (k == 0) break;
    int m = cur[k - 1] - 1;
    int rest = ones + 1;
    cur.resize(k - 1);
    cur.push_back(m);
    while (rest > 0) {
      int take = std::min(m, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
  return out;
}

/// Column lengths of the Ferrers diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.row(1)), 0);
  for (int r : p.parts()) {
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

/// h(λ) = Σ i·λ_i.
inline std::int64_t height(const Partition& p) {
  std::int64_t h = 0;
  for (int i = 1; i <= p.length(); ++i) h += static_cast<std::int64_t>(i) * p.row(i);
  return h;
}

// ---------------------------------------------------------------------------
// Corners and transfers.

inline std::vector<Corner> removable_corners(const Partition& p) {
  std::vector<Corner> out;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.row(i) > p.row(i + 1)) out.push_back({i, p.row(i), CornerKind::removable});
  }
  return out;
}

inline std::vector<Corner> addable_corners(const Partition& p) {
  std::vector<Corner> out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i == 1 || p.row(i - 1) > p.row(i)) out.push_back({i, p.row(i) + 1, CornerKind::addable});
  }
  out.push_back({p.length() + 1, 1, CornerKind::addable});
  return out;
}

inline bool is_removable_corner(const Partition& p, const Corner& c) {
  return c.kind == CornerKind::removable && c.row >= 1 && c.row <= p.length() &&
         c.col == p.row(c.row) && p.row(c.row) > p.row(c.row + 1);
}

inline bool is_addable_corner(const Partition& p, const Corner& a) {
  if (a.kind != CornerKind::addable || a.row < 1 || a.row > p.length() + 1) return false;
  return a.col == p.row(a.row) + 1 && (a.row == 1 || p.row(a.row - 1) > p.row(a.row));
}

namespace detail {

inline void require_corners(const Partition& p, const Corner& c, const Corner& a) {
  if (!is_removable_corner(p, c)) {
    std::ostringstream os;
    os << c << " is not a removable corner of " << p;
    throw Error(ErrorKind::invalid_corner, os.str());
  }
  if (!is_addable_corner(p, a)) {
    std::ostringstream os;
    os << a << " is not an addable corner of " << p;
    throw Error(ErrorKind::invalid_corner, os.str());
  }
}

// Remove a cell from row r(c), add one to row r(a), reorder. No validation.
inline Partition move_cell(const Partition& p, int from_row, int to_row) {
  std::vector<int> rows = p.parts();
  rows.resize(static_cast<std::size_t>(std::max(p.length(), to_row)), 0);
  --rows[static_cast<std::size_t>(from_row - 1)];
  ++rows[static_cast<std::size_t>(to_row - 1)];
  std::sort(rows.begin(), rows.end(), std::greater<>());
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

}  // namespace detail

/// Admissible iff the rows differ and the reordered result differs from p.
inline bool is_admissible(const Partition& p, const Corner& c, const Corner& a) {
  detail::require_corners(p, c, a);
  if (c.row == a.row) return false;
  return detail::move_cell(p, c.row, a.row) != p;
}

inline Partition apply_transfer(const Partition& p, const Corner& c, const Corner& a) {
  detail::require_corners(p, c, a);
  if (c.row == a.row) {
    throw Error(ErrorKind::inadmissible_transfer, "source and target lie in the same row");
  }
  Partition result = detail::move_cell(p, c.row, a.row);
  if (result == p) {
    throw Error(ErrorKind::inadmissible_transfer, "transfer leaves " + format_partition(p) +
                                                      " unchanged");
  }
  return result;
}

inline Partition apply_transfer(const Partition& p, const Transfer& t) {
  return apply_transfer(p, t.source, t.target);
}

/// All admissible transfers of p, ordered by (source row, target row).
inline std::vector<Transfer> admissible_transfers(const Partition& p) {
  std::vector<Transfer> out;
  const auto adds = addable_corners(p);
  for (const Corner& c : removable_corners(p)) {
    for (const Corner& a : adds) {
      if (c.row != a.row && detail::move_cell(p, c.row, a.row) != p) out.push_back({c, a});
    }
  }
  return out;
}

/// Every transfer (c, a) with p(c -> a) == q. Empty when not adjacent.
inline std::vector<Transfer> transfers_between(const Partition& p, const Partition& q) {
  std::vector<Transfer> out;
  for (const Transfer& t : admissible_transfers(p)) {
    if (detail::move_cell(p, t.source.row, t.target.row) == q) out.push_back(t);
  }
  return out;
}

}  // namespace partcx

template <>
struct std::hash<partcx::Partition> {
  std::size_t operator()(const partcx::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
