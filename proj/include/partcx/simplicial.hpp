#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <span>
#include <vector>

#include "partcx/graph.hpp"

namespace partcx {

/// Sorted, duplicate-free vertex set.
using Simplex = std::vector<VertexId>;

inline Simplex make_simplex(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

inline bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex intersect(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct FVector {
  /// counts[p] = number of p-simplices.
  std::vector<std::int64_t> counts;
  std::int64_t euler_characteristic = 0;

  static FVector from_counts(std::vector<std::int64_t> counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    FVector f{std::move(counts), 0};
    for (std::size_t p = 0; p < f.counts.size(); ++p) {
      f.euler_characteristic += (p % 2 == 0 ? 1 : -1) * f.counts[p];
    }
    return f;
  }

  int dimension() const { return static_cast<int>(counts.size()) - 1; }

  friend bool operator==(const FVector&, const FVector&) = default;
};

template <class SimplexRange>
FVector fvector_of(const SimplexRange& simplices) {
  std::vector<std::int64_t> counts;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    if (counts.size() < s.size()) counts.resize(s.size(), 0);
    ++counts[s.size() - 1];
  }
  return FVector::from_counts(std::move(counts));
}

/// Every nonempty face of every facet, each exactly once, sorted by
/// (dimension, lexicographic).
template <class T>
std::vector<std::vector<T>> all_faces(std::span<const std::vector<T>> facets) {
  std::vector<std::vector<T>> faces;
  for (const auto& facet : facets) {
    const std::size_t k = facet.size();
    if (k >= 8 * sizeof(std::uint64_t)) {
      throw Error(ErrorKind::budget_exceeded, "facet too large to expand");
    }
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<T> face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) face.push_back(facet[i]);
      }
      faces.push_back(std::move(face));
    }
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

template <class T>
std::vector<std::vector<T>> all_faces(const std::vector<std::vector<T>>& facets) {
  return all_faces(std::span<const std::vector<T>>(facets));
}

/// Facet-list format: one facet per line, space-separated 1-based ids.
inline void write_facets(std::ostream& os, std::span<const Simplex> facets) {
  for (const auto& f : facets) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i] + 1;
    os << '\n';
  }
}

/// Inverse of write_facets. Blank lines and '#' comments are skipped.
inline std::vector<Simplex> read_facets(std::istream& is) {
  std::vector<Simplex> facets;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<VertexId> facet;
    long long id = 0;
    while (fields >> id) {
      if (id < 1) throw Error(ErrorKind::invalid_argument, "facet ids are 1-based");
      facet.push_back(static_cast<VertexId>(id - 1));
    }
    if (!fields.eof()) throw Error(ErrorKind::invalid_argument, "malformed facet line: " + line);
    if (!facet.empty()) facets.push_back(make_simplex(std::move(facet)));
  }
  return facets;
}

}  // namespace partcx
