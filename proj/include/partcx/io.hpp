#pragma once

// Report serialization: f-vector tables, homology, posets and loop traces.
// Every exported id is 1-based, matching the facet and edge-list files.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "partcx/complex.hpp"
#include "partcx/homology.hpp"
#include "partcx/loops.hpp"
#include "partcx/nerve.hpp"

namespace partcx {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error(ErrorKind::invalid_argument, "unknown format '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// f-vector table.

struct TableRow {
  int n = 0;
  std::size_t partitions = 0;
  FVector fvector;
  std::int64_t chi = 0;
  std::int64_t b = 0;
};

inline TableRow table_row(int n) {
  const auto g = build_graph(n);
  FVector f = enumerate_simplices(g).fvector;
  const auto chi = f.euler_characteristic;
  return {n, g.size(), std::move(f), chi, chi - 1};
}

inline Json to_json(const TableRow& row) {
  return Json{{"n", row.n},
              {"partitions", row.partitions},
              {"f", row.fvector.counts},
              {"chi", row.chi},
              {"b", row.b}};
}

/// `n,f0,f1,...,chi,b`, with f-columns zero-padded to the widest row.
inline void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.fvector.counts.size());
  os << 'n';
  for (std::size_t p = 0; p < width; ++p) os << ",f" << p;
  os << ",chi,b\n";
  for (const auto& r : rows) {
    os << r.n;
    for (std::size_t p = 0; p < width; ++p) {
      os << ',' << (p < r.fvector.counts.size() ? r.fvector.counts[p] : 0);
    }
    os << ',' << r.chi << ',' << r.b << '\n';
  }
}

inline void write_table_text(std::ostream& os, const std::vector<TableRow>& rows) {
  for (const auto& r : rows) {
    os << "n=" << r.n << " p(n)=" << r.partitions << " f=(";
    for (std::size_t p = 0; p < r.fvector.counts.size(); ++p) {
      os << (p ? "," : "") << r.fvector.counts[p];
    }
    os << ") chi=" << r.chi << " b=" << r.b << '\n';
  }
}

inline void write_table(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::csv: write_table_csv(os, rows); break;
    case OutputFormat::text: write_table_text(os, rows); break;
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Homology.

namespace detail {

inline Json big_to_json(const BigInt& x) {
  if (x <= BigInt(INT64_MAX) && x >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(x);
  return x.str();
}

}  // namespace detail

/// `{dim: {betti, torsion}}` over reduced homology.
inline Json to_json(const HomologyReport& h) {
  Json out = Json::object();
  for (std::size_t p = 0; p < h.reduced.size(); ++p) {
    Json torsion = Json::array();
    for (const auto& t : h.reduced[p].torsion) torsion.push_back(detail::big_to_json(t));
    out[std::to_string(p)] = Json{{"betti", h.reduced[p].betti}, {"torsion", torsion}};
  }
  return out;
}

/// e.g. `H~0=0 H~1=0 H~2=Z^5 chi=6`.
inline std::string homology_summary(const HomologyReport& h) {
  std::ostringstream os;
  for (std::size_t p = 0; p < h.reduced.size(); ++p) {
    const auto& d = h.reduced[p];
    os << "H~" << p << '=';
    if (d.trivial()) {
      os << '0';
    } else {
      bool first = true;
      if (d.betti > 0) {
        os << "Z^" << d.betti;
        first = false;
      }
      for (const auto& t : d.torsion) {
        os << (first ? "" : "+") << "Z/" << t;
        first = false;
      }
    }
    os << ' ';
  }
  os << "chi=" << h.euler_characteristic;
  return os.str();
}

// ---------------------------------------------------------------------------
// Intersection poset.

inline std::string_view to_string(CoverKind k) {
  switch (k) {
    case CoverKind::star_max: return "star";
    case CoverKind::top_max: return "top";
    case CoverKind::edge: return "edge";
  }
  return "unknown";
}

inline Json to_json(const NerveComplex& nerve, const IntersectionPoset& poset) {
  Json members = Json::array();
  for (MemberId m = 0; m < nerve.member_count(); ++m) {
    std::vector<VertexId> vs;
    for (VertexId v : nerve.members()[m].vertices) vs.push_back(v + 1);
    members.push_back(
        Json{{"id", m + 1}, {"kind", to_string(nerve.members()[m].kind)}, {"vertices", vs}});
  }
  Json elements = Json::array();
  for (std::uint32_t i = 0; i < poset.elements.size(); ++i) {
    std::vector<MemberId> ms;
    for (MemberId m : poset.elements[i]) ms.push_back(m + 1);
    elements.push_back(Json{{"id", i + 1}, {"members", ms}});
  }
  Json hasse = Json::array();
  for (auto [lo, hi] : poset.hasse_edges()) hasse.push_back(Json::array({lo + 1, hi + 1}));
  return Json{{"cover", members},
              {"elements", elements},
              {"hasse", hasse},
              {"max_chain_length", max_chain_length(poset)}};
}

// ---------------------------------------------------------------------------
// Loop reduction traces.

inline Json to_json(const PartitionGraph& g, const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json loop = Json::array();
    for (VertexId v : s.loop.vertices) loop.push_back(format_partition(g.vertex(v)));
    Json step{{"rule", to_string(s.rule)},
              {"H", s.complexity.max_height},
              {"M", s.complexity.peak_count},
              {"loop", loop}};
    if (s.peak) step["peak"] = format_partition(g.vertex(*s.peak));
    if (s.inserted) step["inserted"] = format_partition(g.vertex(*s.inserted));
    steps.push_back(std::move(step));
  }
  return Json{{"n", g.n()}, {"steps", steps}};
}

inline void write_trace_text(std::ostream& os, const PartitionGraph& g,
                             const ReductionTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << i << ' ' << to_string(s.rule) << " H=" << s.complexity.max_height
       << " M=" << s.complexity.peak_count << " : " << format_loop(g, s.loop) << '\n';
  }
}

}  // namespace partcx
