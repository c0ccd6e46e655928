// Command-line front end: tables, verification suites, homology reports,
// exports and loop reduction traces.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exceeded, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partcx/complex.hpp"
#include "partcx/homology.hpp"
#include "partcx/io.hpp"
#include "partcx/loops.hpp"
#include "partcx/nerve.hpp"
#include "partcx/verify.hpp"

namespace {

using namespace partcx;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

// Largest n for table and bfile runs; homology has its own limit.
constexpr int kTableBudget = 30;
constexpr int kHomologyBudget = 14;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoFailure("cannot write to standard output");
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  file << text;
  file.close();
  if (!file) throw IoFailure("cannot write '" + *path + "'");
}

void emit_legend(const std::optional<std::string>& path, const std::string& text) {
  if (path) emit(*path + ".legend", text);
}

void require_budget(int n, int budget, bool ignore, std::string_view what) {
  if (n <= budget) return;
  if (!ignore) {
    throw Error(ErrorKind::budget_exceeded,
                std::string(what) + " for n=" + std::to_string(n) + " is beyond the default limit n<=" +
                    std::to_string(budget) + "; pass --ignore-budget to run it anyway");
  }
  std::cerr << "warning: " << what << " beyond the default limit n<=" << budget
            << "; this may take a long time\n";
}

std::string legend_of(const PartitionGraph& g) {
  std::ostringstream os;
  write_legend(os, g);
  return os.str();
}

struct Options {
  int n = 0;
  int max_n = 0;
  std::string format = "text";
  std::optional<std::string> out;
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool ignore_budget = false;
  std::string facets_file;
  bool edge_list = false;
  bool order_complex = false;
  std::string sequence = "chi";
  std::string loop;
};

int cmd_table(const Options& o) {
  require_budget(o.max_n, kTableBudget, o.ignore_budget, "table");
  std::vector<TableRow> rows;
  for (int n = 1; n <= o.max_n; ++n) rows.push_back(table_row(n));
  std::ostringstream os;
  write_table(os, rows, parse_output_format(o.format));
  emit(o.out, os.str());
  return 0;
}

int cmd_verify(const Options& o) {
  RunConfig cfg;
  cfg.max_n = o.max_n;
  for (const auto& name : o.suites) {
    for (Suite s : parse_suite(name)) {
      if (std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) {
        cfg.suites.push_back(s);
      }
    }
  }
  cfg.format = parse_output_format(o.format);
  cfg.out = o.out;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.ignore_budget = o.ignore_budget;
  if (cfg.ignore_budget) {
    std::cerr << "warning: --ignore-budget runs every suite up to n=" << cfg.max_n
              << "; large n may take a long time\n";
  }
  const auto outcomes = run_verification(cfg);
  std::ostringstream os;
  write_report(os, outcomes, cfg);
  emit(o.out, os.str());
  return any_failed(outcomes) ? kExitFail : 0;
}

int cmd_homology(const Options& o) {
  std::vector<Simplex> facets;
  if (!o.facets_file.empty()) {
    std::ifstream in(o.facets_file);
    if (!in) throw IoFailure("cannot read '" + o.facets_file + "'");
    facets = read_facets(in);
  } else {
    if (o.n < 1) throw Error(ErrorKind::invalid_argument, "--n must be at least 1");
    require_budget(o.n, kHomologyBudget, o.ignore_budget, "homology");
    facets = maximal_simplices(build_graph(o.n));
  }
  const auto report = reduced_homology(build_chain_complex(facets));
  const bool check = o.facets_file.empty();
  const bool ok = !check || report.concentrated_in_degree_two();

  std::ostringstream os;
  switch (parse_output_format(o.format)) {
    case OutputFormat::json:
      os << to_json(report).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      os << "dim,betti,torsion\n";
      for (std::size_t p = 0; p < report.reduced.size(); ++p) {
        os << p << ',' << report.reduced[p].betti << ',';
        for (std::size_t i = 0; i < report.reduced[p].torsion.size(); ++i) {
          os << (i ? " " : "") << report.reduced[p].torsion[i];
        }
        os << '\n';
      }
      break;
    case OutputFormat::text:
      os << homology_summary(report) << '\n';
      os << "unreduced betti:";
      for (auto b : report.betti) os << ' ' << b;
      os << '\n';
      if (check) os << (ok ? "pass" : "fail") << ": concentration in degree 2\n";
      break;
  }
  emit(o.out, os.str());
  return ok ? 0 : kExitFail;
}

int cmd_export_graph(const Options& o) {
  const auto g = build_graph(o.n);
  std::ostringstream os;
  if (o.edge_list) {
    write_edge_list(os, g);
  } else {
    write_dimacs(os, g);
  }
  emit(o.out, os.str());
  emit_legend(o.out, legend_of(g));
  return 0;
}

int cmd_export_facets(const Options& o) {
  const auto g = build_graph(o.n);
  std::ostringstream os;
  write_facets(os, maximal_simplices(g));
  emit(o.out, os.str());
  emit_legend(o.out, legend_of(g));
  return 0;
}

int cmd_export_poset(const Options& o) {
  const auto g = build_graph(o.n);
  const auto nerve = build_nerve(g);
  const auto poset = build_poset(nerve);
  std::ostringstream os;
  if (!o.order_complex) {
    os << to_json(nerve, poset).dump(2) << '\n';
    emit(o.out, os.str());
    return 0;
  }
  write_facets(os, order_complex(poset).facets);
  emit(o.out, os.str());
  std::ostringstream legend;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    legend << i + 1 << " {";
    for (std::size_t k = 0; k < poset.elements[i].size(); ++k) {
      legend << (k ? "," : "") << poset.elements[i][k] + 1;
    }
    legend << "}\n";
  }
  emit_legend(o.out, legend.str());
  return 0;
}

int cmd_export_bfile(const Options& o) {
  require_budget(o.max_n, kTableBudget, o.ignore_budget, "bfile");
  std::ostringstream os;
  for (int n = 1; n <= o.max_n; ++n) {
    const auto e = euler_characteristic(n);
    os << n << ' ' << (o.sequence == "chi" ? e.chi : e.b) << '\n';
  }
  emit(o.out, os.str());
  return 0;
}

int cmd_reduce(const Options& o) {
  const auto g = build_graph(o.n);
  const auto trace = reduce_loop(g, parse_loop(g, o.loop));
  std::ostringstream os;
  if (parse_output_format(o.format) == OutputFormat::json) {
    os << to_json(g, trace).dump(2) << '\n';
  } else {
    write_trace_text(os, g, trace);
  }
  emit(o.out, os.str());
  return 0;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::budget_exceeded: return kExitBudget;
    case ErrorKind::theorem_violation: return kExitFail;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition transfer graphs, their clique complexes and verification suites"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::string> suite_names;
  for (const auto& info : suite_table) suite_names.emplace_back(info.name);
  suite_names.emplace_back("all");
  const auto formats = CLI::IsMember({"text", "csv", "json"});

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write to this file"); };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_flag("--ignore-budget", o.ignore_budget, "Run beyond the default n limits");
  };

  auto* table = app.add_subcommand("table", "f-vector, chi and b for n = 1..max-n");
  table->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "text, csv or json")->check(formats);
  add_out(table);
  add_budget(table);

  auto* verify = app.add_subcommand("verify", "Run verification suites for n = 1..max-n");
  verify->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--suite", o.suites, "Suite name (repeatable)")
      ->check(CLI::IsMember(suite_names));
  verify->add_option("--format", o.format, "text, csv or json")->check(formats);
  verify->add_option("--seed", o.seed, "Seed for randomized loop walks");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_out(verify);
  add_budget(verify);

  auto* homology = app.add_subcommand("homology", "Reduced integer homology of K_n or a facet file");
  auto* hn = homology->add_option("--n", o.n, "Build K_n")->check(CLI::PositiveNumber);
  auto* hf = homology->add_option("--facets", o.facets_file, "Facet file, 1-based ids");
  hn->excludes(hf);
  homology->add_option("--format", o.format, "text, csv or json")->check(formats);
  add_out(homology);
  add_budget(homology);

  auto* exp = app.add_subcommand("export", "Write graphs, facets, posets or b-files");
  exp->require_subcommand(1);
  auto* eg = exp->add_subcommand("graph", "DIMACS edge file for G_n");
  eg->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  eg->add_flag("--edge-list", o.edge_list, "Plain `i j` lines instead of DIMACS");
  add_out(eg);
  auto* ef = exp->add_subcommand("facets", "Maximal simplices of K_n");
  ef->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  add_out(ef);
  auto* ep = exp->add_subcommand("poset", "Intersection poset as JSON");
  ep->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  ep->add_flag("--order-complex", o.order_complex, "Maximal chains as a facet list instead");
  add_out(ep);
  auto* eb = exp->add_subcommand("bfile", "`n value` lines for chi or b");
  eb->add_option("--sequence", o.sequence, "chi or b")->check(CLI::IsMember({"chi", "b"}));
  eb->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  add_out(eb);
  add_budget(eb);

  auto* reduce = app.add_subcommand("reduce", "Peak-reduction trace of an edge loop");
  reduce->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  reduce->add_option("--loop", o.loop, "Partitions, e.g. \"[4] [3,1] [4]\"")->required();
  reduce->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_out(reduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    if (*homology) {
      if (!*hn && !*hf) {
        std::cerr << "homology: one of --n or --facets is required\n";
        return kExitUsage;
      }
      return cmd_homology(o);
    }
    if (*eg) return cmd_export_graph(o);
    if (*ef) return cmd_export_facets(o);
    if (*ep) return cmd_export_poset(o);
    if (*eb) return cmd_export_bfile(o);
    if (*reduce) return cmd_reduce(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const IoFailure& e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
