#include "mothernet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "mothernet/electric.hpp"
#include "mothernet/graph_io.hpp"
#include "mothernet/mothercuts.hpp"
#include "mothernet/report_io.hpp"
#include "mothernet/schreier.hpp"
#include "mothernet/verify.hpp"

namespace mothernet::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("bad integer list: " + std::string(text));
    }
    values.push_back(value);
    start = comma + 1;
  }
  return values;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad position: " + std::string(text));
  }
  return value;
}

struct Config {
  int d = 1;
  std::string m = "2";
  std::string m_list;
  std::size_t n = 3;
  int s = 1;
  int t = 2;
  int t_max = 12;
  std::string mode = "auto";
  std::string window = "auto";
  std::string sources = "0";
  std::string sinks;
  std::string out_path;
  std::string csv_path;
  std::string dot_path;
  std::string graph_path;
  std::string suite;
  std::string graphs = "random";
  std::uint64_t seed = 1;
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::size_t trials = 200;
  std::size_t max_vertices = 40;
  bool full = false;
  bool embed = false;
  bool recurrence = false;
  bool cutsets = false;
  bool no_solve = false;

  TreeShape shape() const { return m_list.empty() ? parse_shape(m) : parse_shape_list(m_list); }

  SolveMode solve_mode() const {
    if (mode == "exact") return SolveMode::exact;
    if (mode == "float") return SolveMode::floating;
    return SolveMode::automatic;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Network load_network(const Config& cfg) {
  if (!cfg.graph_path.empty()) return graph_from_json(nlohmann::json::parse(read_file(cfg.graph_path)));
  const TreeShape shape = cfg.shape();
  BuildOptions opts;
  opts.vertex_cap = cfg.cap;
  if (cfg.full) return build_from_criterion(cfg.d, shape, cfg.n, opts);
  return build_projected(cfg.d, shape, cfg.n, opts);
}

std::string resistance_text(const ResistanceReport& r) {
  if (r.infinite) return "inf";
  return r.exact ? to_string(*r.exact) : format_double(r.value);
}

int cmd_build(const Config& cfg, std::ostream& out) {
  const Network net = load_network(cfg);
  const std::string doc = graph_to_json(net).dump(2) + "\n";
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, graph_to_dot(net));
  if (cfg.out_path.empty()) {
    out << doc;
  } else {
    write_file(cfg.out_path, doc);
    out << "vertices " << net.vertex_count() << "\nedges " << net.edge_count() << '\n';
  }
  return ok;
}

int cmd_resist(const Config& cfg, std::ostream& out) {
  const Network net = load_network(cfg);
  std::uint64_t limit = 0;
  for (const Vertex& v : net.vertices()) limit = std::max(limit, v.position.value + 1);
  auto pick = [&](const std::string& text) {
    std::vector<VertexId> ids;
    for (std::uint64_t p : parse_positions(text, limit)) {
      const auto found = net.vertices_in_positions(p, p + 1);
      ids.insert(ids.end(), found.begin(), found.end());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  const auto sources = pick(cfg.sources);
  const auto sinks = pick(cfg.sinks.empty() ? std::to_string(limit - 1) : cfg.sinks);
  if (sources.empty() || sinks.empty()) throw UsageError("--A and --B must select at least one vertex");
  const ResistanceReport r = compute_resistance(net, sources, sinks, cfg.solve_mode());
  out << "res " << resistance_text(r) << '\n';
  if (!cfg.out_path.empty()) {
    nlohmann::json doc;
    if (r.infinite) {
      doc["res"] = "inf";
    } else if (r.exact) {
      doc["res"] = to_string(*r.exact);
    } else {
      doc["res"] = r.value;
      doc["residual"] = r.residual;
    }
    write_file(cfg.out_path, doc.dump(2) + "\n");
  }
  return r.infinite ? infinite_resistance : ok;
}

TheoremBoundOptions bound_options(const Config& cfg) {
  TheoremBoundOptions opts;
  opts.mode = cfg.solve_mode();
  opts.solve = !cfg.no_solve;
  if (cfg.window == "closed") {
    opts.include_upper = true;
  } else if (cfg.window == "auto") {
    // On the path every position is its own single-edge cutset, so closing
    // the window makes the bound tight.
    opts.include_upper = cfg.d == 0;
  }
  return opts;
}

int cmd_bound(const Config& cfg, std::ostream& out) {
  const TreeShape shape = cfg.shape();
  const TheoremBound tb = theorem_bound(cfg.d, shape, cfg.s, cfg.t, cfg.n, bound_options(cfg));
  out << "bound " << to_string(tb.report.bound) << '\n';
  int code = ok;
  if (tb.resistance) {
    out << "res " << resistance_text(*tb.resistance) << '\n';
    if (!tb.resistance->infinite) {
      out << "ratio " << format_double(tb.report.bound.get_d() / tb.resistance->value) << '\n';
      const bool sound = tb.resistance->exact ? tb.report.bound <= *tb.resistance->exact
                                              : tb.report.bound.get_d() <= tb.resistance->value * (1 + 1e-9);
      if (!sound) {
        out << "FAIL: bound exceeds resistance\n";
        code = check_failed;
      }
    }
  }
  if (!cfg.out_path.empty()) write_file(cfg.out_path, theorem_certificate(tb, shape, cfg.embed).dump(2) + "\n");
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, bound_report_csv(tb.report));
  return code;
}

int report_suites(const std::vector<SuiteReport>& reports, std::ostream& out) {
  bool all = true;
  for (const SuiteReport& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures.size()
        << " failures\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 10); ++i) out << "  " << r.failures[i] << '\n';
    all = all && r.ok();
  }
  return all ? ok : check_failed;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const TreeShape shape = cfg.shape();
  RandomGraphOptions graphs;
  graphs.max_vertices = cfg.max_vertices;
  if (cfg.graphs != "random") throw UsageError("--graphs only supports 'random'");
  const bool exact = cfg.mode != "float";
  std::vector<SuiteReport> reports;
  const std::string& suite = cfg.suite;
  const bool all = suite == "all";
  if (all || suite == "action") reports.push_back(verify_action(cfg.d, shape, cfg.n));
  if (all || suite == "lemma") reports.push_back(verify_lemma(cfg.d, shape, cfg.n));
  if (all || suite == "weights") reports.push_back(verify_weights(cfg.d, shape, cfg.n));
  if (all || suite == "wnw") reports.push_back(verify_wnw_random(cfg.trials, cfg.seed, exact, graphs));
  if (all || suite == "optimal") reports.push_back(verify_optimal(cfg.trials, cfg.seed, exact, 1e-8, graphs));
  if (reports.empty()) throw UsageError("unknown suite: " + suite);
  return report_suites(reports, out);
}

int cmd_scaling(const Config& cfg, std::ostream& out) {
  const TreeShape shape = cfg.shape();
  std::string csv;
  if (cfg.cutsets) {
    const std::size_t n = static_cast<std::size_t>(cfg.t_max) + 1;
    csv = cutset_table_csv(cfg.d, shape, n, 1, std::uint64_t{1} << cfg.t_max);
  } else if (cfg.recurrence) {
    csv = recurrence_csv(recurrence_experiment(cfg.d, shape, cfg.t_max, !cfg.no_solve));
  } else {
    TheoremBoundOptions opts = bound_options(cfg);
    opts.check_separation = false;
    std::vector<ScalingRow> rows;
    for (int t = cfg.s + 1; t <= cfg.t_max; ++t) {
      const TheoremBound tb = theorem_bound(cfg.d, shape, cfg.s, t, static_cast<std::size_t>(t) + 2, opts);
      ScalingRow row;
      row.t = t;
      row.bound = tb.report.bound;
      if (tb.resistance && !tb.resistance->infinite) row.resistance = tb.resistance->value;
      const double b = tb.report.bound.get_d();
      row.per_step = b / (t - cfg.s);
      row.per_log_step = cfg.s > 0 ? b / (std::log(t) - std::log(cfg.s)) : std::nan("");
      rows.push_back(std::move(row));
    }
    csv = scaling_csv(rows);
  }
  if (cfg.csv_path.empty() && cfg.out_path.empty()) {
    out << csv;
  } else {
    write_file(cfg.csv_path.empty() ? cfg.out_path : cfg.csv_path, csv);
  }
  return ok;
}

}  // namespace

TreeShape parse_shape(std::string_view text) {
  const auto values = parse_int_list(text);
  try {
    return values.size() == 1 ? TreeShape::constant(values[0]) : TreeShape::repeating(values);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TreeShape parse_shape_list(std::string_view text) {
  try {
    return TreeShape::padded(parse_int_list(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::uint64_t> parse_positions(std::string_view text, std::uint64_t limit) {
  std::set<std::uint64_t> picked;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t dash = item.find('-');
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    if (dash == std::string_view::npos) {
      lo = hi = parse_u64(item);
    } else {
      lo = parse_u64(item.substr(0, dash));
      hi = dash + 1 == item.size() ? (limit == 0 ? 0 : limit - 1) : parse_u64(item.substr(dash + 1));
    }
    if (lo > hi || hi >= limit) {
      throw UsageError("position range " + std::string(item) + " outside [0, " + std::to_string(limit) + ")");
    }
    for (std::uint64_t p = lo; p <= hi; ++p) picked.insert(p);
    start = comma + 1;
  }
  return {picked.begin(), picked.end()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schreier graphs of mother groups: resistances and cutset bounds"};
  app.require_subcommand(1);
  Config cfg;

  auto shape_flags = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "Degree of the mother group")->check(CLI::Range(0, 30));
    auto* m = sub->add_option("--m", cfg.m, "Alphabet sizes: constant or repeating pattern, e.g. 2 or 3,2,4");
    sub->add_option("--m-list", cfg.m_list, "Explicit alphabet sizes, padded by the last entry")->excludes(m);
  };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "Solver arithmetic")->check(CLI::IsMember({"exact", "float", "auto"}));
  };

  auto* build = app.add_subcommand("build", "Build a level-n graph and write it as JSON (and DOT)");
  shape_flags(build);
  build->add_option("--n", cfg.n, "Level")->check(CLI::Range(1, 40));
  build->add_option("--out", cfg.out_path, "JSON output file (stdout if omitted)");
  build->add_option("--dot", cfg.dot_path, "Graphviz output file");
  build->add_option("--cap", cfg.cap, "Vertex cap");
  build->add_flag("--full", cfg.full, "Keep the full alphabet instead of projecting to binary words");

  auto* resist = app.add_subcommand("resist", "Effective resistance between two position ranges");
  shape_flags(resist);
  solver_flags(resist);
  resist->add_option("--n", cfg.n, "Level")->check(CLI::Range(1, 40));
  resist->add_option("--A", cfg.sources, "Source positions, e.g. 0 or 0-3");
  resist->add_option("--B", cfg.sinks, "Sink positions (default: the last position)");
  resist->add_option("--graph", cfg.graph_path, "Read the network from a JSON file instead of building it");
  resist->add_option("--out", cfg.out_path, "JSON output file");
  resist->add_option("--cap", cfg.cap, "Vertex cap");
  resist->add_flag("--full", cfg.full, "Use the full alphabet graph");

  auto* bound = app.add_subcommand("bound", "Cutset lower bound between positions [0,2^s) and [2^t,2^n)");
  shape_flags(bound);
  solver_flags(bound);
  bound->add_option("--n", cfg.n, "Level")->check(CLI::Range(2, 40));
  bound->add_option("--s", cfg.s, "Source scale")->check(CLI::Range(0, 39));
  bound->add_option("--t", cfg.t, "Sink scale")->check(CLI::Range(1, 39));
  bound->add_option("--window", cfg.window, "Cutset window [2^s,2^t) or [2^s,2^t]; auto closes it for d=0")
      ->check(CLI::IsMember({"auto", "half-open", "closed"}));
  bound->add_option("--out", cfg.out_path, "JSON certificate file");
  bound->add_option("--csv", cfg.csv_path, "Per-cutset CSV file");
  bound->add_flag("--full", cfg.embed, "Embed every cutset's edges and partial resistances in the certificate");
  bound->add_flag("--no-solve", cfg.no_solve, "Skip the resistance solve");

  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("suite", cfg.suite, "action | lemma | weights | wnw | optimal | all")
      ->required()
      ->check(CLI::IsMember({"action", "lemma", "weights", "wnw", "optimal", "all"}));
  shape_flags(verify);
  verify->add_option("--mode", cfg.mode, "Arithmetic for the random suites")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  verify->add_option("--n", cfg.n, "Level (max level for action)")->check(CLI::Range(1, 20));
  verify->add_option("--graphs", cfg.graphs, "Instance source for wnw/optimal");
  verify->add_option("--trials", cfg.trials, "Random instances for wnw/optimal");
  verify->add_option("--max-vertices", cfg.max_vertices, "Largest random instance")->check(CLI::Range(2, 2000));
  verify->add_option("--seed", cfg.seed, "Random seed");

  auto* scaling = app.add_subcommand("scaling", "Sweep t and print the bound growth as CSV");
  shape_flags(scaling);
  solver_flags(scaling);
  scaling->add_option("--s", cfg.s, "Source scale")->check(CLI::Range(0, 20));
  scaling->add_option("--t-max", cfg.t_max, "Largest t")->check(CLI::Range(1, 22));
  scaling->add_option("--window", cfg.window, "Cutset window, as for bound")
      ->check(CLI::IsMember({"auto", "half-open", "closed"}));
  scaling->add_option("--csv", cfg.csv_path, "CSV output file (stdout if omitted)");
  auto* rec = scaling->add_flag("--recurrence", cfg.recurrence, "Cumulative bounds from the root instead");
  scaling->add_flag("--cutsets", cfg.cutsets, "Per-cutset conductance against its asymptotic form, a^ < 2^t-max")
      ->excludes(rec);
  scaling->add_flag("--no-solve", cfg.no_solve, "Skip the resistance column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*resist) return cmd_resist(cfg, out);
    if (*bound) return cmd_bound(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*scaling) {
      if (cfg.t_max <= cfg.s && !cfg.recurrence && !cfg.cutsets) throw UsageError("--t-max must exceed --s");
      return cmd_scaling(cfg, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return solver_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return check_failed;
  }
  return usage_error;
}

}  // namespace mothernet::cli
