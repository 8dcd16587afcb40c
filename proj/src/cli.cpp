#include "albertson/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "albertson/edge_list.hpp"
#include "albertson/families.hpp"
#include "albertson/graph6.hpp"
#include "albertson/running_index.hpp"
#include "albertson/spectrum.hpp"
#include "albertson/transforms.hpp"
#include "albertson/tree_enumeration.hpp"
#include "albertson/verification.hpp"

namespace albertson {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputFormat { automatic, graph6, edge_list };
enum class OutputFormat { json, csv, table };

struct RunConfig {
  std::string graph6;
  std::string input_path;
  InputFormat input_format = InputFormat::automatic;
  OutputFormat output = OutputFormat::json;
  bool per_edge = false;
  bool emit_graph6 = false;
  bool realize_json = false;
  bool timing = false;
  std::string kind;
  std::string out_path;
  std::int64_t u = -1;
  std::int64_t v = -1;
  std::int64_t target = 0;
  std::size_t count = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t size = 3;
  std::size_t n = 0;
  std::size_t workers = 1;
  std::size_t tree_n = 12;
  std::size_t sweep_n = 7;
  std::uint64_t seed = VerifyConfig{}.seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// First non-blank, non-comment line of a file.
std::string first_content_line(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') return line.substr(first);
  }
  return {};
}

InputFormat sniff(const std::string& path, const std::string& text) {
  if (ends_with(path, ".g6")) return InputFormat::graph6;
  if (ends_with(path, ".edgelist") || ends_with(path, ".el") || ends_with(path, ".txt")) {
    return InputFormat::edge_list;
  }
  const std::string line = first_content_line(text);
  return line.find_first_of(" \t") != std::string::npos ? InputFormat::edge_list
                                                         : InputFormat::graph6;
}

Graph load_graph(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.graph6.empty() && !cfg.input_path.empty()) {
    throw InputError("give either --graph6 or --input, not both");
  }
  if (!cfg.graph6.empty()) return parse_graph6(cfg.graph6);
  if (cfg.input_path.empty()) throw InputError("a graph is required: --graph6 STR or --input PATH");

  const std::string text = read_file(cfg.input_path);
  InputFormat format = cfg.input_format;
  if (format == InputFormat::automatic) format = sniff(cfg.input_path, text);
  if (format == InputFormat::graph6) {
    const std::string line = first_content_line(text);
    if (line.empty()) throw FormatError("graph6 file '" + cfg.input_path + "' is empty");
    return parse_graph6(line);
  }
  BuildResult built = parse_edge_list(text);
  if (built.has_warning()) {
    err << "warning: dropped " << built.duplicates_dropped << " duplicate edge(s)\n";
  }
  return std::move(built.graph);
}

Vertex vertex_arg(std::int64_t value, const Graph& g, const char* flag) {
  if (value < 0 || static_cast<std::size_t>(value) >= g.order()) {
    throw InputError(std::string(flag) + " " + std::to_string(value) +
                     " is not a vertex of a graph with n = " + std::to_string(g.order()));
  }
  return static_cast<Vertex>(value);
}

Json int_array(const std::set<Index>& values) {
  Json arr = Json::array();
  for (Index v : values) arr.push_back(v);
  return arr;
}

void add_graph_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--graph6", cfg.graph6, "Inline graph6 string");
  cmd->add_option("--input", cfg.input_path, "Graph file (graph6 or edge list)");
  cmd->add_option("--format", cfg.input_format, "Input format: g6 | edgelist (default: detect)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"g6", InputFormat::graph6},
                                             {"graph6", InputFormat::graph6},
                                             {"edgelist", InputFormat::edge_list},
                                             {"auto", InputFormat::automatic}},
          CLI::ignore_case));
}

int do_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg, err);
  const InvariantReport r = compute_invariants(g, cfg.per_edge);
  switch (cfg.output) {
    case OutputFormat::json: {
      Json doc;
      doc["albertson"] = r.albertson;
      doc["modified"] = r.modified;
      doc["max_degree"] = r.max_degree;
      if (r.per_edge_terms) {
        Json terms = Json::array();
        for (const auto& t : *r.per_edge_terms) terms.push_back({{"u", t.u}, {"v", t.v}, {"term", t.value}});
        doc["per_edge"] = std::move(terms);
      }
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "albertson,modified,max_degree\n"
          << r.albertson << ',' << r.modified << ',' << r.max_degree << '\n';
      if (r.per_edge_terms) {
        out << "\nu,v,term\n";
        for (const auto& t : *r.per_edge_terms) out << t.u << ',' << t.v << ',' << t.value << '\n';
      }
      break;
    case OutputFormat::table:
      out << std::left << std::setw(12) << "albertson" << r.albertson << '\n'
          << std::setw(12) << "modified" << r.modified << '\n'
          << std::setw(12) << "max_degree" << r.max_degree << '\n';
      if (r.per_edge_terms) {
        out << '\n' << std::setw(8) << "u" << std::setw(8) << "v" << "term\n";
        for (const auto& t : *r.per_edge_terms) {
          out << std::setw(8) << t.u << std::setw(8) << t.v << t.value << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

int do_delta(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cfg, err);
  const Vertex u = vertex_arg(cfg.u, g, "--u");
  const Vertex v = vertex_arg(cfg.v, g, "--v");
  const Index delta = edge_addition_delta(g, u, v);
  const Index before = modified_albertson(g);
  g.add_edge(u, v);
  const Index after = modified_albertson(g);
  Json doc;
  doc["u"] = u;
  doc["v"] = v;
  doc["delta"] = delta;
  doc["before"] = before;
  doc["after"] = after;
  doc["consistent"] = before + delta == after;
  out << doc.dump() << '\n';
  return before + delta == after ? kExitOk : kExitInternal;
}

int do_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg, err);
  const Vertex u = vertex_arg(cfg.u, g, "--u");
  const Vertex v = vertex_arg(cfg.v, g, "--v");
  Graph result;
  if (cfg.kind == "t1") {
    result = apply_transformation1(g, u, v);
  } else if (cfg.kind == "neutral") {
    result = neutral_subdivide(g, u, v);
  } else {
    throw InputError("--kind must be t1 or neutral, got '" + cfg.kind + "'");
  }
  const std::string encoded = emit_graph6(result);
  if (!cfg.out_path.empty()) write_file(cfg.out_path, encoded + "\n");
  Json doc;
  doc["kind"] = cfg.kind;
  doc["u"] = u;
  doc["v"] = v;
  doc["before"] = modified_albertson(g);
  doc["after"] = modified_albertson(result);
  doc["order"] = result.order();
  doc["graph6"] = encoded;
  out << doc.dump() << '\n';
  return kExitOk;
}

int do_realize(const RunConfig& cfg, std::ostream& out) {
  const WitnessSet set = realize(cfg.target, cfg.count);
  std::string lines;
  Json doc;
  doc["target"] = set.target;
  doc["witnesses"] = Json::array();
  for (const Witness& w : set.witnesses) {
    const std::string encoded = emit_graph6(w.graph);
    lines += encoded + "\n";
    if (cfg.realize_json) {
      doc["witnesses"].push_back({{"graph6", encoded},
                                  {"order", w.graph.order()},
                                  {"size", w.graph.size()},
                                  {"modified", modified_albertson(w.graph)},
                                  {"recipe", w.recipe}});
    } else {
      out << encoded << "\tA*=" << modified_albertson(w.graph) << "\tn=" << w.graph.order()
          << '\t' << w.recipe << '\n';
    }
  }
  if (cfg.realize_json) out << doc.dump() << '\n';
  if (!cfg.out_path.empty()) write_file(cfg.out_path, lines);
  return kExitOk;
}

int do_family(const RunConfig& cfg, std::ostream& out) {
  const FamilySpec spec{cfg.i, cfg.j, cfg.size};
  const Graph g = construct_family(spec);
  Json doc;
  doc["i"] = spec.i;
  doc["j"] = spec.j;
  doc["base_size"] = spec.effective_base_size();
  doc["order"] = g.order();
  doc["size"] = g.size();
  doc["modified"] = modified_albertson(g);
  doc["predicted"] = spec.predicted();
  doc["graph6"] = emit_graph6(g);
  out << doc.dump() << '\n';
  return kExitOk;
}

int do_enumerate_trees(const RunConfig& cfg, std::ostream& out) {
  std::size_t count = 0;
  FreeTreeGenerator gen(cfg.n);
  while (auto t = gen.next()) {
    ++count;
    if (cfg.emit_graph6) out << emit_graph6(*t) << '\n';
  }
  if (!cfg.emit_graph6) {
    Json doc;
    doc["n"] = cfg.n;
    doc["tree_count"] = count;
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

int do_verify_trees(const RunConfig& cfg, std::ostream& out) {
  const TreeReport r = verify_trees(cfg.n);
  Json doc;
  doc["n"] = r.n;
  doc["tree_count"] = r.tree_count;
  doc["min_value"] = r.min_value;
  doc["min_witnesses"] = r.min_witnesses;
  doc["min_is_path"] = r.min_is_path;
  doc["max_value"] = r.max_value;
  doc["max_witnesses"] = r.max_witnesses;
  doc["max_is_star"] = r.max_is_star;
  doc["bound_violations"] = r.bound_violations;
  doc["equality_mismatches"] = r.equality_mismatches;
  doc["passed"] = tree_report_clean(r);
  out << doc.dump() << '\n';
  return tree_report_clean(r) ? kExitOk : kExitPrecondition;
}

int do_spectrum(const RunConfig& cfg, std::ostream& out) {
  const SpectrumReport r = sweep_connected(cfg.n, cfg.workers);
  Json doc;
  doc["n_max"] = r.n_max;
  doc["attained"] = int_array(r.attained);
  doc["odd_values"] = int_array(r.odd_values);
  doc["gap_values"] = int_array(r.gap_values);
  Json orders = Json::object();
  for (const auto& [n, slice] : r.per_order) {
    orders[std::to_string(n)] = {{"labeled_graphs", slice.labeled_graphs},
                                 {"connected_graphs", slice.connected_graphs},
                                 {"attained", int_array(slice.attained)}};
  }
  doc["per_order"] = std::move(orders);
  Json witnesses = Json::object();
  for (const auto& [value, g6] : r.witnesses) witnesses[std::to_string(value)] = g6;
  doc["witnesses"] = std::move(witnesses);
  doc["note"] = "gaps are empirical for the swept orders only";
  out << doc.dump() << '\n';
  return r.odd_values.empty() ? kExitOk : kExitPrecondition;
}

int do_verify_all(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.tree_n = cfg.tree_n;
  vc.sweep_n = cfg.sweep_n;
  vc.seed = cfg.seed;
  vc.workers = cfg.workers;
  if (!cfg.timing) {
    vc.parity_budget = vc.trees_budget = vc.delta_budget = 0.0;
  }
  const auto results = run_verification(vc);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (cfg.timing) {
      out << format_result(r) << '\n';
    } else {
      out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ' ' << r.detail << '\n';
    }
    passed += r.passed;
  }
  out << passed << '/' << results.size() << " criteria passed\n";
  return passed == results.size() ? kExitOk : kExitPrecondition;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Albertson-type irregularity indices: compute, update, construct, verify",
               "albertson"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Albertson and modified Albertson index of a graph");
  add_graph_input(compute, cfg);
  compute->add_flag("--per-edge", cfg.per_edge, "Include per-edge |d_u^2 - d_v^2| terms");
  auto* json_flag = compute->add_flag_callback("--json", [&] { cfg.output = OutputFormat::json; });
  auto* csv_flag = compute->add_flag_callback("--csv", [&] { cfg.output = OutputFormat::csv; });
  auto* table_flag = compute->add_flag_callback("--table", [&] { cfg.output = OutputFormat::table; });
  json_flag->excludes(csv_flag)->excludes(table_flag);
  csv_flag->excludes(table_flag);

  auto* delta = app.add_subcommand("delta", "Index change from adding a missing edge");
  add_graph_input(delta, cfg);
  delta->add_option("--u", cfg.u)->required();
  delta->add_option("--v", cfg.v)->required();

  auto* transform = app.add_subcommand("transform", "Subdivide an edge (t1 or neutral)");
  add_graph_input(transform, cfg);
  transform->add_option("--kind", cfg.kind)->required()->check(CLI::IsMember({"t1", "neutral"}));
  transform->add_option("--u", cfg.u)->required();
  transform->add_option("--v", cfg.v)->required();
  transform->add_option("--out", cfg.out_path, "Write the result as graph6");

  auto* realize_cmd = app.add_subcommand("realize", "Connected graphs with a given index");
  realize_cmd->add_option("--target", cfg.target)->required();
  realize_cmd->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
  realize_cmd->add_option("--out", cfg.out_path, "Write the witnesses as graph6 lines");
  realize_cmd->add_flag("--json", cfg.realize_json, "One JSON document instead of annotated lines");

  auto* family = app.add_subcommand("family", "Construct H(i, j)");
  family->add_option("--i", cfg.i)->required();
  family->add_option("--j", cfg.j)->required()->check(CLI::Range(0, 4));
  family->add_option("--size", cfg.size, "Prism cycle length (grown as needed)")->check(CLI::Range(3, 100000));

  auto* enum_trees = app.add_subcommand("enumerate-trees", "All free trees of order n");
  enum_trees->add_option("--n", cfg.n)->required()->check(CLI::Range(std::size_t{1}, kMaxTreeOrder));
  enum_trees->add_flag("--emit-graph6", cfg.emit_graph6, "Print each tree as graph6");

  auto* verify_trees_cmd = app.add_subcommand("verify-trees", "Extremal and bound check over trees of order n");
  verify_trees_cmd->add_option("--n", cfg.n)->required()->check(CLI::Range(std::size_t{1}, kMaxTreeOrder));

  auto* spectrum = app.add_subcommand("spectrum", "Index values over all connected graphs up to n-max");
  spectrum->add_option("--n-max", cfg.n)->required()->check(CLI::Range(std::size_t{1}, kMaxSweepOrder));
  spectrum->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);

  auto* verify_all = app.add_subcommand("verify-all", "Run the full verification campaign");
  verify_all->add_option("--tree-n", cfg.tree_n)->check(CLI::Range(std::size_t{5}, kMaxTreeOrder));
  verify_all->add_option("--sweep-n", cfg.sweep_n)->check(CLI::Range(std::size_t{4}, kMaxSweepOrder));
  verify_all->add_option("--seed", cfg.seed);
  verify_all->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
  verify_all->add_flag("--timing", cfg.timing, "Show per-criterion wall time and enforce budgets");

  std::vector<std::string> argv_storage{"albertson"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return do_compute(cfg, out, err);
    if (delta->parsed()) return do_delta(cfg, out, err);
    if (transform->parsed()) return do_transform(cfg, out, err);
    if (realize_cmd->parsed()) return do_realize(cfg, out);
    if (family->parsed()) return do_family(cfg, out);
    if (enum_trees->parsed()) return do_enumerate_trees(cfg, out);
    if (verify_trees_cmd->parsed()) return do_verify_trees(cfg, out);
    if (spectrum->parsed()) return do_spectrum(cfg, out);
    if (verify_all->parsed()) return do_verify_all(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace albertson
