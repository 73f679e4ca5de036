// Command-line front end: girth-witness recognition, witness export, the
// small-graph census, and the exhaustive witness search.
//
// Exit codes: 0 = accepted / witness found / census clean,
//             1 = rejected / no witness / counterexamples,
//             2 = usage, parameter, or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mapgirth/mapgirth.hpp"

namespace {

using namespace mapgirth;

struct Input {
  Graph graph;
  std::vector<std::string> labels;
};

Input load_graph(const std::string& path, const std::string& format_flag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::string format = format_flag;
  if (format.empty())
    format = path.size() >= 3 && path.substr(path.size() - 3) == ".g6" ? "graph6" : "edgelist";

  if (format == "graph6") {
    Graph g = parse_graph6(text.substr(0, text.find('\n')));
    std::vector<std::string> labels;
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(std::to_string(v));
    return {std::move(g), std::move(labels)};
  }
  LabeledGraph labeled = parse_labeled_edge_list(text);
  return {std::move(labeled.graph), std::move(labeled.labels)};
}

std::string node_name(const Input& input, int id) {
  if (id < input.graph.vertex_count()) return input.labels[static_cast<std::size_t>(id)];
  return "w" + std::to_string(id - input.graph.vertex_count());
}

std::string describe(const Obstruction& obstruction, const Input& input) {
  std::string out = to_string(obstruction.kind);
  if (obstruction.kind == ObstructionKind::CliqueCapExceeded)
    return out + " (more than 27n maximal cliques)";
  if (obstruction.vertices.empty()) return out;
  out += " {";
  for (std::size_t i = 0; i < obstruction.vertices.size(); ++i) {
    if (i) out += ",";
    out += node_name(input, obstruction.vertices[i]);
  }
  out += "}";
  if (obstruction.cycle_length > 0) out += " length " + std::to_string(obstruction.cycle_length);
  return out;
}

void print_report(const RecognitionReport& report, const Input& input, bool timings) {
  std::cout << "mode: " << to_string(report.mode) << "\n";
  std::cout << "girth: " << report.girth_parameter.to_string() << "\n";
  std::cout << "verdict: " << (report.yes() ? "yes" : "no") << "\n";
  if (report.stats.clique_count > 0) std::cout << "cliques: " << report.stats.clique_count << "\n";
  if (report.witness)
    std::cout << "witness: vertices=" << report.stats.witness_vertices
              << " points=" << report.stats.witness_points
              << " edges=" << report.stats.witness_edges << "\n";
  if (report.obstruction)
    std::cout << "obstruction: " << describe(*report.obstruction, input) << "\n";
  if (timings) {
    std::cout << "timings:";
    for (const auto& [phase, ms] : report.stats.phase_ms)
      std::cout << " " << phase << "=" << ms << "ms";
    std::cout << "\n";
  }
}

RecognitionReport run_recognition(const Input& input, const std::string& mode, int girth_min) {
  if (mode == "tree") return recognize_tree_witness(input.graph);
  if (mode == "halfsquare") return recognize_half_square_girth(input.graph, girth_min);
  return recognize_map_witness_girth(input.graph, girth_min);
}

void write_witness(const BipartiteGraph& witness, const Input& input, const std::string& out_path) {
  const std::string text = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".dot"
                               ? to_dot(witness, &input.labels)
                               : to_edge_list_text(witness, &input.labels);
  if (out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::vector<int> parse_t_list(const std::string& spec) {
  std::vector<int> values;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stoi(item));
  }
  if (values.empty()) throw std::runtime_error("empty t list");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition of map graphs and half-squares with girth-bounded witnesses"};
  app.require_subcommand(1);

  std::string file, format, mode = "map", out_path, t_spec = "4,5,6";
  int girth_min = 8;
  int oracle_girth = 6;
  int n_max = 6;
  unsigned threads = 0;
  bool no_timings = false, planar = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input graph file")->required();
    cmd->add_option("--format", format, "graph6 or edgelist (default: by extension)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };

  CLI::App* recognize = app.add_subcommand("recognize", "decide membership");
  add_input(recognize);
  auto* girth_opt = recognize->add_option("--girth", girth_min, "minimum witness girth (even, >= 8)");
  recognize->add_option("--mode", mode, "map, halfsquare, or tree")
      ->check(CLI::IsMember({"map", "halfsquare", "tree"}));
  recognize->add_flag("--no-timings", no_timings, "suppress the timings line");

  CLI::App* witness = app.add_subcommand("witness", "decide and export the witness");
  add_input(witness);
  auto* wgirth_opt = witness->add_option("--girth", girth_min, "minimum witness girth (even, >= 8)");
  witness->add_option("--mode", mode, "map, halfsquare, or tree")
      ->check(CLI::IsMember({"map", "halfsquare", "tree"}));
  witness->add_option("--out", out_path, "output path; .dot renders DOT, '-' prints");
  witness->add_flag("--no-timings", no_timings, "suppress the timings line");

  CLI::App* census = app.add_subcommand("census", "cross-validate on all small graphs");
  census->add_option("--nmax", n_max, "largest vertex count (<= 7)");
  census->add_option("--t", t_spec, "comma-separated girth parameters t (>= 4)");
  census->add_option("--threads", threads, "worker threads (default: hardware)");
  census->add_option("--out", out_path, "write the full report here");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive witness search (n <= 8)");
  add_input(oracle);
  oracle->add_option("--girth", oracle_girth, "minimum witness girth (even, >= 6)");
  oracle->add_flag("--planar", planar, "require a planar witness");
  oracle->add_option("--out", out_path, "export a found witness here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, usage errors as 2
  }

  try {
    if (recognize->parsed() || witness->parsed()) {
      if (mode == "tree" && (girth_opt->count() > 0 || wgirth_opt->count() > 0))
        throw std::runtime_error("tree mode takes no girth parameter");
      const Input input = load_graph(file, format);
      const RecognitionReport report = run_recognition(input, mode, girth_min);
      print_report(report, input, !no_timings);
      if (witness->parsed() && report.yes())
        write_witness(*report.witness, input, out_path.empty() ? "-" : out_path);
      return report.yes() ? 0 : 1;
    }
    if (census->parsed()) {
      CensusOptions options;
      options.n_max = n_max;
      options.t_values = parse_t_list(t_spec);
      options.threads = threads;
      const CensusReport report = run_census(options);
      const std::string text = report.to_text();
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
        std::cout << "graphs: " << report.graph_count
                  << " counterexamples: " << report.counterexamples.size() << "\n";
      } else {
        std::cout << text;
      }
      return report.counterexamples.empty() ? 0 : 1;
    }
    // oracle
    const Input input = load_graph(file, format);
    const auto found = brute_force_witness_search(input.graph, oracle_girth, planar);
    if (!found) {
      std::cout << "no witness exists\n";
      return 1;
    }
    std::cout << "witness found: vertices=" << found->vertex_side_count()
              << " points=" << found->point_side_count() << " edges=" << found->edge_count()
              << "\n";
    if (!out_path.empty()) write_witness(*found, input, out_path);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
