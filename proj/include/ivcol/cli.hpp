#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ivcol/io.hpp"
#include "ivcol/kmn.hpp"
#include "ivcol/matrix.hpp"
#include "ivcol/oracle.hpp"
#include "ivcol/tree.hpp"

namespace ivcol {
namespace detail {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" means the process stdin, which can be consumed once
struct CliIo {
  std::istream* in;
  std::ostream* out;
  std::ostream* err;
  bool stdin_used = false;

  std::string read_input(const std::string& path) {
    if (path == "-") {
      if (stdin_used) throw FileError("stdin already consumed");
      stdin_used = true;
      std::ostringstream ss;
      ss << in->rdbuf();
      return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw FileError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
      *out << content;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw FileError("cannot open file for writing: " + out_path);
    f << content;
  }
};

inline int run_spectrum(CliIo& io, const std::string& file, const std::string& out_path) {
  Graph g = parse_edge_list(io.read_input(file));
  auto cls = classify_graph(g);
  json doc;
  if (cls.is_complete_bipartite) {
    auto sp = kmn_spectrum(static_cast<int>(cls.bipartition->left.size()),
                           static_cast<int>(cls.bipartition->right.size()));
    doc["w"] = sp.w;
    doc["W"] = sp.W;
  } else if (cls.is_tree && g.edge_count() >= 1) {
    auto sp = tree_spectrum(g);
    doc["w"] = sp.w;
    doc["W"] = sp.W;
    doc["witness_path"] = sp.witness_path.vertices;
  } else {
    *io.err << "unsupported graph: spectrum covers complete bipartite graphs and trees\n";
    return 1;
  }
  io.write_output(out_path, doc.dump() + "\n");
  return 0;
}

inline int run_verify(CliIo& io, const std::string& coloring_file,
                      const std::string& graph_file, const std::string& out_path) {
  EdgeColoring c = coloring_from_text(io.read_input(coloring_file));
  Graph g = parse_edge_list(io.read_input(graph_file));
  auto rep = verify_interval(g, c);
  io.write_output(out_path, report_to_json(rep).dump() + "\n");
  return rep.valid ? 0 : 1;
}

inline int run_oracle(CliIo& io, const std::string& file, int t_max, int max_edges,
                      const std::string& out_path) {
  Graph g = parse_edge_list(io.read_input(file));
  OracleOptions opts;
  opts.max_edges = max_edges;
  auto fs = oracle_spectrum(g, t_max, opts);
  io.write_output(out_path, feasible_set_to_json(fs).dump() + "\n");
  return 0;
}

inline int run_matrix(CliIo& io, const std::string& graph_file,
                      const std::string& coloring_file, const std::string& out_path) {
  Graph g = parse_edge_list(io.read_input(graph_file));
  EdgeColoring c = coloring_from_text(io.read_input(coloring_file));
  auto cls = classify_graph(g);
  if (!cls.is_complete_bipartite) {
    *io.err << "unsupported graph: matrix extraction needs a complete bipartite graph\n";
    return 1;
  }
  auto rep = verify_interval(g, c);
  if (!rep.valid) {
    *io.err << "coloring is not a valid interval coloring\n";
    return 1;
  }
  auto X = extract_incidence(g, *cls.bipartition, c, Side::left);
  auto Y = extract_incidence(g, *cls.bipartition, c, Side::right);
  auto sx = matrix_stats(X), sy = matrix_stats(Y);
  int m = static_cast<int>(cls.bipartition->left.size());
  int n = static_cast<int>(cls.bipartition->right.size());
  int bound = width_lower_bound(m, n);
  json check;
  check["t"] = c.t();
  check["x_rows"] = X.rows();
  check["y_rows"] = Y.rows();
  check["x_regular"] = sx.regular_r ? json(*sx.regular_r) : json(nullptr);
  check["y_regular"] = sy.regular_r ? json(*sy.regular_r) : json(nullptr);
  check["x_collected"] = sx.collected_matrix;
  check["y_collected"] = sy.collected_matrix;
  check["equivalent"] = are_equivalent(X, Y);
  check["conformed"] = are_conformed(X, Y);
  check["width_lower_bound"] = bound;
  check["bound_satisfied"] = c.t() >= bound;
  std::string doc = "X\n" + matrix_to_text(X) + "Y\n" + matrix_to_text(Y) +
                    "check " + check.dump() + "\n";
  io.write_output(out_path, doc);
  return 0;
}

inline int run_dot(CliIo& io, const std::string& graph_file,
                   const std::string& coloring_file, const std::string& out_path) {
  Graph g = parse_edge_list(io.read_input(graph_file));
  if (coloring_file.empty()) {
    io.write_output(out_path, to_dot(g));
  } else {
    EdgeColoring c = coloring_from_text(io.read_input(coloring_file));
    io.write_output(out_path, to_dot(g, &c));
  }
  return 0;
}

}  // namespace detail

// Parses argv-style arguments (program name excluded) and runs one
// subcommand. Exit codes: 0 success; 1 infeasible request, failed
// verification, or unsupported graph class; 2 usage, parse, or file errors.
inline int cli_dispatch(const std::vector<std::string>& args, std::istream& in,
                        std::ostream& out, std::ostream& err) {
  detail::CliIo io{&in, &out, &err};

  CLI::App app{"interval edge colorings of complete bipartite graphs and trees"};
  app.name("ivcol");
  app.require_subcommand(1);

  std::string out_path;
  std::string file, coloring_file, graph_file;
  int gm = 0, gn = 0, gk = 0, opt_t = 0, t_max = 0, max_edges = 22;
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("gen", "generate a graph edge list");
  gen->require_subcommand(1);
  auto* gen_kmn = gen->add_subcommand("kmn", "complete bipartite graph K_{m,n}");
  gen_kmn->add_option("m", gm, "one side size")->required();
  gen_kmn->add_option("n", gn, "other side size")->required();
  gen_kmn->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_path = gen->add_subcommand("path", "path on k vertices");
  gen_path->add_option("k", gk, "vertex count")->required();
  gen_path->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_star = gen->add_subcommand("star", "star with k leaves");
  gen_star->add_option("k", gk, "leaf count")->required();
  gen_star->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_tree = gen->add_subcommand("tree", "random labeled tree with k edges");
  gen_tree->add_option("k", gk, "edge count")->required();
  gen_tree->add_option("--seed", seed, "RNG seed")->required();
  gen_tree->add_option("--out", out_path, "output file (default stdout)");

  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "feasible color-count range of a graph ('-' reads stdin)");
  spectrum_cmd->add_option("file", file, "edge list file or '-'")->required();
  spectrum_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* color_cmd =
      app.add_subcommand("color", "construct an interval coloring with t colors");
  color_cmd->add_option("file", file, "edge list file or '-'")->required();
  color_cmd->add_option("--t", opt_t, "number of colors")->required();
  color_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a coloring document against a graph");
  verify_cmd->add_option("coloring", coloring_file, "coloring JSON file or '-'")
      ->required();
  verify_cmd->add_option("--graph", graph_file, "edge list file or '-'")->required();
  verify_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustively enumerate all feasible color counts");
  oracle_cmd->add_option("file", file, "edge list file or '-'")->required();
  oracle_cmd->add_option("--t-max", t_max, "largest t to try (default |E|)");
  oracle_cmd->add_option("--max-edges", max_edges,
                         "edge-count safety cap (default 22)");
  oracle_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* matrix_cmd = app.add_subcommand(
      "matrix", "side incidence matrices and their consistency checks");
  matrix_cmd->add_option("file", file, "edge list file or '-'")->required();
  matrix_cmd->add_option("coloring", coloring_file, "coloring JSON file or '-'")
      ->required();
  matrix_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export, colors as labels");
  dot_cmd->add_option("file", file, "edge list file or '-'")->required();
  dot_cmd->add_option("coloring", coloring_file, "optional coloring JSON file");
  dot_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> argv;
  argv.push_back("ivcol");
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen_kmn->parsed())
      io.write_output(out_path, serialize_edge_list(make_complete_bipartite(gm, gn)));
    else if (gen_path->parsed())
      io.write_output(out_path, serialize_edge_list(make_path(gk)));
    else if (gen_star->parsed())
      io.write_output(out_path, serialize_edge_list(make_star(gk)));
    else if (gen_tree->parsed())
      io.write_output(out_path, serialize_edge_list(make_random_tree(gk, seed)));
    else if (spectrum_cmd->parsed())
      return detail::run_spectrum(io, file, out_path);
    else if (color_cmd->parsed()) {
      Graph g = parse_edge_list(io.read_input(file));
      auto cls = classify_graph(g);
      if (cls.is_complete_bipartite) {
        auto c = kmn_coloring_for(*cls.bipartition, opt_t);
        io.write_output(out_path, coloring_to_json(c).dump() + "\n");
      } else if (cls.is_tree && g.edge_count() >= 1) {
        auto c = tree_coloring(g, opt_t);
        io.write_output(out_path, coloring_to_json(c).dump() + "\n");
      } else {
        err << "unsupported graph: color covers complete bipartite graphs and trees\n";
        return 1;
      }
    } else if (verify_cmd->parsed())
      return detail::run_verify(io, coloring_file, graph_file, out_path);
    else if (oracle_cmd->parsed())
      return detail::run_oracle(io, file, t_max, max_edges, out_path);
    else if (matrix_cmd->parsed())
      return detail::run_matrix(io, file, coloring_file, out_path);
    else if (dot_cmd->parsed())
      return detail::run_dot(io, file, coloring_file, out_path);
    return 0;
  } catch (const SpectrumError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.name << ": " << e.what() << "\n";
    return 2;
  } catch (const detail::FileError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ivcol
