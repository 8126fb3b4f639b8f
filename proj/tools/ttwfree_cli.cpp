// Command line front end: recognition, tree decompositions, decomposition
// trees, ear sequences, member generation and the brute-force oracles.
//
// Exit codes: 0 success / in class, 1 negative verdict or domain error,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttwfree/analyze.hpp"
#include "ttwfree/io.hpp"
#include "ttwfree/patterns.hpp"
#include "ttwfree/synthesis.hpp"

namespace {

using nlohmann::json;

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ttw::InputFormat pick_format(const std::string& flag, const std::string& path) {
  if (!flag.empty()) {
    auto f = ttw::format_from_name(flag);
    if (!f) throw std::runtime_error("unknown format '" + flag + "'");
    return *f;
  }
  auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    if (ext == "g6") return ttw::InputFormat::Graph6;
    if (ext == "dimacs" || ext == "col") return ttw::InputFormat::Dimacs;
  }
  return ttw::InputFormat::EdgeList;
}

ttw::Graph load_graph(const std::string& path, const std::string& fmt_flag) {
  return ttw::parse_graph(read_file(path), pick_format(fmt_flag, path));
}

const char* basic_name(ttw::BasicType t) {
  switch (t) {
    case ttw::BasicType::K1: return "K1";
    case ttw::BasicType::K2: return "K2";
    case ttw::BasicType::Cube: return "cube";
    case ttw::BasicType::Daisy: return "daisy";
  }
  return "?";
}

json report_json(const ttw::ClassReport& r) {
  json j;
  j["ttw_free"] = r.ttw_free;
  j["even_wheel_free"] = r.even_wheel_free;
  j["even_hole_free"] = r.even_hole_free;
  j["bipartite_theta_wac_free"] = r.bipartite_theta_wac_free;
  j["planar"] = r.planar;
  if (r.treewidth)
    j["treewidth"] = *r.treewidth;
  else
    j["treewidth"] = nullptr;
  json certs;
  certs["nodes"] = r.nodes_constructed;
  if (r.rejection == ttw::Rejection::BudgetExceeded) {
    certs["rejection"] = "budget-exceeded";
  } else if (r.rejection == ttw::Rejection::NonBasicLeaf) {
    certs["rejection"] = "non-basic-leaf";
    certs["leaf"] = r.rejected_leaf;
  } else {
    json leaves = json::array();
    for (const auto& lr : r.leaves) {
      json leaf;
      leaf["node"] = lr.node_id;
      leaf["kind"] = basic_name(lr.type);
      if (lr.daisy_class) {
        leaf["hole_length"] = lr.daisy_class->k;
        leaf["petals"] = lr.daisy_class->petal_center_neighbor_counts.size();
        leaf["full"] = lr.daisy_class->full;
        leaf["even_wheel_free"] = lr.daisy_class->even_wheel_free;
        leaf["even_hole_free"] = lr.daisy_class->even_hole_free;
        leaf["bipartite"] = lr.daisy_class->bipartite;
      }
      leaves.push_back(std::move(leaf));
    }
    certs["leaves"] = std::move(leaves);
  }
  j["certificates"] = std::move(certs);
  return j;
}

int cmd_check(const std::string& path, const std::string& fmt) {
  auto g = load_graph(path, fmt);
  auto report = ttw::analyze(g);
  std::cout << report_json(report).dump(2) << "\n";
  return report.ttw_free ? 0 : kExitNegative;
}

int cmd_treewidth(const std::string& path, const std::string& fmt,
                  const std::string& out_path) {
  auto g = load_graph(path, fmt);
  auto analysis = ttw::analyze_full(g);
  if (!analysis.report.ttw_free) {
    std::cerr << "not in class\n";
    return kExitNegative;
  }
  std::string pace = ttw::write_pace(analysis.width->rep, g.n());
  if (out_path.empty() || out_path == "-") {
    std::cout << pace;
  } else {
    std::ofstream out(out_path);
    out << pace;
  }
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& fmt, bool dot) {
  auto g = load_graph(path, fmt);
  auto dec = ttw::decompose(g);
  if (dec.status == ttw::DecomposeStatus::BudgetExceeded) {
    std::cerr << "budget exceeded after " << dec.nodes_constructed
              << " nodes: not in class\n";
    return kExitNegative;
  }
  if (dot) {
    std::cout << ttw::decomposition_dot(*dec.tree);
  } else {
    const auto& t = *dec.tree;
    std::cout << "nodes " << t.nodes.size() << "\n";
    for (size_t i = 0; i < t.nodes.size(); ++i) {
      const auto& node = t.nodes[i];
      std::cout << i << " n=" << node.graph.n() << " children=[";
      for (size_t c = 0; c < node.children.size(); ++c)
        std::cout << (c ? "," : "") << node.children[c];
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_ears(const std::string& path, const std::string& fmt) {
  auto g = load_graph(path, fmt);
  auto seq = ttw::ear_sequence(g);
  std::cout << ttw::ear_sequence_to_text(seq);
  return 0;
}

int cmd_generate(std::uint64_t seed, int size, const std::string& subclass,
                 const std::string& out_fmt) {
  std::optional<ttw::Subclass> sub;
  if (!subclass.empty()) {
    if (subclass == "even-wheel-free")
      sub = ttw::Subclass::EvenWheelFree;
    else if (subclass == "even-hole-free")
      sub = ttw::Subclass::EvenHoleFree;
    else if (subclass == "bipartite")
      sub = ttw::Subclass::Bipartite;
    else
      throw std::runtime_error("unknown subclass '" + subclass + "'");
  }
  auto g = ttw::random_member(seed, size, sub);
  if (out_fmt == "dimacs")
    std::cout << ttw::write_dimacs(g);
  else if (out_fmt == "graph6" || out_fmt == "g6")
    std::cout << ttw::write_graph6(g) << "\n";
  else
    std::cout << ttw::write_edge_list(g);
  return 0;
}

int cmd_oracle(const std::string& kind, const std::string& path,
               const std::string& fmt, int limit) {
  auto g = load_graph(path, fmt);
  ttw::OracleLimits limits;
  if (limit > 0) {
    limits.pattern = limit;
    limits.kuratowski = limit;
  }
  if (kind == "bipartite") {
    auto r = ttw::is_bipartite(g);
    if (r.bipartite) {
      std::cout << "bipartite\n";
    } else {
      std::cout << "odd-walk";
      for (int v : r.odd_walk) std::cout << ' ' << v;
      std::cout << "\n";
    }
    return 0;
  }
  if (kind == "kuratowski") {
    auto w = ttw::kuratowski_witness(g, limits);
    if (!w) {
      std::cout << "absent\n";
      return 0;
    }
    std::cout << (w->target == ttw::KuratowskiTarget::K5 ? "K5" : "K3,3")
              << " branch";
    for (int v : w->branch_vertices) std::cout << ' ' << v;
    std::cout << "\n";
    for (const auto& p : w->paths) {
      std::cout << "path";
      for (int v : p) std::cout << ' ' << v;
      std::cout << "\n";
    }
    return 0;
  }
  auto pk = ttw::pattern_from_name(kind);
  if (!pk) throw std::runtime_error("unknown pattern kind '" + kind + "'");
  auto w = ttw::find_pattern(g, *pk, limits);
  if (!w) {
    std::cout << "absent\n";
    return 0;
  }
  std::cout << ttw::pattern_name(*pk) << " vertices";
  for (int v : w->vertices) std::cout << ' ' << v;
  std::cout << "\n";
  if (!w->cycle.empty()) {
    std::cout << "cycle";
    for (int v : w->cycle) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (!w->centers.empty()) {
    std::cout << "centers";
    for (int v : w->centers) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (w->apexes[0] >= 0)
    std::cout << "apexes " << w->apexes[0] << ' ' << w->apexes[1] << "\n";
  for (const auto& p : w->paths) {
    std::cout << "path";
    for (int v : p) std::cout << ' ' << v;
    std::cout << "\n";
  }
  for (const auto& grp : w->groups) {
    std::cout << "group";
    for (int v : grp) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recognition and decomposition toolkit for sparse hole-based graph classes"};
  app.require_subcommand(1);

  std::string path, fmt, out_path, subclass, kind, out_fmt;
  bool dot = false;
  std::uint64_t seed = 1;
  int size = 12, limit = 0;

  auto* check = app.add_subcommand("check", "class membership report (JSON)");
  check->add_option("file", path)->required();
  check->add_option("--format", fmt);

  auto* tw = app.add_subcommand("treewidth", "emit a PACE-style tree decomposition");
  tw->add_option("file", path)->required();
  tw->add_option("--format", fmt);
  tw->add_option("-o,--output", out_path);

  auto* dec = app.add_subcommand("decompose", "emit the decomposition tree");
  dec->add_option("file", path)->required();
  dec->add_option("--format", fmt);
  dec->add_flag("--dot", dot);

  auto* ears = app.add_subcommand("ears", "emit an ear sequence");
  ears->add_option("file", path)->required();
  ears->add_option("--format", fmt);

  auto* gen = app.add_subcommand("generate", "emit a random class member");
  gen->add_option("seed", seed)->required();
  gen->add_option("size", size)->required();
  gen->add_option("--subclass", subclass,
                  "even-wheel-free | even-hole-free | bipartite");
  gen->add_option("--format", out_fmt, "edgelist (default) | dimacs | graph6");

  auto* oracle = app.add_subcommand("oracle", "brute-force pattern search");
  oracle->add_option("kind", kind)->required();
  oracle->add_option("file", path)->required();
  oracle->add_option("--format", fmt);
  oracle->add_option("--limit", limit, "override the exhaustive-search size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(path, fmt);
    if (tw->parsed()) return cmd_treewidth(path, fmt, out_path);
    if (dec->parsed()) return cmd_decompose(path, fmt, dot);
    if (ears->parsed()) return cmd_ears(path, fmt);
    if (gen->parsed()) return cmd_generate(seed, size, subclass, out_fmt);
    if (oracle->parsed()) return cmd_oracle(kind, path, fmt, limit);
  } catch (const ttw::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ttw::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
