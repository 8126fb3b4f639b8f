#include "ttwfree/io.hpp"

#include <algorithm>
#include <sstream>

#include "ttwfree/basic.hpp"

namespace ttw {

namespace {

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream is(line);
    long u, v;
    if (!(is >> u)) continue;  // blank or comment-only line
    if (!(is >> v)) throw ParseError(lineno, "expected two vertex ids");
    std::string extra;
    if (is >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
    if (u == v) throw ParseError(lineno, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }
  return Graph::from_edges(max_id + 1, edges);
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(is >> kind >> n >> m) || (kind != "edge" && kind != "col"))
        throw ParseError(lineno, "malformed problem line");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative sizes");
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      long u, v;
      if (!(is >> u >> v)) throw ParseError(lineno, "expected two endpoints");
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + tag + "'");
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(lineno, "edge count does not match the header");
  return Graph::from_edges(n, edges);
}

Graph parse_graph6_text(const std::string& text) {
  std::string s;
  std::istringstream in(text);
  int lineno = 0;
  while (std::getline(in, s)) {
    ++lineno;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (s.empty()) continue;
    break;
  }
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError(lineno, "empty graph6 input");

  size_t pos = 0;
  auto byte = [&](size_t i) -> long {
    if (i >= s.size()) throw ParseError(lineno, "truncated graph6 data");
    long b = static_cast<unsigned char>(s[i]);
    if (b < 63 || b > 126) throw ParseError(lineno, "invalid graph6 byte");
    return b - 63;
  };
  long n;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  long bits = n * (n - 1) / 2;
  if (static_cast<long>(s.size()) < static_cast<long>(pos) + (bits + 5) / 6)
    throw ParseError(lineno, "graph6 data shorter than the declared size");
  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      long b = byte(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
      ++bit;
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(const std::string& text, InputFormat format) {
  switch (format) {
    case InputFormat::EdgeList:
      return parse_edge_list(text);
    case InputFormat::Dimacs:
      return parse_dimacs(text);
    case InputFormat::Graph6:
      return parse_graph6_text(text);
  }
  throw std::logic_error("unknown format");
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# vertices " << g.n() << "\n";
  for (auto [u, v] : g.edges()) os << u << ' ' << v << "\n";
  return os.str();
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << "\n";
  return os.str();
}

std::string write_graph6(const Graph& g) {
  std::string s;
  long n = g.n();
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back(126);
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  } else {
    s.push_back(126);
    s.push_back(126);
    for (int sh = 30; sh >= 0; sh -= 6)
      s.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  long bits = n * (n - 1) / 2;
  std::vector<char> groups((bits + 5) / 6, 0);
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) groups[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
      ++bit;
    }
  for (char c : groups) s.push_back(static_cast<char>(c + 63));
  return s;
}

std::optional<InputFormat> format_from_name(const std::string& name) {
  if (name == "edgelist" || name == "edges") return InputFormat::EdgeList;
  if (name == "dimacs") return InputFormat::Dimacs;
  if (name == "graph6" || name == "g6") return InputFormat::Graph6;
  return std::nullopt;
}

std::string write_pace(const TreeRepresentation& rep, int n) {
  std::ostringstream os;
  int maxbag = 0;
  for (const auto& b : rep.bags) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  os << "s td " << rep.bags.size() << ' ' << maxbag << ' ' << n << "\n";
  for (size_t i = 0; i < rep.bags.size(); ++i) {
    os << "b " << i + 1;
    for (int v : rep.bags[i]) os << ' ' << v + 1;
    os << "\n";
  }
  for (auto [i, j] : rep.edges) os << i + 1 << ' ' << j + 1 << "\n";
  return os.str();
}

PaceDecomposition parse_pace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  PaceDecomposition out;
  long bags = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "s") {
      std::string td;
      long maxbag;
      if (!(is >> td >> bags >> maxbag >> out.n) || td != "td")
        throw ParseError(lineno, "malformed solution line");
      out.rep.bags.assign(bags, {});
      continue;
    }
    if (tag == "b") {
      long id;
      if (!(is >> id) || id < 1 || id > bags)
        throw ParseError(lineno, "bad bag id");
      long v;
      while (is >> v) {
        if (v < 1 || v > out.n) throw ParseError(lineno, "bag vertex out of range");
        out.rep.bags[id - 1].push_back(static_cast<int>(v - 1));
      }
      continue;
    }
    // tree edge line
    std::istringstream es(line);
    long i, j;
    if (!(es >> i >> j) || i < 1 || j < 1 || i > bags || j > bags)
      throw ParseError(lineno, "bad tree edge");
    out.rep.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  if (bags < 0) throw ParseError(lineno, "missing solution line");
  return out;
}

std::string decomposition_dot(const DecompositionTree& t) {
  std::ostringstream os;
  os << "digraph decomposition {\n";
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    os << "  n" << i << " [label=\"" << i << ": n=" << node.graph.n();
    if (node.separator) {
      switch (node.separator->kind) {
        case SeparatorKind::Clique:
          os << " clique(";
          for (size_t j = 0; j < node.separator->clique.size(); ++j)
            os << (j ? "," : "") << node.orig_ids[node.separator->clique[j]];
          os << ")";
          break;
        case SeparatorKind::Two:
          os << " 2-sep(" << node.orig_ids[node.separator->a] << ","
             << node.orig_ids[node.separator->b] << ")";
          break;
        case SeparatorKind::P3:
          os << " p3(" << node.orig_ids[node.separator->a] << ","
             << node.orig_ids[node.separator->c] << ","
             << node.orig_ids[node.separator->b] << ")";
          break;
      }
    } else {
      auto kind = recognize_basic(node.graph);
      if (!kind) {
        os << " leaf:non-basic";
      } else {
        switch (kind->type) {
          case BasicType::K1: os << " leaf:K1"; break;
          case BasicType::K2: os << " leaf:K2"; break;
          case BasicType::Cube: os << " leaf:cube"; break;
          case BasicType::Daisy: {
            size_t petals = kind->daisy->petals.size();
            if (petals == 0)
              os << " leaf:hole(" << kind->daisy->base_hole.size() << ")";
            else if (petals == 1)
              os << " leaf:wheel";
            else
              os << " leaf:daisy(" << kind->daisy->base_hole.size() << ","
                 << petals << ")";
            break;
          }
        }
      }
    }
    os << "\"];\n";
  }
  for (size_t i = 0; i < t.nodes.size(); ++i)
    for (int c : t.nodes[i].children) os << "  n" << i << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ttw
