#include "cliquelb/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace cliquelb {

namespace {

/// Next line that is not blank; false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return true;
    }
  }
  return false;
}

std::string require_line(std::istream& in, const char* what) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw FormatError(std::string("unexpected end of input while reading ") + what);
  }
  return line;
}

template <class... T>
void parse_fields(const std::string& line, const char* what, T&... fields) {
  // extraction into an unsigned field would silently wrap "-1"
  if (line.find('-') != std::string::npos) {
    throw FormatError(std::string("negative value in ") + what + ": '" + line + "'");
  }
  std::istringstream row(line);
  if (!(row >> ... >> fields)) {
    throw FormatError(std::string("malformed ") + what + ": '" + line + "'");
  }
  std::string extra;
  if (row >> extra) {
    throw FormatError(std::string("trailing data in ") + what + ": '" + line + "'");
  }
}

std::vector<VertexId> parse_id_list(const std::string& line, const char* what) {
  std::istringstream row(line);
  std::vector<VertexId> ids;
  long long id = 0;
  while (row >> id) {
    if (id < 0 || id > std::numeric_limits<VertexId>::max()) {
      throw FormatError(std::string("vertex id out of range in ") + what);
    }
    ids.push_back(static_cast<VertexId>(id));
  }
  if (!row.eof()) {
    throw FormatError(std::string("malformed id list in ") + what + ": '" + line + "'");
  }
  return ids;
}

void write_id_list(std::ostream& out, const VertexSet& ids) {
  bool first = true;
  for (VertexId v : ids) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidParameter("cannot open " + path.string());
  }
  return in;
}

BipartiteGraph read_bipartite_block(std::istream& in) {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t m = 0;
  parse_fields(require_line(in, "bipartite header"), "bipartite header", n_a, n_b, m);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId a = 0;
    VertexId b = 0;
    parse_fields(require_line(in, "bipartite edge"), "bipartite edge", a, b);
    edges.emplace_back(a, b);
  }
  return BipartiteGraph(n_a, n_b, edges);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  parse_fields(require_line(in, "graph header"), "graph header", n, m);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId u = 0;
    VertexId v = 0;
    parse_fields(require_line(in, "graph edge"), "graph edge", u, v);
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

BipartiteGraph read_bipartite(std::istream& in) { return read_bipartite_block(in); }

void write_bipartite(std::ostream& out, const BipartiteGraph& g) {
  out << g.n_a() << ' ' << g.n_b() << ' ' << g.n_edges() << '\n';
  for (const auto& [a, b] : g.edges()) {
    out << a << ' ' << b << '\n';
  }
}

LowerBoundGraph read_lbg(std::istream& in) {
  std::string tag;
  std::size_t n = 0;
  std::size_t k = 0;
  parse_fields(require_line(in, "LBG header"), "LBG header", tag, n, k);
  if (tag != "LBG") {
    throw FormatError("LBG header must start with 'LBG', got '" + tag + "'");
  }
  LowerBoundGraph lbg;
  lbg.base = read_bipartite_block(in);
  if (lbg.base.n_a() != n || lbg.base.n_b() != n) {
    throw FormatError("LBG side sizes disagree with header n=" + std::to_string(n));
  }
  lbg.designated.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Biclique quad;
    parse_fields(require_line(in, "designated set"), "designated set", quad.a1, quad.a2, quad.b1, quad.b2);
    lbg.designated.push_back(quad);
  }
  // The sample lines may legitimately be empty, so read them verbatim.
  std::string line;
  std::getline(in, line);
  lbg.side_sample_a = VertexSet(parse_id_list(line, "A' sample"));
  line.clear();
  std::getline(in, line);
  lbg.side_sample_b = VertexSet(parse_id_list(line, "B' sample"));
  return lbg;
}

void write_lbg(std::ostream& out, const LowerBoundGraph& lbg) {
  out << "LBG " << lbg.n() << ' ' << lbg.designated.size() << '\n';
  write_bipartite(out, lbg.base);
  for (const Biclique& k : lbg.designated) {
    out << k.a1 << ' ' << k.a2 << ' ' << k.b1 << ' ' << k.b2 << '\n';
  }
  write_id_list(out, lbg.side_sample_a);
  write_id_list(out, lbg.side_sample_b);
}

VertexSet read_partition(std::istream& in) {
  std::string line;
  std::getline(in, line);
  return VertexSet(parse_id_list(line, "partition"));
}

void write_partition(std::ostream& out, const VertexSet& side_a) { write_id_list(out, side_a); }

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph(in);
}

LowerBoundGraph load_lbg(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_lbg(in);
}

VertexSet load_partition(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_partition(in);
}

}  // namespace cliquelb
