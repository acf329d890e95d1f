#include "p3pack/graph_io.hpp"

#include <istream>
#include <sstream>

namespace p3pack {

namespace {

void append_bits(std::string& out, int& bitpos, int& cur, bool bit) {
  cur = (cur << 1) | (bit ? 1 : 0);
  if (++bitpos == 6) {
    out.push_back(static_cast<char>(cur + 63));
    bitpos = 0;
    cur = 0;
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6 writer");
  }
  IndexMap im(g);
  int bitpos = 0, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      append_bits(out, bitpos, cur, g.has_edge(im.label[i], im.label[j]));
  if (bitpos != 0) {
    cur <<= (6 - bitpos);
    out.push_back(static_cast<char>(cur + 63));
  }
  return out;
}

Graph from_graph6(const std::string& line) {
  std::string s = line;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  size_t pos = 0;
  long n;
  if (s[pos] == 126) {
    if (s.size() >= 2 && s[1] == 126)
      throw std::invalid_argument("graph6 orders above 258047 unsupported");
    if (s.size() < 4) throw std::invalid_argument("truncated graph6 header");
    n = ((long)(s[1] - 63) << 12) | ((long)(s[2] - 63) << 6) | (long)(s[3] - 63);
    pos = 4;
  } else {
    if (s[pos] < 63 || s[pos] > 126) throw std::invalid_argument("bad graph6 byte");
    n = s[pos] - 63;
    pos = 1;
  }
  Graph g = Graph::with_vertices(static_cast<int>(n));
  int bitpos = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bitpos == 0) {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 body");
        char c = s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 byte");
        cur = c - 63;
        bitpos = 6;
      }
      --bitpos;
      if ((cur >> bitpos) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  IndexMap im(g);
  for (const Edge& e : g.edges())
    out << im.index.at(e.u) << ' ' << im.index.at(e.v) << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("bad edge-list header");
  if (n < 0 || m < 0) throw std::invalid_argument("bad edge-list header");
  Graph g = Graph::with_vertices(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    g.add_edge(u, v);
  }
  return g;
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0 && line.size() == 10) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace p3pack
