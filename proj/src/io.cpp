#include "prodgraph/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace prodgraph {

namespace {

bool parse_two_ints(const std::string& line, long& a, long& b) {
  std::istringstream fields(line);
  std::string extra;
  return (fields >> a >> b) && !(fields >> extra);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = 0, m = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!parse_two_ints(line, n, m))
      throw parse_error(lineno, "expected header \"n m\"");
    break;
  }
  if (lineno == 0 || n <= 0)
    throw parse_error(std::max(lineno, 1), "missing or invalid vertex count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long read = 0;
  while (read < m && std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    long u = 0, v = 0;
    if (!parse_two_ints(line, u, v))
      throw parse_error(lineno, "expected edge \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error(lineno, "edge endpoint out of range");
    if (u == v) throw parse_error(lineno, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++read;
  }
  if (read < m)
    throw parse_error(lineno + 1, "expected " + std::to_string(m) +
                                      " edges, found " + std::to_string(read));
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph decode_graph6(const std::string& text) {
  std::string s = text;
  if (s.starts_with(">>graph6<<")) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw parse_error(1, "empty graph6 string");

  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) throw parse_error(1, "truncated graph6 string");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error(1, "invalid graph6 byte");
    return c - 63;
  };

  long n = 0;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() >= 2 && s[1] == '~') {
    throw parse_error(1, "graph6 orders above 258047 are not supported");
  } else {
    n = (long(byte(1)) << 12) | (long(byte(2)) << 6) | long(byte(3));
    pos = 4;
  }
  if (n < 1) throw parse_error(1, "graph6 order must be at least 1");

  const long bits = n * (n - 1) / 2;
  const std::size_t need = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != need)
    throw parse_error(1, "graph6 body has wrong length");

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int group = byte(pos + static_cast<std::size_t>(k / 6));
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6 orders above 258047 are not supported");
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph read_graph(std::istream& in) {
  std::string first;
  int lineno = 0;
  while (std::getline(in, first)) {
    ++lineno;
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (first.empty() || first.find_first_not_of(" \t\r") == std::string::npos)
    throw parse_error(std::max(lineno, 1), "empty input");
  // graph6 bytes are all >= '?' (63); digits and spaces only occur in the
  // edge-list header.
  bool numeric = first.find_first_not_of("0123456789 \t\r") == std::string::npos;
  if (numeric) {
    // pad skipped blank lines so parse errors keep original line numbers
    std::ostringstream joined;
    for (int i = 1; i < lineno; ++i) joined << '\n';
    joined << first << '\n' << in.rdbuf();
    std::istringstream replay(joined.str());
    return read_edge_list(replay);
  }
  return decode_graph6(first);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

}  // namespace prodgraph
