#include "linerec/graph_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "linerec/error.hpp"

namespace linerec {

void write_graph(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_graph(std::istream& is) {
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw Error(Failure::ParseError, "bad graph header");
  std::vector<Edge> edges;
  for (long long k = 0; k < m; ++k) {
    long long i = 0;
    long long j = 0;
    if (!(is >> i >> j)) throw Error(Failure::ParseError, "graph file truncated at edge " + std::to_string(k + 1));
    if (i < 1 || j < 1 || i > n || j > n) throw Error(Failure::ParseError, "vertex label out of range");
    edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)});
  }
  std::string extra;
  if (is >> extra) throw Error(Failure::ParseError, "trailing data after " + std::to_string(m) + " edges");
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(Failure::ParseError, e.what());
  }
}

void write_integers(std::ostream& os, const std::vector<BigInt>& values) {
  for (const auto& v : values) os << v << '\n';
}

std::vector<BigInt> read_integers(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  // Every value is newline terminated; a missing final newline means the file was cut short.
  if (!text.empty() && text.back() != '\n') throw Error(Failure::ParseError, "integer file truncated (no final newline)");
  std::istringstream in(text);
  std::vector<BigInt> out;
  std::string token;
  while (in >> token) {
    BigInt v;
    if (v.set_str(token, 10) != 0) throw Error(Failure::ParseError, "not an integer: '" + token + "'");
    out.push_back(std::move(v));
  }
  return out;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Failure::ParseError, "cannot open " + path);
  return read_graph(in);
}

std::vector<BigInt> load_integers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Failure::ParseError, "cannot open " + path);
  return read_integers(in);
}

}  // namespace linerec
