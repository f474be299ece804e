#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "linerec/graph.hpp"

namespace linerec {

// Plain-text formats. Graph: "n m" header then m lines "i j" (1-indexed).
// Configuration and length vector: one integer per line, each line newline
// terminated (a missing final newline reads as truncation). Parse failures throw
// Error(ParseError).

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

void write_integers(std::ostream& os, const std::vector<BigInt>& values);
std::vector<BigInt> read_integers(std::istream& is);

Graph load_graph(const std::string& path);
std::vector<BigInt> load_integers(const std::string& path);

}  // namespace linerec
