#pragma once

#include <span>
#include <utility>
#include <vector>

#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Prufer sequences over 0-based node ids. A code of length n-2 encodes a
// labelled tree on n nodes (n >= 2; the empty code maps to the single edge
// {0, 1}).

// Edge list of the decoded tree. Throws InvalidCodeError if an entry is
// outside [0, n).
std::vector<std::pair<int, int>> prufer_decode_edges(std::span<const int> code, int n);

// Decode against a complete host graph (needed to map node pairs back to
// edge indices). Throws ContractError if the host is not complete.
SpanningTree prufer_decode(const Graph& host, std::span<const int> code);

// Inverse mapping; tree on n nodes -> code of length n-2.
std::vector<int> prufer_encode(const SpanningTree& tree);

}  // namespace momst
