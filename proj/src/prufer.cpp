#include "momst/prufer.hpp"

#include <queue>
#include <string>

#include "momst/errors.hpp"

namespace momst {

std::vector<std::pair<int, int>> prufer_decode_edges(std::span<const int> code, int n) {
  if (n < 2) throw ContractError("prufer_decode: need n >= 2");
  if (static_cast<int>(code.size()) != n - 2)
    throw ContractError("prufer_decode: code length must be n-2");
  for (int x : code)
    if (x < 0 || x >= n)
      throw InvalidCodeError("prufer_decode: entry " + std::to_string(x) +
                             " outside [0, " + std::to_string(n) + ")");

  // degree = multiplicity in code + 1; repeatedly attach the smallest leaf
  // to the next code entry.
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];

  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int x : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

SpanningTree prufer_decode(const Graph& host, std::span<const int> code) {
  if (!host.is_complete())
    throw ContractError("prufer_decode: host graph must be complete");
  auto pairs = prufer_decode_edges(code, host.node_count());
  std::vector<int> indices;
  indices.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    const int ei = host.find_edge(u, v);
    if (ei < 0) throw ContractError("prufer_decode: edge missing from host");
    indices.push_back(ei);
  }
  return SpanningTree(host, std::move(indices));
}

std::vector<int> prufer_encode(const SpanningTree& tree) {
  const int n = tree.host().node_count();
  if (n < 2) throw ContractError("prufer_encode: need n >= 2");
  if (n == 2) return {};

  auto adj = tree.adjacency();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<unsigned char> removed(n, 0);

  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<int> code;
  code.reserve(n - 2);
  for (int step = 0; step < n - 2; ++step) {
    const int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (const AdjEntry& e : adj[leaf]) {
      if (removed[e.neighbor]) continue;
      code.push_back(e.neighbor);
      if (--degree[e.neighbor] == 1) leaves.push(e.neighbor);
      break;
    }
  }
  return code;
}

}  // namespace momst
