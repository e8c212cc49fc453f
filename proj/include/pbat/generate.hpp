#pragma once

// Random directed networks for tests and benchmarks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pbat/network.hpp"

namespace pbat {

struct GenerateOptions {
  double p_min = 0.5;
  double p_max = 0.99;
  /// Seed the arc list with a random source-to-sink path so the network is
  /// connected when every arc works.
  bool ensure_path = true;
};

/// n nodes, m distinct arcs without self-loops; source 1, sink n. Arc order
/// is shuffled so the path arcs are not clustered at the front.
inline Network random_network(int n, int m, std::uint64_t seed, const GenerateOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("need at least two nodes");
  const long long possible = static_cast<long long>(n) * (n - 1);
  if (m < 1 || m > possible || m > kHardMaxArcs)
    throw std::invalid_argument("arc count impossible for this node count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> node(1, n);
  std::uniform_real_distribution<double> prob(opts.p_min, opts.p_max);

  std::vector<Arc> arcs;
  auto has = [&arcs](Arc a) { return std::find(arcs.begin(), arcs.end(), a) != arcs.end(); };

  if (opts.ensure_path) {
    std::vector<int> middle;
    for (int v = 2; v < n; ++v) middle.push_back(v);
    std::shuffle(middle.begin(), middle.end(), rng);
    const int hops = std::min<int>(static_cast<int>(middle.size()), std::max(0, m - 1));
    std::uniform_int_distribution<int> len(0, hops);
    int prev = 1;
    for (int i = 0, stop = len(rng); i < stop; ++i) {
      arcs.push_back({prev, middle[static_cast<std::size_t>(i)]});
      prev = middle[static_cast<std::size_t>(i)];
    }
    arcs.push_back({prev, n});
  }
  while (static_cast<int>(arcs.size()) < m) {
    Arc a{node(rng), node(rng)};
    if (a.tail == a.head || has(a)) continue;
    arcs.push_back(a);
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  std::vector<double> p(arcs.size());
  for (auto& v : p) v = prob(rng);
  return Network(n, std::move(arcs), 1, n, std::move(p));
}

/// Layered "ladder" network used for timing: nodes on a rows x cols grid,
/// arcs to the right and both ways between vertically adjacent nodes,
/// plus a source feeding the first column and a sink fed by the last.
/// Every arc has reliability p.
inline Network ladder_network(int rows, int cols, double p = 0.9) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("ladder needs rows, cols >= 1");
  const int source = 1;
  auto id = [cols](int r, int c) { return 2 + r * cols + c; };
  const int sink = 2 + rows * cols;
  std::vector<Arc> arcs;
  for (int r = 0; r < rows; ++r) arcs.push_back({source, id(r, 0)});
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      if (c + 1 < cols) arcs.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) {
        arcs.push_back({id(r, c), id(r + 1, c)});
        arcs.push_back({id(r + 1, c), id(r, c)});
      }
    }
  for (int r = 0; r < rows; ++r) arcs.push_back({id(r, cols - 1), sink});
  std::vector<double> probs(arcs.size(), p);
  return Network(sink, std::move(arcs), source, sink, std::move(probs));
}

}  // namespace pbat
