#pragma once

// Self-consistency check of the engine against the independent oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pbat/bat.hpp"
#include "pbat/connectivity.hpp"
#include "pbat/reliability.hpp"

namespace pbat {

struct VerifyOptions {
  double tolerance = 1e-12;
  /// Largest chi tried; every power of two up to min(2^m, max_chi) is run.
  std::uint64_t max_chi = 64;
  int max_arcs = kDefaultMaxArcs;
  /// Mutation hook: flips the layered-search verdict at this backward index.
  std::optional<VectorIndex> inject_fault;
};

struct VerifyResult {
  bool passed = true;
  double serial = 0.0;
  double brute_force = 0.0;
  std::vector<std::pair<std::uint64_t, double>> parallel;  // (chi, total)
  double max_discrepancy = 0.0;
  std::uint64_t vectors_checked = 0;
  std::vector<std::string> failures;
  std::optional<StateVector> offending_vector;
  std::optional<std::uint64_t> offending_chi;
};

inline VerifyResult verify_network(const Network& net, const VerifyOptions& opts = {}) {
  VerifyResult out;
  const int m = net.arc_count();
  solution_space_size(m, std::min(opts.max_arcs, kBruteForceMaxArcs));

  ReliabilityOptions ro;
  ro.max_arcs = opts.max_arcs;
  out.brute_force = brute_force_reliability(net);
  out.serial = serial_reliability(net, ro).total;

  auto note = [&](double got, double want) {
    const double d = std::abs(got - want);
    out.max_discrepancy = std::max(out.max_discrepancy, d);
    return d <= opts.tolerance;
  };

  if (!note(out.serial, out.brute_force)) {
    out.passed = false;
    std::ostringstream os;
    os.precision(17);
    os << "serial " << out.serial << " != brute force " << out.brute_force;
    out.failures.push_back(os.str());
  }

  const std::uint64_t top = std::min<std::uint64_t>(std::uint64_t{1} << m, opts.max_chi);
  for (std::uint64_t chi = 1; chi <= top; chi <<= 1) {
    const double r = parallel_reliability(net, chi, ro).total;
    out.parallel.emplace_back(chi, r);
    if (!note(r, out.brute_force)) {
      out.passed = false;
      if (!out.offending_chi) out.offending_chi = chi;
      std::ostringstream os;
      os.precision(17);
      os << "chi=" << chi << ": parallel " << r << " != brute force " << out.brute_force;
      out.failures.push_back(os.str());
    }
  }

  LayeredSearch search(net);
  BatCursor cursor = bat_first(m);
  VectorIndex i = 1;
  do {
    const StateVector& x = cursor.current();
    bool layered = search.connected(x);
    if (opts.inject_fault && *opts.inject_fault == i) layered = !layered;
    const bool depth_first = dfs_connected(net, x);
    ++out.vectors_checked;
    if (layered != depth_first) {
      out.passed = false;
      if (!out.offending_vector) out.offending_vector = x;
      out.failures.push_back("vector " + std::to_string(i) + " " + x.to_string() +
                             ": layered search says " + (layered ? "connected" : "disconnected") +
                             ", depth-first says " + (depth_first ? "connected" : "disconnected"));
    }
    ++i;
  } while (cursor.next());
  return out;
}

}  // namespace pbat
