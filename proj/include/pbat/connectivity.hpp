#pragma once

// Source-sink connectivity of G(X): the path-based layered search used by the
// engine, and a depth-first oracle that shares no code with it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "pbat/network.hpp"

namespace pbat {

struct LayerTrace {
  std::vector<std::vector<NodeId>> layers;  // L_1 = {source}, L_2, ...
  bool connected = false;
};

/// Layered search with reusable scratch space. One instance per worker; not
/// safe to share across threads.
///
/// L_1 = {source}; L_l holds the not-yet-visited heads of working arcs
/// leaving L_{l-1}. Stops as soon as the sink enters a layer (connected) or
/// a layer comes out empty (disconnected). Each node enters at most one
/// layer, so at most n layers are built and cycles cannot stall the search.
class LayeredSearch {
 public:
  explicit LayeredSearch(const Network& net)
      : m_(net.arc_count()),
        source_(net.source()),
        sink_(net.sink()),
        offsets_(static_cast<std::size_t>(net.node_count()) + 2, 0),
        stamp_(static_cast<std::size_t>(net.node_count()) + 1, 0) {
    const bool both = net.undirected();
    for (const Arc& a : net.arcs()) {
      ++offsets_[static_cast<std::size_t>(a.tail) + 1];
      if (both) ++offsets_[static_cast<std::size_t>(a.head) + 1];
    }
    for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
    out_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (int k = 1; k <= m_; ++k) {
      const Arc& a = net.arc(k);
      const std::uint64_t bit = std::uint64_t{1} << (k - 1);
      out_[fill[static_cast<std::size_t>(a.tail)]++] = {a.head, bit};
      if (both) out_[fill[static_cast<std::size_t>(a.head)]++] = {a.tail, bit};
    }
    current_.reserve(stamp_.size());
    next_.reserve(stamp_.size());
  }

  bool connected(const StateVector& x) { return run(x, nullptr); }

  LayerTrace trace(const StateVector& x) {
    LayerTrace tr;
    tr.connected = run(x, &tr);
    return tr;
  }

 private:
  struct OutArc {
    NodeId head;
    std::uint64_t bit;
  };

  bool run(const StateVector& x, LayerTrace* tr) {
    if (x.size() != m_) throw NetworkError("state vector length mismatch");
    const std::uint64_t bits = x.bits();
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    current_.clear();
    current_.push_back(source_);
    stamp_[static_cast<std::size_t>(source_)] = epoch_;
    if (tr) tr->layers.push_back(current_);
    for (;;) {
      next_.clear();
      for (NodeId u : current_) {
        const auto begin = offsets_[static_cast<std::size_t>(u)];
        const auto end = offsets_[static_cast<std::size_t>(u) + 1];
        for (auto e = begin; e < end; ++e) {
          const OutArc& oa = out_[e];
          if (!(bits & oa.bit)) continue;
          auto& seen = stamp_[static_cast<std::size_t>(oa.head)];
          if (seen == epoch_) continue;
          seen = epoch_;
          next_.push_back(oa.head);
        }
      }
      if (next_.empty()) return false;
      if (tr) tr->layers.push_back(next_);
      if (stamp_[static_cast<std::size_t>(sink_)] == epoch_) return true;
      current_.swap(next_);
    }
  }

  int m_;
  NodeId source_;
  NodeId sink_;
  std::vector<std::uint32_t> offsets_;  // CSR row starts, indexed by node id
  std::vector<OutArc> out_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> current_;
  std::vector<NodeId> next_;
};

inline bool plsa_connected(const Network& net, const StateVector& x) {
  return LayeredSearch(net).connected(x);
}

inline LayerTrace plsa_trace(const Network& net, const StateVector& x) {
  return LayeredSearch(net).trace(x);
}

/// Depth-first reachability straight off the arc list.
inline bool dfs_connected(const Network& net, const StateVector& x) {
  if (x.size() != net.arc_count()) throw NetworkError("state vector length mismatch");
  std::vector<char> reached(static_cast<std::size_t>(net.node_count()) + 1, 0);
  std::vector<NodeId> stack{net.source()};
  reached[static_cast<std::size_t>(net.source())] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (u == net.sink()) return true;
    for (int k = 1; k <= net.arc_count(); ++k) {
      if (!x[k]) continue;
      const Arc& a = net.arc(k);
      std::optional<NodeId> to;
      if (a.tail == u) to = a.head;
      else if (net.undirected() && a.head == u) to = a.tail;
      if (to && !reached[static_cast<std::size_t>(*to)]) {
        reached[static_cast<std::size_t>(*to)] = 1;
        stack.push_back(*to);
      }
    }
  }
  return false;
}

}  // namespace pbat
