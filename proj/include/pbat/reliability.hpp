#pragma once

// Exact two-terminal reliability: per-vector probability, the serial BAT
// sweep, the equal-division parallel sweep, and a brute-force oracle.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pbat/bat.hpp"
#include "pbat/connectivity.hpp"
#include "pbat/network.hpp"

namespace pbat {

/// Pr(X) = prod_{x_k = 1} p_k * prod_{x_k = 0} (1 - p_k), taken in coordinate order.
inline double vector_prob(const StateVector& x, std::span<const double> p) {
  if (static_cast<std::size_t>(x.size()) != p.size())
    throw NetworkError("state vector length mismatch");
  double pr = 1.0;
  for (int k = 1; k <= x.size(); ++k) {
    const double pk = p[static_cast<std::size_t>(k - 1)];
    pr *= x[k] ? pk : 1.0 - pk;
  }
  return pr;
}

enum class Summation { plain, compensated };

struct ReliabilityOptions {
  int max_arcs = kDefaultMaxArcs;
  std::optional<std::chrono::duration<double>> timeout;
  Summation summation = Summation::plain;
  /// 0 runs every division on its own thread; otherwise at most this many
  /// OS threads pick up whole divisions.
  unsigned max_threads = 0;
};

struct DivisionResult {
  int t = 0;
  double reliability = 0.0;        // R_t
  std::uint64_t visited = 0;       // N_t
  std::uint64_t connected = 0;
};

struct ReliabilityReport {
  double total = 0.0;
  std::vector<DivisionResult> divisions;  // ascending t
  std::uint64_t chi = 1;
  double seconds = 0.0;

  double vectors_per_second() const {
    std::uint64_t n = 0;
    for (const auto& d : divisions) n += d.visited;
    return seconds > 0 ? static_cast<double>(n) / seconds : 0.0;
  }
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError(double budget, std::uint64_t visited, std::uint64_t total)
      : std::runtime_error("timeout after " + std::to_string(budget) + " s: " +
                           std::to_string(visited) + " of " + std::to_string(total) +
                           " vectors visited"),
        visited_(visited),
        total_(total) {}
  std::uint64_t visited() const noexcept { return visited_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::uint64_t visited_;
  std::uint64_t total_;
};

namespace detail {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) comp_ += (sum_ - t) + v;
    else comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Aborted {};

struct SweepControl {
  std::chrono::steady_clock::time_point deadline;
  bool timed = false;
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> progress{0};
};

inline constexpr std::uint64_t kPollInterval = 1u << 14;

inline DivisionResult run_division(const Network& net, const DivisionPlan& plan, int t,
                                   Summation summation, SweepControl& ctl) {
  LayeredSearch search(net);
  const std::span<const double> p(net.reliabilities());
  DivisionResult r;
  r.t = t;
  double plain = 0.0;
  CompensatedSum comp;
  std::uint64_t since_poll = 0;
  r.visited = division_enumerate(plan, t, [&](const StateVector& x) {
    if (++since_poll == kPollInterval) {
      ctl.progress.fetch_add(since_poll, std::memory_order_relaxed);
      since_poll = 0;
      if (ctl.stop.load(std::memory_order_relaxed)) throw Aborted{};
      if (ctl.timed && std::chrono::steady_clock::now() > ctl.deadline) {
        ctl.stop = true;
        throw Aborted{};
      }
    }
    if (!search.connected(x)) return;
    ++r.connected;
    const double pr = vector_prob(x, p);
    if (summation == Summation::plain) plain += pr;
    else comp.add(pr);
  });
  ctl.progress.fetch_add(since_poll, std::memory_order_relaxed);
  r.reliability = summation == Summation::plain ? plain : comp.value();
  return r;
}

inline double merge_partials(const std::vector<DivisionResult>& parts, Summation summation) {
  if (summation == Summation::plain) {
    double total = 0.0;
    for (const auto& d : parts) total += d.reliability;
    return total;
  }
  CompensatedSum s;
  for (const auto& d : parts) s.add(d.reliability);
  return s.value();
}

}  // namespace detail

/// Equal-division sweep: chi independent workers, each enumerating its own
/// division with its own search scratch and accumulator; partials are merged
/// in ascending division order, so the result for a fixed chi does not depend
/// on scheduling.
inline ReliabilityReport parallel_reliability(const Network& net, std::uint64_t chi,
                                              const ReliabilityOptions& opts = {}) {
  const DivisionPlan plan = plan_divisions(net.arc_count(), chi, opts.max_arcs);
  detail::SweepControl ctl;
  if (opts.timeout) {
    ctl.timed = true;
    ctl.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(*opts.timeout);
  }

  std::vector<DivisionResult> parts(plan.chi);
  std::vector<std::exception_ptr> errors(plan.chi);
  std::atomic<bool> any_aborted{false};

  auto work = [&](std::size_t i) {
    try {
      parts[i] = detail::run_division(net, plan, static_cast<int>(i) + 1, opts.summation, ctl);
    } catch (const detail::Aborted&) {
      any_aborted = true;
    } catch (...) {
      errors[i] = std::current_exception();
      ctl.stop = true;
    }
  };

  const auto started = std::chrono::steady_clock::now();
  if (plan.chi == 1) {
    work(0);
  } else {
    const std::uint64_t threads =
        opts.max_threads == 0 ? plan.chi : std::min<std::uint64_t>(plan.chi, opts.max_threads);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    if (threads == plan.chi) {
      for (std::size_t i = 0; i < plan.chi; ++i) pool.emplace_back(work, i);
    } else {
      std::atomic<std::size_t> next{0};
      for (std::uint64_t w = 0; w < threads; ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < plan.chi;) work(i);
        });
    }
  }
  const auto finished = std::chrono::steady_clock::now();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (any_aborted)
    throw TimeoutError(opts.timeout ? opts.timeout->count() : 0.0, ctl.progress.load(),
                       plan.mu * plan.chi);

  ReliabilityReport report;
  report.chi = plan.chi;
  report.total = detail::merge_partials(parts, opts.summation);
  report.divisions = std::move(parts);
  report.seconds = std::chrono::duration<double>(finished - started).count();
  return report;
}

/// Whole backward BAT in the calling thread, adding Pr(X) for every
/// connected X in emission order.
inline ReliabilityReport serial_reliability(const Network& net, const ReliabilityOptions& opts = {}) {
  return parallel_reliability(net, 1, opts);
}

inline constexpr int kBruteForceMaxArcs = 24;

/// Oracle: i = 1..2^m through Dec^-1, depth-first connectivity, Pr(X).
inline double brute_force_reliability(const Network& net) {
  const int m = net.arc_count();
  if (m > kBruteForceMaxArcs)
    throw CapExceeded("brute-force oracle limited to m <= " + std::to_string(kBruteForceMaxArcs));
  const std::uint64_t total = std::uint64_t{1} << m;
  double r = 0.0;
  for (std::uint64_t i = 1; i <= total; ++i) {
    const StateVector x = dec_inv(i, m);
    if (dfs_connected(net, x)) r += vector_prob(x, net.reliabilities());
  }
  return r;
}

}  // namespace pbat
