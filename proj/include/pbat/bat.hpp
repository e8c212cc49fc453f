#pragma once

// Binary-addition-tree (BAT) enumeration of state vectors, the index
// bijection Dec / Dec^-1, and the equal-division planner.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbat/network.hpp"

namespace pbat {

/// 1-based position of a vector in a BAT emission order (X_1 = 0).
using VectorIndex = std::uint64_t;

/// Backward updates from coordinate m toward 1 (big-endian counting, the
/// default); forward updates from coordinate 1 toward m.
enum class BatMode { backward, forward };

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |B| = 2^m. Throws CapExceeded when m is above max_arcs.
inline std::uint64_t solution_space_size(int m, int max_arcs = kDefaultMaxArcs) {
  if (m < 1) throw std::invalid_argument("arc count must be at least 1");
  const int cap = max_arcs < kHardMaxArcs ? max_arcs : kHardMaxArcs;
  if (m > cap)
    throw CapExceeded("m = " + std::to_string(m) + " exceeds the arc cap of " + std::to_string(cap));
  return std::uint64_t{1} << m;
}

/// One m-tuple walked through all 2^m values by the BAT update rule: the last
/// zero coordinate (in scan order) becomes one and every coordinate after it
/// is reset to zero; the walk halts once no zero coordinate remains.
class BatCursor {
 public:
  BatCursor(int m, BatMode mode) : current_(check(m)), mode_(mode), k_(start()) {}

  const StateVector& current() const noexcept { return current_; }
  BatMode mode() const noexcept { return mode_; }
  int pointer() const noexcept { return k_; }
  bool exhausted() const noexcept { return exhausted_; }

  /// Advances to the next vector. Returns false (and marks the cursor
  /// exhausted, leaving the all-one vector in place) when the walk is done.
  bool next() {
    if (exhausted_) throw std::logic_error("bat_next called on an exhausted cursor");
    const int m = current_.size();
    if (current_.bits() == StateVector::mask_for(m)) {
      exhausted_ = true;
      return false;
    }
    k_ = start();
    while (current_[k_]) {
      current_.set(k_, false);
      k_ = mode_ == BatMode::backward ? k_ - 1 : k_ + 1;
    }
    current_.set(k_, true);
    k_ = start();
    return true;
  }

 private:
  static StateVector check(int m) {
    if (m < 1 || m > kHardMaxArcs) throw std::invalid_argument("BAT needs 1 <= m <= 62");
    return StateVector::all_zero(m);
  }
  int start() const noexcept { return mode_ == BatMode::backward ? current_.size() : 1; }

  StateVector current_;
  BatMode mode_;
  int k_;
  bool exhausted_ = false;
};

/// Cursor at X_1 = 0.
inline BatCursor bat_first(int m, BatMode mode = BatMode::backward) { return BatCursor(m, mode); }

/// Dec(X): backward i = sum x_k 2^(m-k) + 1, forward i = sum x_k 2^(k-1) + 1.
inline VectorIndex dec(const StateVector& x, BatMode mode = BatMode::backward) {
  const int m = x.size();
  if (m < 1) throw std::invalid_argument("empty state vector");
  VectorIndex i = 0;
  for (int k = 1; k <= m; ++k) {
    if (!x[k]) continue;
    const int weight = mode == BatMode::backward ? m - k : k - 1;
    i += VectorIndex{1} << weight;
  }
  return i + 1;
}

/// Dec^-1(i): the unique x of length m with dec(x, mode) == i.
inline StateVector dec_inv(VectorIndex i, int m, BatMode mode = BatMode::backward) {
  if (m < 1 || m > kHardMaxArcs) throw std::invalid_argument("dec_inv needs 1 <= m <= 62");
  if (i < 1 || i > (VectorIndex{1} << m))
    throw std::out_of_range("vector index " + std::to_string(i) + " outside [1, 2^" +
                            std::to_string(m) + "]");
  VectorIndex rest = i - 1;
  StateVector x(m);
  for (int k = 1; k <= m; ++k) {
    const int weight = mode == BatMode::backward ? m - k : k - 1;
    x.set(k, (rest >> weight) & 1u);
  }
  return x;
}

/// One slice of the index space: a fixed prefix over the first c coordinates
/// and mu vectors beneath it.
struct Division {
  int t;                    // 1-based division number
  StateVector prefix;       // c coordinates
  VectorIndex first_index;  // (t-1)*mu + 1
  VectorIndex last_index;   // t*mu
};

struct DivisionPlan {
  int m = 0;
  std::uint64_t chi = 1;
  int prefix_len = 0;  // c = log2(chi)
  std::uint64_t mu = 0;
  std::vector<Division> divisions;

  /// X_{t,1}: prefix followed by zeros.
  StateVector head(int t) const { return fill(t, false); }
  /// X_{t,mu}: prefix followed by ones.
  StateVector tail(int t) const { return fill(t, true); }

  const Division& division(int t) const {
    if (t < 1 || static_cast<std::uint64_t>(t) > chi)
      throw std::out_of_range("division " + std::to_string(t) + " outside [1, " +
                              std::to_string(chi) + "]");
    return divisions[static_cast<std::size_t>(t - 1)];
  }

 private:
  StateVector fill(int t, bool low) const {
    const Division& d = division(t);
    StateVector x(m);
    for (int k = 1; k <= m; ++k) x.set(k, k <= prefix_len ? d.prefix[k] : low);
    return x;
  }
};

inline bool is_power_of_two(std::uint64_t v) noexcept { return std::has_single_bit(v); }

/// Splits [1, 2^m] into chi equal divisions. The t-th prefix is the t-th
/// vector of a c-coordinate backward BAT, so only c coordinates are touched
/// per division head or tail.
inline DivisionPlan plan_divisions(int m, std::uint64_t chi, int max_arcs = kDefaultMaxArcs) {
  const std::uint64_t total = solution_space_size(m, max_arcs);
  if (!is_power_of_two(chi))
    throw std::invalid_argument("chi must be a power of two (got " + std::to_string(chi) + ")");
  if (chi > total)
    throw std::invalid_argument("chi = " + std::to_string(chi) + " exceeds 2^m = " +
                                std::to_string(total));
  DivisionPlan plan;
  plan.m = m;
  plan.chi = chi;
  plan.prefix_len = std::countr_zero(chi);
  plan.mu = total / chi;
  plan.divisions.reserve(chi);

  auto add = [&plan](const StateVector& prefix) {
    const auto t = static_cast<int>(plan.divisions.size()) + 1;
    const auto tt = static_cast<std::uint64_t>(t);
    plan.divisions.push_back({t, prefix, (tt - 1) * plan.mu + 1, tt * plan.mu});
  };
  if (plan.prefix_len == 0) {
    add(StateVector(0));
  } else {
    BatCursor prefixes(plan.prefix_len, BatMode::backward);
    do add(prefixes.current());
    while (prefixes.next());
  }
  return plan;
}

/// Visits the mu vectors of division t in global index order by running a
/// backward BAT over coordinates c+1..m beneath the fixed prefix. Returns
/// the number of vectors visited.
template <class Visitor>
std::uint64_t division_enumerate(const DivisionPlan& plan, int t, Visitor&& visit) {
  StateVector x = plan.head(t);
  const int m = plan.m;
  const int c = plan.prefix_len;
  std::uint64_t visited = 0;
  for (;;) {
    visit(static_cast<const StateVector&>(x));
    ++visited;
    int k = m;
    while (k > c && x[k]) {
      x.set(k, false);
      --k;
    }
    if (k == c) break;
    x.set(k, true);
  }
  return visited;
}

}  // namespace pbat
