#pragma once

// Thread-sweep timing: mean runtime per chi, pairwise ratios T_a/T_b and
// utility rates (T_a/T_b) / (b/a).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbat/reliability.hpp"

namespace pbat {

struct TimingStats {
  std::uint64_t chi = 1;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct RatioEntry {
  std::uint64_t a = 1;  // fewer threads
  std::uint64_t b = 1;  // more threads
  double ratio = 0.0;   // T_a / T_b
  double utility = 0.0; // ratio / (b / a)
};

struct BenchRecord {
  std::string name;
  int n = 0;
  int m = 0;
  std::uint64_t N = 0;
  double R = 0.0;
  unsigned runs = 0;
  std::vector<TimingStats> times;   // ascending chi
  std::vector<RatioEntry> ratios;   // every pair a < b, ordered by (a, b)
  /// Largest |R(chi) - R(chi')| seen across the sweep.
  double R_spread = 0.0;
};

inline std::vector<RatioEntry> compute_ratios(const std::vector<TimingStats>& times) {
  std::vector<RatioEntry> out;
  for (std::size_t i = 0; i < times.size(); ++i)
    for (std::size_t j = i + 1; j < times.size(); ++j) {
      RatioEntry e;
      e.a = times[i].chi;
      e.b = times[j].chi;
      e.ratio = times[i].mean / times[j].mean;
      e.utility = e.ratio / (static_cast<double>(e.b) / static_cast<double>(e.a));
      out.push_back(e);
    }
  return out;
}

/// Runs the engine `runs` times per chi, sequentially, timing each full
/// computation (parsing excluded).
inline BenchRecord run_bench(const Network& net, const std::string& name,
                             std::vector<std::uint64_t> chis, unsigned runs,
                             const ReliabilityOptions& opts = {}) {
  if (chis.empty()) throw std::invalid_argument("chi list is empty");
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  std::sort(chis.begin(), chis.end());
  chis.erase(std::unique(chis.begin(), chis.end()), chis.end());
  for (auto chi : chis) plan_divisions(net.arc_count(), chi, opts.max_arcs);

  BenchRecord rec;
  rec.name = name;
  rec.n = net.node_count();
  rec.m = net.arc_count();
  rec.N = solution_space_size(rec.m, opts.max_arcs);
  rec.runs = runs;
  bool first = true;
  double lo = 0.0, hi = 0.0;
  for (auto chi : chis) {
    TimingStats ts;
    ts.chi = chi;
    ts.min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (unsigned r = 0; r < runs; ++r) {
      const ReliabilityReport rep = parallel_reliability(net, chi, opts);
      sum += rep.seconds;
      ts.min = std::min(ts.min, rep.seconds);
      ts.max = std::max(ts.max, rep.seconds);
      if (first) {
        rec.R = lo = hi = rep.total;
        first = false;
      }
      lo = std::min(lo, rep.total);
      hi = std::max(hi, rep.total);
    }
    ts.mean = sum / runs;
    rec.times.push_back(ts);
  }
  rec.R_spread = hi - lo;
  rec.ratios = compute_ratios(rec.times);
  return rec;
}

inline nlohmann::json to_json(const BenchRecord& rec) {
  nlohmann::json j;
  j["name"] = rec.name;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["N"] = rec.N;
  j["R"] = rec.R;
  j["runs"] = rec.runs;
  j["R_spread"] = rec.R_spread;
  j["times"] = nlohmann::json::array();
  for (const auto& t : rec.times)
    j["times"].push_back({{"chi", t.chi}, {"mean", t.mean}, {"min", t.min}, {"max", t.max}});
  j["ratios"] = nlohmann::json::array();
  for (const auto& r : rec.ratios)
    j["ratios"].push_back({{"a", r.a}, {"b", r.b}, {"ratio", r.ratio}, {"utility", r.utility}});
  return j;
}

/// Aligned text table: one header row and one row per network, followed by
/// the ratio and utility-rate block.
inline std::string format_bench_text(const std::vector<BenchRecord>& recs) {
  std::ostringstream os;
  for (const auto& rec : recs) {
    os << std::left << std::setw(16) << "network" << std::right << std::setw(5) << "n"
       << std::setw(5) << "m" << std::setw(14) << "N" << std::setw(15) << "R(G)";
    for (const auto& t : rec.times) os << std::setw(14) << ("T_" + std::to_string(t.chi));
    os << '\n';
    os << std::left << std::setw(16) << rec.name << std::right << std::setw(5) << rec.n
       << std::setw(5) << rec.m << std::setw(14) << rec.N << std::setw(15) << std::fixed
       << std::setprecision(10) << rec.R;
    for (const auto& t : rec.times) os << std::setw(14) << std::setprecision(7) << t.mean;
    os << '\n';
    for (const auto& r : rec.ratios) {
      os << "  T_" << r.a << "/T_" << r.b << " = " << std::setprecision(6) << r.ratio
         << "   utility rate = " << r.utility << '\n';
    }
    os << "  runs = " << rec.runs << ", R spread across chi = " << std::scientific
       << std::setprecision(2) << rec.R_spread << '\n';
    os.unsetf(std::ios::floatfield);
  }
  return os.str();
}

}  // namespace pbat
