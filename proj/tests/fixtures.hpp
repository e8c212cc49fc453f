#pragma once

// Frozen reference data for the five-node example network and the bridge.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "pbat/network.hpp"

namespace pbat::fixtures {

inline Network figure1() {
  return parse_network(
      "nodes 5\nsource 1\nsink 4\narcs 6\n"
      "1 2 0.87\n1 3 0.85\n2 3 0.95\n3 5 0.88\n3 4 0.89\n5 4 0.99\n");
}

/// Same topology, reliabilities in the listed order 0.99 .. 0.87.
inline Network figure1_table1_order() {
  return parse_network(
      "nodes 5\nsource 1\nsink 4\narcs 6\n"
      "1 2 0.99\n1 3 0.89\n2 3 0.88\n3 5 0.95\n3 4 0.85\n5 4 0.87\n");
}

inline Network bridge(double p = 0.9) {
  return parse_network("nodes 4\nsource 1\nsink 4\nundirected\narcs 5\n"
                       "1 2 0.9\n1 3 0.9\n2 3 0.9\n2 4 0.9\n3 4 0.9\n")
      .with_uniform_reliability(p);
}

inline Network bridge_directed(double p = 0.9) {
  return parse_network("nodes 4\nsource 1\nsink 4\narcs 6\n"
                       "1 2 0.9\n1 3 0.9\n2 3 0.9\n3 2 0.9\n2 4 0.9\n3 4 0.9\n")
      .with_uniform_reliability(p);
}

inline double bridge_polynomial(double p) {
  return 2 * p * p + 2 * std::pow(p, 3) - 5 * std::pow(p, 4) + 2 * std::pow(p, 5);
}

inline constexpr double kFigure1Reliability = 0.960175722;

/// The 64 six-coordinate vectors in backward BAT order, i = 1..64.
inline const std::array<std::string, 64> kTable2 = {
    "(0, 0, 0, 0, 0, 0)",
    "(0, 0, 0, 0, 0, 1)",
    "(0, 0, 0, 0, 1, 0)",
    "(0, 0, 0, 0, 1, 1)",
    "(0, 0, 0, 1, 0, 0)",
    "(0, 0, 0, 1, 0, 1)",
    "(0, 0, 0, 1, 1, 0)",
    "(0, 0, 0, 1, 1, 1)",
    "(0, 0, 1, 0, 0, 0)",
    "(0, 0, 1, 0, 0, 1)",
    "(0, 0, 1, 0, 1, 0)",
    "(0, 0, 1, 0, 1, 1)",
    "(0, 0, 1, 1, 0, 0)",
    "(0, 0, 1, 1, 0, 1)",
    "(0, 0, 1, 1, 1, 0)",
    "(0, 0, 1, 1, 1, 1)",
    "(0, 1, 0, 0, 0, 0)",
    "(0, 1, 0, 0, 0, 1)",
    "(0, 1, 0, 0, 1, 0)",
    "(0, 1, 0, 0, 1, 1)",
    "(0, 1, 0, 1, 0, 0)",
    "(0, 1, 0, 1, 0, 1)",
    "(0, 1, 0, 1, 1, 0)",
    "(0, 1, 0, 1, 1, 1)",
    "(0, 1, 1, 0, 0, 0)",
    "(0, 1, 1, 0, 0, 1)",
    "(0, 1, 1, 0, 1, 0)",
    "(0, 1, 1, 0, 1, 1)",
    "(0, 1, 1, 1, 0, 0)",
    "(0, 1, 1, 1, 0, 1)",
    "(0, 1, 1, 1, 1, 0)",
    "(0, 1, 1, 1, 1, 1)",
    "(1, 0, 0, 0, 0, 0)",
    "(1, 0, 0, 0, 0, 1)",
    "(1, 0, 0, 0, 1, 0)",
    "(1, 0, 0, 0, 1, 1)",
    "(1, 0, 0, 1, 0, 0)",
    "(1, 0, 0, 1, 0, 1)",
    "(1, 0, 0, 1, 1, 0)",
    "(1, 0, 0, 1, 1, 1)",
    "(1, 0, 1, 0, 0, 0)",
    "(1, 0, 1, 0, 0, 1)",
    "(1, 0, 1, 0, 1, 0)",
    "(1, 0, 1, 0, 1, 1)",
    "(1, 0, 1, 1, 0, 0)",
    "(1, 0, 1, 1, 0, 1)",
    "(1, 0, 1, 1, 1, 0)",
    "(1, 0, 1, 1, 1, 1)",
    "(1, 1, 0, 0, 0, 0)",
    "(1, 1, 0, 0, 0, 1)",
    "(1, 1, 0, 0, 1, 0)",
    "(1, 1, 0, 0, 1, 1)",
    "(1, 1, 0, 1, 0, 0)",
    "(1, 1, 0, 1, 0, 1)",
    "(1, 1, 0, 1, 1, 0)",
    "(1, 1, 0, 1, 1, 1)",
    "(1, 1, 1, 0, 0, 0)",
    "(1, 1, 1, 0, 0, 1)",
    "(1, 1, 1, 0, 1, 0)",
    "(1, 1, 1, 0, 1, 1)",
    "(1, 1, 1, 1, 0, 0)",
    "(1, 1, 1, 1, 0, 1)",
    "(1, 1, 1, 1, 1, 0)",
    "(1, 1, 1, 1, 1, 1)"
};

/// Nonzero Pr(X) entries of the chi = 4 worked example: (index, value),
/// printed to five significant digits.
inline constexpr std::array<std::pair<std::uint64_t, double>, 25> kTable4 = {{
    {19, 5.9007E-06}, {20, 5.8417E-04}, {22, 5.2947E-04}, {23, 4.3272E-05}, {24, 4.2839E-03},
    {27, 1.1211E-04}, {28, 1.1099E-02}, {30, 1.0060E-02}, {31, 8.2216E-04}, {32, 8.1394E-02},
    {43, 1.3241E-04}, {44, 1.3108E-02}, {46, 1.1881E-02}, {47, 9.7097E-04}, {48, 9.6126E-02},
    {51, 3.9489E-05}, {52, 3.9094E-03}, {54, 3.5434E-03}, {55, 2.8959E-04}, {56, 2.8669E-02},
    {59, 7.5030E-04}, {60, 7.4279E-02}, {62, 6.7324E-02}, {63, 5.5022E-03}, {64, 5.4472E-01},
}};

/// Division partials of the worked example (SUM row), four significant digits.
inline constexpr std::array<double, 4> kTable4Partials = {0.0, 1.0893E-01, 1.2222E-01, 7.2902E-01};

/// |got - want| within half a unit in the `digits`-th significant digit of want.
inline bool same_significant(double got, double want, int digits) {
  if (want == 0.0) return got == 0.0;
  const double exponent = std::floor(std::log10(std::abs(want)));
  return std::abs(got - want) <= 0.5 * std::pow(10.0, exponent - (digits - 1));
}

}  // namespace pbat::fixtures
