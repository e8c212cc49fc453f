#pragma once

// Binary-state network model: arcs, state vectors, validation and the
// plain-text network file format.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbat {

/// Largest arc count representable by the packed state vector and 64-bit
/// vector indices (2^62 still leaves headroom for 1-based arithmetic).
inline constexpr int kHardMaxArcs = 62;
/// Default enumeration cap.
inline constexpr int kDefaultMaxArcs = 40;

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the parser; carries the offending 1-based line number.
class ParseError : public NetworkError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : NetworkError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using NodeId = int;

struct Arc {
  NodeId tail;
  NodeId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// m binary coordinates packed into one word. Coordinate k (1-based) is the
/// state of arc a_k and lives at bit k-1.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int m, std::uint64_t bits = 0) : m_(m), bits_(bits & mask_for(m)) {
    if (m < 0 || m > kHardMaxArcs) throw NetworkError("state vector length out of range");
  }

  static StateVector from_coords(const std::vector<int>& coords) {
    StateVector x(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0 && coords[i] != 1)
        throw NetworkError("state vector coordinate must be 0 or 1");
      x.set(static_cast<int>(i) + 1, coords[i] == 1);
    }
    return x;
  }

  static StateVector all_zero(int m) { return StateVector(m); }
  static StateVector all_one(int m) { return StateVector(m, mask_for(m)); }

  int size() const noexcept { return m_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool operator[](int k) const noexcept { return (bits_ >> (k - 1)) & 1u; }
  void set(int k, bool on) noexcept {
    const std::uint64_t b = std::uint64_t{1} << (k - 1);
    bits_ = on ? (bits_ | b) : (bits_ & ~b);
  }

  StateVector complement() const { return StateVector(m_, ~bits_); }

  std::vector<int> coords() const {
    std::vector<int> out(static_cast<std::size_t>(m_));
    for (int k = 1; k <= m_; ++k) out[static_cast<std::size_t>(k - 1)] = (*this)[k];
    return out;
  }

  /// "(0, 1, 0, 0, 1, 0)"
  std::string to_string() const {
    std::string s = "(";
    for (int k = 1; k <= m_; ++k) {
      if (k > 1) s += ", ";
      s += (*this)[k] ? '1' : '0';
    }
    return s + ")";
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

  static constexpr std::uint64_t mask_for(int m) noexcept {
    return m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  }

 private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const StateVector& x) {
  return os << x.to_string();
}

/// G(V, E, D_b): nodes 1..n, arcs a_1..a_m in list order, per-arc reliability.
/// Immutable once constructed; the constructor enforces the model assumptions.
class Network {
 public:
  Network(int node_count, std::vector<Arc> arcs, NodeId source, NodeId sink,
          std::vector<double> reliabilities, bool undirected = false)
      : n_(node_count),
        arcs_(std::move(arcs)),
        source_(source),
        sink_(sink),
        p_(std::move(reliabilities)),
        undirected_(undirected) {
    if (auto err = validate()) throw NetworkError(*err);
  }

  int node_count() const noexcept { return n_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }
  bool undirected() const noexcept { return undirected_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<double>& reliabilities() const noexcept { return p_; }
  /// Arc a_k, 1-based.
  const Arc& arc(int k) const { return arcs_.at(static_cast<std::size_t>(k - 1)); }

  /// Same topology with every arc reliability replaced by p.
  Network with_uniform_reliability(double p) const {
    return Network(n_, arcs_, source_, sink_, std::vector<double>(arcs_.size(), p), undirected_);
  }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::optional<std::string> validate() const {
    if (n_ < 1) return "node count must be positive";
    if (arcs_.empty()) return "network needs at least one arc";
    if (static_cast<int>(arcs_.size()) > kHardMaxArcs)
      return "arc count exceeds " + std::to_string(kHardMaxArcs);
    auto in_range = [this](NodeId v) { return v >= 1 && v <= n_; };
    if (!in_range(source_)) return "source node out of range";
    if (!in_range(sink_)) return "sink node out of range";
    if (source_ == sink_) return "source and sink must differ";
    if (p_.size() != arcs_.size()) return "one reliability per arc required";
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      const std::string tag = "arc a" + std::to_string(i + 1) + ": ";
      if (!in_range(a.tail) || !in_range(a.head)) return tag + "node id out of range";
      if (a.tail == a.head) return tag + "self-loop";
      if (!(p_[i] >= 0.0 && p_[i] <= 1.0)) return tag + "reliability outside [0,1]";
      for (std::size_t j = 0; j < i; ++j) {
        const Arc& b = arcs_[j];
        bool same = (a == b) || (undirected_ && a.tail == b.head && a.head == b.tail);
        if (same) return tag + "parallel arc duplicates a" + std::to_string(j + 1);
      }
    }
    return std::nullopt;
  }

  int n_;
  std::vector<Arc> arcs_;
  NodeId source_;
  NodeId sink_;
  std::vector<double> p_;
  bool undirected_;
};

/// E(X): 1-based indices of the working arcs in x, ascending.
inline std::vector<int> working_arcs(const Network& net, const StateVector& x) {
  if (x.size() != net.arc_count()) throw NetworkError("state vector length mismatch");
  std::vector<int> out;
  for (int k = 1; k <= x.size(); ++k)
    if (x[k]) out.push_back(k);
  return out;
}

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

inline bool parse_prob(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

/// Reads the text network format:
///
///   nodes <n>
///   source <id>
///   sink <id>
///   [undirected]
///   arcs <m>
///   <tail> <head> <p>      (exactly m lines; order defines a_1..a_m)
///
/// '#' starts a comment that runs to end of line. Blank lines are ignored.
inline Network parse_network(std::istream& in) {
  std::optional<long long> nodes, source, sink, declared_arcs;
  bool undirected = false;
  std::vector<Arc> arcs;
  std::vector<double> probs;
  std::vector<std::size_t> arc_lines;

  std::string raw;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    last_line = line_no;

    auto fail = [line_no](const std::string& msg) -> ParseError { return ParseError(line_no, msg); };

    if (declared_arcs && static_cast<long long>(arcs.size()) < *declared_arcs) {
      if (tok.size() != 3) throw fail("arc line needs '<tail> <head> <p>'");
      long long t = 0, h = 0;
      double p = 0;
      if (!detail::parse_int(tok[0], t) || !detail::parse_int(tok[1], h))
        throw fail("arc endpoints must be integers");
      if (!detail::parse_prob(tok[2], p)) throw fail("malformed probability '" + tok[2] + "'");
      if (t < 1 || t > *nodes || h < 1 || h > *nodes) throw fail("node id out of range");
      if (t == h) throw fail("self-loop on node " + std::to_string(t));
      if (!(p >= 0.0 && p <= 1.0)) throw fail("probability outside [0,1]");
      Arc a{static_cast<NodeId>(t), static_cast<NodeId>(h)};
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        const Arc& b = arcs[j];
        if (a == b || (undirected && a.tail == b.head && a.head == b.tail))
          throw fail("parallel arc duplicates line " + std::to_string(arc_lines[j]));
      }
      arcs.push_back(a);
      probs.push_back(p);
      arc_lines.push_back(line_no);
      continue;
    }

    const std::string& key = tok[0];
    if (key == "undirected") {
      if (tok.size() != 1) throw fail("'undirected' takes no value");
      if (declared_arcs) throw fail("'undirected' must precede 'arcs'");
      undirected = true;
      continue;
    }
    if (key != "nodes" && key != "source" && key != "sink" && key != "arcs")
      throw fail(declared_arcs ? "more arc lines than declared" : "unknown keyword '" + key + "'");
    if (tok.size() != 2) throw fail("'" + key + "' takes exactly one value");
    long long v = 0;
    if (!detail::parse_int(tok[1], v)) throw fail("'" + key + "' value must be an integer");

    if (key == "nodes") {
      if (nodes) throw fail("duplicate 'nodes'");
      if (v < 1) throw fail("node count must be positive");
      nodes = v;
    } else if (key == "source" || key == "sink") {
      if (!nodes) throw fail("'nodes' must come before '" + key + "'");
      auto& slot = key == "source" ? source : sink;
      if (slot) throw fail("duplicate '" + key + "'");
      if (v < 1 || v > *nodes) throw fail(key + " node id out of range");
      slot = v;
      if (source && sink && *source == *sink) throw fail("source and sink must differ");
    } else {
      if (!nodes || !source || !sink) throw fail("'nodes', 'source' and 'sink' must precede 'arcs'");
      if (declared_arcs) throw fail("duplicate 'arcs'");
      if (v < 1) throw fail("arc count must be positive");
      if (v > kHardMaxArcs) throw fail("arc count exceeds " + std::to_string(kHardMaxArcs));
      declared_arcs = v;
    }
  }

  const std::size_t end_line = last_line + 1;
  if (!nodes) throw ParseError(end_line, "missing 'nodes'");
  if (!source) throw ParseError(end_line, "missing 'source'");
  if (!sink) throw ParseError(end_line, "missing 'sink'");
  if (!declared_arcs) throw ParseError(end_line, "missing 'arcs'");
  if (static_cast<long long>(arcs.size()) != *declared_arcs)
    throw ParseError(end_line, "expected " + std::to_string(*declared_arcs) + " arc lines, found " +
                                   std::to_string(arcs.size()));
  return Network(static_cast<int>(*nodes), std::move(arcs), static_cast<NodeId>(*source),
                 static_cast<NodeId>(*sink), std::move(probs), undirected);
}

inline Network parse_network(const std::string& text) {
  std::istringstream in(text);
  return parse_network(in);
}

/// Canonical serializer; parse_network(serialize_network(g)) == g.
inline std::string serialize_network(const Network& net) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "nodes " << net.node_count() << '\n'
     << "source " << net.source() << '\n'
     << "sink " << net.sink() << '\n';
  if (net.undirected()) os << "undirected\n";
  os << "arcs " << net.arc_count() << '\n';
  for (int k = 1; k <= net.arc_count(); ++k) {
    const Arc& a = net.arc(k);
    os << a.tail << ' ' << a.head << ' ' << net.reliabilities()[static_cast<std::size_t>(k - 1)] << '\n';
  }
  return os.str();
}

}  // namespace pbat
