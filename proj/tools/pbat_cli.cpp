// pbat: exact two-terminal reliability by (parallel) binary-addition-tree
// enumeration.
//
//   pbat reliability <file> [--threads 4] [--partials] [--prob 0.9]
//   pbat enumerate (--arcs m | <file>) [--index i] [--mode forward]
//   pbat verify <file>
//   pbat bench <file>... [--threads 1,2,4] [--runs 15] [--output report.json]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbat/pbat.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kLimit = 3 };

struct Common {
  std::optional<double> prob;
  std::optional<double> timeout;
  int max_arcs = pbat::kDefaultMaxArcs;
  std::string format = "text";
};

pbat::Network load(const std::string& path, const Common& c) {
  std::ifstream in(path);
  if (!in) throw pbat::NetworkError("cannot open '" + path + "'");
  try {
    pbat::Network net = pbat::parse_network(in);
    if (c.prob) {
      if (!(*c.prob >= 0.0 && *c.prob <= 1.0)) throw pbat::NetworkError("--prob must lie in [0,1]");
      net = net.with_uniform_reliability(*c.prob);
    }
    return net;
  } catch (const pbat::ParseError& e) {
    throw pbat::NetworkError(path + ": " + e.what());
  }
}

pbat::ReliabilityOptions engine_options(const Common& c) {
  pbat::ReliabilityOptions o;
  o.max_arcs = c.max_arcs;
  if (c.timeout) o.timeout = std::chrono::duration<double>(*c.timeout);
  return o;
}

std::string base_name(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string sci(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*E", digits, v);
  return buf;
}

std::string fixed(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void add_common(CLI::App* sub, Common& c, bool with_timeout = true) {
  sub->add_option("--prob", c.prob, "Override every arc reliability with p");
  if (with_timeout) sub->add_option("--timeout", c.timeout, "Wall-clock budget in seconds");
  sub->add_option("--max-arcs", c.max_arcs, "Refuse networks with more arcs than this")
      ->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

int cmd_reliability(const std::string& file, std::uint64_t chi, bool partials, bool compensated,
                    const Common& c) {
  const pbat::Network net = load(file, c);
  auto opts = engine_options(c);
  if (compensated) opts.summation = pbat::Summation::compensated;
  const pbat::ReliabilityReport rep = pbat::parallel_reliability(net, chi, opts);
  const std::uint64_t N = std::uint64_t{1} << net.arc_count();

  if (c.format == "json") {
    nlohmann::json j;
    j["network"] = base_name(file);
    j["n"] = net.node_count();
    j["m"] = net.arc_count();
    j["N"] = N;
    j["chi"] = rep.chi;
    j["R"] = rep.total;
    j["seconds"] = rep.seconds;
    j["partials"] = nlohmann::json::array();
    for (const auto& d : rep.divisions)
      j["partials"].push_back(
          {{"t", d.t}, {"R", d.reliability}, {"N", d.visited}, {"connected", d.connected}});
    std::cout << j.dump(2) << '\n';
    return kOk;
  }

  std::cout << "network  " << base_name(file) << "  n=" << net.node_count()
            << " m=" << net.arc_count() << " N=" << N << '\n';
  std::cout << "threads  " << rep.chi << '\n';
  std::cout << "R(G)     " << fixed(rep.total);
  if (rep.total > 0 && rep.total < 0.1) std::cout << "  (" << sci(rep.total, 12) << ")";
  std::cout << '\n';
  if (partials) {
    for (const auto& d : rep.divisions)
      std::cout << "  R_" << d.t << " = " << sci(d.reliability) << "  N_" << d.t << " = "
                << d.visited << "  connected = " << d.connected << '\n';
  }
  std::cout << "time     " << sci(rep.seconds, 3) << " s  (" << sci(rep.vectors_per_second(), 3)
            << " vectors/s)\n";
  return kOk;
}

int cmd_enumerate(const std::optional<std::string>& file, std::optional<int> arcs,
                  std::optional<std::uint64_t> index, const std::string& mode_name,
                  const Common& c) {
  std::optional<pbat::Network> net;
  int m = 0;
  if (file) {
    net = load(*file, c);
    m = net->arc_count();
  } else if (arcs) {
    m = *arcs;
  } else {
    std::cerr << "enumerate: give a network file or --arcs\n";
    return kUsage;
  }
  const auto mode = mode_name == "forward" ? pbat::BatMode::forward : pbat::BatMode::backward;
  pbat::solution_space_size(m, c.max_arcs);

  std::optional<pbat::LayeredSearch> search;
  if (net) search.emplace(*net);
  auto row = [&](std::uint64_t i, const pbat::StateVector& x) {
    std::cout << i << '\t' << x.to_string();
    if (net) {
      const bool ok = search->connected(x);
      std::cout << '\t' << (ok ? "connected" : "disconnected");
      if (ok) std::cout << '\t' << sci(pbat::vector_prob(x, net->reliabilities()));
    }
    std::cout << '\n';
  };

  if (index) {
    row(*index, pbat::dec_inv(*index, m, mode));
    return kOk;
  }
  if (m > 16) {
    std::cerr << "enumerate: full dumps are limited to m <= 16 (got " << m << "); use --index\n";
    return kLimit;
  }
  pbat::BatCursor cursor = pbat::bat_first(m, mode);
  std::uint64_t i = 1;
  do row(i++, cursor.current());
  while (cursor.next());
  return kOk;
}

int cmd_verify(const std::string& file, std::optional<std::uint64_t> fault, const Common& c) {
  const pbat::Network net = load(file, c);
  pbat::VerifyOptions vo;
  vo.max_arcs = c.max_arcs;
  vo.inject_fault = fault;
  const pbat::VerifyResult res = pbat::verify_network(net, vo);

  if (c.format == "json") {
    nlohmann::json j;
    j["network"] = base_name(file);
    j["passed"] = res.passed;
    j["serial"] = res.serial;
    j["brute_force"] = res.brute_force;
    j["max_discrepancy"] = res.max_discrepancy;
    j["vectors_checked"] = res.vectors_checked;
    j["parallel"] = nlohmann::json::array();
    for (auto [chi, r] : res.parallel) j["parallel"].push_back({{"chi", chi}, {"R", r}});
    j["failures"] = res.failures;
    if (res.offending_vector) j["offending_vector"] = res.offending_vector->to_string();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "network          " << base_name(file) << '\n'
              << "brute force      " << fixed(res.brute_force, 12) << '\n'
              << "serial           " << fixed(res.serial, 12) << '\n';
    for (auto [chi, r] : res.parallel)
      std::cout << "parallel chi=" << chi << std::string(chi < 10 ? 3 : chi < 100 ? 2 : 1, ' ')
                << fixed(r, 12) << '\n';
    std::cout << "vectors checked  " << res.vectors_checked << " (layered vs depth-first)\n"
              << "max discrepancy  " << sci(res.max_discrepancy, 3) << '\n';
    for (const auto& f : res.failures) std::cout << "FAIL " << f << '\n';
    std::cout << (res.passed ? "PASS" : "FAIL") << '\n';
  }
  return res.passed ? kOk : kVerifyFailed;
}

std::vector<std::uint64_t> parse_chi_list(const std::vector<std::string>& raw) {
  std::vector<std::uint64_t> out;
  for (const auto& piece : raw) {
    std::stringstream ss(piece);
    for (std::string tok; std::getline(ss, tok, ',');) {
      if (tok.empty()) continue;
      std::size_t pos = 0;
      const auto v = std::stoull(tok, &pos);
      if (pos != tok.size()) throw CLI::ValidationError("--threads", "not an integer: " + tok);
      out.push_back(v);
    }
  }
  if (out.empty()) throw CLI::ValidationError("--threads", "thread list is empty");
  return out;
}

int cmd_bench(const std::vector<std::string>& files, const std::vector<std::string>& chi_raw,
              unsigned runs, const std::optional<std::string>& output, const Common& c) {
  const auto chis = parse_chi_list(chi_raw);
  std::vector<pbat::BenchRecord> recs;
  for (const auto& f : files) {
    const pbat::Network net = load(f, c);
    recs.push_back(pbat::run_bench(net, base_name(f), chis, runs, engine_options(c)));
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : recs) j.push_back(pbat::to_json(r));
  if (c.format == "json") std::cout << j.dump(2) << '\n';
  else std::cout << pbat::format_bench_text(recs);
  if (output) {
    std::ofstream out(*output);
    if (!out) throw pbat::NetworkError("cannot write '" + *output + "'");
    out << j.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-terminal network reliability by binary-addition-tree enumeration"};
  app.require_subcommand(1);

  Common common;

  auto* rel = app.add_subcommand("reliability", "Compute R(G) for a network file");
  std::string rel_file;
  std::uint64_t rel_chi = 1;
  bool partials = false, compensated = false;
  rel->add_option("file", rel_file, "Network file")->required();
  rel->add_option("--threads", rel_chi, "Number of equal divisions / threads (power of two)")
      ->capture_default_str();
  rel->add_flag("--partials", partials, "Print per-division partial reliabilities");
  rel->add_flag("--compensated", compensated, "Compensated (Neumaier) accumulation");
  add_common(rel, common);

  auto* en = app.add_subcommand("enumerate", "List state vectors in BAT order");
  std::optional<std::string> en_file;
  std::optional<int> en_arcs;
  std::optional<std::uint64_t> en_index;
  std::string en_mode = "backward";
  en->add_option("file", en_file, "Network file (adds connectivity and Pr(X) columns)");
  en->add_option("--arcs", en_arcs, "Arc count m when no file is given");
  en->add_option("--index", en_index, "Print only the vector at this 1-based index");
  en->add_option("--mode", en_mode, "BAT direction")
      ->check(CLI::IsMember({"backward", "forward"}))
      ->capture_default_str();
  add_common(en, common, false);

  auto* ver = app.add_subcommand("verify", "Cross-check the engine against the oracles");
  std::string ver_file;
  std::optional<std::uint64_t> fault;
  ver->add_option("file", ver_file, "Network file")->required();
  ver->add_option("--inject-fault", fault, "Flip the layered-search verdict at this index")
      ->group("");
  add_common(ver, common, false);

  auto* bench = app.add_subcommand("bench", "Time the engine over a thread sweep");
  std::vector<std::string> bench_files;
  std::vector<std::string> bench_chis{"1,2,4,8"};
  unsigned runs = 15;
  std::optional<std::string> output;
  bench->add_option("files", bench_files, "Network files")->required();
  bench->add_option("--threads", bench_chis, "Comma-separated thread counts")
      ->capture_default_str();
  bench->add_option("--runs", runs, "Runs per thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--output", output, "Write the structured report to this file");
  add_common(bench, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*rel) return cmd_reliability(rel_file, rel_chi, partials, compensated, common);
    if (*en) return cmd_enumerate(en_file, en_arcs, en_index, en_mode, common);
    if (*ver) return cmd_verify(ver_file, fault, common);
    if (*bench) return cmd_bench(bench_files, bench_chis, runs, output, common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const pbat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const pbat::TimeoutError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
