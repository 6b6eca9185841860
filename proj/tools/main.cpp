// Command line front end: ring inspection, graph export, and the
// theorem-verification suite.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ntotal/graph.hpp"
#include "ntotal/ideal.hpp"
#include "ntotal/ring.hpp"
#include "ntotal/theorems.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

unsigned parse_exponent(const std::string& token) {
  const auto text = trim(token);
  if (text.empty() || text.size() > 7 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        "invalid exponent '" + text + "'");
  const auto value = std::stoul(text);
  if (value < 1 || value > 1000000)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        "exponent out of range: " + text);
  return static_cast<unsigned>(value);
}

// "3", "1,2,5", or "1..6"
std::vector<unsigned> parse_exponent_range(const std::string& text) {
  std::vector<unsigned> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_exponent(text.substr(0, dots));
    const auto hi = parse_exponent(text.substr(dots + 2));
    if (lo > hi)
      throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                          "empty exponent range: " + text);
    for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  for (const auto& token : split(text, ','))
    out.push_back(parse_exponent(token));
  return out;
}

std::size_t parse_cap(const std::string& value, const std::string& key) {
  if (value.empty() || value.size() > 12 ||
      value.find_first_not_of("0123456789") != std::string::npos)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        "invalid value for " + key + ": '" + value + "'");
  const auto parsed = std::stoull(value);
  if (parsed == 0)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        key + " must be positive");
  return static_cast<std::size_t>(parsed);
}

struct VerifyFile {
  std::vector<std::string> rings;
  std::optional<std::string> exponents;
  std::optional<std::size_t> generator_cap;
  std::optional<std::size_t> vertex_cap;
};

VerifyFile read_verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        "cannot open config file: " + path);
  VerifyFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ntotal::Error(
          ntotal::ErrorCode::InvalidArgument,
          "config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key == "ring")
      out.rings.push_back(value);
    else if (key == "n")
      out.exponents = value;
    else if (key == "cap_generators")
      out.generator_cap = parse_cap(value, key);
    else if (key == "cap_vertices")
      out.vertex_cap = parse_cap(value, key);
    else
      throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                          "config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                        "cannot write to " + path.string());
  out << payload;
}

int run_ring_info(const std::string& spec, const std::string& format,
                  std::size_t cap) {
  const auto ring = ntotal::parse_ring(spec, {cap});
  const auto profile = ntotal::zero_divisor_profile(ring);
  std::cout << (format == "json" ? ntotal::profile_to_json(profile)
                                 : ntotal::profile_to_text(profile));
  return 0;
}

int run_graph(const std::string& spec, unsigned n, const std::string& selector,
              const std::string& format, const std::string& out_path,
              std::size_t cap) {
  const auto ring = ntotal::parse_ring(spec, {cap});
  const auto profile = ntotal::zero_divisor_profile(ring);
  const auto which = selector == "reg"  ? ntotal::VertexSelector::Reg
                     : selector == "zd" ? ntotal::VertexSelector::ZeroDivisors
                                        : ntotal::VertexSelector::All;
  const auto graph = ntotal::build_graph(profile, n, which);
  const auto payload = format == "json"  ? ntotal::to_json(graph)
                       : format == "csv" ? ntotal::to_csv(graph)
                                         : ntotal::to_dot(graph);
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
  return 0;
}

int run_verify(const std::string& rings_text, const std::string& config_path,
               const std::string& preset, const std::string& n_flag,
               const std::string& out_dir, std::size_t cap_generators,
               std::size_t cap_vertices) {
  std::vector<ntotal::RingSpec> specs;
  std::string n_text = "1..6";
  ntotal::SuiteOptions options;

  if (!config_path.empty()) {
    const auto file = read_verify_file(config_path);
    if (file.rings.empty())
      throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                          "config file lists no rings");
    for (const auto& text : file.rings)
      specs.push_back(ntotal::parse_ring_spec(text));
    if (file.exponents) n_text = *file.exponents;
    if (file.generator_cap) options.generator_cap = *file.generator_cap;
    if (file.vertex_cap) options.vertex_cap = *file.vertex_cap;
  } else if (!rings_text.empty()) {
    for (const auto& token : split(rings_text, ',')) {
      const auto text = trim(token);
      if (!text.empty()) specs.push_back(ntotal::parse_ring_spec(text));
    }
    if (specs.empty())
      throw ntotal::Error(ntotal::ErrorCode::InvalidArgument,
                          "--rings lists no rings");
  } else if (preset == "figures") {
    specs = ntotal::figure_family();
  } else {
    specs = ntotal::curated_family();
  }

  if (!n_flag.empty()) n_text = n_flag;
  if (cap_generators != 0) options.generator_cap = cap_generators;
  if (cap_vertices != 0) options.vertex_cap = cap_vertices;

  const auto exponents = parse_exponent_range(n_text);
  const auto result = ntotal::run_suite(specs, exponents, options);

  const auto table = ntotal::reports_to_table(result.reports);
  std::ostringstream summary;
  summary << "checks: " << result.reports.size() << "  pass: " << result.passed
          << "  fail: " << result.failed
          << "  not-applicable: " << result.not_applicable << "\n";
  std::cout << table << summary.str();

  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "report.txt", table + summary.str());
    write_file(dir / "report.json", ntotal::suite_to_json(result));
    std::cout << "reports written to " << dir.string() << "\n";
  }
  return result.failed == 0 ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-total graphs of finite commutative rings"};
  app.require_subcommand(1);

  std::string info_spec;
  std::string info_format = "text";
  std::size_t info_cap = ntotal::kDefaultVertexCap;
  auto* info = app.add_subcommand(
      "ring-info", "Print the zero-divisor structure of a ring");
  info->add_option("spec", info_spec,
                   "ring spec, e.g. \"Z12\", \"GF(2)[x]/(x^3+x+1)\", "
                   "\"Z2 x Z4\"")
      ->required();
  info->add_option("--format", info_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  info->add_option("--cap-vertices", info_cap,
                   "largest ring cardinality to accept");

  std::string graph_spec;
  std::string graph_selector = "all";
  std::string graph_format = "dot";
  std::string graph_out;
  unsigned graph_n = 1;
  std::size_t graph_cap = ntotal::kDefaultVertexCap;
  auto* graph_cmd = app.add_subcommand(
      "graph", "Emit an n-total graph in dot, json, or csv form");
  graph_cmd->add_option("spec", graph_spec, "ring spec")->required();
  graph_cmd->add_option("--n", graph_n, "exponent n")
      ->required()
      ->check(CLI::PositiveNumber);
  graph_cmd
      ->add_option("--selector", graph_selector,
                   "vertex set: all, reg, or zd")
      ->check(CLI::IsMember({"all", "reg", "zd"}));
  graph_cmd->add_option("--format", graph_format, "dot, json, or csv")
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  graph_cmd->add_option("--out", graph_out,
                        "write to this file instead of stdout");
  graph_cmd->add_option("--cap-vertices", graph_cap,
                        "largest ring cardinality to accept");

  std::string verify_rings;
  std::string verify_config;
  std::string verify_preset;
  std::string verify_n;
  std::string verify_out;
  std::size_t verify_cap_g = 0;
  std::size_t verify_cap_v = 0;
  auto* verify = app.add_subcommand(
      "verify", "Check the structure theorems against computed graphs");
  auto* rings_opt =
      verify->add_option("--rings", verify_rings, "comma-separated ring specs");
  auto* config_opt = verify->add_option(
      "--config", verify_config, "config file with ring / n / cap lines");
  auto* preset_opt =
      verify->add_option("--preset", verify_preset, "curated or figures")
          ->check(CLI::IsMember({"curated", "figures"}));
  rings_opt->excludes(config_opt)->excludes(preset_opt);
  config_opt->excludes(preset_opt);
  verify->add_option("--n", verify_n,
                     "exponent list or range, e.g. 2 or 1,3,5 or 1..6");
  verify->add_option("--out", verify_out,
                     "directory for report.txt and report.json");
  verify
      ->add_option("--cap-generators", verify_cap_g,
                   "generating-set search cap")
      ->check(CLI::PositiveNumber);
  verify
      ->add_option("--cap-vertices", verify_cap_v,
                   "largest ring cardinality to accept")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (*info) return run_ring_info(info_spec, info_format, info_cap);
    if (*graph_cmd)
      return run_graph(graph_spec, graph_n, graph_selector, graph_format,
                       graph_out, graph_cap);
    return run_verify(verify_rings, verify_config, verify_preset, verify_n,
                      verify_out, verify_cap_g, verify_cap_v);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const ntotal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ntotal::ErrorCode::CardinalityCap ? kExitCap
                                                         : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
