// Command-line front end: solve, check, classify, gen, bench.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sf/dispatch.hpp"
#include "sf/harness.hpp"

namespace {

constexpr int kSolved = 0, kError = 1, kInfeasible = 2, kUnsupported = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sf::SolverError(sf::ErrorKind::contract_violation, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

sf::Instance load(const std::string& path) {
  sf::Parsed p = sf::parse_instance(slurp(path));
  for (const auto& w : p.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return std::move(p.instance);
}

std::string vertices(const std::vector<sf::Vertex>& vs) {
  std::string out;
  for (sf::Vertex v : vs) out += " " + std::to_string(v + 1);
  return out;
}

int run_solve(const std::string& file, const std::string& route, const sf::Limits& limits, bool emit) {
  const sf::Instance inst = load(file);
  try {
    const sf::Routed r = sf::solve(inst, limits, route);
    std::cout << "route " << r.route << "\n";
    if (!r.result.feasible) {
      std::cout << "INFEASIBLE\n";
      return kInfeasible;
    }
    std::cout << "value " << r.result.value << "\n";
    if (emit) std::cout << sf::write_certificate(*r.result.certificate);
    return kSolved;
  } catch (const sf::SolverError& e) {
    if (e.kind() != sf::ErrorKind::unsupported) throw;
    std::cout << "UNSUPPORTED " << e.what() << "\n";
    return kUnsupported;
  }
}

int run_check(const std::string& file, const std::string& cert_file) {
  const sf::Instance inst = load(file);
  const sf::ForestCertificate cert = sf::parse_certificate(slurp(cert_file), inst.num_vertices());
  if (!sf::validate_solution(inst, cert)) {
    std::cout << "invalid\n";
    return kError;
  }
  std::cout << "valid " << cert.size() << "\n";
  return kSolved;
}

int run_classify(const std::string& file, const sf::Limits& limits) {
  const sf::Instance inst = load(file);
  const sf::ClassReport r = sf::classify(inst.graph, limits);
  auto flag = [](const char* name, bool v) { std::cout << name << " " << (v ? "true" : "false") << "\n"; };
  auto freeness = [](const char* name, const std::optional<sf::Embedding>& e) {
    std::cout << name << " " << (e ? "false witness" + vertices(e->vertex_map) : "true") << "\n";
  };
  flag("max-degree-2", r.max_degree_2);
  flag("forest", r.forest);
  freeness("p9-free", r.p9);
  freeness("s114-free", r.s114);
  freeness("2k13-free", r.two_claws);
  freeness("2k13+p3-free", r.two_claws_p3);
  freeness("2p4+p3-free", r.two_p4_p3);
  std::cout << "vertex-cover " << (r.cover ? std::to_string(r.cover->size()) + vertices(*r.cover)
                                          : "> " + std::to_string(limits.vertex_cover))
            << "\n";
  std::cout << "2-deletion-set " << (r.deletion_set ? std::to_string(r.deletion_set->size()) + vertices(*r.deletion_set)
                                                    : "> 2")
            << "\n";
  for (const auto& [name, depth] : r.peel)
    std::cout << "peel " << name << " " << (depth ? std::to_string(*depth) : "> " + std::to_string(limits.peel_depth))
              << "\n";
  return kSolved;
}

int run_gen(sf::GenSpec spec, const std::string& pattern, const std::string& out_file) {
  if (!pattern.empty()) spec.pattern = sf::parse_pattern(pattern);
  const sf::Generated g = sf::generate(spec);
  std::ostringstream text;
  text << "# gen " << sf::gen_kind_name(spec.kind) << " n=" << spec.n << " seed=" << spec.seed << "\n";
  if (!g.witness.cover.empty()) text << "# cover" << vertices(g.witness.cover) << "\n";
  if (!g.witness.deletion_set.empty()) text << "# deletion-set" << vertices(g.witness.deletion_set) << "\n";
  if (g.witness.apex != sf::kNoVertex) text << "# apex " << g.witness.apex + 1 << "\n";
  text << sf::write_instance(g.instance);
  if (out_file.empty() || out_file == "-") {
    std::cout << text.str();
  } else {
    std::ofstream out(out_file);
    if (!out) throw sf::SolverError(sf::ErrorKind::contract_violation, "cannot write '" + out_file + "'");
    out << text.str();
  }
  return kSolved;
}

std::vector<std::pair<std::string, sf::GenSpec>> suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  std::vector<std::pair<std::string, sf::GenSpec>> out;
  for (std::size_t i = 0; i < count; ++i) {
    sf::GenSpec s;
    s.seed = seed + i;
    s.pair_count = 2 + i % 3;
    if (name == "small") {
      static const sf::GenKind kinds[] = {sf::GenKind::planted_cover, sf::GenKind::planted_deletion_set,
                                          sf::GenKind::fan,           sf::GenKind::cycle_path_union,
                                          sf::GenKind::h_subgraph_free, sf::GenKind::tree_depth3};
      s.kind = kinds[i % 6];
      s.n = 9 + i % 5;
      s.param = s.kind == sf::GenKind::planted_cover ? 3 : 0;
      if (s.kind == sf::GenKind::h_subgraph_free) s.pattern = sf::Pattern::path(7);
    } else if (name == "planted") {
      s.kind = i % 2 == 0 ? sf::GenKind::planted_cover : sf::GenKind::planted_deletion_set;
      s.n = 30 + 5 * (i % 5);
      s.param = s.kind == sf::GenKind::planted_cover ? 3 + i % 3 : 2;
      s.edge_prob = 0.25;
    } else {
      throw sf::SolverError(sf::ErrorKind::contract_violation, "unknown suite '" + name + "'");
    }
    char id[64];
    std::snprintf(id, sizeof id, "%s-%03zu-%s", name.c_str(), i, sf::gen_kind_name(s.kind).c_str());
    out.emplace_back(id, std::move(s));
  }
  return out;
}

int run_bench(const std::string& name, std::uint64_t seed, std::size_t count, bool timing, const sf::Limits& limits) {
  std::cout << "instance,route,value,wall_ms\n";
  for (const auto& [id, spec] : suite(name, seed, count)) {
    const sf::Instance inst = sf::generate(spec).instance;
    const auto t0 = std::chrono::steady_clock::now();
    std::string route, value;
    try {
      const sf::Routed r = sf::solve(inst, limits);
      route = r.route;
      value = r.result.feasible ? std::to_string(r.result.value) : "INFEASIBLE";
    } catch (const sf::SolverError& e) {
      if (e.kind() != sf::ErrorKind::unsupported) throw;
      route = "none";
      value = "UNSUPPORTED";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", ms);
    std::cout << id << "," << route << "," << value << "," << (timing ? wall : "-") << "\n";
  }
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Steiner Forest solver"};
  app.require_subcommand(1);
  sf::Limits limits;
  bool serial = false;
  app.add_flag("--serial", serial, "Run every kernel on one thread");

  std::string file, cert_file, route = "auto";
  bool emit = false;
  auto* solve = app.add_subcommand("solve", "Solve an SFP instance");
  solve->add_option("file", file, "Instance file")->required();
  std::vector<std::string> routes = sf::route_names();
  routes.insert(routes.begin(), "auto");
  solve->add_option("--route", route, "Route to use")->check(CLI::IsMember(routes));
  solve->add_option("--guard-vc", limits.vertex_cover, "Largest vertex cover tried by the cover route");
  solve->add_option("--guard-edges", limits.oracle_edges, "Largest edge count for the subset oracle");
  solve->add_flag("--emit-certificate", emit, "Print the forest as E lines");

  auto* check = app.add_subcommand("check", "Validate a certificate against an instance");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("certificate", cert_file, "Certificate file")->required();

  auto* classify = app.add_subcommand("classify", "Report class membership with witnesses");
  classify->add_option("file", file, "Instance file")->required();
  classify->add_option("--guard-vc", limits.vertex_cover, "Largest vertex cover searched");

  sf::GenSpec spec;
  std::string kind = "cover", pattern, out_file;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind, "cover|deletion-set|fan|cycle-path|h-free|tree-depth3");
  gen->add_option("--n", spec.n, "Vertex count")->required();
  gen->add_option("--seed", spec.seed, "Seed")->required();
  gen->add_option("--p", spec.edge_prob, "Edge probability");
  gen->add_option("--pairs", spec.pair_count, "Pair count");
  gen->add_option("--param", spec.param, "Cover size or component bound");
  gen->add_option("--pattern", pattern, "Forbidden pattern for h-free, e.g. P9 or 2K13+P3");
  gen->add_option("-o", out_file, "Output file (stdout if omitted)");

  std::string suite_name = "small";
  std::uint64_t seed = 1;
  std::size_t count = 24;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Solve a generated suite and print CSV");
  bench->add_option("--suite", suite_name, "small|planted")->check(CLI::IsMember({"small", "planted"}));
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--count", count, "Instances in the suite");
  bench->add_flag("--no-timing", no_timing, "Print '-' instead of wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kSolved : kError;
  }
  if (serial) limits.exec = sf::Exec::serial;
  try {
    if (*solve) return run_solve(file, route, limits, emit);
    if (*check) return run_check(file, cert_file);
    if (*classify) return run_classify(file, limits);
    if (*gen) {
      spec.kind = sf::parse_gen_kind(kind);
      return run_gen(spec, pattern, out_file);
    }
    if (*bench) return run_bench(suite_name, seed, count, !no_timing, limits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
