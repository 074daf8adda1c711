#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rlpart/approx.hpp"
#include "rlpart/brute.hpp"
#include "rlpart/edge_partization.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/graph.hpp"
#include "rlpart/kernel.hpp"
#include "rlpart/oct.hpp"
#include "rlpart/parallel.hpp"
#include "rlpart/recognition.hpp"
#include "rlpart/vertex_partization.hpp"

using json = nlohmann::ordered_json;
using namespace rlpart;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kUnsupported = 3, kCap = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

json witness_json(const ICPartition& p) {
  return json{{"independent_parts", p.independent_parts}, {"clique_parts", p.clique_parts}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

RLParams params_from(int r, int l) {
  RLParams p{r, l};
  try {
    p.validate();
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
  return p;
}

void require_k(int k) {
  if (k < 0) throw UsageError("-k must be non-negative");
}

struct Common {
  std::string input;
  int r = 2;
  int l = 2;
  int k = 0;
  bool deterministic = true;
};

void log_phase(const Common& c, const std::string& what, const Stopwatch& sw) {
  if (!c.deterministic) std::cerr << "[" << sw.ms() << " ms] " << what << "\n";
}

int cmd_solve(const Common& c, const std::string& mode) {
  require_k(c.k);
  RLParams p = params_from(c.r, c.l);
  Graph g = read_edge_list_file(c.input);
  Stopwatch sw;
  std::optional<DeletionResult> res;
  if (mode == "vertex") {
    if (!(p == RLParams{2, 2} || p == RLParams{2, 1} || p == RLParams{1, 2}))
      throw Unsupported("vertex mode supports (2,2), (2,1) and (1,2)");
    if (p != RLParams{2, 2} && c.k > g.n()) throw UsageError("-k must not exceed n for this (r,l)");
    res = solve_vertex(g, p, c.k);
  } else {
    if (p == RLParams{2, 2}) throw Unsupported("edge (2,2): open problem per source paper");
    if (!(p == RLParams{2, 1} || p == RLParams{1, 2})) throw Unsupported("edge mode supports (2,1) and (1,2)");
    res = solve_edge(g, p, c.k);
  }
  log_phase(c, "solve finished", sw);
  json out;
  out["answer"] = res ? "yes" : "no";
  if (res) {
    out["size"] = res->size;
    if (mode == "vertex")
      out["deleted"] = res->deleted_vertices;
    else
      out["deleted"] = edges_json(res->deleted_edges);
    out["witness"] = witness_json(res->witness);
  } else {
    out["size"] = nullptr;
    out["deleted"] = nullptr;
    out["witness"] = nullptr;
  }
  out["elapsed_ms"] = sw.ms();
  emit(out);
  return res ? kYes : kNo;
}

int cmd_recognize(const Common& c) {
  RLParams p = params_from(c.r, c.l);
  Graph g = read_edge_list_file(c.input);
  Stopwatch sw;
  auto res = recognize_rl(g, p);
  json out;
  out["answer"] = res ? "yes" : "no";
  out["witness"] = res ? witness_json(*res) : json(nullptr);
  out["elapsed_ms"] = sw.ms();
  emit(out);
  return res ? kYes : kNo;
}

int cmd_approx(const Common& c, const std::string& oracle_name, int max_n) {
  require_k(c.k);
  RLParams p = params_from(c.r, c.l);
  if (oracle_name != "exact") throw UsageError("only --oct-oracle exact is available");
  Graph g = read_edge_list_file(c.input);
  if (!(p == RLParams{2, 2} || p == RLParams{2, 1} || p == RLParams{1, 2}))
    throw Unsupported("approximation supports (2,2), (2,1) and (1,2)");
  if (p != RLParams{2, 2} && c.k > g.n()) throw UsageError("-k must not exceed n for this (r,l)");
  ApproxOptions opt;
  opt.max_n = max_n;
  Stopwatch sw;
  auto res = approx_vertex(g, p, c.k, exact_oct_oracle(), opt);
  json out;
  out["answer"] = res ? "yes" : "no";
  if (res) {
    out["size"] = res->result.size;
    out["deleted"] = res->result.deleted_vertices;
    out["witness"] = witness_json(res->result.witness);
    out["obstructions"] = res->obstruction_count;
    out["largest_obstruction"] = res->largest_obstruction;
  } else {
    out["size"] = nullptr;
    out["deleted"] = nullptr;
    out["witness"] = nullptr;
  }
  out["oracle"] = oracle_name;
  out["elapsed_ms"] = sw.ms();
  emit(out);
  return res ? kYes : kNo;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int cmd_kernelize(const Common& c, const std::string& out_dir, bool decide) {
  require_k(c.k);
  Graph g = read_edge_list_file(c.input);
  Stopwatch sw;
  KernelResult kr = build_toct_instances(g, c.k);
  log_phase(c, "instances built", sw);
  std::filesystem::create_directories(out_dir);
  json manifest;
  manifest["k"] = c.k;
  manifest["n"] = g.n();
  manifest["trivially_no"] = kr.trivially_no;
  manifest["approx_solution"] = kr.approx_solution;
  manifest["size_constant_x2"] = static_cast<long long>(kr.size_constant * 2);
  manifest["instance_count"] = kr.instances.size();
  json list = json::array();
  std::optional<bool> any;
  if (decide) any = false;
  for (size_t i = 0; i < kr.instances.size(); ++i) {
    const TOCTInstance& inst = kr.instances[i];
    const KernelInstanceInfo& info = kr.info[i];
    char stem[32];
    std::snprintf(stem, sizeof stem, "instance_%05zu", i);
    write_file(std::filesystem::path(out_dir) / (std::string(stem) + ".g1.el"), serialize_edge_list(inst.g1));
    write_file(std::filesystem::path(out_dir) / (std::string(stem) + ".g2.el"), serialize_edge_list(inst.g2));
    std::string phi;
    for (auto [x, y] : inst.phi) phi += std::to_string(x) + " " + std::to_string(y) + "\n";
    write_file(std::filesystem::path(out_dir) / (std::string(stem) + ".phi"), phi);
    json e;
    e["index"] = i;
    e["stem"] = stem;
    e["g1_vertices"] = inst.g1.n();
    e["g1_edges"] = inst.g1.m();
    e["g2_vertices"] = inst.g2.n();
    e["g2_edges"] = inst.g2.m();
    e["terminals"] = info.terminals;
    e["v_c"] = info.v_c;
    e["v_i"] = info.v_i;
    e["z1"] = info.z1;
    e["z2"] = info.z2;
    e["size_bound"] = info.size_bound;
    if (decide) {
      bool yes = toct_decide_brute(inst);
      e["decision"] = yes ? "yes" : "no";
      if (yes) any = true;
    }
    list.push_back(std::move(e));
  }
  manifest["instances"] = std::move(list);
  write_file(std::filesystem::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  json out;
  out["out"] = out_dir;
  out["instance_count"] = kr.instances.size();
  out["trivially_no"] = kr.trivially_no;
  if (decide) out["answer"] = *any ? "yes" : "no";
  out["elapsed_ms"] = sw.ms();
  emit(out);
  if (decide) return *any ? kYes : kNo;
  return kYes;
}

int cmd_gen(const Common& c, int n, double p, int plant, const std::string& plant_mode, std::uint64_t seed,
            const std::string& out_prefix) {
  if (n < 0) throw UsageError("--n must be non-negative");
  if (plant < 0) throw UsageError("--plant must be non-negative");
  if (p < 0 || p > 1) throw UsageError("--p must lie in [0,1]");
  RLParams params = params_from(c.r, c.l);
  Stopwatch sw;
  PlantedGraph pg = gen_rl_graph(seed, n, params, p);
  NoisyGraph noisy = plant_mode == "edge" ? plant_edge_noise(pg, seed + 1, plant) : plant_vertex_noise(pg.graph, seed + 1, plant);
  json side;
  side["seed"] = seed;
  side["generator"] = kGeneratorName;
  side["params"] = {{"n", n}, {"r", params.r}, {"l", params.l}, {"p_times_1000", static_cast<long long>(p * 1000 + 0.5)}};
  side["plant_mode"] = plant_mode;
  side["planted_k"] = noisy.planted_k;
  if (plant_mode == "edge")
    side["planted_edges"] = edges_json(noisy.planted_edges);
  else
    side["planted_vertices"] = noisy.planted_vertices;
  write_file(out_prefix + ".el", serialize_edge_list(noisy.graph));
  write_file(out_prefix + ".json", side.dump(2) + "\n");
  json out = side;
  out["files"] = {out_prefix + ".el", out_prefix + ".json"};
  out["elapsed_ms"] = sw.ms();
  emit(out);
  return kYes;
}

int cmd_oracle(const Common& c, const std::string& what, int max_n) {
  Graph g = read_edge_list_file(c.input);
  Stopwatch sw;
  json out;
  out["oracle"] = what;
  if (what == "vertex") {
    auto a = brute::brute_min_vertex_del(g, params_from(c.r, c.l), max_n);
    out["size"] = a.size;
    out["deleted"] = a.set;
  } else if (what == "edge") {
    auto a = brute::brute_min_edge_del(g, params_from(c.r, c.l));
    out["size"] = a.size;
    out["deleted"] = edges_json(a.set);
  } else if (what == "oct") {
    out["size"] = brute::brute_oct(g, max_n);
  } else if (what == "eoct") {
    out["size"] = brute::brute_eoct(g);
  } else if (what == "recognize") {
    auto p = brute::brute_recognize(g, params_from(c.r, c.l), max_n);
    out["answer"] = p ? "yes" : "no";
    out["witness"] = p ? witness_json(*p) : json(nullptr);
  } else {
    throw UsageError("unknown oracle " + what);
  }
  out["elapsed_ms"] = sw.ms();
  emit(out);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  par::configure_from_env();
  CLI::App app{"Vertex and edge (r,l)-partization solvers"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub, bool with_k, bool with_input = true) {
    if (with_input) sub->add_option("--input", c.input, "edge list file")->required()->check(CLI::ExistingFile);
    sub->add_option("--r", c.r, "number of independent sets");
    sub->add_option("--l", c.l, "number of cliques");
    if (with_k) sub->add_option("-k", c.k, "deletion budget")->required();
    sub->add_flag("--deterministic,!--no-deterministic", c.deterministic,
                  "on by default; off prints phase timings to stderr");
  };

  std::string mode = "vertex", oracle = "exact", out_dir, plant_mode = "vertex", out_prefix, what = "vertex";
  int max_n = 14, oracle_max_n = 10, gen_n = 12, plant = 0;
  double p = 0.3;
  std::uint64_t seed = 1;
  bool decide = false;

  auto* solve = app.add_subcommand("solve", "exact minimum deletion");
  add_common(solve, true);
  solve->add_option("--mode", mode)->check(CLI::IsMember({"vertex", "edge"}));
  solve->add_option("--oct-oracle", oracle)->check(CLI::IsMember({"exact"}));

  auto* recognize = app.add_subcommand("recognize", "decide whether the graph is an (r,l)-graph");
  add_common(recognize, false);

  auto* approx = app.add_subcommand("approx", "approximate vertex deletion");
  add_common(approx, true);
  approx->add_option("--oct-oracle", oracle)->check(CLI::IsMember({"exact"}));
  approx->add_option("--max-n", max_n, "largest input accepted by the guess loop");

  auto* kernelize = app.add_subcommand("kernelize", "emit twin OCT instances for vertex (2,2)");
  add_common(kernelize, true);
  kernelize->add_option("--out", out_dir)->required();
  kernelize->add_flag("--decide", decide, "solve every instance by brute force");

  auto* gen = app.add_subcommand("gen", "planted instance generator");
  add_common(gen, false, false);
  gen->add_option("--n", gen_n);
  gen->add_option("--p", p, "cross edge probability");
  gen->add_option("--plant", plant, "noise budget");
  gen->add_option("--plant-mode", plant_mode)->check(CLI::IsMember({"vertex", "edge"}));
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_prefix, "output prefix; writes PREFIX.el and PREFIX.json")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference answers");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--what", what)->check(CLI::IsMember({"vertex", "edge", "oct", "eoct", "recognize"}));
  oracle_cmd->add_option("--max-n", oracle_max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(c, mode);
    if (*recognize) return cmd_recognize(c);
    if (*approx) return cmd_approx(c, oracle, max_n);
    if (*kernelize) return cmd_kernelize(c, out_dir, decide);
    if (*gen) return cmd_gen(c, gen_n, p, plant, plant_mode, seed, out_prefix);
    if (*oracle_cmd) return cmd_oracle(c, what, oracle_max_n);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    emit(json{{"error", "cap_exceeded"}, {"cap", e.cap()}});
    return kCap;
  }
  return kUsage;
}
