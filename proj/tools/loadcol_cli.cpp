// Command-line front end. Everything goes through the shared C API; the
// only other dependencies are the vendored argument parser and JSON reader.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loadcol.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { lc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct OwnedGraph {
  lc_graph* g = nullptr;
  ~OwnedGraph() { lc_graph_free(g); }
};

int status_exit(lc_status st, const std::string& err) {
  if (!err.empty()) std::cerr << "error: " << err << "\n";
  switch (st) {
    case LC_OK: return kExitYes;
    case LC_EPARSE:
    case LC_EIO: return kExitParse;
    case LC_EINVAL: return kExitUsage;
    default: return kExitInternal;
  }
}

int load_graph(const std::string& path, OwnedGraph& g) {
  OwnedString err;
  lc_status st = lc_graph_read_file(path.c_str(), &g.g, &err.s);
  if (st != LC_OK) return status_exit(st, err.str());
  return kExitYes;
}

int verdict_exit(const nlohmann::json& j) {
  std::string v = j.value("verdict", "");
  if (v == "yes" || v == "kernel") return kExitYes;
  if (v == "no") return kExitNo;
  if (v == "budget") return kExitBudget;
  return kExitInternal;
}

void print_human(const nlohmann::json& j) {
  std::cout << "verdict    " << j.value("verdict", "?") << "\n";
  if (j.contains("provenance")) std::cout << "provenance " << j["provenance"].get<std::string>() << "\n";
  if (j.contains("k")) std::cout << "k          " << j["k"] << "\n";
  if (j.contains("k_opt")) std::cout << "k_opt      " << j["k_opt"] << "\n";
  if (j.contains("exact")) std::cout << "exact      " << (j["exact"].get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("coloring")) {
    std::cout << "coloring  ";
    for (const auto& c : j["coloring"]) std::cout << " " << c;
    std::cout << "\n";
  }
  if (j.contains("kernel")) {
    const auto& ker = j["kernel"];
    std::cout << "kernel     n=" << ker["graph"]["n"] << " m=" << ker["graph"]["m"]
              << " c=" << ker["c"] << " k=" << ker["k"] << "\n";
  }
  if (j.contains("trace"))
    std::cout << "reductions " << j["trace"]["steps"].size() << "\n";
}

int emit(const std::string& json_text, bool human) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (human)
    print_human(j);
  else
    std::cout << j.dump() << "\n";
  return verdict_exit(j);
}

int run_manifest(const std::string& path, long long budget, int jobs) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitParse;
  }
  struct Job {
    std::string graph;
    int c = 0, k = 0;
  };
  std::vector<Job> jobs_list;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    Job job;
    if (line.empty() || line[0] == '#') continue;
    if (!(ls >> job.graph >> job.c >> job.k)) {
      std::cerr << "error: manifest line " << lineno << ": expected \"path c k\"\n";
      return kExitParse;
    }
    jobs_list.push_back(job);
  }
  std::vector<std::string> results(jobs_list.size());
  std::vector<int> codes(jobs_list.size(), kExitInternal);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs_list.size(); i = next.fetch_add(1)) {
      const Job& job = jobs_list[i];
      OwnedGraph g;
      OwnedString err, json;
      lc_status st = lc_graph_read_file(job.graph.c_str(), &g.g, &err.s);
      if (st == LC_OK) st = lc_decide(g.g, job.c, job.k, budget, &json.s, &err.s);
      if (st == LC_OK) {
        nlohmann::json j = nlohmann::json::parse(json.str());
        j["graph"] = job.graph;
        results[i] = j.dump();
        codes[i] = verdict_exit(j);
      } else {
        nlohmann::json j{{"graph", job.graph}, {"error", err.str()}};
        results[i] = j.dump();
        codes[i] = status_exit(st, "");
      }
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& r : results) std::cout << r << "\n";
  for (int code : codes)
    if (code >= kExitUsage) return code;
  return kExitYes;
}

std::vector<int> read_coloring_file(const std::string& path, bool& ok) {
  ok = true;
  std::ifstream in(path);
  if (!in) {
    ok = false;
    return {};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<int> colors;
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
      ok = false;
      return {};
    }
    for (const auto& c : j) colors.push_back(c.get<int>());
  } else {
    std::istringstream ts(text);
    int c;
    while (ts >> c) colors.push_back(c);
  }
  return colors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"load coloring: kernelization, exact decision, and approximation"};
  app.require_subcommand(1);

  std::string graph_path, manifest_path, coloring_path, out_path, family, sizes_arg;
  int c = 2, k = 0, n = 0, q = 0, jobs = 1;
  long long budget = 0, seed = 0;
  double p = 0.5, epsilon = 0.0;
  bool human = false;

  auto* cmd_decide = app.add_subcommand("decide", "decide whether a (c,k) coloring exists");
  cmd_decide->add_option("--graph", graph_path, "graph file");
  cmd_decide->add_option("--manifest", manifest_path, "batch file with 'path c k' lines");
  cmd_decide->add_option("--c", c, "number of colors");
  cmd_decide->add_option("--k", k, "edges required per color");
  cmd_decide->add_option("--budget", budget, "exact-search node budget");
  cmd_decide->add_option("--jobs", jobs, "parallel workers for --manifest");
  cmd_decide->add_flag("--human", human, "table output instead of JSON");

  auto* cmd_kernelize = app.add_subcommand("kernelize", "reduce to a kernel or answer Yes");
  cmd_kernelize->add_option("--graph", graph_path)->required();
  cmd_kernelize->add_option("--c", c)->required();
  cmd_kernelize->add_option("--k", k)->required();
  cmd_kernelize->add_flag("--human", human);

  auto* cmd_approx = app.add_subcommand("approx", "approximate the largest feasible k");
  cmd_approx->add_option("--graph", graph_path)->required();
  cmd_approx->add_option("--epsilon", epsilon, "two-color (4+eps) mode");
  cmd_approx->add_option("--c", c, "general constant-ratio mode");
  cmd_approx->add_option("--budget", budget);
  cmd_approx->add_flag("--human", human);

  auto* cmd_exact = app.add_subcommand("exact", "exhaustive decision or max-k search");
  cmd_exact->add_option("--graph", graph_path)->required();
  cmd_exact->add_option("--c", c)->required();
  auto* kopt = cmd_exact->add_option("--k", k, "decide at this k; omit to maximize k");
  cmd_exact->add_option("--budget", budget);
  cmd_exact->add_flag("--human", human);

  auto* cmd_gen = app.add_subcommand("gen", "write a generated graph");
  cmd_gen->add_option("--family", family, "gnp | matching | star_forest | clique")->required();
  cmd_gen->add_option("--out", out_path, "output file (default stdout)");
  cmd_gen->add_option("--seed", seed);
  cmd_gen->add_option("--n", n);
  cmd_gen->add_option("--p", p);
  cmd_gen->add_option("--q", q);
  cmd_gen->add_option("--sizes", sizes_arg, "comma-separated star sizes");

  auto* cmd_verify = app.add_subcommand("verify", "check a coloring certificate");
  cmd_verify->add_option("--graph", graph_path)->required();
  cmd_verify->add_option("--coloring", coloring_path)->required();
  cmd_verify->add_option("--c", c)->required();
  cmd_verify->add_option("--k", k)->required();
  cmd_verify->add_flag("--human", human);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (cmd_decide->parsed()) {
    if (!manifest_path.empty()) return run_manifest(manifest_path, budget, jobs);
    if (graph_path.empty()) {
      std::cerr << "error: decide needs --graph or --manifest\n";
      return kExitUsage;
    }
    OwnedGraph g;
    if (int rc = load_graph(graph_path, g); rc != kExitYes) return rc;
    OwnedString json, err;
    lc_status st = lc_decide(g.g, c, k, budget, &json.s, &err.s);
    if (st != LC_OK) return status_exit(st, err.str());
    return emit(json.str(), human);
  }

  if (cmd_kernelize->parsed()) {
    OwnedGraph g;
    if (int rc = load_graph(graph_path, g); rc != kExitYes) return rc;
    OwnedString json, err;
    lc_status st = lc_kernelize(g.g, c, k, &json.s, &err.s);
    if (st != LC_OK) return status_exit(st, err.str());
    return emit(json.str(), human);
  }

  if (cmd_approx->parsed()) {
    OwnedGraph g;
    if (int rc = load_graph(graph_path, g); rc != kExitYes) return rc;
    OwnedString json, err;
    lc_status st;
    if (epsilon > 0)
      st = lc_approx_two(g.g, epsilon, budget, &json.s, &err.s);
    else
      st = lc_approx_general(g.g, c, budget, &json.s, &err.s);
    if (st != LC_OK) return status_exit(st, err.str());
    return emit(json.str(), human);
  }

  if (cmd_exact->parsed()) {
    OwnedGraph g;
    if (int rc = load_graph(graph_path, g); rc != kExitYes) return rc;
    OwnedString json, err;
    lc_status st;
    if (kopt->count() > 0)
      st = lc_exact(g.g, c, k, budget, &json.s, &err.s);
    else
      st = lc_max_k(g.g, c, budget, &json.s, &err.s);
    if (st != LC_OK) return status_exit(st, err.str());
    return emit(json.str(), human);
  }

  if (cmd_gen->parsed()) {
    OwnedGraph g;
    OwnedString err;
    lc_status st = LC_EINVAL;
    if (family == "gnp") {
      st = lc_gen_gnp(n, p, static_cast<unsigned long long>(seed), &g.g, &err.s);
    } else if (family == "matching") {
      st = lc_gen_matching(q, &g.g, &err.s);
    } else if (family == "clique") {
      st = lc_gen_clique(n, &g.g, &err.s);
    } else if (family == "star_forest") {
      std::vector<int> sizes;
      std::istringstream ss(sizes_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
      st = lc_gen_star_forest(sizes.data(), static_cast<int>(sizes.size()), &g.g, &err.s);
    } else {
      std::cerr << "error: unknown family " << family << "\n";
      return kExitUsage;
    }
    if (st != LC_OK) return status_exit(st, err.str());
    OwnedString text;
    if (lc_graph_serialize(g.g, &text.s) != LC_OK) return kExitInternal;
    if (out_path.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitParse;
      }
      out << text.str();
    }
    return kExitYes;
  }

  if (cmd_verify->parsed()) {
    OwnedGraph g;
    if (int rc = load_graph(graph_path, g); rc != kExitYes) return rc;
    bool ok = false;
    std::vector<int> colors = read_coloring_file(coloring_path, ok);
    if (!ok) {
      std::cerr << "error: cannot read coloring from " << coloring_path << "\n";
      return kExitParse;
    }
    OwnedString json, err;
    lc_status st = lc_verify(g.g, c, k, colors.data(), static_cast<int>(colors.size()),
                             &json.s, &err.s);
    if (st != LC_OK) return status_exit(st, err.str());
    nlohmann::json j = nlohmann::json::parse(json.str());
    if (human)
      print_human(j);
    else
      std::cout << j.dump() << "\n";
    return j.value("valid", false) ? kExitYes : kExitNo;
  }

  return kExitUsage;
}
