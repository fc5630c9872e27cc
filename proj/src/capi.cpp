#include "loadcol.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dimacs.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "json_io.hpp"
#include "pipeline.hpp"

using namespace loadcol;

struct lc_graph {
  Graph g;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

long long effective_budget(long long budget) {
  return budget > 0 ? budget : kDefaultExactBudget;
}

template <typename Fn>
lc_status guarded(char** err, Fn&& fn) {
  try {
    fn();
    return LC_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return LC_EPARSE;
  } catch (const std::invalid_argument& e) {
    set_err(err, e.what());
    return LC_EINVAL;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return LC_EINTERNAL;
  }
}

}  // namespace

extern "C" {

lc_status lc_graph_parse(const char* text, lc_graph** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return LC_EINVAL;
  }
  return guarded(err, [&] { *out = new lc_graph{parse_graph(std::string(text))}; });
}

lc_status lc_graph_read_file(const char* path, lc_graph** out, char** err) {
  if (!path || !out) {
    set_err(err, "null argument");
    return LC_EINVAL;
  }
  std::ifstream in(path);
  if (!in) {
    set_err(err, std::string("cannot open ") + path);
    return LC_EIO;
  }
  return guarded(err, [&] { *out = new lc_graph{parse_graph(in)}; });
}

void lc_graph_free(lc_graph* g) { delete g; }

int lc_graph_num_vertices(const lc_graph* g) { return g ? g->g.num_vertices() : 0; }

long long lc_graph_num_edges(const lc_graph* g) {
  return g ? static_cast<long long>(g->g.num_edges()) : 0;
}

lc_status lc_graph_serialize(const lc_graph* g, char** out) {
  if (!g || !out) return LC_EINVAL;
  return guarded(nullptr, [&] { *out = dup_string(serialize_graph(g->g)); });
}

lc_status lc_gen_gnp(int n, double p, unsigned long long seed, lc_graph** out, char** err) {
  if (!out) return LC_EINVAL;
  return guarded(err, [&] { *out = new lc_graph{gen_gnp(n, p, seed)}; });
}

lc_status lc_gen_matching(int q, lc_graph** out, char** err) {
  if (!out) return LC_EINVAL;
  return guarded(err, [&] { *out = new lc_graph{gen_matching(q)}; });
}

lc_status lc_gen_star_forest(const int* leaf_counts, int count, lc_graph** out, char** err) {
  if (!out || (count > 0 && !leaf_counts)) return LC_EINVAL;
  return guarded(err, [&] {
    *out = new lc_graph{gen_star_forest(std::vector<int>(leaf_counts, leaf_counts + count))};
  });
}

lc_status lc_gen_clique(int n, lc_graph** out, char** err) {
  if (!out) return LC_EINVAL;
  return guarded(err, [&] { *out = new lc_graph{gen_clique(n)}; });
}

lc_status lc_decide(const lc_graph* g, int c, int k, long long budget, char** json_out,
                    char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    Instance inst{g->g, c, k};
    Outcome out = decide(inst, effective_budget(budget));
    *json_out = dup_string(outcome_to_json(out, inst).dump());
  });
}

lc_status lc_kernelize(const lc_graph* g, int c, int k, char** json_out, char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    Instance inst{g->g, c, k};
    Outcome out = kernelize(inst);
    *json_out = dup_string(outcome_to_json(out, inst).dump());
  });
}

lc_status lc_exact(const lc_graph* g, int c, int k, long long budget, char** json_out,
                   char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    Instance inst{g->g, c, k};
    if (c < 1 || k < 0) throw std::invalid_argument("lc_exact: need c >= 1 and k >= 0");
    ExactResult r = decide_exact(inst, effective_budget(budget));
    *json_out = dup_string(exact_to_json(r, inst).dump());
  });
}

lc_status lc_max_k(const lc_graph* g, int c, long long budget, char** json_out, char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    if (c < 1) throw std::invalid_argument("lc_max_k: need c >= 1");
    MaxKResult r = max_k_exact(g->g, c, effective_budget(budget));
    *json_out = dup_string(max_k_to_json(r, g->g, c).dump());
  });
}

lc_status lc_approx_general(const lc_graph* g, int c, long long budget, char** json_out,
                            char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    ApproxResult r = approx_general(g->g, c, effective_budget(budget));
    *json_out = dup_string(approx_to_json(r, g->g, c).dump());
  });
}

lc_status lc_approx_two(const lc_graph* g, double epsilon, long long budget, char** json_out,
                        char** err) {
  if (!g || !json_out) return LC_EINVAL;
  return guarded(err, [&] {
    ApproxResult r = approx_two(g->g, epsilon, effective_budget(budget));
    *json_out = dup_string(approx_to_json(r, g->g, 2).dump());
  });
}

lc_status lc_verify(const lc_graph* g, int c, int k, const int* colors, int n, char** json_out,
                    char** err) {
  if (!g || !json_out || (n > 0 && !colors)) return LC_EINVAL;
  return guarded(err, [&] {
    if (n != g->g.num_vertices())
      throw std::invalid_argument("lc_verify: coloring length does not match vertex count");
    Coloring col;
    const auto& ids = g->g.vertices();
    for (int i = 0; i < n; ++i) col[ids[i]] = colors[i];
    CertificateCheck chk = verify_coloring({g->g, c, k}, col);
    *json_out = dup_string(verify_to_json(chk).dump());
  });
}

void lc_string_free(char* s) { std::free(s); }

}  // extern "C"
