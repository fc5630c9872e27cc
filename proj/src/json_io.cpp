#include "json_io.hpp"

#include "dimacs.hpp"

namespace loadcol {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Kernel: return "kernel";
    case Verdict::Budget: return "budget";
  }
  return "unknown";
}

namespace {

json external_ids(const std::vector<int>& ids) {
  json arr = json::array();
  for (int v : ids) arr.push_back(v + 1);
  return arr;
}

}  // namespace

json graph_to_json(const Graph& g) {
  return json{{"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"dimacs", serialize_graph(g)}};
}

json coloring_to_json(const Graph& g, const Coloring& col) {
  json arr = json::array();
  for (int v : g.vertices()) arr.push_back(col.at(v));
  return arr;
}

json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& ob : trace.steps) {
    json assignment = json::object();
    for (const auto& [u, vu] : ob.assignment)
      assignment[std::to_string(u + 1)] = external_ids(vu);
    steps.push_back(json{{"i", ob.size()},
                         {"v1", external_ids(ob.centers)},
                         {"v2", external_ids(ob.dominated)},
                         {"assignment", std::move(assignment)}});
  }
  return json{{"initial_c", trace.initial_colors},
              {"final_c", trace.final_colors},
              {"k", trace.k},
              {"steps", std::move(steps)}};
}

json outcome_to_json(const Outcome& out, const Instance& inst) {
  json j{{"verdict", verdict_name(out.verdict)},
         {"c", inst.colors},
         {"k", inst.k},
         {"provenance", out.provenance},
         {"trace", trace_to_json(out.trace)}};
  if (out.verdict == Verdict::Yes) j["coloring"] = coloring_to_json(inst.graph, out.coloring);
  if (out.verdict == Verdict::Kernel) {
    j["kernel"] = json{{"graph", graph_to_json(out.kernel.graph)},
                       {"c", out.kernel.colors},
                       {"k", out.kernel.k},
                       {"vertices", external_ids(out.kernel.graph.vertices())}};
  }
  return j;
}

json approx_to_json(const ApproxResult& r, const Graph& g, int colors) {
  if (r.budget_exceeded) return json{{"verdict", "budget"}, {"c", colors}};
  return json{{"verdict", "yes"},
              {"c", colors},
              {"k", r.k},
              {"exact", r.exact},
              {"coloring", coloring_to_json(g, r.coloring)}};
}

json exact_to_json(const ExactResult& r, const Instance& inst) {
  json j{{"c", inst.colors}, {"k", inst.k}, {"nodes", r.nodes_used}};
  switch (r.status) {
    case ExactStatus::Yes:
      j["verdict"] = "yes";
      j["coloring"] = coloring_to_json(inst.graph, r.coloring);
      break;
    case ExactStatus::No:
      j["verdict"] = "no";
      break;
    case ExactStatus::BudgetExceeded:
      j["verdict"] = "budget";
      break;
  }
  return j;
}

json max_k_to_json(const MaxKResult& r, const Graph& g, int colors) {
  if (r.budget_exceeded) return json{{"verdict", "budget"}, {"c", colors}};
  return json{{"verdict", "yes"},
              {"c", colors},
              {"k_opt", r.k_opt},
              {"coloring", coloring_to_json(g, r.coloring)}};
}

json verify_to_json(const CertificateCheck& chk) {
  json j{{"well_formed", chk.well_formed}, {"valid", chk.valid}};
  if (!chk.issue.empty()) j["issue"] = chk.issue;
  j["per_color"] = chk.per_color;
  return j;
}

}  // namespace loadcol
