#pragma once

#include <string>

#include "json.hpp"
#include "pipeline.hpp"

namespace loadcol {

/// JSON views of the library's results. Vertex ids are external (1-indexed,
/// matching the text format); colorings are emitted as an n-length array
/// ordered by vertex id.

std::string verdict_name(Verdict v);

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json coloring_to_json(const Graph& g, const Coloring& col);
nlohmann::json trace_to_json(const ReductionTrace& trace);
nlohmann::json outcome_to_json(const Outcome& out, const Instance& inst);
nlohmann::json approx_to_json(const ApproxResult& r, const Graph& g, int colors);
nlohmann::json exact_to_json(const ExactResult& r, const Instance& inst);
nlohmann::json max_k_to_json(const MaxKResult& r, const Graph& g, int colors);
nlohmann::json verify_to_json(const CertificateCheck& chk);

}  // namespace loadcol
