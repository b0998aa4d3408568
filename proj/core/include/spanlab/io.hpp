#pragma once

#include "spanlab/density.hpp"
#include "spanlab/fragmentation.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/spreadness.hpp"
#include "spanlab/threshold.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spanlab {

// {"n": int, "edges": [[u,v],...]} with edges sorted.
std::string graph_to_json(const LabeledGraph& g);
// Strict inverse of graph_to_json; throws std::runtime_error on malformed input.
LabeledGraph graph_from_json(const std::string& text);

std::string spread_report_json(const SpreadReport& report);
std::string minimal_constant_json(const MinimalConstant& c, double alpha, double delta, double exponent);
std::string density_verdict_json(const DensityVerdict& verdict);

// Key/value lines describing a run; emitted as a header in every output.
using RunHeader = std::vector<std::pair<std::string, std::string>>;

// JSON lines: one record per round, then a final record with the result.
void write_pipeline_transcript(std::ostream& out, const PipelineResult& result, const RunHeader& header);

// '#'-prefixed header lines, then columns p,trials,contains,unknown,freq.
void write_threshold_csv(std::ostream& out, const ThresholdEstimate& est, const RunHeader& header);
std::string threshold_summary_json(const ThresholdEstimate& est, const RunHeader& header);
// Standalone SVG plot of containment frequency against p.
std::string threshold_svg(const std::vector<ThresholdEstimate>& curves);

}  // namespace spanlab
