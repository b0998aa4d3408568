#include "spanlab/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace spanlab {

namespace {

using Json = nlohmann::ordered_json;

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json header_json(const RunHeader& header) {
  Json out = Json::object();
  for (const auto& [k, v] : header) out[k] = v;
  return out;
}

Json number_or_null(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

std::string graph_to_json(const LabeledGraph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = edge_list(g.edges());
  return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("graph json: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("graph json: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "edges") throw std::runtime_error("graph json: unexpected key '" + key + "'");
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::runtime_error("graph json: 'n' must be an integer");
  if (!j.contains("edges") || !j["edges"].is_array()) throw std::runtime_error("graph json: 'edges' must be an array");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 1 << 20) throw std::runtime_error("graph json: 'n' out of range");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::runtime_error("graph json: each edge must be a pair of integers");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("graph json: endpoint outside [0,n)");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return LabeledGraph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph json: ") + e.what());
  }
}

std::string spread_report_json(const SpreadReport& report) {
  Json j;
  j["q_target"] = report.q_target;
  j["alpha"] = report.alpha;
  j["delta"] = report.delta;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["superspread_cap"] = report.superspread_cap;
  j["worst_margin"] = report.worst_margin;
  j["worst_witness"] = report.worst_witness.indices();
  Json margins = Json::array();
  for (const auto& [size, margin] : report.per_size_margins) margins.push_back({{"size", size}, {"margin", margin}});
  j["per_size_margins"] = margins;
  j["search_mode"] = report.search_mode;
  j["classes_examined"] = report.classes_examined;
  j["samples_drawn"] = report.samples_drawn;
  return j.dump(2);
}

std::string minimal_constant_json(const MinimalConstant& c, double alpha, double delta, double exponent) {
  Json j;
  j["alpha"] = alpha;
  j["delta"] = delta;
  j["exponent"] = exponent;
  j["constant"] = c.value;
  j["witness"] = c.witness.indices();
  j["search_mode"] = c.search_mode;
  return j.dump(2);
}

std::string density_verdict_json(const DensityVerdict& verdict) {
  Json j;
  j["claim_id"] = verdict.claim_id;
  j["structure"] = verdict.structure;
  j["verdict"] = verdict.pass() ? "pass" : "fail";
  j["instances_checked"] = verdict.instances_checked;
  j["sampled"] = verdict.sampled;
  Json vs = Json::array();
  for (const auto& v : verdict.violations) {
    vs.push_back({{"detail", v.detail},
                  {"vertices", v.vertices},
                  {"edges", edge_list(v.edges)},
                  {"observed", v.observed},
                  {"claimed", v.claimed}});
  }
  j["violations"] = vs;
  return j.dump(2);
}

void write_pipeline_transcript(std::ostream& out, const PipelineResult& result, const RunHeader& header) {
  out << Json{{"config", header_json(header)}}.dump() << '\n';
  for (const auto& r : result.rounds) {
    Json j;
    j["round"] = r.round;
    j["H_size"] = r.h_size;
    j["k"] = r.k;
    j["exposure_size"] = r.exposure_size;
    j["exposed_count"] = r.exposed_count;
    j["successful"] = r.successful;
    out << j.dump() << '\n';
  }
  Json fin;
  fin["success"] = result.success;
  fin["Y"] = result.Y;
  fin["t"] = result.t;
  fin["k_schedule"] = result.k_schedule;
  fin["round_size"] = result.round_size;
  fin["p_final"] = result.p_final;
  fin["final_exposed"] = result.final_exposed;
  fin["found_copy"] = result.found_copy ? Json(result.found_copy->indices()) : Json(nullptr);
  if (!result.advisory.empty()) fin["advisory"] = result.advisory;
  out << Json{{"result", fin}}.dump() << '\n';
}

void write_threshold_csv(std::ostream& out, const ThresholdEstimate& est, const RunHeader& header) {
  for (const auto& [k, v] : header) out << "# " << k << '=' << v << '\n';
  out << "p,trials,contains,unknown,freq\n";
  out << std::setprecision(17);
  for (const auto& g : est.points) {
    out << g.p << ',' << g.trials << ',' << g.contains << ',' << g.unknown << ',' << g.freq << '\n';
  }
}

std::string threshold_summary_json(const ThresholdEstimate& est, const RunHeader& header) {
  Json j;
  j["config"] = header_json(header);
  j["structure"] = est.spec.name();
  j["n"] = est.spec.n;
  j["seed"] = est.seed;
  j["coupled"] = est.coupled;
  j["p_half"] = number_or_null(est.p_half);
  j["first_moment_p"] = est.first_moment_p;
  j["monotone_violations"] = est.monotone_violations;
  Json pts = Json::array();
  for (const auto& g : est.points) {
    pts.push_back({{"p", g.p}, {"trials", g.trials}, {"contains", g.contains}, {"unknown", g.unknown}, {"freq", g.freq}});
  }
  j["points"] = pts;
  return j.dump(2);
}

std::string threshold_svg(const std::vector<ThresholdEstimate>& curves) {
  constexpr double W = 640, H = 420, L = 60, R = 20, T = 20, B = 50;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  double pmax = 0;
  for (const auto& c : curves)
    for (const auto& g : c.points) pmax = std::max(pmax, g.p);
  if (pmax <= 0) pmax = 1;
  auto x = [&](double p) { return L + (W - L - R) * p / pmax; };
  auto y = [&](double f) { return T + (H - T - B) * (1 - f); };
  std::ostringstream s;
  s << std::fixed << std::setprecision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << y(0) << "\" x2=\"" << W - R << "\" y2=\"" << y(0) << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << y(0) << "\" x2=\"" << L << "\" y2=\"" << y(1) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    s << "<text x=\"" << L - 8 << "\" y=\"" << y(f) + 4 << "\" font-size=\"11\" text-anchor=\"end\">" << f << "</text>\n";
    const double p = pmax * f;
    s << "<text x=\"" << x(p) << "\" y=\"" << y(0) + 16 << "\" font-size=\"11\" text-anchor=\"middle\">" << p
      << "</text>\n";
  }
  s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10 << "\" font-size=\"12\" text-anchor=\"middle\">p</text>\n";
  s << "<text x=\"14\" y=\"" << (T + H - B) / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 " << (T + H - B) / 2
    << ")\" text-anchor=\"middle\">containment frequency</text>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* colour = palette[c % 6];
    s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& g : curves[c].points) s << x(g.p) << ',' << y(g.freq) << ' ';
    s << "\"/>\n";
    for (const auto& g : curves[c].points) {
      s << "<circle cx=\"" << x(g.p) << "\" cy=\"" << y(g.freq) << "\" r=\"2.5\" fill=\"" << colour << "\"/>\n";
    }
    s << "<text x=\"" << L + 10 << "\" y=\"" << T + 14 + 14 * static_cast<double>(c) << "\" font-size=\"11\" fill=\""
      << colour << "\">" << curves[c].spec.name() << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace spanlab
