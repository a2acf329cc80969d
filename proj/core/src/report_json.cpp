#include "degex/report_json.hpp"

#include <limits>

namespace degex {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json to_json(const Rational& q) {
  Json j;
  j["num"] = to_json(BigInt(boost::multiprecision::numerator(q)));
  j["den"] = to_json(BigInt(boost::multiprecision::denominator(q)));
  return j;
}

Json to_json(const Real& x) {
  Json j;
  j["approx"] = static_cast<double>(x);
  j["decimal"] = x.str(40, std::ios_base::fmtflags(0));
  return j;
}

Json to_json(const VertexList& vertices) {
  Json j = Json::array();
  for (Vertex v : vertices) j.push_back(v);
  return j;
}

Json to_json(const TheoremParams& params) {
  Json j;
  j["r"] = params.r;
  j["ell"] = params.ell;
  j["delta"] = to_json(params.delta);
  j["m"] = params.m;
  j["m0"] = params.m0;
  j["m0_unrounded"] = to_json(params.m0_unrounded);
  j["eps"] = to_json(params.eps);
  j["delta_valid"] = params.delta_valid;
  return j;
}

Json to_json(const DegreeThreshold& threshold) {
  Json j;
  j["bound"] = to_json(threshold.bound);
  j["required"] = threshold.required;
  return j;
}

Json to_json(const ExtractionReport& report) {
  Json j;
  j["success"] = report.success;
  j["subset"] = report.subset ? to_json(*report.subset) : Json(nullptr);
  j["achieved_min_degree"] = report.achieved_min_degree;
  j["threshold"] = to_json(report.threshold);
  j["attempts"] = report.attempts;
  j["seed"] = report.seed;
  return j;
}

Json to_json(const ExhaustiveResult& result, std::uint32_t n, std::uint32_t m, bool with_subsets) {
  Json j;
  j["count"] = result.count();
  j["examined"] = result.examined;
  j["threshold"] = to_json(result.threshold);
  j["ranks"] = result.good_ranks;
  if (with_subsets) {
    Json subsets = Json::array();
    for (std::uint64_t rank : result.good_ranks) subsets.push_back(to_json(colex_unrank(rank, m, n)));
    j["subsets"] = std::move(subsets);
  }
  return j;
}

namespace {

Json value_json(const ContextValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

}  // namespace

Json to_json(const AuditReport& report) {
  Json j;
  j["inequality_id"] = to_string(report.inequality_id);
  j["lhs"] = to_json(report.lhs);
  j["rhs"] = std::visit([](const auto& x) { return to_json(x); }, report.rhs);
  j["relation"] = to_string(report.relation);
  j["holds"] = report.holds;
  Json context;
  for (const NamedValue& nv : report.context) context[nv.name] = value_json(nv.value);
  j["context"] = std::move(context);
  return j;
}

Json to_json(const DiscrepancyReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["mode"] = to_string(report.mode);
  j["n"] = report.n;
  j["p"] = to_json(report.p);
  j["D"] = to_json(report.discrepancy);
  j["eps_star"] = to_json(report.eps_star);
  j["eps_star_approx"] = to_double(report.eps_star);
  Json w;
  if (const auto* w12 = std::get_if<Witness12>(&report.witness)) {
    w["X"] = to_json(w12->x);
    Json pairs = Json::array();
    for (auto [u, v] : w12->pairs) pairs.push_back(Json::array({u, v}));
    w["P"] = std::move(pairs);
  } else {
    const auto& w111 = std::get<Witness111>(report.witness);
    w["X"] = to_json(w111.x);
    w["Y"] = to_json(w111.y);
    w["Z"] = to_json(w111.z);
  }
  j["witness"] = std::move(w);
  if (report.mode == QrMode::sampled) j["trials"] = report.trials;
  return j;
}

Json to_json(const ImplicationVerdict& verdict) {
  Json j;
  j["D"] = to_json(verdict.discrepancy);
  j["eps_star"] = to_json(verdict.eps_star);
  j["exceptions_allowed"] = verdict.exceptions_allowed;
  j["capped"] = verdict.capped;
  j["lhs"] = verdict.lhs;
  j["rhs"] = to_json(verdict.rhs);
  j["holds"] = verdict.holds;
  return j;
}

Json to_json(const PartitionDeletion& deletion) {
  Json j;
  j["n"] = deletion.partition.n;
  j["N"] = deletion.partition.parts;
  Json parts = Json::array();
  for (std::uint32_t i = 0; i < deletion.partition.parts; ++i) {
    Json part;
    part["begin"] = deletion.partition.begins[i];
    part["end"] = deletion.partition.begins[i + 1];
    part["size"] = deletion.partition.size(i);
    parts.push_back(std::move(part));
  }
  j["parts"] = std::move(parts);
  j["edges_before"] = deletion.graph.edge_count() + deletion.deleted;
  j["edges_after"] = deletion.graph.edge_count();
  j["deleted"] = deletion.deleted;
  return j;
}

}  // namespace degex
