#include "json_io.hpp"

namespace horncone {

using nlohmann::json;

json coefficient_json(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (v <= limit && v >= -limit) return static_cast<std::int64_t>(v);
  return v.str();
}

json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json index_set_json(const IndexSet& s) {
  json out = json::array();
  for (int i : s.elements()) out.push_back(i);
  return out;
}

namespace {

json tuple_json(const IndexTuple& t) {
  json out = json::array();
  for (const auto& s : t.sets()) out.push_back(index_set_json(s));
  return out;
}

json record_json(const InequalityRecord& rec) {
  json j;
  j["sets"] = tuple_json(rec.sets);
  j["K"] = rec.K ? index_set_json(*rec.K) : json(nullptr);
  j["slack"] = rat_to_string(rec.slack);
  j["equality"] = rec.equality;
  return j;
}

}  // namespace

json report_json(const FeasibilityReport& report) {
  json j;
  j["feasible"] = report.feasible;
  j["violated"] = json::array();
  for (const auto& rec : report.violated) j["violated"].push_back(record_json(rec));
  j["tight"] = json::array();
  for (const auto& rec : report.tight) j["tight"].push_back(record_json(rec));
  j["max_tight_r"] = report.max_tight_r ? json(*report.max_tight_r) : json(nullptr);
  return j;
}

json witness_json(const WitnessResult& result) {
  json j;
  j["status"] = witness_status_name(result.status);
  j["matrices"] = json::array();
  for (const auto& a : result.matrices) j["matrices"].push_back(matrix_json(a));
  j["C"] = result.C.rows() > 0 ? matrix_json(result.C) : json(nullptr);
  j["spectral_residual"] = result.spectral_residual;
  j["slack_min_eigenvalue"] = result.slack_min_eigenvalue;
  j["split_tree"] = result.split_tree;
  return j;
}

json list_entry_json(const ListEntry& entry, int n, int m) {
  json j;
  j["r"] = entry.tuple.cardinality();
  j["n"] = n;
  j["m"] = m;
  j["sets"] = tuple_json(entry.tuple);
  j["K"] = nullptr;
  j["coeff"] = coefficient_json(entry.coefficient);
  return j;
}

json horn_triple_json(const HornTriple& triple, int n, int m) {
  json j;
  j["r"] = triple.K.cardinality();
  j["n"] = n;
  j["m"] = m;
  j["sets"] = tuple_json(triple.sets);
  j["K"] = index_set_json(triple.K);
  j["coeff"] = coefficient_json(triple.coefficient);
  return j;
}

json redundancy_json(const RedundancyReport& report) {
  json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["all_essential"] = report.all_essential;
  j["conditional"] = report.conditional;
  json rows = json::array();
  for (std::size_t e = 0; e < report.system.size(); ++e) {
    json row;
    row["origin"] = report.system[e].origin;
    row["detail"] = report.system[e].detail;
    row["essential"] = report.verdicts[e].essential;
    json witness = json::array();
    for (const Rat& v : report.verdicts[e].witness) witness.push_back(rat_to_string(v));
    row["witness"] = std::move(witness);
    rows.push_back(std::move(row));
  }
  j["inequalities"] = std::move(rows);
  return j;
}

json sweep_json(const SweepReport& report) {
  json j;
  j["all_passed"] = report.all_passed();
  json cases = json::array();
  for (const auto& c : report.cases) {
    json row;
    row["name"] = c.name;
    row["checked"] = c.checked;
    row["failures"] = c.failures;
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  return j;
}

json necessity_json(const NecessityOutcome& outcome) {
  json j;
  j["trials"] = outcome.trials;
  j["violations"] = outcome.violations;
  j["worst_slack"] = outcome.worst_slack;
  return j;
}

}  // namespace horncone
