#include <json.hpp>
#include <sstream>

#include "groupgraph/claims.hpp"

namespace groupgraph {

namespace {

using Json = nlohmann::ordered_json;

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

const char* status_of(const ClaimVerdict& v) {
  if (!v.evaluated()) return "skipped";
  return v.consistent ? "consistent" : "inconsistent";
}

Json verdict_json(const ClaimVerdict& v) {
  Json j;
  j["claim"] = to_string(v.claim);
  j["group"] = v.group_label;
  j["graph"] = v.graph_kind ? Json(to_string(*v.graph_kind)) : Json(nullptr);
  j["status"] = status_of(v);
  j["lhs"] = optional_bool(v.lhs);
  j["rhs"] = optional_bool(v.rhs);
  j["oracle_lhs"] = optional_bool(v.oracle_lhs);
  j["skip_reason"] = v.skipped ? Json(*v.skipped) : Json(nullptr);
  Json details = Json::object();
  for (const auto& [key, value] : v.details) details[key] = value;
  j["details"] = std::move(details);
  j["witness"] = v.witness;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

}  // namespace

std::string report_to_json(const CorpusReport& report) {
  Json root;
  root["tool"] = {{"name", "groupgraph"}, {"version", report.tool_version}};
  root["config"] = {
      {"order_cap", report.config.order_cap},
      {"oracle_max_vertices", report.config.analysis.oracle_max_vertices},
      {"corpus", report.corpus},
  };

  std::size_t evaluated = 0, consistent = 0, inconsistent = 0, skipped = 0;
  Json claims = Json::array();
  for (const auto& t : report.claims) {
    evaluated += t.evaluated;
    consistent += t.consistent;
    inconsistent += t.inconsistent;
    skipped += t.skipped;
    const auto& info = claim_info(t.claim);
    Json c;
    c["id"] = info.name;
    c["form"] = to_string(info.form);
    c["graph"] = info.kind ? Json(to_string(*info.kind)) : Json("all");
    c["lhs"] = info.lhs;
    c["rhs"] = info.rhs;
    c["scope"] = info.scope;
    c["evaluated"] = t.evaluated;
    c["consistent"] = t.consistent;
    c["inconsistent"] = t.inconsistent;
    c["skipped"] = t.skipped;
    Json failures = Json::array();
    for (const auto& v : t.failures()) failures.push_back(verdict_json(v));
    c["failures"] = std::move(failures);
    Json verdicts = Json::array();
    for (const auto& v : t.verdicts) verdicts.push_back(verdict_json(v));
    c["verdicts"] = std::move(verdicts);
    claims.push_back(std::move(c));
  }
  root["summary"] = {
      {"groups", report.corpus.size()},
      {"evaluated", evaluated},
      {"consistent", consistent},
      {"inconsistent", inconsistent},
      {"skipped", skipped},
      {"oracle_disagreements", report.oracle_disagreements.size()},
      {"invariant_failures", report.invariant_failures()},
  };
  root["claims"] = std::move(claims);

  Json invariants = Json::object();
  for (const auto& t : report.invariants) {
    Json failures = Json::array();
    for (const auto& f : t.failures) {
      failures.push_back({{"group", f.group_label},
                          {"graph", f.graph_kind ? Json(to_string(*f.graph_kind)) : Json(nullptr)},
                          {"evidence", f.evidence}});
    }
    invariants[t.id] = {{"checked", t.checked},
                        {"passed", t.passed},
                        {"failed", t.failed},
                        {"skipped", t.skipped},
                        {"failures", std::move(failures)}};
  }
  root["invariants"] = std::move(invariants);

  Json disagreements = Json::array();
  for (const auto& v : report.oracle_disagreements) disagreements.push_back(verdict_json(v));
  root["oracle_disagreements"] = std::move(disagreements);
  return root.dump(2) + "\n";
}

std::string report_to_csv(const CorpusReport& report) {
  std::ostringstream os;
  os << "claim,group,graph,status,lhs,rhs,oracle_lhs,skip_reason,witness\n";
  for (const auto& t : report.claims) {
    for (const auto& v : t.verdicts) {
      os << to_string(v.claim) << ',' << csv_field(v.group_label) << ','
         << (v.graph_kind ? to_string(*v.graph_kind) : "") << ',' << status_of(v) << ','
         << csv_bool(v.lhs) << ',' << csv_bool(v.rhs) << ',' << csv_bool(v.oracle_lhs) << ','
         << csv_field(v.skipped.value_or("")) << ',' << csv_field(v.witness) << '\n';
    }
  }
  return os.str();
}

}  // namespace groupgraph
