#include <nlohmann/json.hpp>

#include "thetaq/catalog.hpp"

namespace thetaq {

namespace {

nlohmann::ordered_json to_json(const Report& r, bool with_series) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["paper_ref"] = r.reference;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["status"] = std::string(to_string(r.status));
  if (r.first_mismatch)
    j["first_mismatch"] = {{"monomial", r.first_mismatch->monomial},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_terms"] = r.rhs_terms;
  j["millis"] = r.millis;
  if (r.status == Status::error) j["error"] = r.error;
  if (with_series) {
    j["lhs_series"] = r.lhs_series;
    j["rhs_series"] = r.rhs_series;
  }
  return j;
}

}  // namespace

std::string report_json(const Report& r, bool with_series) { return to_json(r, with_series).dump(2); }

std::string run_json(const std::vector<Report>& reports, bool with_series) {
  nlohmann::ordered_json doc;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r, with_series));
  const RunSummary s = summarize(reports);
  doc["summary"] = {{"total", s.total}, {"verified", s.verified}, {"failed", s.failed}, {"error", s.error}};
  return doc.dump(2);
}

}  // namespace thetaq
