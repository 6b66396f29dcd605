#include "pargeo/report.hpp"

#include <json.hpp>

namespace pargeo {

std::string status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::sampled_pass: return "sampled-pass";
    case Status::inapplicable: return "inapplicable";
  }
  return "fail";
}

void Report::add(std::string id, std::string anchor, bool ok, std::string witness) {
  add_status(std::move(id), std::move(anchor), ok ? Status::pass : Status::fail,
             std::move(witness));
}

void Report::add_status(std::string id, std::string anchor, Status s, std::string witness) {
  records.push_back(Record{std::move(id), std::move(anchor), s, std::move(witness)});
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool Report::ok() const {
  for (const Record& r : records)
    if (r.status == Status::fail) return false;
  return true;
}

int Report::count(Status s) const {
  int n = 0;
  for (const Record& r : records)
    if (r.status == s) ++n;
  return n;
}

std::string report_json(const Report& r, std::uint64_t seed, const std::string& descriptor_echo) {
  nlohmann::json out;
  out["schema"] = "1";
  out["seed"] = seed;
  if (!descriptor_echo.empty()) out["descriptor"] = nlohmann::json::parse(descriptor_echo);
  out["ok"] = r.ok();
  auto& recs = out["records"] = nlohmann::json::array();
  for (const Record& rec : r.records) {
    nlohmann::json j;
    j["check_id"] = rec.check_id;
    j["paper_anchor"] = rec.paper_anchor;
    j["status"] = status_str(rec.status);
    if (!rec.witness.empty()) j["witness"] = rec.witness;
    recs.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string report_text(const Report& r, std::uint64_t seed) {
  std::string out;
  for (const Record& rec : r.records) {
    std::string line = "[" + status_str(rec.status) + "] " + rec.check_id;
    if (rec.paper_anchor != "plumbing") line += "  (" + rec.paper_anchor + ")";
    if (!rec.witness.empty()) line += "  -- " + rec.witness;
    out += line + "\n";
  }
  out += "seed " + std::to_string(seed) + ": " + std::to_string(r.records.size()) +
         " checks, " + std::to_string(r.count(Status::pass)) + " pass, " +
         std::to_string(r.count(Status::sampled_pass)) + " sampled, " +
         std::to_string(r.count(Status::inapplicable)) + " inapplicable, " +
         std::to_string(r.count(Status::fail)) + " fail\n";
  return out;
}

}  // namespace pargeo
