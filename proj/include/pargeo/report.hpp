#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pargeo {

enum class Status { pass, fail, sampled_pass, inapplicable };

std::string status_str(Status s);

/// One verification record. The anchor ties the check to the statement it
/// reproduces ("tag — formula or quote"); pure plumbing records carry the
/// literal tag "plumbing".
struct Record {
  std::string check_id;
  std::string paper_anchor;
  Status status = Status::fail;
  std::string witness;
};

struct Report {
  std::vector<Record> records;

  void add(std::string id, std::string anchor, bool ok, std::string witness = "");
  void add_status(std::string id, std::string anchor, Status s, std::string witness = "");
  void append(const Report& other);

  bool ok() const;  // no failing record
  int count(Status s) const;
};

/// Versioned JSON rendering; `descriptor_echo` is the normalized descriptor
/// (compact JSON) or empty when the run has none.
std::string report_json(const Report& r, std::uint64_t seed, const std::string& descriptor_echo);
std::string report_text(const Report& r, std::uint64_t seed);

}  // namespace pargeo
