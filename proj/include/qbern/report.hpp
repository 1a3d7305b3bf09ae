#pragma once

// Outcome of a single identity check, with a stable JSON encoding.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace qbern {

enum class Status { Verified, Failed, CorrectedFormVerified, Error };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::CorrectedFormVerified: return "corrected-form-verified";
    case Status::Error: return "error";
  }
  return "error";
}

inline Status parse_status(std::string_view s) {
  if (s == "verified") return Status::Verified;
  if (s == "failed") return Status::Failed;
  if (s == "corrected-form-verified") return Status::CorrectedFormVerified;
  if (s == "error") return Status::Error;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

using Params = std::map<std::string, long long>;

inline std::string render_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

struct Report {
  std::string id;
  Params params;
  Status status = Status::Error;
  std::string lhs;
  std::string rhs;
  std::string notes;
  double elapsed_ms = 0.0;
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = nlohmann::ordered_json(r.params);
  j["status"] = std::string(status_name(r.status));
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["notes"] = r.notes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace qbern
