#pragma once

// Shipped expectations for suite points whose status is not `verified`.
// Anything absent from the table is expected to verify. The rows are the
// stated-form entries that fail wherever a binomial prefactor differs from 1
// (and the stated q-Stirling indexing for j >= 1); regenerate them with
// `qbern check --format json` when a sweep changes.

#include <string_view>

#include "qbern/report.hpp"

namespace qbern {

struct ExpectedStatus {
  std::string_view id;
  std::string_view params;  // render_params() form
  Status status;
};

inline constexpr ExpectedStatus kExpectedStatus[] = {
    {"stirling-literal", "j=1", Status::Failed},
    {"stirling-literal", "j=2", Status::Failed},
    {"stirling-literal", "j=3", Status::Failed},
    {"stirling-literal", "j=4", Status::Failed},
    {"stirling-literal", "j=5", Status::Failed},
    {"stirling-literal", "j=6", Status::Failed},
    {"thm5-literal", "k=1,n=3", Status::Failed},
    {"thm5-literal", "k=1,n=4", Status::Failed},
    {"thm5-literal", "k=2,n=4", Status::Failed},
    {"thm5-literal", "k=2,n=5", Status::Failed},
    {"thm5-literal", "k=3,n=5", Status::Failed},
    {"thm5-literal", "k=3,n=6", Status::Failed},
    {"thm5-literal", "k=4,n=6", Status::Failed},
    {"thm5-literal", "k=4,n=7", Status::Failed},
    {"thm5-literal", "k=5,n=7", Status::Failed},
    {"thm5-literal", "k=5,n=8", Status::Failed},
    {"thm5-literal", "k=6,n=8", Status::Failed},
    {"thm5-literal", "k=6,n=9", Status::Failed},
    {"thm5-literal", "k=7,n=9", Status::Failed},
    {"thm5-literal", "k=7,n=10", Status::Failed},
    {"thm5-literal", "k=8,n=10", Status::Failed},
    {"thm5-literal", "k=8,n=11", Status::Failed},
    {"thm6-literal", "k=1,m=1,n=1", Status::Failed},
    {"thm6-literal", "k=1,m=2,n=1", Status::Failed},
    {"thm6-literal", "k=1,m=3,n=1", Status::Failed},
    {"thm6-literal", "k=1,m=1,n=2", Status::Failed},
    {"thm6-literal", "k=1,m=2,n=2", Status::Failed},
    {"thm6-literal", "k=1,m=3,n=2", Status::Failed},
    {"thm6-literal", "k=1,m=1,n=3", Status::Failed},
    {"thm6-literal", "k=1,m=2,n=3", Status::Failed},
    {"thm6-literal", "k=1,m=3,n=3", Status::Failed},
    {"thm6-literal", "k=2,m=2,n=2", Status::Failed},
    {"thm6-literal", "k=2,m=3,n=2", Status::Failed},
    {"thm6-literal", "k=2,m=4,n=2", Status::Failed},
    {"thm6-literal", "k=2,m=2,n=3", Status::Failed},
    {"thm6-literal", "k=2,m=3,n=3", Status::Failed},
    {"thm6-literal", "k=2,m=4,n=3", Status::Failed},
    {"thm6-literal", "k=2,m=2,n=4", Status::Failed},
    {"thm6-literal", "k=2,m=3,n=4", Status::Failed},
    {"thm6-literal", "k=2,m=4,n=4", Status::Failed},
    {"thm6-literal", "k=3,m=3,n=3", Status::Failed},
    {"thm6-literal", "k=3,m=4,n=3", Status::Failed},
    {"thm6-literal", "k=3,m=5,n=3", Status::Failed},
    {"thm6-literal", "k=3,m=3,n=4", Status::Failed},
    {"thm6-literal", "k=3,m=4,n=4", Status::Failed},
    {"thm6-literal", "k=3,m=5,n=4", Status::Failed},
    {"thm6-literal", "k=3,m=3,n=5", Status::Failed},
    {"thm6-literal", "k=3,m=4,n=5", Status::Failed},
    {"thm6-literal", "k=3,m=5,n=5", Status::Failed},
    {"thm7-literal", "k=1,pattern=1,s=1", Status::Failed},
    {"thm7-literal", "k=1,pattern=2,s=1", Status::Failed},
    {"thm7-literal", "k=2,pattern=1,s=1", Status::Failed},
    {"thm7-literal", "k=2,pattern=2,s=1", Status::Failed},
    {"thm7-literal", "k=1,pattern=1,s=2", Status::Failed},
    {"thm7-literal", "k=1,pattern=2,s=2", Status::Failed},
    {"thm7-literal", "k=2,pattern=1,s=2", Status::Failed},
    {"thm7-literal", "k=2,pattern=2,s=2", Status::Failed},
    {"thm7-literal", "k=1,pattern=1,s=3", Status::Failed},
    {"thm7-literal", "k=1,pattern=2,s=3", Status::Failed},
    {"thm7-literal", "k=2,pattern=1,s=3", Status::Failed},
    {"thm7-literal", "k=2,pattern=2,s=3", Status::Failed},
    {"thm7-literal", "k=1,pattern=1,s=4", Status::Failed},
    {"thm7-literal", "k=1,pattern=2,s=4", Status::Failed},
    {"thm7-literal", "k=2,pattern=1,s=4", Status::Failed},
    {"thm7-literal", "k=2,pattern=2,s=4", Status::Failed},
};

inline Status expected_status(const std::string& id, const Params& params) {
  const std::string rendered = render_params(params);
  for (const auto& e : kExpectedStatus)
    if (e.id == id && e.params == rendered) return e.status;
  return Status::Verified;
}

}  // namespace qbern
