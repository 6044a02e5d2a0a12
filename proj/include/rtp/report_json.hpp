#pragma once

#include <json.hpp>

#include "rtp/criteria.hpp"
#include "rtp/matrix.hpp"
#include "rtp/riordan.hpp"

namespace rtp {

// All rationals cross the I/O boundary as decimal-free "p/q" strings.
nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const TPReport& r);
nlohmann::json to_json(const AZ& az);
nlohmann::json to_json(const PFVerdict& v);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const CertificationSummary& s);

// Exact round-trip of to_json(TPReport).
TPReport tp_report_from_json(const nlohmann::json& j);

}  // namespace rtp
