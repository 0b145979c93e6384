#pragma once

#include "qlab/identities.hpp"
#include "qlab/maps.hpp"
#include "qlab/partitions.hpp"
#include "qlab/scan.hpp"

#include <json.hpp>

#include <string>

namespace qlab {

// JSON encodings. Coefficients and counts are emitted as decimal strings
// so arbitrary-precision values survive any JSON parser.
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const MapReport& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const HScanReport& r);
nlohmann::json to_json(const SetScanReport& r);
nlohmann::json to_json(const G2ScanReport& r);

// One-line text renderings used by the CLI's text format.
std::string to_text(const VerifyReport& r);
std::string to_text(const HScanReport& r);
std::string to_text(const SetScanReport& r);
std::string to_text(const G2ScanReport& r);

// CSV rows (no header) matching the documented column order.
std::string to_csv(const VerifyReport& r);
std::string verify_csv_header();

}  // namespace qlab
