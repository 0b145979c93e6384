#include "qlab/serialize.hpp"

#include <sstream>

namespace qlab {

using nlohmann::json;

json to_json(const Partition& p) {
  json pairs = json::array();
  for (auto& [part, freq] : p.pairs()) pairs.push_back({part, freq});
  return json{{"text", p.to_string()}, {"pairs", pairs},
              {"norm", p.norm()}};
}

json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (auto& c : s.coeffs()) coeffs.push_back(c.str());
  return json{{"prec", s.precision()}, {"coeffs", coeffs}};
}

json to_json(const MapReport& r) {
  json collisions = json::array();
  for (const auto& c : r.collisions)
    collisions.push_back(json{{"norm", c.norm},
                              {"preimage1", c.pre1.to_string()},
                              {"preimage2", c.pre2.to_string()},
                              {"image", c.image.to_string()}});
  json excluded = json::array();
  for (const auto& [norm, reason] : r.excluded_inputs)
    excluded.push_back(json{{"norm", norm}, {"reason", reason}});
  return json{{"map", r.id.name()},
              {"L", r.id.L},
              {"checked_norm_max", r.checked_norm_max},
              {"injectivity_ok", r.injectivity_ok},
              {"norm_preserved_ok", r.norm_preserved_ok},
              {"codomain_ok", r.codomain_ok},
              {"collisions", collisions},
              {"excluded_inputs", excluded},
              {"domain_partitions_checked", r.domain_partitions_checked}};
}

json to_json(const VerifyReport& r) {
  json j{{"id", r.id},
         {"params", r.point.to_string()},
         {"prec", r.prec},
         {"status", r.pass ? "pass" : "fail"},
         {"fixture", r.fixture}};
  if (r.point.L) j["L"] = *r.point.L;
  if (r.point.s) j["s"] = *r.point.s;
  if (r.point.k) j["k"] = *r.point.k;
  if (r.first_discrepancy)
    j["first_discrepancy"] = *r.first_discrepancy;
  else
    j["first_discrepancy"] = nullptr;
  if (!r.negative_indices.empty()) j["negative_indices"] = r.negative_indices;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const HScanReport& r) {
  json j{{"L", r.L},
         {"s", r.s},
         {"k", r.k},
         {"prec", r.prec},
         {"clean_tail", r.clean_tail},
         {"retried", r.retried},
         {"negative_indices", r.negative_indices},
         {"tail_zero_indices", r.tail_zero_indices},
         {"verdict", verdict_name(r.verdict)}};
  if (r.last_negative)
    j["last_negative"] = *r.last_negative;
  else
    j["last_negative"] = nullptr;
  return j;
}

json to_json(const SetScanReport& r) {
  json j{{"variant", r.variant == SetVariant::C ? "C" : "Cstar"},
         {"L", r.L},
         {"s", r.s},
         {"prec", r.prec},
         {"violating_norms", r.violating_norms}};
  if (r.max_violating)
    j["max_violating"] = *r.max_violating;
  else
    j["max_violating"] = nullptr;
  return j;
}

json to_json(const G2ScanReport& r) {
  return json{{"L", r.L},
              {"prec", r.prec},
              {"corrections", r.corrections},
              {"negative_indices", r.negative_indices},
              {"last_negative", r.last_negative
                                    ? json(*r.last_negative)
                                    : json(nullptr)},
              {"verdict", verdict_name(r.verdict)}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << (r.pass ? "pass" : "FAIL") << "  " << r.id;
  os << "  [" << r.point.to_string() << "]";
  os << "  prec=" << r.prec;
  if (r.fixture) os << "  (fixture)";
  if (r.first_discrepancy && !r.pass)
    os << "  witness=" << *r.first_discrepancy;
  if (!r.note.empty()) os << "  -- " << r.note;
  return os.str();
}

std::string to_text(const HScanReport& r) {
  std::ostringstream os;
  os << "H L=" << r.L << " s=" << r.s << " k=" << r.k << " prec=" << r.prec
     << (r.retried ? " (retried)" : "") << " negatives=" << r.negative_indices.size();
  if (r.last_negative) os << " last_negative=" << *r.last_negative;
  os << " tail_zeros=" << r.tail_zero_indices.size() << " verdict="
     << verdict_name(r.verdict);
  return os.str();
}

std::string to_text(const SetScanReport& r) {
  std::ostringstream os;
  os << (r.variant == SetVariant::C ? "C" : "Cstar") << " L=" << r.L
     << " s=" << r.s << " prec=" << r.prec << " violations=[";
  for (std::size_t i = 0; i < r.violating_norms.size(); ++i)
    os << (i ? "," : "") << r.violating_norms[i];
  os << "]";
  if (r.max_violating) os << " max_violating=" << *r.max_violating;
  return os.str();
}

std::string to_text(const G2ScanReport& r) {
  std::ostringstream os;
  os << "G2 L=" << r.L << " prec=" << r.prec << " corrections=[";
  for (std::size_t i = 0; i < r.corrections.size(); ++i)
    os << (i ? "," : "") << "q^" << r.corrections[i];
  os << "] negatives=[";
  for (std::size_t i = 0; i < r.negative_indices.size(); ++i)
    os << (i ? "," : "") << r.negative_indices[i];
  os << "] verdict=" << verdict_name(r.verdict);
  return os.str();
}

std::string verify_csv_header() {
  return "id,params,prec,status,fixture,first_discrepancy,note";
}

std::string to_csv(const VerifyReport& r) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += "\"";
    return out;
  };
  std::ostringstream os;
  os << r.id << ',' << quote(r.point.to_string()) << ',' << r.prec << ','
     << (r.pass ? "pass" : "fail") << ',' << (r.fixture ? "yes" : "no") << ',';
  if (r.first_discrepancy) os << *r.first_discrepancy;
  os << ',' << quote(r.note);
  return os.str();
}

}  // namespace qlab
