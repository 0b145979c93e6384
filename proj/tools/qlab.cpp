// qlab: command-line surface for the partition-inequality laboratory.
//
// Subcommands: verify, enumerate, genfun, complement, table, scan-h,
// scan-sets, scan-g2. Output formats: text (default), json (JSON lines),
// csv. Exit status: 0 all pass, 1 any non-fixture failure or scan finding
// outside the expected set, 2 usage error.
//
// The default truncation order is 200; override per invocation with
// --order or globally with the QLAB_ORDER environment variable.

#include "qlab/genfun.hpp"
#include "qlab/identities.hpp"
#include "qlab/maps.hpp"
#include "qlab/partitions.hpp"
#include "qlab/scan.hpp"
#include "qlab/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace qlab;
using nlohmann::json;

std::size_t default_order() {
  if (const char* env = std::getenv("QLAB_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw CLI::ValidationError("QLAB_ORDER",
                               "must be a positive integer, got '" +
                                   std::string(env) + "'");
  }
  return 200;
}

struct CommonOpts {
  std::string format = "text";
  std::optional<std::size_t> order;
  std::size_t effective_order() const {
    return order ? *order : default_order();
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_order = true) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  if (with_order)
    cmd->add_option("--order", o.order,
                    "truncation order (default 200, or QLAB_ORDER)");
}

ConstraintSet parse_set_spec(const std::string& spec) {
  std::vector<std::string> toks;
  std::istringstream is(spec);
  std::string t;
  while (std::getline(is, t, ':')) toks.push_back(t);
  if (toks.empty()) throw CLI::ValidationError("--set", "empty spec");
  auto want = [&](std::size_t n) {
    if (toks.size() != n + 1)
      throw CLI::ValidationError(
          "--set", toks[0] + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto num = [&](std::size_t i) { return std::stoi(toks.at(i)); };
  try {
    if (toks[0] == "A") {
      want(2);
      return ConstraintSet::set_A(num(1), num(2));
    }
    if (toks[0] == "B") {
      want(2);
      return ConstraintSet::set_B(num(1), num(2));
    }
    if (toks[0] == "C") {
      want(3);
      return ConstraintSet::set_C(num(1), num(2), num(3));
    }
    if (toks[0] == "Cstar") {
      want(2);
      return ConstraintSet::set_Cstar(num(1), num(2));
    }
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--set", e.what());
  }
  throw CLI::ValidationError("--set",
                             "unknown family '" + toks[0] +
                                 "' (expected A, B, C or Cstar)");
}

// ---- verify ------------------------------------------------------------

int run_verify(const std::string& target, const CommonOpts& common,
               const GridOverride& over) {
  std::vector<VerifyReport> reports;
  if (target == "all") {
    reports = verify_all(over);
  } else {
    reports = verify_record(record(target), over);
  }
  bool any_fail = false;
  if (common.format == "csv") std::cout << verify_csv_header() << "\n";
  for (const auto& r : reports) {
    if (!r.pass) any_fail = true;
    if (common.format == "json")
      std::cout << to_json(r).dump() << "\n";
    else if (common.format == "csv")
      std::cout << to_csv(r) << "\n";
    else
      std::cout << to_text(r) << "\n";
  }
  if (common.format == "text") {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass;
    std::cout << passed << "/" << reports.size() << " checks passed\n";
  }
  return any_fail ? 1 : 0;
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(long long N, const std::string& spec,
                  const CommonOpts& common) {
  ConstraintSet c = parse_set_spec(spec);
  std::vector<Partition> parts = enumerate(N, c);
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& p : parts) arr.push_back(to_json(p));
    std::cout << json{{"n", N}, {"set", spec}, {"count", parts.size()},
                      {"partitions", arr}}
                     .dump()
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "partition,norm\n";
    for (const auto& p : parts)
      std::cout << '"' << p.to_string() << "\"," << p.norm() << "\n";
  } else {
    for (const auto& p : parts) std::cout << p.to_string() << "\n";
    std::cout << parts.size() << " partition(s) of " << N << " in " << spec
              << "\n";
  }
  return 0;
}

// ---- genfun --------------------------------------------------------------

int run_genfun(const std::string& series, const CommonOpts& common) {
  SeriesId id = SeriesId::parse(series);
  PowerSeries s = build(id, common.effective_order());
  if (common.format == "json") {
    json j = to_json(s);
    j["series"] = id.to_string();
    std::cout << j.dump() << "\n";
  } else if (common.format == "csv") {
    std::cout << "exponent,coefficient\n";
    for (std::size_t n = 0; n < s.precision(); ++n)
      std::cout << n << ',' << s[n].str() << "\n";
  } else {
    for (std::size_t n = 0; n < s.precision(); ++n)
      std::cout << n << '\t' << s[n].str() << "\n";
  }
  return 0;
}

// ---- complement ------------------------------------------------------

int run_complement(const std::string& map_name, int L, long long N,
                   const CommonOpts& common) {
  InjectionId id = InjectionId::parse(map_name, L);
  std::vector<Partition> comp = image_complement(id, N);
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& p : comp) arr.push_back(to_json(p));
    std::cout << json{{"map", id.name()}, {"L", L}, {"n", N},
                      {"count", comp.size()}, {"complement", arr}}
                     .dump()
              << "\n";
  } else if (common.format == "csv") {
    std::cout << "partition,norm\n";
    for (const auto& p : comp)
      std::cout << '"' << p.to_string() << "\"," << p.norm() << "\n";
  } else {
    for (const auto& p : comp) std::cout << p.to_string() << "\n";
    std::cout << comp.size() << " unmatched codomain partition(s) at norm "
              << N << "\n";
  }
  return 0;
}

// ---- tables (byte-stable text) -----------------------------------------

int run_table(int which) {
  if (which == 1) {
    // Partitions of 6 with the alternating-smallest-part weight and the
    // t statistic.
    std::cout << std::left << std::setw(18) << "pi" << std::setw(12)
              << "(-1)^(s+1)" << "t\n";
    long long total_w = 0, total_t = 0;
    for (const auto& p :
         enumerate(6, ConstraintSet::all_nonempty())) {
      int w = p.smallest() % 2 == 1 ? 1 : -1;
      int t = t_stat(p);
      total_w += w;
      total_t += t;
      std::cout << std::left << std::setw(18) << p.to_string_compact()
                << std::setw(12) << (w > 0 ? "+1" : "-1") << t << "\n";
    }
    std::cout << std::left << std::setw(18) << "total" << std::setw(12)
              << total_w << total_t << "\n";
    return 0;
  }
  if (which == 2 || which == 3) {
    InjectionId id = which == 2 ? InjectionId::make(MapKind::Gamma, 3)
                                : InjectionId::make(MapKind::Gamma1, 5);
    const long long N = 12;
    std::map<std::string, std::string> image_to_pre;
    for (const auto& p : enumerate(N, domain_set(id)))
      image_to_pre[apply(id, p).to_string()] = p.to_string_compact();
    std::string dom_label = which == 2 ? "A_{3,2}" : "B_{5,2}";
    std::string cod_label = which == 2 ? "A_{3,1}" : "B_{5,1}";
    std::string arrow_label = which == 2 ? "gamma" : "Gamma1";
    std::cout << std::left << std::setw(16) << dom_label << std::setw(9)
              << arrow_label << cod_label << "\n";
    for (const auto& img : enumerate(N, codomain_set(id))) {
      auto it = image_to_pre.find(img.to_string());
      std::cout << std::left << std::setw(16)
                << (it == image_to_pre.end() ? "" : it->second)
                << std::setw(9) << (it == image_to_pre.end() ? "" : "->")
                << img.to_string_compact() << "\n";
    }
    return 0;
  }
  throw CLI::ValidationError("table", "expected 1, 2 or 3");
}

// ---- scans ---------------------------------------------------------------

int run_scan_h(const std::string& Lr, const std::string& sr,
               const std::string& kr, std::size_t clean_tail,
               const CommonOpts& common) {
  auto reports = scan_H(Range::parse(Lr), Range::parse(sr), Range::parse(kr),
                        common.effective_order(), clean_tail);
  bool frontier = false;
  for (const auto& r : reports) {
    if (r.verdict == ScanVerdict::NegativesAtFrontier) frontier = true;
    if (common.format == "json")
      std::cout << to_json(r).dump() << "\n";
    else
      std::cout << to_text(r) << "\n";
  }
  if (common.format == "text")
    std::cout << reports.size() << " grid point(s) scanned\n";
  return frontier ? 1 : 0;
}

int run_scan_sets(const std::string& variant, const std::string& Lr,
                  const std::string& sr, const CommonOpts& common) {
  SetVariant v = variant == "C" ? SetVariant::C : SetVariant::Cstar;
  Range Ls = Range::parse(Lr), ss = Range::parse(sr);
  for (long long s = ss.lo; s <= ss.hi; ++s) {
    std::vector<SetScanReport> slice;
    for (long long L = Ls.lo; L <= Ls.hi; ++L) {
      if (v == SetVariant::Cstar && L < s + 1) continue;
      if (v == SetVariant::C && L < 2) continue;
      SetScanReport rep =
          scan_set_conjecture(v, L, s, common.effective_order());
      if (common.format == "json")
        std::cout << to_json(rep).dump() << "\n";
      else
        std::cout << to_text(rep) << "\n";
      slice.push_back(std::move(rep));
    }
    if (slice.empty()) continue;
    long long m = m_evidence(slice);
    if (common.format == "json")
      std::cout << json{{"summary", true}, {"variant", variant}, {"s", s},
                        {"L", Ls.to_string()}, {"m_evidence", m}}
                       .dump()
                << "\n";
    else
      std::cout << "summary " << variant << " s=" << s << " L=" <<
          Ls.to_string() << " M-evidence=" << m << "\n";
  }
  return 0;
}

int run_scan_g2(const std::string& Lr, const CommonOpts& common) {
  auto reports = scan_G2(Range::parse(Lr), common.effective_order());
  bool negatives = false;
  for (const auto& r : reports) {
    if (!r.negative_indices.empty()) negatives = true;
    if (common.format == "json")
      std::cout << to_json(r).dump() << "\n";
    else
      std::cout << to_text(r) << "\n";
  }
  return negatives ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: exact q-series and partition-inequality laboratory"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run identity/inequality checks from the registry");
  std::string verify_target = "all";
  verify_cmd->add_option("target", verify_target,
                         "record id or 'all' (see 'verify list')");
  CommonOpts verify_common;
  std::string over_L, over_s, over_k;
  add_common(verify_cmd, verify_common);
  verify_cmd->add_option("--L", over_L, "restrict grid, e.g. 3..8");
  verify_cmd->add_option("--s", over_s, "restrict grid");
  verify_cmd->add_option("--k", over_k, "restrict grid");

  // enumerate
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list partitions of a norm in a family");
  long long enum_n = 0;
  std::string enum_set_spec;
  CommonOpts enum_common;
  enum_cmd->add_option("--n", enum_n, "norm")->required();
  enum_cmd->add_option("--set", enum_set_spec,
                       "family spec: A:<L>:<1|2>, B:<L>:<1|2>, "
                       "C:<L>:<s>:<1|2>, Cstar:<L>:<s>")
      ->required();
  add_common(enum_cmd, enum_common, false);

  // genfun
  auto* genfun_cmd =
      app.add_subcommand("genfun", "print coefficients of a named series");
  std::string genfun_series;
  CommonOpts genfun_common;
  genfun_cmd->add_option("series", genfun_series,
                         "series id, e.g. H_L1:3 or H_Lsk:5:2:6")
      ->required();
  add_common(genfun_cmd, genfun_common);

  // complement
  auto* comp_cmd = app.add_subcommand(
      "complement", "codomain partitions missed by an injection at a norm");
  std::string comp_map;
  int comp_L = 0;
  long long comp_n = 0;
  CommonOpts comp_common;
  comp_cmd->add_option("--map", comp_map,
                       "gamma|gamma1|gamma1star|gamma2|gamma2star|gammastar")
      ->required();
  comp_cmd->add_option("--L", comp_L, "map parameter L")->required();
  comp_cmd->add_option("--n", comp_n, "norm")->required();
  add_common(comp_cmd, comp_common, false);

  // table
  auto* table_cmd =
      app.add_subcommand("table", "reproduce a worked example table (1..3)");
  int table_which = 0;
  table_cmd->add_option("which", table_which, "table number")->required();

  // scan-h
  auto* scanh_cmd = app.add_subcommand(
      "scan-h", "negative-coefficient frontier scan of the H family");
  std::string scanh_L = "2..10", scanh_s = "1..9", scanh_k = "2..10";
  std::size_t scanh_tail = 50;
  CommonOpts scanh_common;
  scanh_cmd->add_option("--L", scanh_L, "L range")->capture_default_str();
  scanh_cmd->add_option("--s", scanh_s, "s range")->capture_default_str();
  scanh_cmd->add_option("--k", scanh_k, "k range")->capture_default_str();
  scanh_cmd->add_option("--clean-tail", scanh_tail,
                        "clean tail length for the verdicts")
      ->capture_default_str();
  add_common(scanh_cmd, scanh_common);

  // scan-sets
  auto* scansets_cmd = app.add_subcommand(
      "scan-sets", "per-norm count differences for the set conjectures");
  std::string scansets_variant = "C", scansets_L = "2..8", scansets_s = "1..2";
  CommonOpts scansets_common;
  scansets_cmd->add_option("--variant", scansets_variant, "C or Cstar")
      ->check(CLI::IsMember({"C", "Cstar"}))
      ->capture_default_str();
  scansets_cmd->add_option("--L", scansets_L, "L range")->capture_default_str();
  scansets_cmd->add_option("--s", scansets_s, "s range")->capture_default_str();
  add_common(scansets_cmd, scansets_common);

  // scan-g2
  auto* scang2_cmd = app.add_subcommand(
      "scan-g2", "non-negativity scan of G_{L,2} with conjectured corrections");
  std::string scang2_L = "3..10";
  CommonOpts scang2_common;
  scang2_cmd->add_option("--L", scang2_L, "L range")->capture_default_str();
  add_common(scang2_cmd, scang2_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) {
      GridOverride over;
      if (!over_L.empty()) {
        Range r = Range::parse(over_L);
        over.L = {r.lo, r.hi};
      }
      if (!over_s.empty()) {
        Range r = Range::parse(over_s);
        over.s = {r.lo, r.hi};
      }
      if (!over_k.empty()) {
        Range r = Range::parse(over_k);
        over.k = {r.lo, r.hi};
      }
      over.prec = verify_common.order;
      if (verify_target == "list") {
        for (const auto& rec : registry())
          std::cout << rec.id << "  [" << check_kind_name(rec.kind)
                    << (rec.fixture ? ", fixture" : "") << "]  "
                    << rec.description << "\n";
        return 0;
      }
      return run_verify(verify_target, verify_common, over);
    }
    if (app.got_subcommand(enum_cmd))
      return run_enumerate(enum_n, enum_set_spec, enum_common);
    if (app.got_subcommand(genfun_cmd))
      return run_genfun(genfun_series, genfun_common);
    if (app.got_subcommand(comp_cmd))
      return run_complement(comp_map, comp_L, comp_n, comp_common);
    if (app.got_subcommand(table_cmd)) return run_table(table_which);
    if (app.got_subcommand(scanh_cmd))
      return run_scan_h(scanh_L, scanh_s, scanh_k, scanh_tail, scanh_common);
    if (app.got_subcommand(scansets_cmd))
      return run_scan_sets(scansets_variant, scansets_L, scansets_s,
                           scansets_common);
    if (app.got_subcommand(scang2_cmd))
      return run_scan_g2(scang2_L, scang2_common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
