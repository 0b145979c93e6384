#pragma once

#include "qlab/fps.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qlab {

enum class CheckKind { Equality, NonNeg, EqualityAndNonNeg, CountInequality };

std::string check_kind_name(CheckKind k);

/// One verification point: parameters a record's check is run at. Unused
/// fields stay empty (e.g. records without parameters).
struct ParamPoint {
  std::optional<long long> L, s, k;
  std::string to_string() const;
  bool operator==(const ParamPoint&) const = default;
};

/// Lexicographic (L, s, k) order with absent fields first.
bool param_less(const ParamPoint& a, const ParamPoint& b);

struct VerifyReport {
  std::string id;
  ParamPoint point;
  std::size_t prec = 0;
  bool pass = false;
  std::optional<std::size_t> first_discrepancy;
  std::vector<std::size_t> negative_indices;
  bool fixture = false;
  std::string note;
};

/// A named, grid-parameterized claim. For fixture records the check
/// passes exactly when the documented failure occurs (with its witness),
/// so a regression that "fixes" the counterexample turns the record red.
struct IdentityRecord {
  std::string id;
  std::string description;
  CheckKind kind = CheckKind::Equality;
  bool fixture = false;
  std::vector<ParamPoint> grid;
  std::size_t default_prec = 200;
  std::function<VerifyReport(const ParamPoint&, std::size_t)> check;
};

/// The complete claim registry, sorted by record id.
const std::vector<IdentityRecord>& registry();

/// Lookup; unknown ids are errors.
const IdentityRecord& record(const std::string& id);

/// Run one record at one parameter point. The point must satisfy the
/// underlying builders' preconditions; it need not lie on the default grid
/// (off-grid probes are how the expected-fail examples are exercised).
VerifyReport verify(const std::string& id, const ParamPoint& pt,
                    std::size_t prec);

struct GridOverride {
  std::optional<std::pair<long long, long long>> L, s, k;
  std::optional<std::size_t> prec;
};

/// All grid points of one record, with optional range filters and
/// precision override; deterministic order.
std::vector<VerifyReport> verify_record(const IdentityRecord& rec,
                                        const GridOverride& o = {});

/// Every record at every grid point, ordered by record id then parameters.
std::vector<VerifyReport> verify_all(const GridOverride& o = {});

}  // namespace qlab
