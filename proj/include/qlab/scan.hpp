#pragma once

#include "qlab/fps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlab {

/// Inclusive integer range, parsed from "a..b" or a single "n".
struct Range {
  long long lo = 0, hi = 0;
  static Range parse(const std::string& text);
  bool contains(long long v) const { return v >= lo && v <= hi; }
  std::string to_string() const;
};

/// Evidence vocabulary. Truncation can never prove eventual positivity;
/// the best a scan can say is that the negatives stop well before the
/// truncation order.
enum class ScanVerdict {
  NoNegatives,
  NegativesThenClean,    ///< clean tail of the documented length
  NegativesAtFrontier    ///< negatives inside the tail window: inconclusive
};

std::string verdict_name(ScanVerdict v);

struct HScanReport {
  long long L = 0, s = 0, k = 0;
  std::size_t prec = 0;       ///< order actually used (doubled on retry)
  std::size_t clean_tail = 0;
  bool retried = false;
  std::vector<std::size_t> negative_indices;
  std::optional<std::size_t> last_negative;
  /// Zero coefficients inside the tail window: distinguishes strict
  /// positivity evidence from mere non-negativity.
  std::vector<std::size_t> tail_zero_indices;
  ScanVerdict verdict = ScanVerdict::NoNegatives;
};

/// Scans H_{L,s,k} over the grid points of the ranges satisfying
/// k >= s+1 and L >= s+1 (other combinations are outside the conjecture).
/// A grid with no admissible point, or clean_tail >= prec, is an error.
/// A point whose verdict comes out negatives-at-frontier is retried once
/// at doubled order before reporting.
std::vector<HScanReport> scan_H(Range L, Range s, Range k, std::size_t prec,
                                std::size_t clean_tail);

enum class SetVariant { C, Cstar };

struct SetScanReport {
  SetVariant variant = SetVariant::C;
  long long L = 0, s = 0;
  std::size_t prec = 0;
  std::vector<long long> violating_norms;
  std::optional<long long> max_violating;
};

/// Per-norm count difference |C_{L,s,1} ∩ N| - |C_{L,s,2} ∩ N| (resp. the
/// starred variant) by pure enumeration for N < prec; records every
/// violating N. The maximum violating N across an s-slice bounds the
/// conjectured threshold M from below.
SetScanReport scan_set_conjecture(SetVariant v, long long L, long long s,
                                  std::size_t prec);

/// Aggregates an s-slice of set-scan reports into the M-evidence value:
/// max violating norm + 1, or 1 when no violations were seen.
long long m_evidence(const std::vector<SetScanReport>& slice);

struct G2ScanReport {
  long long L = 0;
  std::size_t prec = 0;
  std::vector<std::size_t> corrections;  ///< exponents of added monomials
  std::vector<std::size_t> negative_indices;
  std::optional<std::size_t> last_negative;
  ScanVerdict verdict = ScanVerdict::NoNegatives;
};

/// Builds G_{L,2} plus the conjectured corrections (q^3 and, for
/// L in {3,4}, also q^9) and reports any remaining negatives. L >= 3.
std::vector<G2ScanReport> scan_G2(Range L, std::size_t prec,
                                  std::size_t clean_tail = 50);

}  // namespace qlab
