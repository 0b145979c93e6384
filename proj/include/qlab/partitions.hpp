#pragma once

#include "qlab/fps.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

/// Integer partition in frequency representation: a finite map from part
/// size to positive multiplicity, stored as (part, freq) pairs sorted by
/// part. Zero frequencies are normalized away on construction.
class Partition {
 public:
  Partition() = default;

  /// Build from (part, freq) pairs in any order; zero frequencies are
  /// dropped, duplicates merged. Negative parts or frequencies are errors.
  static Partition from_pairs(std::vector<std::pair<int, long long>> pairs);

  /// Parse the canonical text form, e.g. "1^4 3^2 10^1" (a bare part means
  /// frequency 1). "-" denotes the empty partition.
  static Partition parse(const std::string& text);

  bool empty() const noexcept { return pairs_.empty(); }
  long long norm() const;
  long long freq(int part) const;
  int smallest() const;  ///< error on the empty partition
  int largest() const;   ///< error on the empty partition
  long long part_count() const;
  const std::vector<std::pair<int, long long>>& pairs() const noexcept {
    return pairs_;
  }

  /// Canonical text form with explicit frequencies: "1^4 3^2 10^1".
  std::string to_string() const;
  /// Frequency notation as printed in combinatorics tables: "1^4 3^2 10".
  std::string to_string_compact() const;

  bool operator==(const Partition& o) const = default;

 private:
  friend struct PartitionHash;
  std::vector<std::pair<int, long long>> pairs_;
};

/// Orders partitions by their weakly decreasing part lists, lexicographically
/// ascending: 1^4 < 2 1^2 < 2^2 < 3 1 < 4. This is the canonical
/// enumeration order.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct PartStats {
  int smallest = 0;
  int largest = 0;
  long long count = 0;  ///< nu: number of parts with multiplicity
  long long rank = 0;   ///< largest - count
};

/// Smallest part, largest part, part count and rank. Errors on the empty
/// partition (smallest/largest undefined).
PartStats stats(const Partition& p);

/// Length of the initial odd-frequency chain: the unique t >= 0 with
/// f_1,...,f_t all odd and f_{t+1} even. Zero for the empty partition and
/// whenever f_1 is even.
int t_stat(const Partition& p);

enum class Parity { Even, Odd };

/// Membership predicate for the partition families used throughout: part
/// ranges, forbidden parts, smallest-part conditions, bounded gap between
/// largest and smallest part, exact part frequencies, and a distinctness
/// bound. Unset fields do not constrain.
struct ConstraintSet {
  std::optional<int> min_part;
  std::optional<int> max_part;
  std::set<int> forbidden_parts;
  std::optional<int> smallest_part_equals;
  std::optional<int> smallest_part_at_least;
  std::optional<int> largest_minus_smallest_at_most;
  std::optional<Parity> smallest_part_parity;
  /// f_{part} must equal freq exactly (freq 0 forbids the part).
  std::optional<std::pair<int, long long>> freq_of_part_equals;
  /// Every frequency at most this (1 = distinct parts).
  std::optional<long long> max_frequency;
  bool nonempty = false;

  bool matches(const Partition& p) const;
  bool operator==(const ConstraintSet&) const = default;

  /// True if any constraint refers to the smallest part (directly or via
  /// the gap bound); such sets are counted smallest-part-first.
  bool smallest_sensitive() const;

  // The paper's named families.
  static ConstraintSet unrestricted();   ///< all partitions, empty included
  static ConstraintSet all_nonempty();   ///< the set U of positive norm
  static ConstraintSet set_A(int L, int i);             ///< A_{L,1}, A_{L,2}
  static ConstraintSet set_B(int L, int i);             ///< B_{L,1}, B_{L,2}
  static ConstraintSet set_C(int L, int s, int i);      ///< C_{L,s,1/2}
  static ConstraintSet set_Cstar(int L, int s);         ///< C*_{L,s,1}
  static ConstraintSet bounded_gap(int L);  ///< nonempty, l - s <= L
  static ConstraintSet bounded_gap_smallest(int L, int s);    ///< + s(pi) = s
  static ConstraintSet bounded_gap_smallest_at_least(int L, int s);
  static ConstraintSet distinct_nonempty();  ///< the set D
};

/// Visit every partition of norm N satisfying c, in canonical order.
void for_each_partition(long long N, const ConstraintSet& c,
                        const std::function<void(const Partition&)>& fn);

/// Materialized canonical-order listing. Inconsistent constraints yield an
/// empty sequence, not an error.
std::vector<Partition> enumerate(long long N, const ConstraintSet& c);

/// |{pi : |pi| = N, pi satisfies c}| by direct enumeration (no counting
/// shortcuts); the per-norm oracle for the inequality theorems.
long long count_by_enumeration(long long N, const ConstraintSet& c);

/// Generating function of the set: coefficient of q^N counts partitions of
/// N satisfying c, for all N < prec. Computed by exact integer
/// part-by-part counting, independent of the closed-form builders.
PowerSeries genfun_of_set(const ConstraintSet& c, std::size_t prec);

enum class Weight {
  AlternatingSmallestPart,   ///< (-1)^{s(pi)+1}
  TStatistic,                ///< t(pi)
  AlternatingRankOnDistinct  ///< (-1)^{r(pi)}, requires max_frequency = 1
};

/// Sum of weight(pi) * q^|pi| over the partitions matching c, exactly.
/// TStatistic requires an unrestricted nonempty family;
/// AlternatingRankOnDistinct requires a distinct-part family.
PowerSeries weighted_genfun(const ConstraintSet& c, Weight w,
                            std::size_t prec);

}  // namespace qlab
