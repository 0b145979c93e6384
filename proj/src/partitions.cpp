#include "qlab/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qlab {

Partition Partition::from_pairs(std::vector<std::pair<int, long long>> pairs) {
  std::map<int, long long> acc;
  for (auto& [part, freq] : pairs) {
    if (part <= 0) throw std::invalid_argument("Partition: part must be >= 1");
    if (freq < 0) throw std::invalid_argument("Partition: negative frequency");
    if (freq > 0) acc[part] += freq;
  }
  Partition p;
  p.pairs_.assign(acc.begin(), acc.end());
  return p;
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::pair<int, long long>> pairs;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "-") continue;
    auto caret = tok.find('^');
    int part = std::stoi(tok.substr(0, caret));
    long long freq =
        caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
    pairs.emplace_back(part, freq);
  }
  return from_pairs(std::move(pairs));
}

long long Partition::norm() const {
  long long n = 0;
  for (auto& [part, freq] : pairs_) n += static_cast<long long>(part) * freq;
  return n;
}

long long Partition::freq(int part) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), part,
      [](const auto& pr, int v) { return pr.first < v; });
  return (it != pairs_.end() && it->first == part) ? it->second : 0;
}

int Partition::smallest() const {
  if (empty()) throw std::domain_error("Partition: empty has no smallest part");
  return pairs_.front().first;
}

int Partition::largest() const {
  if (empty()) throw std::domain_error("Partition: empty has no largest part");
  return pairs_.back().first;
}

long long Partition::part_count() const {
  long long n = 0;
  for (auto& [part, freq] : pairs_) n += freq;
  return n;
}

std::string Partition::to_string() const {
  if (empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (auto& [part, freq] : pairs_) {
    if (!first) os << ' ';
    os << part << '^' << freq;
    first = false;
  }
  return os.str();
}

std::string Partition::to_string_compact() const {
  if (empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (auto& [part, freq] : pairs_) {
    if (!first) os << ' ';
    os << part;
    if (freq > 1) os << '^' << freq;
    first = false;
  }
  return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
  // Compare weakly decreasing part lists lexicographically, walking the
  // run-length pairs from the largest part down.
  auto ia = a.pairs().rbegin(), ea = a.pairs().rend();
  auto ib = b.pairs().rbegin(), eb = b.pairs().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) {
      // Same part, different run length: the shorter run continues with a
      // strictly smaller part (or ends), so it is lexicographically smaller.
      return ia->second < ib->second;
    }
  }
  return ia == ea && ib != eb;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto& [part, freq] : p.pairs_) {
    h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ull;
    h = (h ^ static_cast<std::size_t>(freq)) * 0x100000001b3ull;
  }
  return h;
}

PartStats stats(const Partition& p) {
  if (p.empty())
    throw std::domain_error("stats: undefined on the empty partition");
  PartStats s;
  s.smallest = p.smallest();
  s.largest = p.largest();
  s.count = p.part_count();
  s.rank = s.largest - s.count;
  return s;
}

int t_stat(const Partition& p) {
  int t = 0;
  while (p.freq(t + 1) % 2 == 1) ++t;
  return t;
}

bool ConstraintSet::matches(const Partition& p) const {
  if (p.empty()) {
    if (nonempty || smallest_part_equals || smallest_part_at_least ||
        smallest_part_parity)
      return false;
    if (freq_of_part_equals && freq_of_part_equals->second != 0) return false;
    return true;
  }
  int s = p.smallest();
  int l = p.largest();
  if (min_part && s < *min_part) return false;
  if (max_part && l > *max_part) return false;
  if (smallest_part_equals && s != *smallest_part_equals) return false;
  if (smallest_part_at_least && s < *smallest_part_at_least) return false;
  if (largest_minus_smallest_at_most &&
      l - s > *largest_minus_smallest_at_most)
    return false;
  if (smallest_part_parity) {
    bool odd = (s % 2 == 1);
    if ((*smallest_part_parity == Parity::Odd) != odd) return false;
  }
  for (auto& [part, freq] : p.pairs()) {
    if (forbidden_parts.count(part)) return false;
    if (max_frequency && freq > *max_frequency) return false;
  }
  if (freq_of_part_equals &&
      p.freq(freq_of_part_equals->first) != freq_of_part_equals->second)
    return false;
  return true;
}

bool ConstraintSet::smallest_sensitive() const {
  return smallest_part_equals.has_value() ||
         smallest_part_at_least.has_value() ||
         smallest_part_parity.has_value() ||
         largest_minus_smallest_at_most.has_value();
}

ConstraintSet ConstraintSet::unrestricted() { return {}; }

ConstraintSet ConstraintSet::all_nonempty() {
  ConstraintSet c;
  c.nonempty = true;
  return c;
}

ConstraintSet ConstraintSet::set_A(int L, int i) {
  if (L < 1 || (i != 1 && i != 2))
    throw std::invalid_argument("set_A: need L >= 1, i in {1,2}");
  ConstraintSet c;
  c.nonempty = true;
  if (i == 1) {
    c.smallest_part_equals = 1;
    c.max_part = L + 1;
    if (L >= 2)
      c.forbidden_parts.insert(L);  // f_L = 0
    else
      c.freq_of_part_equals = {1, 1};  // L = 1: exactly one part 1
  } else {
    c.min_part = 2;
    c.max_part = L + 1;
  }
  return c;
}

ConstraintSet ConstraintSet::set_B(int L, int i) {
  if (L < 1 || (i != 1 && i != 2))
    throw std::invalid_argument("set_B: need L >= 1, i in {1,2}");
  ConstraintSet c;
  c.nonempty = true;
  if (i == 1) {
    c.smallest_part_equals = 2;
    c.max_part = L + 2;
    if (L >= 2)
      c.forbidden_parts.insert(L + 1);  // f_{L+1} = 0
    else
      c.freq_of_part_equals = {2, 1};  // L = 1: exactly one part 2
  } else {
    c.min_part = 3;
    c.max_part = L + 2;
  }
  return c;
}

ConstraintSet ConstraintSet::set_C(int L, int s, int i) {
  if (L < 1 || s < 1 || (i != 1 && i != 2))
    throw std::invalid_argument("set_C: need L >= 1, s >= 1, i in {1,2}");
  ConstraintSet c;
  c.nonempty = true;
  if (i == 1) {
    c.smallest_part_equals = s;
    c.max_part = L + s;
    c.forbidden_parts.insert(L + s - 1);
  } else {
    c.min_part = s + 1;
    c.max_part = L + s;
  }
  return c;
}

ConstraintSet ConstraintSet::set_Cstar(int L, int s) {
  if (s < 1 || L < s + 1)
    throw std::invalid_argument("set_Cstar: need s >= 1 and L >= s + 1");
  ConstraintSet c;
  c.nonempty = true;
  c.smallest_part_equals = s;
  c.max_part = L + s;
  c.forbidden_parts.insert(L);
  return c;
}

ConstraintSet ConstraintSet::bounded_gap(int L) {
  ConstraintSet c;
  c.nonempty = true;
  c.largest_minus_smallest_at_most = L;
  return c;
}

ConstraintSet ConstraintSet::bounded_gap_smallest(int L, int s) {
  ConstraintSet c = bounded_gap(L);
  c.smallest_part_equals = s;
  return c;
}

ConstraintSet ConstraintSet::bounded_gap_smallest_at_least(int L, int s) {
  ConstraintSet c = bounded_gap(L);
  c.smallest_part_at_least = s;
  return c;
}

ConstraintSet ConstraintSet::distinct_nonempty() {
  ConstraintSet c;
  c.nonempty = true;
  c.max_frequency = 1;
  return c;
}

namespace {

// Recursive-descent enumeration over (part, frequency) chunks, largest part
// first, emitting canonical ascending order: outer part ascending, then its
// frequency ascending, then the tail recursively.
class Enumerator {
 public:
  Enumerator(long long N, const ConstraintSet& c,
             const std::function<void(const Partition&)>* fn, long long* counter)
      : c_(c), fn_(fn), counter_(counter) {
    lo_ = 1;
    if (c.min_part) lo_ = std::max<long long>(lo_, *c.min_part);
    if (c.smallest_part_at_least)
      lo_ = std::max<long long>(lo_, *c.smallest_part_at_least);
    if (c.smallest_part_equals)
      lo_ = std::max<long long>(lo_, *c.smallest_part_equals);
    run(N);
  }

 private:
  bool allowed(int p) const {
    if (c_.forbidden_parts.count(p)) return false;
    if (c_.freq_of_part_equals && c_.freq_of_part_equals->first == p &&
        c_.freq_of_part_equals->second == 0)
      return false;
    return true;
  }

  void run(long long N) {
    if (c_.largest_minus_smallest_at_most &&
        *c_.largest_minus_smallest_at_most < 0)
      return;  // inconsistent bounds: empty sequence, not an error
    if (N == 0) {
      emit_if_ok();
      return;
    }
    long long hi = N;
    if (c_.max_part) hi = std::min<long long>(hi, *c_.max_part);
    for (long long l = lo_; l <= hi; ++l) {
      if (!allowed(static_cast<int>(l))) continue;
      long long lo_tail = lo_;
      if (c_.largest_minus_smallest_at_most)
        lo_tail = std::max<long long>(lo_tail,
                                      l - *c_.largest_minus_smallest_at_most);
      descend(N, static_cast<int>(l), static_cast<int>(lo_tail));
    }
  }

  void descend(long long budget, int part, int lo_tail) {
    long long max_f = budget / part;
    if (c_.max_frequency) max_f = std::min(max_f, *c_.max_frequency);
    if (c_.freq_of_part_equals && c_.freq_of_part_equals->first == part)
      max_f = std::min(max_f, c_.freq_of_part_equals->second);
    for (long long f = 1; f <= max_f; ++f) {
      stack_.emplace_back(part, f);
      long long rest = budget - part * f;
      if (rest == 0) {
        emit_if_ok();
      } else {
        int next_hi = std::min<long long>(part - 1, rest);
        for (int p = lo_tail; p <= next_hi; ++p)
          if (allowed(p)) descend(rest, p, lo_tail);
      }
      stack_.pop_back();
    }
  }

  void emit_if_ok() {
    if (stack_.empty()) {
      if (c_.nonempty || c_.smallest_part_equals || c_.smallest_part_at_least ||
          c_.smallest_part_parity)
        return;
      if (c_.freq_of_part_equals && c_.freq_of_part_equals->second != 0) return;
    } else {
      int s = stack_.back().first;
      if (c_.smallest_part_equals && s != *c_.smallest_part_equals) return;
      if (c_.smallest_part_parity) {
        bool odd = (s % 2 == 1);
        if ((*c_.smallest_part_parity == Parity::Odd) != odd) return;
      }
      if (c_.freq_of_part_equals) {
        long long f = 0;
        for (auto& [p, fr] : stack_)
          if (p == c_.freq_of_part_equals->first) f = fr;
        if (f != c_.freq_of_part_equals->second) return;
      }
    }
    if (counter_) {
      ++*counter_;
      return;
    }
    scratch_.assign(stack_.rbegin(), stack_.rend());
    Partition p;
    p = Partition::from_pairs(scratch_);
    (*fn_)(p);
  }

  const ConstraintSet& c_;
  const std::function<void(const Partition&)>* fn_;
  long long* counter_;
  long long lo_ = 1;
  std::vector<std::pair<int, long long>> stack_;  // largest part first
  std::vector<std::pair<int, long long>> scratch_;
};

}  // namespace

void for_each_partition(long long N, const ConstraintSet& c,
                        const std::function<void(const Partition&)>& fn) {
  if (N < 0) throw std::invalid_argument("for_each_partition: N < 0");
  Enumerator(N, c, &fn, nullptr);
}

std::vector<Partition> enumerate(long long N, const ConstraintSet& c) {
  std::vector<Partition> out;
  for_each_partition(N, c, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long long count_by_enumeration(long long N, const ConstraintSet& c) {
  if (N < 0) throw std::invalid_argument("count_by_enumeration: N < 0");
  long long n = 0;
  Enumerator(N, c, nullptr, &n);
  return n;
}

namespace {

// dp[n] += ways to write n from unbounded copies of the given parts.
void knapsack_unbounded(std::vector<Int>& dp, const std::vector<int>& parts) {
  std::size_t prec = dp.size();
  for (int p : parts)
    for (std::size_t n = static_cast<std::size_t>(p); n < prec; ++n)
      dp[n] += dp[n - p];
}

void knapsack_bounded(std::vector<Int>& dp, const std::vector<int>& parts,
                      long long max_freq) {
  std::size_t prec = dp.size();
  for (int p : parts) {
    if (max_freq == 1) {
      for (std::size_t n = prec; n-- > static_cast<std::size_t>(p);)
        dp[n] += dp[n - p];
    } else {
      std::vector<Int> nd(prec);
      for (std::size_t n = 0; n < prec; ++n) {
        if (dp[n].is_zero()) continue;
        for (long long j = 0; j <= max_freq; ++j) {
          std::size_t m = n + static_cast<std::size_t>(j * p);
          if (m >= prec) break;
          nd[m] += dp[n];
        }
      }
      dp = std::move(nd);
    }
  }
}

std::vector<int> allowed_parts(const ConstraintSet& c, int lo, long long hi) {
  std::vector<int> parts;
  for (long long p = lo; p <= hi; ++p) {
    if (c.forbidden_parts.count(static_cast<int>(p))) continue;
    if (c.freq_of_part_equals && c.freq_of_part_equals->first == p) continue;
    parts.push_back(static_cast<int>(p));
  }
  return parts;
}

// Counts with smallest part exactly s under c, added into out with the
// given signed multiplier.
void add_by_smallest(const ConstraintSet& c, int s, std::vector<Int>& out,
                     const Int& mult) {
  std::size_t prec = out.size();
  long long hi = static_cast<long long>(prec) - 1;
  if (c.max_part) hi = std::min<long long>(hi, *c.max_part);
  if (c.largest_minus_smallest_at_most)
    hi = std::min<long long>(hi, s + *c.largest_minus_smallest_at_most);
  if (hi < s) return;

  // Forced copies of s itself.
  long long forced = 1;
  bool pin_s = false;
  if (c.freq_of_part_equals && c.freq_of_part_equals->first == s) {
    forced = c.freq_of_part_equals->second;
    if (forced < 1) return;  // smallest part s needs f_s >= 1
    pin_s = true;
  }
  if (c.max_frequency && forced > *c.max_frequency) return;
  long long base = forced * s;
  if (base >= static_cast<long long>(prec)) return;

  std::vector<Int> dp(prec - static_cast<std::size_t>(base));
  dp[0] = 1;
  // Remaining parts in [s, hi]; s excluded when its frequency is pinned,
  // capacity-reduced when a max frequency applies.
  std::vector<int> parts = allowed_parts(c, s + 1, hi);
  if (!pin_s && !c.forbidden_parts.count(s)) {
    if (!c.max_frequency) {
      parts.insert(parts.begin(), s);
      knapsack_unbounded(dp, parts);
    } else {
      knapsack_bounded(dp, parts, *c.max_frequency);
      if (*c.max_frequency - forced > 0)
        knapsack_bounded(dp, {s}, *c.max_frequency - forced);
    }
  } else {
    if (!c.max_frequency)
      knapsack_unbounded(dp, parts);
    else
      knapsack_bounded(dp, parts, *c.max_frequency);
  }
  // Other pinned frequencies (parts > s) shift the whole count.
  if (c.freq_of_part_equals && c.freq_of_part_equals->first != s) {
    auto [p, f] = *c.freq_of_part_equals;
    if (f > 0) {
      if (p < s || p > hi) return;  // pinned part impossible here
      if (c.max_frequency && f > *c.max_frequency) return;
      base += static_cast<long long>(p) * f;
      if (base >= static_cast<long long>(prec)) return;
    }
  }
  for (std::size_t n = 0; n + static_cast<std::size_t>(base) < prec; ++n)
    if (!dp[n].is_zero()) out[n + static_cast<std::size_t>(base)] += mult * dp[n];
}

bool smallest_part_admissible(const ConstraintSet& c, int s) {
  if (c.smallest_part_equals && s != *c.smallest_part_equals) return false;
  if (c.smallest_part_at_least && s < *c.smallest_part_at_least) return false;
  if (c.min_part && s < *c.min_part) return false;
  if (c.max_part && s > *c.max_part) return false;
  if (c.forbidden_parts.count(s)) return false;
  if (c.smallest_part_parity &&
      ((*c.smallest_part_parity == Parity::Odd) != (s % 2 == 1)))
    return false;
  return true;
}

}  // namespace

PowerSeries genfun_of_set(const ConstraintSet& c, std::size_t prec) {
  std::vector<Int> out(prec);
  if (c.smallest_sensitive()) {
    for (int s = 1; s < static_cast<int>(prec); ++s) {
      if (!smallest_part_admissible(c, s)) continue;
      add_by_smallest(c, s, out, Int(1));
    }
  } else {
    long long hi = static_cast<long long>(prec) - 1;
    if (c.max_part) hi = std::min<long long>(hi, *c.max_part);
    int lo = c.min_part.value_or(1);
    std::vector<Int> dp(prec);
    dp[0] = 1;
    std::vector<int> parts = allowed_parts(c, lo, hi);
    if (!c.max_frequency)
      knapsack_unbounded(dp, parts);
    else
      knapsack_bounded(dp, parts, *c.max_frequency);
    long long base = 0;
    bool possible = true;
    if (c.freq_of_part_equals) {
      auto [p, f] = *c.freq_of_part_equals;
      if (f > 0) {
        if (p < lo || p > hi || (c.max_frequency && f > *c.max_frequency))
          possible = false;
        base = static_cast<long long>(p) * f;
      }
    }
    if (possible && base < static_cast<long long>(prec)) {
      for (std::size_t n = 0; n + static_cast<std::size_t>(base) < prec; ++n)
        out[n + static_cast<std::size_t>(base)] = dp[n];
      if (c.nonempty && base == 0) out[0] -= 1;
    }
  }
  // The empty partition never reaches the smallest-part loop; account
  // for it when the constraints admit it.
  if (c.smallest_sensitive() && c.matches(Partition{})) out[0] += 1;
  return PowerSeries::from_coeffs(std::move(out));
}

PowerSeries weighted_genfun(const ConstraintSet& c, Weight w,
                            std::size_t prec) {
  std::vector<Int> out(prec);
  switch (w) {
    case Weight::AlternatingSmallestPart: {
      for (int s = 1; s < static_cast<int>(prec); ++s) {
        if (!smallest_part_admissible(c, s)) continue;
        add_by_smallest(c, s, out, Int(s % 2 == 1 ? 1 : -1));
      }
      break;
    }
    case Weight::TStatistic: {
      ConstraintSet plain = ConstraintSet::all_nonempty();
      if (!(c == ConstraintSet{} || c.nonempty) || c.min_part || c.max_part ||
          !c.forbidden_parts.empty() || c.smallest_sensitive() ||
          c.max_frequency || c.freq_of_part_equals)
        throw std::invalid_argument(
            "weighted_genfun: t-statistic weight applies to the unrestricted "
            "nonempty family only");
      // sum_pi t(pi) q^|pi| = sum_{j>=1} #{pi : f_1..f_j all odd}. For fixed
      // j, force one copy of each part 1..j, then parts {2i : i <= j} and
      // {i : i > j} freely.
      for (long long j = 1; j * (j + 1) / 2 < static_cast<long long>(prec);
           ++j) {
        long long base = j * (j + 1) / 2;
        std::vector<Int> dp(prec - static_cast<std::size_t>(base));
        dp[0] = 1;
        std::vector<int> parts;
        for (long long i = 1; i <= j; ++i)
          if (2 * i < static_cast<long long>(dp.size()))
            parts.push_back(static_cast<int>(2 * i));
        for (long long i = j + 1; i < static_cast<long long>(dp.size()); ++i)
          parts.push_back(static_cast<int>(i));
        knapsack_unbounded(dp, parts);
        for (std::size_t n = 0; n + static_cast<std::size_t>(base) < prec; ++n)
          out[n + static_cast<std::size_t>(base)] += dp[n];
      }
      break;
    }
    case Weight::AlternatingRankOnDistinct: {
      if (!c.max_frequency || *c.max_frequency != 1)
        throw std::invalid_argument(
            "weighted_genfun: rank weight requires all frequencies <= 1 "
            "(set max_frequency = 1)");
      // By largest part l: pi = {l} + S, S subset of {1..l-1};
      // (-1)^{r} = (-1)^{l-1} (-1)^{|S|}. signed[n] tracks the
      // (-1)^{|S|}-weighted subset sums of {1..l-1}.
      std::vector<Int> signed_(prec);
      signed_[0] = 1;
      for (std::size_t l = 1; l < prec; ++l) {
        Int sgn = (l % 2 == 1) ? 1 : -1;  // (-1)^{l-1}
        for (std::size_t n = 0; n + l < prec; ++n)
          if (!signed_[n].is_zero()) out[n + l] += sgn * signed_[n];
        for (std::size_t n = prec; n-- > l;) signed_[n] -= signed_[n - l];
      }
      break;
    }
  }
  return PowerSeries::from_coeffs(std::move(out));
}

}  // namespace qlab
