#include "qlab/scan.hpp"

#include "qlab/genfun.hpp"
#include "qlab/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qlab {

Range Range::parse(const std::string& text) {
  auto pos = text.find("..");
  Range r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, pos));
      r.hi = std::stoll(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("Range: expected 'a..b' or 'n', got '" +
                                text + "'");
  }
  if (r.lo > r.hi)
    throw std::invalid_argument("Range: empty range '" + text + "'");
  return r;
}

std::string Range::to_string() const {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

std::string verdict_name(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::NoNegatives: return "no-negatives";
    case ScanVerdict::NegativesThenClean: return "negatives-then-clean";
    case ScanVerdict::NegativesAtFrontier: return "negatives-at-frontier";
  }
  return "?";
}

namespace {

void fill_negativity(const PowerSeries& x, std::size_t clean_tail,
                     std::vector<std::size_t>& negatives,
                     std::optional<std::size_t>& last,
                     std::vector<std::size_t>* tail_zeros,
                     ScanVerdict& verdict) {
  negatives = x.negative_indices();
  last = negatives.empty() ? std::nullopt
                           : std::optional<std::size_t>(negatives.back());
  if (tail_zeros) {
    tail_zeros->clear();
    for (std::size_t n = x.precision() - clean_tail; n < x.precision(); ++n)
      if (x[n].is_zero()) tail_zeros->push_back(n);
  }
  if (!last)
    verdict = ScanVerdict::NoNegatives;
  else if (*last < x.precision() - clean_tail)
    verdict = ScanVerdict::NegativesThenClean;
  else
    verdict = ScanVerdict::NegativesAtFrontier;
}

}  // namespace

std::vector<HScanReport> scan_H(Range L, Range s, Range k, std::size_t prec,
                                std::size_t clean_tail) {
  if (clean_tail == 0 || clean_tail >= prec)
    throw std::invalid_argument("scan_H: need 0 < clean_tail < prec");
  std::vector<HScanReport> out;
  for (long long sv = s.lo; sv <= s.hi; ++sv) {
    for (long long Lv = std::max(L.lo, sv + 1); Lv <= L.hi; ++Lv) {
      for (long long kv = std::max(k.lo, sv + 1); kv <= k.hi; ++kv) {
        HScanReport rep;
        rep.L = Lv;
        rep.s = sv;
        rep.k = kv;
        rep.clean_tail = clean_tail;
        std::size_t p = prec;
        for (int attempt = 0;; ++attempt) {
          PowerSeries h = h_lsk(Lv, sv, kv, p);
          fill_negativity(h, clean_tail, rep.negative_indices,
                          rep.last_negative, &rep.tail_zero_indices,
                          rep.verdict);
          rep.prec = p;
          if (rep.verdict != ScanVerdict::NegativesAtFrontier || attempt == 1)
            break;
          p *= 2;  // single retry at doubled order
          rep.retried = true;
        }
        out.push_back(std::move(rep));
      }
    }
  }
  if (out.empty())
    throw std::invalid_argument(
        "scan_H: no grid point satisfies k >= s+1 and L >= s+1");
  std::sort(out.begin(), out.end(),
            [](const HScanReport& a, const HScanReport& b) {
              return std::tie(a.L, a.s, a.k) < std::tie(b.L, b.s, b.k);
            });
  return out;
}

SetScanReport scan_set_conjecture(SetVariant v, long long L, long long s,
                                  std::size_t prec) {
  SetScanReport rep;
  rep.variant = v;
  rep.L = L;
  rep.s = s;
  rep.prec = prec;
  ConstraintSet big =
      v == SetVariant::C
          ? ConstraintSet::set_C(static_cast<int>(L), static_cast<int>(s), 1)
          : ConstraintSet::set_Cstar(static_cast<int>(L),
                                     static_cast<int>(s));
  ConstraintSet small =
      ConstraintSet::set_C(static_cast<int>(L), static_cast<int>(s), 2);
  for (long long N = 1; N < static_cast<long long>(prec); ++N) {
    long long c1 = count_by_enumeration(N, big);
    long long c2 = count_by_enumeration(N, small);
    if (c1 < c2) rep.violating_norms.push_back(N);
  }
  if (!rep.violating_norms.empty())
    rep.max_violating = rep.violating_norms.back();
  return rep;
}

long long m_evidence(const std::vector<SetScanReport>& slice) {
  long long m = 1;
  for (const auto& rep : slice)
    if (rep.max_violating) m = std::max(m, *rep.max_violating + 1);
  return m;
}

std::vector<G2ScanReport> scan_G2(Range L, std::size_t prec,
                                  std::size_t clean_tail) {
  if (L.lo < 3)
    throw std::invalid_argument("scan_G2: L >= 3 required");
  if (clean_tail == 0 || clean_tail >= prec)
    throw std::invalid_argument("scan_G2: need 0 < clean_tail < prec");
  std::vector<G2ScanReport> out;
  for (long long Lv = L.lo; Lv <= L.hi; ++Lv) {
    G2ScanReport rep;
    rep.L = Lv;
    rep.prec = prec;
    PowerSeries g = g_l2(Lv, prec);
    g += PowerSeries::monomial(1, 3, prec);
    rep.corrections.push_back(3);
    if (Lv == 3 || Lv == 4) {
      g += PowerSeries::monomial(1, 9, prec);
      rep.corrections.push_back(9);
    }
    fill_negativity(g, clean_tail, rep.negative_indices, rep.last_negative,
                    nullptr, rep.verdict);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace qlab
