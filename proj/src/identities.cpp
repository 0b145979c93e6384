#include "qlab/identities.hpp"

#include "qlab/genfun.hpp"
#include "qlab/maps.hpp"
#include "qlab/partitions.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qlab {

std::string check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Equality: return "equality";
    case CheckKind::NonNeg: return "nonneg";
    case CheckKind::EqualityAndNonNeg: return "equality+nonneg";
    case CheckKind::CountInequality: return "inequality-of-counts";
  }
  return "?";
}

std::string ParamPoint::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (L) { os << "L=" << *L; any = true; }
  if (s) { os << (any ? " " : "") << "s=" << *s; any = true; }
  if (k) { os << (any ? " " : "") << "k=" << *k; any = true; }
  if (!any) os << "-";
  return os.str();
}

bool param_less(const ParamPoint& a, const ParamPoint& b) {
  auto key = [](const ParamPoint& p) {
    return std::make_tuple(p.L.value_or(LLONG_MIN), p.s.value_or(LLONG_MIN),
                           p.k.value_or(LLONG_MIN));
  };
  return key(a) < key(b);
}

namespace {

VerifyReport base_report(const std::string& id, const ParamPoint& pt,
                         std::size_t prec) {
  VerifyReport r;
  r.id = id;
  r.point = pt;
  r.prec = prec;
  return r;
}

// Compares a chain of series pairwise; the note names the first mismatched
// pair.
VerifyReport equality_chain(
    const std::string& id, const ParamPoint& pt, std::size_t prec,
    const std::vector<std::pair<std::string, PowerSeries>>& sides) {
  VerifyReport r = base_report(id, pt, prec);
  r.pass = true;
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
    auto d = first_difference(sides[i].second, sides[i + 1].second);
    if (d) {
      r.pass = false;
      r.first_discrepancy = d;
      r.note = sides[i].first + " != " + sides[i + 1].first +
               " at exponent " + std::to_string(*d);
      return r;
    }
  }
  return r;
}

VerifyReport nonneg_report(const std::string& id, const ParamPoint& pt,
                           std::size_t prec, const PowerSeries& x,
                           const std::string& label) {
  VerifyReport r = base_report(id, pt, prec);
  auto fn = x.first_negative();
  if (!fn) {
    r.pass = true;
  } else {
    r.pass = false;
    r.first_discrepancy = fn;
    r.negative_indices = x.negative_indices();
    r.note = label + " has a negative coefficient at exponent " +
             std::to_string(*fn);
  }
  return r;
}

VerifyReport count_inequality_report(
    const std::string& id, const ParamPoint& pt, std::size_t prec,
    const ConstraintSet& big, const ConstraintSet& small,
    const std::function<long long(long long)>& correction) {
  VerifyReport r = base_report(id, pt, prec);
  r.pass = true;
  for (long long N = 1; N < static_cast<long long>(prec); ++N) {
    long long c1 = count_by_enumeration(N, big) + correction(N);
    long long c2 = count_by_enumeration(N, small);
    if (c1 < c2) {
      r.pass = false;
      r.first_discrepancy = static_cast<std::size_t>(N);
      r.note = "count inequality violated at norm " + std::to_string(N) +
               " (" + std::to_string(c1) + " < " + std::to_string(c2) + ")";
      return r;
    }
  }
  return r;
}

std::vector<ParamPoint> l_grid(long long lo, long long hi) {
  std::vector<ParamPoint> g;
  for (long long L = lo; L <= hi; ++L) g.push_back(ParamPoint{L, {}, {}});
  return g;
}

std::vector<ParamPoint> l_grid_odd(long long lo, long long hi) {
  std::vector<ParamPoint> g;
  for (long long L = lo; L <= hi; L += 2) g.push_back(ParamPoint{L, {}, {}});
  return g;
}

PowerSeries times_one_minus_qL(PowerSeries x, long long L) {
  if (L < static_cast<long long>(x.precision()))
    x.mul_binomial(-1, static_cast<std::size_t>(L));
  return x;
}

// ---- transform sampling ----------------------------------------------

struct Draw {
  TransformParams p;
};

// Deterministic stream of candidate monomial assignments.
class ParamSampler {
 public:
  explicit ParamSampler(unsigned seed) : rng_(seed) {}
  TransformParams next() {
    TransformParams p;
    p.a = {pick_sign(), pick_exp(0, 6)};
    p.b = {pick_sign(), pick_exp(0, 6)};
    p.c = {pick_sign(), pick_exp(1, 6)};
    p.z = {pick_sign(), pick_exp(1, 4)};
    return p;
  }

 private:
  int pick_sign() { return (rng_() & 1) ? 1 : -1; }
  long long pick_exp(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % (hi - lo + 1));
  }
  std::mt19937 rng_;
};

VerifyReport transform_record_check(const std::string& id, Transform t,
                                    const ParamPoint& pt, std::size_t prec) {
  VerifyReport r = base_report(id, pt, prec);
  ParamSampler sampler(20250809u + static_cast<unsigned>(t));
  int admissible = 0, rejected = 0;
  for (int attempt = 0; attempt < 20000 && admissible < 25; ++attempt) {
    TransformParams p = sampler.next();
    TransformCheck c = check_transform(t, p, prec);
    if (c.status == TransformCheck::Status::Rejected) {
      ++rejected;
      continue;
    }
    ++admissible;
    if (c.status == TransformCheck::Status::Fail) {
      r.pass = false;
      r.first_discrepancy = c.first_discrepancy;
      r.note = transform_name(t) + " fails at a=" + p.a.to_string() +
               " b=" + p.b.to_string() + " c=" + p.c.to_string() +
               " z=" + p.z.to_string() + " (exponent " +
               std::to_string(*c.first_discrepancy) + ")";
      return r;
    }
  }
  if (admissible < 25) {
    r.pass = false;
    r.note = "could not draw 25 admissible parameter assignments";
    return r;
  }
  // The specializations behind the bounded-difference identities:
  // a = q^{L+1}, b = -q, c = -q^2, z = q.
  if (t != Transform::QBinomial) {
    for (long long L = 1; L <= 8; ++L) {
      TransformParams p;
      p.a = MonomialParam::plus(L + 1);
      p.b = MonomialParam::minus(1);
      p.c = MonomialParam::minus(2);
      p.z = MonomialParam::plus(1);
      TransformCheck c = check_transform(t, p, prec);
      bool expect_reject = (t == Transform::Heine3 && L >= 2);
      if (expect_reject) {
        if (c.status != TransformCheck::Status::Rejected) {
          r.pass = false;
          r.note = "heine3 specialization at L=" + std::to_string(L) +
                   " should be rejected (derived c/a has negative exponent)";
          return r;
        }
        continue;
      }
      if (c.status != TransformCheck::Status::Pass) {
        r.pass = false;
        r.first_discrepancy = c.first_discrepancy;
        r.note = transform_name(t) + " specialization fails at L=" +
                 std::to_string(L) +
                 (c.note.empty() ? "" : (" (" + c.note + ")"));
        return r;
      }
    }
  } else {
    TransformParams p;
    p.a = MonomialParam::plus(2);
    p.z = MonomialParam::plus(3);
    TransformCheck c = check_transform(t, p, prec);
    if (c.status != TransformCheck::Status::Pass) {
      r.pass = false;
      r.first_discrepancy = c.first_discrepancy;
      r.note = "q-binomial theorem fails at a=q^2, z=q^3";
      return r;
    }
  }
  r.pass = true;
  r.note = std::to_string(admissible) + " admissible assignments pass (" +
           std::to_string(rejected) + " rejected)";
  return r;
}

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> recs;
  auto add = [&](IdentityRecord rec) { recs.push_back(std::move(rec)); };

  add({"thm-1.1",
       "count of A_{L,1} partitions dominates A_{L,2} at every norm",
       CheckKind::CountInequality, false, l_grid(2, 10), 101,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         return count_inequality_report(
             "thm-1.1", pt, prec, ConstraintSet::set_A(L, 1),
             ConstraintSet::set_A(L, 2), [](long long) { return 0; });
       }});

  add({"thm-1.2",
       "alternating-smallest-part sum equals the t-statistic sum, both "
       "closed forms included",
       CheckKind::Equality, false, {ParamPoint{}}, 200,
       [](const ParamPoint& pt, std::size_t prec) {
         auto u = ConstraintSet::all_nonempty();
         return equality_chain(
             "thm-1.2", pt, prec,
             {{"alternating-smallest-part enumeration",
               weighted_genfun(u, Weight::AlternatingSmallestPart, prec)},
              {"t-statistic enumeration",
               weighted_genfun(u, Weight::TStatistic, prec)},
              {"lhs closed form", weighted_inf_lhs(prec)},
              {"rhs closed form", t_sum_rhs(prec)}});
       }});

  add({"thm-1.3",
       "bounded-gap alternating sum is non-negative and matches its "
       "enumeration oracle",
       CheckKind::EqualityAndNonNeg, false, l_grid(1, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         PowerSeries w = weighted_ls(L, prec);
         PowerSeries oracle = weighted_genfun(
             ConstraintSet::bounded_gap(static_cast<int>(L)),
             Weight::AlternatingSmallestPart, prec);
         VerifyReport r =
             equality_chain("thm-1.3", pt, prec,
                            {{"weighted_ls", w}, {"enumeration", oracle}});
         if (!r.pass) return r;
         return nonneg_report("thm-1.3", pt, prec, w, "weighted_ls");
       }});

  add({"remark-L0-mod4",
       "L=0 series: negatives confined to norms divisible by 4; value -1 "
       "at norm 4",
       CheckKind::NonNeg, false, {ParamPoint{}}, 201,
       [](const ParamPoint& pt, std::size_t prec) {
         VerifyReport r = base_report("remark-L0-mod4", pt, prec);
         PowerSeries m = mod4_series(prec);
         if (auto d = first_difference(m, weighted_ls(0, prec))) {
           r.note = "mod4_series != weighted_ls(0) at exponent " +
                    std::to_string(*d);
           return r;
         }
         for (std::size_t n : m.negative_indices()) {
           if (n % 4 != 0) {
             r.first_discrepancy = n;
             r.note = "negative coefficient at norm " + std::to_string(n) +
                      " not divisible by 4";
             return r;
           }
         }
         if (prec > 4 && m[4] != -1) {
           r.note = "coefficient at norm 4 is " + m[4].str() + ", not -1";
           return r;
         }
         r.pass = true;
         return r;
       }});

  add({"thm-3.2",
       "B_{L,1} count plus delta corrections dominates B_{L,2} at every "
       "norm",
       CheckKind::CountInequality, false, l_grid(3, 10), 101,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         return count_inequality_report(
             "thm-3.2", pt, prec, ConstraintSet::set_B(L, 1),
             ConstraintSet::set_B(L, 2), [L](long long N) {
               return (N == 3 ? 1 : 0) + (N == 9 && L == 4 ? 1 : 0);
             });
       }});

  add({"thm-4.1", "H_L1 is non-negative for L >= 2", CheckKind::NonNeg,
       false, l_grid(2, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         return nonneg_report("thm-4.1", pt, prec, h_l1(*pt.L, prec), "H_L1");
       }});

  add({"eq-4.4-equality",
       "H_L1 equals its manifestly non-negative rewrite (valid down to "
       "L=1)",
       CheckKind::Equality, false, l_grid(1, 12), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain(
             "eq-4.4-equality", pt, prec,
             {{"H_L1", h_l1(*pt.L, prec)},
              {"H_L1_secondary", h_l1_secondary(*pt.L, prec)}});
       }});

  add({"thm-4.2", "finite summation formula", CheckKind::Equality, false,
       l_grid(1, 20), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain("thm-4.2", pt, prec,
                               {{"summation_lhs", summation_lhs(*pt.L, prec)},
                                {"summation_rhs", summation_rhs(*pt.L, prec)}});
       }});

  add({"cor-4.3", "limit of the summation formula", CheckKind::Equality,
       false, {ParamPoint{}}, 200,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain("cor-4.3", pt, prec,
                               {{"corollary_lhs", corollary_lhs(prec)},
                                {"corollary_rhs", corollary_rhs(prec)}});
       }});

  add({"thm-4.4", "H_L2 is non-negative for L >= 3", CheckKind::NonNeg,
       false, l_grid(3, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         return nonneg_report("thm-4.4", pt, prec, h_l2(*pt.L, prec), "H_L2");
       }});

  add({"eq-4.6",
       "three-term rewrite of H_{3,2} from the Gamma1* complement",
       CheckKind::Equality, false, {ParamPoint{}}, 120,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain(
             "eq-4.6", pt, prec,
             {{"H_32_secondary", h_32_secondary(prec)},
              {"H_L2(3)", h_l2(3, prec)},
              {"complement_genfun(gamma1star)",
               complement_genfun(InjectionId::make(MapKind::Gamma1Star, 3),
                                 prec)}});
       }});

  add({"eq-4.7",
       "eleven-term rewrite of H_L2 for odd L >= 5",
       CheckKind::Equality, false, l_grid_odd(5, 11), 120,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain("eq-4.7", pt, prec,
                               {{"H_L2_long", h_l2_long(*pt.L, prec)},
                                {"H_L2", h_l2(*pt.L, prec)}});
       }});

  add({"thm-5.1",
       "G_L1 * (1-q^L) = H_L1 and G_L1 is non-negative",
       CheckKind::EqualityAndNonNeg, false, l_grid(1, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         PowerSeries g = g_l1(L, prec);
         VerifyReport r = equality_chain(
             "thm-5.1", pt, prec,
             {{"G_L1*(1-q^L)", times_one_minus_qL(g, L)},
              {"H_L1", h_l1(L, prec)}});
         if (!r.pass) return r;
         return nonneg_report("thm-5.1", pt, prec, g, "G_L1");
       }});

  add({"eq-5.1",
       "signed rank sum over distinct partitions: middle form, "
       "Ramanujan-type form, enumeration, and the division relation",
       CheckKind::Equality, false, {ParamPoint{}}, 200,
       [](const ParamPoint& pt, std::size_t prec) {
         PowerSeries mid = rank_distinct_mid(prec);
         PowerSeries rhs = rank_distinct_rhs(prec);
         PowerSeries dp = weighted_genfun(ConstraintSet::distinct_nonempty(),
                                          Weight::AlternatingRankOnDistinct,
                                          prec);
         VerifyReport r = equality_chain(
             "eq-5.1", pt, prec,
             {{"mid", mid}, {"rhs", rhs}, {"distinct-rank sum", dp}});
         if (!r.pass) return r;
         PowerSeries inv_qq = inv_poch_infinite(+1, 1, prec);
         return equality_chain(
             "eq-5.1", pt, prec,
             {{"mid/(q;q)_inf", mid * inv_qq},
              {"eq-1.4 lhs", weighted_inf_lhs(prec)},
              {"rhs/(q;q)_inf ... rhs", rhs * inv_qq},
              {"eq-1.4 rhs", t_sum_rhs(prec)}});
       }});

  add({"eq-5.6",
       "shift identity between adjacent Gaussian binomial columns",
       CheckKind::Equality, false, l_grid(1, 30), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         VerifyReport r = base_report("eq-5.6", pt, prec);
         for (long long n = 1; n <= 30; ++n) {
           PowerSeries lhs =
               q_binom(static_cast<std::size_t>(L + n - 1),
                       static_cast<std::size_t>(n - 1), prec);
           lhs.div_binomial(-1, static_cast<std::size_t>(n));
           PowerSeries rhs = q_binom(static_cast<std::size_t>(L - 1 + n),
                                     static_cast<std::size_t>(n), prec);
           rhs.div_binomial(-1, static_cast<std::size_t>(L));
           if (auto d = first_difference(lhs, rhs)) {
             r.first_discrepancy = d;
             r.note = "mismatch at n=" + std::to_string(n) + ", exponent " +
                      std::to_string(*d);
             return r;
           }
         }
         r.pass = true;
         return r;
       }});

  add({"eq-5.7",
       "bounded-gap alternating sum decomposes as G_L1 plus twice the "
       "odd-smallest-part tail",
       CheckKind::Equality, false, l_grid(1, 12), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         PowerSeries odds = odds_min_gt1(L, prec);
         odds.scale(2);
         return equality_chain(
             "eq-5.7", pt, prec,
             {{"weighted_ls", weighted_ls(L, prec)},
              {"G_L1 + 2*odds", g_l1(L, prec) + odds}});
       }});

  add({"thm-5.2-G2", "G_L2 * (1-q^L) = Hstar_L2 for L >= 3",
       CheckKind::Equality, false, l_grid(3, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         return equality_chain(
             "thm-5.2-G2", pt, prec,
             {{"G_L2*(1-q^L)", times_one_minus_qL(g_l2(L, prec), L)},
              {"Hstar_L2", hstar_l2(L, prec)}});
       }});

  add({"eq-6.1",
       "bounded-gap alternating sum as a q-binomial series, against both "
       "the closed form and enumeration",
       CheckKind::Equality, false, l_grid(1, 12), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         return equality_chain(
             "eq-6.1", pt, prec,
             {{"weighted_ls_binom", weighted_ls_binom(L, prec)},
              {"weighted_ls", weighted_ls(L, prec)},
              {"enumeration",
               weighted_genfun(ConstraintSet::bounded_gap(static_cast<int>(L)),
                               Weight::AlternatingSmallestPart, prec)}});
       }});

  add({"eq-6.2",
       "odd smallest parts above 1 with bounded gap, closed form vs "
       "enumeration",
       CheckKind::Equality, false, l_grid(1, 12), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         ConstraintSet c = ConstraintSet::bounded_gap(static_cast<int>(L));
         c.smallest_part_at_least = 2;
         c.smallest_part_parity = Parity::Odd;
         return equality_chain("eq-6.2", pt, prec,
                               {{"odds_min_gt1", odds_min_gt1(L, prec)},
                                {"enumeration", genfun_of_set(c, prec)}});
       }});

  add({"thm-6.1",
       "q-binomial form equals the four-term manifestly split form; a "
       "mismatch here would point at the display transcription, since the "
       "pieces are verified independently",
       CheckKind::Equality, false, l_grid(1, 12), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain(
             "thm-6.1", pt, prec,
             {{"weighted_ls_binom", weighted_ls_binom(*pt.L, prec)},
              {"thm61_rhs", thm61_rhs(*pt.L, prec)}});
       }});

  add({"eq-6.4-6.5",
       "Jackson transformation route: phi form, transformed phi form, and "
       "the shifted summation",
       CheckKind::Equality, false, l_grid(1, 12), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         long long L = *pt.L;
         VerifyReport r = base_report("eq-6.4-6.5", pt, prec);
         TransformParams p;
         p.a = MonomialParam::plus(L + 1);
         p.b = MonomialParam::minus(1);
         p.c = MonomialParam::minus(2);
         p.z = MonomialParam::plus(1);
         TransformCheck c = check_transform(Transform::Jackson, p, prec);
         if (c.status != TransformCheck::Status::Pass) {
           r.first_discrepancy = c.first_discrepancy;
           r.note = "Jackson transformation fails at the L-specialization";
           return r;
         }
         // q/(1+q) * 2phi1(q^{L+1}, -q; -q^2; q, q) is the q-binomial form.
         PowerSeries pre = PowerSeries::monomial(1, 1, prec);
         pre.div_binomial(+1, 1);
         PowerSeries lhs =
             pre * phi({MonomialParam::plus(L + 1), MonomialParam::minus(1)},
                       {MonomialParam::minus(2)}, MonomialParam::plus(1),
                       prec);
         return equality_chain(
             "eq-6.4-6.5", pt, prec,
             {{"phi form", lhs},
              {"weighted_ls_binom", weighted_ls_binom(L, prec)},
              {"jackson_rhs", jackson_rhs(L, prec)}});
       }});

  add({"thm-6.2", "Jackson-transformed series is non-negative",
       CheckKind::NonNeg, false, l_grid(1, 10), 300,
       [](const ParamPoint& pt, std::size_t prec) {
         return nonneg_report("thm-6.2", pt, prec, jackson_rhs(*pt.L, prec),
                              "jackson_rhs");
       }});

  add({"eq-6.6",
       "intermediate sum equals the Jackson form (L-range with all factor "
       "exponents non-negative; larger L stays open)",
       CheckKind::Equality, false, l_grid(0, 1), 200,
       [](const ParamPoint& pt, std::size_t prec) {
         return equality_chain("eq-6.6", pt, prec,
                               {{"intermediate", intermediate(*pt.L, prec)},
                                {"jackson_rhs", jackson_rhs(*pt.L, prec)}});
       }});

  auto add_transform = [&](const std::string& id, Transform t,
                           const std::string& what) {
    add({id, what, CheckKind::Equality, false, {ParamPoint{}}, 100,
         [id, t](const ParamPoint& pt, std::size_t prec) {
           return transform_record_check(id, t, pt, prec);
         }});
  };
  add_transform("transform-2.2", Transform::QBinomial,
                "q-binomial theorem at sampled monomial parameters");
  add_transform("transform-2.3", Transform::Heine1,
                "first Heine transformation at sampled monomial parameters");
  add_transform("transform-2.4", Transform::Heine2,
                "second Heine transformation at sampled monomial parameters");
  add_transform("transform-2.5", Transform::Heine3,
                "third Heine transformation at sampled monomial parameters");
  add_transform("transform-2.6", Transform::Jackson,
                "Jackson transformation at sampled monomial parameters");

  // Expected-fail fixtures: these pass exactly when the documented
  // counterexample shows up.
  add({"fixture-H11",
       "H_{1,1} = q/(1+q) first goes negative at exponent 2",
       CheckKind::NonNeg, true, {ParamPoint{1, {}, {}}}, 12,
       [](const ParamPoint& pt, std::size_t prec) {
         VerifyReport r = base_report("fixture-H11", pt, prec);
         r.fixture = true;
         PowerSeries h = h_l1(1, prec);
         auto fn = h.first_negative();
         r.pass = fn && *fn == 2 && h[1] == 1 && h[2] == -1;
         r.first_discrepancy = fn;
         r.note = r.pass ? "fails non-negativity at exponent 2, as documented"
                         : "expected first negative at exponent 2";
         return r;
       }});
  add({"fixture-H12",
       "H_{1,2} = q^2 + q^5 - q^6 + ... first goes negative at exponent 6",
       CheckKind::NonNeg, true, {ParamPoint{1, {}, {}}}, 12,
       [](const ParamPoint& pt, std::size_t prec) {
         VerifyReport r = base_report("fixture-H12", pt, prec);
         r.fixture = true;
         PowerSeries h = h_l2(1, prec);
         auto fn = h.first_negative();
         r.pass = fn && *fn == 6 && h[2] == 1 && h[5] == 1 && h[6] == -1;
         r.first_discrepancy = fn;
         r.note = r.pass ? "fails non-negativity at exponent 6, as documented"
                         : "expected expansion q^2 + q^5 - q^6 + ...";
         return r;
       }});
  add({"fixture-H22",
       "H_{2,2} = q^2 + q^6 - q^7 + ... first goes negative at exponent 7",
       CheckKind::NonNeg, true, {ParamPoint{2, {}, {}}}, 12,
       [](const ParamPoint& pt, std::size_t prec) {
         VerifyReport r = base_report("fixture-H22", pt, prec);
         r.fixture = true;
         PowerSeries h = h_l2(2, prec);
         auto fn = h.first_negative();
         r.pass = fn && *fn == 7 && h[2] == 1 && h[6] == 1 && h[7] == -1;
         r.first_discrepancy = fn;
         r.note = r.pass ? "fails non-negativity at exponent 7, as documented"
                         : "expected expansion q^2 + q^6 - q^7 + ...";
         return r;
       }});
  auto parity_fixture = [&](const std::string& id, long long L,
                            long long first_violation) {
    add({id,
         "B-family inequality breaks for L=" + std::to_string(L) +
             " by parity of norms; first violation at norm " +
             std::to_string(first_violation),
         CheckKind::CountInequality, true, {ParamPoint{L, {}, {}}}, 31,
         [L, first_violation, id](const ParamPoint& pt, std::size_t prec) {
           VerifyReport r = base_report(id, pt, prec);
           r.fixture = true;
           for (long long N = 1; N < static_cast<long long>(prec); ++N) {
             long long c1 =
                 count_by_enumeration(N, ConstraintSet::set_B(L, 1)) +
                 (N == 3 ? 1 : 0);
             long long c2 =
                 count_by_enumeration(N, ConstraintSet::set_B(L, 2));
             if (c1 < c2) {
               r.pass = (N == first_violation);
               r.first_discrepancy = static_cast<std::size_t>(N);
               r.note = r.pass ? "inequality violated at norm " +
                                     std::to_string(N) + ", as documented"
                               : "violation found at unexpected norm " +
                                     std::to_string(N);
               return r;
             }
           }
           r.pass = false;
           r.note = "expected a violation below norm " + std::to_string(prec);
           return r;
         }});
  };
  parity_fixture("fixture-B1-parity", 1, 6);
  parity_fixture("fixture-B2-parity", 2, 7);

  std::sort(recs.begin(), recs.end(),
            [](const IdentityRecord& a, const IdentityRecord& b) {
              return a.id < b.id;
            });
  return recs;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> recs = build_registry();
  return recs;
}

const IdentityRecord& record(const std::string& id) {
  for (const auto& r : registry())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown identity record: " + id);
}

VerifyReport verify(const std::string& id, const ParamPoint& pt,
                    std::size_t prec) {
  return record(id).check(pt, prec);
}

std::vector<VerifyReport> verify_record(const IdentityRecord& rec,
                                        const GridOverride& o) {
  std::vector<ParamPoint> pts = rec.grid;
  auto in_range = [](const std::optional<long long>& v,
                     const std::optional<std::pair<long long, long long>>& r) {
    if (!r) return true;
    if (!v) return true;
    return *v >= r->first && *v <= r->second;
  };
  std::vector<VerifyReport> out;
  std::sort(pts.begin(), pts.end(), param_less);
  for (const auto& pt : pts) {
    if (!in_range(pt.L, o.L) || !in_range(pt.s, o.s) || !in_range(pt.k, o.k))
      continue;
    out.push_back(rec.check(pt, o.prec.value_or(rec.default_prec)));
  }
  return out;
}

std::vector<VerifyReport> verify_all(const GridOverride& o) {
  std::vector<VerifyReport> out;
  for (const auto& rec : registry()) {
    auto reports = verify_record(rec, o);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

}  // namespace qlab
