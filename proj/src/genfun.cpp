#include "qlab/genfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// 1 / prod_{i=0}^{count-1} (1 - q^{e+i}), applied in place.
void div_poch(PowerSeries& x, long long e, long long count) {
  for (long long i = 0; i < count; ++i) {
    long long ee = e + i;
    if (ee >= static_cast<long long>(x.precision())) break;
    x.div_binomial(-1, static_cast<std::size_t>(ee));
  }
}

void div_poch_step2(PowerSeries& x, long long e, long long count) {
  for (long long i = 0; i < count; ++i) {
    long long ee = e + 2 * i;
    if (ee >= static_cast<long long>(x.precision())) break;
    x.div_binomial(-1, static_cast<std::size_t>(ee));
  }
}

}  // namespace

std::string MonomialParam::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (exponent == 0)
    os << "1";
  else if (exponent == 1)
    os << "q";
  else
    os << "q^" << exponent;
  return os.str();
}

PowerSeries h_l1(long long L, std::size_t prec) {
  require(L >= 1, "H_L1: L >= 1 required");
  PowerSeries a = PowerSeries::one(prec);
  div_poch(a, 1, L - 1);
  div_poch(a, L + 1, 1);
  a = a.shifted(1);
  PowerSeries b = PowerSeries::one(prec);
  div_poch(b, 2, L);
  b -= PowerSeries::one(prec);
  return a - b;
}

PowerSeries h_l1_secondary(long long L, std::size_t prec) {
  require(L >= 1, "H_L1_secondary: L >= 1 required");
  PowerSeries r(prec);
  for (long long s = 2; s <= L; ++s) {
    if (2 * s + 1 >= static_cast<long long>(prec)) break;
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, s, L + 2 - s);
    r += t.shifted(static_cast<std::size_t>(2 * s + 1));
  }
  PowerSeries t2 = PowerSeries::one(prec);
  div_poch(t2, L + 1, 1);
  r += t2.shifted(1);
  // q^3 (1 - q^{L-2}) reads as the polynomial q^3 - q^{L+1}; this is what
  // makes the formula valid down at L = 1 and 2.
  PowerSeries t3 = PowerSeries::one(prec);
  div_poch(t3, 1, L + 1);
  r += t3.shifted(3);
  if (L + 1 < static_cast<long long>(prec))
    r -= t3.shifted(static_cast<std::size_t>(L + 1));
  return r;
}

PowerSeries h_l2(long long L, std::size_t prec) {
  require(L >= 1, "H_L2: L >= 1 required");
  PowerSeries r = PowerSeries::monomial(1, 3, prec);
  if (L == 4) r += PowerSeries::monomial(1, 9, prec);
  PowerSeries a = PowerSeries::one(prec);
  if (L + 1 < static_cast<long long>(prec))
    a.mul_binomial(-1, static_cast<std::size_t>(L + 1));
  div_poch(a, 2, L + 1);
  r += a.shifted(2);
  PowerSeries b = PowerSeries::one(prec);
  div_poch(b, 3, L);
  b -= PowerSeries::one(prec);
  return r - b;
}

PowerSeries hstar_l2(long long L, std::size_t prec) {
  require(L >= 1, "Hstar_L2: L >= 1 required");
  PowerSeries a = PowerSeries::one(prec);
  if (L < static_cast<long long>(prec))
    a.mul_binomial(-1, static_cast<std::size_t>(L));
  div_poch(a, 2, L + 1);
  PowerSeries b = PowerSeries::one(prec);
  div_poch(b, 3, L);
  b -= PowerSeries::one(prec);
  return a.shifted(2) - b;
}

PowerSeries h_lsk(long long L, long long s, long long k, std::size_t prec) {
  require(L >= 1, "H_Lsk: L >= 1 required");
  require(s >= 1, "H_Lsk: s >= 1 required");
  require(k >= 1, "H_Lsk: k >= 1 required");
  PowerSeries a = PowerSeries::one(prec);
  if (k < static_cast<long long>(prec))
    a.mul_binomial(-1, static_cast<std::size_t>(k));
  div_poch(a, s, L + 1);
  if (s < static_cast<long long>(prec))
    a = a.shifted(static_cast<std::size_t>(s));
  else
    a = PowerSeries(prec);
  PowerSeries b = PowerSeries::one(prec);
  div_poch(b, s + 1, L);
  b -= PowerSeries::one(prec);
  return a - b;
}

PowerSeries h_32_secondary(std::size_t prec) {
  PowerSeries t1 = PowerSeries::one(prec);
  div_poch(t1, 3, 3);
  PowerSeries t2 = PowerSeries::one(prec);
  div_poch_step2(t2, 3, 2);  // (q^3;q^2)_2 = (1-q^3)(1-q^5)
  PowerSeries t3 = PowerSeries::one(prec);
  div_poch(t3, 5, 1);
  return t1.shifted(10) + t2.shifted(11) + t3.shifted(2);
}

PowerSeries h_l2_long(long long L, std::size_t prec) {
  require(L >= 5 && L % 2 == 1, "H_L2_long: odd L >= 5 required");
  const long long half = (L + 1) / 2;
  PowerSeries r(prec);
  PowerSeries one = PowerSeries::one(prec);
  auto shifted_or_zero = [&](const PowerSeries& x, long long e) {
    return e < static_cast<long long>(prec)
               ? x.shifted(static_cast<std::size_t>(e))
               : PowerSeries(prec);
  };
  // term 1
  for (long long j = 2; j <= (L - 1) / 2; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 3, half);
    div_poch_step2(t, 4, j - 1);
    PowerSeries inner = PowerSeries::one(prec);
    div_poch_step2(inner, 2 * j + 2, half - j);
    r += shifted_or_zero(t * (inner - one), 2 * j);
  }
  // term 2
  {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, L + 1, 2);
    r += t.shifted(2);
  }
  // term 3
  for (long long j = 4; j <= L; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, j, L + 3 - j);
    r += shifted_or_zero(t, 3 * j + 2);
  }
  // term 4
  for (long long j = (L + 5) / 2; j <= L; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, j + 1, L + 2 - j);
    r += shifted_or_zero(t, 2 * j + 2);
  }
  // term 5
  for (long long j = 4; j <= (L + 3) / 2; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 2 * j - 1, (L + 5) / 2 - j);
    PowerSeries inner = PowerSeries::one(prec);
    div_poch(inner, j + 1, j - 2);
    div_poch_step2(inner, 2 * j, (L + 3) / 2 - j);
    r += shifted_or_zero(t * (inner - one), 2 * j + 2);
  }
  // term 6
  for (long long j = 2; j <= (L - 1) / 2; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 2 * j + 3, half - j);
    PowerSeries inner = PowerSeries::one(prec);
    div_poch_step2(inner, 2 * j + 2, half - j);
    r += shifted_or_zero(t * (inner - one), 2 * j + 3);
  }
  // term 7
  for (long long j = 3; j <= (L - 1) / 2; ++j) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, 2 * j + 1, L + 2 - 2 * j);
    r += shifted_or_zero(t, 2 * j + 2);
  }
  // term 8
  {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 5, (L - 1) / 2);
    PowerSeries inner = PowerSeries::one(prec);
    div_poch_step2(inner, 6, (L - 3) / 2);
    r += shifted_or_zero(t * (inner - one), 6);
  }
  // term 9
  {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, 3, L);
    r += shifted_or_zero(t, 13);
  }
  // term 10
  {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 3, half);
    PowerSeries inner = PowerSeries::one(prec);
    div_poch_step2(inner, 6, (L - 3) / 2);
    PowerSeries prod = t * (inner - one);
    r += shifted_or_zero(prod, 5);
    r += shifted_or_zero(prod, 9);
  }
  // term 11
  {
    PowerSeries t = PowerSeries::one(prec);
    div_poch_step2(t, 3, half);
    r += shifted_or_zero(t, 11);
  }
  return r;
}

PowerSeries g_l1(long long L, std::size_t prec) {
  require(L >= 1, "G_L1: L >= 1 required");
  PowerSeries a = PowerSeries::one(prec);
  div_poch(a, 1, L + 2);
  a = a.shifted(1);
  PowerSeries sum(prec);
  PowerSeries binom = PowerSeries::one(prec);  // [L+n-1 choose n-1] at n = 1
  for (long long n = 1; 2 * n < static_cast<long long>(prec); ++n) {
    PowerSeries t = binom;
    t.div_binomial(-1, static_cast<std::size_t>(n));
    sum += t.shifted(static_cast<std::size_t>(2 * n));
    if (L + n < static_cast<long long>(prec))
      binom.mul_binomial(-1, static_cast<std::size_t>(L + n));
    binom.div_binomial(-1, static_cast<std::size_t>(n));
  }
  return a - sum;
}

PowerSeries g_l2(long long L, std::size_t prec) {
  require(L >= 1, "G_L2: L >= 1 required");
  PowerSeries a = PowerSeries::one(prec);
  div_poch(a, 2, L + 1);
  a = a.shifted(2);
  PowerSeries sum(prec);
  PowerSeries binom = PowerSeries::one(prec);
  for (long long n = 1; 3 * n < static_cast<long long>(prec); ++n) {
    PowerSeries t = binom;
    t.div_binomial(-1, static_cast<std::size_t>(n));
    sum += t.shifted(static_cast<std::size_t>(3 * n));
    if (L + n < static_cast<long long>(prec))
      binom.mul_binomial(-1, static_cast<std::size_t>(L + n));
    binom.div_binomial(-1, static_cast<std::size_t>(n));
  }
  return a - sum;
}

PowerSeries weighted_ls(long long L, std::size_t prec) {
  require(L >= 0, "weighted_ls: L >= 0 required");
  PowerSeries r(prec);
  for (long long s = 1; s < static_cast<long long>(prec); ++s) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, s, L + 1);
    t = t.shifted(static_cast<std::size_t>(s));
    if (s % 2 == 1)
      r += t;
    else
      r -= t;
  }
  return r;
}

PowerSeries weighted_ls_binom(long long L, std::size_t prec) {
  require(L >= 0, "weighted_ls_binom: L >= 0 required");
  PowerSeries r(prec);
  PowerSeries binom = PowerSeries::one(prec);
  for (long long n = 1; n < static_cast<long long>(prec); ++n) {
    PowerSeries t = binom;
    t.div_binomial(+1, static_cast<std::size_t>(n));  // 1/(1+q^n)
    r += t.shifted(static_cast<std::size_t>(n));
    if (L + n < static_cast<long long>(prec))
      binom.mul_binomial(-1, static_cast<std::size_t>(L + n));
    binom.div_binomial(-1, static_cast<std::size_t>(n));
  }
  return r;
}

PowerSeries weighted_inf_lhs(std::size_t prec) {
  PowerSeries r(prec);
  PowerSeries invq = PowerSeries::one(prec);  // 1/(q;q)_{n-1}
  for (long long n = 1; n < static_cast<long long>(prec); ++n) {
    if (n >= 2) invq.div_binomial(-1, static_cast<std::size_t>(n - 1));
    PowerSeries t = invq;
    t.div_binomial(+1, static_cast<std::size_t>(n));
    r += t.shifted(static_cast<std::size_t>(n));
  }
  return r;
}

PowerSeries t_sum_rhs(std::size_t prec) {
  PowerSeries r(prec);
  // a = 1 / ((q^2;q^2)_n (q^{n+1};q)_inf), advanced with n
  PowerSeries a = inv_poch_infinite(+1, 1, prec);
  for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(prec); ++n) {
    if (n < static_cast<long long>(prec))
      a.mul_binomial(-1, static_cast<std::size_t>(n));
    if (2 * n < static_cast<long long>(prec))
      a.div_binomial(-1, static_cast<std::size_t>(2 * n));
    r += a.shifted(static_cast<std::size_t>(n * (n + 1) / 2));
  }
  return r;
}

PowerSeries rank_distinct_mid(std::size_t prec) {
  PowerSeries r(prec);
  PowerSeries qq = PowerSeries::one(prec);  // (q;q)_n
  for (long long n = 0; n + 1 < static_cast<long long>(prec); ++n) {
    if (n >= 1 && n < static_cast<long long>(prec))
      qq.mul_binomial(-1, static_cast<std::size_t>(n));
    PowerSeries t = qq.shifted(static_cast<std::size_t>(n + 1));
    if (n % 2 == 0)
      r += t;
    else
      r -= t;
  }
  return r;
}

PowerSeries rank_distinct_rhs(std::size_t prec) {
  PowerSeries r(prec);
  PowerSeries a = PowerSeries::one(prec);  // 1/(-q;q)_n
  for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(prec); ++n) {
    a.div_binomial(+1, static_cast<std::size_t>(n));
    r += a.shifted(static_cast<std::size_t>(n * (n + 1) / 2));
  }
  return r;
}

PowerSeries odds_min_gt1(long long L, std::size_t prec) {
  require(L >= 0, "odds_min_gt1: L >= 0 required");
  PowerSeries r(prec);
  for (long long n = 1; 2 * n + 1 < static_cast<long long>(prec); ++n) {
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, 2 * n + 1, L + 1);
    r += t.shifted(static_cast<std::size_t>(2 * n + 1));
  }
  return r;
}

PowerSeries summation_lhs(long long L, std::size_t prec) {
  require(L >= 1, "summation_lhs: L >= 1 required");
  PowerSeries r(prec);
  for (long long s = 1; s <= L; ++s) {
    if (2 * s + 1 >= static_cast<long long>(prec)) break;
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, s, L + 2 - s);
    r += t.shifted(static_cast<std::size_t>(2 * s + 1));
  }
  return r;
}

PowerSeries summation_rhs(long long L, std::size_t prec) {
  require(L >= 1, "summation_rhs: L >= 1 required");
  PowerSeries r = PowerSeries::one(prec);
  PowerSeries t1 = PowerSeries::one(prec);
  div_poch(t1, L + 1, 1);
  r -= t1.shifted(1);
  PowerSeries t2 = PowerSeries::one(prec);  // (2q-1)/(q;q)_{L+1}
  div_poch(t2, 1, L + 1);
  PowerSeries two_q_t2 = t2.shifted(1);
  two_q_t2.scale(2);
  r += two_q_t2;
  r -= t2;
  return r;
}

PowerSeries corollary_lhs(std::size_t prec) {
  PowerSeries r(prec);
  PowerSeries p = inv_poch_infinite(+1, 1, prec);  // 1/(q^s;q)_inf
  for (long long s = 1; 2 * s + 1 < static_cast<long long>(prec); ++s) {
    if (s > 1 && s - 1 < static_cast<long long>(prec))
      p.mul_binomial(-1, static_cast<std::size_t>(s - 1));
    r += p.shifted(static_cast<std::size_t>(2 * s + 1));
  }
  return r;
}

PowerSeries corollary_rhs(std::size_t prec) {
  PowerSeries r = PowerSeries::one(prec);
  r -= PowerSeries::monomial(1, 1, prec);
  PowerSeries t = inv_poch_infinite(+1, 1, prec);
  PowerSeries two_q_t = t.shifted(1);
  two_q_t.scale(2);
  r += two_q_t;
  r -= t;
  return r;
}

PowerSeries jackson_rhs(long long L, std::size_t prec) {
  require(L >= 0, "jackson_rhs: L >= 0 required");
  PowerSeries sum(prec);
  PowerSeries invnq = PowerSeries::one(prec);  // 1/(-q;q)_n
  for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(prec); ++n) {
    invnq.div_binomial(+1, static_cast<std::size_t>(n));
    PowerSeries t = invnq;
    if (L + n < static_cast<long long>(prec))
      t.div_binomial(-1, static_cast<std::size_t>(L + n));
    sum += t.shifted(static_cast<std::size_t>(n * (n + 1) / 2));
  }
  div_poch(sum, 1, L);
  return sum;
}

PowerSeries intermediate(long long L, std::size_t prec) {
  require(L >= 0 && L <= 1,
          "intermediate: defined for L in {0,1} only (larger L would need "
          "factors with negative exponents)");
  PowerSeries r(prec);
  PowerSeries u = PowerSeries::one(prec);  // (-q^{1-L};q)_{n-1} / (-q;q)_n
  u.div_binomial(+1, 1);                   // n = 1
  for (long long n = 1;
       L * (n - 1) + n < static_cast<long long>(prec); ++n) {
    if (n > 1) {
      // new pochhammer factor (1 + q^{(n-1)-L}) and denominator (1+q^n)
      long long e = (n - 1) - L;
      if (e == 0)
        u.scale(2);
      else if (e < static_cast<long long>(prec))
        u.mul_binomial(+1, static_cast<std::size_t>(e));
      u.div_binomial(+1, static_cast<std::size_t>(n));
    }
    r += u.shifted(static_cast<std::size_t>(L * (n - 1) + n));
  }
  div_poch(r, 1, L);
  return r;
}

PowerSeries thm61_rhs(long long L, std::size_t prec) {
  require(L >= 1, "thm61_rhs: L >= 1 required");
  PowerSeries r(prec);
  for (long long s = 2; s <= L; ++s) {
    if (2 * s + 1 >= static_cast<long long>(prec)) break;
    PowerSeries t = PowerSeries::one(prec);
    div_poch(t, L, 1);
    div_poch(t, s, L + 2 - s);
    r += t.shifted(static_cast<std::size_t>(2 * s + 1));
  }
  PowerSeries mid = PowerSeries::one(prec);
  div_poch(mid, L, 1);
  div_poch(mid, L + 1, 1);
  r += mid.shifted(1);
  PowerSeries t3 = PowerSeries::one(prec);
  div_poch(t3, L, 1);
  div_poch(t3, 1, L + 1);
  r += t3.shifted(3);
  if (L + 1 < static_cast<long long>(prec))
    r -= t3.shifted(static_cast<std::size_t>(L + 1));
  PowerSeries odds = odds_min_gt1(L, prec);
  odds.scale(2);
  r += odds;
  return r;
}

PowerSeries mod4_series(std::size_t prec) {
  PowerSeries r(prec);
  for (long long s = 1; s < static_cast<long long>(prec); ++s) {
    PowerSeries t = PowerSeries::one(prec);
    t.div_binomial(-1, static_cast<std::size_t>(s));
    t = t.shifted(static_cast<std::size_t>(s));
    if (s % 2 == 1)
      r += t;
    else
      r -= t;
  }
  return r;
}

std::vector<std::pair<std::string, int>> series_catalog() {
  return {{"H_L1", 1},        {"H_L1_secondary", 1},
          {"H_L2", 1},        {"H_32_secondary", 0},
          {"H_L2_long", 1},   {"H_Lsk", 3},
          {"Hstar_L2", 1},    {"G_L1", 1},
          {"G_L2", 1},        {"weighted_ls", 1},
          {"weighted_ls_binom", 1}, {"weighted_inf_lhs", 0},
          {"t_sum_rhs", 0},   {"rank_distinct_mid", 0},
          {"rank_distinct_rhs", 0}, {"odds_min_gt1", 1},
          {"summation_lhs", 1},     {"summation_rhs", 1},
          {"corollary_lhs", 0},     {"corollary_rhs", 0},
          {"jackson_rhs", 1}, {"intermediate", 1},
          {"thm61_rhs", 1},   {"mod4_series", 0}};
}

SeriesId SeriesId::parse(const std::string& text) {
  SeriesId id;
  std::string tok;
  std::istringstream is(text);
  if (!std::getline(is, id.name, ':'))
    throw std::invalid_argument("SeriesId: empty");
  while (std::getline(is, tok, ':')) {
    try {
      id.params.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("SeriesId: bad integer parameter '" + tok +
                                  "' in '" + text + "'");
    }
  }
  for (auto& [name, argc] : series_catalog()) {
    if (name == id.name) {
      if (static_cast<int>(id.params.size()) != argc)
        throw std::invalid_argument("SeriesId: " + id.name + " takes " +
                                    std::to_string(argc) + " parameter(s)");
      return id;
    }
  }
  throw std::invalid_argument("SeriesId: unknown series name '" + id.name +
                              "'");
}

std::string SeriesId::to_string() const {
  std::ostringstream os;
  os << name;
  for (long long p : params) os << ':' << p;
  return os.str();
}

PowerSeries build(const SeriesId& id, std::size_t prec) {
  const auto& p = id.params;
  if (id.name == "H_L1") return h_l1(p[0], prec);
  if (id.name == "H_L1_secondary") return h_l1_secondary(p[0], prec);
  if (id.name == "H_L2") return h_l2(p[0], prec);
  if (id.name == "H_32_secondary") return h_32_secondary(prec);
  if (id.name == "H_L2_long") return h_l2_long(p[0], prec);
  if (id.name == "H_Lsk") return h_lsk(p[0], p[1], p[2], prec);
  if (id.name == "Hstar_L2") return hstar_l2(p[0], prec);
  if (id.name == "G_L1") return g_l1(p[0], prec);
  if (id.name == "G_L2") return g_l2(p[0], prec);
  if (id.name == "weighted_ls") return weighted_ls(p[0], prec);
  if (id.name == "weighted_ls_binom") return weighted_ls_binom(p[0], prec);
  if (id.name == "weighted_inf_lhs") return weighted_inf_lhs(prec);
  if (id.name == "t_sum_rhs") return t_sum_rhs(prec);
  if (id.name == "rank_distinct_mid") return rank_distinct_mid(prec);
  if (id.name == "rank_distinct_rhs") return rank_distinct_rhs(prec);
  if (id.name == "odds_min_gt1") return odds_min_gt1(p[0], prec);
  if (id.name == "summation_lhs") return summation_lhs(p[0], prec);
  if (id.name == "summation_rhs") return summation_rhs(p[0], prec);
  if (id.name == "corollary_lhs") return corollary_lhs(prec);
  if (id.name == "corollary_rhs") return corollary_rhs(prec);
  if (id.name == "jackson_rhs") return jackson_rhs(p[0], prec);
  if (id.name == "intermediate") return intermediate(p[0], prec);
  if (id.name == "thm61_rhs") return thm61_rhs(p[0], prec);
  if (id.name == "mod4_series") return mod4_series(prec);
  throw std::invalid_argument("build: unknown series '" + id.name + "'");
}

PowerSeries phi(const std::vector<MonomialParam>& uppers,
                const std::vector<MonomialParam>& lowers, MonomialParam z,
                std::size_t prec) {
  if (z.exponent < 1)
    throw std::domain_error(
        "phi: argument exponent must be >= 1 or the series does not "
        "terminate under truncation");
  for (auto& a : uppers)
    if (a.exponent < 0)
      throw std::invalid_argument("phi: upper parameter with negative "
                                  "exponent is not a power series");
  for (auto& b : lowers)
    if (b.exponent < 1)
      throw std::domain_error(
          "phi: lower parameter exponent must be >= 1 (denominator factor "
          "must stay an invertible unit)");
  long long e = 1 - static_cast<long long>(uppers.size()) +
                static_cast<long long>(lowers.size());
  if (e < 0)
    throw std::invalid_argument(
        "phi: r > s+1 gives the bracket a negative power (not a power "
        "series); unsupported");

  PowerSeries acc(prec);
  PowerSeries term = PowerSeries::one(prec);
  acc += term;  // n = 0
  long long min_exp = 0;
  for (long long n = 0;; ++n) {
    long long step = z.exponent + n * e;
    min_exp += step;
    if (min_exp >= static_cast<long long>(prec)) break;
    // (a;q)_{n+1} = (a;q)_n (1 - a q^n), same for lowers and (q;q)_n.
    for (auto& a : uppers) {
      long long k = a.exponent + n;
      if (k == 0)
        term.scale(1 - a.sign);
      else if (k < static_cast<long long>(prec))
        term.mul_binomial(-a.sign, static_cast<std::size_t>(k));
    }
    if (n + 1 < static_cast<long long>(prec))
      term.div_binomial(-1, static_cast<std::size_t>(n + 1));
    for (auto& b : lowers) {
      long long k = b.exponent + n;
      if (k < static_cast<long long>(prec))
        term.div_binomial(-b.sign, static_cast<std::size_t>(k));
    }
    // Step ratio [(-1)^{n+1} q^{C(n+1,2)}]^e / [(-1)^n q^{C(n,2)}]^e is
    // (-q^n)^e, i.e. sign (-1)^e and shift n*e (already folded into step).
    bool neg = (z.sign < 0);
    if (e % 2 == 1) neg = !neg;
    term = term.shifted(static_cast<std::size_t>(step));
    if (neg) term.scale(-1);
    acc += term;
    bool all_zero = true;
    for (auto& c : term.coeffs())
      if (!c.is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) break;
  }
  return acc;
}

Transform transform_from_name(const std::string& name) {
  if (name == "qbinom") return Transform::QBinomial;
  if (name == "heine1") return Transform::Heine1;
  if (name == "heine2") return Transform::Heine2;
  if (name == "heine3") return Transform::Heine3;
  if (name == "jackson") return Transform::Jackson;
  throw std::invalid_argument("unknown transform: " + name);
}

std::string transform_name(Transform t) {
  switch (t) {
    case Transform::QBinomial: return "qbinom";
    case Transform::Heine1: return "heine1";
    case Transform::Heine2: return "heine2";
    case Transform::Heine3: return "heine3";
    case Transform::Jackson: return "jackson";
  }
  return "?";
}

namespace {

// (m;q)_inf for a signed monomial, as a prefactor piece.
PowerSeries inf_poch(MonomialParam m, std::size_t prec) {
  return poch_infinite_signed(m.sign, static_cast<std::size_t>(m.exponent),
                              prec);
}

PowerSeries inv_inf_poch(MonomialParam m, std::size_t prec) {
  return inv_poch_infinite(m.sign, static_cast<std::size_t>(m.exponent), prec);
}

bool ok_upper(MonomialParam m, std::string& why, const char* label) {
  if (m.exponent < 0) {
    why = std::string(label) + " has negative exponent (" + m.to_string() + ")";
    return false;
  }
  if (m.exponent == 0 && m.sign > 0) {
    why = std::string(label) + " = 1 makes the series degenerate";
    return false;
  }
  return true;
}

bool ok_lower(MonomialParam m, std::string& why, const char* label) {
  if (m.exponent < 1) {
    why = std::string(label) + " needs exponent >= 1 (" + m.to_string() + ")";
    return false;
  }
  return true;
}

}  // namespace

TransformCheck check_transform(Transform t, const TransformParams& p,
                               std::size_t prec) {
  TransformCheck out{TransformCheck::Status::Rejected, std::nullopt, ""};
  std::string why;
  const MonomialParam a = p.a, b = p.b, c = p.c, z = p.z;
  auto reject = [&](const std::string& w) {
    out.status = TransformCheck::Status::Rejected;
    out.note = w;
    return out;
  };
  auto compare = [&](const PowerSeries& lhs, const PowerSeries& rhs) {
    auto d = first_difference(lhs, rhs);
    if (d) {
      out.status = TransformCheck::Status::Fail;
      out.first_discrepancy = d;
    } else {
      out.status = TransformCheck::Status::Pass;
    }
    return out;
  };

  if (!ok_lower(z, why, "argument z")) return reject(why);
  if (!ok_upper(a, why, "upper a")) return reject(why);
  if (t != Transform::QBinomial) {
    if (!ok_upper(b, why, "upper b")) return reject(why);
    if (!ok_lower(c, why, "lower c")) return reject(why);
  }

  switch (t) {
    case Transform::QBinomial: {
      PowerSeries lhs = phi({a}, {}, z, prec);
      PowerSeries rhs = inf_poch(a * z, prec) * inv_inf_poch(z, prec);
      return compare(lhs, rhs);
    }
    case Transform::Heine1: {
      MonomialParam cb = c / b;
      if (!ok_upper(cb, why, "derived c/b")) return reject(why);
      if (!ok_lower(b, why, "derived argument b")) return reject(why);
      PowerSeries lhs = phi({a, b}, {c}, z, prec);
      PowerSeries pre = inf_poch(b, prec) * inf_poch(a * z, prec) *
                        inv_inf_poch(c, prec) * inv_inf_poch(z, prec);
      PowerSeries rhs = pre * phi({cb, z}, {a * z}, b, prec);
      return compare(lhs, rhs);
    }
    case Transform::Heine2: {
      MonomialParam cb = c / b;
      MonomialParam abz_c = a * b * z / c;
      if (!ok_lower(cb, why, "derived argument c/b")) return reject(why);
      if (!ok_upper(abz_c, why, "derived abz/c")) return reject(why);
      PowerSeries lhs = phi({a, b}, {c}, z, prec);
      PowerSeries pre = inf_poch(cb, prec) * inf_poch(b * z, prec) *
                        inv_inf_poch(c, prec) * inv_inf_poch(z, prec);
      PowerSeries rhs = pre * phi({abz_c, b}, {b * z}, cb, prec);
      return compare(lhs, rhs);
    }
    case Transform::Heine3: {
      MonomialParam ca = c / a;
      MonomialParam cb = c / b;
      MonomialParam abz_c = a * b * z / c;
      if (!ok_upper(ca, why, "derived c/a")) return reject(why);
      if (!ok_upper(cb, why, "derived c/b")) return reject(why);
      if (!ok_lower(abz_c, why, "derived argument abz/c")) return reject(why);
      PowerSeries lhs = phi({a, b}, {c}, z, prec);
      PowerSeries rhs = inf_poch(abz_c, prec) * inv_inf_poch(z, prec) *
                        phi({ca, cb}, {c}, abz_c, prec);
      return compare(lhs, rhs);
    }
    case Transform::Jackson: {
      MonomialParam cb = c / b;
      if (!ok_upper(cb, why, "derived c/b")) return reject(why);
      PowerSeries lhs = phi({a, b}, {c}, z, prec);
      PowerSeries rhs = inf_poch(a * z, prec) * inv_inf_poch(z, prec) *
                        phi({a, cb}, {c, a * z}, b * z, prec);
      return compare(lhs, rhs);
    }
  }
  return reject("unreachable");
}

}  // namespace qlab
