#pragma once

#include "qlab/fps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlab {

/// A hypergeometric parameter of the form sign * q^exponent — the only
/// specialization this artifact supports.
struct MonomialParam {
  int sign = 1;           ///< +1 or -1
  long long exponent = 0;  ///< >= 0

  static MonomialParam plus(long long e) { return {+1, e}; }
  static MonomialParam minus(long long e) { return {-1, e}; }
  /// Quotient of two signed monomials; the result may have a negative
  /// exponent, which callers must reject where inadmissible.
  friend MonomialParam operator/(MonomialParam a, MonomialParam b) {
    return {a.sign * b.sign, a.exponent - b.exponent};
  }
  friend MonomialParam operator*(MonomialParam a, MonomialParam b) {
    return {a.sign * b.sign, a.exponent + b.exponent};
  }
  bool operator==(const MonomialParam&) const = default;
  std::string to_string() const;
};

/// Named closed-form series, one builder per display in scope. The CLI
/// grammar is name:param:param (e.g. "H_L1:3", "H_Lsk:5:2:6").
struct SeriesId {
  std::string name;
  std::vector<long long> params;

  static SeriesId parse(const std::string& text);
  std::string to_string() const;
};

/// All SeriesId names with their parameter counts, for help output.
std::vector<std::pair<std::string, int>> series_catalog();

/// Build the named series to the given order. Out-of-range parameters
/// raise std::invalid_argument naming the violated constraint.
PowerSeries build(const SeriesId& id, std::size_t prec);

// Direct builders (L and friends validated the same way).
PowerSeries h_l1(long long L, std::size_t prec);
PowerSeries h_l1_secondary(long long L, std::size_t prec);
PowerSeries h_l2(long long L, std::size_t prec);
PowerSeries h_32_secondary(std::size_t prec);
PowerSeries h_l2_long(long long L, std::size_t prec);  ///< odd L >= 5
PowerSeries h_lsk(long long L, long long s, long long k, std::size_t prec);
PowerSeries hstar_l2(long long L, std::size_t prec);
PowerSeries g_l1(long long L, std::size_t prec);
PowerSeries g_l2(long long L, std::size_t prec);
PowerSeries weighted_ls(long long L, std::size_t prec);        ///< L >= 0
PowerSeries weighted_ls_binom(long long L, std::size_t prec);  ///< L >= 0
PowerSeries weighted_inf_lhs(std::size_t prec);
PowerSeries t_sum_rhs(std::size_t prec);
PowerSeries rank_distinct_mid(std::size_t prec);
PowerSeries rank_distinct_rhs(std::size_t prec);
PowerSeries odds_min_gt1(long long L, std::size_t prec);
PowerSeries summation_lhs(long long L, std::size_t prec);
PowerSeries summation_rhs(long long L, std::size_t prec);
PowerSeries corollary_lhs(std::size_t prec);
PowerSeries corollary_rhs(std::size_t prec);
PowerSeries jackson_rhs(long long L, std::size_t prec);  ///< L >= 0
/// Intermediate sum form; well-defined only for L in {0, 1} (larger L
/// would need factors with negative exponents).
PowerSeries intermediate(long long L, std::size_t prec);
PowerSeries thm61_rhs(long long L, std::size_t prec);
PowerSeries mod4_series(std::size_t prec);

/// Basic hypergeometric series r_phi_s with signed-monomial parameters:
///   sum_n prod(a_i;q)_n / ((q;q)_n prod(b_j;q)_n)
///         * [(-1)^n q^binom(n,2)]^(1-r+s) * z^n.
/// Termination needs z.exponent >= 1; lower parameters need exponent >= 1
/// to stay invertible; r > s+1 would produce negative exponents and is
/// rejected.
PowerSeries phi(const std::vector<MonomialParam>& uppers,
                const std::vector<MonomialParam>& lowers, MonomialParam z,
                std::size_t prec);

enum class Transform { QBinomial, Heine1, Heine2, Heine3, Jackson };

Transform transform_from_name(const std::string& name);
std::string transform_name(Transform t);

struct TransformParams {
  MonomialParam a, b, c, z;  ///< QBinomial ignores b and c
};

struct TransformCheck {
  enum class Status { Pass, Fail, Rejected } status;
  std::optional<std::size_t> first_discrepancy;  ///< set on Fail
  std::string note;  ///< rejection reason or empty
};

/// Builds both sides of the named transformation at the given parameters
/// and compares coefficientwise to prec. Inadmissible specializations
/// (derived parameters out of range) are rejections, not failures.
TransformCheck check_transform(Transform t, const TransformParams& p,
                               std::size_t prec);

}  // namespace qlab
