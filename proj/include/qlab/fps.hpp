#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qlab {

/// Exact arbitrary-precision integer coefficient type.
using Int = boost::multiprecision::cpp_int;

/// Truncated formal power series in q with exact integer coefficients.
///
/// A series holds exactly `precision()` coefficients, index n being the
/// coefficient of q^n. Arithmetic never reads or writes exponents at or
/// beyond the truncation order; binary operations truncate to the minimum
/// of the operand precisions. Values are immutable in spirit: every
/// mutating member returns *this only to allow product-style chaining,
/// and shared instances are safe to read concurrently.
class PowerSeries {
 public:
  /// Zero series with the given truncation order (prec >= 1).
  explicit PowerSeries(std::size_t prec);

  static PowerSeries one(std::size_t prec);
  /// c * q^e, truncated (e >= prec yields the zero series of the ring).
  static PowerSeries monomial(Int c, std::size_t e, std::size_t prec);
  static PowerSeries from_coeffs(std::vector<Int> coeffs);

  std::size_t precision() const noexcept { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^n; asking past the truncation order is an error.
  const Int& operator[](std::size_t n) const;

  /// Copy truncated to a smaller (or equal) order.
  PowerSeries truncated(std::size_t prec) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  /// Cauchy product truncated to the minimum operand precision.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);

  bool operator==(const PowerSeries& o) const = default;

  /// Multiplicative inverse in the truncated ring. The constant term must
  /// be +1 or -1; anything else is not a unit over Z and raises
  /// std::domain_error.
  PowerSeries invert() const;

  /// Multiply by q^k (coefficients shifted up, truncated).
  PowerSeries shifted(std::size_t k) const;

  /// In-place multiply by the unit binomial (1 + c*q^k), c = +-1, k >= 1.
  /// O(prec), exact.
  PowerSeries& mul_binomial(int c, std::size_t k);
  /// In-place divide by (1 + c*q^k), c = +-1, k >= 1. O(prec), exact.
  PowerSeries& div_binomial(int c, std::size_t k);
  PowerSeries& scale(const Int& c);

  /// Smallest exponent below the truncation order with negative
  /// coefficient, if any.
  std::optional<std::size_t> first_negative() const;
  bool is_nonneg() const { return !first_negative().has_value(); }
  std::vector<std::size_t> negative_indices() const;

  /// Human-readable prefix like "1 + q - 2q^3 + ...".
  std::string to_string(std::size_t max_terms = 10) const;

 private:
  std::vector<Int> coeffs_;
};

/// Smallest exponent (below the common precision) where a and b differ.
std::optional<std::size_t> first_difference(const PowerSeries& a,
                                            const PowerSeries& b);

// q-Pochhammer products. All are exact truncations: factors whose minimal
// exponent is at or beyond the truncation order cannot affect any stored
// coefficient and are skipped.

/// (q^s;q)_L = prod_{i=0}^{L-1} (1 - q^{s+i}).
PowerSeries poch_finite(std::size_t s, std::size_t L, std::size_t prec);
/// (q^s;q)_inf, s >= 1.
PowerSeries poch_infinite(std::size_t s, std::size_t prec);

/// (a; q^step)_count with a = sign*q^e. A factor (1 - sign*q^0) is the
/// constant 1-sign, so sign=+1 with e=0 gives the zero series; that is
/// permitted here (numerator use) but such a series is not invertible.
PowerSeries poch_finite_signed(int sign, std::size_t e, std::size_t count,
                               std::size_t prec, std::size_t step = 1);
/// (a; q^step)_inf with a = sign*q^e; requires e >= 1, or sign=-1 with
/// e=0 (the factor 2 case).
PowerSeries poch_infinite_signed(int sign, std::size_t e, std::size_t prec,
                                 std::size_t step = 1);

/// 1/(a;q^step)_count with a = sign*q^e, e >= 1. O(count * prec).
PowerSeries inv_poch_finite(int sign, std::size_t e, std::size_t count,
                            std::size_t prec, std::size_t step = 1);
/// 1/(a;q^step)_inf with a = sign*q^e, e >= 1.
PowerSeries inv_poch_infinite(int sign, std::size_t e, std::size_t prec,
                              std::size_t step = 1);

/// Gaussian binomial [top choose bottom]_q, truncated. bottom <= top.
PowerSeries q_binom(std::size_t top, std::size_t bottom, std::size_t prec);

}  // namespace qlab
