#include "qlab/fps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlab {

PowerSeries::PowerSeries(std::size_t prec) : coeffs_(prec) {
  if (prec == 0) throw std::invalid_argument("PowerSeries: prec must be >= 1");
}

PowerSeries PowerSeries::one(std::size_t prec) {
  PowerSeries r(prec);
  r.coeffs_[0] = 1;
  return r;
}

PowerSeries PowerSeries::monomial(Int c, std::size_t e, std::size_t prec) {
  PowerSeries r(prec);
  if (e < prec) r.coeffs_[e] = std::move(c);
  return r;
}

PowerSeries PowerSeries::from_coeffs(std::vector<Int> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("PowerSeries: empty coefficient vector");
  PowerSeries r(coeffs.size());
  r.coeffs_ = std::move(coeffs);
  return r;
}

const Int& PowerSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("PowerSeries: coefficient index " +
                            std::to_string(n) + " >= precision " +
                            std::to_string(coeffs_.size()));
  return coeffs_[n];
}

PowerSeries PowerSeries::truncated(std::size_t prec) const {
  if (prec > coeffs_.size())
    throw std::invalid_argument(
        "PowerSeries::truncated: cannot extend precision");
  PowerSeries r(prec);
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<long>(prec),
            r.coeffs_.begin());
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t i = 0; i < p; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t i = 0; i < p; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t i = 0; i < p; ++i) {
    const Int& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < p - i; ++j) {
      const Int& bj = b.coeffs_[j];
      if (!bj.is_zero()) r.coeffs_[i + j] += ai * bj;
    }
  }
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(precision());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  *this = *this + o;
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  *this = *this - o;
  return *this;
}

PowerSeries PowerSeries::invert() const {
  const Int& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error(
        "PowerSeries::invert: constant term is not a unit (+1/-1); series is "
        "not invertible in the truncated ring");
  std::size_t p = precision();
  PowerSeries r(p);
  r.coeffs_[0] = c0;  // 1/c0 == c0 for +-1
  for (std::size_t n = 1; n < p; ++n) {
    Int acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * r.coeffs_[n - k];
    }
    r.coeffs_[n] = -c0 * acc;
  }
  return r;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  std::size_t p = precision();
  PowerSeries r(p);
  for (std::size_t n = k; n < p; ++n) r.coeffs_[n] = coeffs_[n - k];
  return r;
}

PowerSeries& PowerSeries::mul_binomial(int c, std::size_t k) {
  if (k == 0 || (c != 1 && c != -1))
    throw std::invalid_argument("mul_binomial: need k >= 1 and c = +-1");
  std::size_t p = precision();
  for (std::size_t n = p; n-- > k;) {
    if (c > 0)
      coeffs_[n] += coeffs_[n - k];
    else
      coeffs_[n] -= coeffs_[n - k];
  }
  return *this;
}

PowerSeries& PowerSeries::div_binomial(int c, std::size_t k) {
  if (k == 0 || (c != 1 && c != -1))
    throw std::invalid_argument("div_binomial: need k >= 1 and c = +-1");
  std::size_t p = precision();
  for (std::size_t n = k; n < p; ++n) {
    if (c > 0)
      coeffs_[n] -= coeffs_[n - k];
    else
      coeffs_[n] += coeffs_[n - k];
  }
  return *this;
}

PowerSeries& PowerSeries::scale(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::optional<std::size_t> PowerSeries::first_negative() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] < 0) return n;
  return std::nullopt;
}

std::vector<std::size_t> PowerSeries::negative_indices() const {
  std::vector<std::size_t> r;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] < 0) r.push_back(n);
  return r;
}

std::string PowerSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size() && shown < max_terms; ++n) {
    const Int& c = coeffs_[n];
    if (c.is_zero()) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || n == 0) os << a.str();
    if (n == 1) os << "q";
    if (n > 1) os << "q^" << n;
    ++shown;
  }
  if (first) return "0";
  if (shown == max_terms) os << " + ...";
  os << " (O(q^" << coeffs_.size() << "))";
  return os.str();
}

std::optional<std::size_t> first_difference(const PowerSeries& a,
                                            const PowerSeries& b) {
  std::size_t p = std::min(a.precision(), b.precision());
  for (std::size_t n = 0; n < p; ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

PowerSeries poch_finite(std::size_t s, std::size_t L, std::size_t prec) {
  return poch_finite_signed(+1, s, L, prec);
}

PowerSeries poch_infinite(std::size_t s, std::size_t prec) {
  if (s == 0)
    throw std::domain_error("poch_infinite: s must be >= 1 (the q^0 factor "
                            "would vanish identically)");
  return poch_infinite_signed(+1, s, prec);
}

PowerSeries poch_finite_signed(int sign, std::size_t e, std::size_t count,
                               std::size_t prec, std::size_t step) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("poch_finite_signed: sign must be +-1");
  PowerSeries r = PowerSeries::one(prec);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t ee = e + i * step;
    if (ee >= prec) break;
    if (ee == 0)
      r.scale(1 - sign);  // (1 - sign) is 0 or 2
    else
      r.mul_binomial(-sign, ee);
  }
  return r;
}

PowerSeries poch_infinite_signed(int sign, std::size_t e, std::size_t prec,
                                 std::size_t step) {
  if (e == 0 && sign != -1)
    throw std::domain_error("poch_infinite_signed: exponent 0 needs sign -1");
  if (step == 0) throw std::invalid_argument("poch_infinite_signed: step 0");
  PowerSeries r = PowerSeries::one(prec);
  for (std::size_t ee = e; ee < prec; ee += step) {
    if (ee == 0)
      r.scale(2);
    else
      r.mul_binomial(-sign, ee);
  }
  return r;
}

PowerSeries inv_poch_finite(int sign, std::size_t e, std::size_t count,
                            std::size_t prec, std::size_t step) {
  if (e == 0)
    throw std::domain_error("inv_poch_finite: exponent must be >= 1");
  PowerSeries r = PowerSeries::one(prec);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t ee = e + i * step;
    if (ee >= prec) break;  // 1/(1-a q^ee) == 1 in the truncated ring
    r.div_binomial(-sign, ee);
  }
  return r;
}

PowerSeries inv_poch_infinite(int sign, std::size_t e, std::size_t prec,
                              std::size_t step) {
  if (e == 0)
    throw std::domain_error("inv_poch_infinite: exponent must be >= 1");
  if (step == 0) throw std::invalid_argument("inv_poch_infinite: step 0");
  PowerSeries r = PowerSeries::one(prec);
  for (std::size_t ee = e; ee < prec; ee += step) r.div_binomial(-sign, ee);
  return r;
}

PowerSeries q_binom(std::size_t top, std::size_t bottom, std::size_t prec) {
  if (bottom > top)
    throw std::domain_error("q_binom: bottom > top");
  // prod_{i=1}^{bottom} (1 - q^{top-bottom+i}) / (1 - q^i)
  PowerSeries r = PowerSeries::one(prec);
  for (std::size_t i = 1; i <= bottom; ++i) {
    std::size_t ee = top - bottom + i;
    if (ee < prec) r.mul_binomial(-1, ee);
  }
  for (std::size_t i = 1; i <= bottom; ++i) {
    if (i < prec) r.div_binomial(-1, i);
  }
  return r;
}

}  // namespace qlab
