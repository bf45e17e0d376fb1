#include "qlab/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlab/errors.hpp"

namespace qlab {

LaurentPoly LaurentPoly::constant(const BigRational& c) { return monomial({c, 0}); }

LaurentPoly LaurentPoly::monomial(const QMonomial& m) {
  LaurentPoly p;
  p.low_ = m.exponent;
  p.coeffs_.push_back(m.coefficient);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::binomial(const QMonomial& x) {
  return constant(BigRational(1)) - monomial(x);
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<BigRational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

BigRational LaurentPoly::coeff(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const BigRational& c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(degree(), other.degree());
  std::vector<BigRational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    out[i + static_cast<std::size_t>(other.low_ - lo)] += other.coeffs_[i];
  }
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  LaurentPoly neg = other;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly{};
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1);
  BigRational prod;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpq_mul(prod.get_mpq_t(), coeffs_[i].get_mpq_t(), other.coeffs_[j].get_mpq_t());
      out[i + j] += prod;
    }
  }
  low_ += other.low_;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QMonomial& m) {
  if (m.coefficient == 0) return *this = LaurentPoly{};
  if (is_zero()) return *this;
  low_ += m.exponent;
  for (auto& c : coeffs_) c *= m.coefficient;
  return *this;
}

LaurentPoly LaurentPoly::truncate(int order) const {
  LaurentPoly p = *this;
  if (p.is_zero()) return p;
  if (order < p.low_) return LaurentPoly{};
  const int keep = std::min(static_cast<int>(p.coeffs_.size()), order - p.low_ + 1);
  p.coeffs_.resize(static_cast<std::size_t>(keep));
  p.normalize();
  return p;
}

QSeries LaurentPoly::to_series(int order) const {
  if (!is_zero() && low_ < 0) {
    throw std::domain_error("Laurent polynomial has a nonzero coefficient at q^" +
                            std::to_string(low_) + "; not a power series");
  }
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (int e = 0; e <= order; ++e) c[static_cast<std::size_t>(e)] = coeff(e);
  return QSeries(std::move(c));
}

LaurentPoly laurent_pochhammer(const QMonomial& x, int n, int step) {
  if (n < 0) throw std::invalid_argument("negative Pochhammer length");
  LaurentPoly p = LaurentPoly::constant(BigRational(1));
  for (int k = 0; k < n; ++k) p *= LaurentPoly::binomial({x.coefficient, x.exponent + step * k});
  return p;
}

LaurentPoly expand_quotient(const LaurentPoly& num, const LaurentPoly& den, int order) {
  if (den.is_zero()) throw ZeroConstantTerm("expand_quotient: zero denominator");
  if (num.is_zero()) return LaurentPoly{};
  const int val = num.valuation() - den.valuation();
  const int length = order - val + 1;
  if (length <= 0) return LaurentPoly{};

  const int du = num.valuation();
  const int dw = den.valuation();
  const BigRational inv0 = 1 / den.coeff(dw);
  const int wlen = den.degree() - dw + 1;
  std::vector<BigRational> y(static_cast<std::size_t>(length));
  BigRational acc, prod;
  for (int i = 0; i < length; ++i) {
    acc = num.coeff(du + i);
    for (int j = 1; j <= std::min(i, wlen - 1); ++j) {
      const BigRational w = den.coeff(dw + j);
      if (w == 0) continue;
      mpq_mul(prod.get_mpq_t(), w.get_mpq_t(), y[static_cast<std::size_t>(i - j)].get_mpq_t());
      acc -= prod;
    }
    y[static_cast<std::size_t>(i)] = acc * inv0;
  }
  return LaurentPoly::from_coeffs(val, std::move(y));
}

}  // namespace qlab
