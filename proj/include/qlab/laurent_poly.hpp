#pragma once

#include <vector>

#include "qlab/rational.hpp"
#include "qlab/series.hpp"

namespace qlab {

// Exact Laurent polynomial in q. Used for terminating sums whose Pochhammer
// arguments carry q^{-N}; each term is a ratio of two such polynomials and is
// expanded to a fixed order only at the end.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const BigRational& c);
  static LaurentPoly monomial(const QMonomial& m);
  static LaurentPoly binomial(const QMonomial& x);  // 1 - x
  // sum_i coeffs[i] q^{low + i}
  static LaurentPoly from_coeffs(int low, std::vector<BigRational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const { return low_; }
  int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const QMonomial& m);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(LaurentPoly x, const LaurentPoly& y) { return x *= y; }
  friend LaurentPoly operator*(LaurentPoly x, const QMonomial& m) { return x *= m; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Drops every exponent above `order`.
  LaurentPoly truncate(int order) const;

  // Coefficients 0..order as a power series. Throws std::domain_error if a
  // negative exponent carries a nonzero coefficient.
  QSeries to_series(int order) const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigRational> coeffs_;
};

// prod_{k<n} (1 - x q^{step k}) for finite n, exactly.
LaurentPoly laurent_pochhammer(const QMonomial& x, int n, int step = 1);

// Laurent expansion of num/den keeping exponents <= order. Throws
// ZeroConstantTerm when den is the zero polynomial.
LaurentPoly expand_quotient(const LaurentPoly& num, const LaurentPoly& den, int order);

}  // namespace qlab
