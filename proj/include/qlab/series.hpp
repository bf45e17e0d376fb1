#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

// coefficient * q^exponent. The exponent may be negative only where a
// Laurent-capable routine consumes the monomial (see laurent_poly.hpp).
struct QMonomial {
  BigRational coefficient{1};
  int exponent = 0;

  QMonomial() = default;
  QMonomial(BigRational c, int e = 0) : coefficient(std::move(c)), exponent(e) {}  // NOLINT

  QMonomial pow(int n) const;
  QMonomial operator-() const { return {-coefficient, exponent}; }

  friend QMonomial operator*(const QMonomial& x, const QMonomial& y) {
    return {x.coefficient * y.coefficient, x.exponent + y.exponent};
  }
  friend QMonomial operator/(const QMonomial& x, const QMonomial& y);
  friend bool operator==(const QMonomial&, const QMonomial&) = default;
};

inline QMonomial q_power(int e) { return {BigRational(1), e}; }

// x - y for monomials with equal exponents, e.g. (a - b) when both carry q^1.
QMonomial difference(const QMonomial& x, const QMonomial& y);

inline constexpr int kInfinite = std::numeric_limits<int>::max();

// Truncated power series sum_{k<=T} c_k q^k with exact rational coefficients.
// Binary operations on different truncation orders work at the smaller one.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  explicit QSeries(std::vector<BigRational> coeffs);

  static QSeries constant(const BigRational& c, int order);
  static QSeries one(int order) { return constant(BigRational(1), order); }
  static QSeries monomial(const QMonomial& m, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const BigRational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  QSeries truncate(int order) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const BigRational& scalar);

  // In-place multiplications by sparse factors. Each is O(T) per factor and
  // has an rvalue overload so builders can chain on temporaries.
  QSeries& times(const QMonomial& m) &;
  QSeries times(const QMonomial& m) && { return std::move(times(m)); }
  QSeries& times_binomial(const QMonomial& x) &;  // * (1 - x)
  QSeries times_binomial(const QMonomial& x) && { return std::move(times_binomial(x)); }
  QSeries& over_binomial(const QMonomial& x) &;  // / (1 - x)
  QSeries over_binomial(const QMonomial& x) && { return std::move(over_binomial(x)); }
  // * (x; q^step)_n and / (x; q^step)_n, n may be kInfinite.
  QSeries& times_poch(const QMonomial& x, int n, int step = 1) &;
  QSeries times_poch(const QMonomial& x, int n, int step = 1) && {
    return std::move(times_poch(x, n, step));
  }
  QSeries& over_poch(const QMonomial& x, int n, int step = 1) &;
  QSeries over_poch(const QMonomial& x, int n, int step = 1) && {
    return std::move(over_poch(x, n, step));
  }

  friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
  friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
  friend QSeries operator*(QSeries x, const QSeries& y) { return x *= y; }
  friend QSeries operator*(QSeries x, const BigRational& s) { return x *= s; }
  friend QSeries operator*(const BigRational& s, QSeries x) { return x *= s; }
  friend QSeries operator-(QSeries x);

  // Equality up to the common truncation order.
  friend bool operator==(const QSeries& x, const QSeries& y);

 private:
  std::vector<BigRational> coeffs_;
};

// Prints "c0 + c1 q + ... + O(q^{T+1})", dropping zero terms.
std::ostream& operator<<(std::ostream& os, const QSeries& s);

QSeries series_add(const QSeries& x, const QSeries& y);
QSeries series_mul(const QSeries& x, const QSeries& y);
// Throws ZeroConstantTerm when x[0] == 0.
QSeries series_inverse(const QSeries& x);

// (x; q^step)_n truncated at `order`; n == kInfinite multiplies only the
// factors whose q-exponent does not exceed the order.
QSeries pochhammer(const QMonomial& x, int n, int order, int step = 1);

// Gaussian binomial [N, n] via the Pascal recurrence; zero when n < 0 or n > N.
QSeries q_binomial(int N, int n, int order);
// All of [N, 0], ..., [N, N] in one Pascal sweep.
std::vector<QSeries> q_binomial_row(int N, int order);

// Basic hypergeometric series
//   r phi s [num; den; q, arg] = sum_k (num)_k / ((q)_k (den)_k)
//                                  * ((-1)^k q^{k(k-1)/2})^{1+s-r} * arg^k.
// With `terms` unset the loop stops once the term's q-order lower bound
// passes `order`, or when a numerator q^{-m} terminates the series.
// Arguments with negative q-exponents are routed through exact Laurent
// arithmetic; such a series must terminate. Throws PoleInTermRange when a
// denominator factor vanishes and std::invalid_argument when the sum
// neither grows in q-order nor terminates.
QSeries phi_series(std::span<const QMonomial> numerators, std::span<const QMonomial> denominators,
                   const QMonomial& argument, std::optional<int> terms, int order);

}  // namespace qlab
