#pragma once

#include <variant>
#include <vector>

#include "qlab/rational.hpp"
#include "qlab/series.hpp"

namespace qlab {

// Power series in q truncated at T whose q^n coefficient is a Laurent
// polynomial in z supported on |k| <= n. The support bound holds for every
// rank/crank generating function since each z^{+-1} travels with a q.
class LaurentZQSeries {
 public:
  explicit LaurentZQSeries(int order = 0);
  static LaurentZQSeries from_series(const QSeries& s);

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  // Zero outside the support bound.
  const BigRational& coeff(int q_exp, int z_exp) const;
  void add(int q_exp, int z_exp, const BigRational& value);

  LaurentZQSeries& operator+=(const LaurentZQSeries& other);
  LaurentZQSeries& operator*=(const BigRational& scalar);
  friend LaurentZQSeries operator+(LaurentZQSeries x, const LaurentZQSeries& y) { return x += y; }
  friend LaurentZQSeries operator*(const LaurentZQSeries& x, const LaurentZQSeries& y);
  friend bool operator==(const LaurentZQSeries&, const LaurentZQSeries&) = default;

  // Divides by (1 - c z^{z_exp} q^{q_exp}); needs q_exp >= 1 and
  // |z_exp| <= q_exp so the support bound survives.
  LaurentZQSeries& over_binomial(const BigRational& c, int z_exp, int q_exp);

 private:
  static std::size_t slot(int q_exp, int z_exp) {
    return static_cast<std::size_t>(z_exp + q_exp);
  }
  std::vector<std::vector<BigRational>> rows_;  // rows_[n][k + n]
};

LaurentZQSeries apply_z_derivative(const LaurentZQSeries& f);  // z d/dz
LaurentZQSeries positive_z_part(const LaurentZQSeries& f);
QSeries at_z_one(const LaurentZQSeries& f);

enum class ExtractMode { ZDerivative, PositivePart, AtZOne };
std::variant<LaurentZQSeries, QSeries> laurent_extract(const LaurentZQSeries& f, ExtractMode mode);

// (q)_N / ((zq)_N (z^{-1}q)_N)
LaurentZQSeries finite_crank_generating_function(int N, int order);
// sum_{n=0}^N [N, n] (q)_n q^{n^2} / ((zq)_n (z^{-1}q)_n)
LaurentZQSeries finite_rank_generating_function(int N, int order);

// The positive first moment route: z d/dz, keep z^{k>0}, set z = 1.
QSeries first_positive_moment(const LaurentZQSeries& f);

}  // namespace qlab
