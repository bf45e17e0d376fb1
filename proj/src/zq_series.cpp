#include "qlab/zq_series.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qlab {

namespace {
const BigRational kZero{0};
}

LaurentZQSeries::LaurentZQSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) rows_[static_cast<std::size_t>(n)].resize(2 * static_cast<std::size_t>(n) + 1);
}

LaurentZQSeries LaurentZQSeries::from_series(const QSeries& s) {
  LaurentZQSeries f(s.order());
  for (int n = 0; n <= s.order(); ++n) f.rows_[static_cast<std::size_t>(n)][slot(n, 0)] = s[n];
  return f;
}

const BigRational& LaurentZQSeries::coeff(int q_exp, int z_exp) const {
  if (q_exp < 0 || q_exp > order() || std::abs(z_exp) > q_exp) return kZero;
  return rows_[static_cast<std::size_t>(q_exp)][slot(q_exp, z_exp)];
}

void LaurentZQSeries::add(int q_exp, int z_exp, const BigRational& value) {
  if (q_exp < 0 || q_exp > order()) throw std::out_of_range("q-exponent outside truncation");
  if (std::abs(z_exp) > q_exp) {
    throw std::out_of_range("z-exponent violates the |k| <= n support bound");
  }
  rows_[static_cast<std::size_t>(q_exp)][slot(q_exp, z_exp)] += value;
}

LaurentZQSeries& LaurentZQSeries::operator+=(const LaurentZQSeries& other) {
  if (other.order() < order()) rows_.resize(other.rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    for (std::size_t k = 0; k < rows_[n].size(); ++k) rows_[n][k] += other.rows_[n][k];
  }
  return *this;
}

LaurentZQSeries& LaurentZQSeries::operator*=(const BigRational& scalar) {
  for (auto& row : rows_) {
    for (auto& c : row) c *= scalar;
  }
  return *this;
}

LaurentZQSeries operator*(const LaurentZQSeries& x, const LaurentZQSeries& y) {
  const int t = std::min(x.order(), y.order());
  LaurentZQSeries out(t);
  BigRational prod;
  for (int n1 = 0; n1 <= t; ++n1) {
    for (int k1 = -n1; k1 <= n1; ++k1) {
      const BigRational& a = x.coeff(n1, k1);
      if (a == 0) continue;
      for (int n2 = 0; n1 + n2 <= t; ++n2) {
        for (int k2 = -n2; k2 <= n2; ++k2) {
          const BigRational& b = y.coeff(n2, k2);
          if (b == 0) continue;
          mpq_mul(prod.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
          out.rows_[static_cast<std::size_t>(n1 + n2)][LaurentZQSeries::slot(n1 + n2, k1 + k2)] += prod;
        }
      }
    }
  }
  return out;
}

LaurentZQSeries& LaurentZQSeries::over_binomial(const BigRational& c, int z_exp, int q_exp) {
  if (q_exp < 1 || std::abs(z_exp) > q_exp) {
    throw std::invalid_argument("over_binomial: need q_exp >= 1 and |z_exp| <= q_exp");
  }
  BigRational prod;
  for (int n = q_exp; n <= order(); ++n) {
    const int m = n - q_exp;
    for (int k = -m; k <= m; ++k) {
      const BigRational& src = rows_[static_cast<std::size_t>(m)][slot(m, k)];
      if (src == 0) continue;
      mpq_mul(prod.get_mpq_t(), src.get_mpq_t(), c.get_mpq_t());
      rows_[static_cast<std::size_t>(n)][slot(n, k + z_exp)] += prod;
    }
  }
  return *this;
}

LaurentZQSeries apply_z_derivative(const LaurentZQSeries& f) {
  LaurentZQSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    for (int k = -n; k <= n; ++k) {
      if (k != 0 && f.coeff(n, k) != 0) out.add(n, k, f.coeff(n, k) * k);
    }
  }
  return out;
}

LaurentZQSeries positive_z_part(const LaurentZQSeries& f) {
  LaurentZQSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    for (int k = 1; k <= n; ++k) {
      if (f.coeff(n, k) != 0) out.add(n, k, f.coeff(n, k));
    }
  }
  return out;
}

QSeries at_z_one(const LaurentZQSeries& f) {
  std::vector<BigRational> c(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) {
    for (int k = -n; k <= n; ++k) c[static_cast<std::size_t>(n)] += f.coeff(n, k);
  }
  return QSeries(std::move(c));
}

std::variant<LaurentZQSeries, QSeries> laurent_extract(const LaurentZQSeries& f, ExtractMode mode) {
  switch (mode) {
    case ExtractMode::ZDerivative:
      return apply_z_derivative(f);
    case ExtractMode::PositivePart:
      return positive_z_part(f);
    case ExtractMode::AtZOne:
      return at_z_one(f);
  }
  throw std::invalid_argument("unknown extraction mode");
}

LaurentZQSeries finite_crank_generating_function(int N, int order) {
  if (N < 0) throw std::invalid_argument("negative N");
  auto f = LaurentZQSeries::from_series(pochhammer(q_power(1), N, order));
  for (int k = 1; k <= N && k <= order; ++k) {
    f.over_binomial(BigRational(1), 1, k);
    f.over_binomial(BigRational(1), -1, k);
  }
  return f;
}

LaurentZQSeries finite_rank_generating_function(int N, int order) {
  if (N < 0) throw std::invalid_argument("negative N");
  const auto qbin = q_binomial_row(N, order);
  LaurentZQSeries total(order);
  for (int n = 0; n <= N && n * n <= order; ++n) {
    QSeries base = qbin[static_cast<std::size_t>(n)];
    base.times_poch(q_power(1), n).times(q_power(n * n));
    auto term = LaurentZQSeries::from_series(base);
    for (int k = 1; k <= n && k <= order; ++k) {
      term.over_binomial(BigRational(1), 1, k);
      term.over_binomial(BigRational(1), -1, k);
    }
    total += term;
  }
  return total;
}

QSeries first_positive_moment(const LaurentZQSeries& f) {
  return at_z_one(positive_z_part(apply_z_derivative(f)));
}

}  // namespace qlab
