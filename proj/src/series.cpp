#include "qlab/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qlab/errors.hpp"
#include "qlab/laurent_poly.hpp"

namespace qlab {

QMonomial QMonomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative monomial power");
  return {qlab::pow(coefficient, n), exponent * n};
}

QMonomial operator/(const QMonomial& x, const QMonomial& y) {
  if (y.coefficient == 0) throw std::domain_error("division by a zero monomial");
  return {x.coefficient / y.coefficient, x.exponent - y.exponent};
}

QMonomial difference(const QMonomial& x, const QMonomial& y) {
  if (x.exponent != y.exponent) {
    throw std::invalid_argument("monomial difference needs equal q-exponents");
  }
  return {x.coefficient - y.coefficient, x.exponent};
}

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

void require_power_exponent(const QMonomial& m) {
  if (m.exponent < 0) {
    throw std::invalid_argument("negative q-exponent " + std::to_string(m.exponent) +
                                " in a power-series operation");
  }
}

}  // namespace

QSeries::QSeries(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
}

QSeries QSeries::constant(const BigRational& c, int order) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const QMonomial& m, int order) {
  require_power_exponent(m);
  QSeries s(order);
  if (m.exponent <= order) s.coeffs_[static_cast<std::size_t>(m.exponent)] = m.coefficient;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

QSeries QSeries::truncate(int order) const {
  require_order(order);
  const int t = std::min(order, this->order());
  return QSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + t + 1));
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  const int t = std::min(order(), other.order());
  std::vector<BigRational> out(static_cast<std::size_t>(t) + 1);
  BigRational prod;
  for (int i = 0; i <= t; ++i) {
    const BigRational& xi = coeffs_[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; i + j <= t; ++j) {
      const BigRational& yj = other.coeffs_[static_cast<std::size_t>(j)];
      if (yj == 0) continue;
      mpq_mul(prod.get_mpq_t(), xi.get_mpq_t(), yj.get_mpq_t());
      out[static_cast<std::size_t>(i + j)] += prod;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator-(QSeries x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

bool operator==(const QSeries& x, const QSeries& y) {
  const int t = std::min(x.order(), y.order());
  for (int k = 0; k <= t; ++k) {
    if (x[k] != y[k]) return false;
  }
  return true;
}

QSeries& QSeries::times(const QMonomial& m) & {
  require_power_exponent(m);
  const int t = order();
  if (m.coefficient == 0) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  for (int k = t; k >= 0; --k) {
    auto& dst = coeffs_[static_cast<std::size_t>(k)];
    if (k >= m.exponent) {
      dst = coeffs_[static_cast<std::size_t>(k - m.exponent)] * m.coefficient;
    } else {
      dst = 0;
    }
  }
  return *this;
}

QSeries& QSeries::times_binomial(const QMonomial& x) & {
  require_power_exponent(x);
  if (x.coefficient == 0) return *this;
  if (x.exponent == 0) return *this *= BigRational(1 - x.coefficient);
  BigRational prod;
  for (int k = order(); k >= x.exponent; --k) {
    const auto& src = coeffs_[static_cast<std::size_t>(k - x.exponent)];
    if (src == 0) continue;
    mpq_mul(prod.get_mpq_t(), src.get_mpq_t(), x.coefficient.get_mpq_t());
    coeffs_[static_cast<std::size_t>(k)] -= prod;
  }
  return *this;
}

QSeries& QSeries::over_binomial(const QMonomial& x) & {
  require_power_exponent(x);
  if (x.coefficient == 0) return *this;
  if (x.exponent == 0) {
    const BigRational d = 1 - x.coefficient;
    if (d == 0) throw ZeroConstantTerm("division by 1 - " + to_string(x.coefficient) + " = 0");
    for (auto& c : coeffs_) c /= d;
    return *this;
  }
  BigRational prod;
  for (int k = x.exponent; k <= order(); ++k) {
    const auto& src = coeffs_[static_cast<std::size_t>(k - x.exponent)];
    if (src == 0) continue;
    mpq_mul(prod.get_mpq_t(), src.get_mpq_t(), x.coefficient.get_mpq_t());
    coeffs_[static_cast<std::size_t>(k)] += prod;
  }
  return *this;
}

QSeries& QSeries::times_poch(const QMonomial& x, int n, int step) & {
  require_power_exponent(x);
  if (step < 1) throw std::invalid_argument("Pochhammer base step must be positive");
  if (n < 0) throw std::invalid_argument("negative Pochhammer length");
  if (x.coefficient == 0) return *this;
  for (int k = 0; k < n; ++k) {
    const long e = static_cast<long>(x.exponent) + static_cast<long>(step) * k;
    if (e > order()) break;
    times_binomial({x.coefficient, static_cast<int>(e)});
  }
  return *this;
}

QSeries& QSeries::over_poch(const QMonomial& x, int n, int step) & {
  require_power_exponent(x);
  if (step < 1) throw std::invalid_argument("Pochhammer base step must be positive");
  if (n < 0) throw std::invalid_argument("negative Pochhammer length");
  if (x.coefficient == 0) return *this;
  for (int k = 0; k < n; ++k) {
    const long e = static_cast<long>(x.exponent) + static_cast<long>(step) * k;
    if (e > order()) break;
    over_binomial({x.coefficient, static_cast<int>(e)});
  }
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k] == 0) continue;
    if (!first) os << " + ";
    os << s[k];
    if (k > 0) os << " q^" << k;
    first = false;
  }
  if (first) os << "0";
  return os << " + O(q^" << s.order() + 1 << ")";
}

QSeries series_add(const QSeries& x, const QSeries& y) { return x + y; }

QSeries series_mul(const QSeries& x, const QSeries& y) { return x * y; }

QSeries series_inverse(const QSeries& x) {
  if (x[0] == 0) throw ZeroConstantTerm("series inverse: constant term is zero");
  const int t = x.order();
  const BigRational inv0 = 1 / x[0];
  std::vector<BigRational> y(static_cast<std::size_t>(t) + 1);
  y[0] = inv0;
  BigRational acc, prod;
  for (int k = 1; k <= t; ++k) {
    acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (x[i] == 0) continue;
      mpq_mul(prod.get_mpq_t(), x[i].get_mpq_t(), y[static_cast<std::size_t>(k - i)].get_mpq_t());
      acc += prod;
    }
    y[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return QSeries(std::move(y));
}

QSeries pochhammer(const QMonomial& x, int n, int order, int step) {
  return QSeries::one(order).times_poch(x, n, step);
}

std::vector<QSeries> q_binomial_row(int N, int order) {
  require_order(order);
  if (N < 0) return {};
  const auto cap = static_cast<std::size_t>(order) + 1;
  // rows[j] holds [m, j] while m sweeps 0..N.
  std::vector<std::vector<BigInteger>> rows(1, std::vector<BigInteger>{1});
  for (int m = 1; m <= N; ++m) {
    std::vector<std::vector<BigInteger>> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      // [m, j] = [m-1, j-1] + q^j [m-1, j]
      std::vector<BigInteger> poly;
      if (j >= 1) poly = rows[static_cast<std::size_t>(j - 1)];
      if (j <= m - 1) {
        const auto& upper = rows[static_cast<std::size_t>(j)];
        const std::size_t need = std::min(cap, upper.size() + static_cast<std::size_t>(j));
        if (poly.size() < need) poly.resize(need);
        for (std::size_t i = 0; i + static_cast<std::size_t>(j) < need; ++i) {
          poly[i + static_cast<std::size_t>(j)] += upper[i];
        }
      }
      if (poly.size() > cap) poly.resize(cap);
      next[static_cast<std::size_t>(j)] = std::move(poly);
    }
    rows = std::move(next);
  }
  std::vector<QSeries> out;
  out.reserve(rows.size());
  for (const auto& poly : rows) {
    std::vector<BigRational> c(cap);
    for (std::size_t i = 0; i < poly.size() && i < cap; ++i) c[i] = BigRational(poly[i]);
    out.emplace_back(std::move(c));
  }
  return out;
}

QSeries q_binomial(int N, int n, int order) {
  if (n < 0 || n > N) return QSeries(order);
  return q_binomial_row(N, order)[static_cast<std::size_t>(n)];
}

namespace {

bool has_negative_exponent(std::span<const QMonomial> ms) {
  return std::any_of(ms.begin(), ms.end(), [](const QMonomial& m) { return m.exponent < 0; });
}

// Index of the first vanishing factor of (x)_k, i.e. x = q^{-m} gives m.
std::optional<int> terminating_index(const QMonomial& x) {
  if (x.coefficient == 1 && x.exponent <= 0) return -x.exponent;
  return std::nullopt;
}

std::optional<int> last_nonzero_term(std::span<const QMonomial> numerators) {
  std::optional<int> last;
  for (const auto& x : numerators) {
    if (auto m = terminating_index(x)) last = last ? std::min(*last, *m) : *m;
  }
  return last;
}

std::string describe(const QMonomial& x, int k) {
  return "1 - (" + to_string(x.coefficient) + ")q^" + std::to_string(x.exponent + k);
}

QSeries phi_series_laurent(std::span<const QMonomial> numerators,
                           std::span<const QMonomial> denominators, const QMonomial& argument,
                           std::optional<int> terms, int order) {
  std::optional<int> last = last_nonzero_term(numerators);
  if (terms) last = last ? std::min(*last, *terms - 1) : *terms - 1;
  if (!last) {
    throw std::invalid_argument(
        "phi_series: negative q-exponents require a terminating numerator q^{-m}");
  }
  const int balance =
      1 + static_cast<int>(denominators.size()) - static_cast<int>(numerators.size());

  LaurentPoly num = LaurentPoly::constant(BigRational(1));
  LaurentPoly den = LaurentPoly::constant(BigRational(1));
  LaurentPoly sum;
  for (int k = 0; k <= *last; ++k) {
    if (k > 0) {
      for (const auto& x : numerators) num *= LaurentPoly::binomial({x.coefficient, x.exponent + k - 1});
      for (const auto& x : denominators) {
        if (x.coefficient == 1 && x.exponent + k - 1 == 0) {
          throw PoleInTermRange("phi_series: denominator factor " + describe(x, k - 1) +
                                " vanishes at term " + std::to_string(k));
        }
        den *= LaurentPoly::binomial({x.coefficient, x.exponent + k - 1});
      }
      den *= LaurentPoly::binomial(q_power(k));
      num *= argument;
      // ((-1)^k q^{k(k-1)/2})^balance, one step at a time.
      const QMonomial step{BigRational(-1), k - 1};
      for (int b = 0; b < balance; ++b) num *= step;
      for (int b = 0; b < -balance; ++b) den *= step;
    }
    sum += expand_quotient(num, den, order);
  }
  return sum.to_series(order);
}

}  // namespace

QSeries phi_series(std::span<const QMonomial> numerators, std::span<const QMonomial> denominators,
                   const QMonomial& argument, std::optional<int> terms, int order) {
  require_order(order);
  if (terms && *terms < 0) throw std::invalid_argument("phi_series: negative term count");
  if (terms && *terms == 0) return QSeries(order);
  if (has_negative_exponent(numerators) || has_negative_exponent(denominators) ||
      argument.exponent < 0) {
    return phi_series_laurent(numerators, denominators, argument, terms, order);
  }
  const int balance =
      1 + static_cast<int>(denominators.size()) - static_cast<int>(numerators.size());
  if (balance < 0) {
    throw std::invalid_argument("phi_series: r > s + 1 needs a terminating Laurent form");
  }
  const bool grows = argument.coefficient == 0 || argument.exponent > 0 || balance > 0;
  const std::optional<int> stop = last_nonzero_term(numerators);
  if (!terms && !grows && !stop) {
    throw std::invalid_argument("phi_series: terms neither gain q-order nor terminate");
  }

  QSeries sum(order);
  QSeries term = QSeries::one(order);
  for (int k = 0;; ++k) {
    if (terms && k >= *terms) break;
    if (stop && k > *stop) break;
    if (k > 0) {
      if (argument.coefficient == 0) break;
      const long bound = static_cast<long>(k) * argument.exponent +
                         static_cast<long>(balance) * k * (k - 1) / 2;
      if (bound > order) break;
      for (const auto& x : numerators) term.times_binomial({x.coefficient, x.exponent + k - 1});
      for (const auto& x : denominators) {
        if (x.coefficient == 1 && x.exponent + k - 1 == 0) {
          throw PoleInTermRange("phi_series: denominator factor " + describe(x, k - 1) +
                                " vanishes at term " + std::to_string(k));
        }
        term.over_binomial({x.coefficient, x.exponent + k - 1});
      }
      term.over_binomial(q_power(k));
      term.times(argument);
      for (int b = 0; b < balance; ++b) term.times(QMonomial{BigRational(-1), k - 1});
    }
    sum += term;
  }
  return sum;
}

}  // namespace qlab
