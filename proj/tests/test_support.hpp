#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "qlab/series.hpp"

namespace qlab::testing {

inline QSeries series_of(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QSeries(std::move(c));
}

inline std::vector<long> integers_of(const QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_num().get_si());
  return out;
}

// Small random rationals; the constant term is kept nonzero on request.
inline QSeries random_series(std::mt19937_64& rng, int order, bool unit_constant = false) {
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    x = make_rational(num, den);
  }
  if (unit_constant && c[0] == 0) c[0] = 1;
  return QSeries(std::move(c));
}

// Euler's pentagonal-number expansion of (q;q)_inf, summed directly.
inline QSeries pentagonal_series(int order) {
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (long k = -order; k <= order; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < 0 || e > order) continue;
    c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return QSeries(std::move(c));
}

}  // namespace qlab::testing
