#pragma once

// Shared vocabulary for the registry source files.

#include <vector>

#include "qlab/identities.hpp"
#include "qlab/series.hpp"

namespace qlab::kit {

using Ctx = BuildContext;

inline QSeries one(int T) { return QSeries::one(T); }
inline QSeries mono(const QMonomial& m, int T) { return QSeries::monomial(m, T); }
inline QMonomial scalar(const BigRational& c) { return {c, 0}; }
inline QMonomial scalar(long c) { return {BigRational(c), 0}; }
inline QMonomial q(int e) { return q_power(e); }
inline long tri(long n) { return n * (n + 1) / 2; }

// x / (1 - x)
inline QSeries ratio(const QMonomial& x, int T) { return mono(x, T).over_binomial(x); }

// Sums term(n) over first..last, stopping once bound(n) passes T. The bound
// must be non-decreasing in n.
template <class Bound, class Term>
QSeries sum(int T, int first, int last, Bound bound, Term term) {
  QSeries s(T);
  for (long n = first; n <= last; ++n) {
    if (bound(static_cast<int>(n)) > T) break;
    s += term(static_cast<int>(n));
  }
  return s;
}

inline auto no_bound() {
  return [](int) { return 0L; };
}

// Pole predicates read raw (unshifted) parameter values.
inline Pole nonzero(const std::string& name) {
  return {name + " = 0", [name](const ParamEnv& e) { return e.at(name) == 0; }};
}
inline Pole not_one(const std::string& name) {
  return {name + " = 1", [name](const ParamEnv& e) { return e.at(name) == 1; }};
}

void add_entries(std::vector<Identity>& out);       // R01-R19
void add_applications(std::vector<Identity>& out);  // R20-R36
void add_classical(std::vector<Identity>& out);     // R37-R45

}  // namespace qlab::kit
