// The finite 2phi1 sum lemmas and theorem, their N -> infinity special cases
// (spt, N_SC, c = 0, d -> 0), and the finite first rank/crank moments.

#include <array>

#include "qlab/partitions.hpp"
#include "qlab/zq_series.hpp"
#include "registry_kit.hpp"

namespace qlab::kit {

namespace {

QMonomial sign(int n) { return scalar(n % 2 == 0 ? 1 : -1); }

// 2phi1(dq, dq^{N+1}; dq^{k+1}; q, cq^k/d); N = kInfinite drops the second
// numerator parameter.
QSeries heine_inner(const QMonomial& c, const QMonomial& d, int k, int N, int T) {
  const std::array<QMonomial, 2> num = {d * q(1), N == kInfinite ? QMonomial(0) : d * q(N + 1)};
  const std::array<QMonomial, 1> den = {d * q(k + 1)};
  return phi_series(num, den, c * q(k) / d, std::nullopt, T);
}

// (c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf)
//   * sum_k [N,k] d^k q^{k(k+1)} / ((dq)_k (1-q^k)) 2phi1(...)
QSeries finite_heine_sum(const QMonomial& c, const QMonomial& d, int N, int T) {
  const auto qb = q_binomial_row(N, T);
  const auto s = sum(T, 1, N, [](int k) { return k * (k + 1); }, [&](int k) {
    return heine_inner(c, d, k, N, T) * QSeries(qb[k])
                                            .times(d.pow(k) * q(k * (k + 1)))
                                            .over_poch(d * q(1), k)
                                            .over_binomial(q(k));
  });
  return QSeries(s)
      .times_poch(c / d, kInfinite)
      .times_poch(d * q(1), kInfinite)
      .over_poch(q(1), N)
      .over_poch(c * q(1), kInfinite)
      .over_poch(d * q(N + 1), kInfinite);
}

// sum_{j>=1} q^{j^2}/(q)_j^2 sum_{n<=j} inner(n)
template <class Inner>
QSeries durfee_double_sum(int T, Inner inner) {
  QSeries partial(T);
  QSeries out(T);
  for (int j = 1; j * j <= T; ++j) {
    partial += inner(j);
    out += QSeries(partial).times(q(j * j)).over_poch(q(1), j).over_poch(q(1), j);
  }
  return out;
}

QSeries c1_finite(int N, int T) {
  const auto qb = q_binomial_row(N, T);
  return sum(T, 1, N, tri, [&](int n) {
    return QSeries(qb[n])
        .times(sign(n + 1) * q(tri(n)))
        .times_poch(q(1), n)
        .over_poch(q(1), n + N)
        .over_binomial(q(n));
  });
}

QSeries r1_finite(int N, int T) {
  const auto qb = q_binomial_row(N, T);
  return sum(T, 1, N, [](int n) { return n * (3 * n + 1) / 2; }, [&](int n) {
    return QSeries(qb[n])
        .times(sign(n + 1) * q(n * (3 * n + 1) / 2))
        .times_poch(q(1), n)
        .over_poch(q(1), n + N)
        .over_binomial(q(n));
  });
}

}  // namespace

void add_applications(std::vector<Identity>& out) {
  {
    Identity r{"R20", "Finite sum of a 2phi1 with harmonic weights",
               "sum_{n=1}^N (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} / ((q)_n (q)_{N-n} (cq)_n) "
               "sum_{k=1}^n q^k/(1-q^k) = (c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf) "
               "sum_{k=1}^N [N,k] d^k q^{k(k+1)} / ((dq)_k (1-q^k)) 2phi1(dq, dq^{N+1}; dq^{k+1}; q, cq^k/d)",
               {{"c"}, {"d"}}, {}, {nonzero("d")}, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         QSeries harmonic(x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           harmonic += mono(q(n), x.T).over_binomial(q(n));
                           return harmonic * mono(sign(n - 1) * d.pow(n) * q(tri(n)), x.T)
                                                 .times_poch(c / d, n)
                                                 .over_poch(q(1), n)
                                                 .over_poch(q(1), x.N - n)
                                                 .over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "k(k+1)", [](const Ctx& x) {
                         return finite_heine_sum(x["c"], x["d"], x.N, x.T);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R21", "Terminating sum evaluated by q-Chu-Vandermonde",
               "sum_{n=1}^N [N,n] (c/d)_n d^n (-1)^{n-1} q^{n(n+1)/2} / (cq)_n = 1 - (dq)_N/(cq)_N "
               "= 1 - 2phi1(d/c, q^{-N}; q^{-N}/c; q, q)",
               {{"c"}, {"d"}}, {}, {nonzero("c"), nonzero("d")}, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(c / d, n)
                               .times(sign(n - 1) * d.pow(n) * q(tri(n)))
                               .over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "product", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         return one(x.T) - one(x.T).times_poch(d * q(1), x.N).over_poch(c * q(1), x.N);
                       }});
    r.sides.push_back({"rhs2", "terminating", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const std::array<QMonomial, 2> num = {d / c, q(-x.N)};
                         const std::array<QMonomial, 1> den = {scalar(1) / c * q(-x.N)};
                         return one(x.T) - phi_series(num, den, q(1), std::nullopt, x.T);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R22", "Finite identity with a weighted 2phi1 sum",
               "sum_{n=1}^N n (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} / ((q)_n (q)_{N-n} (cq)_n) + "
               "(c/d)_inf (dq)_inf / ((q)_N (cq)_inf (dq^{N+1})_inf) sum_{k=1}^N [N,k] d^k q^{k(k+1)} / "
               "((dq)_k (1-q^k)) 2phi1(dq, dq^{N+1}; dq^{k+1}; q, cq^k/d) = "
               "c/((c-d)(q)_N) (1 - (dq)_N/(cq)_N) + 1/(cq)_N sum_{k=1}^N (cq/d)_k (dq)_{N-k} (dq)^k / "
               "((q)_k (q)_{N-k} (1-q^k))",
               {{"c"}, {"d"}}, {},
               {nonzero("d"), {"c = d", [](const ParamEnv& e) { return e.at("c") == e.at("d"); }}},
               true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const auto s = sum(x.T, 1, x.N, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * d.pow(n) * q(tri(n)), x.T)
                               .times_poch(c / d, n)
                               .over_poch(q(1), n)
                               .over_poch(q(1), x.N - n)
                               .over_poch(c * q(1), n);
                         });
                         return s + finite_heine_sum(c, d, x.N, x.T);
                       }});
    r.sides.push_back({"rhs", "k", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const QSeries head = (one(x.T) - one(x.T).times_poch(d * q(1), x.N).over_poch(c * q(1), x.N))
                                                  .times(c / difference(c, d))
                                                  .over_poch(q(1), x.N);
                         const auto s = sum(x.T, 1, x.N, [](int k) { return k; }, [&](int k) {
                           return mono((d * q(1)).pow(k), x.T)
                               .times_poch(c * q(1) / d, k)
                               .times_poch(d * q(1), x.N - k)
                               .over_poch(q(1), k)
                               .over_poch(q(1), x.N - k)
                               .over_binomial(q(k));
                         });
                         return head + QSeries(s).over_poch(c * q(1), x.N);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R23", "Generalization of Andrews' spt identity with parameter d",
               "1/(q)_inf sum_{n>=1} n (-d)^{n-1} (q/d)_{n-1} q^{n(n+1)/2} / (q)_n^2 = "
               "1/(q)_inf sum_{n>=1} n q^n (dq)_{n-1} / (q)_n - (dq)_inf/(q)_inf sum_{j>=1} q^{j^2}/(q)_j^2 "
               "sum_{n=1}^j q^n / ((1-dq^n)(1-q^n))",
               {{"d"}}, {}, {nonzero("d")}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto d = x["d"];
                         const auto s = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * (-d).pow(n - 1) * q(tri(n)), x.T)
                               .times_poch(q(1) / d, n - 1)
                               .over_poch(q(1), n)
                               .over_poch(q(1), n);
                         });
                         return QSeries(s).over_poch(q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n; j^2", [](const Ctx& x) {
                         const auto d = x["d"];
                         const auto first = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(scalar(n) * q(n), x.T).times_poch(d * q(1), n - 1).over_poch(q(1), n);
                         });
                         const auto second = durfee_double_sum(x.T, [&](int n) {
                           return mono(q(n), x.T).over_binomial(d * q(n)).over_binomial(q(n));
                         });
                         return QSeries(first).over_poch(q(1), kInfinite) -
                                QSeries(second).times_poch(d * q(1), kInfinite).over_poch(q(1), kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R24", "Andrews' spt identity",
               "sum spt(n) q^n = sum (n p(n) - N_2(n)/2) q^n = 1/(q)_inf sum_{n>=1} n (-1)^{n-1} "
               "q^{n(n+1)/2} / ((q)_n (1-q^n)) = 1/(q)_inf sum_{n>=1} q^n/(1-q^n)^2 - sum_{j>=1} "
               "q^{j^2}/(q)_j^2 sum_{n=1}^j q^n/(1-q^n)^2",
               {}, {}, {}};
    r.sides.push_back({"lhs", "enumeration", [](const Ctx& x) {
                         std::vector<BigRational> c(static_cast<std::size_t>(x.T) + 1);
                         for (int n = 1; n <= x.T; ++n) c[static_cast<std::size_t>(n)] = BigRational(spt(n));
                         return QSeries(std::move(c));
                       }});
    r.sides.push_back({"rhs", "enumeration", [](const Ctx& x) {
                         std::vector<BigRational> c(static_cast<std::size_t>(x.T) + 1);
                         for (int n = 1; n <= x.T; ++n) {
                           const BigRational np = BigRational(n) * BigRational(partition_count(n));
                           const BigRational n2(moment(Statistic::Rank, 2, n, false));
                           c[static_cast<std::size_t>(n)] = np - n2 / 2;
                         }
                         return QSeries(std::move(c));
                       }});
    r.sides.push_back({"rhs2", "n(n+1)/2", [](const Ctx& x) {
                         const auto s = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * q(tri(n)), x.T).over_poch(q(1), n).over_binomial(q(n));
                         });
                         return QSeries(s).over_poch(q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs3", "n; j^2", [](const Ctx& x) {
                         const auto first = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(q(n), x.T).over_binomial(q(n)).over_binomial(q(n));
                         });
                         const auto second = durfee_double_sum(x.T, [&](int n) {
                           return mono(q(n), x.T).over_binomial(q(n)).over_binomial(q(n));
                         });
                         return QSeries(first).over_poch(q(1), kInfinite) - second;
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R25", "The d = -1 case of the spt generalization",
               "sum_{n>=1} n (-q)_{n-1} q^{n(n+1)/2} / (q)_n^2 = sum_{n>=1} n q^n (-q)_{n-1} / (q)_n - "
               "(-q)_inf sum_{j>=1} q^{j^2}/(q)_j^2 sum_{n=1}^j q^n/(1-q^{2n})",
               {}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         return sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * q(tri(n)), x.T)
                               .times_poch(-q(1), n - 1)
                               .over_poch(q(1), n)
                               .over_poch(q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n; j^2", [](const Ctx& x) {
                         const auto first = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(scalar(n) * q(n), x.T).times_poch(-q(1), n - 1).over_poch(q(1), n);
                         });
                         const auto second = durfee_double_sum(x.T, [&](int n) {
                           return mono(q(n), x.T).over_binomial(q(2 * n));
                         });
                         return first - QSeries(second).times_poch(-q(1), kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R26", "Generalization of the N_SC identity with parameter d",
               "sum_{n>=1} n (-1)^{n-1} (-1/d)_n d^n q^{n(n+1)/2} / (q^2;q^2)_n + (-1/d)_inf (dq)_inf/(-q)_inf "
               "sum_{k>=1} d^k q^{k(k+1)} / ((q)_k (dq)_k (1-q^k)) 2phi1(dq, 0; dq^{k+1}; q, -q^k/d) = "
               "1/(1+d) (1 - (dq)_inf/(-q)_inf) + (dq)_inf/(-q)_inf sum_{n>=1} (-q/d)_n (dq)^n / ((q)_n (1-q^n))",
               {{"d"}}, {},
               {nonzero("d"), {"d = -1", [](const ParamEnv& e) { return e.at("d") == -1; }}}};
    r.sides.push_back({"lhs", "n(n+1)/2; k(k+1)", [](const Ctx& x) {
                         const auto d = x["d"];
                         const auto first = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * d.pow(n) * q(tri(n)), x.T)
                               .times_poch(scalar(-1) / d, n)
                               .over_poch(q(2), n, 2);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int k) { return k * (k + 1); }, [&](int k) {
                           return heine_inner(scalar(-1), d, k, kInfinite, x.T) *
                                  mono(d.pow(k) * q(k * (k + 1)), x.T)
                                      .over_poch(q(1), k)
                                      .over_poch(d * q(1), k)
                                      .over_binomial(q(k));
                         });
                         return first + QSeries(second)
                                            .times_poch(scalar(-1) / d, kInfinite)
                                            .times_poch(d * q(1), kInfinite)
                                            .over_poch(-q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto d = x["d"];
                         const auto ratio_dq = one(x.T).times_poch(d * q(1), kInfinite).over_poch(-q(1), kInfinite);
                         const auto head = (one(x.T) - ratio_dq) * (BigRational(1) / (1 + d.coefficient));
                         const auto s = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono((d * q(1)).pow(n), x.T)
                               .times_poch(-q(1) / d, n)
                               .over_poch(q(1), n)
                               .over_binomial(q(n));
                         });
                         return head + ratio_dq * s;
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R27", "Generating function identity for N_SC",
               "(q)_inf sum N_SC(n) q^n + 1/2 (q)_inf/(-q)_inf sum_{n>=1} q^{n(n+1)/2} / ((1-q^n)(q)_n) "
               "((-q)_n/(q)_n - 1) = 1/4 - 1/4 (q)_inf/(-q)_inf + 1/2 (q)_inf/(-q)_inf sum_{n>=1} "
               "(-q)_n/(q)_n q^n/(1-q^n), with sum N_SC(n) q^n = 1/(q)_inf sum_{n>=1} n (-1)^{n-1} "
               "q^{n(n+1)/2} / ((q)_n (1+q^n))",
               {}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto nsc = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * q(tri(n)), x.T).over_poch(q(1), n).over_binomial(-q(n));
                         });
                         const auto s = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           const auto bracket = one(x.T).times_poch(-q(1), n).over_poch(q(1), n) - one(x.T);
                           return bracket * mono(q(tri(n)), x.T).over_binomial(q(n)).over_poch(q(1), n);
                         });
                         return nsc + QSeries(s)
                                          .times(scalar(make_rational(1, 2)))
                                          .times_poch(q(1), kInfinite)
                                          .over_poch(-q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto ratio_q = one(x.T).times_poch(q(1), kInfinite).over_poch(-q(1), kInfinite);
                         const auto s = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(q(n), x.T).times_poch(-q(1), n).over_poch(q(1), n).over_binomial(q(n));
                         });
                         const BigRational quarter = make_rational(1, 4), half = make_rational(1, 2);
                         return QSeries::constant(quarter, x.T) - ratio_q * quarter + ratio_q * s * half;
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R28", "The c = 0 case",
               "1/(dq)_inf sum_{n>=1} n (-1)^{n-1} d^n q^{n(n+1)/2} / (q)_n + sum_{n>=1} d^n q^{n(n+1)} / "
               "((q)_n (dq)_n (1-q^n)) = sum_{n>=1} (dq)^n / ((q)_n (1-q^n))",
               {{"d"}}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto d = x["d"];
                         const auto first = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * d.pow(n) * q(tri(n)), x.T).over_poch(q(1), n);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int n) { return n * (n + 1); }, [&](int n) {
                           return mono(d.pow(n) * q(n * (n + 1)), x.T)
                               .over_poch(q(1), n)
                               .over_poch(d * q(1), n)
                               .over_binomial(q(n));
                         });
                         return QSeries(first).over_poch(d * q(1), kInfinite) + second;
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto d = x["d"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono((d * q(1)).pow(n), x.T).over_poch(q(1), n).over_binomial(q(n));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R29", "The c = 0, d = 1 case",
               "1/(q)_inf sum_{n>=1} n (-1)^{n-1} q^{n(n+1)/2} / (q)_n + sum_{n>=1} q^{n(n+1)} / "
               "((q)_n^2 (1-q^n)) = sum_{n>=1} q^n / ((q)_n (1-q^n))",
               {}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto first = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * q(tri(n)), x.T).over_poch(q(1), n);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int n) { return n * (n + 1); }, [&](int n) {
                           return mono(q(n * (n + 1)), x.T).over_poch(q(1), n).over_poch(q(1), n).over_binomial(q(n));
                         });
                         return QSeries(first).over_poch(q(1), kInfinite) + second;
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(q(n), x.T).over_poch(q(1), n).over_binomial(q(n));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R30", "The c = 0, d = -1 case",
               "-1/(-q)_inf sum_{n>=1} n q^{n(n+1)/2} / (q)_n + sum_{n>=1} (-1)^n q^{n(n+1)} / "
               "((q^2;q^2)_n (1-q^n)) = sum_{n>=1} (-q)^n / ((q)_n (1-q^n))",
               {}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto first = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * q(tri(n)), x.T).over_poch(q(1), n);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int n) { return n * (n + 1); }, [&](int n) {
                           return mono(sign(n) * q(n * (n + 1)), x.T).over_poch(q(2), n, 2).over_binomial(q(n));
                         });
                         return second - QSeries(first).over_poch(-q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(sign(n) * q(n), x.T).over_poch(q(1), n).over_binomial(q(n));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R31", "The d -> 0 limit",
               "sum_{n>=0} n c^n q^{n^2} / ((q)_n (cq)_n) - sum_{k>=1} (-c)^k q^{k(k+1)/2} / ((q)_k (1-q^k)) "
               "sum_{j>=0} c^j q^{(j+k)^2} / ((cq)_{j+k} (q)_j) = 1/(cq)_inf - 1 - 1/(cq)_inf sum_{k>=1} "
               "(-c)^k q^{k(k+3)/2} / ((q)_k (1-q^k))",
               {{"c"}}, {}, {}};
    r.sides.push_back({"lhs", "n^2; (j+k)^2", [](const Ctx& x) {
                         const auto c = x["c"];
                         const auto first = sum(x.T, 1, kInfinite, [](int n) { return n * n; }, [&](int n) {
                           return mono(scalar(n) * c.pow(n) * q(n * n), x.T).over_poch(q(1), n).over_poch(c * q(1), n);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int k) { return k * k + tri(k); }, [&](int k) {
                           const auto inner = sum(x.T, 0, kInfinite, [k](int j) { return (j + k) * (j + k); }, [&](int j) {
                             return mono(c.pow(j) * q((j + k) * (j + k)), x.T).over_poch(c * q(1), j + k).over_poch(q(1), j);
                           });
                           return QSeries(inner)
                               .times((-c).pow(k) * q(tri(k)))
                               .over_poch(q(1), k)
                               .over_binomial(q(k));
                         });
                         return first - second;
                       }});
    r.sides.push_back({"rhs", "k(k+3)/2", [](const Ctx& x) {
                         const auto c = x["c"];
                         const auto s = sum(x.T, 1, kInfinite, [](int k) { return k * (k + 3) / 2; }, [&](int k) {
                           return mono((-c).pow(k) * q(k * (k + 3) / 2), x.T).over_poch(q(1), k).over_binomial(q(k));
                         });
                         return (one(x.T) - s).over_poch(c * q(1), kInfinite) - one(x.T);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R32", "The N -> infinity limit of the weighted 2phi1 identity",
               "1/(q)_inf sum_{n>=1} n (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2} / ((q)_n (cq)_n) + "
               "(c/d)_inf (dq)_inf / ((q)_inf (cq)_inf) sum_{k>=1} d^k q^{k(k+1)} / ((dq)_k (q)_k (1-q^k)) "
               "sum_{j>=0} (dq)_j (cq^k/d)^j / ((dq^{k+1})_j (q)_j) = c/((c-d)(q)_inf) (1 - (dq)_inf/(cq)_inf) "
               "+ (dq)_inf / ((cq)_inf (q)_inf) sum_{k>=1} (cq/d)_k (dq)^k / ((q)_k (1-q^k))",
               {{"c"}, {"d"}}, {},
               {nonzero("d"), {"c = d", [](const ParamEnv& e) { return e.at("c") == e.at("d"); }}}};
    r.sides.push_back({"lhs", "n(n+1)/2; k(k+1)+jk", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const auto first = sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n) * sign(n - 1) * d.pow(n) * q(tri(n)), x.T)
                               .times_poch(c / d, n)
                               .over_poch(q(1), n)
                               .over_poch(c * q(1), n);
                         });
                         const auto second = sum(x.T, 1, kInfinite, [](int k) { return k * (k + 1); }, [&](int k) {
                           const auto z = c * q(k) / d;
                           const auto inner = sum(x.T, 0, kInfinite, [k](int j) { return j * k; }, [&](int j) {
                             return mono(z.pow(j), x.T)
                                 .times_poch(d * q(1), j)
                                 .over_poch(d * q(k + 1), j)
                                 .over_poch(q(1), j);
                           });
                           return QSeries(inner)
                               .times(d.pow(k) * q(k * (k + 1)))
                               .over_poch(d * q(1), k)
                               .over_poch(q(1), k)
                               .over_binomial(q(k));
                         });
                         return (QSeries(second).times_poch(c / d, kInfinite).times_poch(d * q(1), kInfinite).over_poch(c * q(1), kInfinite) + first)
                             .over_poch(q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "k", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"];
                         const auto ratio_dc = one(x.T).times_poch(d * q(1), kInfinite).over_poch(c * q(1), kInfinite);
                         const auto head = (one(x.T) - ratio_dc).times(c / difference(c, d));
                         const auto s = sum(x.T, 1, kInfinite, [](int k) { return k; }, [&](int k) {
                           return mono((d * q(1)).pow(k), x.T)
                               .times_poch(c * q(1) / d, k)
                               .over_poch(q(1), k)
                               .over_binomial(q(k));
                         });
                         return (head + ratio_dc * s).over_poch(q(1), kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R33", "Finite first positive crank moment",
               "z d/dz, positive z-part, z = 1 applied to (q)_N / ((zq)_N (q/z)_N) = "
               "sum_{n=1}^N [N,n] (-1)^{n+1} (q)_n q^{n(n+1)/2} / ((q)_{n+N} (1-q^n))",
               {}, {}, {}, true};
    r.sides.push_back({"lhs", "extraction", [](const Ctx& x) {
                         return first_positive_moment(finite_crank_generating_function(x.N, x.T));
                       }});
    r.sides.push_back({"rhs", "n(n+1)/2", [](const Ctx& x) { return c1_finite(x.N, x.T); }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R34", "Finite first positive rank moment",
               "z d/dz, positive z-part, z = 1 applied to sum_{n=0}^N [N,n] (q)_n q^{n^2} / ((zq)_n (q/z)_n) = "
               "sum_{n=1}^N [N,n] (-1)^{n+1} (q)_n q^{n(3n+1)/2} / ((q)_{n+N} (1-q^n))",
               {}, {}, {}, true};
    r.sides.push_back({"lhs", "extraction", [](const Ctx& x) {
                         return first_positive_moment(finite_rank_generating_function(x.N, x.T));
                       }});
    r.sides.push_back({"rhs", "n(3n+1)/2", [](const Ctx& x) { return r1_finite(x.N, x.T); }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R35", "Finite crank minus rank first moment",
               "sum_{n=1}^N [N,n] (-1)^{n+1} (q)_n q^{n(n+1)/2} (1-q^{n^2}) / ((q)_{n+N} (1-q^n)); "
               "coefficients conjectured non-negative",
               {}, {}, {}, true, 1, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times(sign(n + 1) * q(tri(n)))
                               .times_poch(q(1), n)
                               .times_binomial(q(n * n))
                               .over_poch(q(1), n + x.N)
                               .over_binomial(q(n));
                         });
                       }});
    r.sides.push_back({"rhs", "n(n+1)/2", [](const Ctx& x) { return c1_finite(x.N, x.T) - r1_finite(x.N, x.T); }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R36", "The d = q case of the spt generalization",
               "sum_{j>=1} q^{j^2}/(q)_j^2 sum_{n=1}^j q^n / ((1-q^{n+1})(1-q^n)) = q^2 / ((1-q)^2 (q)_inf)",
               {}, {}, {}};
    r.sides.push_back({"lhs", "j^2", [](const Ctx& x) {
                         return durfee_double_sum(x.T, [&](int n) {
                           return mono(q(n), x.T).over_binomial(q(n + 1)).over_binomial(q(n));
                         });
                       }});
    r.sides.push_back({"rhs", "product", [](const Ctx& x) {
                         return mono(q(2), x.T).over_binomial(q(1)).over_binomial(q(1)).over_poch(q(1), kInfinite);
                       }});
    out.push_back(std::move(r));
  }
}

}  // namespace qlab::kit
