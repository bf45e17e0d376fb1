// Classical transformations and auxiliary identities the proofs lean on.

#include <array>

#include "qlab/laurent_poly.hpp"
#include "registry_kit.hpp"

namespace qlab::kit {

namespace {

template <std::size_t R, std::size_t S>
QSeries phi(const std::array<QMonomial, R>& num, const std::array<QMonomial, S>& den, const QMonomial& arg,
            int T) {
  return phi_series(num, den, arg, std::nullopt, T);
}

Pole coincide(const std::string& label, std::function<BigRational(const ParamEnv&)> lhs,
              std::function<BigRational(const ParamEnv&)> rhs) {
  return {label, [lhs, rhs](const ParamEnv& e) { return lhs(e) == rhs(e); }};
}

const BigRational& get(const ParamEnv& e, const char* name) { return e.at(name); }

}  // namespace

void add_classical(std::vector<Identity>& out) {
  {
    Identity r{"R37", "Sears' balanced 4phi3 transformation",
               "4phi3(q^{-N}, A, B, C; D, E, ABCq^{1-N}/(DE); q, q) = (E/A)_N (DE/BC)_N / ((E)_N (DE/ABC)_N) "
               "4phi3(q^{-N}, A, D/B, D/C; D, DE/BC, Aq^{1-N}/E; q, q)",
               {{"A"}, {"B"}, {"C"}, {"D"}, {"E"}}, {},
               {nonzero("A"), nonzero("B"), nonzero("C"), nonzero("D"), nonzero("E"), not_one("D"),
                not_one("E"),
                coincide("ABC = DE", [](const ParamEnv& e) -> BigRational { return get(e, "A") * get(e, "B") * get(e, "C"); },
                         [](const ParamEnv& e) -> BigRational { return get(e, "D") * get(e, "E"); }),
                coincide("DE = BC", [](const ParamEnv& e) -> BigRational { return get(e, "D") * get(e, "E"); },
                         [](const ParamEnv& e) -> BigRational { return get(e, "B") * get(e, "C"); }),
                coincide("A = E", [](const ParamEnv& e) -> BigRational { return get(e, "A"); },
                         [](const ParamEnv& e) -> BigRational { return get(e, "E"); })},
               true};
    r.sides.push_back({"lhs", "terminating", [](const Ctx& x) {
                         const auto A = x["A"], B = x["B"], C = x["C"], D = x["D"], E = x["E"];
                         return phi<4, 3>({q(-x.N), A, B, C}, {D, E, A * B * C * q(1 - x.N) / (D * E)}, q(1), x.T);
                       }});
    r.sides.push_back({"rhs", "terminating", [](const Ctx& x) {
                         const auto A = x["A"], B = x["B"], C = x["C"], D = x["D"], E = x["E"];
                         return phi<4, 3>({q(-x.N), A, D / B, D / C}, {D, D * E / (B * C), A * q(1 - x.N) / E}, q(1), x.T)
                             .times_poch(E / A, x.N)
                             .times_poch(D * E / (B * C), x.N)
                             .over_poch(E, x.N)
                             .over_poch(D * E / (A * B * C), x.N);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R38", "Elementary inversion of (q^{-N}/x)_n",
               "sum_{n=0}^N w^n x^n q^{Nn} (q^{-N}/x)_n = sum_{n=0}^N w^n (-1)^n (xq^{N-n+1})_n q^{n(n-1)/2}",
               {{"x"}, {"w"}}, {}, {nonzero("x")}, true, 0};
    r.sides.push_back({"lhs", "terminating", [](const Ctx& x) {
                         const auto v = x["x"], w = x["w"];
                         LaurentPoly total;
                         for (int n = 0; n <= x.N; ++n) {
                           total += laurent_pochhammer(scalar(1) / v * q(-x.N), n) * (w * v).pow(n) * q(x.N * n);
                         }
                         return total.to_series(x.T);
                       }});
    r.sides.push_back({"rhs", "n(n-1)/2", [](const Ctx& x) {
                         const auto v = x["x"], w = x["w"];
                         return sum(x.T, 0, x.N, [](int n) { return n * (n - 1) / 2; }, [&](int n) {
                           return mono((-w).pow(n) * q(n * (n - 1) / 2), x.T).times_poch(v * q(x.N - n + 1), n);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R39", "Andrews' finite Heine transformation",
               "3phi2(q^{-N}, a, b; c, q^{1-N}/t; q, q) = (c/b)_N (bt)_N / ((c)_N (t)_N) "
               "3phi2(q^{-N}, abt/c, b; bt, bq^{1-N}/c; q, q)",
               {{"a"}, {"b"}, {"c"}, {"t"}}, {},
               {nonzero("b"), nonzero("c"), nonzero("t"), not_one("c"), not_one("t"),
                coincide("b = c", [](const ParamEnv& e) -> BigRational { return get(e, "b"); },
                         [](const ParamEnv& e) -> BigRational { return get(e, "c"); }),
                coincide("bt = 1", [](const ParamEnv& e) -> BigRational { return get(e, "b") * get(e, "t"); },
                         [](const ParamEnv&) -> BigRational { return BigRational(1); })},
               true};
    r.sides.push_back({"lhs", "terminating", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], t = x["t"];
                         return phi<3, 2>({q(-x.N), a, b}, {c, q(1 - x.N) / t}, q(1), x.T);
                       }});
    r.sides.push_back({"rhs", "terminating", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], t = x["t"];
                         return phi<3, 2>({q(-x.N), a * b * t / c, b}, {b * t, b * q(1 - x.N) / c}, q(1), x.T)
                             .times_poch(c / b, x.N)
                             .times_poch(b * t, x.N)
                             .over_poch(c, x.N)
                             .over_poch(t, x.N);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R40", "Heine's transformation",
               "2phi1(a, b; c; q, z) = (b)_inf (az)_inf / ((c)_inf (z)_inf) 2phi1(c/b, z; az; q, b)",
               {{"a"}, {"b", 1, true}, {"c", 1, true}, {"z", 1, true}}, {}, {nonzero("b")}};
    r.sides.push_back({"lhs", "k", [](const Ctx& x) {
                         return phi<2, 1>({x["a"], x["b"]}, {x["c"]}, x["z"], x.T);
                       }});
    r.sides.push_back({"rhs", "k", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], z = x["z"];
                         return phi<2, 1>({c / b, z}, {a * z}, b, x.T)
                             .times_poch(b, kInfinite)
                             .times_poch(a * z, kInfinite)
                             .over_poch(c, kInfinite)
                             .over_poch(z, kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R41", "Jackson's transformation",
               "2phi1(a, b; c; q, z) = (az)_inf / (z)_inf 2phi2(a, c/b; c, az; q, bz)",
               {{"a"}, {"b"}, {"c"}, {"z", 1, true}}, {}, {nonzero("b"), not_one("c")}};
    r.sides.push_back({"lhs", "k", [](const Ctx& x) {
                         return phi<2, 1>({x["a"], x["b"]}, {x["c"]}, x["z"], x.T);
                       }});
    r.sides.push_back({"rhs", "k", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], z = x["z"];
                         return phi<2, 2>({a, c / b}, {c, a * z}, b * z, x.T)
                             .times_poch(a * z, kInfinite)
                             .over_poch(z, kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R42", "van Hamme's identity",
               "sum_{k=1}^N q^k/(1-q^k) = sum_{k=1}^N [N,k] (-1)^{k-1} q^{k(k+1)/2} / (1-q^k)",
               {}, {}, {}, true};
    r.sides.push_back({"lhs", "k", [](const Ctx& x) {
                         return sum(x.T, 1, x.N, [](int k) { return k; },
                                    [&](int k) { return ratio(q(k), x.T); });
                       }});
    r.sides.push_back({"rhs", "k(k+1)/2", [](const Ctx& x) {
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int k) {
                           return QSeries(qb[k]).times(scalar(k % 2 == 1 ? 1 : -1) * q(tri(k))).over_binomial(q(k));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R43", "Guo-Zhang identity, m = 0",
               "sum_{k=1}^N q^k/(1-q^k) - sum_{k=1}^{N-1} xq^k/(1-xq^k) = x/(1-x) - 1/(x)_N "
               "sum_{k=1}^N [N,k] (q/x)_k (x)_{N-k} x^k / (1-q^k)",
               {{"x"}}, {}, {nonzero("x"), not_one("x")}, true};
    r.sides.push_back({"lhs", "k", [](const Ctx& x) {
                         const auto v = x["x"];
                         const auto harmonic = sum(x.T, 1, x.N, [](int k) { return k; },
                                                   [&](int k) { return ratio(q(k), x.T); });
                         const auto shifted = sum(x.T, 1, x.N - 1, [](int k) { return k; },
                                                  [&](int k) { return ratio(v * q(k), x.T); });
                         return harmonic - shifted;
                       }});
    r.sides.push_back({"rhs", "k", [](const Ctx& x) {
                         const auto v = x["x"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         const auto s = sum(x.T, 1, x.N, no_bound(), [&](int k) {
                           return QSeries(qb[k])
                               .times_poch(q(1) / v, k)
                               .times_poch(v, x.N - k)
                               .times(v.pow(k))
                               .over_binomial(q(k));
                         });
                         return ratio(v, x.T) - QSeries(s).over_poch(v, x.N);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R44", "Andrews' generalization of Uchimura's identity",
               "sum_{n>=1} q^n / ((1-dq^n)(1-q^n)) = sum_{n>=1} n q^n (q^{n+1})_inf / (dq^n)_inf",
               {{"d"}}, {}, {}};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto d = x["d"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(q(n), x.T).over_binomial(d * q(n)).over_binomial(q(n));
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto d = x["d"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(scalar(n) * q(n), x.T)
                               .times_poch(q(n + 1), kInfinite)
                               .over_poch(d * q(n), kInfinite);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R45", "Auxiliary sum with a (q/d) Pochhammer",
               "sum_{k>=1} d^{k-1} (q/d)_{k-1} q^k / (q)_k = (1 - (q)_inf/(dq)_inf) / (1-d)",
               {{"d"}}, {}, {nonzero("d"), not_one("d")}};
    r.sides.push_back({"lhs", "k", [](const Ctx& x) {
                         const auto d = x["d"];
                         return sum(x.T, 1, kInfinite, [](int k) { return k; }, [&](int k) {
                           return mono(d.pow(k - 1) * q(k), x.T).times_poch(q(1) / d, k - 1).over_poch(q(1), k);
                         });
                       }});
    r.sides.push_back({"rhs", "product", [](const Ctx& x) {
                         const auto d = x["d"];
                         return (one(x.T) - one(x.T).times_poch(q(1), kInfinite).over_poch(d * q(1), kInfinite))
                             .over_binomial(d);
                       }});
    out.push_back(std::move(r));
  }
}

}  // namespace qlab::kit
