// Entry 3 and its generalizations, the four-parameter identity with its
// finite analogue and corollaries, and Ramanujan's five entries (finite and
// infinite).

#include "registry_kit.hpp"

namespace qlab::kit {

namespace {

Identity entry3_infinite(const std::string& id, const std::string& title) {
  Identity r{id, title,
             "sum_{n>=1} (b/a)_n a^n / ((1-q^n)(b)_n) = sum_{n>=1} (a^n - b^n) / (1-q^n)",
             {{"a", 1, true}, {"b", 1, true}}, {}, {nonzero("a")}};
  r.sides.push_back({"lhs", "n", [](const Ctx& c) {
                       const auto a = c["a"], b = c["b"];
                       return sum(c.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                         return mono(a.pow(n), c.T).times_poch(b / a, n).over_binomial(q(n)).over_poch(b, n);
                       });
                     }});
  r.sides.push_back({"rhs", "n", [](const Ctx& c) {
                       const auto a = c["a"], b = c["b"];
                       return sum(c.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                         return (mono(a.pow(n), c.T) - mono(b.pow(n), c.T)).over_binomial(q(n));
                       });
                     }});
  return r;
}

}  // namespace

void add_entries(std::vector<Identity>& out) {
  out.push_back(entry3_infinite("R01", "Ramanujan's Entry 3"));

  {
    Identity r{"R02", "Entry 3 with a third parameter c",
               "sum_{n>=1} (b/a)_n a^n / ((1-cq^n)(b)_n) = sum_{m>=0} (b/c)_m c^m/(b)_m "
               "(aq^m/(1-aq^m) - bq^m/(1-bq^m)) = (b/c)_inf/(b)_inf sum_{n>=0} (c)_n (b/c)^n/(q)_n "
               "sum_{m>=1} (a^m-b^m)/(1-cq^{m+n})",
               {{"a", 1, true}, {"b", 1, true}, {"c", 0, false}}, {}, {nonzero("a"), nonzero("c")}};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(a.pow(n), x.T).times_poch(b / a, n).over_binomial(c * q(n)).over_poch(b, n);
                         });
                       }});
    r.sides.push_back({"rhs", "m+1", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"];
                         return sum(x.T, 0, kInfinite, [](int m) { return m + 1; }, [&](int m) {
                           return (ratio(a * q(m), x.T) - ratio(b * q(m), x.T))
                               .times_poch(b / c, m)
                               .times(c.pow(m))
                               .over_poch(b, m);
                         });
                       }});
    r.sides.push_back({"rhs2", "n; m", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"];
                         const auto outer = sum(x.T, 0, kInfinite, [](int n) { return n; }, [&](int n) {
                           const auto inner = sum(x.T, 1, kInfinite, [](int m) { return m; }, [&](int m) {
                             return (mono(a.pow(m), x.T) - mono(b.pow(m), x.T)).over_binomial(c * q(m + n));
                           });
                           return QSeries(inner).times_poch(c, n).times((b / c).pow(n)).over_poch(q(1), n);
                         });
                         return QSeries(outer).times_poch(b / c, kInfinite).over_poch(b, kInfinite);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R03", "Finite three-parameter analogue of the Entry 3 generalization",
               "sum_{n=1}^N [N,n] (b/a)_n (q)_n (a)_{N-n} a^n / ((1-cq^n)(b)_n (a)_N) = "
               "sum_{n=1}^N [N,n] (b/c)_{n-1} (q)_n (cq)_{N-n} c^{n-1} / ((b)_{n-1} (cq)_N) "
               "(aq^{n-1}/(1-aq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))",
               {{"a"}, {"b"}, {"c"}}, {},
               {nonzero("a"), nonzero("c"), not_one("a"), not_one("b")}, true};
    r.sides.push_back({"lhs", "finite", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, no_bound(), [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(b / a, n)
                               .times_poch(q(1), n)
                               .times_poch(a, x.N - n)
                               .times(a.pow(n))
                               .over_binomial(c * q(n))
                               .over_poch(b, n)
                               .over_poch(a, x.N);
                         });
                       }});
    r.sides.push_back({"rhs", "finite", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, no_bound(), [&](int n) {
                           return (ratio(a * q(n - 1), x.T) - ratio(b * q(n - 1), x.T)) * QSeries(qb[n])
                               .times_poch(b / c, n - 1)
                               .times_poch(q(1), n)
                               .times_poch(c * q(1), x.N - n)
                               .times(c.pow(n - 1))
                               .over_poch(b, n - 1)
                               .over_poch(c * q(1), x.N);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R04", "Four-parameter generalization",
               "sum_{n>=1} (b/a)_n (c/d)_n (ad)^n / ((b)_n (cq)_n) = (a-b)(d-c)/(ad-b) sum_{m>=0} "
               "(a)_m (bd/c)_m c^m / ((b)_m (ad)_m) (adq^m/(1-adq^m) - bq^m/(1-bq^m))",
               {{"a", 1, true}, {"b", 1}, {"c"}, {"d", 0, true}}, {},
               {nonzero("a"), nonzero("c"), nonzero("d"),
                {"ad = b", [](const ParamEnv& e) { return e.at("a") * e.at("d") == e.at("b"); }}}};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], d = x["d"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono((a * d).pow(n), x.T)
                               .times_poch(b / a, n)
                               .times_poch(c / d, n)
                               .over_poch(b, n)
                               .over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "m+1", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], d = x["d"];
                         const QMonomial pref = difference(a, b) * difference(d, c) / difference(a * d, b);
                         const auto s = sum(x.T, 0, kInfinite, [](int m) { return m + 1; }, [&](int m) {
                           return (ratio(a * d * q(m), x.T) - ratio(b * q(m), x.T))
                               .times_poch(a, m)
                               .times_poch(b * d / c, m)
                               .times(c.pow(m))
                               .over_poch(b, m)
                               .over_poch(a * d, m);
                         });
                         return QSeries(s).times(pref);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R05", "Finite analogue of the four-parameter identity",
               "sum_{n=1}^N [N,n] (q)_n (b/a)_n (c/d)_n (ad)_{N-n} (ad)^n / ((b)_n (cq)_n (ad)_N) = "
               "(a-b)(d-c)/(ad-b) sum_{n=1}^N [N,n] (a)_{n-1} (bd/c)_{n-1} (q)_n (cq)_{N-n} c^{n-1} / "
               "((b)_{n-1} (cq)_N (ad)_{n-1}) (adq^{n-1}/(1-adq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))",
               {{"a"}, {"b"}, {"c"}, {"d"}}, {},
               {nonzero("a"), nonzero("c"), nonzero("d"), not_one("b"),
                {"ad = 1", [](const ParamEnv& e) { return e.at("a") * e.at("d") == 1; }},
                {"ad = b", [](const ParamEnv& e) { return e.at("a") * e.at("d") == e.at("b"); }}},
               true};
    r.sides.push_back({"lhs", "finite", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], d = x["d"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, no_bound(), [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(b / a, n)
                               .times_poch(c / d, n)
                               .times_poch(a * d, x.N - n)
                               .times((a * d).pow(n))
                               .over_poch(b, n)
                               .over_poch(c * q(1), n)
                               .over_poch(a * d, x.N);
                         });
                       }});
    r.sides.push_back({"rhs", "finite", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"], c = x["c"], d = x["d"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         const QMonomial pref = difference(a, b) * difference(d, c) / difference(a * d, b);
                         const auto s = sum(x.T, 1, x.N, no_bound(), [&](int n) {
                           return (ratio(a * d * q(n - 1), x.T) - ratio(b * q(n - 1), x.T)) * QSeries(qb[n])
                               .times_poch(a, n - 1)
                               .times_poch(b * d / c, n - 1)
                               .times_poch(q(1), n)
                               .times_poch(c * q(1), x.N - n)
                               .times(c.pow(n - 1))
                               .over_poch(b, n - 1)
                               .over_poch(c * q(1), x.N)
                               .over_poch(a * d, n - 1);
                         });
                         return QSeries(s).times(pref);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R06", "Finite identity at a -> 0, b = zq",
               "sum_{n=1}^N [N,n] (q)_n (c/d)_n (-zd)^n q^{n(n+1)/2} / ((zq)_n (cq)_n) = "
               "(z/c)(c-d) sum_{n=1}^N [N,n] (q)_n (zdq/c)_{n-1} (cq)_{N-n} (cq)^n / ((zq)_n (cq)_N)",
               {{"c"}, {"d"}, {"z"}}, {}, {nonzero("c"), nonzero("d")}, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"], z = x["z"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(c / d, n)
                               .times((-z * d).pow(n) * q(tri(n)))
                               .over_poch(z * q(1), n)
                               .over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto c = x["c"], d = x["d"], z = x["z"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         const auto s = sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(z * d * q(1) / c, n - 1)
                               .times_poch(c * q(1), x.N - n)
                               .times((c * q(1)).pow(n))
                               .over_poch(z * q(1), n)
                               .over_poch(c * q(1), x.N);
                         });
                         return QSeries(s).times(z / c * difference(c, d));
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R07", "Finite identity at d -> 0",
               "sum_{n=1}^N [N,n] (q)_n (zc)^n q^{n^2} / ((zq)_n (cq)_n) = "
               "z sum_{n=1}^N [N,n] (q)_n (cq)_{N-n} (cq)^n / ((zq)_n (cq)_N)",
               {{"c"}, {"z"}}, {}, {}, true};
    r.sides.push_back({"lhs", "n^2", [](const Ctx& x) {
                         const auto c = x["c"], z = x["z"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, [](int n) { return n * n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times((z * c).pow(n) * q(n * n))
                               .over_poch(z * q(1), n)
                               .over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto c = x["c"], z = x["z"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         const auto s = sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(c * q(1), x.N - n)
                               .times((c * q(1)).pow(n))
                               .over_poch(z * q(1), n)
                               .over_poch(c * q(1), x.N);
                         });
                         return QSeries(s).times(z);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R08", "Finite rank-type identity at c = 1/z",
               "sum_{n=1}^N [N,n] (q)_n q^{n^2} / ((zq)_n (q/z)_n) = "
               "z sum_{n=1}^N [N,n] (q)_n (q/z)_{N-n} (q/z)^n / ((zq)_n (q/z)_N)",
               {{"z"}}, {}, {nonzero("z")}, true};
    r.sides.push_back({"lhs", "n^2", [](const Ctx& x) {
                         const auto z = x["z"];
                         const auto zi = scalar(1) / z * q(1);
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, [](int n) { return n * n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times(q(n * n))
                               .over_poch(z * q(1), n)
                               .over_poch(zi, n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto z = x["z"];
                         const auto zi = scalar(1) / z * q(1);
                         const auto qb = q_binomial_row(x.N, x.T);
                         const auto s = sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(zi, x.N - n)
                               .times(zi.pow(n))
                               .over_poch(z * q(1), n)
                               .over_poch(zi, x.N);
                         });
                         return QSeries(s).times(z);
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R09", "Andrews' identity (infinite d -> 0 case)",
               "sum_{n>=1} z^n c^n q^{n^2} / ((zq)_n (cq)_n) = z sum_{n>=1} (cq)^n / (zq)_n",
               {{"c"}, {"z"}}, {}, {}};
    r.sides.push_back({"lhs", "n^2", [](const Ctx& x) {
                         const auto c = x["c"], z = x["z"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n * n; }, [&](int n) {
                           return mono((z * c).pow(n) * q(n * n), x.T).over_poch(z * q(1), n).over_poch(c * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto c = x["c"], z = x["z"];
                         const auto s = sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono((c * q(1)).pow(n), x.T).over_poch(z * q(1), n);
                         });
                         return QSeries(s).times(z);
                       }});
    out.push_back(std::move(r));
  }

  // Ramanujan's five entries, finite analogues first.
  {
    Identity r{"R10", "Finite analogue of Entry 1",
               "sum_{n=0}^N [N,n] (-b/a)_n a^n q^{n(n+1)/2} / (bq)_n = "
               "sum_{n=0}^N [N,n] (-a/b)_n (bq)_{N-n} (bq)^n / (bq)_N",
               {{"a"}, {"b"}}, {}, {nonzero("a"), nonzero("b")}, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 0, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(-b / a, n)
                               .times(a.pow(n) * q(tri(n)))
                               .over_poch(b * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 0, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(-a / b, n)
                               .times_poch(b * q(1), x.N - n)
                               .times((b * q(1)).pow(n))
                               .over_poch(b * q(1), x.N);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R11", "Finite analogue of Entry 2",
               "(aq)_N sum_{n=1}^N [N,n] n a^n q^{n^2} / (aq)_n = "
               "sum_{n=1}^N [N,n] (q)_n (-1)^{n-1} a^n q^{n(n+1)/2} / (1-q^n)",
               {{"a"}}, {}, {}, true};
    r.sides.push_back({"lhs", "n^2", [](const Ctx& x) {
                         const auto a = x["a"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         const auto s = sum(x.T, 1, x.N, [](int n) { return n * n; }, [&](int n) {
                           return QSeries(qb[n]).times(scalar(n) * a.pow(n) * q(n * n)).over_poch(a * q(1), n);
                         });
                         return QSeries(s).times_poch(a * q(1), x.N);
                       }});
    r.sides.push_back({"rhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times(scalar(n % 2 == 1 ? 1 : -1) * a.pow(n) * q(tri(n)))
                               .over_binomial(q(n));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R12", "Finite analogue of Entry 3",
               "sum_{n=1}^N [N,n] (q)_n (b/a)_n (a)_{N-n} a^n / ((b)_n (1-q^n) (a)_N) = "
               "sum_{n=1}^N (aq^{n-1}/(1-aq^{n-1}) - bq^{n-1}/(1-bq^{n-1})) = "
               "sum_{m>=1} (a^m-b^m)(1-q^{mN})/(1-q^m)",
               {{"a", 1}, {"b", 1}}, {}, {nonzero("a")}, true};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(b / a, n)
                               .times_poch(a, x.N - n)
                               .times(a.pow(n))
                               .over_poch(b, n)
                               .over_binomial(q(n))
                               .over_poch(a, x.N);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         return sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return ratio(a * q(n - 1), x.T) - ratio(b * q(n - 1), x.T);
                         });
                       }});
    r.sides.push_back({"rhs2", "m", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         return sum(x.T, 1, kInfinite, [](int m) { return m; }, [&](int m) {
                           return (mono(a.pow(m), x.T) - mono(b.pow(m), x.T))
                               .times_binomial(q(m * x.N))
                               .over_binomial(q(m));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R13", "Finite analogue of Entry 4",
               "sum_{n=1}^N [N,n] (-1)^{n-1} a^n q^{n(n+1)/2} (q)_n / ((1-q^n)(aq)_n) = "
               "sum_{n=1}^N aq^n / (1-aq^n)",
               {{"a"}}, {}, {}, true};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, tri, [&](int n) {
                           return QSeries(qb[n])
                               .times(scalar(n % 2 == 1 ? 1 : -1) * a.pow(n) * q(tri(n)))
                               .times_poch(q(1), n)
                               .over_binomial(q(n))
                               .over_poch(a * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, x.N, [](int n) { return n; },
                                    [&](int n) { return ratio(a * q(n), x.T); });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R14", "Finite analogue of Entry 5",
               "sum_{n=1}^N [N,n] (q)_n (q)_{n-1} (a)_{N-n} a^n / ((a)_n (1-q^n) (a)_N) = "
               "sum_{n=1}^N aq^{n-1} / (1-aq^{n-1})^2",
               {{"a", 1}}, {}, {}, true};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         const auto qb = q_binomial_row(x.N, x.T);
                         return sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           return QSeries(qb[n])
                               .times_poch(q(1), n)
                               .times_poch(q(1), n - 1)
                               .times_poch(a, x.N - n)
                               .times(a.pow(n))
                               .over_poch(a, n)
                               .over_binomial(q(n))
                               .over_poch(a, x.N);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, x.N, [](int n) { return n; }, [&](int n) {
                           const auto y = a * q(n - 1);
                           return mono(y, x.T).over_binomial(y).over_binomial(y);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R15", "Entry 1",
               "(-aq)_inf / (bq)_inf = sum_{n>=0} (-b/a)_n a^n q^{n(n+1)/2} / ((q)_n (bq)_n)",
               {{"a"}, {"b"}}, {}, {nonzero("a")}};
    r.sides.push_back({"lhs", "product", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         return one(x.T).times_poch(-a * q(1), kInfinite).over_poch(b * q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         return sum(x.T, 0, kInfinite, tri, [&](int n) {
                           return mono(a.pow(n) * q(tri(n)), x.T)
                               .times_poch(-b / a, n)
                               .over_poch(q(1), n)
                               .over_poch(b * q(1), n);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R16", "Entry 2",
               "(aq)_inf sum_{n>=1} n a^n q^{n^2} / ((q)_n (aq)_n) = "
               "sum_{n>=1} (-1)^{n-1} a^n q^{n(n+1)/2} / (1-q^n)",
               {{"a"}}, {}, {}};
    r.sides.push_back({"lhs", "n^2", [](const Ctx& x) {
                         const auto a = x["a"];
                         const auto s = sum(x.T, 1, kInfinite, [](int n) { return n * n; }, [&](int n) {
                           return mono(scalar(n) * a.pow(n) * q(n * n), x.T)
                               .over_poch(q(1), n)
                               .over_poch(a * q(1), n);
                         });
                         return QSeries(s).times_poch(a * q(1), kInfinite);
                       }});
    r.sides.push_back({"rhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n % 2 == 1 ? 1 : -1) * a.pow(n) * q(tri(n)), x.T).over_binomial(q(n));
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r = entry3_infinite("R17", "Entry 3 (limit of its finite analogue)");
    r.statement += " = sum_{n>=1} (aq^{n-1}/(1-aq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))";
    r.sides.push_back({"rhs2", "n", [](const Ctx& x) {
                         const auto a = x["a"], b = x["b"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return ratio(a * q(n - 1), x.T) - ratio(b * q(n - 1), x.T);
                         });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R18", "Entry 4",
               "sum_{n>=1} (-1)^{n-1} a^n q^{n(n+1)/2} / ((1-q^n)(aq)_n) = sum_{n>=1} a^n q^n / (1-q^n) "
               "= sum_{n>=1} aq^n / (1-aq^n)",
               {{"a"}}, {}, {}};
    r.sides.push_back({"lhs", "n(n+1)/2", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, tri, [&](int n) {
                           return mono(scalar(n % 2 == 1 ? 1 : -1) * a.pow(n) * q(tri(n)), x.T)
                               .over_binomial(q(n))
                               .over_poch(a * q(1), n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; },
                                    [&](int n) { return mono(a.pow(n) * q(n), x.T).over_binomial(q(n)); });
                       }});
    r.sides.push_back({"rhs2", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; },
                                    [&](int n) { return ratio(a * q(n), x.T); });
                       }});
    out.push_back(std::move(r));
  }

  {
    Identity r{"R19", "Entry 5",
               "sum_{n>=1} (q)_{n-1} a^n / ((1-q^n)(a)_n) = sum_{n>=1} aq^{n-1} / (1-aq^{n-1})^2 "
               "= sum_{m>=1} m a^m / (1-q^m)",
               {{"a", 1}}, {}, {}};
    r.sides.push_back({"lhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           return mono(a.pow(n), x.T).times_poch(q(1), n - 1).over_binomial(q(n)).over_poch(a, n);
                         });
                       }});
    r.sides.push_back({"rhs", "n", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, [](int n) { return n; }, [&](int n) {
                           const auto y = a * q(n - 1);
                           return mono(y, x.T).over_binomial(y).over_binomial(y);
                         });
                       }});
    r.sides.push_back({"rhs2", "m", [](const Ctx& x) {
                         const auto a = x["a"];
                         return sum(x.T, 1, kInfinite, [](int m) { return m; }, [&](int m) {
                           return mono(scalar(m) * a.pow(m), x.T).over_binomial(q(m));
                         });
                       }});
    out.push_back(std::move(r));
  }
}

}  // namespace qlab::kit
