#pragma once

// Randomized property suites shared by the unit tests and the acceptance runner.

#include <random>
#include <string>

#include "qmf/errors.hpp"
#include "qmf/fraction.hpp"
#include "qmf/io.hpp"
#include "qmf/series.hpp"

namespace qmf::props {

struct Tally {
  std::string name;
  long cases = 0;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const char* what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = std::string(what) + " (case " + std::to_string(cases) + ")";
  }
};

#define QMF_PROP(expr) t.check(static_cast<bool>(expr), #expr)

inline constexpr int kCases = 10000;

using Rng = std::mt19937_64;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline Rational rat(Rng& g) { return {uniform(g, -9, 9), uniform(g, 1, 5)}; }

inline Rational nonzero_rat(Rng& g) {
  Rational r;
  while (r.is_zero()) r = rat(g);
  return r;
}

inline QSeries series(Rng& g, int d) {
  const long k0 = uniform(g, -2, 2);
  const long len = uniform(g, 1, 7);
  std::vector<Rational> c;
  for (long i = 0; i < len; ++i) c.push_back(uniform(g, 0, 3) == 0 ? Rational(0) : rat(g));
  return QSeries(d, k0, k0 + len - 1, std::move(c));
}

inline int lattice(Rng& g) {
  static const int ds[] = {1, 2, 3, 4, 6, 8, 12, 24};
  return ds[uniform(g, 0, 7)];
}

inline bool identical(const QSeries& a, const QSeries& b) {
  return a.d() == b.d() && a.k0() == b.k0() && a.N() == b.N() && a.coeffs() == b.coeffs();
}

inline Poly poly(Rng& g, int vars, int terms, int deg) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly m(rat(g));
    for (int v = 0; v < vars; ++v) m *= Poly::var(static_cast<Var>(v), static_cast<int>(uniform(g, 0, deg)));
    p += m;
  }
  return p;
}

inline Fraction fraction(Rng& g) {
  FactorExponents e{};
  e[kDelta] = static_cast<int>(uniform(g, 0, 1));
  for (int i = 1; i < kNumFactors; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(uniform(g, 0, 2));
  return Fraction(poly(g, 3, static_cast<int>(uniform(g, 1, 3)), 2), e);
}


inline Tally series_ring_axioms(int cases = kCases) {
  Tally t{"series ring axioms"};
  Rng g(0x5eed0001);
  for (int n = 0; n < cases; ++n, ++t.cases) {
    const int d = lattice(g);
    const QSeries a = series(g, d), b = series(g, lattice(g)), c = series(g, d);
    QMF_PROP(identical(a + b, b + a));
    QMF_PROP((a + b) + c == a + (b + c));
    QMF_PROP(a * b == b * a);
    QMF_PROP((a * b).N() == (b * a).N());
    QMF_PROP((a * b) * c == a * (b * c));
    QMF_PROP(a * (b + c) == a * b + a * c);
    QMF_PROP((a - a).is_known_zero());
    QMF_PROP(a * QSeries::constant(Rational(1), 8) == a);
    if (a.valuation() <= a.N()) {
      const QSeries q = b / a;
      QMF_PROP(q * a == b);
    }
  }
  return t;
}

inline Tally leibniz_rule(int cases = kCases) {
  Tally t{"Leibniz rule"};
  Rng g(0x5eed0002);
  for (int n = 0; n < cases; ++n, ++t.cases) {
    const int d = lattice(g);
    const QSeries a = series(g, d), b = series(g, lattice(g));
    QMF_PROP(derive(a * b) == derive(a) * b + a * derive(b));
    const Poly p = poly(g, 5, 3, 2), q = poly(g, 5, 3, 2);
    const Var v = static_cast<Var>(uniform(g, 0, 4));
    QMF_PROP((p * q).diff(v) == p.diff(v) * q + p * q.diff(v));
  }
  return t;
}

inline Tally reversion_and_composition(int cases = kCases) {
  Tally t{"reversion and composition"};
  Rng g(0x5eed0003);
  for (int n = 0; n < cases; ++n, ++t.cases) {
    const long N = uniform(g, 2, 7);
    std::vector<Rational> c(static_cast<std::size_t>(N + 1));
    c[1] = nonzero_rat(g);
    for (long k = 2; k <= N; ++k) c[static_cast<std::size_t>(k)] = rat(g);
    const QSeries f = QSeries::from_coeffs(c);
    const QSeries r = revert(f);
    const QSeries id = QSeries::monomial(Rational(1), 1, N);
    QMF_PROP(compose(r, f) == id);
    QMF_PROP(compose(f, r) == id);
    std::vector<Rational> h1c, h2c;
    for (long k = 0; k <= N; ++k) {
      h1c.push_back(rat(g));
      h2c.push_back(rat(g));
    }
    const QSeries h1 = QSeries::from_coeffs(h1c), h2 = QSeries::from_coeffs(h2c);
    QMF_PROP(compose(h1 * h2, f) == compose(h1, f) * compose(h2, f));
    QMF_PROP(compose(h1 + h2, f) == compose(h1, f) + compose(h2, f));
  }
  return t;
}

inline Tally lattice_round_trips(int cases = kCases) {
  Tally t{"lattice round trips"};
  Rng g(0x5eed0004);
  for (int n = 0; n < cases; ++n, ++t.cases) {
    const int d = lattice(g);
    const QSeries s = series(g, d);
    int m = 0;
    while (m == 0 || 72 % (d * m) != 0) m = static_cast<int>(uniform(g, 1, 6));
    const auto back = s.refine(m).coarsen(m);
    QMF_PROP(back.has_value());
    if (!back) continue;
    QMF_PROP(identical(*back, s));
    const QSeries r = s.refine(m).reduced();
    QMF_PROP(r == s);
    QMF_PROP(identical(r.reduced(), r));
    QMF_PROP(r.is_known_zero() == s.is_known_zero());
    QMF_PROP(s.on_lattice(d * m) == s);
    QMF_PROP(identical(series_from_json(to_json(s)), s));
  }
  return t;
}

inline Tally fraction_cross_multiplication(int cases = kCases) {
  Tally t{"fraction cross-multiplication"};
  Rng g(0x5eed0005);
  const std::vector<Var> params = {T1, T2, T3};
  for (int n = 0; n < cases; ++n, ++t.cases) {
    const Fraction a = fraction(g), b = fraction(g), c = fraction(g);
    QMF_PROP(a + b == b + a);
    QMF_PROP((a + b) - b == a);
    QMF_PROP(a * (b + c) == a * b + a * c);
    QMF_PROP(a.normalized() == a);
    // the same value written over a larger denominator
    const int i = static_cast<int>(uniform(g, 0, kNumFactors - 1));
    FactorExponents e = a.den();
    e[static_cast<std::size_t>(i)] += 1;
    const Fraction widened(a.num() * catalog_factor<Rational>(i), e);
    QMF_PROP(widened == a);
    QMF_PROP(widened.normalized().num() == a.normalized().num());
    QMF_PROP(!(a + Fraction(Rational(1)) == a));
    // equality agrees with evaluation off the polar locus
    std::map<Var, Rational> pt;
    for (Var v : params) pt[v] = rat(g);
    Rational va, vb;
    try {
      va = a.evaluate(pt);
      vb = b.evaluate(pt);
    } catch (const DivisionByZero&) {
      continue;
    }
    QMF_PROP((a * b).evaluate(pt) == va * vb);
    QMF_PROP((a + b).evaluate(pt) == va + vb);
  }
  return t;
}

#undef QMF_PROP

}  // namespace qmf::props
