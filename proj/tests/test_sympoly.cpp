#include "doctest.h"

#include "qmf/fraction.hpp"

using namespace qmf;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

const VectorField<Rational> kRamanujan = {P("t1^2 - t2/12"), P("4*t1*t2 - 6*t3"), P("6*t1*t3 - t2^2/3")};

}  // namespace

TEST_CASE("canonical printing and parsing") {
  const Poly delta = P("27*t3^2 - t2^3");
  CHECK(delta.str() == "27*t3^2 - t2^3");
  CHECK(P("-t2^3 + 27*t3*t3") == delta);
  CHECK(P(delta.str().c_str()) == delta);
  CHECK(P("(t1+t2)^2 - t1^2 - 2*t1*t2 - t2^2").is_zero());
  CHECK(P("x^2/2 - 1/3").str() == "-1/3 + 1/2*x^2");
  CHECK_THROWS_AS(P("t5"), ParseError);
  CHECK_THROWS_AS(P("1/x"), ParseError);
  CHECK_THROWS_AS(P("(t1"), ParseError);
}

TEST_CASE("substitution") {
  const Poly p = P("3*t1^2*t2 - t3 + 5");
  CHECK(p.substitute({}) == p);
  CHECK(p.substitute({{T1, P("t1")}, {T2, P("t2")}}) == p);
  // image of t2 and t3 under the Halphen map
  const Poly T = P("(t1 + t2 + t3)/3");
  const Poly a1 = T - P("t1"), a2 = T - P("t2"), a3 = T - P("t3");
  const Poly img2 = Poly(-4) * (a1 * a2 + a1 * a3 + a2 * a3);
  const Poly img3 = Poly(-4) * a1 * a2 * a3;
  const std::map<Var, Poly> alpha = {{T1, T}, {T2, img2}, {T3, img3}};
  // sympy expansion
  CHECK(P("t2").substitute(alpha) == P("4/3*t1^2 - 4/3*t1*t2 - 4/3*t1*t3 + 4/3*t2^2 - 4/3*t2*t3 + 4/3*t3^2"));
  CHECK(P("t3").substitute(alpha) ==
        P("8/27*t1^3 - 4/9*t1^2*t2 - 4/9*t1^2*t3 - 4/9*t1*t2^2 + 16/9*t1*t2*t3 - 4/9*t1*t3^2 + 8/27*t2^3 - 4/9*t2^2*t3 - 4/9*t2*t3^2 + 8/27*t3^3"));
  CHECK(P("27*t3^2 - t2^3").substitute(alpha) == P("-16*(t1 - t2)^2*(t1 - t3)^2*(t2 - t3)^2"));
  const Poly q = P("t1*t2 + x");
  CHECK((p * q).substitute(alpha) == p.substitute(alpha) * q.substitute(alpha));
}

TEST_CASE("exact division") {
  const Poly a = P("t1 - t2"), b = P("t1^2 + t3");
  CHECK(*(a * b).divide_exact(a) == b);
  CHECK_FALSE((a * b + 1).divide_exact(a).has_value());
  CHECK_THROWS_AS(a.divide_exact(Poly()), DivisionByZero);
}

TEST_CASE("total differential") {
  const Fraction delta(P("27*t3^2 - t2^3"));
  const OneForm<Rational> d = total_differential(delta);
  CHECK(d.c[0].is_zero());
  CHECK(d.c[1] == Fraction(P("-3*t2^2")));
  CHECK(d.c[2] == Fraction(P("54*t3")));
  CHECK(total_differential(Fraction(7)).is_zero());
  const OneForm<Rational> dinv = total_differential(Fraction::reciprocal(kDelta));
  CHECK(dinv.c[1] == Fraction(P("3*t2^2"), {2, 0, 0, 0}));
  CHECK(dinv.c[2] == Fraction(P("-54*t3"), {2, 0, 0, 0}));
}

TEST_CASE("pairing with the Ramanujan field") {
  CHECK(pair(OneForm<Rational>::dt(0), kRamanujan) == Fraction(P("t1^2 - t2/12")));
  const Fraction delta(P("27*t3^2 - t2^3"));
  CHECK(pair(total_differential(delta), kRamanujan) == Fraction(P("12*t1") * delta.num()));
  CHECK(pair(OneForm<Rational>{}, kRamanujan).is_zero());
}

TEST_CASE("weights") {
  CHECK(P("27*t3^2 - t2^3").weights() == std::set<int>{12});
  CHECK(P("t1^2 - t2/12").is_homogeneous());
  CHECK(P("t1 + t2").weights() == std::set<int>{2, 4});
  CHECK_FALSE(P("t1 + t2").is_homogeneous());
}

TEST_CASE("fractions") {
  const Fraction f(P("t1 + 1"), {2, 1, 0, 0});
  CHECK(f.str() == "(1 + t1) / Δ^2*(t1-t2)");
  const Fraction g = f * Fraction(P("t1 - t2"));
  CHECK(g == Fraction(P("t1 + 1"), {2, 0, 0, 0}));
  CHECK(g.normalized().den() == FactorExponents{2, 0, 0, 0});
  CHECK((f - f).is_zero());
  CHECK(Fraction(P("27*t3^2 - t2^3"), {1, 0, 0, 0}).as_polynomial() == Poly(1));
  CHECK_FALSE(f.as_polynomial().has_value());
  const std::map<Var, Rational> pt = {{T1, 2}, {T2, 1}, {T3, 1}};
  CHECK(f.evaluate(pt) == Rational(3) / Rational(26 * 26));
}
