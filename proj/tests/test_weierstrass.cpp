#include <doctest.h>

#include "qmf/weierstrass.hpp"

using namespace qmf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }
}  // namespace

TEST_CASE("first coefficients of x") {
  const WeierstrassExpansion e = weierstrass_expansion(4);
  CHECK(e.x.coeff(-2) == P("1"));
  CHECK(e.x.coeff(0).is_zero());
  CHECK(e.g(2).is_zero());
  CHECK(e.g(4) == P("1/20*t2"));
  CHECK(e.g(6) == P("1/28*t3"));
  CHECK(e.g(8) == P("1/1200*t2^2"));
  CHECK(e.y.coeff(-3) == P("-2"));
}

TEST_CASE("parity, dx = y dz and the curve equation") {
  for (int K : {2, 5, 9}) {
    const WeierstrassExpansion e = weierstrass_expansion(K);
    for (int k = e.x.lo(); k <= e.x.hi(); ++k) {
      if (k % 2 != 0) CHECK(e.x.coeff(k).is_zero());
    }
    for (int k = e.y.lo(); k <= e.y.hi(); ++k) {
      if (k % 2 == 0) CHECK(e.y.coeff(k).is_zero());
      CHECK(e.y.coeff(k) == e.x.coeff(k + 1) * Poly(k + 1));
    }
    const LaurentZSeries r = curve_residual(e);
    CHECK(r.hi() == 2 * K - 4);
    CHECK(r.is_zero());
  }
}

TEST_CASE("order matching agrees with the classical recursion") {
  const int K = 10;
  const WeierstrassExpansion e = weierstrass_expansion(K);
  const std::vector<Poly> c = weierstrass_recursion(K + 1);
  for (int k = 2; k <= K + 1; ++k) CHECK(e.x.coeff(2 * k - 2) == c[static_cast<std::size_t>(k)]);
}

TEST_CASE("Eisenstein modular forms") {
  const QuasiModularPoly g4 = eisenstein_modular(1);
  CHECK(g4.p == P("1/20*t2"));
  CHECK(g4.weight == 4);
  CHECK(g4.diff_order == 0);
  CHECK(eisenstein_modular(3).p == P("1/1200*t2^2"));
  for (int k = 1; k <= 8; ++k) {
    const QuasiModularPoly g = eisenstein_modular(k);
    CHECK(g.p.is_homogeneous());
    CHECK(g.weight == 2 * k + 2);
    CHECK(g.p.degree(T1) <= 0);
  }
  CHECK_THROWS_AS(eisenstein_modular(0), Error);
}
