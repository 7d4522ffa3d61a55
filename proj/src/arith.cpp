#include "qmf/arith.hpp"

#include <cmath>
#include <vector>

#include "qmf/errors.hpp"
#include "qmf/polynomial.hpp"

namespace qmf {

WeierstrassCurve WeierstrassCurve::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("curve needs an '=': " + std::string(text));
  // y is carried through the polynomial parser as t4
  auto rename = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c == 'y') out += "t4";
      else out += c;
    }
    return out;
  };
  const Poly F = Poly::parse(rename(text.substr(0, eq))) - Poly::parse(rename(text.substr(eq + 1)));
  auto mono = [](int xe, int ye) {
    Monomial m{};
    m[X] = xe;
    m[T4] = ye;
    return m;
  };
  auto integer = [&](const Rational& c) {
    if (!c.is_integer() || !c.num().fits_slong_p()) throw ParseError("curve coefficients must be integers: " + std::string(text));
    return c.num().get_si();
  };
  if (!(F.coeff(mono(0, 2)) == Rational(1)) || !(F.coeff(mono(3, 0)) == Rational(-1))) {
    throw ParseError("expected y^2 + ... = x^3 + ...: " + std::string(text));
  }
  WeierstrassCurve E;
  E.a1 = integer(F.coeff(mono(1, 1)));
  E.a3 = integer(F.coeff(mono(0, 1)));
  E.a2 = -integer(F.coeff(mono(2, 0)));
  E.a4 = -integer(F.coeff(mono(1, 0)));
  E.a6 = -integer(F.coeff(mono(0, 0)));
  // nothing else may appear
  Poly rebuilt = Poly::var(T4, 2) + Poly(E.a1) * Poly::var(X) * Poly::var(T4) + Poly(E.a3) * Poly::var(T4) - Poly::var(X, 3) -
                 Poly(E.a2) * Poly::var(X, 2) - Poly(E.a4) * Poly::var(X) - Poly(E.a6);
  if (!(rebuilt == F)) throw ParseError("not a Weierstrass equation: " + std::string(text));
  return E;
}

std::string WeierstrassCurve::str() const {
  auto term = [](long c, const std::string& m, std::string& s) {
    if (c == 0) return;
    s += c < 0 ? " - " : " + ";
    const long a = std::labs(c);
    if (m.empty()) s += std::to_string(a);
    else s += (a == 1 ? "" : std::to_string(a) + "*") + m;
  };
  std::string l = "y^2", r = "x^3";
  term(a1, "x*y", l);
  term(a3, "y", l);
  term(a2, "x^2", r);
  term(a4, "x", r);
  term(a6, "", r);
  return l + " = " + r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {
long mod(long a, long p) {
  const long r = a % p;
  return r < 0 ? r + p : r;
}
}  // namespace

PointCount count_points(const WeierstrassCurve& E, long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  PointCount c;
  for (long x = 0; x < p; ++x) {
    const long rhs = mod(mod(mod(x * x, p) * x, p) + mod(E.a2, p) * mod(x * x, p) + mod(E.a4, p) * x + mod(E.a6, p), p);
    for (long y = 0; y < p; ++y) {
      const long lhs = mod(y * y + mod(E.a1, p) * mod(x * y, p) + mod(E.a3, p) * y, p);
      if (lhs == rhs) ++c.Np;
    }
  }
  c.ap = p - c.Np;
  if (static_cast<double>(c.ap * c.ap) > 4.0 * static_cast<double>(p)) throw Error("Hasse bound violated");
  return c;
}

BigInt chebyshev_u(int k, long a, long p) {
  if (k < 0) throw Error("chebyshev_u needs k >= 0");
  BigInt prev = 1, cur = a;
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    BigInt next = BigInt(a) * cur - BigInt(p) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational sigma_k(long p, int k) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p < 5) throw PrimeTooSmall("sigma_k needs p >= 5 for the short Weierstrass form");
  if (k < 0 || k % 2 != 0) throw Error("sigma_k needs an even k >= 0");
  // quadratic character table
  std::vector<int> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;

  BigInt total = 0;
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      if (mod(4 * a * a % p * a + 27 * b * b, p) == 0) continue;
      // a_p = p - #affine = -sum_x chi(x^3 + ax + b)
      long s = 0;
      for (long x = 0; x < p; ++x) s += chi[static_cast<std::size_t>(mod(x * x % p * x + a * x + b, p))];
      total += chebyshev_u(k, -s, p);
    }
  }
  return Rational(-total, BigInt(p - 1));
}

}  // namespace qmf
