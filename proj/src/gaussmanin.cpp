#include "qmf/gaussmanin.hpp"

#include <algorithm>

#include "qmf/derham.hpp"
#include "qmf/linsolve.hpp"

namespace qmf {

namespace {

Poly p(const char* s) { return Poly::parse(s); }

const std::array<Var, 3> kT = {T1, T2, T3};

OneForm<Rational> form(const char* a, const char* b, const char* c) {
  OneForm<Rational> w;
  w.c = {Fraction(p(a)), Fraction(p(b)), Fraction(p(c))};
  return w;
}

OneForm<Rational> scaled(const Fraction& f, const OneForm<Rational>& w) { return f * w; }

}  // namespace

bool equal(const ConnectionMatrix& a, const ConnectionMatrix& b) {
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      if (!(a[j][k] == b[j][k])) return false;
    }
  }
  return true;
}

std::string to_string(const ConnectionMatrix& A) {
  std::string s;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      s += "A" + std::to_string(j + 1) + std::to_string(k + 1) + " = " + A[j][k].normalized().str() + "\n";
    }
  }
  return s;
}

ConnectionMatrix gm_matrix() {
  const Cofactors cf = cofactors();
  const Poly& P = CurveFamily::P();
  ConnectionMatrix A;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 3; ++i) {
      // d/dt_i (x^j dx/y) = (G/P) dx/y with G = -x^j (dP/dt_i) / 2, and
      // (G/P) dx/y = (G a2 - 2 (G a1)') dx/y / Delta modulo exact forms
      const Poly G = Poly::var(X, j) * P.diff(kT[static_cast<std::size_t>(i)]) * Rational(-1, 2);
      const Poly H = G * cf.a2 - (G * cf.a1).diff(X) * Rational(2);
      const CohomClass k = reduce(H);
      const Fraction inv_delta = Fraction::reciprocal(kDelta);
      A[j][0].c[static_cast<std::size_t>(i)] = (k.alpha * inv_delta).normalized();
      A[j][1].c[static_cast<std::size_t>(i)] = (k.beta * inv_delta).normalized();
    }
  }
  return A;
}

ConnectionMatrix ramanujan_closed_form() {
  const Fraction inv = Fraction::reciprocal(kDelta);
  const OneForm<Rational> alpha = form("0", "3*t3", "-2*t2");
  const OneForm<Rational> dD = total_differential(Fraction(CurveFamily::delta()));
  const OneForm<Rational> dt1 = OneForm<Rational>::dt(0);
  const Fraction t1(p("t1"));
  ConnectionMatrix A;
  A[0][0] = scaled(inv, scaled(Fraction(Rational(-3, 2)) * t1, alpha) - scaled(Fraction(Rational(1, 12)), dD));
  A[0][1] = scaled(inv, scaled(Fraction(Rational(3, 2)), alpha));
  A[1][0] = scaled(inv, scaled(Fraction(CurveFamily::delta()), dt1) - scaled(Fraction(Rational(1, 6)) * t1, dD) -
                            scaled(Fraction(p("3/2*t1^2 + 1/8*t2")), alpha));
  A[1][1] = scaled(inv, scaled(Fraction(Rational(3, 2)) * t1, alpha) + scaled(Fraction(Rational(1, 12)), dD));
  return A;
}

ConnectionMatrix halphen_closed_form() {
  // dt_i / (2 prod_{j != i}(t_i - t_j)) * [[-t_i, 1], [t_j t_k - t_i(t_j + t_k), t_i]]
  struct Block {
    const char* ti;
    const char* low;
    FactorExponents den;
    int sign;
  };
  const std::array<Block, 3> blocks = {{
      {"t1", "t2*t3 - t1*(t2 + t3)", {0, 1, 0, 1}, 1},
      {"t2", "t1*t3 - t2*(t1 + t3)", {0, 1, 1, 0}, -1},  // (t2-t1)(t2-t3) = -(t1-t2)(t2-t3)
      {"t3", "t1*t2 - t3*(t1 + t2)", {0, 0, 1, 1}, 1},   // (t3-t1)(t3-t2) = (t1-t3)(t2-t3)
  }};
  ConnectionMatrix A;
  for (std::size_t i = 0; i < 3; ++i) {
    const Block& b = blocks[i];
    const Fraction scale(Poly(Rational(b.sign, 2)), b.den);
    A[0][0].c[i] = scale * Fraction(-p(b.ti));
    A[0][1].c[i] = scale;
    A[1][0].c[i] = scale * Fraction(p(b.low));
    A[1][1].c[i] = scale * Fraction(p(b.ti));
  }
  return A;
}

VectorField<Rational> solve_vector_field(const ConnectionMatrix& A) {
  // sum_i R_i A^(i) = [[0, -1], [0, 0]]: four equations in R1, R2, R3
  const std::array<std::array<Rational, 2>, 2> target = {{{0, -1}, {0, 0}}};
  std::vector<std::vector<Poly>> rows;
  std::vector<Poly> rhs;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      FactorExponents e{};
      for (const auto& f : A[j][k].c) e = Fraction::join(e, f.den());
      std::vector<Poly> row;
      for (const auto& f : A[j][k].c) row.push_back(f.numerator_over(e));
      rows.push_back(std::move(row));
      rhs.push_back(Fraction(Poly(target[j][k])).numerator_over(e));
    }
  }
  const SolveResult<Poly> res = solve_fraction_free(std::move(rows), std::move(rhs));
  if (res.status == SolveStatus::NoSolution) throw NoSolution("no vector field satisfies the connection equations");
  if (res.status == SolveStatus::NonUnique) throw NonUniqueSolution("vector field is not determined by the connection equations");
  VectorField<Rational> R;
  for (const Poly& n : res.numer) {
    auto q = n.divide_exact(res.denom);
    if (!q) throw SolveFailure("vector field is not polynomial");
    R.push_back(*q);
  }
  return R;
}

VectorField<Rational> ramanujan_field() { return solve_vector_field(gm_matrix()); }

VectorField<Rational> halphen_field_reference() {
  return {p("t1*(t2 + t3) - t2*t3"), p("t2*(t1 + t3) - t1*t3"), p("t3*(t1 + t2) - t1*t2")};
}

std::map<Var, Poly> halphen_map() {
  const Poly T = p("(t1 + t2 + t3)/3");
  const Poly a = T - p("t1"), b = T - p("t2"), c = T - p("t3");
  return {{T1, T}, {T2, Poly(-4) * (a * b + a * c + b * c)}, {T3, Poly(-4) * a * b * c}};
}

Fraction pullback(const Fraction& f, const std::map<Var, Poly>& map, const Rational& delta_scale) {
  const FactorExponents& e = f.den();
  if (e[kT1T2] != 0 || e[kT2T3] != 0 || e[kT1T3] != 0) throw SolveFailure("pullback expects a pure Delta denominator");
  const int k = e[kDelta];
  const Poly num = f.num().substitute(map) * pow(delta_scale, -k);
  return Fraction(num, {0, 2 * k, 2 * k, 2 * k}).normalized();
}

ConnectionMatrix pullback(const ConnectionMatrix& A, const std::map<Var, Poly>& map, const Rational& delta_scale) {
  ConnectionMatrix B;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (std::size_t i = 0; i < 3; ++i) {
        const Fraction ci = pullback(A[j][k].c[i], map, delta_scale);
        const Poly& image = map.at(kT[i]);
        for (std::size_t s = 0; s < 3; ++s) B[j][k].c[s] += ci * Fraction(image.diff(kT[s]));
      }
      B[j][k] = B[j][k].normalized();
    }
  }
  return B;
}

HalphenPullback halphen_pullback() {
  const auto map = halphen_map();
  const Poly image = CurveFamily::delta().substitute(map);
  const Poly vandermonde2 = pow(p("(t1 - t2)*(t2 - t3)*(t1 - t3)"), 2);
  const auto q = image.divide_exact(vandermonde2);
  if (!q || !q->is_constant()) throw SolveFailure("discriminant does not pull back to the Vandermonde square");
  HalphenPullback r;
  r.delta_scale = q->constant_term();
  r.A = pullback(gm_matrix(), map, r.delta_scale);
  r.H = solve_vector_field(r.A);
  return r;
}

Poly gamma2_cubic_at(int which) {
  const auto map = halphen_map();
  const Poly Xs = Poly::var(kT[static_cast<std::size_t>(which)]);
  const Poly u = Xs - map.at(T1);
  return u * u * u - map.at(T2) * u * Rational(1, 4) - map.at(T3) * Rational(1, 4);
}

bool gamma2_minimal_poly_check() {
  for (int i = 0; i < 3; ++i) {
    if (!gamma2_cubic_at(i).is_zero()) return false;
  }
  return true;
}

std::string OhyamaReport::str() const {
  std::string s = "F = " + F.str() + "\n";
  for (std::size_t i = 0; i < V.size(); ++i) s += "V" + std::to_string(i + 1) + " = " + V[i].str() + "\n";
  s += "dF(V) = " + dFV.str() + "\n";
  switch (kind) {
    case Kind::Identically: s += "dF(V) vanishes identically"; break;
    case Kind::ModuloF: s += "dF(V) = (" + L.str() + ") * F, so V is tangent to F = 0 but dF(V) is not identically zero"; break;
    case Kind::NotTangent: s += "dF(V) is not a multiple of F"; break;
  }
  return s;
}

OhyamaReport ohyama_tangency_check() {
  using CP = Polynomial<Cyclo>;
  auto t = [](int i) { return CP::var(static_cast<Var>(i)); };
  const Cyclo z = Cyclo::zeta(3);
  OhyamaReport r;
  r.F = CP(z * z) * (t(1) * t(3) + t(2) * t(0)) + CP(z) * (t(1) * t(0) + t(2) * t(3)) + (t(1) * t(2) + t(3) * t(0));
  // each equation: sum of t_i' over a triple = sum of pairwise products over the triple
  const std::array<std::array<int, 3>, 4> triples = {{{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 3}}};
  MatrixX<Cyclo> M = MatrixX<Cyclo>::Constant(4, 4, Cyclo(0));
  std::vector<CP> rhs;
  for (std::size_t e = 0; e < 4; ++e) {
    const auto& [a, b, c] = triples[e];
    M(static_cast<Eigen::Index>(e), a) = M(static_cast<Eigen::Index>(e), b) = M(static_cast<Eigen::Index>(e), c) = Cyclo(1);
    rhs.push_back(t(a) * t(b) + t(b) * t(c) + t(c) * t(a));
  }
  const MatrixX<Cyclo> Minv = inverse_field<Cyclo>(M);
  for (Eigen::Index i = 0; i < 4; ++i) {
    CP v;
    for (Eigen::Index e = 0; e < 4; ++e) v += rhs[static_cast<std::size_t>(e)] * Minv(i, e);
    r.V.push_back(v);
  }
  r.dFV = apply_field(r.V, r.F);
  if (r.dFV.is_zero()) {
    r.kind = OhyamaReport::Kind::Identically;
    return r;
  }
  // dF(V) = (l1 t1 + ... + l4 t4) F: match coefficients of the cubic monomials
  std::vector<CP> products;
  for (int i = 0; i < 4; ++i) products.push_back(t(i) * r.F);
  std::vector<Monomial> monos;
  for (const CP* q : {&r.dFV, &products[0], &products[1], &products[2], &products[3]}) {
    for (const auto& [m, c] : q->terms()) {
      if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
    }
  }
  std::vector<std::vector<Cyclo>> rows;
  std::vector<Cyclo> b;
  for (const Monomial& m : monos) {
    std::vector<Cyclo> row;
    for (const CP& pr : products) row.push_back(pr.coeff(m));
    rows.push_back(std::move(row));
    b.push_back(r.dFV.coeff(m));
  }
  const SolveResult<Cyclo> res = solve_fraction_free(std::move(rows), std::move(b));
  if (res.status != SolveStatus::Unique) {
    r.kind = OhyamaReport::Kind::NotTangent;
    return r;
  }
  for (int i = 0; i < 4; ++i) r.L += t(i) * (res.numer[static_cast<std::size_t>(i)] / res.denom);
  r.kind = OhyamaReport::Kind::ModuloF;
  return r;
}

}  // namespace qmf
