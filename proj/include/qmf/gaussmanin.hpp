#pragma once

#include <array>
#include <map>
#include <string>

#include "qmf/fraction.hpp"

namespace qmf {

/// Row j holds nabla of the j-th basis form (dx/y, x dx/y); entry k is its
/// component along the k-th basis form.
using ConnectionMatrix = std::array<std::array<OneForm<Rational>, 2>, 2>;

bool equal(const ConnectionMatrix& a, const ConnectionMatrix& b);
std::string to_string(const ConnectionMatrix& A);

/// Gauss-Manin connection of y^2 = 4(x-t1)^3 - t2(x-t1) - t3, computed from
/// the cofactor identity and the reduction algorithm.
ConnectionMatrix gm_matrix();

/// Reference closed forms used to check the computed matrices.
ConnectionMatrix ramanujan_closed_form();
ConnectionMatrix halphen_closed_form();

/// The unique field R with nabla_R(dx/y) = -x dx/y and nabla_R(x dx/y) = 0.
/// Throws NoSolution / NonUniqueSolution / SolveFailure (non-polynomial).
VectorField<Rational> solve_vector_field(const ConnectionMatrix& A);

VectorField<Rational> ramanujan_field();
VectorField<Rational> halphen_field_reference();

/// t -> (T, -4 sum_{i<j}(T-t_i)(T-t_j), -4 prod(T-t_i)), T = (t1+t2+t3)/3.
std::map<Var, Poly> halphen_map();

struct HalphenPullback {
  ConnectionMatrix A;
  VectorField<Rational> H;
  /// Delta o alpha = delta_scale * prod_{i<j} (t_i - t_j)^2
  Rational delta_scale;
};

/// Pull back the Ramanujan-chart connection along the Halphen map and solve for the field there.
HalphenPullback halphen_pullback();

/// Pullback of a fraction whose denominator is a power of Delta.
Fraction pullback(const Fraction& f, const std::map<Var, Poly>& map, const Rational& delta_scale);
ConnectionMatrix pullback(const ConnectionMatrix& A, const std::map<Var, Poly>& map, const Rational& delta_scale);

/// (X - t1)^3 - t2 (X - t1)/4 - t3/4 at X = s_which and t = alpha(s); zero when s_which is a root.
Poly gamma2_cubic_at(int which);
bool gamma2_minimal_poly_check();

struct OhyamaReport {
  enum class Kind { Identically, ModuloF, NotTangent };
  Kind kind = Kind::NotTangent;
  VectorField<Cyclo> V;
  Polynomial<Cyclo> F;
  Polynomial<Cyclo> dFV;
  /// dF(V) = L * F when kind is ModuloF
  Polynomial<Cyclo> L;
  [[nodiscard]] std::string str() const;
};

OhyamaReport ohyama_tangency_check();

}  // namespace qmf
