#include "cliffpar/algebra.hpp"

namespace cliffpar {

namespace {

using Q = Quat<Rational>;

Mat4<Rational> mat4_diff(const Mat4<Rational>& x, const Mat4<Rational>& y) {
  Mat4<Rational> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.a[i][j] = x.a[i][j] - y.a[i][j];
  return out;
}

Q first_kernel_vector(const Matrix<Rational>& rows) {
  Matrix<Rational> basis = kernel_basis(rows);
  if (basis.empty()) return Q::zero();
  return Q(basis[0][0], basis[0][1], basis[0][2], basis[0][3]);
}

}  // namespace

bool are_conjugate(const QuatAlgebra& alg, const Q& q1, const Q& q2) {
  return alg.trace(q1) == alg.trace(q2) && alg.norm(q1) == alg.norm(q2);
}

std::optional<Q> conjugator(const QuatAlgebra& alg, const Q& q1, const Q& q2) {
  if (!are_conjugate(alg, q1, q2)) return std::nullopt;
  // q1 h = h q2 is linear in h: (lambda_{q1} - rho_{q2}) h = 0.
  Mat4<Rational> m = mat4_diff(translation_matrix(alg, q1, Side::left),
                               translation_matrix(alg, q2, Side::right));
  Matrix<Rational> rows(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = m.a[i][j];
  Q h = first_kernel_vector(rows);
  if (h.is_zero() || alg.norm(h).is_zero())
    throw DomainError("no invertible conjugator: algebra is not division");
  return h;
}

Mat4<Rational> inner_automorphism_matrix(const QuatAlgebra& alg, const Q& h) {
  if (h.is_zero()) throw DomainError("inner automorphism requires h != 0");
  return translation_matrix(alg, alg.inverse(h), Side::left) *
         translation_matrix(alg, h, Side::right);
}

SkolemNoetherParts skolem_noether_decompose(const QuatAlgebra& alg,
                                            const Mat4<Rational>& beta) {
  if (mat4_rank(beta) != 4)
    throw RankError("decomposition input is singular");
  std::array<Rational, 4> g_coords = beta.apply(Q::one().c);
  Q g(g_coords[0], g_coords[1], g_coords[2], g_coords[3]);
  if (alg.norm(g).is_zero())
    throw MembershipError("beta(1) is not invertible");
  Mat4<Rational> phi =
      translation_matrix(alg, alg.inverse(g), Side::left) * beta;

  auto apply = [&](const Q& x) {
    auto v = phi.apply(x.c);
    return Q(v[0], v[1], v[2], v[3]);
  };
  // phi fixes 1 by construction; it lies in Inn(H*) iff it is multiplicative
  // on the basis.
  std::array<Q, 4> images;
  for (int m = 0; m < 4; ++m) images[m] = apply(Q::basis(m));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Q lhs = apply(alg.mul(Q::basis(i), Q::basis(j)));
      Q rhs = alg.mul(images[i], images[j]);
      if (lhs != rhs)
        throw MembershipError(
            "map is not an algebra automorphism composed with a left "
            "translation");
    }
  }

  // h phi(y) = y h for all y, linear in h: stack (rho_{phi(e_m)} -
  // lambda_{e_m}) h = 0 over the basis.
  Matrix<Rational> rows;
  for (int m = 0; m < 4; ++m) {
    Mat4<Rational> block =
        mat4_diff(translation_matrix(alg, images[m], Side::right),
                  translation_matrix(alg, Q::basis(m), Side::left));
    for (int i = 0; i < 4; ++i) {
      std::vector<Rational> row(4);
      for (int j = 0; j < 4; ++j) row[j] = block.a[i][j];
      rows.push_back(std::move(row));
    }
  }
  Q h = first_kernel_vector(rows);
  if (h.is_zero() || alg.norm(h).is_zero())
    throw MembershipError("no inner automorphism matches the residual map");
  return {g, h};
}

}  // namespace cliffpar
