#ifndef CLIFFPAR_SUBSPACE_HPP_
#define CLIFFPAR_SUBSPACE_HPP_

#include <initializer_list>
#include <vector>

#include "cliffpar/algebra.hpp"
#include "cliffpar/linalg.hpp"

namespace cliffpar {

/// A cheap projective representative: scales a coordinate vector so its
/// entries become coprime integers (rationals) or a primitive polynomial
/// vector (rational functions). Keeps the arithmetic of row reductions and
/// translations over the ring rather than the fraction field.
template <FieldScalar K>
Quat<K> projective_primitive(const Quat<K>& q) {
  if (q.is_zero()) return q;
  if constexpr (K::kCharTwo) {
    Gf2BiPoly common = Gf2BiPoly::one();
    for (int i = 0; i < 4; ++i) {
      const Gf2BiPoly& d = q[i].den();
      if (!d.is_one())
        common = common * Gf2BiPoly::exact_div(d, Gf2BiPoly::gcd(common, d));
    }
    std::array<Gf2BiPoly, 4> nums;
    Gf2BiPoly content;
    for (int i = 0; i < 4; ++i) {
      if (q[i].is_zero()) continue;
      nums[i] = q[i].num() * Gf2BiPoly::exact_div(common, q[i].den());
      content = Gf2BiPoly::gcd(content, nums[i]);
    }
    Quat<K> out;
    for (int i = 0; i < 4; ++i) {
      if (nums[i].is_zero()) continue;
      out[i] = F2RatFun::from_poly(content.is_one()
                                       ? nums[i]
                                       : Gf2BiPoly::exact_div(nums[i], content));
    }
    return out;
  } else {
    mpz_class common = 1;
    for (int i = 0; i < 4; ++i) common = lcm(common, q[i].den());
    std::array<mpz_class, 4> nums;
    mpz_class content = 0;
    for (int i = 0; i < 4; ++i) {
      nums[i] = q[i].num() * (common / q[i].den());
      content = gcd(content, nums[i]);
    }
    Quat<K> out;
    for (int i = 0; i < 4; ++i) out[i] = K(Rational(nums[i] / content, 1));
    return out;
  }
}

/// A subspace of the coordinate space K^4 in its unique reduced
/// row-echelon representation. Vector dimension 1, 2, 3 are the points,
/// lines and planes of the projective space.
template <FieldScalar K>
class Subspace {
 public:
  Subspace() = default;  // zero subspace

  static Subspace span(const std::vector<Quat<K>>& generators) {
    Matrix<K> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
      Quat<K> p = projective_primitive(g);
      rows.push_back({p[0], p[1], p[2], p[3]});
    }
    rref_in_place(rows);
    Subspace s;
    s.rows_ = std::move(rows);
    return s;
  }
  static Subspace span(std::initializer_list<Quat<K>> generators) {
    return span(std::vector<Quat<K>>(generators));
  }
  static Subspace point(const Quat<K>& q) {
    if (q.is_zero()) throw DomainError("a point needs a nonzero representative");
    return span({q});
  }
  static Subspace full() {
    return span({Quat<K>::basis(0), Quat<K>::basis(1), Quat<K>::basis(2),
                 Quat<K>::basis(3)});
  }

  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_point() const { return dim() == 1; }
  bool is_line() const { return dim() == 2; }
  bool is_plane() const { return dim() == 3; }

  Quat<K> row(int i) const {
    return Quat<K>(rows_[i][0], rows_[i][1], rows_[i][2], rows_[i][3]);
  }
  const Matrix<K>& rows() const { return rows_; }

  bool contains_vector(const Quat<K>& q) const {
    if (q.is_zero()) return true;
    std::vector<K> v{q[0], q[1], q[2], q[3]};
    // Reduce against the echelon rows; pivot columns are strict.
    for (const auto& r : rows_) {
      int p = pivot_col(r);
      if (!v[p].is_zero()) {
        K f = v[p];
        for (int c = 0; c < 4; ++c) v[c] = v[c] - f * r[c];
      }
    }
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i) {
      if (!contains_vector(other.row(i))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.rows_ == y.rows_;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) {
    return !(x == y);
  }

 private:
  static int pivot_col(const std::vector<K>& r) {
    for (int c = 0; c < 4; ++c) {
      if (!r[c].is_zero()) return c;
    }
    return 4;
  }
  Matrix<K> rows_;
};

template <FieldScalar K>
Subspace<K> join(const Subspace<K>& s1, const Subspace<K>& s2) {
  std::vector<Quat<K>> gens;
  for (int i = 0; i < s1.dim(); ++i) gens.push_back(s1.row(i));
  for (int i = 0; i < s2.dim(); ++i) gens.push_back(s2.row(i));
  return Subspace<K>::span(gens);
}

template <FieldScalar K>
Subspace<K> intersect(const Subspace<K>& s1, const Subspace<K>& s2) {
  if (s1.dim() == 0 || s2.dim() == 0) return Subspace<K>();
  // x = c . B1 = d . B2; solve for (c, d) via the kernel of [B1^T | -B2^T].
  const int r1 = s1.dim(), r2 = s2.dim();
  Matrix<K> m(4, std::vector<K>(r1 + r2, K::zero()));
  for (int col = 0; col < r1; ++col) {
    Quat<K> r = s1.row(col);
    for (int i = 0; i < 4; ++i) m[i][col] = r[i];
  }
  for (int col = 0; col < r2; ++col) {
    Quat<K> r = s2.row(col);
    for (int i = 0; i < 4; ++i) m[i][r1 + col] = -r[i];
  }
  Matrix<K> ker = kernel_basis(std::move(m));
  std::vector<Quat<K>> gens;
  for (const auto& v : ker) {
    Quat<K> x;
    for (int col = 0; col < r1; ++col) x = x + v[col] * s1.row(col);
    gens.push_back(x);
  }
  return Subspace<K>::span(gens);
}

/// Symmetrised inclusion.
template <FieldScalar K>
bool incident(const Subspace<K>& s1, const Subspace<K>& s2) {
  return s1.contains(s2) || s2.contains(s1);
}

/// tr(x * conj(y)): the symmetric bilinear form polarising the norm.
/// Quaternion case only; in characteristic two the trace form vanishes.
template <FieldScalar K>
K bilinear(const AlgebraSpec<K>& alg, const Quat<K>& x, const Quat<K>& y) {
  if (K::kCharTwo)
    throw UnsupportedCaseError("the trace form degenerates in characteristic two");
  return alg.trace(alg.mul(x, alg.conj(y)));
}

/// Orthogonal subspace w.r.t. bilinear(); a polarity of the projective
/// space. Quaternion case only.
template <FieldScalar K>
Subspace<K> perp(const AlgebraSpec<K>& alg, const Subspace<K>& s) {
  if (K::kCharTwo)
    throw UnsupportedCaseError("the trace polarity requires the quaternion case");
  if (s.dim() == 0) return Subspace<K>::full();
  // Gram matrix of the fixed basis.
  Mat4<K> gram;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      gram.a[i][j] = bilinear(alg, Quat<K>::basis(i), Quat<K>::basis(j));
  Matrix<K> m;
  for (int r = 0; r < s.dim(); ++r) {
    Quat<K> row = s.row(r);
    std::vector<K> coeffs(4, K::zero());
    for (int c = 0; c < 4; ++c) {
      for (int k = 0; k < 4; ++k) coeffs[c] = coeffs[c] + row[k] * gram.a[k][c];
    }
    m.push_back(std::move(coeffs));
  }
  Matrix<K> ker = kernel_basis(std::move(m));
  std::vector<Quat<K>> gens;
  for (const auto& v : ker) gens.push_back(Quat<K>(v[0], v[1], v[2], v[3]));
  return Subspace<K>::span(gens);
}

/// Lines of the star A(H): lines through the point F*1.
template <FieldScalar K>
bool star_membership(const Subspace<K>& s) {
  return s.is_line() && s.contains_vector(Quat<K>::one());
}

/// Image of a subspace under left/right multiplication by c.
template <Multiplication M>
Subspace<typename M::Scalar> translate(const M& mult,
                                       const Quat<typename M::Scalar>& c,
                                       const Subspace<typename M::Scalar>& s,
                                       Side side) {
  using K = typename M::Scalar;
  Quat<K> cp = projective_primitive(c);
  std::vector<Quat<K>> gens;
  for (int i = 0; i < s.dim(); ++i) {
    Quat<K> row = projective_primitive(s.row(i));
    gens.push_back(side == Side::left ? mult.mul(cp, row)
                                      : mult.mul(row, cp));
  }
  return Subspace<K>::span(gens);
}

/// Image of a subspace under an invertible linear map.
template <FieldScalar K>
Subspace<K> image(const Mat4<K>& m, const Subspace<K>& s) {
  std::vector<Quat<K>> gens;
  for (int i = 0; i < s.dim(); ++i) {
    auto v = m.apply(s.row(i).c);
    gens.push_back(Quat<K>(v[0], v[1], v[2], v[3]));
  }
  return Subspace<K>::span(gens);
}

}  // namespace cliffpar

#endif  // CLIFFPAR_SUBSPACE_HPP_
