#ifndef CLIFFPAR_LINALG_HPP_
#define CLIFFPAR_LINALG_HPP_

#include <array>
#include <concepts>
#include <string>
#include <vector>

namespace cliffpar {

/// An exact field scalar: canonical-form value type with total arithmetic
/// (inverse/division throwing on zero).
template <class K>
concept FieldScalar = requires(const K& x, const K& y) {
  { x + y } -> std::convertible_to<K>;
  { x - y } -> std::convertible_to<K>;
  { x* y } -> std::convertible_to<K>;
  { x / y } -> std::convertible_to<K>;
  { -x } -> std::convertible_to<K>;
  { x == y } -> std::convertible_to<bool>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.inverse() } -> std::convertible_to<K>;
  { K::zero() } -> std::convertible_to<K>;
  { K::one() } -> std::convertible_to<K>;
  { x.str() } -> std::convertible_to<std::string>;
  { K::kCharTwo } -> std::convertible_to<bool>;
};

template <FieldScalar K>
using Matrix = std::vector<std::vector<K>>;

/// In-place reduction to reduced row echelon form: pivots 1 and strictly
/// increasing, pivot columns otherwise zero, zero rows removed.
/// Returns the pivot columns (rank = size).
template <FieldScalar K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    K inv = m[row][col].inverse();
    for (int c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      K f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size(), std::vector<K>());
  return pivots;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column in
/// increasing column order; each has 1 at its free column, 0 at the other
/// free columns. Deterministic "reduced echelon parameterisation".
template <FieldScalar K>
Matrix<K> kernel_basis(Matrix<K> m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix<K> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, K::zero());
    v[f] = K::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A 4x4 matrix acting on coordinate columns.
template <FieldScalar K>
struct Mat4 {
  std::array<std::array<K, 4>, 4> a{};

  Mat4() {
    for (auto& row : a) row.fill(K::zero());
  }
  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.a[i][i] = K::one();
    return m;
  }

  friend bool operator==(const Mat4& x, const Mat4& y) { return x.a == y.a; }

  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        K s = K::zero();
        for (int k = 0; k < 4; ++k) s = s + x.a[i][k] * y.a[k][j];
        out.a[i][j] = s;
      }
    }
    return out;
  }

  std::array<K, 4> apply(const std::array<K, 4>& v) const {
    std::array<K, 4> out{K::zero(), K::zero(), K::zero(), K::zero()};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) out[i] = out[i] + a[i][j] * v[j];
    }
    return out;
  }

  bool is_scalar_multiple_of_identity() const {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j && !a[i][j].is_zero()) return false;
      }
      if (!(a[i][i] == a[0][0])) return false;
    }
    return true;
  }
};

/// Determinant by fraction-free-ish elimination (exact field arithmetic).
template <FieldScalar K>
K mat4_det(const Mat4<K>& m) {
  std::array<std::array<K, 4>, 4> a = m.a;
  K det = K::one();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return K::zero();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    K inv = a[col][col].inverse();
    for (int r = col + 1; r < 4; ++r) {
      if (a[r][col].is_zero()) continue;
      K f = a[r][col] * inv;
      for (int c = col; c < 4; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

/// Rank of a 4x4 matrix.
template <FieldScalar K>
int mat4_rank(const Mat4<K>& m) {
  Matrix<K> rows(4, std::vector<K>(4, K::zero()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = m.a[i][j];
  return static_cast<int>(rref_in_place(rows).size());
}

/// Inverse of a 4x4 matrix; throws RankError via the caller contract if
/// singular (returns false in that case).
template <FieldScalar K>
bool mat4_try_inverse(const Mat4<K>& m, Mat4<K>& out) {
  Matrix<K> aug(4, std::vector<K>(8, K::zero()));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) aug[i][j] = m.a[i][j];
    aug[i][4 + i] = K::one();
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (pivots.size() != 4 || pivots[3] != 3) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.a[i][j] = aug[i][4 + j];
  return true;
}

}  // namespace cliffpar

#endif  // CLIFFPAR_LINALG_HPP_
