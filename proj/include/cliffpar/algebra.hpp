#ifndef CLIFFPAR_ALGEBRA_HPP_
#define CLIFFPAR_ALGEBRA_HPP_

#include <array>
#include <optional>
#include <utility>

#include "cliffpar/errors.hpp"
#include "cliffpar/f2field.hpp"
#include "cliffpar/linalg.hpp"
#include "cliffpar/rational.hpp"

namespace cliffpar {

enum class AlgebraKind { case_a, case_b };

enum class Side { left, right };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Coordinate 4-tuple w.r.t. the fixed basis of the algebra:
/// (1, i, j, k) over the rationals, (1, u, v, w) in characteristic two.
template <FieldScalar K>
struct Quat {
  std::array<K, 4> c{K::zero(), K::zero(), K::zero(), K::zero()};

  Quat() = default;
  Quat(K c0, K c1, K c2, K c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Quat zero() { return Quat(); }
  static Quat one() { return basis(0); }
  static Quat basis(int m) {
    Quat q;
    q.c[m] = K::one();
    return q;
  }
  static Quat scalar(const K& x) { return Quat(x, K::zero(), K::zero(), K::zero()); }

  const K& operator[](int i) const { return c[i]; }
  K& operator[](int i) { return c[i]; }

  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }
  /// Lies in F*1, i.e. the pure coordinates vanish.
  bool is_central_scalar() const {
    return c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }

  friend Quat operator+(const Quat& x, const Quat& y) {
    return Quat(x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]);
  }
  friend Quat operator-(const Quat& x, const Quat& y) {
    return Quat(x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]);
  }
  Quat operator-() const { return Quat(-c[0], -c[1], -c[2], -c[3]); }
  friend Quat operator*(const K& f, const Quat& x) {
    return Quat(f * x.c[0], f * x.c[1], f * x.c[2], f * x.c[3]);
  }
  friend bool operator==(const Quat& x, const Quat& y) { return x.c == y.c; }
  friend bool operator!=(const Quat& x, const Quat& y) { return !(x == y); }
};

/// The four-dimensional kinematic F-algebra H with fixed basis and
/// structure constants a, b. Over the rationals this is the quaternion
/// algebra with i^2 = a, j^2 = b, ij = k = -ji; in characteristic two the
/// same structure constants give the commutative algebra with u^2 = a,
/// v^2 = b, w = uv.
///
/// The constructor only checks a, b != 0. Certified instances (skew field /
/// quartic field) come from make_quaternion_algebra and make_quartic_field.
template <FieldScalar K>
class AlgebraSpec {
 public:
  using Scalar = K;

  AlgebraSpec(K a, K b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || b_.is_zero())
      throw DomainError("structure constants must be nonzero");
  }

  static constexpr AlgebraKind kind() {
    return K::kCharTwo ? AlgebraKind::case_b : AlgebraKind::case_a;
  }

  const K& a() const { return a_; }
  const K& b() const { return b_; }

  Quat<K> unit() const { return Quat<K>::one(); }

  Quat<K> mul(const Quat<K>& x, const Quat<K>& y) const {
    const K& a = a_;
    const K& b = b_;
    K ab = a * b;
    return Quat<K>(
        x[0] * y[0] + a * (x[1] * y[1]) + b * (x[2] * y[2]) - ab * (x[3] * y[3]),
        x[0] * y[1] + x[1] * y[0] - b * (x[2] * y[3]) + b * (x[3] * y[2]),
        x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3]) - a * (x[3] * y[1]),
        x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]);
  }

  /// Standard involution; in characteristic two it is the identity.
  Quat<K> conj(const Quat<K>& x) const {
    return Quat<K>(x[0], -x[1], -x[2], -x[3]);
  }

  K trace(const Quat<K>& x) const { return x[0] + x[0]; }

  K norm(const Quat<K>& x) const {
    return x[0] * x[0] - a_ * (x[1] * x[1]) - b_ * (x[2] * x[2]) +
           a_ * b_ * (x[3] * x[3]);
  }

  Quat<K> inverse(const Quat<K>& x) const {
    if (x.is_zero()) throw DomainError("inverse of zero");
    K n = norm(x);
    if (n.is_zero()) throw DomainError("inverse of a norm-zero element");
    return n.inverse() * conj(x);
  }

  /// (s, t) with x^2 = s*1 + t*x; canonically s = -N(x), t = tr(x).
  std::pair<K, K> kinematic_witness(const Quat<K>& x) const {
    return {-norm(x), trace(x)};
  }

 private:
  K a_, b_;
};

using QuatAlgebra = AlgebraSpec<Rational>;
using QuarticAlgebra = AlgebraSpec<F2RatFun>;

/// A unital multiplication on the coordinate space K^4. Satisfied by
/// AlgebraSpec and by GenericMult (altered, transported or corrupted
/// products).
template <class M>
concept Multiplication = requires(const M& m, const Quat<typename M::Scalar>& x) {
  requires FieldScalar<typename M::Scalar>;
  { m.unit() } -> std::convertible_to<Quat<typename M::Scalar>>;
  { m.mul(x, x) } -> std::convertible_to<Quat<typename M::Scalar>>;
  { m.inverse(x) } -> std::convertible_to<Quat<typename M::Scalar>>;
};

/// Matrix of the left translation x -> h*x (side = left) or the right
/// translation x -> x*h (side = right) w.r.t. the fixed basis.
template <Multiplication M>
Mat4<typename M::Scalar> translation_matrix(const M& m,
                                            const Quat<typename M::Scalar>& h,
                                            Side side) {
  using K = typename M::Scalar;
  Mat4<K> out;
  for (int col = 0; col < 4; ++col) {
    Quat<K> e = Quat<K>::basis(col);
    Quat<K> v = (side == Side::left) ? m.mul(h, e) : m.mul(e, h);
    for (int row = 0; row < 4; ++row) out.a[row][col] = v[row];
  }
  return out;
}

/// The altered product x *_e y = x * e^{-1} * y (unit element e).
template <FieldScalar K>
Quat<K> altered_product(const AlgebraSpec<K>& alg, const Quat<K>& e,
                        const Quat<K>& x, const Quat<K>& y) {
  if (e.is_zero()) throw DomainError("altered product requires e != 0");
  return alg.mul(alg.mul(x, alg.inverse(e)), y);
}

/// A multiplication given by its structure table on the fixed basis.
template <FieldScalar K>
class GenericMult {
 public:
  using Scalar = K;

  GenericMult(std::array<std::array<Quat<K>, 4>, 4> table, Quat<K> unit)
      : table_(std::move(table)), unit_(std::move(unit)) {}

  const Quat<K>& unit_value() const { return unit_; }
  Quat<K> unit() const { return unit_; }

  Quat<K> mul(const Quat<K>& x, const Quat<K>& y) const {
    Quat<K> out;
    for (int i = 0; i < 4; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (y[j].is_zero()) continue;
        out = out + (x[i] * y[j]) * table_[i][j];
      }
    }
    return out;
  }

  /// Solves x * y = unit exactly; throws DomainError when no inverse exists.
  Quat<K> inverse(const Quat<K>& x) const {
    if (x.is_zero()) throw DomainError("inverse of zero");
    Mat4<K> lx = translation_matrix(*this, x, Side::left);
    Mat4<K> inv;
    if (!mat4_try_inverse(lx, inv)) throw DomainError("element is not invertible");
    std::array<K, 4> y = inv.apply(unit_.c);
    return Quat<K>(y[0], y[1], y[2], y[3]);
  }

  const std::array<std::array<Quat<K>, 4>, 4>& table() const { return table_; }

  friend bool operator==(const GenericMult& x, const GenericMult& y) {
    return x.unit_ == y.unit_ && x.table_ == y.table_;
  }

 private:
  std::array<std::array<Quat<K>, 4>, 4> table_;
  Quat<K> unit_;
};

template <FieldScalar K>
GenericMult<K> as_mult(const AlgebraSpec<K>& alg) {
  std::array<std::array<Quat<K>, 4>, 4> table;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table[i][j] = alg.mul(Quat<K>::basis(i), Quat<K>::basis(j));
  return GenericMult<K>(std::move(table), alg.unit());
}

/// The algebra H^e on the same coordinate space: x *_e y = x * e^{-1} * y,
/// with unit e.
template <FieldScalar K>
GenericMult<K> altered_mult(const AlgebraSpec<K>& alg, const Quat<K>& e) {
  if (e.is_zero()) throw DomainError("altered multiplication requires e != 0");
  Quat<K> einv = alg.inverse(e);
  std::array<std::array<Quat<K>, 4>, 4> table;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table[i][j] =
          alg.mul(alg.mul(Quat<K>::basis(i), einv), Quat<K>::basis(j));
  return GenericMult<K>(std::move(table), e);
}

/// The pullback multiplication x o y = T(T^{-1}(x) * T^{-1}(y)) along an
/// invertible map T; its unit is T(1). When T is an algebra automorphism
/// this reproduces the original multiplication.
template <FieldScalar K>
GenericMult<K> transported_mult(const AlgebraSpec<K>& alg, const Mat4<K>& t) {
  Mat4<K> tinv;
  if (!mat4_try_inverse(t, tinv)) throw RankError("transport map is singular");
  auto lift = [&](const std::array<K, 4>& v) { return Quat<K>(v[0], v[1], v[2], v[3]); };
  std::array<std::array<Quat<K>, 4>, 4> table;
  for (int i = 0; i < 4; ++i) {
    Quat<K> xi = lift(tinv.apply(Quat<K>::basis(i).c));
    for (int j = 0; j < 4; ++j) {
      Quat<K> yj = lift(tinv.apply(Quat<K>::basis(j).c));
      table[i][j] = lift(t.apply(alg.mul(xi, yj).c));
    }
  }
  return GenericMult<K>(std::move(table), lift(t.apply(Quat<K>::one().c)));
}

// ---------------------------------------------------------------------------
// Certification of the two algebra families.

/// Whether the quaternion algebra (a,b | Q) is a skew field; a, b nonzero
/// integers within the size guard.
bool is_division(const Rational& a, const Rational& b);

/// Certified quaternion skew field over the rationals. Throws DomainError
/// for non-integer or non-division structure constants.
QuatAlgebra make_quaternion_algebra(const Rational& a, const Rational& b);

/// Whether {1, a, b, ab} is linearly independent over the subfield of
/// squares of GF(2)(s,t), i.e. whether the structure constants generate a
/// purely inseparable quartic field extension.
bool validate_case_b(const F2RatFun& a, const F2RatFun& b);

/// Certified quartic extension field of GF(2)(s,t).
QuarticAlgebra make_quartic_field(const F2RatFun& a, const F2RatFun& b);

// ---------------------------------------------------------------------------
// Conjugacy and the decomposition of linear parallelism automorphisms
// (quaternion case only).

/// tr(q1) = tr(q2) and N(q1) = N(q2): exactly the inner-automorphism orbit
/// relation on elements.
bool are_conjugate(const QuatAlgebra& alg, const Quat<Rational>& q1,
                   const Quat<Rational>& q2);

/// Some h != 0 with h^{-1} q1 h = q2, if it exists: the first kernel vector
/// of the linear system q1 h = h q2 in the reduced echelon
/// parameterisation. Returns nullopt when q1, q2 are not conjugate.
std::optional<Quat<Rational>> conjugator(const QuatAlgebra& alg,
                                         const Quat<Rational>& q1,
                                         const Quat<Rational>& q2);

struct SkolemNoetherParts {
  Quat<Rational> g;  // beta(1)
  Quat<Rational> h;  // h-tilde = lambda_g^{-1} o beta, unique up to F*
};

/// Splits an invertible beta in lambda(H*) . Inn(H*) as beta = lambda_g o
/// h-tilde. Throws RankError when beta is singular and MembershipError when
/// lambda_{beta(1)}^{-1} o beta is not multiplicative.
SkolemNoetherParts skolem_noether_decompose(const QuatAlgebra& alg,
                                            const Mat4<Rational>& beta);

/// Matrix of the inner automorphism x -> h^{-1} x h.
Mat4<Rational> inner_automorphism_matrix(const QuatAlgebra& alg,
                                         const Quat<Rational>& h);

}  // namespace cliffpar

#endif  // CLIFFPAR_ALGEBRA_HPP_
