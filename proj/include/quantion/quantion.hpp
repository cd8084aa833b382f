#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace quantion {

using Complex = std::complex<double>;

/// Relative threshold below which M(q) is treated as zero.
inline constexpr double kNullDivisorEps = 1e-12;
/// Relative tolerance for the hermiticity test in to_four_vector.
inline constexpr double kHermitianTol = 1e-10;

struct NullDivisor : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotHermitian : std::domain_error {
  using std::domain_error::domain_error;
};

/// Real Minkowski four-vector with signature (+,-,-,-).
struct FourVector {
  double p0 = 0, p1 = 0, p2 = 0, p3 = 0;

  friend bool operator==(const FourVector&, const FourVector&) = default;
};

double minkowski_dot(const FourVector& u, const FourVector& v);

/// Element of the quantion algebra, stored as q = {a, b, c, d}.
///
/// The matrix layout is [[a, c], [b, d]]: (a, b) is the first column and
/// (c, d) the second. Under this layout sharp() is the adjugate and star()
/// is the conjugate transpose.
struct Quantion {
  Complex a{}, b{}, c{}, d{};

  static Quantion identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Quantion zero() { return {}; }
  static Quantion from_matrix(const Eigen::Matrix2cd& m) {
    return {m(0, 0), m(1, 0), m(0, 1), m(1, 1)};
  }
  /// Throws std::invalid_argument if any component is NaN or infinite.
  static Quantion checked(Complex a, Complex b, Complex c, Complex d);

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd m;
    m << a, c, b, d;
    return m;
  }

  bool is_finite() const;
  /// Frobenius norm of the matrix.
  double norm() const;

  Quantion& operator+=(const Quantion& o);
  Quantion& operator-=(const Quantion& o);
  Quantion& operator*=(Complex s);

  friend Quantion operator+(Quantion p, const Quantion& q) { return p += q; }
  friend Quantion operator-(Quantion p, const Quantion& q) { return p -= q; }
  friend Quantion operator-(Quantion p) { return p *= -1.0; }
  friend Quantion operator*(Complex s, Quantion q) { return q *= s; }
  friend Quantion operator*(Quantion q, Complex s) { return q *= s; }
  friend Quantion operator/(Quantion q, Complex s) { return q *= 1.0 / s; }
  friend bool operator==(const Quantion&, const Quantion&) = default;
};

/// Coefficients (q0, q1, q2, q3) of q = q0*Omega + q1*e1 + q2*e2 + q3*e3.
using TetradComponents = std::array<Complex, 4>;

/// The product beta, i.e. the 2x2 matrix product.
Quantion beta_mul(const Quantion& p, const Quantion& q);

/// The product beta computed from Minkowski geometry only:
///   u beta v = (Omega,u) v + (Omega,v) u - (u,v) Omega - i *(Omega ^ u ^ v)
/// with the complex-bilinear Minkowski form and a Levi-Civita Hodge dual.
TetradComponents beta_geometric(const TetradComponents& u, const TetradComponents& v);

/// Complex-bilinear (no conjugation) Minkowski form on tetrad components.
Complex minkowski_bilinear(const TetradComponents& u, const TetradComponents& v);

/// Hodge dual of the three-form Omega ^ u ^ v, returned as tetrad components.
/// Convention: epsilon_{0123} = +1 contracted with contravariant components.
TetradComponents hodge_dual_of_wedge(const TetradComponents& omega, const TetradComponents& u,
                                     const TetradComponents& v);

TetradComponents pauli_decompose(const Quantion& q);
Quantion from_tetrad_components(const TetradComponents& t);

/// Complex conjugation: the conjugate transpose {a*, c*, b*, d*}.
Quantion star(const Quantion& q);
/// Metric dual {d, -b, -c, a}: the adjugate.
Quantion sharp(const Quantion& q);

/// Metric norm M(q) = ad - bc.
Complex met_norm(const Quantion& q);
/// Algebraic norm A(q) = q* q as a four-vector. Always causal and future-pointing.
FourVector alg_norm(const Quantion& q);

/// q^-1 = q#/M(q). Throws NullDivisor if |M(q)| <= kNullDivisorEps * |q|_F^2.
Quantion inverse(const Quantion& q);
bool is_null(const Quantion& q);

bool is_real_quantion(const Quantion& q, double tol = kHermitianTol);
/// r = p0 + p3, s = p0 - p3, z = p1 + i p2 with the real quantion [[r, z*], [z, s]].
/// Throws NotHermitian when q is not a real quantion.
FourVector to_four_vector(const Quantion& q);
Quantion from_four_vector(const FourVector& p);

/// Tetrad {Omega, e1, e2, e3}: the identity and the three Pauli matrices.
std::array<Quantion, 4> tetrad();

struct NullTetrad {
  Quantion l, n, m, m_bar;
};
NullTetrad null_tetrad();

/// Quaternion units map to -i e_k. The homomorphism is
/// embed(h h') = embed(h) beta embed(h').
Quantion quaternion_embed(const Eigen::Quaterniond& h);
/// Inverse of quaternion_embed on its image. Throws std::domain_error off the image.
Eigen::Quaterniond quaternion_extract(const Quantion& q, double tol = kHermitianTol);

std::string to_string(const Quantion& q);

}  // namespace quantion
