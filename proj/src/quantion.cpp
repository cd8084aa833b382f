#include "quantion/quantion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quantion {

namespace {

constexpr Complex kI{0.0, 1.0};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Sign of the permutation (i, j, k, l) of (0, 1, 2, 3); zero on repeated indices.
int levi_civita(int i, int j, int k, int l) {
  std::array<int, 4> idx{i, j, k, l};
  int sign = 1;
  for (int s = 0; s < 4; ++s) {
    for (int t = s + 1; t < 4; ++t) {
      if (idx[s] == idx[t]) return 0;
      if (idx[s] > idx[t]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

double minkowski_dot(const FourVector& u, const FourVector& v) {
  return u.p0 * v.p0 - u.p1 * v.p1 - u.p2 * v.p2 - u.p3 * v.p3;
}

Quantion Quantion::checked(Complex a, Complex b, Complex c, Complex d) {
  Quantion q{a, b, c, d};
  if (!q.is_finite()) throw std::invalid_argument("quantion components must be finite");
  return q;
}

bool Quantion::is_finite() const { return finite(a) && finite(b) && finite(c) && finite(d); }

double Quantion::norm() const {
  return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

Quantion& Quantion::operator+=(const Quantion& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Quantion& Quantion::operator-=(const Quantion& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Quantion& Quantion::operator*=(Complex s) {
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  return *this;
}

Quantion beta_mul(const Quantion& p, const Quantion& q) {
  // [[a, c], [b, d]] * [[z, v], [u, w]] = [[az + cu, av + cw], [bz + du, bv + dw]]
  const Complex& z = q.a;
  const Complex& u = q.b;
  const Complex& v = q.c;
  const Complex& w = q.d;
  return {p.a * z + p.c * u, p.b * z + p.d * u, p.a * v + p.c * w, p.b * v + p.d * w};
}

Complex minkowski_bilinear(const TetradComponents& u, const TetradComponents& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

TetradComponents hodge_dual_of_wedge(const TetradComponents& omega, const TetradComponents& u,
                                     const TetradComponents& v) {
  // (Omega ^ u ^ v)^{nrs} as the fully antisymmetrized product, then
  // (*T)_m = (1/3!) eps_{mnrs} T^{nrs}.
  auto wedge = [&](int n, int r, int s) {
    return omega[n] * (u[r] * v[s] - u[s] * v[r]) - omega[r] * (u[n] * v[s] - u[s] * v[n]) +
           omega[s] * (u[n] * v[r] - u[r] * v[n]);
  };
  TetradComponents dual{};
  for (int m = 0; m < 4; ++m) {
    Complex acc = 0;
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          const int eps = levi_civita(m, n, r, s);
          if (eps != 0) acc += static_cast<double>(eps) * wedge(n, r, s);
        }
    dual[m] = acc / 6.0;
  }
  return dual;
}

TetradComponents beta_geometric(const TetradComponents& u, const TetradComponents& v) {
  const TetradComponents omega{1.0, 0.0, 0.0, 0.0};
  const Complex omega_u = minkowski_bilinear(omega, u);
  const Complex omega_v = minkowski_bilinear(omega, v);
  const Complex uv = minkowski_bilinear(u, v);
  const TetradComponents dual = hodge_dual_of_wedge(omega, u, v);
  TetradComponents out{};
  for (int k = 0; k < 4; ++k) out[k] = omega_u * v[k] + omega_v * u[k] - uv * omega[k] - kI * dual[k];
  return out;
}

TetradComponents pauli_decompose(const Quantion& q) {
  return {(q.a + q.d) / 2.0, (q.b + q.c) / 2.0, (q.b - q.c) / (2.0 * kI), (q.a - q.d) / 2.0};
}

Quantion from_tetrad_components(const TetradComponents& t) {
  return {t[0] + t[3], t[1] + kI * t[2], t[1] - kI * t[2], t[0] - t[3]};
}

Quantion star(const Quantion& q) {
  return {std::conj(q.a), std::conj(q.c), std::conj(q.b), std::conj(q.d)};
}

Quantion sharp(const Quantion& q) { return {q.d, -q.b, -q.c, q.a}; }

Complex met_norm(const Quantion& q) { return q.a * q.d - q.b * q.c; }

bool is_real_quantion(const Quantion& q, double tol) {
  const double dev = std::max({std::abs(q.a.imag()), std::abs(q.d.imag()), std::abs(q.b - std::conj(q.c))});
  return dev <= tol * q.norm();
}

FourVector to_four_vector(const Quantion& q) {
  if (!is_real_quantion(q)) throw NotHermitian("not a real quantion: " + to_string(q));
  return {(q.a.real() + q.d.real()) / 2.0, q.b.real(), q.b.imag(), (q.a.real() - q.d.real()) / 2.0};
}

Quantion from_four_vector(const FourVector& p) {
  const Complex z{p.p1, p.p2};
  return {p.p0 + p.p3, z, std::conj(z), p.p0 - p.p3};
}

FourVector alg_norm(const Quantion& q) { return to_four_vector(beta_mul(star(q), q)); }

bool is_null(const Quantion& q) {
  const double scale = q.norm();
  return std::abs(met_norm(q)) <= kNullDivisorEps * scale * scale;
}

Quantion inverse(const Quantion& q) {
  if (is_null(q)) throw NullDivisor("null divisor: " + to_string(q) + " has no inverse");
  return sharp(q) / met_norm(q);
}

std::array<Quantion, 4> tetrad() {
  return {Quantion::identity(), Quantion{0.0, 1.0, 1.0, 0.0}, Quantion{0.0, kI, -kI, 0.0},
          Quantion{1.0, 0.0, 0.0, -1.0}};
}

NullTetrad null_tetrad() {
  const auto [omega, e1, e2, e3] = tetrad();
  return {0.5 * (omega + e3), 0.5 * (omega - e3), 0.5 * (e1 + kI * e2), 0.5 * (e1 - kI * e2)};
}

Quantion quaternion_embed(const Eigen::Quaterniond& h) {
  return from_tetrad_components({h.w(), -kI * h.x(), -kI * h.y(), -kI * h.z()});
}

Eigen::Quaterniond quaternion_extract(const Quantion& q, double tol) {
  const TetradComponents t = pauli_decompose(q);
  const Complex h1 = kI * t[1], h2 = kI * t[2], h3 = kI * t[3];
  const double dev = std::max({std::abs(t[0].imag()), std::abs(h1.imag()), std::abs(h2.imag()), std::abs(h3.imag())});
  if (dev > tol * q.norm()) throw std::domain_error("quantion is not in the quaternion slice: " + to_string(q));
  return {t[0].real(), h1.real(), h2.real(), h3.real()};
}

std::string to_string(const Quantion& q) {
  std::ostringstream os;
  os << '{' << q.a << ", " << q.b << ", " << q.c << ", " << q.d << '}';
  return os.str();
}

}  // namespace quantion
