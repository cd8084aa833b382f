#pragma once

#include <string>
#include <vector>

namespace quantion {

/// Real polynomial in the phase-space variables (x, p).
///
/// Coefficients are kept on the triangle i + j <= degree_cap for monomials
/// x^i p^j. Products add degree caps, so nothing is ever truncated; a product
/// whose cap would exceed kMaxDegreeCap throws std::length_error.
/// With integer coefficients every operation here is exact in double precision.
class PolyObservable {
 public:
  static constexpr int kMaxDegreeCap = 64;

  explicit PolyObservable(int degree_cap = 0);

  static PolyObservable constant(double value);
  static PolyObservable monomial(int i, int j, double coef = 1.0);
  static PolyObservable x() { return monomial(1, 0); }
  static PolyObservable p() { return monomial(0, 1); }

  int degree_cap() const { return cap_; }
  /// Actual degree; -1 for the zero polynomial.
  int degree() const;

  double coeff(int i, int j) const;
  void set_coeff(int i, int j, double value);

  PolyObservable d_dx() const;
  PolyObservable d_dp() const;

  /// Euclidean norm of the coefficient vector.
  double norm() const;
  bool is_zero() const;

  PolyObservable& operator+=(const PolyObservable& o);
  PolyObservable& operator-=(const PolyObservable& o);
  PolyObservable& operator*=(double s);

  friend PolyObservable operator+(PolyObservable f, const PolyObservable& g) { return f += g; }
  friend PolyObservable operator-(PolyObservable f, const PolyObservable& g) { return f -= g; }
  friend PolyObservable operator*(double s, PolyObservable f) { return f *= s; }
  friend PolyObservable operator*(PolyObservable f, double s) { return f *= s; }
  friend PolyObservable operator*(const PolyObservable& f, const PolyObservable& g);
  /// Equal as polynomials, regardless of degree cap.
  friend bool operator==(const PolyObservable& f, const PolyObservable& g);

  std::string to_string() const;

 private:
  static int index(int i, int j);
  void grow(int cap);

  int cap_;
  std::vector<double> c_;
};

/// {f, g} = df/dx dg/dp - df/dp dg/dx.
PolyObservable poisson_bracket(const PolyObservable& f, const PolyObservable& g);

}  // namespace quantion
