#include "quantion/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quantion {

// Triangle layout grouped by total degree: degree t starts at t(t+1)/2.
int PolyObservable::index(int i, int j) {
  const int t = i + j;
  return t * (t + 1) / 2 + j;
}

PolyObservable::PolyObservable(int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 0 || degree_cap > kMaxDegreeCap)
    throw std::length_error("polynomial degree cap out of range: " + std::to_string(degree_cap));
  c_.assign(static_cast<std::size_t>((cap_ + 1) * (cap_ + 2) / 2), 0.0);
}

PolyObservable PolyObservable::constant(double value) {
  PolyObservable f(0);
  f.c_[0] = value;
  return f;
}

PolyObservable PolyObservable::monomial(int i, int j, double coef) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  PolyObservable f(i + j);
  f.set_coeff(i, j, coef);
  return f;
}

int PolyObservable::degree() const {
  for (int t = cap_; t >= 0; --t)
    for (int j = 0; j <= t; ++j)
      if (c_[index(t - j, j)] != 0.0) return t;
  return -1;
}

double PolyObservable::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > cap_) return 0.0;
  return c_[index(i, j)];
}

void PolyObservable::set_coeff(int i, int j, double value) {
  if (i < 0 || j < 0 || i + j > cap_)
    throw std::out_of_range("monomial x^" + std::to_string(i) + " p^" + std::to_string(j) +
                            " exceeds degree cap " + std::to_string(cap_));
  c_[index(i, j)] = value;
}

void PolyObservable::grow(int cap) {
  if (cap <= cap_) return;
  if (cap > kMaxDegreeCap) throw std::length_error("polynomial degree cap exceeded");
  // Degree-grouped layout is a prefix of any larger layout.
  c_.resize(static_cast<std::size_t>((cap + 1) * (cap + 2) / 2), 0.0);
  cap_ = cap;
}

PolyObservable PolyObservable::d_dx() const {
  PolyObservable out(cap_ > 0 ? cap_ - 1 : 0);
  for (int t = 1; t <= cap_; ++t)
    for (int j = 0; j < t; ++j) {
      const int i = t - j;
      out.c_[index(i - 1, j)] = static_cast<double>(i) * c_[index(i, j)];
    }
  return out;
}

PolyObservable PolyObservable::d_dp() const {
  PolyObservable out(cap_ > 0 ? cap_ - 1 : 0);
  for (int t = 1; t <= cap_; ++t)
    for (int j = 1; j <= t; ++j) {
      const int i = t - j;
      out.c_[index(i, j - 1)] = static_cast<double>(j) * c_[index(i, j)];
    }
  return out;
}

double PolyObservable::norm() const {
  double s = 0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

bool PolyObservable::is_zero() const { return degree() < 0; }

PolyObservable& PolyObservable::operator+=(const PolyObservable& o) {
  grow(o.cap_);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PolyObservable& PolyObservable::operator-=(const PolyObservable& o) {
  grow(o.cap_);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PolyObservable& PolyObservable::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

PolyObservable operator*(const PolyObservable& f, const PolyObservable& g) {
  const int df = std::max(f.degree(), 0);
  const int dg = std::max(g.degree(), 0);
  PolyObservable out(df + dg);
  for (int tf = 0; tf <= df; ++tf)
    for (int jf = 0; jf <= tf; ++jf) {
      const double a = f.coeff(tf - jf, jf);
      if (a == 0.0) continue;
      for (int tg = 0; tg <= dg; ++tg)
        for (int jg = 0; jg <= tg; ++jg) {
          const double b = g.coeff(tg - jg, jg);
          if (b != 0.0) out.c_[PolyObservable::index(tf - jf + tg - jg, jf + jg)] += a * b;
        }
    }
  return out;
}

bool operator==(const PolyObservable& f, const PolyObservable& g) {
  const int cap = std::max(f.cap_, g.cap_);
  for (int t = 0; t <= cap; ++t)
    for (int j = 0; j <= t; ++j)
      if (f.coeff(t - j, j) != g.coeff(t - j, j)) return false;
  return true;
}

std::string PolyObservable::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t <= cap_; ++t)
    for (int j = 0; j <= t; ++j) {
      const double v = c_[index(t - j, j)];
      if (v == 0.0) continue;
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << '-';
      first = false;
      const double mag = std::abs(v);
      const int i = t - j;
      if (mag != 1.0 || t == 0) os << mag;
      if (i > 0) os << (mag != 1.0 ? "*" : "") << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) os << ((mag != 1.0 || i > 0) ? "*" : "") << 'p' << (j > 1 ? "^" + std::to_string(j) : "");
    }
  return first ? "0" : os.str();
}

PolyObservable poisson_bracket(const PolyObservable& f, const PolyObservable& g) {
  return f.d_dx() * g.d_dp() - f.d_dp() * g.d_dx();
}

}  // namespace quantion
