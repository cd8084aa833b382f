#include "quantion/representations.hpp"

#include <stdexcept>

namespace quantion {

LeftQuantion left_rep(const Quantion& q) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd a = q.matrix();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = a;
  return LeftQuantion(m);
}

LeftQuantion operator*(const LeftQuantion& p, const LeftQuantion& q) { return left_rep(beta_mul(p.block(), q.block())); }

QuantionicState act_left(const LeftQuantion& Q, const QuantionicState& psi) { return Q.matrix() * psi; }

BraState act_right(const BraState& phi, const Quantion& q) { return phi * left_rep(q).matrix(); }

double left_right_commutation_residual(const Quantion& p, const Eigen::Matrix4cd& X, const Quantion& q) {
  const Eigen::Matrix4cd& L = left_rep(p).matrix();
  const Eigen::Matrix4cd& R = left_rep(q).matrix();
  const Eigen::Matrix4cd left_first = (L * X) * R;
  const Eigen::Matrix4cd right_first = L * (X * R);
  const double scale = L.norm() * X.norm() * R.norm();
  const double r = (left_first - right_first).norm();
  return scale > 0 ? r / scale : r;
}

std::string_view causal_class_name(CausalClass c) {
  switch (c) {
    case CausalClass::timelike_future:
      return "timelike_future";
    case CausalClass::null_future:
      return "null_future";
    case CausalClass::zero:
      return "zero";
  }
  return "?";
}

ZovkoCurrent zovko_current(const Quantion& q) {
  const FourVector j = alg_norm(q);
  if (j == FourVector{}) return {j, CausalClass::zero};
  const double jj = minkowski_dot(j, j);
  const double threshold = kNullDivisorEps * j.p0 * j.p0;
  if (!(j.p0 > 0) || jj < -threshold)
    throw std::logic_error("Zovko current left the future cone for " + to_string(q));
  return {j, jj <= threshold ? CausalClass::null_future : CausalClass::timelike_future};
}

}  // namespace quantion
