#pragma once

#include <string_view>

#include <Eigen/Core>

#include "quantion/quantion.hpp"

namespace quantion {

using QuantionicState = Eigen::Vector4cd;
using BraState = Eigen::RowVector4cd;

/// Element of the left algebra: the 4x4 block-diagonal matrix diag(A, A).
/// Only constructible from a quantion, so the block form holds exactly.
class LeftQuantion {
 public:
  const Eigen::Matrix4cd& matrix() const { return m_; }
  Quantion block() const { return Quantion::from_matrix(m_.topLeftCorner<2, 2>()); }

  friend LeftQuantion left_rep(const Quantion& q);
  friend LeftQuantion operator*(const LeftQuantion& p, const LeftQuantion& q);

 private:
  explicit LeftQuantion(const Eigen::Matrix4cd& m) : m_(m) {}
  Eigen::Matrix4cd m_;
};

LeftQuantion left_rep(const Quantion& q);
LeftQuantion operator*(const LeftQuantion& p, const LeftQuantion& q);

/// Q psi on ket column vectors.
QuantionicState act_left(const LeftQuantion& Q, const QuantionicState& psi);

/// phi L(q) on bra row vectors. Successive actions compose as
/// act_right(act_right(phi, p), q) = act_right(phi, p beta q).
BraState act_right(const BraState& phi, const Quantion& q);

/// Relative residual of (L(p) X) L(q) - L(p) (X L(q)).
double left_right_commutation_residual(const Quantion& p, const Eigen::Matrix4cd& X, const Quantion& q);

enum class CausalClass { timelike_future, null_future, zero };

std::string_view causal_class_name(CausalClass c);

struct ZovkoCurrent {
  FourVector j;
  CausalClass cls;
};

/// j = q^dagger q as a four-vector, classified against the light cone.
/// Null when (j, j) <= kNullDivisorEps * j0^2. A spacelike or past-pointing
/// result cannot occur and throws std::logic_error.
ZovkoCurrent zovko_current(const Quantion& q);

}  // namespace quantion
