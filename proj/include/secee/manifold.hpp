// SPDX-License-Identifier: Apache-2.0
//
// secee: secure energy-efficiency optimization for RIS-aided multicast
// Copyright (C) 2026 The secee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SECEE_MANIFOLD_HPP
#define SECEE_MANIFOLD_HPP

// Geometry primitives: Euclidean projection onto the power ball and the
// product-of-circles (complex oblique) manifold. Every map acts per entry.

#include "secee/types.hpp"

namespace secee {

/// Euclidean projection onto {x : ||x||^2 <= p_max}.
template <typename Derived>
CVector<typename Derived::RealScalar> project_ball(const Eigen::MatrixBase<Derived>& x,
                                                   typename Derived::RealScalar p_max) {
  using Real = typename Derived::RealScalar;
  const Real norm2 = x.squaredNorm();
  if (norm2 <= p_max) return x;
  return x * (std::sqrt(p_max) / std::sqrt(norm2));
}

/// Tangent-space projection of a Euclidean gradient at z: g - Re{g o conj(z)} o z.
template <typename DerivedG, typename DerivedZ>
CVector<typename DerivedG::RealScalar> riemannian_grad(const Eigen::MatrixBase<DerivedG>& egrad,
                                                       const Eigen::MatrixBase<DerivedZ>& z) {
  return egrad - ((egrad.array() * z.array().conjugate()).real().template cast<typename DerivedG::Scalar>() *
                  z.array())
                     .matrix();
}

/// Exponential map: per entry z_m cos|c_m| + (c_m / |c_m|) sin|c_m|.
/// For a tangent c_m = i s z_m this is the rotation z_m e^{i s}; that form is
/// used directly (s = Im{c_m conj(z_m)}) so long steps stay on the circle.
template <typename DerivedZ, typename DerivedC>
CVector<typename DerivedZ::RealScalar> exp_map(const Eigen::MatrixBase<DerivedZ>& z,
                                               const Eigen::MatrixBase<DerivedC>& c) {
  using Real = typename DerivedZ::RealScalar;
  CVector<Real> out(z.size());
  for (Index m = 0; m < z.size(); ++m) {
    const Real s = std::imag(c(m) * std::conj(z(m)));
    const std::complex<Real> rotated = z(m) * std::polar(Real(1), s);
    out(m) = rotated / std::abs(rotated);
  }
  return out;
}

/// Inverse exponential map: per entry i * arg(d_m conj(z_m)) * z_m.
/// Antipodal entries (d_m = -z_m) take the +pi branch and set *antipodal.
template <typename DerivedZ, typename DerivedD>
CVector<typename DerivedZ::RealScalar> inv_exp_map(const Eigen::MatrixBase<DerivedZ>& z,
                                                   const Eigen::MatrixBase<DerivedD>& d,
                                                   bool* antipodal = nullptr) {
  using Real = typename DerivedZ::RealScalar;
  using C = std::complex<Real>;
  CVector<Real> out(z.size());
  bool flagged = false;
  for (Index m = 0; m < z.size(); ++m) {
    const C rel = d(m) * std::conj(z(m));
    Real angle = std::arg(rel);
    if (rel.imag() == Real(0) && rel.real() < Real(0)) {
      angle = std::numbers::pi_v<Real>;
      flagged = true;
    }
    out(m) = C(0, angle) * z(m);
  }
  if (antipodal != nullptr) *antipodal = flagged;
  return out;
}

/// Largest per-entry deviation of |z_m| from one.
template <typename Derived>
typename Derived::RealScalar modulus_error(const Eigen::MatrixBase<Derived>& z) {
  return (z.array().abs() - typename Derived::RealScalar(1)).abs().maxCoeff();
}

/// Largest per-entry |Re{c_m conj(z_m)}|, zero for an exact tangent vector.
template <typename DerivedC, typename DerivedZ>
typename DerivedC::RealScalar tangency_error(const Eigen::MatrixBase<DerivedC>& c,
                                             const Eigen::MatrixBase<DerivedZ>& z) {
  return (c.array() * z.array().conjugate()).real().abs().maxCoeff();
}

}  // namespace secee

#endif  // SECEE_MANIFOLD_HPP
