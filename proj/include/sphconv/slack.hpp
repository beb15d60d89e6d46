#pragma once

// Pointwise convexity slacks of f_{A,b,c} on the sphere. Each returns
// "right-hand side minus left-hand side" of the corresponding inequality,
// so a spherically convex f yields nonnegative values on admissible inputs.

#include "sphconv/instance.hpp"

#include <cmath>

namespace sphconv {

namespace detail {

template <typename DerivedU, typename DerivedV>
void check_orthonormal_pair(const Eigen::MatrixBase<DerivedU>& u,
                            const Eigen::MatrixBase<DerivedV>& v) {
#ifndef NDEBUG
  constexpr double tol = 1e-8;
  if (std::abs(u.norm() - 1.0) > tol || std::abs(v.norm() - 1.0) > tol ||
      std::abs(u.dot(v)) > tol) {
    throw ContractViolation("foc_slack: (u, v) is not an orthonormal pair");
  }
#else
  (void)u;
  (void)v;
#endif
}

}  // namespace detail

/// <Au,u> - <Av,v> - <b,v>/2 for orthonormal u, v with v in the cone.
template <typename DerivedU, typename DerivedV>
double foc_slack(const QuadraticInstance& inst,
                 const Eigen::MatrixBase<DerivedU>& u,
                 const Eigen::MatrixBase<DerivedV>& v) {
  detail::check_orthonormal_pair(u, v);
  const auto& A = inst.A();
  return u.dot(A * u) - v.dot(A * v) - 0.5 * inst.b().dot(v);
}

/// Two-point form: 2<x,y>(<Ax,x>+<Ay,y>) + (<x,y>-1)<b,x+y> - 4<Ax,y>.
template <typename DerivedX, typename DerivedY>
double soc_slack(const QuadraticInstance& inst,
                 const Eigen::MatrixBase<DerivedX>& x,
                 const Eigen::MatrixBase<DerivedY>& y) {
  const auto& A = inst.A();
  const VectorX Ax = A * x;
  const double s = x.dot(y);
  return 2.0 * s * (x.dot(Ax) + y.dot(A * y)) +
         (s - 1.0) * inst.b().dot(x + y) - 4.0 * Ax.dot(y);
}

/// Slack of the single-cone-point characterization with an unrelated unit v:
/// [<Av,v> - 2s<Av,x> + (2s^2-1)<Ax,x>]/(1-s^2) - <b,x>/2, s = <v,x>.
template <typename DerivedX, typename DerivedV>
double bx_slack(const QuadraticInstance& inst,
                const Eigen::MatrixBase<DerivedX>& x,
                const Eigen::MatrixBase<DerivedV>& v) {
  const double s = v.dot(x);
  if (std::abs(s) >= 1.0 - 1e-12) {
    throw ContractViolation("bx_slack: v is too close to +x or -x");
  }
  const auto& A = inst.A();
  const VectorX Ax = A * x;
  const double num =
      v.dot(A * v) - 2.0 * s * v.dot(Ax) + (2.0 * s * s - 1.0) * x.dot(Ax);
  return num / (1.0 - s * s) - 0.5 * inst.b().dot(x);
}

/// (f o gamma)''(t) along gamma(t) = cos(t) x + sin(t) v, <x,v> = 0.
template <typename DerivedX, typename DerivedV>
double geodesic_second_derivative(const QuadraticInstance& inst,
                                  const Eigen::MatrixBase<DerivedX>& x,
                                  const Eigen::MatrixBase<DerivedV>& v,
                                  double t) {
  const auto& A = inst.A();
  const VectorX Ax = A * x;
  const double axx = x.dot(Ax);
  const double avv = v.dot(A * v);
  const double axv = v.dot(Ax);
  return -2.0 * std::cos(2.0 * t) * (axx - avv) -
         4.0 * std::sin(2.0 * t) * axv - std::cos(t) * inst.b().dot(x) -
         std::sin(t) * inst.b().dot(v);
}

/// The rotated pair u = cos(theta) e^i - sin(theta) e^j,
/// v = sin(theta) e^i + cos(theta) e^j. v is in the orthant for theta in
/// [0, pi/2].
struct RotatedPair {
  VectorX u;
  VectorX v;
};

inline RotatedPair rotated_pair(Index n, Index i, Index j, double theta) {
  RotatedPair p{VectorX::Zero(n), VectorX::Zero(n)};
  const double c = std::cos(theta), s = std::sin(theta);
  p.u(i) = c;
  p.u(j) = -s;
  p.v(i) = s;
  p.v(j) = c;
  return p;
}

/// foc_slack at the rotated pair, in closed form.
inline double rotated_pair_slack(const QuadraticInstance& inst, Index i,
                                 Index j, double theta) {
  const auto& A = inst.A();
  const auto& b = inst.b();
  return (A(i, i) - A(j, j)) * std::cos(2.0 * theta) -
         2.0 * A(i, j) * std::sin(2.0 * theta) -
         0.5 * (b(i) * std::sin(theta) + b(j) * std::cos(theta));
}

}  // namespace sphconv
