// Copyright 2026 The dtqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// 2x2 complex linear algebra for the coin space: coin rotations, Pauli
// matrices, two-component spinors and global-phase comparison.
//
// Basis ordering is (H, V) with H = (1, 0)^T and V = (0, 1)^T.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "dtqw/errors.hpp"
#include "dtqw/numeric.hpp"

namespace dtqw {

using C64 = std::complex<double>;

inline constexpr C64 kI{0.0, 1.0};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
};

struct Spinor {
  C64 h;
  C64 v;

  double norm_sq() const { return std::norm(h) + std::norm(v); }
  double norm() const { return std::sqrt(norm_sq()); }

  friend Spinor operator*(C64 s, const Spinor& a) { return {s * a.h, s * a.v}; }
  friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.h + b.h, a.v + b.v}; }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.h - b.h, a.v - b.v}; }
};

/// <a|b>, antilinear in the first argument.
inline C64 inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.h) * b.h + std::conj(a.v) * b.v;
}

struct Mat2C {
  C64 a11;
  C64 a12;
  C64 a21;
  C64 a22;

  static constexpr Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2C adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
  C64 det() const { return a11 * a22 - a12 * a21; }
  C64 trace() const { return a11 + a22; }

  std::array<C64, 4> entries() const { return {a11, a12, a21, a22}; }

  friend Mat2C operator*(const Mat2C& m, const Mat2C& n) {
    return {m.a11 * n.a11 + m.a12 * n.a21, m.a11 * n.a12 + m.a12 * n.a22,
            m.a21 * n.a11 + m.a22 * n.a21, m.a21 * n.a12 + m.a22 * n.a22};
  }
  friend Mat2C operator*(C64 s, const Mat2C& m) {
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
  }
  friend Mat2C operator+(const Mat2C& m, const Mat2C& n) {
    return {m.a11 + n.a11, m.a12 + n.a12, m.a21 + n.a21, m.a22 + n.a22};
  }
  friend Mat2C operator-(const Mat2C& m, const Mat2C& n) {
    return {m.a11 - n.a11, m.a12 - n.a12, m.a21 - n.a21, m.a22 - n.a22};
  }
  friend Spinor operator*(const Mat2C& m, const Spinor& s) {
    return {m.a11 * s.h + m.a12 * s.v, m.a21 * s.h + m.a22 * s.v};
  }
};

/// Largest entrywise modulus.
inline double max_abs(const Mat2C& m) {
  const auto e = m.entries();
  double out = 0.0;
  for (const auto& z : e) out = std::max(out, std::abs(z));
  return out;
}

inline double max_abs_diff(const Mat2C& m, const Mat2C& n) { return max_abs(m - n); }

/// ||M^dagger M - I||_max
inline double unitarity_defect(const Mat2C& m) {
  return max_abs_diff(m.adjoint() * m, Mat2C::identity());
}

inline bool is_unitary(const Mat2C& m, double tol = 1e-12) { return unitarity_defect(m) <= tol; }

inline constexpr Mat2C sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline constexpr Mat2C sigma_y() { return {0.0, C64{0.0, -1.0}, C64{0.0, 1.0}, 0.0}; }
inline constexpr Mat2C sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

/// n . sigma
inline Mat2C pauli_dot(const Vec3& n) {
  return {n.z, C64{n.x, -n.y}, C64{n.x, n.y}, -n.z};
}

/// Rotation by theta about a unit axis:
///   [[cos t - i n_z sin t, (i n_x - n_y) sin t],
///    [(i n_x + n_y) sin t, cos t + i n_z sin t]]
/// Throws InvalidArgument if |axis| deviates from 1 by more than 1e-9.
inline Mat2C rotation_n(const Vec3& axis, double theta) {
  if (!(std::abs(axis.norm() - 1.0) <= 1e-9)) {
    throw InvalidArgument("rotation_n: axis must be a unit vector");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {C64{c, -axis.z * s}, C64{-axis.y * s, axis.x * s},
          C64{axis.y * s, axis.x * s}, C64{c, axis.z * s}};
}

/// [[cos t, -sin t], [sin t, cos t]]
inline Mat2C rotation_y(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

/// [[cos p, i sin p], [i sin p, cos p]]
inline Mat2C rotation_x(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c, C64{0.0, s}, C64{0.0, s}, c};
}

/// Matrix product m1 * m2 (m2 acts first).
inline Mat2C compose(const Mat2C& m1, const Mat2C& m2) { return m1 * m2; }

/// If m2 = e^{i alpha} m1 entrywise (tolerance 1e-10 relative to the largest
/// entry of m1), returns alpha in [0, 2pi); otherwise std::nullopt.
/// Throws InvalidArgument if both matrices are zero.
inline std::optional<double> global_phase_ratio(const Mat2C& m1, const Mat2C& m2,
                                                double tol = 1e-10) {
  const double s1 = max_abs(m1);
  const double s2 = max_abs(m2);
  if (s1 == 0.0 && s2 == 0.0) {
    throw InvalidArgument("global_phase_ratio: both matrices are zero");
  }
  if (s1 == 0.0 || s2 == 0.0) return std::nullopt;

  const auto e1 = m1.entries();
  const auto e2 = m2.entries();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < e1.size(); ++i) {
    if (std::abs(e1[i]) > std::abs(e1[pivot])) pivot = i;
  }
  const C64 ratio = e2[pivot] / e1[pivot];
  if (std::abs(std::abs(ratio) - 1.0) > tol) return std::nullopt;
  const C64 phase = ratio / std::abs(ratio);
  for (std::size_t i = 0; i < e1.size(); ++i) {
    if (std::abs(e2[i] - phase * e1[i]) > tol * s1) return std::nullopt;
  }
  return wrap_two_pi(std::arg(phase));
}

}  // namespace dtqw
