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

#include "dtqw/su2.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace dtqw;

namespace {

constexpr double kHalfPi = kPi / 2;

Mat2C random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 axis{g(rng), g(rng), g(rng)};
  axis = (1.0 / axis.norm()) * axis;
  const double t = oracle::random_angle(rng);
  const double alpha = oracle::random_angle(rng);
  return std::polar(1.0, alpha) * rotation_n(axis, t);
}

void expect_mat_near(const Mat2C& a, const Mat2C& b, double tol) {
  EXPECT_LE(max_abs_diff(a, b), tol);
}

}  // namespace

TEST(su2, rotation_y_examples) {
  expect_mat_near(rotation_y(0.0), Mat2C::identity(), 0.0);
  expect_mat_near(rotation_y(kHalfPi), Mat2C{0.0, -1.0, 1.0, 0.0}, 1e-16);
  expect_mat_near(rotation_y(kPi), C64{-1.0, 0.0} * Mat2C::identity(), 1e-15);
  const Mat2C r = rotation_y(0.7);
  for (const auto& z : r.entries()) EXPECT_EQ(z.imag(), 0.0);
}

TEST(su2, rotation_x_examples) {
  expect_mat_near(rotation_x(0.0), Mat2C::identity(), 0.0);
  expect_mat_near(rotation_x(kHalfPi), Mat2C{0.0, kI, kI, 0.0}, 1e-16);
  expect_mat_near(rotation_x(-kHalfPi), Mat2C{0.0, -kI, -kI, 0.0}, 1e-16);
}

TEST(su2, rotation_n_examples) {
  expect_mat_near(rotation_n({1, 0, 0}, 0.0), Mat2C::identity(), 0.0);
  expect_mat_near(rotation_n({0, 0, 1}, kHalfPi), Mat2C{-kI, 0.0, 0.0, kI}, 1e-16);
  for (double t : {-2.0, -0.3, 0.0, 0.9, 3.1}) {
    expect_mat_near(rotation_n({0, 1, 0}, t), rotation_y(t), 1e-15);
    expect_mat_near(rotation_n({1, 0, 0}, t), rotation_x(t), 1e-15);
  }
}

TEST(su2, rotation_n_rejects_non_unit_axis) {
  EXPECT_THROW(rotation_n({1, 1, 0}, 0.3), InvalidArgument);
  EXPECT_THROW(rotation_n({0, 0, 0}, 0.3), InvalidArgument);
  EXPECT_NO_THROW(rotation_n({1.0 + 5e-10, 0, 0}, 0.3));
}

TEST(su2, rotations_are_special_unitary) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int i = 0; i < 1000; ++i) {
    const double t = oracle::random_angle(rng);
    Vec3 axis{g(rng), g(rng), g(rng)};
    axis = (1.0 / axis.norm()) * axis;
    for (const Mat2C& m : {rotation_x(t), rotation_y(t), rotation_n(axis, t)}) {
      EXPECT_LE(unitarity_defect(m), 1e-12);
      EXPECT_LE(std::abs(m.det() - 1.0), 1e-12);
    }
  }
}

TEST(su2, composed_rotations_at_dirac_coins) {
  const Mat2C plus = compose(rotation_x(kHalfPi), rotation_y(kHalfPi));
  const Mat2C minus = compose(rotation_x(-kHalfPi), rotation_y(kHalfPi));
  expect_mat_near(plus, kI * sigma_z(), 1e-15);
  expect_mat_near(minus, Mat2C{-kI, 0.0, 0.0, kI}, 1e-15);
  expect_mat_near(compose(Mat2C::identity(), plus), plus, 0.0);
}

TEST(su2, compose_is_associative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Mat2C a = random_unitary(rng), b = random_unitary(rng), c = random_unitary(rng);
    expect_mat_near(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-14);
  }
}

TEST(su2, global_phase_ratio_examples) {
  const Mat2C isz = kI * sigma_z();
  const auto pi_phase = global_phase_ratio(isz, -kI * sigma_z());
  ASSERT_TRUE(pi_phase.has_value());
  EXPECT_NEAR(*pi_phase, kPi, 1e-15);

  const auto same = global_phase_ratio(isz, isz);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(*same, 0.0);

  EXPECT_FALSE(global_phase_ratio(sigma_z(), sigma_x()).has_value());
  EXPECT_FALSE(global_phase_ratio(sigma_z(), C64{2.0, 0.0} * sigma_z()).has_value());
  EXPECT_FALSE(global_phase_ratio(sigma_z(), Mat2C{0.0, 0.0, 0.0, 0.0}).has_value());
  EXPECT_THROW(global_phase_ratio(Mat2C{}, Mat2C{}), InvalidArgument);
}

TEST(su2, global_phase_ratio_recovers_random_phase) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Mat2C m = random_unitary(rng);
    const double alpha = oracle::random_angle(rng);
    const auto got = global_phase_ratio(m, std::polar(1.0, alpha) * m);
    ASSERT_TRUE(got.has_value());
    EXPECT_LE(distance_mod_two_pi(*got - alpha), 1e-10);
    EXPECT_GE(*got, 0.0);
    EXPECT_LT(*got, kTwoPi);
  }
}

TEST(su2, spinor_inner_product) {
  const Spinor a{C64{1, 0}, C64{0, 1}};
  const Spinor b{C64{0, 1}, C64{1, 0}};
  EXPECT_EQ(inner(a, a), C64(2.0, 0.0));
  EXPECT_EQ(inner(a, b), C64(0.0, 0.0));
  EXPECT_EQ(inner(b, a), std::conj(inner(a, b)));
}
