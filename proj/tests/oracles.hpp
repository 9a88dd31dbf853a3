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

// Test-only reference computations. Nothing here calls into the library's
// band, Zak or walk code; the oracles rebuild what they need from plain
// std::complex arithmetic.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

namespace dtqw::oracle {

using cd = std::complex<double>;
using M2 = std::array<std::array<cd, 2>, 2>;

inline M2 mul(const M2& a, const M2& b) {
  M2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline M2 ry(double t) { return {{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}}}; }

inline M2 rx(double p) {
  const cd is{0.0, std::sin(p)};
  return {{{std::cos(p), is}, {is, std::cos(p)}}};
}

/// Coin of the non-commuting walk, R_x(phi) R_y(theta).
inline M2 noncommuting_coin(double theta, double phi) { return mul(rx(phi), ry(theta)); }

/// Walk on sites [-L, L] built as an explicit (2(2L+1))^2 matrix, coin on
/// every site followed by the shift. Returns per-site probabilities.
inline std::vector<double> brute_force_walk(const std::vector<M2>& coins_per_step_round,
                                            int steps, int half_width, cd h0, cd v0) {
  const int n = 2 * half_width + 1;
  const int dim = 2 * n;
  std::vector<cd> psi(dim, 0.0);
  psi[2 * half_width] = h0;
  psi[2 * half_width + 1] = v0;
  auto apply = [&](const std::vector<std::vector<cd>>& m) {
    std::vector<cd> out(dim, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) out[i] += m[i][j] * psi[j];
    psi = out;
  };
  for (int s = 0; s < steps; ++s) {
    for (const M2& c : coins_per_step_round) {
      std::vector<std::vector<cd>> coin(dim, std::vector<cd>(dim, 0.0));
      std::vector<std::vector<cd>> shift(dim, std::vector<cd>(dim, 0.0));
      for (int x = 0; x < n; ++x) {
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) coin[2 * x + a][2 * x + b] = c[a][b];
        if (x + 1 < n) shift[2 * (x + 1)][2 * x] = 1.0;
        if (x - 1 >= 0) shift[2 * (x - 1) + 1][2 * x + 1] = 1.0;
      }
      apply(coin);
      apply(shift);
    }
  }
  std::vector<double> p(n);
  for (int x = 0; x < n; ++x) p[x] = std::norm(psi[2 * x]) + std::norm(psi[2 * x + 1]);
  return p;
}

/// cos E(k) of the non-commuting walk from the Bloch unitary
/// U(k) = diag(e^{-ik}, e^{ik}) R_x(phi) R_y(theta): Re tr U / 2.
inline double bloch_unitary_cos_energy(double theta, double phi, double k) {
  const M2 c = noncommuting_coin(theta, phi);
  const cd t = std::exp(cd{0.0, -k}) * c[0][0] + std::exp(cd{0.0, k}) * c[1][1];
  return 0.5 * t.real();
}

/// The parameter points where cos k cos(theta) cos(phi) + sin k sin(theta)
/// sin(phi) reaches 1 for some k, enumerated over multiples of pi/2 in
/// [-pi, pi]^2 (the closure condition forces theta +- phi into pi Z).
/// Returns (theta, phi, k*).
inline std::vector<std::tuple<double, double, double>> closed_form_dirac_points() {
  constexpr double pi = std::numbers::pi;
  std::vector<std::tuple<double, double, double>> out;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      const double t = i * pi / 2;
      const double p = j * pi / 2;
      // Exact integer arithmetic on the quarter-turn indices.
      auto c = [](int q) { const int m = ((q % 4) + 4) % 4; return m == 0 ? 1 : (m == 2 ? -1 : 0); };
      auto s = [](int q) { const int m = ((q % 4) + 4) % 4; return m == 1 ? 1 : (m == 3 ? -1 : 0); };
      const int d = c(i) * c(j);
      const int sc = s(i) * s(j);
      if (d == 1) out.emplace_back(t, p, 0.0);
      else if (d == -1) out.emplace_back(t, p, pi);
      else if (sc == 1) out.emplace_back(t, p, pi / 2);
      else if (sc == -1) out.emplace_back(t, p, -pi / 2);
    }
  }
  return out;
}

inline double random_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng);
}

}  // namespace dtqw::oracle
