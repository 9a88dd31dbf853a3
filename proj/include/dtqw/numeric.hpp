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

// Small numerical kernels shared by the band, Zak and scan code:
// angle folding, golden-section minimization and adaptive Simpson
// quadrature.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <type_traits>
#include <utility>
#include <vector>

namespace dtqw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Folds a phase into [0, 2pi).
inline double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// Folds an angle into [-pi, pi]; values already inside are returned
/// untouched so that -pi and +pi stay distinct.
inline double fold_angle(double x) {
  if (x >= -kPi && x <= kPi) return x;
  return std::remainder(x, kTwoPi);
}

/// Distance from x to the nearest multiple of 2pi.
inline double distance_mod_two_pi(double x) {
  return std::abs(std::remainder(x, kTwoPi));
}

/// n equally spaced points on [lo, hi], endpoints included.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 0) return out;
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  // Centre plus scaled offset: dyadic fractions of a symmetric range come
  // out exact (0, +-pi/2 on [-pi, pi]).
  const double last = static_cast<double>(n - 1);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (2.0 * static_cast<double>(i) - last) / last;
    out[i] = mid + half * r;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

struct MinimumPoint {
  double x;
  double fx;
};

/// Golden-section search for a minimum of f on [lo, hi]. Returns the best
/// point evaluated, including the optional seed, so the result is never
/// worse than the seed.
template <typename F>
MinimumPoint golden_section_min(F&& f, double lo, double hi, int max_iter,
                                MinimumPoint seed) {
  constexpr double kInvPhi = 0.6180339887498948482;
  MinimumPoint best = seed;
  auto consider = [&](double x, double fx) {
    if (fx < best.fx) best = {x, fx};
  };
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < max_iter && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

template <typename F>
MinimumPoint golden_section_min(F&& f, double lo, double hi, int max_iter) {
  const double mid = 0.5 * (lo + hi);
  return golden_section_min(f, lo, hi, max_iter, MinimumPoint{mid, f(mid)});
}

struct QuadratureResult {
  double value;
  std::size_t evaluations;
  bool converged;  // false if some panel hit the depth limit
};

namespace detail {

template <typename F>
struct SimpsonState {
  F& f;
  int max_depth;
  std::size_t evaluations = 0;
  bool converged = true;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double refine(double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth) {
      converged = false;
      return left + right + delta / 15.0;
    }
    // Left before right: the summation order is fixed, so results are
    // bitwise reproducible.
    const double l = refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
    const double r = refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    return l + r;
  }
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// The interval is pre-split into `initial_panels` panels so that features
/// narrower than (b - a) are not missed by the first estimate.
template <typename F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double tol,
                                  int max_depth = 40, int initial_panels = 8) {
  detail::SimpsonState<std::remove_reference_t<F>> st{f, max_depth};
  const double width = (b - a) / initial_panels;
  const double panel_tol = tol / initial_panels;
  double total = 0.0;
  double x0 = a;
  double f0 = st.eval(x0);
  for (int p = 0; p < initial_panels; ++p) {
    const double x1 = (p + 1 == initial_panels) ? b : a + width * (p + 1);
    const double xm = 0.5 * (x0 + x1);
    const double fm = st.eval(xm);
    const double f1 = st.eval(x1);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += st.refine(x0, x1, f0, fm, f1, whole, panel_tol, 0);
    x0 = x1;
    f0 = f1;
  }
  return {total, st.evaluations, st.converged};
}

}  // namespace dtqw
