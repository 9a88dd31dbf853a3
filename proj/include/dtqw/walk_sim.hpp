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

// Position-space evolution of a single walker on the integer line.
//
// One step applies the family's coin and then the polarization-dependent
// shift T = sum_x |x+1><x| (x) |H><H| + |x-1><x| (x) |V><V|. Operator
// products act right to left, so U = T R_x(phi) R_y(theta) applies R_y
// first. The split-step walk performs two coin+shift rounds per step.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dtqw/bloch_band.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/su2.hpp"

namespace dtqw {

/// Amplitudes on the contiguous sites offset, offset + 1, ...
struct WalkState {
  std::int64_t offset = 0;
  std::vector<Spinor> amps;
  std::int64_t step_count = 0;

  std::int64_t first_site() const { return offset; }
  std::int64_t last_site() const { return offset + static_cast<std::int64_t>(amps.size()) - 1; }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += a.norm_sq();
    return s;
  }

  /// Amplitude at site x, zero outside the stored range.
  Spinor at(std::int64_t x) const {
    if (x < first_site() || x > last_site()) return {0.0, 0.0};
    return amps[static_cast<std::size_t>(x - offset)];
  }
};

struct Distribution {
  std::vector<std::int64_t> positions;
  std::vector<double> probabilities;

  double total() const {
    double s = 0.0;
    for (double p : probabilities) s += p;
    return s;
  }
  double mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      m += static_cast<double>(positions[i]) * probabilities[i];
    }
    return m;
  }
  double variance() const {
    const double mu = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const double dx = static_cast<double>(positions[i]) - mu;
      v += dx * dx * probabilities[i];
    }
    return v;
  }
};

/// The circularly polarized state (1, i)/sqrt(2).
inline Spinor circular_polarization() {
  const double r = 1.0 / std::sqrt(2.0);
  return {C64{r, 0.0}, C64{0.0, r}};
}

inline WalkState initial_state(std::int64_t position, const Spinor& spinor) {
  if (!(std::abs(spinor.norm_sq() - 1.0) <= 1e-12)) {
    throw InvalidArgument("initial_state: spinor must be normalized");
  }
  return {position, {spinor}, 0};
}

/// Single-coin operator of a protocol. SplitStep has two coins; this returns
/// the one applied first, R_y(theta2).
inline Mat2C coin_operator(const WalkProtocol& p) {
  switch (p.family) {
    case Family::Single: return rotation_y(p.angle1);
    case Family::NonCommuting: return compose(rotation_x(p.angle2), rotation_y(p.angle1));
    case Family::SplitStep: return rotation_y(p.angle2);
  }
  return Mat2C::identity();
}

namespace detail {

inline void apply_coin(std::vector<Spinor>& amps, const Mat2C& coin) {
  for (auto& a : amps) a = coin * a;
}

/// H moves to x + 1, V to x - 1; the range grows by one site on each side.
inline void apply_shift(WalkState& s) {
  std::vector<Spinor> out(s.amps.size() + 2, Spinor{0.0, 0.0});
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    out[i + 2].h = s.amps[i].h;
    out[i].v = s.amps[i].v;
  }
  s.amps = std::move(out);
  s.offset -= 1;
}

}  // namespace detail

/// One application of the protocol's unitary step. The input is unchanged.
inline WalkState step(WalkState s, const WalkProtocol& p) {
  if (p.family == Family::SplitStep) {
    detail::apply_coin(s.amps, rotation_y(p.angle2));
    detail::apply_shift(s);
    detail::apply_coin(s.amps, rotation_y(p.angle1));
    detail::apply_shift(s);
  } else {
    detail::apply_coin(s.amps, coin_operator(p));
    detail::apply_shift(s);
  }
  s.step_count += 1;
  return s;
}

inline WalkState evolve(WalkState s, const WalkProtocol& p, std::int64_t n) {
  if (n < 0) throw InvalidArgument("evolve: step count must be non-negative");
  for (std::int64_t i = 0; i < n; ++i) s = step(std::move(s), p);
  return s;
}

/// Per-site probabilities |h|^2 + |v|^2, dropping sites below 1e-15.
inline Distribution distribution(const WalkState& s) {
  Distribution d;
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    const double p = s.amps[i].norm_sq();
    if (p < 1e-15) continue;
    d.positions.push_back(s.offset + static_cast<std::int64_t>(i));
    d.probabilities.push_back(p);
  }
  return d;
}

/// <s1|s2> over the union of both site ranges.
inline C64 overlap(const WalkState& s1, const WalkState& s2) {
  const std::int64_t lo = std::max(s1.first_site(), s2.first_site());
  const std::int64_t hi = std::min(s1.last_site(), s2.last_site());
  C64 acc{0.0, 0.0};
  for (std::int64_t x = lo; x <= hi; ++x) acc += inner(s1.at(x), s2.at(x));
  return acc;
}

/// |arg <s1|s2>| in [0, pi] when the states differ only by a global phase
/// (|<s1|s2>| >= 1 - 1e-9); throws NotPurePhase otherwise.
inline double overlap_phase(const WalkState& s1, const WalkState& s2) {
  const C64 ov = overlap(s1, s2);
  if (!(std::abs(ov) >= 1.0 - 1e-9)) {
    throw NotPurePhase("overlap_phase: states differ by more than a global phase");
  }
  return wrap_two_pi(std::abs(std::arg(ov)));
}

}  // namespace dtqw
