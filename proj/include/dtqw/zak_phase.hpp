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

// Zak phases of the walk bands.
//
// The Zak phase of a band over [k_lo, k_hi] is the integral of the Berry
// connection A(k) = i <V(k)|d_k V(k)> in the gauge of bloch_band.hpp. Two
// independent routes are provided: adaptive quadrature of the closed-form
// connection and a discrete Wilson-line product of neighbouring eigenvector
// overlaps. The split-step ratio formula tan(theta2)/tan(theta1) and the
// overlap-phase difference between two Dirac-point walks live here too.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dtqw/bloch_band.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/numeric.hpp"
#include "dtqw/parallel.hpp"
#include "dtqw/walk_sim.hpp"

namespace dtqw {

enum class ZakMethod { Quadrature, Wilson, Analytic };

inline std::string_view method_name(ZakMethod m) {
  switch (m) {
    case ZakMethod::Quadrature: return "quadrature";
    case ZakMethod::Wilson: return "wilson";
    case ZakMethod::Analytic: return "analytic";
  }
  return "?";
}

inline std::optional<ZakMethod> parse_method(std::string_view s) {
  if (s == "quadrature") return ZakMethod::Quadrature;
  if (s == "wilson") return ZakMethod::Wilson;
  if (s == "analytic") return ZakMethod::Analytic;
  return std::nullopt;
}

/// Phase values are only meaningful when `defined`; undefined results carry
/// zeros.
struct ZakResult {
  double z_plus = 0.0;
  double z_minus = 0.0;
  double z_total = 0.0;
  ZakMethod method = ZakMethod::Quadrature;
  double k_lo = 0.0;
  double k_hi = 0.0;
  bool defined = false;
};

/// Mask threshold: a Zak phase is undefined if the gap closes on the path.
inline constexpr double kZakMaskThreshold = 1e-6;
inline constexpr double kZakQuadratureTol = 1e-9;

/// [0, pi] for NonCommuting, [-pi/2, pi/2] otherwise.
inline std::pair<double, double> default_zak_interval(Family f) {
  if (f == Family::NonCommuting) return {0.0, kPi};
  return {-kPi / 2, kPi / 2};
}

/// A(k) = i <V|d_k V> for the requested band. With N1 = m_x + i m_y the
/// only non-cancelling term is i N1* d_k N1 / D^2, which gives
///
///   A = -(m_x m_y' - m_y m_x') / (2 |m| (|m| + s m_z)),   s = +-1.
///
/// For NonCommuting the numerator is the k-independent a^2 + b^2.
inline double berry_connection(const WalkProtocol& p, double k, Band band) {
  const BandTerms t = band_terms(p, k);
  const double mnorm = t.m.norm();
  const double e = std::atan2(mnorm, t.cos_energy);
  if (!(std::min(e, kPi - e) > kZakMaskThreshold)) {
    throw GapClosure("berry_connection: quasi-energy gap closed");
  }
  const double s = band_sign(band);
  double numerator = 0.0;
  if (p.family == Family::NonCommuting) {
    const auto [a, b, c, d] = angular_coeffs(p.angle1, p.angle2);
    numerator = a * a + b * b;
  } else {
    numerator = -(t.m.x * t.dm.y - t.m.y * t.dm.x);
  }
  const double gauge = detail::gauge_denominator_term(t.m, mnorm, s);
  if (!(gauge > 0.0)) throw GapClosure("berry_connection: gauge singular point");
  return numerator / (2.0 * mnorm * gauge);
}

/// True if the gap stays above the mask threshold on [k_lo, k_hi].
inline bool gap_open_on(const WalkProtocol& p, double k_lo, double k_hi) {
  return min_gap_on_interval(p, k_lo, k_hi, 512).fx >= kZakMaskThreshold;
}

/// Zak phase of both bands by adaptive Simpson quadrature of the Berry
/// connection. Returns defined = false if the gap closes on the interval.
inline ZakResult zak_quadrature(const WalkProtocol& p, double k_lo, double k_hi,
                                double tol = kZakQuadratureTol) {
  ZakResult r;
  r.method = ZakMethod::Quadrature;
  r.k_lo = k_lo;
  r.k_hi = k_hi;
  if (!gap_open_on(p, k_lo, k_hi)) return r;
  auto integrate = [&](Band band) {
    return adaptive_simpson([&](double k) { return berry_connection(p, k, band); }, k_lo, k_hi,
                            tol, 40)
        .value;
  };
  r.z_plus = integrate(Band::Plus);
  r.z_minus = integrate(Band::Minus);
  r.z_total = r.z_plus + r.z_minus;
  r.defined = true;
  return r;
}

inline ZakResult zak_quadrature(const WalkProtocol& p) {
  const auto [lo, hi] = default_zak_interval(p.family);
  return zak_quadrature(p, lo, hi);
}

/// Discrete Berry phase along the open path k_lo -> k_hi:
///   -sum_j arg <V(k_j)|V(k_{j+1})>
/// with V in the bloch_band gauge at every node (only the endpoint gauge
/// survives in the product). This is a branch of -Im log prod_j <V_j|V_j+1>.
/// Returns nullopt if the gap closes on the path.
inline std::optional<double> zak_wilson(const WalkProtocol& p, double k_lo, double k_hi,
                                        int n_points, Band band) {
  if (n_points < 64) throw InvalidArgument("zak_wilson: n_points must be >= 64");
  if (!gap_open_on(p, k_lo, k_hi)) return std::nullopt;
  const auto ks = linspace(k_lo, k_hi, static_cast<std::size_t>(n_points));
  double phase = 0.0;
  Spinor prev = eigenvector(p, ks[0], band);
  for (std::size_t j = 1; j < ks.size(); ++j) {
    const Spinor next = eigenvector(p, ks[j], band);
    phase -= std::arg(inner(prev, next));
    prev = next;
  }
  return phase;
}

/// Wilson-line evaluation of both bands packaged like zak_quadrature.
inline ZakResult zak_wilson_result(const WalkProtocol& p, double k_lo, double k_hi,
                                   int n_points) {
  ZakResult r;
  r.method = ZakMethod::Wilson;
  r.k_lo = k_lo;
  r.k_hi = k_hi;
  const auto plus = zak_wilson(p, k_lo, k_hi, n_points, Band::Plus);
  const auto minus = zak_wilson(p, k_lo, k_hi, n_points, Band::Minus);
  if (!plus || !minus) return r;
  r.z_plus = *plus;
  r.z_minus = *minus;
  r.z_total = *plus + *minus;
  r.defined = true;
  return r;
}

/// tan(theta2) / tan(theta1), the split-step ratio formula.
/// Throws PoleError when theta1 is within 1e-9 of a multiple of pi.
inline double zak_splitstep_analytic(double theta1, double theta2) {
  if (std::abs(std::remainder(theta1, kPi)) <= 1e-9) {
    throw PoleError("zak_splitstep_analytic: tan(theta1) = 0");
  }
  return std::tan(theta2) / std::tan(theta1);
}

struct AxisSpec {
  double lo = -kPi;
  double hi = kPi;
  int n = 101;

  std::vector<double> values() const { return linspace(lo, hi, static_cast<std::size_t>(n)); }
};

struct LandscapeOptions {
  double k_lo = 0.0;
  double k_hi = kPi;
  ZakMethod method = ZakMethod::Quadrature;
  int wilson_points = 2048;
  int jobs = 1;
};

/// Row-major grid: values[i * axis2.size() + j] belongs to (axis1[i], axis2[j]).
struct LandscapeGrid {
  Family family;
  std::vector<double> axis1;
  std::vector<double> axis2;
  std::vector<ZakResult> values;

  const ZakResult& at(std::size_t i, std::size_t j) const { return values[i * axis2.size() + j]; }
};

/// Zak phase over a grid of coin angles. Quadrature and Wilson cells whose
/// k-interval contains a gap closure are undefined. Analytic (split-step
/// only) stores tan(angle2)/tan(angle1) in z_total and marks the pole lines
/// undefined.
inline LandscapeGrid zak_landscape(Family family, const AxisSpec& a1, const AxisSpec& a2,
                                   const LandscapeOptions& opt) {
  if (a1.n < 1 || a2.n < 1) throw InvalidArgument("zak_landscape: empty axis");
  if (opt.method == ZakMethod::Analytic && family != Family::SplitStep) {
    throw InvalidArgument("zak_landscape: analytic method exists only for the split-step walk");
  }
  LandscapeGrid g{family, a1.values(), a2.values(), {}};
  const std::size_t n2 = g.axis2.size();
  g.values.resize(g.axis1.size() * n2);
  parallel_for(g.axis1.size(), opt.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n2; ++j) {
      ZakResult& cell = g.values[i * n2 + j];
      const double x = g.axis1[i];
      const double y = g.axis2[j];
      switch (opt.method) {
        case ZakMethod::Analytic:
          cell.method = ZakMethod::Analytic;
          cell.k_lo = opt.k_lo;
          cell.k_hi = opt.k_hi;
          try {
            cell.z_total = zak_splitstep_analytic(x, y);
            cell.defined = true;
          } catch (const PoleError&) {
            cell.defined = false;
          }
          break;
        case ZakMethod::Wilson:
          cell = zak_wilson_result(WalkProtocol(family, x, y), opt.k_lo, opt.k_hi,
                                   opt.wilson_points);
          break;
        case ZakMethod::Quadrature:
          cell = zak_quadrature(WalkProtocol(family, x, y), opt.k_lo, opt.k_hi);
          break;
      }
    }
  });
  return g;
}

// ---------------------------------------------------------------------------
// Phase difference between walks ending at Dirac points
// ---------------------------------------------------------------------------

/// Sign of the closing momentum of a Dirac-point protocol. Dirac points that
/// close at k = 0 or |k| = pi carry no sign.
enum class Branch { Positive, Negative, Unsigned };

inline std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::Positive: return "positive";
    case Branch::Negative: return "negative";
    case Branch::Unsigned: return "unsigned";
  }
  return "?";
}

/// Branch of a protocol that must sit on a Dirac point (min_k E <= 1e-6);
/// throws InvalidArgument otherwise.
inline Branch dirac_branch(const WalkProtocol& p, int k_samples = 129) {
  const MinimumPoint m = min_closure_over_k(p, ClosureKind::ZeroEnergy, k_samples);
  if (!(m.fx <= kGapClosureThreshold)) {
    throw InvalidArgument("trajectory end point is not a Dirac point");
  }
  const double k = detail::snap_momentum(m.x);
  if (k == 0.0 || k == kPi) return Branch::Unsigned;
  return k > 0.0 ? Branch::Positive : Branch::Negative;
}

struct TrajectoryPair {
  WalkProtocol start;
  WalkProtocol end_a;
  WalkProtocol end_b;
  Branch branch_a;
  Branch branch_b;

  bool opposite_branches() const {
    return (branch_a == Branch::Positive && branch_b == Branch::Negative) ||
           (branch_a == Branch::Negative && branch_b == Branch::Positive);
  }
};

/// Builds a pair after checking that both end points are Dirac points.
inline TrajectoryPair make_trajectory_pair(const WalkProtocol& start, const WalkProtocol& end_a,
                                           const WalkProtocol& end_b) {
  return {start, end_a, end_b, dirac_branch(end_a), dirac_branch(end_b)};
}

/// Evolves `initial` for `steps` steps under each end-point protocol and
/// returns the overlap phase |arg <psi_b|psi_a>| in [0, pi]. Throws
/// NotPurePhase if the two final states are not proportional.
inline double zak_difference(const TrajectoryPair& pair, std::int64_t steps,
                             const WalkState& initial) {
  if (steps < 1) throw InvalidArgument("zak_difference: steps must be >= 1");
  if (dirac_branch(pair.end_a) != pair.branch_a || dirac_branch(pair.end_b) != pair.branch_b) {
    throw InvalidArgument("zak_difference: branch labels do not match the end points");
  }
  const WalkState a = evolve(initial, pair.end_a, steps);
  const WalkState b = evolve(initial, pair.end_b, steps);
  return overlap_phase(b, a);
}

inline double zak_difference(const TrajectoryPair& pair, std::int64_t steps) {
  return zak_difference(pair, steps, initial_state(0, circular_polarization()));
}

}  // namespace dtqw
