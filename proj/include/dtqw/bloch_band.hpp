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

// Momentum-space description of the three walk families.
//
//   Single        U = T R_y(theta)
//   SplitStep     U = T R_y(theta1) T R_y(theta2)
//   NonCommuting  U = T R_x(phi) R_y(theta)
//
// Each family is described at quasi-momentum k by its dispersion
// cos E(k) = f(k) and by an unnormalized Bloch vector m(k) with |m| = sin E.
// The effective Hamiltonian is E(k) n(k).sigma with n = m / |m|.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtqw/errors.hpp"
#include "dtqw/numeric.hpp"
#include "dtqw/parallel.hpp"
#include "dtqw/su2.hpp"

namespace dtqw {

enum class Family { Single, SplitStep, NonCommuting };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Single: return "single";
    case Family::SplitStep: return "splitstep";
    case Family::NonCommuting: return "noncommuting";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "single") return Family::Single;
  if (s == "splitstep" || s == "split-step") return Family::SplitStep;
  if (s == "noncommuting" || s == "non-commuting") return Family::NonCommuting;
  return std::nullopt;
}

/// A walk family together with its coin angles, i.e. one point of the
/// parameter torus. angle1 is theta (theta1 for SplitStep); angle2 is phi
/// (theta2 for SplitStep) and is forced to zero for Single. Angles are
/// folded into [-pi, pi].
struct WalkProtocol {
  Family family = Family::NonCommuting;
  double angle1 = 0.0;
  double angle2 = 0.0;

  WalkProtocol() = default;
  WalkProtocol(Family f, double a1, double a2)
      : family(f), angle1(fold_angle(a1)), angle2(f == Family::Single ? 0.0 : fold_angle(a2)) {}

  static WalkProtocol single(double theta) { return {Family::Single, theta, 0.0}; }
  static WalkProtocol split_step(double theta1, double theta2) {
    return {Family::SplitStep, theta1, theta2};
  }
  static WalkProtocol non_commuting(double theta, double phi) {
    return {Family::NonCommuting, theta, phi};
  }

  friend bool operator==(const WalkProtocol&, const WalkProtocol&) = default;
};

/// Gap threshold below which the Bloch direction is treated as undefined.
inline constexpr double kGapClosureThreshold = 1e-6;

struct AngularCoeffs {
  double a;  // sin(phi) cos(theta)
  double b;  // cos(phi) sin(theta)
  double c;  // sin(phi) sin(theta)
  double d;  // cos(phi) cos(theta)
};

inline AngularCoeffs angular_coeffs(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  return {sp * ct, cp * st, sp * st, cp * ct};
}

/// Dispersion right-hand side, unnormalized Bloch vector and its k-derivative.
struct BandTerms {
  double cos_energy;
  Vec3 m;
  Vec3 dm;
};

inline BandTerms band_terms(const WalkProtocol& p, double k) {
  const double ck = std::cos(k), sk = std::sin(k);
  if (p.family == Family::NonCommuting) {
    const auto [a, b, c, d] = angular_coeffs(p.angle1, p.angle2);
    return {ck * d + sk * c,
            {-ck * a + sk * b, ck * b + sk * a, ck * c - sk * d},
            {sk * a + ck * b, -sk * b + ck * a, -sk * c - ck * d}};
  }
  // Single is the split-step walk with theta2 = 0.
  const double t1 = p.angle1;
  const double t2 = p.family == Family::SplitStep ? p.angle2 : 0.0;
  const double s1 = std::sin(t1), c1 = std::cos(t1);
  const double s2 = std::sin(t2), c2 = std::cos(t2);
  return {ck * c1 * c2 - s1 * s2,
          {sk * s1 * c2, ck * s1 * c2 + s2 * c1, -sk * c2 * c1},
          {ck * s1 * c2, -sk * s1 * c2, -ck * c2 * c1}};
}

namespace detail {

inline void check_cos_energy(double rhs) {
  if (!(std::abs(rhs) <= 1.0 + 1e-12)) {
    throw InternalInconsistency("dispersion right-hand side outside [-1, 1]");
  }
}

}  // namespace detail

/// Quasi-energy E in [0, pi] with cos E equal to the family's dispersion.
/// Evaluated as atan2(|m|, cos E), which equals the principal arccos but keeps
/// full relative precision near the closures E = 0 and E = pi.
inline double dispersion(const WalkProtocol& p, double k) {
  const BandTerms t = band_terms(p, k);
  detail::check_cos_energy(t.cos_energy);
  return std::atan2(t.m.norm(), t.cos_energy);
}

/// min(E, pi - E)
inline double band_gap(const WalkProtocol& p, double k) {
  const double e = dispersion(p, k);
  return std::min(e, kPi - e);
}

struct BlochPoint {
  double k;
  double energy;
  std::optional<Vec3> n;  // empty where the gap is closed
  double gap;
};

inline BlochPoint bloch_point(const WalkProtocol& p, double k) {
  const BandTerms t = band_terms(p, k);
  detail::check_cos_energy(t.cos_energy);
  const double s = t.m.norm();
  const double e = std::atan2(s, t.cos_energy);
  const double gap = std::min(e, kPi - e);
  BlochPoint out{k, e, std::nullopt, gap};
  if (gap > kGapClosureThreshold) out.n = (1.0 / s) * t.m;
  return out;
}

/// Unit Bloch vector n(k). Throws GapClosure if the gap is <= 1e-6.
inline Vec3 bloch_vector(const WalkProtocol& p, double k) {
  const BlochPoint bp = bloch_point(p, k);
  if (!bp.n) throw GapClosure("bloch_vector: quasi-energy gap closed");
  return *bp.n;
}

enum class Band { Plus, Minus };

inline double band_sign(Band b) { return b == Band::Plus ? 1.0 : -1.0; }

struct EigenPair {
  Spinor v_plus;
  Spinor v_minus;
  bool singular = false;
};

namespace detail {

/// |m| + s m_z without cancellation.
inline double gauge_denominator_term(const Vec3& m, double mnorm, double s) {
  if (s * m.z >= 0.0) return mnorm + s * m.z;
  return (m.x * m.x + m.y * m.y) / (mnorm - s * m.z);
}

/// Eigenvector of m.sigma with eigenvalue s|m|:
///   (m_z + s|m|, m_x + i m_y) / sqrt(2|m|(|m| + s m_z))
/// The complex component is N1 = m_x + i m_y, the real one m_z + s|m|.
inline Spinor gauge_eigenvector(const Vec3& m, double s) {
  const double mnorm = m.norm();
  const double t = gauge_denominator_term(m, mnorm, s);
  const double denom = std::sqrt(2.0 * mnorm * t);
  return {C64{s * t / denom, 0.0}, C64{m.x / denom, m.y / denom}};
}

inline bool gauge_singular(const Vec3& m) {
  return std::hypot(m.x, m.y) < 1e-9 * m.norm();
}

}  // namespace detail

/// Normalized eigenvectors of n(k).sigma for eigenvalues +1 and -1.
///
/// The gauge keeps one component real (n_z +/- 1) and the other proportional
/// to n_x + i n_y. Where |n_x + i n_y| < 1e-9 the gauge is undefined; the
/// pair is flagged singular and the basis vectors are returned, with v_plus
/// the +1 eigenvector of n_z sigma_z.
inline EigenPair eigenpair(const WalkProtocol& p, double k) {
  const Vec3 n = bloch_vector(p, k);
  if (detail::gauge_singular(n)) {
    const Spinor up{1.0, 0.0};
    const Spinor down{0.0, 1.0};
    return n.z > 0.0 ? EigenPair{up, down, true} : EigenPair{down, up, true};
  }
  return {detail::gauge_eigenvector(n, 1.0), detail::gauge_eigenvector(n, -1.0), false};
}

inline Spinor eigenvector(const WalkProtocol& p, double k, Band band) {
  const EigenPair e = eigenpair(p, k);
  return band == Band::Plus ? e.v_plus : e.v_minus;
}

// ---------------------------------------------------------------------------
// Gap closures on the parameter torus
// ---------------------------------------------------------------------------

/// E = 0 closures are Dirac points; E = pi closures are tracked separately.
enum class ClosureKind { ZeroEnergy, PiEnergy };

struct DiracPoint {
  double angle1;
  double angle2;
  double k_star;
  double residual_gap;
};

struct DiracScanOptions {
  int grid_n = 201;
  int k_samples = 129;
  double tol = 1e-6;
  int jobs = 1;
};

struct ClosureScan {
  std::vector<DiracPoint> dirac;        // E = 0
  std::vector<DiracPoint> pi_closures;  // E = pi
};

/// Distance of the band from the closure of the given kind at (p, k):
/// E for ZeroEnergy, pi - E for PiEnergy.
inline double closure_distance(const WalkProtocol& p, double k, ClosureKind kind) {
  const BandTerms t = band_terms(p, k);
  detail::check_cos_energy(t.cos_energy);
  const double rhs = kind == ClosureKind::ZeroEnergy ? t.cos_energy : -t.cos_energy;
  return std::atan2(t.m.norm(), rhs);
}

/// min over k in [-pi, pi] of closure_distance. Samples the candidate momenta
/// {0, +-pi/2, +-pi} and `k_samples` evenly spaced points, then refines the
/// best sample by golden-section search.
inline MinimumPoint min_closure_over_k(const WalkProtocol& p, ClosureKind kind, int k_samples) {
  auto f = [&](double k) { return closure_distance(p, k, kind); };
  MinimumPoint best{0.0, f(0.0)};
  for (double k : {kPi / 2, -kPi / 2, kPi, -kPi}) {
    const double v = f(k);
    if (v < best.fx) best = {k, v};
  }
  const auto grid = linspace(-kPi, kPi, static_cast<std::size_t>(k_samples));
  for (double k : grid) {
    const double v = f(k);
    if (v < best.fx) best = {k, v};
  }
  const double h = kTwoPi / (k_samples - 1);
  return golden_section_min(f, best.x - h, best.x + h, 80, best);
}

namespace detail {

inline double snap_momentum(double k) {
  for (double label : {0.0, kPi / 2, -kPi / 2, kPi, -kPi}) {
    if (std::abs(k - label) < 1e-6) return label == -kPi ? kPi : label;
  }
  return k;
}

/// Returns true and fills `out` if the grid candidate refines to a closure.
inline bool refine_closure(Family family, ClosureKind kind, double x0, double y0, double h,
                           const DiracScanOptions& opt, DiracPoint& out) {
  auto g = [&](double x, double y) {
    return min_closure_over_k(WalkProtocol(family, x, y), kind, opt.k_samples).fx;
  };
  double x = x0;
  double y = y0;
  double gx = g(x, y);
  const bool uses_angle2 = family != Family::Single;
  for (int sweep = 0; sweep < 4 && gx > 0.0; ++sweep) {
    const double before = gx;
    auto fx = [&](double t) { return g(t, y); };
    auto mx = golden_section_min(fx, std::max(-kPi, x - h), std::min(kPi, x + h), 60, {x, gx});
    x = mx.x;
    gx = mx.fx;
    if (uses_angle2) {
      auto fy = [&](double t) { return g(x, t); };
      auto my = golden_section_min(fy, std::max(-kPi, y - h), std::min(kPi, y + h), 60, {y, gx});
      y = my.x;
      gx = my.fx;
    }
    if (!(gx < before)) break;
  }
  const WalkProtocol p(family, x, y);
  const MinimumPoint km = min_closure_over_k(p, kind, opt.k_samples);
  double k_star = km.x;
  double residual = km.fx;
  const double snapped = snap_momentum(k_star);
  if (snapped != k_star) {
    const double r = closure_distance(p, snapped, kind);
    if (r <= std::max(residual, opt.tol)) {
      k_star = snapped;
      residual = r;
    }
  }
  if (residual > opt.tol) return false;
  out = {x, y, k_star, residual};
  return true;
}

inline std::vector<DiracPoint> scan_kind(Family family, ClosureKind kind,
                                         const std::vector<double>& axis,
                                         const std::vector<double>& values,
                                         const DiracScanOptions& opt) {
  const std::size_t n = axis.size();
  const std::size_t ny = family == Family::Single ? 1 : n;
  const double h = axis[1] - axis[0];
  const double coarse = std::max(opt.tol, 2.0 * h);

  struct Candidate {
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double v = values[i * ny + j];
      if (v > coarse) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const auto ii = static_cast<std::ptrdiff_t>(i) + di;
          const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(n) ||
              jj >= static_cast<std::ptrdiff_t>(ny)) {
            continue;
          }
          if (values[static_cast<std::size_t>(ii) * ny + static_cast<std::size_t>(jj)] < v) {
            local_min = false;
            break;
          }
        }
      }
      if (local_min) candidates.push_back({i, j});
    }
  }

  std::vector<DiracPoint> refined(candidates.size());
  std::vector<char> ok(candidates.size(), 0);
  parallel_for(candidates.size(), opt.jobs, [&](std::size_t c) {
    const double y0 = family == Family::Single ? 0.0 : axis[candidates[c].j];
    ok[c] = refine_closure(family, kind, axis[candidates[c].i], y0, h, opt, refined[c]) ? 1 : 0;
  });

  // Merge duplicates that land within one grid cell of each other, keeping
  // the smaller residual. Candidates are visited in grid order, so the
  // result is independent of the worker count.
  std::vector<DiracPoint> merged;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!ok[c]) continue;
    const DiracPoint& d = refined[c];
    bool duplicate = false;
    for (auto& m : merged) {
      if (std::abs(m.angle1 - d.angle1) < h && std::abs(m.angle2 - d.angle2) < h) {
        if (d.residual_gap < m.residual_gap) m = d;
        duplicate = true;
        break;
      }
    }
    if (!duplicate) merged.push_back(d);
  }
  std::sort(merged.begin(), merged.end(), [](const DiracPoint& a, const DiracPoint& b) {
    if (a.angle1 != b.angle1) return a.angle1 < b.angle1;
    if (a.angle2 != b.angle2) return a.angle2 < b.angle2;
    return a.k_star < b.k_star;
  });
  return merged;
}

}  // namespace detail

/// Locates gap closures over the parameter torus [-pi, pi]^2 (a line for
/// Single). Both grid edges are kept, so -pi and +pi are distinct points.
/// Grid nodes whose minimum over k falls below a coarse threshold and which
/// are local minima among their neighbours are refined by alternating
/// golden-section searches on each angle; refined points with residual gap
/// <= tol are reported, sorted by (angle1, angle2, k_star).
inline ClosureScan scan_closures(Family family, const DiracScanOptions& opt = {}) {
  if (!(opt.tol > 0.0)) throw InvalidArgument("dirac_scan: tol must be positive");
  if (opt.grid_n < 41 || opt.grid_n % 2 == 0) {
    throw InvalidArgument("dirac_scan: grid_n must be odd and >= 41");
  }
  if (opt.k_samples < 2) throw InvalidArgument("dirac_scan: k_samples must be >= 2");

  const auto axis = linspace(-kPi, kPi, static_cast<std::size_t>(opt.grid_n));
  const std::size_t n = axis.size();
  const std::size_t ny = family == Family::Single ? 1 : n;
  std::vector<double> zero(n * ny);
  std::vector<double> pi(n * ny);
  parallel_for(n, opt.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const WalkProtocol p(family, axis[i], family == Family::Single ? 0.0 : axis[j]);
      zero[i * ny + j] = min_closure_over_k(p, ClosureKind::ZeroEnergy, opt.k_samples).fx;
      pi[i * ny + j] = min_closure_over_k(p, ClosureKind::PiEnergy, opt.k_samples).fx;
    }
  });
  return {detail::scan_kind(family, ClosureKind::ZeroEnergy, axis, zero, opt),
          detail::scan_kind(family, ClosureKind::PiEnergy, axis, pi, opt)};
}

/// Dirac points (E = 0 closures) only.
inline std::vector<DiracPoint> dirac_scan(Family family, const DiracScanOptions& opt = {}) {
  return scan_closures(family, opt).dirac;
}

/// Smallest band gap min(E, pi - E) over [k_lo, k_hi]: `samples` evenly
/// spaced points, with every discrete local minimum refined by golden-section
/// search so that closures between samples are not missed.
inline MinimumPoint min_gap_on_interval(const WalkProtocol& p, double k_lo, double k_hi,
                                        int samples = 512) {
  const auto ks = linspace(k_lo, k_hi, static_cast<std::size_t>(std::max(samples, 2)));
  std::vector<double> gaps(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) gaps[i] = band_gap(p, ks[i]);
  auto f = [&](double k) { return band_gap(p, k); };
  const std::size_t argmin =
      static_cast<std::size_t>(std::min_element(gaps.begin(), gaps.end()) - gaps.begin());
  // |dE/dk| <= 1 for these walks, so a closure between two samples leaves a
  // sampled gap below one spacing; shallower local minima need no refinement.
  const double spacing = std::abs(k_hi - k_lo) / static_cast<double>(ks.size() - 1);
  MinimumPoint best{ks[argmin], gaps[argmin]};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const bool left_ok = i == 0 || gaps[i] <= gaps[i - 1];
    const bool right_ok = i + 1 == ks.size() || gaps[i] <= gaps[i + 1];
    if (!(left_ok && right_ok)) continue;
    if (i != argmin && gaps[i] > 2.0 * spacing) continue;
    const double lo = i == 0 ? ks[0] : ks[i - 1];
    const double hi = i + 1 == ks.size() ? ks.back() : ks[i + 1];
    const MinimumPoint m = golden_section_min(f, lo, hi, 80, {ks[i], gaps[i]});
    if (m.fx < best.fx) best = m;
  }
  return best;
}

}  // namespace dtqw
