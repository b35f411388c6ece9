#include "biotcube/cube_solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "biotcube/biot_stress.hpp"
#include "biotcube/errors.hpp"

namespace biotcube {

LoadMagnitude::LoadMagnitude(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha)) throw DomainError("load magnitude must be finite");
}

namespace {

// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi):
// bisection to a relative width of 1e-14, then Newton steps kept inside the
// final bracket.
template <class F, class DF>
double bracketed_root(F f, DF df, double lo, double hi) {
  while (hi - lo > 1e-14 * std::max(std::abs(lo), std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int k = 0; k < 3; ++k) {
    const double fx = f(x);
    if (fx == 0.0) break;
    const double next = x - fx / df(x);
    if (!std::isfinite(next) || next < lo || next > hi) break;
    if (std::abs(f(next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

double round12(double v) { return std::round(v * 1e12) / 1e12; }

struct EllCoefficients {
  double a;  // 9M^2 + 6M - 8 = (3M-2)(3M+4)
  double b;  // 3M - 2
};

EllCoefficients ell_coefficients(StiffnessRatio m) {
  const double M = m.value();
  return {(3.0 * M - 2.0) * (3.0 * M + 4.0), 3.0 * M - 2.0};
}

}  // namespace

double f_biot(StiffnessRatio m, double beta) {
  const double M = m.value();
  const double b2 = beta * beta;
  return ((3.0 * M - 2.0) * b2 * b2 * b2 + 6.0 * b2 - 4.0 - 3.0 * M) / (6.0 * beta);
}

double f_biot_derivative(StiffnessRatio m, double beta) {
  const double M = m.value();
  const double b2 = beta * beta;
  return (5.0 * (3.0 * M - 2.0) * b2 * b2 * b2 + 6.0 * b2 + 4.0 + 3.0 * M) / (6.0 * b2);
}

double radial_solution(StiffnessRatio m, LoadMagnitude alpha) {
  const double a = alpha.value();
  auto f = [&](double b) { return f_biot(m, b) - a; };
  auto df = [&](double b) { return f_biot_derivative(m, b); };
  double lo = 1.0, hi = 1.0;
  if (f(1.0) < 0.0) {
    while (f(hi) < 0.0) hi *= 2.0;
    lo = hi / 2.0;
  } else {
    while (f(lo) > 0.0) lo /= 2.0;
    hi = lo * 2.0;
  }
  return bracketed_root(f, df, lo, hi);
}

double branch_lambda2(StiffnessRatio m, double l1) {
  const auto [a, b] = ell_coefficients(m);
  // sqrt(a l^4 + 9 l^2) + 3l over (3M-2) l^4, with l factored out
  return (std::sqrt(a * l1 * l1 + 9.0) + 3.0) / (b * l1 * l1 * l1);
}

double ell(StiffnessRatio m, double l1) { return l1 + branch_lambda2(m, l1); }

double ell_derivative(StiffnessRatio m, double l1) {
  const auto [a, b] = ell_coefficients(m);
  const double x2 = l1 * l1;
  const double r = std::sqrt(a * x2 + 9.0);
  const double n = a * x2 / r - 3.0 * (r + 3.0);
  return 1.0 + n / (b * x2 * x2);
}

double ell_second_derivative(StiffnessRatio m, double l1) {
  const auto [a, b] = ell_coefficients(m);
  const double x = l1, x2 = x * x;
  const double q = a * x2 + 9.0;
  const double r = std::sqrt(q);
  const double n = a * x2 / r - 3.0 * r - 9.0;
  const double dn = -a * x / r - a * a * x2 * x / (q * r);
  return (dn * x - 4.0 * n) / (b * x2 * x2 * x);
}

BranchOnset ell_min(StiffnessRatio m) {
  // ell' is increasing; bracket its sign change
  double lo = 1.0, hi = 1.0;
  while (ell_derivative(m, lo) >= 0.0) lo /= 2.0;
  while (ell_derivative(m, hi) <= 0.0) hi *= 2.0;

  // golden-section on ell over [lo, hi]
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = ell(m, c), fd = ell(m, d);
  while (b - a > 1e-7 * b) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - inv_phi * (b - a);
      fc = ell(m, c);
    } else {
      a = c, c = d, fc = fd;
      d = a + inv_phi * (b - a);
      fd = ell(m, d);
    }
  }

  // Newton on ell', safeguarded by the sign bracket of ell'
  double x = 0.5 * (a + b);
  for (int k = 0; k < 50; ++k) {
    const double g = ell_derivative(m, x);
    if (g == 0.0) break;
    (g < 0.0 ? lo : hi) = x;
    double next = x - g / ell_second_derivative(m, x);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * x) {
      x = next;
      break;
    }
    x = next;
  }
  return {x, ell(m, x)};
}

std::string_view to_string(BranchSide side) {
  switch (side) {
    case BranchSide::TowardBifurcation: return "toward_bifurcation";
    case BranchSide::AwayFromBifurcation: return "away_from_bifurcation";
    case BranchSide::Onset: return "onset";
  }
  return "unknown";
}

std::vector<NonradialSolution> nonradial_solutions(StiffnessRatio m, LoadMagnitude alpha,
                                                   double onset_tol) {
  const double a = alpha.value();
  const BranchOnset onset = ell_min(m);
  const double flat = onset.lambda_flat;
  auto triple = [&](double l1) {
    return PrincipalStretches::two_equal(l1, branch_lambda2(m, l1));
  };

  if (a < onset.alpha_flat - onset_tol) return {};
  if (std::abs(a - onset.alpha_flat) <= onset_tol)
    return {{triple(flat), BranchSide::Onset}};

  // ell decreases on (0, flat) and increases on (flat, inf)
  double lo = flat / 2.0;
  while (ell(m, lo) <= a) lo /= 2.0;
  const double left = bracketed_root([&](double x) { return a - ell(m, x); },
                                     [&](double x) { return -ell_derivative(m, x); }, lo, flat);
  double hi = flat * 2.0;
  while (ell(m, hi) <= a) hi *= 2.0;
  const double right = bracketed_root([&](double x) { return ell(m, x) - a; },
                                      [&](double x) { return ell_derivative(m, x); }, flat, hi);

  const bool star_left = invertibility_loss_radial(m) < flat;
  return {{triple(left), star_left ? BranchSide::TowardBifurcation
                                   : BranchSide::AwayFromBifurcation},
          {triple(right), star_left ? BranchSide::AwayFromBifurcation
                                    : BranchSide::TowardBifurcation}};
}

BifurcationReport bifurcation_point(StiffnessRatio m) {
  BifurcationReport r{};
  r.lambda_star = invertibility_loss_radial(m);
  r.alpha_star = f_biot(m, r.lambda_star);
  const BranchOnset onset = ell_min(m);
  r.lambda_flat = onset.lambda_flat;
  r.alpha_flat = onset.alpha_flat;
  r.sextic_residual = std::abs(radial_sextic(m, r.lambda_star));
  r.onset_slope = std::abs(ell_derivative(m, r.lambda_flat));
  if (!(r.alpha_flat <= r.alpha_star))
    throw std::logic_error("branch onset load exceeds the bifurcation load");
  return r;
}

double stress_residual(StiffnessRatio m, const PrincipalStretches& s, LoadMagnitude alpha) {
  const StressTriple t = principal_biot(m, s);
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i) r = std::max(r, std::abs(t[i] - alpha.value()));
  return r;
}

NewtonResult solve_full_system(StiffnessRatio m, LoadMagnitude alpha,
                               const PrincipalStretches& initial, NewtonOptions options) {
  const double a = alpha.value();
  auto residual_vec = [&](const Vec3& x) {
    const StressTriple t = principal_biot(m, PrincipalStretches(x));
    return Vec3{t[0] - a, t[1] - a, t[2] - a};
  };
  auto norm2 = [](const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
  auto max_abs = [](const Vec3& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  };

  Vec3 x = initial.values();
  Vec3 r = residual_vec(x);
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (max_abs(r) <= options.tolerance) break;
    const JacobianDT jac = jacobian_dt(m, PrincipalStretches(x));
    const auto step = solve_linear(jac.matrix().full(), Vec3{-r[0], -r[1], -r[2]});
    if (!step) break;

    double t = 1.0;
    auto trial = [&](double tt) {
      return Vec3{x[0] + tt * (*step)[0], x[1] + tt * (*step)[1], x[2] + tt * (*step)[2]};
    };
    auto positive = [](const Vec3& v) { return v[0] > 0.0 && v[1] > 0.0 && v[2] > 0.0; };
    int halvings = 0;
    while (!positive(trial(t)) && halvings < 60) t *= 0.5, ++halvings;
    if (!positive(trial(t))) break;

    const double base = norm2(r);
    Vec3 xn = trial(t), rn = residual_vec(xn);
    while (!(norm2(rn) <= (1.0 - 1e-4 * t) * base) && halvings < 60) {
      t *= 0.5, ++halvings;
      xn = trial(t);
      rn = residual_vec(xn);
    }
    if (!(norm2(rn) < base)) break;  // stagnated at a non-solution
    x = xn;
    r = rn;
  }
  const double res = max_abs(r);
  return {PrincipalStretches(x), res <= options.tolerance, it, res};
}

DistinctStretchReport distinct_stretch_scan(StiffnessRatio m, LoadMagnitude alpha, int trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw DomainError("distinct_stretch_scan needs at least one trial");

  DistinctStretchReport rep{seed, trials, 0, 0, 0, {}};
  const double beta = radial_solution(m, alpha);
  rep.clusters.push_back({"radial", PrincipalStretches::radial(beta), 0});
  const auto nonradial = nonradial_solutions(m, alpha);
  for (const auto& sol : nonradial) {
    const bool away = sol.side == BranchSide::AwayFromBifurcation;
    rep.clusters.push_back(
        {away ? "nonradial_b" : "nonradial_a", sol.stretches.sorted_descending(), 0});
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.3, 3.0);
  auto distinct = [](const Vec3& v, double gap) {
    return std::abs(v[0] - v[1]) > gap && std::abs(v[1] - v[2]) > gap &&
           std::abs(v[0] - v[2]) > gap;
  };

  for (int k = 0; k < trials; ++k) {
    Vec3 start{};
    do {
      start = {uni(rng), uni(rng), uni(rng)};
    } while (!distinct(start, 1e-6));

    const NewtonResult res = solve_full_system(m, alpha, PrincipalStretches(start));
    if (!res.converged) continue;
    ++rep.converged;
    const Vec3 s = res.stretches.sorted_descending().values();
    if (distinct(s, 1e-6)) ++rep.all_distinct;

    bool matched = false;
    for (auto& c : rep.clusters) {
      const Vec3& ctr = c.center.values();
      if (std::abs(s[0] - ctr[0]) <= 1e-4 && std::abs(s[1] - ctr[1]) <= 1e-4 &&
          std::abs(s[2] - ctr[2]) <= 1e-4) {
        ++c.count;
        matched = true;
        break;
      }
    }
    if (!matched) ++rep.unmatched;
  }
  return rep;
}

double total_energy_homogeneous(StiffnessRatio m, const PrincipalStretches& s,
                                LoadMagnitude alpha) {
  return energy_principal(m, s) - alpha.value() * s.sum();
}

std::string_view to_string(BranchLabel label) {
  switch (label) {
    case BranchLabel::Radial: return "radial";
    case BranchLabel::NonradialA: return "nonradial_a";
    case BranchLabel::NonradialB: return "nonradial_b";
  }
  return "unknown";
}

CubeSolutionSet solve_cube(StiffnessRatio m, LoadMagnitude alpha, double tol) {
  CubeSolutionSet set{alpha.value(), {}};
  auto record = [&](BranchLabel label, const PrincipalStretches& s) {
    const PointClassification c = classify_point(m, s, tol);
    set.solutions.push_back({label, s, stress_residual(m, s, alpha), c.monotonicity,
                             c.energetically_stable, energy_principal(m, s),
                             total_energy_homogeneous(m, s, alpha)});
  };
  record(BranchLabel::Radial, PrincipalStretches::radial(radial_solution(m, alpha)));
  for (const auto& sol : nonradial_solutions(m, alpha))
    record(sol.side == BranchSide::AwayFromBifurcation ? BranchLabel::NonradialB
                                                       : BranchLabel::NonradialA,
           sol.stretches);
  // nonradial_a before nonradial_b regardless of which side was solved first
  std::stable_sort(set.solutions.begin(), set.solutions.end(),
                   [](const SolutionRecord& x, const SolutionRecord& y) {
                     return static_cast<int>(x.label) < static_cast<int>(y.label);
                   });
  return set;
}

BranchTrace trace_branches(StiffnessRatio m, double alpha_min, double alpha_max, double step,
                           double tol) {
  if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) || !(alpha_min < alpha_max))
    throw DomainError("trace needs a finite range with alpha_min < alpha_max");
  if (!std::isfinite(step) || !(step >= 1e-9)) throw DomainError("trace step must be >= 1e-9");
  const double span = (alpha_max - alpha_min) / step;
  if (span > 1e7) throw DomainError("trace grid too large");

  const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  BranchTrace trace;
  trace.records.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    const double a = round12(alpha_min + static_cast<double>(k) * step);
    trace.records.push_back(solve_cube(m, LoadMagnitude(a), tol));
  }
  return trace;
}

}  // namespace biotcube
