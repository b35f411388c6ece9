#include "biotcube/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "biotcube/biot_stress.hpp"
#include "biotcube/criteria.hpp"
#include "biotcube/cube_solver.hpp"
#include "biotcube/tensor.hpp"

namespace biotcube {
namespace {

using Rng = std::mt19937_64;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Rotation3 random_rotation(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return Rotation3::from_quaternion(n(rng), n(rng), n(rng), n(rng));
}

PrincipalStretches random_stretches(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

double rel_err(double approx, double exact) {
  return std::abs(approx - exact) / std::max(1.0, std::abs(exact));
}

// Central difference of a scalar function of the stretches.
double partial(const std::function<double(const Vec3&)>& f, Vec3 x, int i) {
  const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
  Vec3 xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  return (f(xp) - f(xm)) / (2.0 * h);
}

class Suite {
 public:
  Suite(StiffnessRatio m, const VerifyOptions& o) : m_(m), o_(o), rng_(o.seed) {}

  std::vector<CheckResult> run() {
    tensor_checks();
    material_checks();
    biot_checks();
    criteria_checks();
    cube_checks();
    return std::move(out_);
  }

 private:
  int count(int full) const { return o_.quick ? std::max(10, full / 10) : full; }

  void add(const char* module, const char* name, bool ok, std::string detail) {
    out_.push_back({module, name, ok, std::move(detail)});
  }

  void tensor_checks() {
    double worst = 0.0;
    for (int k = 0; k < count(1000); ++k) {
      const SymMatrix3 s(uniform(rng_, -5, 5), uniform(rng_, -5, 5), uniform(rng_, -5, 5),
                         uniform(rng_, -5, 5), uniform(rng_, -5, 5), uniform(rng_, -5, 5));
      const SymEigen e = sym_eigen(s);
      const SymMatrix3 back = conjugate(e.vectors, SymMatrix3::diagonal(e.values));
      worst = std::max(worst, frobenius_norm(back - s) / std::max(1.0, frobenius_norm(s)));
    }
    add("tensor_core", "eigen_reconstruction", worst <= 1e-10, "max rel err " + fmt(worst));

    worst = 0.0;
    for (int k = 0; k < count(100); ++k) {
      Vec3 d{uniform(rng_, -3, 3), uniform(rng_, -3, 3), uniform(rng_, -3, 3)};
      const SymEigen e = sym_eigen(conjugate(random_rotation(rng_), SymMatrix3::diagonal(d)));
      std::sort(d.begin(), d.end(), std::greater<>());
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(e.values[i] - d[i]));
    }
    add("tensor_core", "conjugation_preserves_spectrum", worst <= 1e-10,
        "max abs err " + fmt(worst));

    int compared = 0, disagree = 0;
    for (int k = 0; k < count(1000); ++k) {
      const SymMatrix3 s(uniform(rng_, -1, 3), uniform(rng_, -1, 3), uniform(rng_, -1, 3),
                         uniform(rng_, -1, 1), uniform(rng_, -1, 1), uniform(rng_, -1, 1));
      const Vec3 mn = s.leading_minors();
      if (std::abs(mn[0]) <= 1e-6 || std::abs(mn[1]) <= 1e-6 || std::abs(mn[2]) <= 1e-6)
        continue;
      ++compared;
      const bool sylvester = mn[0] > 0 && mn[1] > 0 && mn[2] > 0;
      const bool eig = is_positive_definite(s, 0.0) == Definiteness::PositiveDefinite;
      if (sylvester != eig) ++disagree;
    }
    add("tensor_core", "definiteness_matches_sylvester", disagree == 0,
        std::to_string(disagree) + " of " + std::to_string(compared) + " disagree");
  }

  void material_checks() {
    const CiarletGeymonatVolumetric h(m_);
    double worst = 0.0;
    bool convex = true;
    for (int k = 0; k < 100; ++k) {
      const double x = std::pow(10.0, -3.0 + 6.0 * k / 99.0);
      const double dx = 1e-5 * x;
      const double d1 = (h.value(x + dx) - h.value(x - dx)) / (2 * dx);
      const double d2 = (h.first(x + dx) - h.first(x - dx)) / (2 * dx);
      worst = std::max({worst, rel_err(d1, h.first(x)), rel_err(d2, h.second(x))});
      convex = convex && h.second(x) > 0.0;
    }
    add("material", "volumetric_derivatives_match_fd", worst <= 1e-6, "max rel err " + fmt(worst));
    add("material", "volumetric_convex", convex, convex ? "h'' > 0 at all samples" : "h'' <= 0");

    bool symmetric = true;
    const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int k = 0; k < count(100); ++k) {
      const PrincipalStretches s = random_stretches(rng_, 0.3, 3.0);
      const double g = energy_principal(m_, s);
      for (const auto& p : perms) symmetric = symmetric && energy_principal(m_, s.permuted(p)) == g;
    }
    add("material", "energy_permutation_symmetric", symmetric, symmetric ? "exact" : "mismatch");

    bool increasing = true;
    double prev = -INFINITY;
    for (int k = 0; k < 1201; ++k) {
      const double r = radial_scalar_response(h, std::pow(10.0, -6.0 + 12.0 * k / 1200.0));
      increasing = increasing && r > prev;
      prev = r;
    }
    add("material", "radial_response_increasing", increasing, "1201 samples on [1e-6, 1e6]");
  }

  void biot_checks() {
    double worst = 0.0;
    const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int k = 0; k < count(100); ++k) {
      const PrincipalStretches s = random_stretches(rng_, 0.5, 2.0);
      const StressTriple t = principal_biot(m_, s);
      for (const auto& p : perms) {
        const StressTriple tp = principal_biot(m_, s.permuted(p));
        for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_err(tp[i], t[p[i]]));
      }
    }
    add("biot_stress", "permutation_equivariance", worst <= 1e-12, "max rel err " + fmt(worst));

    auto g = [this](const Vec3& x) { return energy_principal(m_, PrincipalStretches(x)); };
    double worst_grad = 0.0, worst_hess = 0.0;
    for (int k = 0; k < count(100); ++k) {
      const PrincipalStretches s = random_stretches(rng_, 0.5, 2.0);
      const StressTriple t = principal_biot(m_, s);
      const JacobianDT dt = jacobian_dt(m_, s);
      for (int i = 0; i < 3; ++i) {
        worst_grad = std::max(worst_grad, rel_err(partial(g, s.values(), i), t[i]));
        for (int j = 0; j < 3; ++j) {
          auto ti = [this, i](const Vec3& x) { return principal_biot(m_, PrincipalStretches(x))[i]; };
          worst_hess = std::max(worst_hess, rel_err(partial(ti, s.values(), j), dt(i, j)));
        }
      }
    }
    add("biot_stress", "stress_is_energy_gradient", worst_grad <= 1e-6,
        "max rel err " + fmt(worst_grad));
    add("biot_stress", "jacobian_is_stress_derivative", worst_hess <= 1e-5,
        "max rel err " + fmt(worst_hess));

    double worst_iso = 0.0, worst_polar = 0.0;
    for (int k = 0; k < count(100); ++k) {
      const SymMatrix3 u = conjugate(random_rotation(rng_),
                                     SymMatrix3::diagonal(random_stretches(rng_, 0.5, 2.0).values()));
      const Rotation3 q = random_rotation(rng_);
      const SymMatrix3 lhs = biot_matrix(m_, conjugate(q, u));
      const SymMatrix3 rhs = conjugate(q, biot_matrix(m_, u));
      worst_iso = std::max(worst_iso, frobenius_norm(lhs - rhs));

      const Matrix3 f = q.matrix() * u.full();
      const Matrix3 back = q.matrix().transpose() * first_piola(m_, DeformationGradient(f));
      worst_polar = std::max(worst_polar, frobenius_norm(back - biot_matrix(m_, u).full()));
    }
    add("biot_stress", "isotropy", worst_iso <= 1e-10, "max Frobenius err " + fmt(worst_iso));
    add("biot_stress", "polar_consistency", worst_polar <= 1e-10,
        "max Frobenius err " + fmt(worst_polar));

    worst = 0.0;
    for (int k = 0; k < count(200); ++k) {
      const double l = uniform(rng_, 0.3, 3.0);
      const Vec3 mn = jacobian_dt(m_, PrincipalStretches::radial(l)).leading_minors();
      const RadialMinors r = minors_radial(m_, l);
      worst = std::max({worst, rel_err(r.m1, mn[0]), rel_err(r.m2, mn[1]), rel_err(r.m3, mn[2]),
                        rel_err(det_jacobian_radial(m_, l), mn[2])});
      const double l2 = uniform(rng_, 0.3, 3.0);
      const Vec3 mt = jacobian_dt(m_, PrincipalStretches::two_equal(l, l2)).leading_minors();
      const TwoEqualMinors te = minors_two_equal(m_, l, l2);
      worst = std::max({worst, rel_err(te.m1, mt[0]), rel_err(te.m2, mt[1])});
    }
    add("biot_stress", "closed_form_minors", worst <= 1e-9, "max rel err " + fmt(worst));
  }

  void criteria_checks() {
    const double tol = o_.tol;
    int compared = 0, disagree = 0;
    for (int k = 0; k < count(1000); ++k) {
      const PrincipalStretches s = random_stretches(rng_, 0.3, 3.0);
      const Vec3 mn = jacobian_dt(m_, s).leading_minors();
      if (std::abs(mn[0]) <= 1e-6 || std::abs(mn[1]) <= 1e-6 || std::abs(mn[2]) <= 1e-6) continue;
      ++compared;
      const bool sylvester = mn[0] > 0 && mn[1] > 0 && mn[2] > 0;
      if (sylvester != (classify_monotonicity(m_, s, 0.0) == Monotonicity::StronglyMonotone))
        ++disagree;
    }
    add("criteria", "monotonicity_matches_sylvester", disagree == 0,
        std::to_string(disagree) + " of " + std::to_string(compared) + " disagree");

    const double star = invertibility_loss_radial(m_);
    const double delta = 1e-3;
    std::string bad;
    for (int k = 0; k < 400 && bad.empty(); ++k) {
      const double l = 0.2 + (3.0 * star - 0.2) * k / 399.0;
      const auto s = PrincipalStretches::radial(l);
      const Monotonicity mono = classify_monotonicity(m_, s, tol);
      if (l < star - delta && mono != Monotonicity::StronglyMonotone) bad = "l = " + fmt(l);
      if (l > star + delta && mono != Monotonicity::NotMonotone) bad = "l = " + fmt(l);
      const bool stable = energetic_stability(m_, s, tol);
      const bool expect_stable = l >= 1.0 + delta && l <= star - delta;
      const bool expect_unstable = l < 1.0 - delta || l > star + delta;
      if ((expect_stable && !stable) || (expect_unstable && stable)) bad = "stability at l = " + fmt(l);
    }
    add("criteria", "radial_monotonicity_and_stability_window", bad.empty(),
        bad.empty() ? "lambda* = " + fmt(star) : bad);

    const std::size_t n = o_.quick ? 30 : 100;
    const auto grid = region_scan(m_, ScanDomain::two_equal({0.5, 3.0}, n), ScanMode::Stability, tol);
    int violations = 0, stable_points = 0;
    for (const auto& p : grid) {
      if (!p.classification.energetically_stable) continue;
      ++stable_points;
      if (p.classification.monotonicity == Monotonicity::NotMonotone) ++violations;
    }
    add("criteria", "stability_implies_monotonicity", violations == 0,
        std::to_string(stable_points) + " stable points, " + std::to_string(violations) +
            " not monotone");

    const bool table = epsilon_sign(0, 1) == 1 && epsilon_sign(1, 2) == 1 &&
                       epsilon_sign(2, 0) == 1 && epsilon_sign(1, 0) == -1 &&
                       epsilon_sign(2, 1) == -1 && epsilon_sign(0, 2) == -1;
    add("criteria", "epsilon_table", table, "six ordered pairs");
  }

  void cube_checks() {
    const BifurcationReport rep = bifurcation_point(m_);
    const double crossing = std::max(std::abs(ell(m_, rep.lambda_star) - rep.alpha_star),
                                     std::abs(f_biot(m_, rep.lambda_star) - rep.alpha_star));
    add("cube_solver", "branch_crossing_identity",
        crossing <= 1e-6 && rep.sextic_residual <= 1e-12 && rep.alpha_flat <= rep.alpha_star,
        "crossing err " + fmt(crossing) + ", sextic residual " + fmt(rep.sextic_residual));

    double worst = 0.0;
    const double M = m_.value();
    for (int k = 0; k < count(100); ++k) {
      const double a = uniform(rng_, 0.3, 3.0), b = uniform(rng_, 0.3, 3.0);
      const StressTriple t = principal_biot(m_, PrincipalStretches::two_equal(a, b));
      const double closed = -(a - b) * ((3 * M - 2) * a * a * a * a * b * b - 3 * M - 6 * a * b - 4) /
                            (6 * a * b);
      worst = std::max(worst, std::abs((t[0] - t[2]) - closed) / std::max(1.0, std::abs(closed)));
    }
    add("cube_solver", "two_equal_factorization", worst <= 1e-10, "max rel err " + fmt(worst));

    bool convex = true;
    double min_second = INFINITY;
    for (int k = 0; k < 1000; ++k) {
      const double x = rep.lambda_flat * std::pow(10.0, -1.0 + 2.0 * k / 999.0);
      const double h = 1e-3 * x;
      const double d2 = (ell(m_, x + h) - 2 * ell(m_, x) + ell(m_, x - h)) / (h * h);
      convex = convex && d2 > 0.0;
      min_second = std::min(min_second, d2);
    }
    add("cube_solver", "ell_convex", convex, "min fd ell'' " + fmt(min_second));

    const double a_lo = std::min(-2.0, rep.alpha_flat - 2.0);
    const double a_hi = rep.alpha_star + 2.0;
    const BranchTrace trace = trace_branches(m_, a_lo, a_hi, o_.quick ? 0.25 : 0.05, o_.tol);
    double worst_res = 0.0;
    int dichotomy_bad = 0, coincidence_bad = 0, count_bad = 0;
    double prev_beta = 0.0;
    bool beta_increasing = true;
    for (const auto& rec : trace.records) {
      const std::size_t nonradial = rec.solutions.size() - 1;
      if (rec.alpha < rep.alpha_flat - kOnsetTol && nonradial != 0) ++count_bad;
      if (rec.alpha > rep.alpha_flat + kOnsetTol && nonradial != 2) ++count_bad;
      for (const auto& s : rec.solutions) {
        worst_res = std::max(worst_res, s.residual);
        if (s.label == BranchLabel::Radial) {
          beta_increasing = beta_increasing && s.stretches[0] > prev_beta;
          prev_beta = s.stretches[0];
          continue;
        }
        if (std::abs(rec.alpha - rep.alpha_star) < 1e-6 || std::abs(rec.alpha - rep.alpha_flat) < 1e-6)
          continue;
        const Monotonicity want = s.label == BranchLabel::NonradialA ? Monotonicity::NotMonotone
                                                                     : Monotonicity::StronglyMonotone;
        if (s.monotonicity != want) ++dichotomy_bad;
        if (s.stable != (s.monotonicity == Monotonicity::StronglyMonotone)) ++coincidence_bad;
      }
    }
    add("cube_solver", "solution_count_transition", count_bad == 0,
        std::to_string(count_bad) + " loads with the wrong number of non-radial solutions");
    add("cube_solver", "solution_residuals", worst_res <= 1e-9, "max residual " + fmt(worst_res));
    add("cube_solver", "radial_map_increasing", beta_increasing, "over the traced loads");
    add("cube_solver", "branch_monotonicity_dichotomy", dichotomy_bad == 0,
        std::to_string(dichotomy_bad) + " branch points misclassified");
    add("cube_solver", "nonradial_stability_equals_monotonicity", coincidence_bad == 0,
        std::to_string(coincidence_bad) + " mismatches");

    const DistinctStretchReport scan =
        distinct_stretch_scan(m_, LoadMagnitude(rep.alpha_star + 1.0), count(200), o_.seed);
    add("cube_solver", "no_all_distinct_solutions", scan.all_distinct == 0 && scan.unmatched == 0,
        std::to_string(scan.converged) + " converged, " + std::to_string(scan.all_distinct) +
            " all-distinct, " + std::to_string(scan.unmatched) + " unmatched");
  }

  StiffnessRatio m_;
  VerifyOptions o_;
  Rng rng_;
  std::vector<CheckResult> out_;
};

}  // namespace

std::vector<CheckResult> run_verification(StiffnessRatio m, const VerifyOptions& options) {
  return Suite(m, options).run();
}

}  // namespace biotcube
