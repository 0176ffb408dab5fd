// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "dirkit/binomial.hpp"
#include "dirkit/dirichlet.hpp"
#include "dirkit/green.hpp"
#include "dirkit/operators.hpp"
#include "dirkit/quadrature.hpp"
#include "dirkit/rng.hpp"

namespace dirkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Runs n independent jobs on up to `threads` workers; job i writes only its
/// own results, so the outcome does not depend on the thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& job) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) job(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

Polynomial random_polynomial(Rng& rng, int max_degree, int min_degree = 1) {
  const int deg = rng.uniform_int(min_degree, max_degree);
  std::vector<cplx> coeffs(static_cast<std::size_t>(deg) + 1);
  for (cplx& c : coeffs) c = rng.complex_in_square();
  if (coeffs.back() == cplx{0.0, 0.0}) coeffs.back() = 1.0;
  return Polynomial(std::move(coeffs));
}

/// Distribution with density |q|^2 against Lebesgue measure: the coefficients
/// are the autocorrelations of q, exactly computable and nonnegative.
CircleDistribution density_from_square(const std::vector<cplx>& q) {
  const int d = static_cast<int>(q.size()) - 1;
  std::map<long, cplx> coeffs;
  for (int n = -d; n <= d; ++n) {
    cplx acc{0.0, 0.0};
    for (int b = std::max(0, -n); b <= d && b + n <= d; ++b)
      acc += q[static_cast<std::size_t>(b + n)] * std::conj(q[static_cast<std::size_t>(b)]);
    coeffs[n] = acc;
  }
  return CircleDistribution::fourier(std::move(coeffs), true);
}

/// Random positive circle distribution with exactly computable coefficients.
CircleDistribution random_positive_circle(Rng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0: {  // scaled Lebesgue
      const double c = rng.uniform(0.2, 2.0);
      return CircleDistribution::fourier({{0, {c, 0.0}}}, true);
    }
    case 1: {  // circle atoms
      std::vector<CircleAtom> atoms;
      const int n = rng.uniform_int(1, 3);
      for (int i = 0; i < n; ++i) atoms.push_back({rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.1, 1.0)});
      return CircleDistribution::point_atoms(std::move(atoms));
    }
    default: {  // |q|^2 density, diagonally dominant so the density is positive
      std::vector<cplx> q(static_cast<std::size_t>(rng.uniform_int(2, 4)));
      q[0] = 1.0;
      for (std::size_t i = 1; i < q.size(); ++i) q[i] = 0.2 * rng.complex_in_square();
      return density_from_square(q);
    }
  }
}

DiscMeasure random_measure(Rng& rng, bool with_boundary_atoms = true) {
  std::vector<DiscAtom> atoms;
  const int interior = rng.uniform_int(0, 2);
  for (int i = 0; i < interior; ++i)
    atoms.push_back({DiscPoint(rng.point_in_disc(0.9)), rng.uniform(0.1, 1.0)});
  if (with_boundary_atoms && rng.uniform_int(0, 1) == 1)
    atoms.push_back({DiscPoint(std::polar(1.0, rng.uniform(0.0, 2.0 * kPi))), rng.uniform(0.1, 1.0)});
  CircleDistribution circle =
      rng.uniform_int(0, 1) == 1 ? random_positive_circle(rng) : CircleDistribution::zero();
  if (atoms.empty() && rng.uniform_int(0, 2) == 0) circle = CircleDistribution::lebesgue();
  DiscMeasure m(std::move(atoms), std::move(circle));
  if (m.is_zero()) return DiscMeasure::dirac(DiscPoint(rng.point_in_disc(0.8)));
  return m;
}

std::string zname(cplx z) {
  return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

}  // namespace

int effective_thread_count(const VerifyConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("DIRKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// --------------------------------------------------------------------------
// Local Douglas formula: quadrature route vs difference-quotient route.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_local_douglas(const VerifyConfig& config) {
  Rng rng = Rng(config.seed).split("douglas");
  const int samples = config.douglas_samples;
  QuadratureSpec spec;

  struct Case {
    Polynomial f;
    DiscPoint zeta{cplx{0.0, 0.0}};
    int k = 1;
    double tol = 0.0;
    std::string name;
  };
  std::vector<Case> cases;
  std::vector<int> orders;
  if (config.douglas_k) {
    orders = {*config.douglas_k};
  } else {
    orders = {1, 2, 3, 4};
  }
  for (int i = 0; i < samples; ++i) {
    const Polynomial f = random_polynomial(rng, 12);
    const DiscPoint zeta(rng.point_in_disc(0.9));
    for (int k : orders) {
      Case c;
      c.f = f;
      c.zeta = zeta;
      c.k = k;
      c.tol = (k == 1 ? 1e-4 : 1e-8) * config.tol_scale;
      c.name = "douglas/local/k=" + std::to_string(k) + "/case=" + std::to_string(i);
      cases.push_back(std::move(c));
    }
  }
  // near-boundary battery at |zeta| = 0.99
  for (int i = 0; i < 8; ++i) {
    Case c;
    c.f = random_polynomial(rng, 8);
    c.zeta = DiscPoint(std::polar(0.99, rng.uniform(0.0, 2.0 * kPi)));
    c.k = rng.uniform_int(1, 3);
    c.tol = 1e-4 * config.tol_scale;
    c.name = "douglas/near-boundary/k=" + std::to_string(c.k) + "/case=" + std::to_string(i);
    cases.push_back(std::move(c));
  }

  std::vector<CheckRecord> records(cases.size());
  parallel_for(static_cast<int>(cases.size()), effective_thread_count(config), [&](int i) {
    const Case& c = cases[static_cast<std::size_t>(i)];
    const ComparisonReport rep = verify_local_douglas(c.f, c.k, c.zeta, spec);
    CheckRecord r = make_check(c.name, rep.lhs, rep.rhs, c.tol);
    records[static_cast<std::size_t>(i)] = std::move(r);
  });
  return records;
}

// --------------------------------------------------------------------------
// Monomial local form: closed form vs H-kernel assembly vs quadrature.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_monomial_formula(const VerifyConfig& config) {
  const std::vector<cplx> zetas{{0.0, 0.0}, {0.5, 0.0}, {0.3, 0.4}, {0.99, 0.0}};
  QuadratureSpec spec;

  struct Case {
    int k, m, n;
    cplx zeta;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= 6; ++k)
    for (int m = k; m <= 6; ++m)
      for (int n = m; n <= 6; ++n)
        for (cplx zeta : zetas) cases.push_back({k, m, n, zeta});

  std::vector<std::vector<CheckRecord>> partial(cases.size());
  parallel_for(static_cast<int>(cases.size()), effective_thread_count(config), [&](int i) {
    const Case& c = cases[static_cast<std::size_t>(i)];
    const bool near_boundary = std::abs(c.zeta) > 0.95;
    const double tol = (near_boundary ? 1e-4 : 1e-8) * config.tol_scale;
    const std::string tag = "k=" + std::to_string(c.k) + "/m=" + std::to_string(c.m) +
                            "/n=" + std::to_string(c.n) + "/zeta=" + zname(c.zeta);
    const cplx closed = d_point_monomial(c.m, c.n, c.k, c.zeta);
    const cplx assembly = hk_assembly_monomial(c.m, c.n, c.k, c.zeta);
    const cplx quad = dirichlet_pair_quadrature(Polynomial::monomial(c.m), Polynomial::monomial(c.n),
                                                c.k, DiscPoint(c.zeta), spec)
                          .value;
    auto& out = partial[static_cast<std::size_t>(i)];
    out.push_back(make_check("monomial/assembly/" + tag,
                             std::abs(closed - assembly) / (1.0 + std::abs(closed)), 0.0, tol));
    out.push_back(make_check("monomial/quadrature/" + tag,
                             std::abs(closed - quad) / (1.0 + std::abs(closed)), 0.0, tol));
    // H-kernel integral identity on the same tuple
    const ComparisonReport hk = verify_hk_integral(c.m, c.n, c.k, DiscPoint(c.zeta), spec);
    out.push_back(make_check("monomial/hk-integral/" + tag, hk.lhs, hk.rhs, tol));
  });

  std::vector<CheckRecord> records;
  for (auto& p : partial)
    for (CheckRecord& r : p) records.push_back(std::move(r));
  return records;
}

// --------------------------------------------------------------------------
// Exact integer identities in rational arithmetic.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_exact_identities(const VerifyConfig& config) {
  (void)config;
  std::vector<CheckRecord> records;
  const std::vector<std::pair<std::string, BigRational>> rs = {
      {"-2", BigRational(-2)}, {"-1", BigRational(-1)},         {"0", BigRational(0)},
      {"1/2", BigRational::ratio(1, 2)}, {"1", BigRational(1)}, {"2", BigRational(2)},
      {"3", BigRational(3)}};
  for (const auto& [label, r] : rs) {
    int passed = 0, total = 0;
    for (int m = 0; m <= 30; ++m)
      for (int k = 0; k <= m; ++k) {
        ++total;
        if (sum_lemma_check(m, k, r)) ++passed;
      }
    CheckRecord rec;
    rec.name = "identities/sum-lemma/r=" + label;
    rec.lhs = passed;
    rec.rhs = total;
    rec.abs_err = total - passed;
    rec.rel_err = rec.abs_err;
    rec.tolerance = 0.0;
    rec.pass = passed == total;
    records.push_back(std::move(rec));
  }
  const std::vector<std::pair<std::string, BigRational>> xs = {
      {"-1", BigRational(-1)}, {"0", BigRational(0)}, {"1/2", BigRational::ratio(1, 2)},
      {"1", BigRational(1)},   {"2", BigRational(2)}, {"3", BigRational(3)}};
  for (const auto& [label, x] : xs) {
    int passed = 0, total = 0;
    for (int n = 1; n <= 30; ++n)
      for (int m = 0; m < n; ++m) {
        ++total;
        if (magic_identity_check(n, m, x)) ++passed;
      }
    CheckRecord rec;
    rec.name = "identities/magic/x=" + label;
    rec.lhs = passed;
    rec.rhs = total;
    rec.abs_err = total - passed;
    rec.rel_err = rec.abs_err;
    rec.tolerance = 0.0;
    rec.pass = passed == total;
    records.push_back(std::move(rec));
  }
  return records;
}

// --------------------------------------------------------------------------
// Green kernel suite on a polar grid.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_green_kernel(const VerifyConfig& config) {
  std::vector<CheckRecord> records;
  Rng rng = Rng(config.seed).split("green");

  // 40 radii (35 uniform plus the probes |z| = 1 - 10^{-t}, t = 2..6),
  // 40 angles, 20 zeta samples
  std::vector<double> radii;
  for (int i = 0; i < 35; ++i) radii.push_back(0.02 + 0.93 * i / 34.0);
  for (int t = 2; t <= 6; ++t) radii.push_back(1.0 - std::pow(10.0, -t));
  std::vector<double> angles;
  for (int i = 0; i < 40; ++i) angles.push_back(2.0 * kPi * (i + 0.37) / 40.0);
  std::vector<cplx> zetas, mobius_params;
  for (int i = 0; i < 20; ++i) {
    zetas.push_back(rng.point_in_disc(0.9));
    mobius_params.push_back(rng.point_in_disc(0.8));
  }

  for (int k = 1; k <= 8; ++k) {
    double worst_recurrence = 0.0, worst_mobius = 0.0, worst_symmetry = 0.0;
    double sandwich_violation = 0.0, positivity_min = 1e300, vanish_violation = 0.0;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    for (std::size_t zi = 0; zi < zetas.size(); ++zi) {
      const cplx zeta = zetas[zi];
      const MobiusMap phi(mobius_params[zi]);
      for (double r : radii) {
        for (double t : angles) {
          const cplx z = std::polar(r, t);
          if (std::abs(z - zeta) < 1e-9) continue;
          const double gk = green_k(k, z, zeta);
          const double scale = 1.0 + std::abs(gk);
          if (k >= 2)
            worst_recurrence = std::max(worst_recurrence,
                                        std::abs(green_recurrence_residual(k, z, zeta)) / scale);
          worst_mobius =
              std::max(worst_mobius, std::abs(mobius_transport_residual(k, phi, z, zeta)) / scale);
          worst_symmetry = std::max(worst_symmetry, std::abs(gk - green_k(k, zeta, z)) / scale);
          const double u = sign * gk;
          positivity_min = std::min(positivity_min, u);
          if (k >= 2) {
            const double lo = green_sandwich_lower(k, z, zeta);
            const double hi = green_sandwich_upper(k, z, zeta);
            sandwich_violation = std::max({sandwich_violation, (lo - u) / hi, (u - hi) / hi});
            // boundary vanishing: |G_k| within twice the sandwich upper bound
            vanish_violation = std::max(vanish_violation, (std::abs(gk) - 2.0 * hi) / hi);
          }
        }
      }
    }
    const std::string kk = "/k=" + std::to_string(k);
    if (k >= 2) {
      records.push_back(make_check("green/recurrence" + kk, worst_recurrence, 0.0, 1e-11 * config.tol_scale));
      records.push_back(make_check("green/sandwich" + kk, std::max(0.0, sandwich_violation), 0.0,
                                   1e-12 * config.tol_scale));
      records.push_back(make_check("green/boundary-vanishing" + kk, std::max(0.0, vanish_violation), 0.0,
                                   1e-12 * config.tol_scale));
    }
    records.push_back(make_check("green/mobius" + kk, worst_mobius, 0.0, 1e-11 * config.tol_scale));
    records.push_back(make_check("green/symmetry" + kk, worst_symmetry, 0.0, 1e-11 * config.tol_scale));
    records.push_back(make_bound_check("green/positivity" + kk, positivity_min, 0.0));
  }

  // finite-difference Laplacian relation at 200 random points; the sample
  // keeps the stencil away from the boundary and the diagonal, where the
  // second-order truncation and the |G| rounding amplification stay small
  {
    double worst = 0.0;
    int count = 0;
    while (count < 200) {
      const int k = rng.uniform_int(2, 6);
      const cplx z = rng.point_in_disc(0.8);
      const cplx zeta = rng.point_in_disc(0.8);
      if (std::abs(z - zeta) < 0.1) continue;
      worst = std::max(worst, std::abs(laplacian_relation_residual(k, z, zeta)));
      ++count;
    }
    records.push_back(make_check("green/laplacian-fd", worst, 0.0, 1e-5 * config.tol_scale));
  }

  // series ratio: partial sums against the direct kernel, plus the limits
  for (int k = 2; k <= 8; ++k) {
    const double x = 0.5;
    const double z_abs = std::sqrt(1.0 - x);
    const double direct_sign = (k % 2 == 0) ? -1.0 : 1.0;
    const double direct = direct_sign * green_k(k, {z_abs, 0.0}, {0.0, 0.0}) / std::pow(x, k);
    records.push_back(make_check("green/series/k=" + std::to_string(k),
                                 g_ratio_series(k, x, 80), direct, 1e-11 * config.tol_scale));
  }
  records.push_back(make_check("green/series-limit-zero", g_ratio_series(2, 1e-9, 40), 0.5,
                               1e-8 * config.tol_scale));
  records.push_back(make_check("green/series-limit-one", g_ratio_series(2, 1.0 - 1e-4, 200000), 1.0,
                               2e-3 * config.tol_scale));
  {
    // monotone ratio witness: all series coefficients positive
    bool all_positive = true;
    for (int k = 2; k <= 8; ++k)
      for (int n = 0; n <= 200; ++n) {
        double denom = 1.0;
        for (int i = 1; i <= k; ++i) denom *= n + i;
        if (!(1.0 / denom > 0.0)) all_positive = false;
      }
    records.push_back(make_bound_check("green/series-coefficients-positive", all_positive ? 1.0 : -1.0, 0.0));
  }
  return records;
}

// --------------------------------------------------------------------------
// Difference and shift identities (closed forms only).
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_difference_identities(const VerifyConfig& config) {
  Rng rng = Rng(config.seed).split("difference");
  const double tol = 1e-10 * config.tol_scale;
  const int cases = 200;

  double worst_diff = 0.0, worst_osu = 0.0, worst_osu_dist = 0.0, worst_annihilation = 0.0;
  double worst_backward = 0.0, worst_monotone = 0.0, worst_bounded = 0.0;
  double worst_dilation_excess = 0.0, worst_dilation_ratio = 0.0;
  double worst_hermitian = 0.0;
  bool iterates_ok = true;

  for (int i = 0; i < cases; ++i) {
    const Polynomial f = random_polynomial(rng, 10);
    const int k = rng.uniform_int(1, 4);
    const DiscMeasure mu = random_measure(rng);

    worst_diff = std::max(worst_diff, verify_difference_formula(f, k, mu).rel_err);
    worst_osu = std::max(worst_osu, verify_one_step_up(f, k - 1, mu).rel_err);

    const CircleDistribution dist = random_positive_circle(rng);
    worst_osu_dist = std::max(worst_osu_dist, verify_one_step_up(f, k, dist).rel_err);

    // distribution annihilation: sum_j (-1)^j C(n,j) D_{mu,k}(z^j f) = 0, n > k
    {
      const int n = k + rng.uniform_int(1, 3);
      cplx acc{0.0, 0.0};
      double scale = 1.0;
      for (int j = 0; j <= n; ++j) {
        const double s = (j % 2 == 0) ? 1.0 : -1.0;
        const Polynomial zjf = shift_up(f, j);
        const cplx term = d_circle(zjf, zjf, k, dist);
        acc += s * binom(n, j) * term;
        scale = std::max(scale, std::abs(term));
      }
      worst_annihilation = std::max(worst_annihilation, std::abs(acc) / scale);
    }

    // backward shift monotonicity and the decreasing iterates
    {
      const double base = d_measure(f, f, k, mu).real();
      double prev = base;
      const int deg = f.degree().value_or(0);
      for (int j = 1; j <= deg + 2; ++j) {
        const Polynomial lf = backward_shift_power(f, j);
        const double val = d_measure(lf, lf, k, mu).real();
        worst_backward = std::max(worst_backward, val - prev);
        if (j > deg && val != 0.0) iterates_ok = false;
        prev = val;
      }
    }

    // multiplication monotonicity
    {
      const Polynomial zf = shift_up(f);
      const double dzf = d_measure(zf, zf, k, mu).real();
      const double df = d_measure(f, f, k, mu).real();
      worst_monotone = std::max(worst_monotone, df - dzf);
    }

    // boundedness: D_{mu,k}(zf) <= D_{mu,1}(f) + k D_{mu,k}(f) for k >= 2
    if (k >= 2) {
      const Polynomial zf = shift_up(f);
      const double lhs = d_measure(zf, zf, k, mu).real();
      const double rhs = d_measure(f, f, 1, mu).real() + k * d_measure(f, f, k, mu).real();
      worst_bounded = std::max(worst_bounded, lhs - rhs);
    }

    // dilation bound
    {
      const double r = rng.unit();
      const DilationReport rep = verify_dilation_bound(f, k, mu, r);
      worst_dilation_excess = std::max(worst_dilation_excess, rep.dilated - 2.0 * rep.undilated);
      worst_dilation_ratio = std::max(worst_dilation_ratio, rep.observed_ratio);
    }

    // hermitian symmetry and first-slot linearity of the measure form
    {
      const Polynomial g = random_polynomial(rng, 10);
      const cplx fg = d_measure(f, g, k, mu);
      const cplx gf = d_measure(g, f, k, mu);
      worst_hermitian = std::max(worst_hermitian, std::abs(fg - std::conj(gf)));
      const cplx a = rng.complex_in_square();
      const cplx lin = d_measure(a * f + g, g, k, mu) - (a * fg + d_measure(g, g, k, mu));
      worst_hermitian = std::max(worst_hermitian, std::abs(lin));
    }
  }

  std::vector<CheckRecord> records;
  records.push_back(make_check("difference/formula", worst_diff, 0.0, tol));
  records.push_back(make_check("difference/one-step-up/measure", worst_osu, 0.0, tol));
  records.push_back(make_check("difference/one-step-up/distribution", worst_osu_dist, 0.0, tol));
  records.push_back(make_check("difference/annihilation", worst_annihilation, 0.0, tol));
  records.push_back(make_check("difference/backward-shift-monotone", std::max(0.0, worst_backward), 0.0,
                               1e-12 * config.tol_scale));
  records.push_back(make_bound_check("difference/backward-shift-vanishes", iterates_ok ? 1.0 : -1.0, 0.0));
  records.push_back(make_check("difference/multiplication-monotone", std::max(0.0, worst_monotone), 0.0,
                               1e-12 * config.tol_scale));
  records.push_back(make_check("difference/multiplier-bound", std::max(0.0, worst_bounded), 0.0, tol));
  records.push_back(make_check("difference/dilation-factor-two", std::max(0.0, worst_dilation_excess), 0.0, tol));
  records.push_back(make_bound_check("difference/dilation-observed-ratio", 1.0 + 1e-12 - worst_dilation_ratio, 0.0));
  records.push_back(make_check("difference/sesquilinear", worst_hermitian, 0.0, 1e-12 * config.tol_scale));

  // local form PSD on monomials
  {
    const int d = 12;
    Rng prng = rng.split("psd");
    double worst_min = 0.0;
    for (int t = 0; t < 10; ++t) {
      const cplx zeta = prng.point_in_disc(0.95);
      const int k = prng.uniform_int(1, 4);
      CMatrix m(d + 1, d + 1);
      for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) m(a, b) = d_point_monomial(b, a, k, zeta);
      worst_min = std::min(worst_min, min_eigenvalue(m));
    }
    records.push_back(make_bound_check("difference/local-form-psd", worst_min, -kPsdTol));
  }
  return records;
}

// --------------------------------------------------------------------------
// B_n structure of the multiplication operator.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_bn_structure(const VerifyConfig& config) {
  Rng rng = Rng(config.seed).split("bn");
  const double tol = 1e-10 * config.tol_scale;

  double worst_match = 0.0, worst_sign = 0.0, worst_isometry = 0.0, worst_low = 0.0;
  for (int t = 0; t < 20; ++t) {
    // mixture: interior atoms + boundary atoms + scaled Lebesgue
    std::vector<DiscAtom> atoms;
    const int ni = rng.uniform_int(1, 2);
    for (int i = 0; i < ni; ++i) atoms.push_back({DiscPoint(rng.point_in_disc(0.85)), rng.uniform(0.2, 1.0)});
    if (rng.uniform_int(0, 1))
      atoms.push_back({DiscPoint(std::polar(1.0, rng.uniform(0.0, 2.0 * kPi))), rng.uniform(0.2, 1.0)});
    const DiscMeasure mu(atoms, CircleDistribution::lebesgue());
    Polynomial f = random_polynomial(rng, 8, 0);
    f = (1.0 / std::sqrt(hardy_inner(f, f).real())) * f;
    const int k = rng.uniform_int(1, 4);

    for (int n = 1; n <= k + 6; ++n) {
      const double lhs = shift_bn_form(mu, k, f, n);
      const double scale = 1.0 + std::abs(lhs);
      const double ksign = (k % 2 == 0) ? 1.0 : -1.0;
      if (n < k) {
        const double rhs = ((n % 2 == 0) ? 1.0 : -1.0) * d_measure_any(f, f, k - n, mu).real();
        worst_low = std::max(worst_low, std::abs(lhs - rhs) / scale);
      } else if (n == k) {
        const double rhs = ksign * d_measure_zero(f, f, mu).real();
        worst_match = std::max(worst_match, std::abs(lhs - rhs) / scale);
      } else {
        double integral = 0.0;
        for (const DiscAtom& a : mu.interior_atoms())
          integral += a.mass * std::pow(1.0 - std::norm(a.point.value()), n - k) *
                      std::norm(f(a.point.value()));
        worst_match = std::max(worst_match, std::abs(lhs - ksign * integral) / scale);
      }
      if (n >= k) worst_sign = std::max(worst_sign, -(ksign * lhs) / scale);
    }

    // boundary-supported measure: (k+1)-isometry annihilation
    const DiscMeasure boundary_mu({}, CircleDistribution::lebesgue());
    worst_isometry = std::max(worst_isometry, std::abs(shift_bn_form(boundary_mu, k, f, k + 1)));
  }

  std::vector<CheckRecord> records;
  records.push_back(make_check("bn/rhs-match", worst_match, 0.0, tol));
  records.push_back(make_check("bn/low-orders", worst_low, 0.0, tol));
  records.push_back(make_check("bn/sign-pattern", std::max(0.0, worst_sign), 0.0, tol));
  records.push_back(make_check("bn/isometry-annihilation", worst_isometry, 0.0, tol));
  return records;
}

namespace {

struct RandomTuple {
  AllowableTuple tuple;
  // reference values
  std::vector<std::vector<cplx>> mu_hat;  // j in 0..m-1, n in 0..deg
  CMatrix top_moments;
};

RandomTuple random_positive_tuple(Rng& rng, int m, int coeff_range) {
  std::vector<CircleDistribution> lower;
  // mu_0: |q|^2 density with unit mass and q zero-free on the circle, which
  // keeps the Gram matrix positive definite with margin
  {
    std::vector<cplx> q(static_cast<std::size_t>(rng.uniform_int(2, 4)));
    q[0] = 1.0;
    for (std::size_t i = 1; i < q.size(); ++i) q[i] = 0.15 * rng.complex_in_square();
    double nrm = 0.0;
    for (const cplx& c : q) nrm += std::norm(c);
    for (cplx& c : q) c /= std::sqrt(nrm);
    lower.push_back(density_from_square(q));
  }
  for (int j = 1; j < m; ++j) lower.push_back(random_positive_circle(rng));
  DiscMeasure top = random_measure(rng);

  RandomTuple out{AllowableTuple(lower, top), {}, CMatrix()};
  out.mu_hat.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    out.mu_hat[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(coeff_range) + 1);
    for (int n = 0; n <= coeff_range; ++n)
      out.mu_hat[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = lower[static_cast<std::size_t>(j)].coeff(n);
  }
  out.top_moments = CMatrix(static_cast<std::size_t>(coeff_range) + 1, static_cast<std::size_t>(coeff_range) + 1);
  for (int k = 0; k <= coeff_range; ++k)
    for (int l = 0; l <= coeff_range; ++l) {
      cplx acc = top.circle_part().coeff(l - k);
      for (const DiscAtom& a : top.atoms()) {
        const cplx z = a.point.value();
        cplx zk{1.0, 0.0}, zl{1.0, 0.0};
        for (int i = 0; i < k; ++i) zk *= z;
        for (int i = 0; i < l; ++i) zl *= z;
        acc += a.mass * zk * std::conj(zl);
      }
      out.top_moments(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = acc;
    }
  return out;
}

}  // namespace

// --------------------------------------------------------------------------
// Model theorem round trip.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_model_roundtrip(const VerifyConfig& config) {
  Rng rng = Rng(config.seed).split("model");
  const int deg = 8;
  const double tol = 1e-8 * config.tol_scale;
  std::vector<CheckRecord> records;

  double worst_mu = 0.0, worst_top = 0.0, worst_norm = 0.0, worst_psd = 0.0;
  double worst_consistency = 0.0, worst_moment_diff = 0.0;
  for (int t = 0; t < 10; ++t) {
    const int m = rng.uniform_int(1, 3);
    RandomTuple rt = random_positive_tuple(rng, m, deg);
    const int realization_degree = m + deg + 1;
    const OperatorModel model = realize_tuple_model_matrix(rt.tuple, realization_degree);
    const TupleExtraction ex = extract_tuple(model, m, deg);

    for (int j = 0; j < m; ++j)
      for (int n = 0; n <= deg; ++n)
        worst_mu = std::max(worst_mu,
                            std::abs(ex.mu_hat[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] -
                                     rt.mu_hat[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)]));
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; b <= deg; ++b)
        worst_top = std::max(worst_top, std::abs(ex.top_moments(static_cast<std::size_t>(a),
                                                                static_cast<std::size_t>(b)) -
                                                 rt.top_moments(static_cast<std::size_t>(a),
                                                                static_cast<std::size_t>(b))));
    worst_psd = std::min(worst_psd, ex.top_min_eigenvalue);

    const NormFormulaReport nf =
        verify_norm_formula(model, m, deg, 20, rng.split("norm-formula").next_u64());
    worst_norm = std::max(worst_norm, nf.max_rel_err);

    // the two B_n routes agree: closed-form tuple norms vs the matrix model
    {
      const Polynomial f = random_polynomial(rng, 4, 0);
      for (int n = 1; n <= m + 2; ++n) {
        const double closed = shift_bn_form(rt.tuple, f, n);
        const double matrix_route = model.b_form(n, f, f).real();
        worst_consistency =
            std::max(worst_consistency, std::abs(closed - matrix_route) / (1.0 + std::abs(closed)));
      }
    }

    // moment-through-diff: D_{mu_r,0}(p) = <(beta_r - S(beta_{r+1})) p, p>
    {
      const Polynomial p = random_polynomial(rng, 4, 0);
      const int pd = p.degree().value_or(0);
      for (int r = 0; r < m; ++r) {
        const CMatrix a_form = beta_form_matrix(model, r + 1, pd);
        const cplx via_s = model.beta_form(r, p, p) - s_form(model, a_form, p, p);
        cplx direct{0.0, 0.0};
        for (int a = 0; a <= pd; ++a)
          for (int b = 0; b <= pd; ++b) {
            const int d = b - a;
            const cplx mu = d >= 0 ? rt.mu_hat[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)]
                                   : std::conj(rt.mu_hat[static_cast<std::size_t>(r)][static_cast<std::size_t>(-d)]);
            direct += p.coeff(a) * std::conj(p.coeff(b)) * mu;
          }
        worst_moment_diff = std::max(worst_moment_diff, std::abs(via_s - direct) / (1.0 + std::abs(direct)));
      }
    }
  }
  records.push_back(make_check("model/mu-hat-roundtrip", worst_mu, 0.0, tol));
  records.push_back(make_check("model/top-moments-roundtrip", worst_top, 0.0, tol));
  records.push_back(make_check("model/norm-formula", worst_norm, 0.0, tol));
  records.push_back(make_bound_check("model/top-moments-psd", worst_psd, -kPsdTol));
  records.push_back(make_check("model/bn-route-consistency", worst_consistency, 0.0, tol));
  records.push_back(make_check("model/moment-through-diff", worst_moment_diff, 0.0, tol));

  // truncation hygiene: doubling the matrix size with a fixed horizon
  {
    const OperatorModel small = OperatorModel::d_alpha_shift(1.5, 32);
    const OperatorModel big = OperatorModel::d_alpha_shift(1.5, 64);
    double worst = 0.0;
    for (int a = 0; a <= 31; ++a)
      worst = std::max(worst, std::abs(small.power_gram(a, a) - big.power_gram(a, a)));
    records.push_back(make_check("model/truncation-hygiene", worst, 0.0, 1e-13 * config.tol_scale));
  }
  return records;
}

// --------------------------------------------------------------------------
// The D_alpha family.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_d_alpha_family(const VerifyConfig& config) {
  std::vector<CheckRecord> records;
  const int n_max = 20, degree = 40;
  const int model_size = n_max + degree + 4;
  for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const OperatorModel model = OperatorModel::d_alpha_shift(alpha, model_size);
    const bool integer = std::abs(alpha - std::round(alpha)) < 1e-12;
    const std::string tag = "alpha=" + std::to_string(alpha).substr(0, 3);
    if (!integer) {
      const ClassifyReport rep = classify_order(model, n_max, degree, 1e-9 * config.tol_scale);
      const int expected = static_cast<int>(std::ceil(alpha));
      CheckRecord r;
      r.name = "dalpha/order/" + tag;
      r.lhs = rep.inferred_order.value_or(-1);
      r.rhs = expected;
      r.abs_err = std::abs(r.lhs - r.rhs);
      r.rel_err = r.abs_err;
      r.tolerance = 0.0;
      r.pass = rep.inferred_order.has_value() && *rep.inferred_order == expected;
      records.push_back(std::move(r));
    } else {
      const int iso = static_cast<int>(std::lround(alpha)) + 1;
      const CMatrix form = beta_form_matrix(model, iso, degree);
      records.push_back(make_check("dalpha/isometry-annihilation/" + tag, form.max_abs(), 0.0,
                                   1e-9 * config.tol_scale));
    }
    const int growth_order = static_cast<int>(std::ceil(alpha));
    const GrowthReport growth = growth_check(model, std::max(growth_order, 0), n_max);
    records.push_back(make_bound_check("dalpha/growth-bounded/" + tag, growth.bounded ? 1.0 : -1.0, 0.0));
  }
  // a wrong growth order must be flagged
  {
    const GrowthReport growth = growth_check(OperatorModel::d_alpha_shift(2.0, 70), 1, 20);
    records.push_back(make_bound_check("dalpha/growth-flags-excess", growth.bounded ? -1.0 : 1.0, 0.0));
  }
  return records;
}

// --------------------------------------------------------------------------
// Analytic-model inequality and positivity detection.
// --------------------------------------------------------------------------
std::vector<CheckRecord> battery_analytic_model(const VerifyConfig& config) {
  Rng rng = Rng(config.seed).split("analytic");
  std::vector<CheckRecord> records;

  double worst_min = 0.0;
  for (int t = 0; t < 5; ++t) {
    const int m = rng.uniform_int(2, 3);
    std::vector<CircleDistribution> lower;
    lower.push_back(CircleDistribution::lebesgue());  // ker T^* spanned by e
    for (int j = 1; j < m; ++j) lower.push_back(random_positive_circle(rng));
    const AllowableTuple tuple(lower, random_measure(rng));
    const int degree = 6;
    const OperatorModel model = realize_tuple_model(tuple, m + degree + 1);
    const AnalyticModelReport rep = verify_analytic_model_inequality(model, m, degree, kPsdTol);
    worst_min = std::min(worst_min, rep.worst_min_eigenvalue);
  }
  records.push_back(make_bound_check("analytic/positive-tuples-psd", worst_min, -kPsdTol * config.tol_scale));

  {
    // signed distribution in slot 1: the difference form must go negative
    const CircleDistribution signed_mu =
        CircleDistribution::fourier({{-1, {0.8, 0.0}}, {0, {0.5, 0.0}}, {1, {0.8, 0.0}}}, true);
    const AllowableTuple bad({CircleDistribution::lebesgue(), signed_mu},
                             DiscMeasure::circle(CircleDistribution::lebesgue()));
    const OperatorModel model = realize_tuple_model(bad, 10);
    const AnalyticModelReport rep = verify_analytic_model_inequality(model, 2, 6, kPsdTol);
    CheckRecord r;
    r.name = "analytic/signed-counterexample-detected";
    r.lhs = rep.worst_min_eigenvalue;
    r.rhs = -1e-3;
    r.abs_err = 0.0;
    r.rel_err = 0.0;
    r.tolerance = 0.0;
    r.pass = rep.worst_min_eigenvalue <= -1e-3;
    records.push_back(std::move(r));
  }
  return records;
}

RunReport run_suite(const std::string& name, const VerifyConfig& config) {
  RunReport report;
  report.command = "verify " + name;
  report.seed = config.seed;
  report.digest = fnv1a_hex(name + "|seed=" + std::to_string(config.seed) +
                            "|tol=" + std::to_string(config.tol_scale) +
                            "|samples=" + std::to_string(config.douglas_samples) +
                            "|k=" + (config.douglas_k ? std::to_string(*config.douglas_k) : "all") +
                            "|exact=" + (config.exact_only ? "1" : "0"));

  auto append = [&report](std::vector<CheckRecord> recs) {
    for (CheckRecord& r : recs) report.records.push_back(std::move(r));
  };

  if (name == "green" || name == "all") append(battery_green_kernel(config));
  if (name == "douglas" || name == "all") {
    append(battery_local_douglas(config));
    append(battery_monomial_formula(config));
  }
  if (name == "identities" || name == "all") {
    append(battery_exact_identities(config));
    if (!config.exact_only) {
      append(battery_difference_identities(config));
      append(battery_bn_structure(config));
    }
  }
  if (name == "operators" || name == "all") {
    append(battery_model_roundtrip(config));
    append(battery_d_alpha_family(config));
    append(battery_analytic_model(config));
  }
  if (report.records.empty() && name != "all")
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  report.sort_by_name();
  return report;
}

}  // namespace dirkit
