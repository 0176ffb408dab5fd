// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "dirkit/green.hpp"
#include "dirkit/la.hpp"

namespace dirkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

enum class Mode { plain, centered, boundary };

struct ResolvedScheme {
  Mode mode = Mode::plain;
  cplx center{0.0, 0.0};
  double theta_star = 0.0;
  int annuli = 1;
  double exponent = 1.0;
  double angular_exponent = 4.0;
};

// One full tensor pass at the given resolution. Accumulation is a fixed
// pairwise tree over (ray, radial node) contributions, so the result depends
// only on the node counts.
cplx tensor_pass(const std::function<cplx(cplx)>& g, const ResolvedScheme& s, int radial, int angular) {
  const GaussRule& rule = gauss_legendre(radial);
  std::vector<cplx> ray_sums(angular);
  std::vector<cplx> terms(static_cast<std::size_t>(s.annuli) * radial);

  for (int j = 0; j < angular; ++j) {
    const double u = -kPi + 2.0 * kPi * (j + 0.5) / angular;
    double phi = u;
    double angular_weight = 2.0 / angular;  // (1/pi) * (2*pi/M)
    if (s.mode == Mode::boundary) {
      // graded periodic map around theta_star; nodes are offset so neither the
      // pole angle nor the antipodal map kink is ever sampled exactly
      const double t = std::abs(u) / kPi;
      phi = s.theta_star + (u >= 0.0 ? 1.0 : -1.0) * kPi * std::pow(t, s.angular_exponent);
      angular_weight *= s.angular_exponent * std::pow(t, s.angular_exponent - 1.0);
    }

    double radius_max = 1.0;
    cplx origin{0.0, 0.0};
    if (s.mode == Mode::centered) {
      origin = s.center;
      const double q = std::real(std::conj(s.center) * std::polar(1.0, phi));
      radius_max = -q + std::sqrt(q * q + 1.0 - std::norm(s.center));
    }

    const cplx dir = std::polar(1.0, phi);
    std::size_t idx = 0;
    for (int panel = 0; panel < s.annuli; ++panel) {
      double a, b;
      if (s.mode == Mode::boundary) {
        // panels accumulate toward the unit circle
        a = 1.0 - std::pow(double(s.annuli - panel) / s.annuli, s.exponent);
        b = 1.0 - std::pow(double(s.annuli - panel - 1) / s.annuli, s.exponent);
      } else if (s.mode == Mode::centered) {
        // panels accumulate toward the center
        a = radius_max * std::pow(double(panel) / s.annuli, s.exponent);
        b = radius_max * std::pow(double(panel + 1) / s.annuli, s.exponent);
      } else {
        a = radius_max * panel / s.annuli;
        b = radius_max * (panel + 1) / s.annuli;
      }
      const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
      for (int i = 0; i < radial; ++i) {
        const double r = mid + halfw * rule.nodes[i];
        const double w = halfw * rule.weights[i] * r * angular_weight;
        terms[idx++] = w * g(origin + r * dir);
      }
    }
    ray_sums[j] = pairwise_sum(std::span<const cplx>(terms));
  }
  return pairwise_sum(std::span<const cplx>(ray_sums));
}

ResolvedScheme resolve(const DiscIntegrand& g, const QuadratureSpec& spec) {
  if (g.log_singularity_at && g.boundary_pole_at)
    throw std::invalid_argument("integrate_disc: conflicting singularity tags");
  ResolvedScheme s;
  s.annuli = spec.annuli;
  s.exponent = spec.grading_exponent;
  s.angular_exponent = spec.boundary_angular_exponent;
  std::optional<cplx> center = spec.grading_center;
  if (!center && g.log_singularity_at) center = g.log_singularity_at;
  if (g.boundary_pole_at) {
    const cplx p = *g.boundary_pole_at;
    if (std::abs(std::abs(p) - 1.0) > 1e-6)
      throw std::invalid_argument("integrate_disc: boundary pole tag not on the unit circle");
    s.mode = Mode::boundary;
    s.theta_star = std::arg(p);
  } else if (center) {
    if (std::abs(*center) >= 1.0)
      throw std::invalid_argument("integrate_disc: grading center must be interior");
    s.mode = Mode::centered;
    s.center = *center;
  }
  return s;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (radial_nodes < 4) throw std::invalid_argument("QuadratureSpec: radial_nodes must be >= 4");
  if (angular_nodes < 8 || angular_nodes % 2 != 0)
    throw std::invalid_argument("QuadratureSpec: angular_nodes must be even and >= 8");
  if (annuli < 1) throw std::invalid_argument("QuadratureSpec: annuli must be >= 1");
  if (grading_exponent < 1.0 || grading_exponent > 6.0)
    throw std::invalid_argument("QuadratureSpec: grading exponent outside [1, 6]");
}

QuadratureResult integrate_disc(const DiscIntegrand& g, const QuadratureSpec& spec) {
  spec.validate();
  const ResolvedScheme scheme = resolve(g, spec);
  QuadratureResult res;
  res.value = tensor_pass(g.eval, scheme, spec.radial_nodes, spec.angular_nodes);
  const int half_radial = std::max(4, spec.radial_nodes / 2);
  const int half_angular = std::max(8, (spec.angular_nodes / 2) & ~1);
  const cplx coarse = tensor_pass(g.eval, scheme, half_radial, half_angular);
  res.error_estimate = std::abs(res.value - coarse);
  return res;
}

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

QuadratureResult dirichlet_pair_impl(const Polynomial& f, const Polynomial& g, int k,
                                     const DiscPoint& zeta, const QuadratureSpec& spec) {
  if (k < 1 || k > kMaxGreenOrder) throw std::domain_error("dirichlet_quadrature: k outside [1, 16]");
  const Polynomial fk = derivative(f, k);
  const Polynomial gk = derivative(g, k);
  if (fk.is_zero() || gk.is_zero()) return {cplx{0.0, 0.0}, 0.0};

  DiscIntegrand integrand;
  QuadratureSpec local = spec;
  if (zeta.interior()) {
    const double oz = 1.0 - std::norm(zeta.value());
    const double prefactor = 1.0 / (std::pow(oz, k) * factorial(k - 1) * factorial(k - 1));
    integrand.eval = [&fk, &gk, k, zeta, prefactor](cplx z) {
      return prefactor * fk(z) * std::conj(gk(z)) * u_local(k, zeta, z);
    };
    if (k == 1) integrand.log_singularity_at = zeta.value();
    if (!local.grading_center) local.grading_center = zeta.value();
  } else {
    const cplx pole = zeta.value() / std::abs(zeta.value());
    const double prefactor = 1.0 / (factorial(k) * factorial(k - 1));
    integrand.eval = [&fk, &gk, k, pole, prefactor](cplx z) {
      const double oz = 1.0 - std::norm(z);
      double w = oz / std::norm(z - pole);
      for (int i = 1; i < k; ++i) w *= oz;
      return prefactor * fk(z) * std::conj(gk(z)) * w;
    };
    integrand.boundary_pole_at = pole;
    local.grading_center.reset();
  }
  return integrate_disc(integrand, local);
}

}  // namespace

QuadratureResult dirichlet_quadrature(const Polynomial& f, int k, const DiscPoint& zeta,
                                      const QuadratureSpec& spec,
                                      std::optional<double> required_rel_tol) {
  QuadratureResult res = dirichlet_pair_impl(f, f, k, zeta, spec);
  res.value = cplx{res.value.real(), 0.0};
  if (required_rel_tol &&
      res.error_estimate > *required_rel_tol * (1.0 + std::abs(res.value)))
    throw AccuracyError(res.error_estimate, *required_rel_tol);
  return res;
}

QuadratureResult dirichlet_pair_quadrature(const Polynomial& f, const Polynomial& g, int k,
                                           const DiscPoint& zeta, const QuadratureSpec& spec) {
  return dirichlet_pair_impl(f, g, k, zeta, spec);
}

QuadratureResult hk_pair_quadrature(int m, int n, int k, const DiscPoint& zeta,
                                    const QuadratureSpec& spec) {
  if (!zeta.interior()) throw std::domain_error("hk_pair_quadrature: zeta must be interior");
  const Polynomial fk = derivative(Polynomial::monomial(m), k);
  const Polynomial gk = derivative(Polynomial::monomial(n), k);
  if (fk.is_zero() || gk.is_zero()) return {cplx{0.0, 0.0}, 0.0};
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
  DiscIntegrand integrand;
  integrand.eval = [&fk, &gk, k, zeta, sign](cplx z) {
    return sign * fk(z) * std::conj(gk(z)) * h_k(k, z, zeta.value());
  };
  QuadratureSpec local = spec;
  if (!local.grading_center) local.grading_center = zeta.value();
  return integrate_disc(integrand, local);
}

}  // namespace dirkit
