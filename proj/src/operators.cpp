// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/operators.hpp"

#include <algorithm>
#include <cmath>

#include "dirkit/binomial.hpp"
#include "dirkit/rng.hpp"

namespace dirkit {

const CMatrix& OperatorModel::matrix() const {
  if (!matrix_) throw std::logic_error("OperatorModel: no dense matrix backing");
  return *matrix_;
}

const std::vector<cplx>& OperatorModel::cyclic() const {
  if (!matrix_) throw std::logic_error("OperatorModel: no dense matrix backing");
  return cyclic_;
}

OperatorModel OperatorModel::from_matrix(CMatrix t, std::vector<cplx> cyclic, int horizon) {
  if (t.rows() != t.cols()) throw std::invalid_argument("OperatorModel: matrix must be square");
  if (cyclic.size() != t.rows()) throw std::invalid_argument("OperatorModel: cyclic vector size mismatch");
  if (horizon < 0 || static_cast<std::size_t>(horizon) > t.rows() - 1)
    throw std::invalid_argument("OperatorModel: horizon outside [0, N-1]");
  const double nrm = std::sqrt(norm_sq(cyclic));
  if (std::abs(nrm - 1.0) > 1e-12) throw std::invalid_argument("OperatorModel: cyclic vector must be unit");

  OperatorModel m;
  m.horizon_ = horizon;
  // cache the power vectors, then their pairwise inner products
  std::vector<std::vector<cplx>> powers(static_cast<std::size_t>(horizon) + 1);
  powers[0] = cyclic;
  for (int j = 1; j <= horizon; ++j) powers[j] = t.apply(powers[j - 1]);
  m.psi_ = CMatrix(powers.size(), powers.size());
  for (std::size_t a = 0; a < powers.size(); ++a)
    for (std::size_t b = a; b < powers.size(); ++b) {
      const cplx v = inner(powers[a], powers[b]);
      m.psi_(a, b) = v;
      m.psi_(b, a) = std::conj(v);
    }
  m.matrix_ = std::move(t);
  m.cyclic_ = std::move(cyclic);
  return m;
}

OperatorModel OperatorModel::weighted_shift(const std::vector<double>& weights, int n) {
  if (n < 1 || n > 512) throw std::invalid_argument("weighted_shift: size outside [1, 512]");
  if (static_cast<int>(weights.size()) < n - 1)
    throw std::invalid_argument("weighted_shift: need n-1 weights");
  CMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 0; j + 1 < n; ++j) t(j + 1, j) = weights[static_cast<std::size_t>(j)];
  std::vector<cplx> e(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  e[0] = 1.0;
  return from_matrix(std::move(t), std::move(e), n - 1);
}

OperatorModel OperatorModel::d_alpha_shift(double alpha, int n) {
  std::vector<double> w(static_cast<std::size_t>(std::max(0, n - 1)));
  for (int j = 0; j + 1 < n; ++j)
    w[static_cast<std::size_t>(j)] = std::pow(double(j + 2) / double(j + 1), alpha / 2.0);
  return weighted_shift(w, n);
}

OperatorModel OperatorModel::from_power_gram(CMatrix psi) {
  if (psi.rows() != psi.cols() || psi.rows() == 0)
    throw std::invalid_argument("from_power_gram: bad table shape");
  OperatorModel m;
  m.horizon_ = static_cast<int>(psi.rows()) - 1;
  m.psi_ = std::move(psi);
  return m;
}

cplx OperatorModel::power_gram(int a, int b) const {
  if (a < 0 || b < 0 || a > horizon_ || b > horizon_)
    throw HorizonError("OperatorModel: power beyond the trusted horizon");
  return psi_(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

cplx OperatorModel::beta_power_form(int n, int k, int l) const {
  if (n < 0) throw std::invalid_argument("beta_power_form: negative order");
  cplx acc{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom(n, j) * power_gram(j + k, j + l);
  }
  return acc;
}

cplx OperatorModel::beta_form(int n, const Polynomial& p, const Polynomial& q) const {
  const auto dp = p.degree(), dq = q.degree();
  const int degp = dp ? *dp : 0, degq = dq ? *dq : 0;
  if (n + std::max(degp, degq) > horizon_)
    throw HorizonError("beta_form: degree plus order exceeds the horizon");
  cplx acc{0.0, 0.0};
  for (int a = 0; a <= degp; ++a) {
    const cplx pa = p.coeff(a);
    if (pa == cplx{0.0, 0.0}) continue;
    for (int b = 0; b <= degq; ++b) {
      const cplx qb = q.coeff(b);
      if (qb == cplx{0.0, 0.0}) continue;
      acc += pa * std::conj(qb) * beta_power_form(n, a, b);
    }
  }
  return acc;
}

cplx OperatorModel::b_form(int n, const Polynomial& p, const Polynomial& q) const {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * beta_form(n, p, q);
}

cplx OperatorModel::beta_form_euclidean(int n, const std::vector<cplx>& x,
                                        const std::vector<cplx>& y) const {
  const CMatrix& t = matrix();
  std::vector<cplx> tx = x, ty = y;
  cplx acc{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom(n, j) * inner(tx, ty);
    if (j < n) {
      tx = t.apply(tx);
      ty = t.apply(ty);
    }
  }
  return acc;
}

CMatrix OperatorModel::difference_form_dense(int n, bool backward) const {
  const CMatrix& t = matrix();
  const std::size_t dim = t.rows();
  const CMatrix tadj = t.adjoint();
  CMatrix acc(dim, dim);
  CMatrix power = CMatrix::identity(dim);   // T^j
  CMatrix apower = CMatrix::identity(dim);  // (T^*)^j
  for (int j = 0; j <= n; ++j) {
    const double sign_beta = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    const double sign_b = (j % 2 == 0) ? 1.0 : -1.0;
    const double c = binom(n, j) * (backward ? sign_b : sign_beta);
    CMatrix term = apower * power;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t l = 0; l < dim; ++l) acc(i, l) += c * term(i, l);
    if (j < n) {
      power = t * power;
      apower = apower * tadj;
    }
  }
  return acc;
}

CMatrix beta_form_matrix(const OperatorModel& model, int n, int degree) {
  if (n + degree > model.horizon()) throw HorizonError("beta_form_matrix: exceeds the horizon");
  const std::size_t dim = static_cast<std::size_t>(degree) + 1;
  CMatrix f(dim, dim);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; b <= degree; ++b) f(a, b) = model.beta_power_form(n, b, a);
  return f;
}

ClassifyReport classify_order(const OperatorModel& model, int m_max, int degree, double tol) {
  if (m_max < 1) throw std::invalid_argument("classify_order: m_max must be >= 1");
  if (m_max + degree > model.horizon()) throw HorizonError("classify_order: exceeds the horizon");
  ClassifyReport rep;
  rep.m_max = m_max;
  rep.degree = degree;
  rep.tol = tol;
  std::vector<double> mins(static_cast<std::size_t>(m_max) + 1, 0.0);
  std::vector<double> maxs(static_cast<std::size_t>(m_max) + 1, 0.0);
  std::vector<double> thresholds(static_cast<std::size_t>(m_max) + 1, tol);
  for (int n = 1; n <= m_max; ++n) {
    // <B_n . , .> = (-1)^n <beta_n . , .>
    CMatrix f = beta_form_matrix(model, n, degree);
    if (n % 2 == 1) {
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = -f(i, j);
    }
    const std::vector<double> eigs = hermitian_eigenvalues(f);
    mins[n] = eigs.front();
    maxs[n] = eigs.back();
    // alternating binomial sums cancel; anything below the backward-error
    // floor of the summation is indistinguishable from zero in doubles
    double cancellation_scale = 0.0;
    for (int j = 0; j <= n; ++j)
      cancellation_scale += binom(n, j) * std::abs(model.power_gram(j + degree, j + degree));
    thresholds[n] = std::max(tol, 64.0 * 2.220446049250313e-16 * cancellation_scale);
    rep.evidence.push_back({n, eigs.front(), eigs.back()});
  }
  for (int k = 1; k <= m_max; ++k) {
    bool ok = true;
    for (int n = k; n <= m_max && ok; ++n) {
      if (k % 2 == 1) {
        ok = maxs[n] <= thresholds[n];  // B_n <= 0
      } else {
        ok = mins[n] >= -thresholds[n];  // B_n >= 0
      }
    }
    if (ok) {
      rep.inferred_order = k;
      break;
    }
  }
  return rep;
}

TupleExtraction extract_tuple(const OperatorModel& model, int m, int degree) {
  if (m < 1) throw std::invalid_argument("extract_tuple: m must be >= 1");
  if (m + degree > model.horizon()) throw HorizonError("extract_tuple: exceeds the horizon");
  TupleExtraction ex;
  ex.m = m;
  ex.degree = degree;
  ex.mu_hat.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    ex.mu_hat[j].resize(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) ex.mu_hat[j][i] = model.beta_power_form(j, 0, i);
  }
  const std::size_t dim = static_cast<std::size_t>(degree) + 1;
  ex.top_moments = CMatrix(dim, dim);
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; l <= degree; ++l) ex.top_moments(k, l) = model.beta_power_form(m, k, l);
  ex.top_min_eigenvalue = min_eigenvalue(ex.top_moments);
  ex.top_psd = ex.top_min_eigenvalue >= -kPsdTol;
  ex.normalized = std::abs(ex.mu_hat[0][0] - cplx{1.0, 0.0}) <= 1e-10;
  return ex;
}

cplx s_form(const OperatorModel& model, const CMatrix& a_form, const Polynomial& p,
            const Polynomial& q) {
  const auto dp = p.degree(), dq = q.degree();
  if (!dp || !dq) return {0.0, 0.0};
  if (*dp > model.horizon() || *dq > model.horizon())
    throw HorizonError("s_form: polynomial degree exceeds the horizon");
  cplx acc{0.0, 0.0};
  for (int j = 1; j <= std::min(*dp, *dq); ++j) {
    const Polynomial lp = backward_shift_power(p, j);
    const Polynomial lq = backward_shift_power(q, j);
    for (int a = 0; a <= *dp - j; ++a)
      for (int b = 0; b <= *dq - j; ++b)
        acc += lp.coeff(a) * std::conj(lq.coeff(b)) *
               a_form(static_cast<std::size_t>(b), static_cast<std::size_t>(a));
  }
  return acc;
}

namespace {

/// D_{mu_m, m}(z^a, z^b) as a linear combination of top moments:
/// sum_{t=m-1}^{min(a,b)-1} C(t, m-1) moments(a-1-t, b-1-t).
cplx top_term_from_moments(const CMatrix& moments, int m, int a, int b) {
  if (a < m || b < m) return {0.0, 0.0};
  cplx acc{0.0, 0.0};
  for (int t = m - 1; t <= std::min(a, b) - 1; ++t)
    acc += binom(t, m - 1) *
           moments(static_cast<std::size_t>(a - 1 - t), static_cast<std::size_t>(b - 1 - t));
  return acc;
}

cplx fourier_form(const std::vector<cplx>& mu_hat, int k, const Polynomial& p, const Polynomial& q) {
  // D_{mu,k}(p, q) from one-sided coefficients, negative indices by conjugation
  const auto dp = p.degree(), dq = q.degree();
  const int degp = dp ? *dp : -1, degq = dq ? *dq : -1;
  cplx acc{0.0, 0.0};
  for (int j = k; j <= degp; ++j) {
    const cplx pj = p.coeff(j);
    if (pj == cplx{0.0, 0.0}) continue;
    for (int l = k; l <= degq; ++l) {
      const cplx ql = q.coeff(l);
      if (ql == cplx{0.0, 0.0}) continue;
      const int d = l - j;
      const cplx mu = d >= 0 ? mu_hat[static_cast<std::size_t>(d)]
                             : std::conj(mu_hat[static_cast<std::size_t>(-d)]);
      acc += binom(std::min(j, l), k) * pj * std::conj(ql) * mu;
    }
  }
  return acc;
}

double norm_formula_rhs(const TupleExtraction& ex, const Polynomial& p) {
  cplx acc{0.0, 0.0};
  for (int j = 0; j < ex.m; ++j) acc += fourier_form(ex.mu_hat[static_cast<std::size_t>(j)], j, p, p);
  const auto dp = p.degree();
  const int deg = dp ? *dp : 0;
  for (int a = ex.m; a <= deg; ++a)
    for (int b = ex.m; b <= deg; ++b)
      acc += p.coeff(a) * std::conj(p.coeff(b)) * top_term_from_moments(ex.top_moments, ex.m, a, b);
  return acc.real();
}

}  // namespace

NormFormulaReport verify_norm_formula(const OperatorModel& model, int m, int degree, int samples,
                                      std::uint64_t seed) {
  const TupleExtraction ex = extract_tuple(model, m, degree);
  NormFormulaReport rep;
  auto add_case = [&](const Polynomial& p) {
    NormFormulaCase c;
    c.lhs = model.beta_form(0, p, p).real();  // ||p(T)e||^2
    c.rhs = norm_formula_rhs(ex, p);
    c.rel_err = std::abs(c.lhs - c.rhs) / (1.0 + std::abs(c.rhs));
    rep.max_rel_err = std::max(rep.max_rel_err, c.rel_err);
    rep.cases.push_back(c);
  };
  for (int d = 0; d <= degree; ++d) add_case(Polynomial::monomial(d));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<cplx> coeffs(static_cast<std::size_t>(degree) + 1);
    for (cplx& c : coeffs) c = rng.complex_in_square();
    add_case(Polynomial(std::move(coeffs)));
  }
  return rep;
}

double shift_bn_form(const AllowableTuple& tuple, const Polynomial& f, int n) {
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Polynomial zjf = shift_up(f, j);
    acc += sign * binom(n, j) * tuple_norm_sq(zjf, tuple);
  }
  return acc;
}

double shift_bn_form(const DiscMeasure& mu, int k, const Polynomial& f, int n) {
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Polynomial zjf = shift_up(f, j);
    const double norm_sq = hardy_inner(zjf, zjf).real() + d_measure(zjf, zjf, k, mu).real();
    acc += sign * binom(n, j) * norm_sq;
  }
  return acc;
}

GrowthReport growth_check(const OperatorModel& model, int m, int n_max) {
  if (n_max > model.horizon()) throw HorizonError("growth_check: exceeds the horizon");
  GrowthReport rep;
  rep.ratios.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    rep.ratios[static_cast<std::size_t>(n)] = model.power_norm_sq(n) / std::pow(1.0 + n, m);
  for (int n = 0; n <= std::min(2, n_max); ++n) rep.baseline = std::max(rep.baseline, rep.ratios[n]);
  rep.worst = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  rep.bounded = rep.worst <= 4.0 * rep.baseline;
  return rep;
}

AnalyticModelReport verify_analytic_model_inequality(const OperatorModel& model, int m, int degree,
                                                     double tol) {
  AnalyticModelReport rep;
  rep.pass = true;
  rep.worst_min_eigenvalue = 0.0;
  for (int r = 1; r <= m - 1; ++r) {
    const CMatrix beta_r = beta_form_matrix(model, r, degree);
    const CMatrix beta_r1 = beta_form_matrix(model, r + 1, degree);
    const std::size_t dim = beta_r.rows();
    CMatrix diff = beta_r;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        cplx s{0.0, 0.0};
        for (std::size_t j = 1; j <= std::min(a, b); ++j) s += beta_r1(a - j, b - j);
        diff(a, b) -= s;
      }
    const double min_eig = min_eigenvalue(diff);
    rep.entries.push_back({r, min_eig});
    rep.worst_min_eigenvalue = std::min(rep.worst_min_eigenvalue, min_eig);
    if (min_eig < -tol) rep.pass = false;
  }
  return rep;
}

OperatorModel realize_tuple_model(const AllowableTuple& tuple, int degree) {
  return OperatorModel::from_power_gram(gram_matrix(tuple, degree));
}

OperatorModel realize_tuple_model_matrix(const AllowableTuple& tuple, int degree) {
  const CMatrix g = gram_matrix(tuple, degree);
  // Euclidean vectors v_a with <v_a, v_b> = G(a, b): columns of the Cholesky
  // factor of conj(G). The matrix sends v_a to v_{a+1} and v_D to 0.
  CMatrix gconj(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) gconj(i, j) = std::conj(g(i, j));
  const CholeskyResult chol = cholesky_upper(gconj, 1e-12);
  if (!chol.ok)
    throw std::runtime_error("realize_tuple_model_matrix: Gram matrix is not positive definite");
  const std::size_t dim = g.rows();
  CMatrix shifted(dim, dim);  // U S, where S e_a = e_{a+1}
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j + 1 < dim; ++j) shifted(i, j) = chol.upper(i, j + 1);
  const CMatrix t = solve_upper_right(shifted, chol.upper);
  std::vector<cplx> e(dim, cplx{0.0, 0.0});
  e[0] = chol.upper(0, 0);  // equals 1 for a normalized tuple
  return OperatorModel::from_matrix(t, std::move(e), static_cast<int>(dim) - 1);
}

}  // namespace dirkit
