// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dirkit/dirichlet.hpp"
#include "dirkit/green.hpp"
#include "dirkit/json_io.hpp"
#include "dirkit/operators.hpp"
#include "dirkit/quadrature.hpp"
#include "dirkit/verify.hpp"

namespace {

using dirkit::cplx;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
}

dirkit::OperatorModel load_model(const std::string& in_path, const std::string& tuple_path, int degree) {
  if (!tuple_path.empty()) {
    const dirkit::AllowableTuple tuple = dirkit::tuple_from_json(load_json_file(tuple_path));
    return dirkit::realize_tuple_model(tuple, degree);
  }
  return dirkit::operator_from_json(load_json_file(in_path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirkit: weighted Dirichlet-type energies on the unit disc, Green-Almansi "
               "kernels, disc quadrature, and cyclic shift models"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write the JSON result to a file instead of stdout");

  // ---- green eval ----
  auto* green_cmd = app.add_subcommand("green", "Green-Almansi kernel evaluation");
  auto* green_eval = green_cmd->add_subcommand("eval", "evaluate G_k, the local weight and the sandwich bounds");
  int g_k = 2;
  std::string g_z = "0.5,0", g_zeta = "0,0";
  green_eval->add_option("--k", g_k, "kernel order")->required();
  green_eval->add_option("--z", g_z, "evaluation point RE,IM")->required();
  green_eval->add_option("--zeta", g_zeta, "kernel center RE,IM")->required();

  // ---- quad dirichlet ----
  auto* quad_cmd = app.add_subcommand("quad", "disc quadrature");
  auto* quad_dirichlet = quad_cmd->add_subcommand("dirichlet", "weighted Dirichlet integral by quadrature");
  std::string q_f = "[[0,0],[1,0]]", q_zeta = "0,0";
  int q_k = 1, q_radial = 48, q_angular = 256, q_annuli = 8;
  double q_grade = 3.0;
  std::optional<double> q_tol;
  quad_dirichlet->add_option("--f", q_f, "polynomial coefficients as JSON [[re,im],...]")->required();
  quad_dirichlet->add_option("--k", q_k, "derivative order")->required();
  quad_dirichlet->add_option("--zeta", q_zeta, "point of the closed disc RE,IM")->required();
  quad_dirichlet->add_option("--radial", q_radial, "Gauss-Legendre nodes per panel");
  quad_dirichlet->add_option("--angular", q_angular, "trapezoid nodes");
  quad_dirichlet->add_option("--annuli", q_annuli, "graded radial panels");
  quad_dirichlet->add_option("--grade", q_grade, "grading exponent");
  double q_tol_value = 0.0;
  auto* q_tol_opt = quad_dirichlet->add_option("--require-tol", q_tol_value,
                                               "fail with exit code 3 when the error estimate exceeds this");

  // ---- dirichlet ----
  auto* dir_cmd = app.add_subcommand("dirichlet", "closed-form Dirichlet energies and identity checks");
  auto* dir_eval = dir_cmd->add_subcommand("eval", "D_{mu,k}(f) against a measure file");
  std::string d_in, d_f = "[[0,0],[1,0]]";
  int d_k = 1;
  dir_eval->add_option("--in", d_in, "measure JSON file")->required();
  dir_eval->add_option("--f", d_f, "polynomial coefficients as JSON")->required();
  dir_eval->add_option("--k", d_k, "order");

  auto* dir_douglas = dir_cmd->add_subcommand("douglas", "local Douglas identity, both routes");
  std::string dd_f = "[[0,0],[0,0],[0,0],[1,0]]", dd_zeta = "0.5,0";
  int dd_k = 2;
  dir_douglas->add_option("--f", dd_f, "polynomial coefficients as JSON")->required();
  dir_douglas->add_option("--k", dd_k, "order")->required();
  dir_douglas->add_option("--zeta", dd_zeta, "point of the closed disc RE,IM")->required();

  auto* dir_identities = dir_cmd->add_subcommand("identities", "exact combinatorial identity sweep");
  int di_max = 30;
  dir_identities->add_option("--max", di_max, "sweep bound for m, n");

  // ---- op ----
  auto* op_cmd = app.add_subcommand("op", "cyclic operator models");
  std::string op_in, op_tuple;
  int op_m = 1, op_deg = 8, op_mmax = 4;
  double op_tol = 1e-10;
  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--in", op_in, "operator JSON file (matrix or weighted shift)");
    sub->add_option("--tuple", op_tuple, "tuple JSON file (closed-form model)");
  };
  auto* op_classify = op_cmd->add_subcommand("classify", "difference-form sign survey");
  add_model_options(op_classify);
  op_classify->add_option("--m-max", op_mmax, "largest difference order");
  op_classify->add_option("--deg", op_deg, "basis degree");
  op_classify->add_option("--tol", op_tol, "sign tolerance");
  auto* op_extract = op_cmd->add_subcommand("extract", "moment extraction of the model data");
  add_model_options(op_extract);
  op_extract->add_option("--m", op_m, "operator order")->required();
  op_extract->add_option("--deg", op_deg, "coefficient range");
  auto* op_norm = op_cmd->add_subcommand("verify-norm-formula", "norm formula round trip");
  add_model_options(op_norm);
  op_norm->add_option("--m", op_m, "operator order")->required();
  op_norm->add_option("--deg", op_deg, "test degree");
  auto* op_analytic = op_cmd->add_subcommand("analytic-inequality", "left-inverse difference inequality");
  add_model_options(op_analytic);
  op_analytic->add_option("--m", op_m, "operator order")->required();
  op_analytic->add_option("--deg", op_deg, "basis degree");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run a verification battery");
  std::string v_suite = "all", v_format = "json";
  dirkit::VerifyConfig v_config;
  std::uint64_t v_seed = 7;
  double v_tol_override = 1.0;
  int v_samples = 50, v_threads = 0;
  std::optional<int> v_k;
  int v_k_value = 0;
  verify_cmd->add_option("suite", v_suite, "green | douglas | identities | operators | all");
  verify_cmd->add_option("--seed", v_seed, "global 64-bit seed");
  verify_cmd->add_option("--tol-override", v_tol_override, "multiply every tolerance by this factor");
  verify_cmd->add_option("--samples", v_samples, "random cases per battery");
  auto* v_k_opt = verify_cmd->add_option("--k", v_k_value, "restrict the Douglas battery to one order");
  bool v_exact = false;
  verify_cmd->add_flag("--exact", v_exact, "identities suite: exact-arithmetic checks only");
  verify_cmd->add_option("--threads", v_threads, "worker threads (overrides DIRKIT_THREADS)");
  verify_cmd->add_option("--format", v_format, "json | csv");

  // global options like --out may appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*green_eval) {
      const cplx z = parse_complex(g_z), zeta = parse_complex(g_zeta);
      json j;
      j["gk"] = dirkit::green_k(g_k, z, zeta);
      j["u_local"] = dirkit::u_local(g_k, dirkit::DiscPoint(zeta), z);
      if (g_k >= 2) {
        j["sandwich_lower"] = dirkit::green_sandwich_lower(g_k, z, zeta);
        j["sandwich_upper"] = dirkit::green_sandwich_upper(g_k, z, zeta);
      } else {
        j["sandwich_lower"] = nullptr;
        j["sandwich_upper"] = nullptr;
      }
      emit(j, out_path);
      return kExitOk;
    }

    if (*quad_dirichlet) {
      dirkit::QuadratureSpec spec;
      spec.radial_nodes = q_radial;
      spec.angular_nodes = q_angular;
      spec.annuli = q_annuli;
      spec.grading_exponent = q_grade;
      if (q_tol_opt->count() > 0) q_tol = q_tol_value;
      const dirkit::Polynomial f = dirkit::polynomial_from_json(json::parse(q_f));
      const dirkit::QuadratureResult res =
          dirkit::dirichlet_quadrature(f, q_k, dirkit::DiscPoint(parse_complex(q_zeta)), spec, q_tol);
      emit(json{{"value", res.value.real()}, {"error_estimate", res.error_estimate}}, out_path);
      return kExitOk;
    }

    if (*dir_eval) {
      const dirkit::DiscMeasure mu = dirkit::measure_from_json(load_json_file(d_in));
      const dirkit::Polynomial f = dirkit::polynomial_from_json(json::parse(d_f));
      const cplx value = dirkit::d_measure_any(f, f, d_k, mu);
      emit(json{{"value", value.real()}, {"imag", value.imag()}}, out_path);
      return kExitOk;
    }

    if (*dir_douglas) {
      const dirkit::Polynomial f = dirkit::polynomial_from_json(json::parse(dd_f));
      dirkit::QuadratureSpec spec;
      const dirkit::ComparisonReport rep =
          dirkit::verify_local_douglas(f, dd_k, dirkit::DiscPoint(parse_complex(dd_zeta)), spec);
      const double tol = dd_k == 1 ? 1e-4 : 1e-8;
      emit(json{{"quadrature", rep.lhs},
                {"closed_form", rep.rhs},
                {"abs_err", rep.abs_err},
                {"rel_err", rep.rel_err},
                {"tolerance", tol},
                {"verdict", rep.pass(tol) ? "pass" : "fail"}},
           out_path);
      return rep.pass(tol) ? kExitOk : kExitCheckFailure;
    }

    if (*dir_identities) {
      int failures = 0, total = 0;
      for (int m = 0; m <= di_max; ++m)
        for (int k = 0; k <= m; ++k)
          for (const auto& r : {dirkit::BigRational(-2), dirkit::BigRational(-1), dirkit::BigRational(0),
                                dirkit::BigRational::ratio(1, 2), dirkit::BigRational(1),
                                dirkit::BigRational(2), dirkit::BigRational(3)}) {
            ++total;
            if (!dirkit::sum_lemma_check(m, k, r)) ++failures;
          }
      for (int n = 1; n <= di_max; ++n)
        for (int m = 0; m < n; ++m)
          for (const auto& x : {dirkit::BigRational(-1), dirkit::BigRational(0),
                                dirkit::BigRational::ratio(1, 2), dirkit::BigRational(1),
                                dirkit::BigRational(2), dirkit::BigRational(3)}) {
            ++total;
            if (!dirkit::magic_identity_check(n, m, x)) ++failures;
          }
      emit(json{{"checks", total}, {"failures", failures}, {"verdict", failures == 0 ? "pass" : "fail"}},
           out_path);
      return failures == 0 ? kExitOk : kExitCheckFailure;
    }

    if (*op_classify || *op_extract || *op_norm || *op_analytic) {
      if (op_in.empty() == op_tuple.empty())
        throw std::invalid_argument("op: provide exactly one of --in or --tuple");
      if (*op_classify) {
        const dirkit::OperatorModel model = load_model(op_in, op_tuple, op_mmax + op_deg);
        const dirkit::ClassifyReport rep = dirkit::classify_order(model, op_mmax, op_deg, op_tol);
        json evidence = json::array();
        for (const auto& e : rep.evidence)
          evidence.push_back({{"n", e.n}, {"min_eig", e.min_eig}, {"max_eig", e.max_eig}});
        emit(json{{"evidence", evidence},
                  {"inferred_order", rep.inferred_order ? json(*rep.inferred_order) : json(nullptr)},
                  {"m_max", rep.m_max},
                  {"degree", rep.degree},
                  {"tol", rep.tol}},
             out_path);
        return kExitOk;
      }
      if (*op_extract) {
        const dirkit::OperatorModel model = load_model(op_in, op_tuple, op_m + op_deg);
        const dirkit::TupleExtraction ex = dirkit::extract_tuple(model, op_m, op_deg);
        json mu = json::array();
        for (const auto& row : ex.mu_hat) {
          json coeffs = json::array();
          for (const cplx& c : row) coeffs.push_back({c.real(), c.imag()});
          mu.push_back(std::move(coeffs));
        }
        json moments = json::array();
        for (std::size_t a = 0; a < ex.top_moments.rows(); ++a) {
          json row = json::array();
          for (std::size_t b = 0; b < ex.top_moments.cols(); ++b)
            row.push_back({ex.top_moments(a, b).real(), ex.top_moments(a, b).imag()});
          moments.push_back(std::move(row));
        }
        emit(json{{"m", ex.m},
                  {"mu_hat", mu},
                  {"top_moments", moments},
                  {"top_min_eigenvalue", ex.top_min_eigenvalue},
                  {"top_psd", ex.top_psd},
                  {"normalized", ex.normalized},
                  {"verdict", ex.top_psd && ex.normalized ? "pass" : "not Dirichlet-type of this order at this horizon"}},
             out_path);
        return ex.top_psd && ex.normalized ? kExitOk : kExitCheckFailure;
      }
      if (*op_norm) {
        const dirkit::OperatorModel model = load_model(op_in, op_tuple, op_m + op_deg + 1);
        const dirkit::NormFormulaReport rep = dirkit::verify_norm_formula(model, op_m, op_deg, 20, 7);
        const bool pass = rep.max_rel_err <= 1e-8;
        emit(json{{"cases", rep.cases.size()},
                  {"max_rel_err", rep.max_rel_err},
                  {"verdict", pass ? "pass" : "fail"}},
             out_path);
        return pass ? kExitOk : kExitCheckFailure;
      }
      const dirkit::OperatorModel model = load_model(op_in, op_tuple, op_m + op_deg + 1);
      const dirkit::AnalyticModelReport rep =
          dirkit::verify_analytic_model_inequality(model, op_m, op_deg, dirkit::kPsdTol);
      json entries = json::array();
      for (const auto& e : rep.entries)
        entries.push_back({{"r", e.r}, {"min_eigenvalue", e.min_eigenvalue}});
      emit(json{{"entries", entries},
                {"worst_min_eigenvalue", rep.worst_min_eigenvalue},
                {"verdict", rep.pass ? "pass" : "fail"}},
           out_path);
      return rep.pass ? kExitOk : kExitCheckFailure;
    }

    if (*verify_cmd) {
      v_config.seed = v_seed;
      v_config.tol_scale = v_tol_override;
      v_config.douglas_samples = v_samples;
      v_config.threads = v_threads;
      v_config.exact_only = v_exact;
      if (v_k_opt->count() > 0) v_k = v_k_value;
      v_config.douglas_k = v_k;
      const auto t0 = std::chrono::steady_clock::now();
      const dirkit::RunReport report = dirkit::run_suite(v_suite, v_config);
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const std::string payload = v_format == "csv" ? report.to_csv() : report.to_json_lines();
      if (out_path.empty()) {
        std::cout << payload;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << payload;
      }
      std::cerr << "verify " << v_suite << ": " << report.records.size() << " checks, "
                << report.failures() << " failures, " << elapsed << " s\n";
      return report.all_pass() ? kExitOk : kExitCheckFailure;
    }

    std::cerr << "no action selected\n";
    return kExitUsage;
  } catch (const dirkit::AccuracyError& e) {
    std::cerr << "accuracy failure: estimate " << e.error_estimate << " exceeds " << e.requested_tolerance
              << "\n";
    return kExitAccuracy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
