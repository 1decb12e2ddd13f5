#pragma once

/**
 * Command-line front end.  Subcommands cover the whole pipeline: plain and
 * twisted Betti numbers, mapping-torus vanishing checks, the spectral torus
 * model, Hopf-manifold verification, Lee-class deformation, and the full
 * acceptance battery.  Every invocation produces one JSON report; `run`
 * also returns it so callers (including the test suite) can inspect results
 * without scraping stdout.
 *
 * Exit codes: 0 on success, 1 when a verification ran but a bound failed,
 * 2 on usage, file or input errors.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mnlck/deformation.hpp"
#include "mnlck/hopf.hpp"
#include "mnlck/io_json.hpp"
#include "mnlck/mapping_torus.hpp"
#include "mnlck/parallel.hpp"
#include "mnlck/selftest.hpp"
#include "mnlck/spectral_harmonic.hpp"
#include "mnlck/triangulations.hpp"
#include "mnlck/twisted.hpp"
#include "mnlck/version.hpp"

namespace mnlck::cli {

/** Outcome of one CLI invocation. */
struct RunResult {
  /** 0 = success, 1 = a verification failed, 2 = usage or input error. */
  int exit_code = 0;
  /** The JSON report, also printed or written according to the flags. */
  io::Json report;
};

namespace detail {

/** Parse a strict comma-separated list of doubles ("1,0.5,-2e-3"). */
inline std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("trailing junk in number: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
  return out;
}

/** Load a complex from a built-in name or a JSON file (exactly one given). */
inline SimplicialComplex load_complex(const std::string& builtin, const std::string& path) {
  if (builtin.empty() == path.empty()) {
    throw std::invalid_argument("pass exactly one of --complex and --input");
  }
  if (!builtin.empty()) return builtin_complex(builtin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open complex file '" + path + "'");
  return io::complex_from_json(io::Json::parse(in));
}

inline io::Json complex_summary(const SimplicialComplex& k_complex) {
  io::Json j;
  j["vertices"] = k_complex.vertex_count();
  j["dimension"] = k_complex.dimension();
  j["f_vector"] = k_complex.f_vector();
  j["euler"] = k_complex.euler_characteristic();
  return j;
}

inline io::Json betti_json(const BettiResult& result) {
  io::Json ranks = io::Json::array();
  for (const auto& evidence : result.ranks) {
    io::Json entry;
    entry["rank"] = evidence.rank;
    entry["low_confidence"] = evidence.low_confidence;
    if (std::isfinite(evidence.gap_ratio)) entry["gap_ratio"] = evidence.gap_ratio;
    ranks.push_back(entry);
  }
  io::Json j;
  j["betti"] = result.betti;
  j["euler"] = result.euler;
  j["ranks"] = ranks;
  j["low_confidence"] = result.low_confidence;
  return j;
}

inline io::Json dims_json(const spectral::DimsReport& report) {
  io::Json j;
  j["de_rham"] = report.de_rham;
  j["dolbeault"] = report.dolbeault;
  j["bott_chern_11"] = report.bott_chern_11;
  j["cutoff"] = report.cutoff;
  j["stable"] = report.stable;
  j["low_confidence"] = report.low_confidence;
  return j;
}

inline io::Json sequence_json(const spectral::BCSequenceReport& report) {
  io::Json j;
  j["h1_bundle"] = report.h1_bundle;
  j["h1_conjugate"] = report.h1_conjugate;
  j["h11_bott_chern"] = report.h11_bott_chern;
  j["h2_de_rham"] = report.h2_de_rham;
  j["rank_image"] = report.rank_image;
  j["dim_ker_nu"] = report.dim_ker_nu;
  j["exact"] = report.exact;
  j["cutoff"] = report.cutoff;
  j["stable"] = report.stable;
  j["low_confidence"] = report.low_confidence;
  return j;
}

inline io::Json sweep_json(const hopf::SweepResult& sweep) {
  io::Json j;
  j["min_eigenvalue"] = sweep.min_eigenvalue;
  j["worst_point"] = std::vector<double>(sweep.worst_point.data(),
                                         sweep.worst_point.data() + sweep.worst_point.size());
  j["max_i_invariance"] = sweep.max_i_invariance;
  j["max_conformal"] = sweep.max_conformal;
  j["points"] = sweep.points;
  j["seed"] = sweep.seed;
  return j;
}

inline io::Json deformation_json(const deform::DeformationResult& result) {
  io::Json ratios = io::Json::array();
  for (const auto& ratio : result.ratios) ratios.push_back(to_string(ratio));
  io::Json j;
  j["scale"] = result.scale;
  j["ratios"] = ratios;
  j["deformed_periods"] = result.deformed;
  j["error"] = result.error;
  return j;
}

/** Parse a weight that may be rational ("3/2") or decimal ("1.5"). */
inline double parse_weight_double(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad weight '" + text + "'");
  return value;
}

/** Unit weights everywhere except t on the closing edge of a circle. */
template <typename T>
LeeCocycle<T> loop_weights(const SimplicialComplex& k_complex, const T& t) {
  const int closing = k_complex.index_of({0, k_complex.vertex_count() - 1});
  if (k_complex.dimension() != 1 || closing < 0) {
    throw std::invalid_argument("--loop-weight needs a triangulated circle");
  }
  std::vector<T> weights(static_cast<std::size_t>(k_complex.count(1)), T(1));
  weights[static_cast<std::size_t>(closing)] = t;
  return make_lee(k_complex, std::move(weights));
}

template <typename T>
io::Json mn_betti_json(const SimplicialComplex& k_complex, LeeCocycle<T> lee) {
  return betti_json(twisted_betti(assemble_twisted(k_complex, std::move(lee))));
}

}  // namespace detail

/**
 * Parse the argument list (without the program name) and run one subcommand.
 *
 * @param args Arguments in natural order, e.g. {"betti", "--complex", "torus9"}.
 * @returns Exit code and the JSON report of the invocation.
 */
inline RunResult run(std::vector<std::string> args) {
  RunResult out;
  CLI::App app{"twisted cohomology and locally conformally Kaehler verification toolkit",
               "mnlck"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_path;
  bool quiet = false;
  int threads = 0;
  app.add_option("--output", output_path, "write the JSON report to this file");
  app.add_flag("--quiet", quiet, "suppress the report on stdout");
  app.add_option("--threads", threads, "worker thread count (default: MNLCK_THREADS, else all)")
      ->check(CLI::PositiveNumber);

  // betti -------------------------------------------------------------------
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a simplicial complex");
  std::string betti_builtin, betti_input;
  betti_cmd->add_option("--complex", betti_builtin, "built-in complex name");
  betti_cmd->add_option("--input", betti_input, "complex JSON file");

  // mn-betti ----------------------------------------------------------------
  auto* mn_cmd = app.add_subcommand("mn-betti", "twisted Betti numbers for edge weights");
  std::string mn_builtin, mn_input, mn_weights, mn_loop, mn_backend = "rational";
  mn_cmd->add_option("--complex", mn_builtin, "built-in complex name");
  mn_cmd->add_option("--input", mn_input, "complex JSON file");
  mn_cmd->add_option("--weights", mn_weights, "degree-1 cochain JSON file of edge weights");
  mn_cmd->add_option("--loop-weight", mn_loop,
                     "shortcut: weight t on the closing edge of a circle, 1 elsewhere");
  mn_cmd->add_option("--backend", mn_backend, "arithmetic backend")
      ->check(CLI::IsMember({"rational", "float"}));

  // suspend -----------------------------------------------------------------
  auto* suspend_cmd =
      app.add_subcommand("suspend", "mapping-torus vanishing check for a character value");
  std::string sus_fiber = "circle3", sus_map = "id", sus_t = "2";
  int sus_layers = 3;
  suspend_cmd->add_option("--fiber", sus_fiber, "built-in fiber complex");
  suspend_cmd->add_option("--map", sus_map, "automorphism key (id or rot)");
  suspend_cmd->add_option("--layers", sus_layers, "number of prism layers (>= 3)")
      ->check(CLI::Range(3, 64));
  suspend_cmd->add_option("--t", sus_t, "character value, rational like 3 or 1/2");

  // torus-spectral ----------------------------------------------------------
  auto* torus_cmd =
      app.add_subcommand("torus-spectral", "harmonic dimensions of the twisted torus model");
  int torus_n = 1, torus_cutoff = 6;
  std::string torus_theta;
  bool torus_skip_stability = false, torus_sequence = false;
  torus_cmd->add_option("--n", torus_n, "complex dimension (1..4)")->check(CLI::Range(1, 4));
  torus_cmd->add_option("--cutoff", torus_cutoff, "mode cutoff")->check(CLI::PositiveNumber);
  torus_cmd->add_option("--theta", torus_theta,
                        "Lee coefficients c_0,...,c_{2n-1} (default: all zero)");
  torus_cmd->add_flag("--skip-stability", torus_skip_stability,
                      "skip the cutoff+2 stability recomputation");
  torus_cmd->add_flag("--sequence", torus_sequence,
                      "also report the Bott-Chern exact-sequence ranks");

  // hopf-verify -------------------------------------------------------------
  auto* hopf_cmd = app.add_subcommand(
      "hopf-verify", "verify automorphy, positivity and the structure equation");
  std::string hopf_exponents, hopf_phases;
  double hopf_contraction = std::exp(2.0), hopf_h = 1e-3;
  double hopf_structure_bound = 1e-4, hopf_automorphy_bound = 1e-12;
  int hopf_points = 1000, hopf_structure_points = 50;
  std::uint64_t hopf_seed = 20260814;
  hopf_cmd->add_option("--exponents", hopf_exponents, "contraction exponents b_1,...,b_n (> 1)")
      ->required();
  hopf_cmd->add_option("--contraction", hopf_contraction, "character value C > 1");
  hopf_cmd->add_option("--phases", hopf_phases, "phases of the alpha_i (default: 0)");
  hopf_cmd->add_option("--points", hopf_points, "sample points per check")
      ->check(CLI::PositiveNumber);
  hopf_cmd->add_option("--seed", hopf_seed, "seed for the sample streams");
  hopf_cmd->add_option("--fd-step", hopf_h, "finite-difference step for the structure equation")
      ->check(CLI::PositiveNumber);
  hopf_cmd->add_option("--structure-points", hopf_structure_points,
                       "sample points for the structure equation (n >= 2)")
      ->check(CLI::PositiveNumber);
  hopf_cmd->add_option("--structure-bound", hopf_structure_bound,
                       "acceptance bound for the structure residual");
  hopf_cmd->add_option("--automorphy-bound", hopf_automorphy_bound,
                       "acceptance bound for the relative automorphy residual");

  // deform-lee --------------------------------------------------------------
  auto* deform_cmd =
      app.add_subcommand("deform-lee", "deform periods (or a Hopf Lee class) to rational ratios");
  std::string def_periods, def_exponents, def_phases;
  double def_contraction = std::exp(2.0), def_tol = 1e-2;
  long long def_max_denominator = 1000000;
  int def_points = 500;
  std::uint64_t def_seed = 20260814;
  deform_cmd->add_option("--periods", def_periods, "period list p_0,...,p_{n-1}");
  deform_cmd->add_option("--exponents", def_exponents,
                         "contraction exponents of a Hopf configuration to deform");
  deform_cmd->add_option("--contraction", def_contraction, "character value C > 1");
  deform_cmd->add_option("--phases", def_phases, "phases of the alpha_i (default: 0)");
  deform_cmd->add_option("--tol", def_tol, "max-norm budget for the period change")
      ->check(CLI::PositiveNumber);
  deform_cmd->add_option("--max-denominator", def_max_denominator,
                         "denominator bound for the ratio approximations")
      ->check(CLI::PositiveNumber);
  deform_cmd->add_option("--points", def_points, "positivity sample points after deforming")
      ->check(CLI::PositiveNumber);
  deform_cmd->add_option("--seed", def_seed, "seed for the positivity sweep");

  // selftest ----------------------------------------------------------------
  auto* selftest_cmd = app.add_subcommand("selftest", "run the full acceptance battery");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    app.exit(help);
    out.exit_code = 0;
    return out;
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    out.exit_code = 2;
    return out;
  }

  if (threads > 0) {
    ::setenv("MNLCK_THREADS", std::to_string(threads).c_str(), 1);
  }

  io::Json report;
  report["command"] = app.get_subcommands().front()->get_name();
  report["version"] = kVersion;
  report["threads"] = configured_threads();
  report["arguments"] = args;
  const auto start = std::chrono::steady_clock::now();

  try {
    if (betti_cmd->parsed()) {
      const auto k_complex = detail::load_complex(betti_builtin, betti_input);
      std::vector<Rational> ones(static_cast<std::size_t>(k_complex.count(1)), Rational(1));
      report["results"]["complex"] = detail::complex_summary(k_complex);
      report["results"]["cohomology"] =
          detail::mn_betti_json(k_complex, make_lee(k_complex, std::move(ones)));
    } else if (mn_cmd->parsed()) {
      const auto k_complex = detail::load_complex(mn_builtin, mn_input);
      if (mn_weights.empty() == mn_loop.empty()) {
        throw std::invalid_argument("pass exactly one of --weights and --loop-weight");
      }
      report["results"]["complex"] = detail::complex_summary(k_complex);
      report["results"]["backend"] = mn_backend;
      io::Json weight_echo;
      io::Json cohomology;
      if (mn_backend == "rational") {
        LeeCocycle<Rational> lee =
            mn_loop.empty()
                ? [&] {
                    std::ifstream in(mn_weights);
                    if (!in) {
                      throw std::invalid_argument("cannot open weights file '" + mn_weights + "'");
                    }
                    auto parsed = io::lee_from_json<Rational>(k_complex, io::Json::parse(in));
                    return make_lee(k_complex, std::move(parsed.weights));
                  }()
                : detail::loop_weights(k_complex, parse_rational(mn_loop));
        weight_echo = io::lee_to_json(k_complex, lee);
        cohomology = detail::mn_betti_json(k_complex, std::move(lee));
      } else {
        LeeCocycle<double> lee =
            mn_loop.empty()
                ? [&] {
                    std::ifstream in(mn_weights);
                    if (!in) {
                      throw std::invalid_argument("cannot open weights file '" + mn_weights + "'");
                    }
                    auto parsed = io::lee_from_json<double>(k_complex, io::Json::parse(in));
                    return make_lee(k_complex, std::move(parsed.weights));
                  }()
                : detail::loop_weights(k_complex, detail::parse_weight_double(mn_loop));
        weight_echo = io::lee_to_json(k_complex, lee);
        cohomology = detail::mn_betti_json(k_complex, std::move(lee));
      }
      report["results"]["weights"] = std::move(weight_echo);
      report["results"]["cohomology"] = std::move(cohomology);
    } else if (suspend_cmd->parsed()) {
      const auto fiber = builtin_complex(sus_fiber);
      const auto phi = builtin_automorphism(sus_fiber, sus_map);
      const Rational t = parse_rational(sus_t);
      const auto vanishing = vanishing_check(fiber, phi, sus_layers, t);
      report["results"]["fiber"] = sus_fiber;
      report["results"]["map"] = sus_map;
      report["results"]["layers"] = sus_layers;
      report["results"]["t"] = to_string(t);
      report["results"]["suspension"] = detail::complex_summary(vanishing.suspension.complex);
      report["results"]["cohomology"] = detail::betti_json(vanishing.betti);
      report["results"]["vanished"] = vanishing.vanished;
      if (t != Rational(1) && !vanishing.vanished) out.exit_code = 1;
    } else if (torus_cmd->parsed()) {
      const spectral::FlatTorus torus(torus_n, torus_cutoff);
      spectral::ConstantLeeForm theta = spectral::ConstantLeeForm::zero(torus_n);
      if (!torus_theta.empty()) {
        theta.c = detail::parse_doubles(torus_theta);
        if (static_cast<int>(theta.c.size()) != 2 * torus_n) {
          throw std::invalid_argument("--theta needs exactly 2n coefficients");
        }
      }
      report["results"]["theta"] = theta.c;
      report["results"]["dimensions"] =
          detail::dims_json(spectral::harmonic_dims(torus, theta, !torus_skip_stability));
      if (torus_sequence) {
        report["results"]["sequence"] = detail::sequence_json(
            spectral::bc_exact_sequence_report(torus, theta, !torus_skip_stability));
      }
    } else if (hopf_cmd->parsed()) {
      const auto beta = detail::parse_doubles(hopf_exponents);
      const auto phases =
          hopf_phases.empty() ? std::vector<double>{} : detail::parse_doubles(hopf_phases);
      const auto data = hopf::HopfData::from_exponents(beta, hopf_contraction, phases);
      io::Json config;
      config["exponents"] = beta;
      config["contraction"] = hopf_contraction;
      std::vector<double> moduli, arg_phases;
      for (const auto& a : data.alpha) {
        moduli.push_back(std::abs(a));
        arg_phases.push_back(std::arg(a));
      }
      config["moduli"] = moduli;
      config["phases"] = arg_phases;
      config["seed"] = hopf_seed;
      report["results"]["configuration"] = std::move(config);

      auto gen = stream_rng(hopf_seed, 0);
      double worst_automorphy = 0.0;
      for (int p = 0; p < hopf_points; ++p) {
        const auto z = hopf::annulus_sample(data.n(), gen, 0.1, 10.0);
        worst_automorphy = std::max(worst_automorphy, hopf::automorphy_residual(data, z));
      }
      const bool automorphy_ok = worst_automorphy <= hopf_automorphy_bound;
      report["results"]["automorphy"] = {{"worst_residual", worst_automorphy},
                                         {"bound", hopf_automorphy_bound},
                                         {"passed", automorphy_ok}};

      const auto sweep = hopf::positivity_sweep(data, hopf_points, hopf_seed + 1);
      const bool positive = sweep.min_eigenvalue > 0.0;
      io::Json positivity = detail::sweep_json(sweep);
      positivity["passed"] = positive;
      report["results"]["positivity"] = std::move(positivity);

      bool structure_ok = true;
      if (data.n() >= 2) {
        auto structure_gen = stream_rng(hopf_seed, 2);
        double worst_structure = 0.0;
        for (int p = 0; p < hopf_structure_points; ++p) {
          const auto x =
              hopf::real_point(hopf::balanced_sample(data.n(), structure_gen, 0.8, 1.25));
          worst_structure =
              std::max(worst_structure, hopf::structure_equation_residual(data, x, hopf_h));
        }
        structure_ok = worst_structure <= hopf_structure_bound;
        report["results"]["structure"] = {{"worst_residual", worst_structure},
                                          {"bound", hopf_structure_bound},
                                          {"fd_step", hopf_h},
                                          {"passed", structure_ok}};
      }
      if (!(automorphy_ok && positive && structure_ok)) out.exit_code = 1;
    } else if (deform_cmd->parsed()) {
      if (def_periods.empty() == def_exponents.empty()) {
        throw std::invalid_argument("pass exactly one of --periods and --exponents");
      }
      if (!def_periods.empty()) {
        const auto result = deform::rational_lee_deformation(
            detail::parse_doubles(def_periods), def_tol, Integer(def_max_denominator));
        report["results"]["deformation"] = detail::deformation_json(result);
      } else {
        const auto beta = detail::parse_doubles(def_exponents);
        const auto phases =
            def_phases.empty() ? std::vector<double>{} : detail::parse_doubles(def_phases);
        const auto data = hopf::HopfData::from_exponents(beta, def_contraction, phases);
        const auto deformed = deform::deform_lee_class(data, def_tol, Integer(def_max_denominator));
        std::vector<double> before, after;
        for (const auto& a : data.alpha) before.push_back(std::abs(a));
        for (const auto& a : deformed.data.alpha) after.push_back(std::abs(a));
        report["results"]["deformation"] = detail::deformation_json(deformed.periods);
        report["results"]["moduli_before"] = before;
        report["results"]["moduli_after"] = after;
        const auto sweep = hopf::positivity_sweep(deformed.data, def_points, def_seed);
        report["results"]["positivity"] = detail::sweep_json(sweep);
        if (!(sweep.min_eigenvalue > 0.0)) out.exit_code = 1;
      }
    } else if (selftest_cmd->parsed()) {
      const auto results = selftest::run_acceptance();
      io::Json criteria = io::Json::array();
      int failures = 0;
      for (const auto& criterion : results) {
        if (!criterion.passed) ++failures;
        io::Json entry;
        entry["index"] = criterion.index;
        entry["name"] = criterion.name;
        entry["passed"] = criterion.passed;
        entry["detail"] = criterion.detail;
        entry["seconds"] = criterion.seconds;
        criteria.push_back(std::move(entry));
      }
      report["results"]["criteria"] = std::move(criteria);
      report["results"]["failures"] = failures;
      if (failures > 0) out.exit_code = 1;
    }
  } catch (const std::exception& error) {
    report["error"] = error.what();
    std::cerr << "error: " << error.what() << '\n';
    out.exit_code = 2;
  }

  report["timings"]["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.report = report;

  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) {
      std::cerr << "cannot write report to '" << output_path << "'\n";
      out.exit_code = 2;
    } else {
      file << report.dump(2) << '\n';
    }
  }
  if (!quiet) std::cout << report.dump(2) << std::endl;
  return out;
}

}  // namespace mnlck::cli
