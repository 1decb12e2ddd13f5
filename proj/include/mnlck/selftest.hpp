#pragma once

/**
 * End-to-end acceptance battery.  Each criterion exercises one advertised
 * guarantee of the library at its stated tolerance and reports a measured
 * margin, so a failure names the broken bound instead of just flipping a
 * flag.  Every randomized check draws from fixed seeded streams, making the
 * battery deterministic across runs and thread counts.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mnlck/deformation.hpp"
#include "mnlck/hopf.hpp"
#include "mnlck/mapping_torus.hpp"
#include "mnlck/polynomial.hpp"
#include "mnlck/rng.hpp"
#include "mnlck/spectral_harmonic.hpp"
#include "mnlck/triangulations.hpp"
#include "mnlck/twisted.hpp"

namespace mnlck::selftest {

/** Outcome of one acceptance criterion. */
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  /** Measured values and margins backing the verdict. */
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline std::string fmt_vec(const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

/**
 * Untwisted Betti numbers from plain boundary-matrix ranks.  Deliberately
 * independent of the twisted pipeline so the unit-character comparisons are
 * judged against separately written code.
 */
inline std::vector<long long> untwisted_betti(const SimplicialComplex& k_complex) {
  const int dim = k_complex.dimension();
  std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);
  for (int deg = 1; deg <= dim; ++deg) {
    rank[static_cast<std::size_t>(deg)] = rank_exact(boundary_matrix<Rational>(k_complex, deg));
  }
  std::vector<long long> betti(static_cast<std::size_t>(dim) + 1, 0);
  for (int deg = 0; deg <= dim; ++deg) {
    const auto d = static_cast<std::size_t>(deg);
    betti[d] = k_complex.count(deg) - rank[d] - rank[d + 1];
  }
  return betti;
}

/** Random positive rational with numerator and denominator in 1..9. */
inline Rational small_positive_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> digit(1, 9);
  return Rational(digit(gen), digit(gen));
}

}  // namespace detail

// --- 1: twisted Betti numbers of circles against the closed-form answer ----

inline CriterionResult check_twisted_circles() {
  CriterionResult r{1, "twisted-circle-betti", true, "", 0.0};
  int checked = 0;
  for (int m : {3, 4, 12}) {
    const auto k_complex = circle_complex(m);
    for (int tnum : {1, 2}) {
      const Rational t(tnum);
      std::vector<Rational> weights(static_cast<std::size_t>(k_complex.count(1)), Rational(1));
      const int closing = k_complex.index_of({0, m - 1});
      weights[static_cast<std::size_t>(closing)] = t;
      const auto result = twisted_betti(assemble_twisted(k_complex, make_lee(k_complex, weights)));
      const auto expected =
          tnum == 1 ? std::vector<long long>{1, 1} : std::vector<long long>{0, 0};
      ++checked;
      if (result.betti != expected) {
        r.passed = false;
        r.detail = "m=" + std::to_string(m) + " t=" + std::to_string(tnum) + " gave " +
                   detail::fmt_vec(result.betti) + ", expected " + detail::fmt_vec(expected);
        return r;
      }
    }
  }
  r.detail = std::to_string(checked) + "/6 circle characters matched exactly (exact arithmetic)";
  return r;
}

// --- 2: vanishing on mapping tori; unit character against untwisted ranks ---

inline CriterionResult check_mapping_torus_vanishing() {
  CriterionResult r{2, "mapping-torus-vanishing", true, "", 0.0};
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"point", "id"},  {"circle3", "id"}, {"circle3", "rot"},
      {"tetra", "id"},  {"tetra", "rot"},  {"torus9", "id"},
      {"torus9", "rot"}, {"rp2_6", "id"},  {"rp2_6", "rot"}};
  const std::vector<Rational> values = {Rational(2), Rational(3), Rational(1, 2)};
  int vanish_checks = 0;
  int unit_checks = 0;
  for (const auto& [fiber_name, map_key] : pairs) {
    const auto fiber = builtin_complex(fiber_name);
    const auto phi = builtin_automorphism(fiber_name, map_key);
    const std::string label = fiber_name + "/" + map_key;
    for (const Rational& t : values) {
      const auto report = vanishing_check(fiber, phi, 3, t);
      ++vanish_checks;
      if (!report.vanished) {
        r.passed = false;
        r.detail = label + " failed to vanish, betti " + detail::fmt_vec(report.betti.betti);
        return r;
      }
    }
    // At t = 1 the twisted numbers must agree with the plain Betti numbers
    // of the suspension complex computed from boundary ranks alone.
    const auto unit = vanishing_check(fiber, phi, 3, Rational(1));
    const auto plain = detail::untwisted_betti(unit.suspension.complex);
    ++unit_checks;
    if (unit.betti.betti != plain) {
      r.passed = false;
      r.detail = label + " at t=1 gave " + detail::fmt_vec(unit.betti.betti) +
                 " but boundary ranks give " + detail::fmt_vec(plain);
      return r;
    }
    if (map_key == "id") {
      // The identity suspension is W x S^1, so the product formula applies:
      // b_k = b_k(W) + b_{k-1}(W).
      const auto base = detail::untwisted_betti(fiber);
      std::vector<long long> product(base.size() + 1, 0);
      for (std::size_t k = 0; k < product.size(); ++k) {
        if (k < base.size()) product[k] += base[k];
        if (k >= 1) product[k] += base[k - 1];
      }
      if (unit.betti.betti != product) {
        r.passed = false;
        r.detail = label + " at t=1 gave " + detail::fmt_vec(unit.betti.betti) +
                   " but the product formula gives " + detail::fmt_vec(product);
        return r;
      }
    }
  }
  r.detail = std::to_string(vanish_checks) + " character values vanished; " +
             std::to_string(unit_checks) + " unit-character comparisons matched";
  return r;
}

// --- 3: D^2 = 0, Euler characteristic, gauge invariance on random input -----

inline CriterionResult check_randomized_identities() {
  CriterionResult r{3, "coboundary-gauge-euler", true, "", 0.0};
  const std::vector<SimplicialComplex> bases = {circle_complex(3),  circle_complex(4),
                                                tetra_complex(),    rp2_complex(),
                                                circle_complex(12), torus9_complex()};
  const std::vector<Rational> characters = {Rational(2), Rational(3), Rational(5, 2),
                                            Rational(7, 3)};
  constexpr int kInstances = 100;
  constexpr int kGaugesPerInstance = 50;
  for (int instance = 0; instance < kInstances; ++instance) {
    const auto& k_complex = bases[static_cast<std::size_t>(instance) % bases.size()];
    auto gen = stream_rng(777, static_cast<std::uint64_t>(instance));

    // Random coboundary weights (always flat), times a genuine character on
    // the complexes with a circle direction so holonomy is exercised too.
    std::vector<Rational> gauge(static_cast<std::size_t>(k_complex.vertex_count()));
    for (auto& value : gauge) value = detail::small_positive_rational(gen);
    const Rational t = characters[static_cast<std::size_t>(instance) % characters.size()];
    const auto& edges = k_complex.simplices(1);
    std::vector<Rational> weights(edges.size());
    const bool is_circle = k_complex.dimension() == 1;
    const bool is_torus = k_complex.vertex_count() == 9 && k_complex.dimension() == 2;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int u = edges[e][0];
      const int v = edges[e][1];
      weights[e] = gauge[static_cast<std::size_t>(v)] / gauge[static_cast<std::size_t>(u)];
      if (is_circle && u == 0 && v == k_complex.vertex_count() - 1) weights[e] *= t;
      // On the 3x3 torus grid, crossing from row 0 to row 2 winds once around
      // the vertical circle; marking those edges pulls a circle character back
      // through the row projection, which stays a cocycle.
      if (is_torus && u / 3 == 0 && v / 3 == 2) weights[e] *= t;
    }

    TwistedComplex<Rational> tc = assemble_twisted(k_complex, make_lee(k_complex, weights));
    for (std::size_t deg = 0; deg + 1 < tc.d.size(); ++deg) {
      if (!(tc.d[deg + 1] * tc.d[deg]).is_zero()) {
        r.passed = false;
        r.detail = "instance " + std::to_string(instance) + ": D^2 != 0 at degree " +
                   std::to_string(deg);
        return r;
      }
    }
    const auto betti = twisted_betti(tc);
    if (betti.euler != k_complex.euler_characteristic()) {
      r.passed = false;
      r.detail = "instance " + std::to_string(instance) + ": Euler sum " +
                 std::to_string(betti.euler) + " != chi = " +
                 std::to_string(k_complex.euler_characteristic());
      return r;
    }
    for (int trial = 0; trial < kGaugesPerInstance; ++trial) {
      std::vector<Rational> g(static_cast<std::size_t>(k_complex.vertex_count()));
      for (auto& value : g) value = detail::small_positive_rational(gen);
      const auto transformed = gauge_transform(tc, g);
      const auto after = twisted_betti(transformed.transformed);
      if (after.betti != betti.betti) {
        r.passed = false;
        r.detail = "instance " + std::to_string(instance) + " gauge " + std::to_string(trial) +
                   ": betti " + detail::fmt_vec(betti.betti) + " -> " +
                   detail::fmt_vec(after.betti);
        return r;
      }
    }
  }
  r.detail = std::to_string(kInstances) + " instances: D^2 = 0, Euler sums match, and " +
             std::to_string(kGaugesPerInstance) + " gauge moves per instance preserved betti";
  return r;
}

// --- 4: harmonic dimensions of the twisted torus model ----------------------

inline CriterionResult check_spectral_dims() {
  CriterionResult r{4, "spectral-torus-dims", true, "", 0.0};
  using spectral::ConstantLeeForm;
  using spectral::FlatTorus;
  using spectral::harmonic_dims;
  for (int cutoff : {6, 8}) {
    const FlatTorus torus(1, cutoff);
    const auto flat = harmonic_dims(torus, ConstantLeeForm::zero(1), true);
    const bool flat_ok = flat.de_rham == std::vector<long long>{1, 2, 1} &&
                         flat.dolbeault == std::vector<std::vector<long long>>{{1, 1}, {1, 1}} &&
                         flat.bott_chern_11 == 1 && flat.stable && !flat.low_confidence;
    const auto twisted = harmonic_dims(torus, ConstantLeeForm{{1.0, 0.0}}, true);
    bool twisted_ok = twisted.de_rham == std::vector<long long>{0, 0, 0} &&
                      twisted.bott_chern_11 == 0 && twisted.stable && !twisted.low_confidence;
    for (const auto& row : twisted.dolbeault) {
      for (long long h : row) twisted_ok = twisted_ok && h == 0;
    }
    if (!flat_ok || !twisted_ok) {
      r.passed = false;
      r.detail = "cutoff " + std::to_string(cutoff) + ": theta=0 de Rham " +
                 detail::fmt_vec(flat.de_rham) + " (want (1,2,1)), twisted de Rham " +
                 detail::fmt_vec(twisted.de_rham) + " (want all zero)";
      return r;
    }
  }
  r.detail = "theta=0: de Rham (1,2,1), h^{0,1}=1, h^{1,1}_BC=1; theta=(1,0): all zero; "
             "dimensions stable from cutoff 6 through 10";
  return r;
}

// --- 5: the Bott-Chern exact sequence closes rank-for-rank ------------------

inline CriterionResult check_exact_sequence() {
  CriterionResult r{5, "bott-chern-exact-sequence", true, "", 0.0};
  using spectral::ConstantLeeForm;
  using spectral::FlatTorus;
  struct Case {
    int n;
    int cutoff;
    bool twist;
  };
  const std::vector<Case> cases = {{1, 6, false}, {1, 6, true}, {2, 3, false}, {2, 3, true}};
  std::string summary;
  for (const auto& c : cases) {
    ConstantLeeForm theta = ConstantLeeForm::zero(c.n);
    if (c.twist) theta.c[0] = 1.0;
    const auto report =
        spectral::bc_exact_sequence_report(FlatTorus(c.n, c.cutoff), theta, true);
    const std::string label =
        "n=" + std::to_string(c.n) + (c.twist ? " twisted" : " theta=0");
    if (!report.exact || report.rank_image != report.dim_ker_nu || !report.stable ||
        report.low_confidence) {
      r.passed = false;
      r.detail = label + ": rank(im) = " + std::to_string(report.rank_image) +
                 ", dim ker = " + std::to_string(report.dim_ker_nu) +
                 (report.stable ? "" : " (unstable under cutoff+2)");
      return r;
    }
    if (!summary.empty()) summary += "; ";
    summary += label + ": rank(im) = dim ker = " + std::to_string(report.rank_image);
  }
  r.detail = summary;
  return r;
}

// --- 6: the potential is automorphic under the defining contraction ---------

inline CriterionResult check_automorphy() {
  CriterionResult r{6, "hopf-automorphy", true, "", 0.0};
  constexpr double kBound = 1e-12;
  constexpr int kPoints = 1000;
  double worst = 0.0;
  std::string worst_config;
  const auto configs = hopf::standard_configurations();
  for (std::size_t c = 0; c < configs.size(); ++c) {
    auto gen = stream_rng(6001, c);
    for (int p = 0; p < kPoints; ++p) {
      const auto z = hopf::annulus_sample(configs[c].data.n(), gen, 0.1, 10.0);
      const double residual = hopf::automorphy_residual(configs[c].data, z);
      if (residual > worst) {
        worst = residual;
        worst_config = configs[c].name;
      }
    }
  }
  r.passed = worst <= kBound;
  r.detail = "worst relative residual " + detail::sci(worst) + " (" + worst_config + ") over " +
             std::to_string(configs.size()) + " x " + std::to_string(kPoints) +
             " points, bound 1e-12";
  return r;
}

// --- 7: metric positivity and the finite-difference structure equation ------

inline CriterionResult check_positivity_and_structure() {
  CriterionResult r{7, "hopf-positivity-structure", true, "", 0.0};
  constexpr int kPoints = 1000;
  double min_eig = std::numeric_limits<double>::infinity();
  std::string min_config;
  const auto configs = hopf::standard_configurations();
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const auto sweep = hopf::positivity_sweep(configs[c].data, kPoints, 4242 + c);
    if (sweep.min_eigenvalue < min_eig) {
      min_eig = sweep.min_eigenvalue;
      min_config = configs[c].name;
    }
  }
  if (!(min_eig > 0.0)) {
    r.passed = false;
    r.detail = "metric lost positivity: min eigenvalue " + detail::sci(min_eig) + " (" +
               min_config + ")";
    return r;
  }

  const hopf::HopfData* structure_config = nullptr;
  for (const auto& named : configs) {
    if (named.name == "n2-beta2-3") structure_config = &named.data;
  }
  if (structure_config == nullptr) throw std::logic_error("missing n2-beta2-3 configuration");
  auto gen = stream_rng(7007, 0);
  double worst_coarse = 0.0;
  double worst_fine = 0.0;
  for (int p = 0; p < 100; ++p) {
    const auto z = hopf::balanced_sample(structure_config->n(), gen, 0.8, 1.25);
    const auto x = hopf::real_point(z);
    worst_coarse = std::max(worst_coarse,
                            hopf::structure_equation_residual(*structure_config, x, 1e-3));
    worst_fine = std::max(worst_fine,
                          hopf::structure_equation_residual(*structure_config, x, 5e-4));
  }
  const double ratio = worst_coarse / worst_fine;
  const bool residual_ok = worst_coarse <= 1e-5;
  const bool ratio_ok = ratio >= 3.5 && ratio <= 4.5;
  r.passed = residual_ok && ratio_ok;
  r.detail = "min metric eigenvalue " + detail::sci(min_eig) + " (" + min_config +
             ") over 5 x 1000 points; structure residual " + detail::sci(worst_coarse) +
             " at h=1e-3 (bound 1e-5), refinement ratio " + detail::sci(ratio) +
             " (want 3.5..4.5)";
  return r;
}

// --- 8: the twisted potential identity, its untwisted reduction, and the ----
// ---    operator identity in the spectral model ------------------------------

inline CriterionResult check_potential_identity() {
  CriterionResult r{8, "potential-identity", true, "", 0.0};
  const auto configs = hopf::standard_configurations();
  const hopf::HopfData* data = nullptr;
  for (const auto& named : configs) {
    if (named.name == "n2-beta2-3") data = &named.data;
  }
  if (data == nullptr) throw std::logic_error("missing n2-beta2-3 configuration");

  double worst_twisted = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto gen = stream_rng(8101, static_cast<std::uint64_t>(trial));
    const auto test = geometry::Polynomial::random(data->real_dim(), 2, 8, gen, 0.05);
    const auto x = hopf::real_point(hopf::balanced_sample(data->n(), gen, 0.8, 1.25));
    worst_twisted = std::max(worst_twisted, hopf::potential_identity_residual(*data, test, x, 1e-3));
  }
  if (worst_twisted > 1e-6) {
    r.passed = false;
    r.detail = "twisted identity residual " + detail::sci(worst_twisted) + " exceeds 1e-6";
    return r;
  }

  double worst_flat = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto gen = stream_rng(8202, static_cast<std::uint64_t>(trial));
    const auto test = geometry::Polynomial::random(4, 3, 8, gen, 1.0);
    const auto x = hopf::real_point(hopf::balanced_sample(2, gen, 0.8, 1.25));
    worst_flat = std::max(worst_flat, hopf::potential_identity_residual(test, x, 1e-3));
  }
  if (worst_flat > 1e-8) {
    r.passed = false;
    r.detail = "theta=0 reduction residual " + detail::sci(worst_flat) + " exceeds 1e-8";
    return r;
  }

  // Operator form of the same identity, checked mode by mode in the
  // spectral model where both sides are computable without differencing.
  using spectral::Cplx;
  using spectral::Op;
  double worst_operator = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (int twist = 0; twist < 2; ++twist) {
      spectral::ConstantLeeForm theta = spectral::ConstantLeeForm::zero(n);
      if (twist == 1) {
        auto gen = stream_rng(8303, static_cast<std::uint64_t>(n));
        std::normal_distribution<double> coef(0.0, 1.0);
        for (double& c : theta.c) c = coef(gen);
      }
      for (int deg = 0; deg <= 2 * n - 2; ++deg) {
        auto gen = stream_rng(8404, static_cast<std::uint64_t>(16 * n + 2 * deg + twist));
        std::uniform_int_distribution<int> mode_dist(-2, 2);
        std::normal_distribution<double> coef(0.0, 1.0);
        const auto basis = spectral::degree_basis(n, deg);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
        spectral::SpectralForm f(n);
        for (int term = 0; term < 10; ++term) {
          spectral::Mode k(static_cast<std::size_t>(2 * n));
          for (int& entry : k) entry = mode_dist(gen);
          const auto [mi, mj] = basis[static_cast<std::size_t>(pick(gen))];
          f.add(k, mi, mj, {coef(gen), coef(gen)});
        }
        const auto lhs = spectral::apply(Op::DTheta, spectral::apply(Op::DcTheta, f, theta), theta);
        const auto rhs = Cplx(0.0, -2.0) * spectral::apply(Op::DelDelbarTheta, f, theta);
        const double scale = std::max(1.0, rhs.max_abs());
        worst_operator = std::max(worst_operator, (lhs - rhs).max_abs() / scale);
      }
    }
  }
  r.passed = worst_operator <= 1e-12;
  r.detail = "twisted residual " + detail::sci(worst_twisted) + " (bound 1e-6); theta=0 residual " +
             detail::sci(worst_flat) + " (bound 1e-8); operator identity residual " +
             detail::sci(worst_operator) + " (bound 1e-12)";
  return r;
}

// --- 9: rational approximation of the Lee class and the deformed metric -----

inline CriterionResult check_deformation() {
  CriterionResult r{9, "rational-lee-deformation", true, "", 0.0};
  const auto approx =
      deform::rational_lee_deformation({1.0, std::sqrt(2.0)}, 1e-2, Integer(100));
  const std::vector<Rational> expected = {Rational(1), Rational(99, 70)};
  if (approx.ratios != expected || approx.error > 1e-4) {
    r.passed = false;
    r.detail = "approximating (1, sqrt 2): error " + detail::sci(approx.error) +
               " (bound 1e-4), denominator bound 100";
    return r;
  }

  const auto base = hopf::HopfData::from_exponents({2.5, 3.5}, std::exp(2.0), {0.4, 1.9});
  const auto threshold = deform::positivity_threshold(base, 200, 99001, 6, 10);
  if (!(threshold.threshold > 0.0)) {
    r.passed = false;
    r.detail = "empirical positivity threshold came out non-positive";
    return r;
  }
  const auto deformed = deform::deform_lee_class(base, threshold.threshold / 2, Integer(1000000));
  const auto sweep = hopf::positivity_sweep(deformed.data, 1000, 99002);
  r.passed = sweep.min_eigenvalue > 0.0;
  r.detail = "sqrt-2 ratio locked at 99/70 with error " + detail::sci(approx.error) +
             "; threshold " + detail::sci(threshold.threshold) +
             ", deformed metric min eigenvalue " + detail::sci(sweep.min_eigenvalue) +
             " over 1000 points";
  return r;
}

// --- 10: circle averaging of closed forms ------------------------------------

inline CriterionResult check_circle_averaging() {
  CriterionResult r{10, "circle-averaging", true, "", 0.0};
  using spectral::Cplx;
  using spectral::Mode;
  using spectral::Op;
  constexpr int kForms = 50;
  double worst_idempotent = 0.0;
  double worst_closed = 0.0;
  double worst_preserved = 0.0;
  for (int stream = 0; stream < kForms; ++stream) {
    const int n = stream < kForms / 2 ? 1 : 2;
    auto gen = stream_rng(515151, static_cast<std::uint64_t>(stream));
    std::uniform_int_distribution<int> mode_dist(-3, 3);
    std::normal_distribution<double> coef(0.0, 1.0);

    // A general closed 2-form: an exact piece plus constant-coefficient
    // mode-zero terms (every constant form is closed).
    const auto basis1 = spectral::degree_basis(n, 1);
    std::uniform_int_distribution<int> pick1(0, static_cast<int>(basis1.size()) - 1);
    spectral::SpectralForm zeta(n);
    for (int term = 0; term < 10; ++term) {
      Mode k(static_cast<std::size_t>(2 * n));
      for (int& entry : k) entry = mode_dist(gen);
      const auto [mi, mj] = basis1[static_cast<std::size_t>(pick1(gen))];
      zeta.add(k, mi, mj, {coef(gen), coef(gen)});
    }
    spectral::SpectralForm eta = spectral::apply(Op::D, zeta);
    const auto basis2 = spectral::degree_basis(n, 2);
    std::uniform_int_distribution<int> pick2(0, static_cast<int>(basis2.size()) - 1);
    const Mode zero_mode(static_cast<std::size_t>(2 * n), 0);
    for (int term = 0; term < 2; ++term) {
      const auto [mi, mj] = basis2[static_cast<std::size_t>(pick2(gen))];
      eta.add(zero_mode, mi, mj, {coef(gen), coef(gen)});
    }

    const int direction = stream % (2 * n);
    const auto averaged = spectral::circle_average(eta, direction);
    const auto twice = spectral::circle_average(averaged, direction);
    worst_idempotent = std::max(worst_idempotent, (twice - averaged).max_abs());

    for (const auto& [mode, masks] : averaged.terms()) {
      if (mode[static_cast<std::size_t>(direction)] != 0) {
        r.passed = false;
        r.detail = "averaging left a non-invariant mode in direction " +
                   std::to_string(direction);
        return r;
      }
    }
    worst_closed = std::max(worst_closed, spectral::apply(Op::D, averaged).max_abs());
    // Invariant modes, in particular the zero mode, must pass through
    // untouched -- averaging fixes the cohomology class.
    for (const auto& [mi, mj] : basis2) {
      const Cplx before = eta.coefficient(zero_mode, mi, mj);
      const Cplx after = averaged.coefficient(zero_mode, mi, mj);
      worst_preserved = std::max(worst_preserved, std::abs(before - after));
    }
  }
  const bool ok = worst_idempotent <= 1e-14 && worst_closed <= 1e-12 && worst_preserved == 0.0;
  r.passed = r.passed && ok;
  r.detail = "over " + std::to_string(kForms) + " closed forms: idempotency defect " +
             detail::sci(worst_idempotent) + ", d(average) " + detail::sci(worst_closed) +
             ", zero-mode drift " + detail::sci(worst_preserved);
  return r;
}

/**
 * Run the full acceptance battery in order.
 *
 * @returns One result per criterion, each carrying the pass flag, a
 *          measurement summary and the wall-clock time spent.
 */
inline std::vector<CriterionResult> run_acceptance() {
  using Runner = CriterionResult (*)();
  struct Entry {
    int index;
    const char* name;
    Runner run;
  };
  const std::vector<Entry> entries = {
      {1, "twisted-circle-betti", &check_twisted_circles},
      {2, "mapping-torus-vanishing", &check_mapping_torus_vanishing},
      {3, "coboundary-gauge-euler", &check_randomized_identities},
      {4, "spectral-torus-dims", &check_spectral_dims},
      {5, "bott-chern-exact-sequence", &check_exact_sequence},
      {6, "hopf-automorphy", &check_automorphy},
      {7, "hopf-positivity-structure", &check_positivity_and_structure},
      {8, "potential-identity", &check_potential_identity},
      {9, "rational-lee-deformation", &check_deformation},
      {10, "circle-averaging", &check_circle_averaging},
  };
  std::vector<CriterionResult> results;
  results.reserve(entries.size());
  for (const auto& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = entry.run();
    } catch (const std::exception& error) {
      result.passed = false;
      result.detail = std::string("unexpected exception: ") + error.what();
    }
    result.index = entry.index;
    result.name = entry.name;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace mnlck::selftest
