#ifndef MNLCK_DEFORMATION_HPP
#define MNLCK_DEFORMATION_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mnlck/hopf.hpp"
#include "mnlck/rational.hpp"
#include "mnlck/rng.hpp"

/**
 * Rational approximation of Lee-class periods.  A character on H_1 has
 * discrete (infinite cyclic) image exactly when all ratios of its periods
 * are rational; the deformation replaces a period vector p by p' = s * r
 * with r rational and ||p - p'|| small, which is the discrete counterpart
 * of deforming a Lee class to a rational one while keeping the metric
 * positive.
 */
namespace mnlck::deform {

/**
 * Best continued-fraction approximation with bounded denominator: the last
 * convergent of the continued-fraction expansion whose denominator does
 * not exceed the bound.
 *
 * @param value           Finite real number.
 * @param max_denominator Denominator bound, >= 1.
 * @returns The convergent p/q in lowest terms, q <= max_denominator.
 * @throws std::invalid_argument On non-finite input or bound < 1.
 */
inline Rational best_rational_approx(double value, const Integer& max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("value must be finite");
  if (max_denominator < 1) throw std::invalid_argument("denominator bound must be >= 1");
  const bool negative = value < 0.0;
  double v = std::abs(value);

  Integer p_prev = 1, p_prev2 = 0;  // numerators p_{k-1}, p_{k-2}
  Integer q_prev = 0, q_prev2 = 1;  // denominators
  Rational best(Integer(std::floor(v)), 1);
  for (int iteration = 0; iteration < 64; ++iteration) {
    const double floor_v = std::floor(v);
    if (floor_v > 9.0e18) break;  // continued-fraction term beyond double integer range
    const Integer a(static_cast<long long>(floor_v));
    const Integer p = a * p_prev + p_prev2;
    const Integer q = a * q_prev + q_prev2;
    if (q > max_denominator) break;
    best = Rational(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const double fractional = v - floor_v;
    if (fractional < 1e-15) break;  // the expansion terminated (value is rational)
    v = 1.0 / fractional;
  }
  return negative ? Rational(-numerator(best), denominator(best)) : best;
}

/** Outcome of a period deformation. */
struct DeformationResult {
  /** Common scale: the first nonzero input period. */
  double scale = 0.0;
  /** Rational period ratios r_i with p'_i = scale * r_i. */
  std::vector<Rational> ratios;
  /** Deformed periods p'. */
  std::vector<double> deformed;
  /** Max-norm error ||p - p'||_inf. */
  double error = 0.0;
};

/**
 * Deform a real period vector to one with pairwise-rational ratios.
 *
 * @param periods         Input periods, not all zero.
 * @param tol             Required max-norm closeness, > 0.
 * @param max_denominator Denominator bound for each ratio.
 * @returns Scale, rational ratios, deformed periods and achieved error.
 * @throws std::invalid_argument On empty/zero input or non-positive tol.
 * @throws std::runtime_error If no approximation within the denominator
 *         bound meets tol (raise the bound).
 */
inline DeformationResult rational_lee_deformation(const std::vector<double>& periods,
                                                  double tol,
                                                  const Integer& max_denominator) {
  if (periods.empty()) throw std::invalid_argument("period vector is empty");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  DeformationResult result;
  for (double p : periods) {
    if (p != 0.0) {
      result.scale = p;
      break;
    }
  }
  if (result.scale == 0.0) throw std::invalid_argument("period vector must be nonzero");
  result.ratios.reserve(periods.size());
  result.deformed.reserve(periods.size());
  for (double p : periods) {
    const Rational ratio = best_rational_approx(p / result.scale, max_denominator);
    const double value = result.scale * to_double(ratio);
    result.ratios.push_back(ratio);
    result.deformed.push_back(value);
    result.error = std::max(result.error, std::abs(p - value));
  }
  if (result.error > tol) {
    throw std::runtime_error(
        "no rational approximation within the denominator bound meets the tolerance; "
        "raise the bound");
  }
  return result;
}

/** A deformed Hopf configuration together with the period bookkeeping. */
struct DeformedHopf {
  hopf::HopfData data;
  DeformationResult periods;
};

/**
 * Deform the Lee class of a Hopf configuration to a rational one: the
 * periods p_i = log(1/|alpha_i|) are replaced by p' = s*r, the moduli by
 * exp(-p'_i), keeping the phases and the character constant.
 *
 * @param data            Base configuration.
 * @param tol             Max-norm period tolerance.
 * @param max_denominator Denominator bound.
 * @returns Deformed configuration and the deformation record.
 * @throws std::runtime_error As rational_lee_deformation.
 */
inline DeformedHopf deform_lee_class(const hopf::HopfData& data, double tol,
                                     const Integer& max_denominator) {
  std::vector<double> periods(data.alpha.size());
  for (std::size_t i = 0; i < data.alpha.size(); ++i) {
    periods[i] = -std::log(std::abs(data.alpha[i]));
  }
  DeformedHopf result;
  result.periods = rational_lee_deformation(periods, tol, max_denominator);
  std::vector<hopf::Complex> alpha(data.alpha.size());
  for (std::size_t i = 0; i < data.alpha.size(); ++i) {
    alpha[i] = std::polar(std::exp(-result.periods.deformed[i]),
                          std::arg(data.alpha[i]));
  }
  result.data = hopf::HopfData::make(std::move(alpha), data.C);
  return result;
}

/** Result of the empirical positivity-threshold search. */
struct ThresholdReport {
  /** Largest tested perturbation size with positive metric throughout. */
  double threshold = 0.0;
  /** Metric minimum of the unperturbed configuration over the sample. */
  double base_min_eigenvalue = 0.0;
  int points = 0;
  int directions = 0;
  std::uint64_t seed = 0;
};

/**
 * Empirical threshold for period perturbations preserving positivity: a
 * halving sweep from half the smallest period downward; at each size tau a
 * fixed set of seeded perturbation directions is applied to the periods
 * and the metric minimum is swept over seeded annulus points.  Returns the
 * first (largest) tau at which every perturbed configuration stays
 * positive; 0 if none does.
 *
 * @param data       Base configuration.
 * @param points     Annulus sample points per perturbed configuration.
 * @param seed       Base seed (points and directions both derive from it).
 * @param directions Number of perturbation directions (default 8).
 * @param levels     Number of halvings to try (default 12).
 * @returns ThresholdReport; threshold == 0 means no tested size passed.
 */
inline ThresholdReport positivity_threshold(const hopf::HopfData& data, int points,
                                            std::uint64_t seed, int directions = 8,
                                            int levels = 12) {
  if (points < 1 || directions < 1 || levels < 1) {
    throw std::invalid_argument("points, directions and levels must be positive");
  }
  std::vector<double> periods(data.alpha.size());
  double smallest = 0.0;
  for (std::size_t i = 0; i < data.alpha.size(); ++i) {
    periods[i] = -std::log(std::abs(data.alpha[i]));
    smallest = i == 0 ? periods[i] : std::min(smallest, periods[i]);
  }
  // fixed per-direction unit-max perturbations, independent of the size sweep
  std::vector<std::vector<double>> deltas;
  for (int d = 0; d < directions; ++d) {
    auto gen = stream_rng(seed ^ 0x7de3a1c9u, static_cast<std::uint64_t>(d));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> delta(periods.size());
    for (double& entry : delta) entry = unit(gen);
    deltas.push_back(std::move(delta));
  }

  ThresholdReport report;
  report.points = points;
  report.directions = directions;
  report.seed = seed;
  report.base_min_eigenvalue =
      hopf::positivity_sweep(data, points, seed).min_eigenvalue;

  double tau = smallest / 2.0;
  for (int level = 0; level < levels; ++level, tau /= 2.0) {
    bool all_positive = true;
    for (const auto& delta : deltas) {
      std::vector<hopf::Complex> alpha(periods.size());
      bool valid = true;
      for (std::size_t i = 0; i < periods.size(); ++i) {
        const double perturbed = periods[i] + tau * delta[i];
        if (perturbed <= 0.0) {
          valid = false;
          break;
        }
        alpha[i] = std::polar(std::exp(-perturbed), std::arg(data.alpha[i]));
      }
      if (!valid) {
        all_positive = false;
        break;
      }
      const auto sweep =
          hopf::positivity_sweep(hopf::HopfData::make(std::move(alpha), data.C),
                                 points, seed);
      if (sweep.min_eigenvalue <= 0.0) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) {
      report.threshold = tau;
      return report;
    }
  }
  return report;
}

}  // namespace mnlck::deform

#endif  // MNLCK_DEFORMATION_HPP
