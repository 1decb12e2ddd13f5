/**
 * Trigonometric-polynomial model of twisted Dolbeault/de Rham calculus on
 * the standard flat complex torus C^n / (Z^2n).
 *
 * Real coordinates pair as z_j = x_2j + i x_2j+1 (0-based).  A form is a
 * finite Fourier sum: for each integer mode k the coefficient of
 * e^{2 pi i k.x} dz_I ^ dzbar_J is stored under the bitmask pair (I, J).
 * Every operator acts mode by mode through its symbol,
 *
 *     del    f_k dz_j-slot:  pi*i*k_2j + pi*k_2j+1
 *     delbar f_k dzbar-slot: pi*i*k_2j - pi*k_2j+1
 *
 * and a constant Lee form theta = sum c_a dx_a twists them by the constant
 * shifts theta^{1,0}_j = (c_2j - i c_2j+1)/2 and theta^{0,1}_j = conj.
 *
 * Sign convention used *in this module*: dc = i(del - delbar), so the
 * twisted operators satisfy d_theta dc_theta = -2i del_theta delbar_theta
 * exactly (see apply()); the Hopf-shell module uses the opposite classical
 * convention, the two never exchange forms.
 */
#pragma once

#include <bit>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mnlck/linalg.hpp"

namespace mnlck::spectral {

using Cplx = std::complex<double>;

/** Frequency vector in Z^2n. */
using Mode = std::vector<int>;

/** Basis label: bitmask pair (I, J) for dz_I ^ dzbar_J. */
using MaskPair = std::pair<int, int>;

/** The standard flat torus with a symmetric Fourier cutoff |k_a| <= cutoff. */
struct FlatTorus {
  int n = 1;
  int cutoff = 6;

  FlatTorus(int n_, int cutoff_) : n(n_), cutoff(cutoff_) {
    if (n < 1 || n > 4) throw std::invalid_argument("complex dimension must be 1..4");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
  }
};

/** Constant real 1-form sum c_a dx_a on R^2n / Z^2n. */
struct ConstantLeeForm {
  std::vector<double> c;

  static ConstantLeeForm zero(int n) { return {std::vector<double>(2 * n, 0.0)}; }

  bool is_zero() const {
    for (double v : c)
      if (v != 0.0) return false;
    return true;
  }
};

/** Mode-local complex derivative symbols, already shifted by the Lee form. */
struct ModeSymbols {
  std::vector<Cplx> p;  // del_theta symbol per dz_j slot
  std::vector<Cplx> q;  // delbar_theta symbol per dzbar_j slot
};

inline ModeSymbols mode_symbols(int n, const Mode& k, const ConstantLeeForm& theta) {
  if (static_cast<int>(k.size()) != 2 * n) {
    throw std::invalid_argument("mode vector must have 2n entries");
  }
  if (static_cast<int>(theta.c.size()) != 2 * n) {
    throw std::invalid_argument("Lee form must have 2n coefficients");
  }
  constexpr double pi = std::numbers::pi;
  ModeSymbols s;
  s.p.resize(n);
  s.q.resize(n);
  for (int j = 0; j < n; ++j) {
    const double re = pi * k[2 * j + 1];
    const double im = pi * k[2 * j];
    s.p[j] = Cplx(re, im) - Cplx(theta.c[2 * j], -theta.c[2 * j + 1]) * 0.5;
    s.q[j] = Cplx(-re, im) - Cplx(theta.c[2 * j], theta.c[2 * j + 1]) * 0.5;
  }
  return s;
}

/** Sign of dz_j ^ dz_I (0 if j already occupied). */
inline int dz_wedge_sign(int mask_i, int j) {
  if (mask_i & (1 << j)) return 0;
  return (std::popcount(static_cast<unsigned>(mask_i & ((1 << j) - 1))) % 2 == 0) ? 1 : -1;
}

/** Sign of dzbar_j ^ (dz_I ^ dzbar_J) (0 if j occupied in J). */
inline int dzbar_wedge_sign(int mask_i, int mask_j, int j) {
  if (mask_j & (1 << j)) return 0;
  const int hops = std::popcount(static_cast<unsigned>(mask_i)) +
                   std::popcount(static_cast<unsigned>(mask_j & ((1 << j) - 1)));
  return (hops % 2 == 0) ? 1 : -1;
}

enum class Op {
  Del,
  Delbar,
  D,
  Dc,
  DelTheta,
  DelbarTheta,
  DTheta,
  DcTheta,
  DelDelbarTheta,
};

inline bool is_twisted(Op op) {
  switch (op) {
    case Op::DelTheta:
    case Op::DelbarTheta:
    case Op::DTheta:
    case Op::DcTheta:
    case Op::DelDelbarTheta:
      return true;
    default:
      return false;
  }
}

/** Coefficients of all basis monomials at one fixed mode. */
using MaskCoeffs = std::map<MaskPair, Cplx>;

namespace detail {

inline void accumulate_del(const ModeSymbols& s, const MaskCoeffs& in, Cplx scale,
                           MaskCoeffs& out) {
  const int n = static_cast<int>(s.p.size());
  for (const auto& [masks, coeff] : in) {
    for (int j = 0; j < n; ++j) {
      const int sign = dz_wedge_sign(masks.first, j);
      if (sign == 0) continue;
      out[{masks.first | (1 << j), masks.second}] +=
          scale * static_cast<double>(sign) * s.p[j] * coeff;
    }
  }
}

inline void accumulate_delbar(const ModeSymbols& s, const MaskCoeffs& in, Cplx scale,
                              MaskCoeffs& out) {
  const int n = static_cast<int>(s.q.size());
  for (const auto& [masks, coeff] : in) {
    for (int j = 0; j < n; ++j) {
      const int sign = dzbar_wedge_sign(masks.first, masks.second, j);
      if (sign == 0) continue;
      out[{masks.first, masks.second | (1 << j)}] +=
          scale * static_cast<double>(sign) * s.q[j] * coeff;
    }
  }
}

}  // namespace detail

/**
 * Apply an operator at a single mode.  The symbols must already carry the
 * wanted twist (pass theta = 0 symbols for the untwisted operators).
 */
inline MaskCoeffs apply_mode(Op op, const ModeSymbols& s, const MaskCoeffs& in) {
  MaskCoeffs out;
  const Cplx i_unit(0.0, 1.0);
  switch (op) {
    case Op::Del:
    case Op::DelTheta:
      detail::accumulate_del(s, in, 1.0, out);
      break;
    case Op::Delbar:
    case Op::DelbarTheta:
      detail::accumulate_delbar(s, in, 1.0, out);
      break;
    case Op::D:
    case Op::DTheta:
      detail::accumulate_del(s, in, 1.0, out);
      detail::accumulate_delbar(s, in, 1.0, out);
      break;
    case Op::Dc:
    case Op::DcTheta:
      detail::accumulate_del(s, in, i_unit, out);
      detail::accumulate_delbar(s, in, -i_unit, out);
      break;
    case Op::DelDelbarTheta: {
      MaskCoeffs mid;
      detail::accumulate_delbar(s, in, 1.0, mid);
      detail::accumulate_del(s, mid, 1.0, out);
      break;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = (it->second == Cplx(0.0, 0.0)) ? out.erase(it) : std::next(it);
  }
  return out;
}

/** A finite Fourier sum of complex-valued forms on the torus. */
class SpectralForm {
 public:
  explicit SpectralForm(int n) : n_(n) {
    if (n < 1 || n > 4) throw std::invalid_argument("complex dimension must be 1..4");
  }

  int n() const { return n_; }

  void add(const Mode& mode, int mask_i, int mask_j, Cplx value) {
    check_labels(mode, mask_i, mask_j);
    if (value == Cplx(0.0, 0.0)) return;
    auto& slot = coeffs_[mode][{mask_i, mask_j}];
    slot += value;
    if (slot == Cplx(0.0, 0.0)) {
      coeffs_[mode].erase({mask_i, mask_j});
      if (coeffs_[mode].empty()) coeffs_.erase(mode);
    }
  }

  Cplx coefficient(const Mode& mode, int mask_i, int mask_j) const {
    check_labels(mode, mask_i, mask_j);
    const auto mode_it = coeffs_.find(mode);
    if (mode_it == coeffs_.end()) return {};
    const auto it = mode_it->second.find({mask_i, mask_j});
    return it == mode_it->second.end() ? Cplx{} : it->second;
  }

  const std::map<Mode, MaskCoeffs>& terms() const { return coeffs_; }

  /** Largest coefficient magnitude (the norm used for residual checks). */
  double max_abs() const {
    double m = 0.0;
    for (const auto& [mode, masks] : coeffs_) {
      for (const auto& [labels, value] : masks) m = std::max(m, std::abs(value));
    }
    return m;
  }

  /** Drop coefficients with magnitude <= eps. */
  void prune(double eps) {
    for (auto mode_it = coeffs_.begin(); mode_it != coeffs_.end();) {
      auto& masks = mode_it->second;
      for (auto it = masks.begin(); it != masks.end();) {
        it = (std::abs(it->second) <= eps) ? masks.erase(it) : std::next(it);
      }
      mode_it = masks.empty() ? coeffs_.erase(mode_it) : std::next(mode_it);
    }
  }

  /** True when every term has bidegree (p, q). */
  bool is_homogeneous(int p, int q) const {
    for (const auto& [mode, masks] : coeffs_) {
      for (const auto& [labels, value] : masks) {
        if (std::popcount(static_cast<unsigned>(labels.first)) != p ||
            std::popcount(static_cast<unsigned>(labels.second)) != q) {
          return false;
        }
      }
    }
    return true;
  }

  /** True when every term has total degree deg. */
  bool is_degree(int deg) const {
    for (const auto& [mode, masks] : coeffs_) {
      for (const auto& [labels, value] : masks) {
        if (std::popcount(static_cast<unsigned>(labels.first)) +
                std::popcount(static_cast<unsigned>(labels.second)) !=
            deg) {
          return false;
        }
      }
    }
    return true;
  }

  SpectralForm& operator+=(const SpectralForm& other) {
    require_same_n(other);
    for (const auto& [mode, masks] : other.coeffs_) {
      for (const auto& [labels, value] : masks) {
        add(mode, labels.first, labels.second, value);
      }
    }
    return *this;
  }

  SpectralForm& operator-=(const SpectralForm& other) {
    require_same_n(other);
    for (const auto& [mode, masks] : other.coeffs_) {
      for (const auto& [labels, value] : masks) {
        add(mode, labels.first, labels.second, -value);
      }
    }
    return *this;
  }

  friend SpectralForm operator+(SpectralForm a, const SpectralForm& b) { return a += b; }
  friend SpectralForm operator-(SpectralForm a, const SpectralForm& b) { return a -= b; }

  friend SpectralForm operator*(Cplx scale, const SpectralForm& form) {
    SpectralForm out(form.n_);
    if (scale == Cplx(0.0, 0.0)) return out;
    out.coeffs_ = form.coeffs_;
    for (auto& [mode, masks] : out.coeffs_) {
      for (auto& [labels, value] : masks) value *= scale;
    }
    return out;
  }

 private:
  void check_labels(const Mode& mode, int mask_i, int mask_j) const {
    if (static_cast<int>(mode.size()) != 2 * n_) {
      throw std::invalid_argument("mode vector must have 2n entries");
    }
    if (mask_i < 0 || mask_i >= (1 << n_) || mask_j < 0 || mask_j >= (1 << n_)) {
      throw std::invalid_argument("basis bitmask outside 0..2^n-1");
    }
  }

  void require_same_n(const SpectralForm& other) const {
    if (n_ != other.n_) {
      throw std::invalid_argument("forms live on tori of different dimension");
    }
  }

  int n_;
  std::map<Mode, MaskCoeffs> coeffs_;
};

/** Apply a (possibly twisted) operator; acts independently on every mode. */
inline SpectralForm apply(Op op, const SpectralForm& form, const ConstantLeeForm& theta) {
  if (static_cast<int>(theta.c.size()) != 2 * form.n()) {
    throw std::invalid_argument("Lee form must have 2n coefficients");
  }
  const ConstantLeeForm effective = is_twisted(op) ? theta : ConstantLeeForm::zero(form.n());
  SpectralForm out(form.n());
  for (const auto& [mode, masks] : form.terms()) {
    const auto symbols = mode_symbols(form.n(), mode, effective);
    for (const auto& [labels, value] : apply_mode(op, symbols, masks)) {
      out.add(mode, labels.first, labels.second, value);
    }
  }
  return out;
}

/** Untwisted convenience overload; twisted operators need a Lee form. */
inline SpectralForm apply(Op op, const SpectralForm& form) {
  if (is_twisted(op)) {
    throw std::invalid_argument("twisted operator needs an explicit Lee form");
  }
  return apply(op, form, ConstantLeeForm::zero(form.n()));
}

/** Complex conjugate: swaps holomorphic/antiholomorphic labels, negates modes. */
inline SpectralForm conjugated(const SpectralForm& form) {
  SpectralForm out(form.n());
  for (const auto& [mode, masks] : form.terms()) {
    Mode negated(mode.size());
    for (std::size_t a = 0; a < mode.size(); ++a) negated[a] = -mode[a];
    for (const auto& [labels, value] : masks) {
      const int pi = std::popcount(static_cast<unsigned>(labels.first));
      const int qi = std::popcount(static_cast<unsigned>(labels.second));
      const double sign = (pi * qi) % 2 == 0 ? 1.0 : -1.0;
      out.add(negated, labels.second, labels.first, sign * std::conj(value));
    }
  }
  return out;
}

/**
 * Average along the circle action in one real coordinate direction: the
 * projection keeping exactly the Fourier modes with k_direction = 0.  It
 * commutes with every constant-coefficient operator above, so it preserves
 * closedness, and on twisted-closed forms it does not move the cohomology
 * class (the difference is concentrated in non-invariant modes, where the
 * twisted complex is exact).
 */
inline SpectralForm circle_average(const SpectralForm& form, int direction) {
  if (direction < 0 || direction >= 2 * form.n()) {
    throw std::invalid_argument("averaging direction outside 0..2n-1");
  }
  SpectralForm out(form.n());
  for (const auto& [mode, masks] : form.terms()) {
    if (mode[direction] != 0) continue;
    for (const auto& [labels, value] : masks) {
      out.add(mode, labels.first, labels.second, value);
    }
  }
  return out;
}

/** Basis of Lambda^{p,q}: all (I, J) with the given popcounts, ordered. */
inline std::vector<MaskPair> pq_basis(int n, int p, int q) {
  std::vector<MaskPair> basis;
  for (int mi = 0; mi < (1 << n); ++mi) {
    if (std::popcount(static_cast<unsigned>(mi)) != p) continue;
    for (int mj = 0; mj < (1 << n); ++mj) {
      if (std::popcount(static_cast<unsigned>(mj)) != q) continue;
      basis.emplace_back(mi, mj);
    }
  }
  return basis;
}

/** Basis of Lambda^deg: all (I, J) with total popcount deg, ordered. */
inline std::vector<MaskPair> degree_basis(int n, int deg) {
  std::vector<MaskPair> basis;
  for (int mi = 0; mi < (1 << n); ++mi) {
    for (int mj = 0; mj < (1 << n); ++mj) {
      if (std::popcount(static_cast<unsigned>(mi)) +
              std::popcount(static_cast<unsigned>(mj)) ==
          deg) {
        basis.emplace_back(mi, mj);
      }
    }
  }
  return basis;
}

/** Matrix of an operator at one mode between explicit bases. */
inline Eigen::MatrixXcd op_matrix(Op op, const ModeSymbols& symbols,
                                  const std::vector<MaskPair>& from,
                                  const std::vector<MaskPair>& to) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(to.size()),
                                              static_cast<int>(from.size()));
  std::map<MaskPair, int> to_index;
  for (int r = 0; r < static_cast<int>(to.size()); ++r) to_index[to[r]] = r;
  for (int c = 0; c < static_cast<int>(from.size()); ++c) {
    MaskCoeffs unit{{from[c], Cplx(1.0, 0.0)}};
    for (const auto& [labels, value] : apply_mode(op, symbols, unit)) {
      const auto it = to_index.find(labels);
      if (it == to_index.end()) {
        throw std::logic_error("operator output escapes the target basis");
      }
      m(it->second, c) = value;
    }
  }
  return m;
}

/** Outcome of a least-squares twisted-exactness test. */
struct ExactnessResult {
  bool exact = false;
  /** Largest per-mode least-squares residual in the coefficient max-norm. */
  double max_residual = 0.0;
};

/**
 * Decide whether a homogeneous-degree form is d_theta-exact by solving the
 * mode-local least-squares problems d_theta x_k = eta_k.
 *
 * @throws std::invalid_argument If the form mixes total degrees or has
 *         degree 0 (a 0-form is exact only when zero; that case is allowed
 *         and decided directly).
 */
inline ExactnessResult dtheta_exactness(const SpectralForm& eta,
                                        const ConstantLeeForm& theta, double tol = 1e-9) {
  int deg = -1;
  for (const auto& [mode, masks] : eta.terms()) {
    for (const auto& [labels, value] : masks) {
      const int d = std::popcount(static_cast<unsigned>(labels.first)) +
                    std::popcount(static_cast<unsigned>(labels.second));
      if (deg == -1) deg = d;
      if (d != deg) {
        throw std::invalid_argument("exactness test needs a homogeneous-degree form");
      }
    }
  }
  ExactnessResult result;
  if (deg <= 0) {  // empty or a 0-form: exact iff identically zero
    result.max_residual = eta.max_abs();
    result.exact = result.max_residual <= tol;
    return result;
  }
  const auto source = degree_basis(eta.n(), deg - 1);
  const auto target = degree_basis(eta.n(), deg);
  for (const auto& [mode, masks] : eta.terms()) {
    const auto symbols = mode_symbols(eta.n(), mode, theta);
    const Eigen::MatrixXcd m = op_matrix(Op::DTheta, symbols, source, target);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<int>(target.size()));
    for (int r = 0; r < static_cast<int>(target.size()); ++r) {
      const auto it = masks.find(target[r]);
      if (it != masks.end()) rhs(r) = it->second;
    }
    const Eigen::VectorXcd solution = m.completeOrthogonalDecomposition().solve(rhs);
    const double residual = (m * solution - rhs).lpNorm<Eigen::Infinity>();
    result.max_residual = std::max(result.max_residual, residual);
  }
  result.exact = result.max_residual <= tol;
  return result;
}

}  // namespace mnlck::spectral
