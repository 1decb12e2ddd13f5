/**
 * Cohomology dimensions of the flat-torus model, mode by mode.
 *
 * Every operator in the spectral model is block-diagonal over Fourier modes,
 * so each cohomology dimension is a sum over modes of small finite-dimensional
 * rank computations.  Dimensions are reported together with a cutoff
 * stability flag (recompute at cutoff+2 and compare) and a low-confidence
 * flag aggregated from the underlying singular-value gap tests.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "mnlck/linalg.hpp"
#include "mnlck/parallel.hpp"
#include "mnlck/spectral.hpp"

namespace mnlck::spectral {

namespace detail {

/** Visit every mode with first coordinate k_0 = value, odometer order. */
template <typename Visitor>
void visit_modes_with_leading(int n, int cutoff, int leading, Visitor&& visit) {
  Mode k(2 * n, -cutoff);
  k[0] = leading;
  while (true) {
    visit(const_cast<const Mode&>(k));
    int digit = 2 * n - 1;
    while (digit >= 1 && k[digit] == cutoff) {
      k[digit] = -cutoff;
      --digit;
    }
    if (digit < 1) break;
    ++k[digit];
  }
}

struct ModeTally {
  std::vector<long long> de_rham;
  std::vector<std::vector<long long>> dolbeault;
  long long bott_chern_11 = 0;
  bool low_confidence = false;

  ModeTally() = default;
  explicit ModeTally(int n)
      : de_rham(2 * n + 1, 0),
        dolbeault(n + 1, std::vector<long long>(n + 1, 0)) {}

  ModeTally& operator+=(const ModeTally& other) {
    for (std::size_t i = 0; i < de_rham.size(); ++i) de_rham[i] += other.de_rham[i];
    for (std::size_t p = 0; p < dolbeault.size(); ++p)
      for (std::size_t q = 0; q < dolbeault[p].size(); ++q)
        dolbeault[p][q] += other.dolbeault[p][q];
    bott_chern_11 += other.bott_chern_11;
    low_confidence = low_confidence || other.low_confidence;
    return *this;
  }
};

inline int checked_rank(const Eigen::MatrixXcd& m, bool& low_confidence) {
  const NumericRank r = rank_svd(m);
  low_confidence = low_confidence || r.low_confidence;
  return r.rank;
}

/** Top-over-bottom concatenation that tolerates zero-row blocks. */
inline Eigen::MatrixXcd vcat(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

/** All per-mode dimension contributions for one mode. */
inline void tally_mode(int n, const ModeSymbols& s, ModeTally& tally) {
  // de Rham: ranks of d_theta through all degrees
  std::vector<int> d_rank(2 * n + 1, 0);
  for (int deg = 0; deg < 2 * n; ++deg) {
    const auto from = degree_basis(n, deg);
    const auto to = degree_basis(n, deg + 1);
    d_rank[deg] = checked_rank(op_matrix(Op::DTheta, s, from, to), tally.low_confidence);
  }
  for (int deg = 0; deg <= 2 * n; ++deg) {
    const long long dim = static_cast<long long>(degree_basis(n, deg).size());
    tally.de_rham[deg] += dim - d_rank[deg] - (deg > 0 ? d_rank[deg - 1] : 0);
  }

  // Dolbeault rows: delbar_theta along q for each fixed p
  for (int p = 0; p <= n; ++p) {
    std::vector<int> q_rank(n + 1, 0);
    for (int q = 0; q < n; ++q) {
      q_rank[q] = checked_rank(
          op_matrix(Op::DelbarTheta, s, pq_basis(n, p, q), pq_basis(n, p, q + 1)),
          tally.low_confidence);
    }
    for (int q = 0; q <= n; ++q) {
      const long long dim = static_cast<long long>(pq_basis(n, p, q).size());
      tally.dolbeault[p][q] += dim - q_rank[q] - (q > 0 ? q_rank[q - 1] : 0);
    }
  }

  // Bott-Chern (1,1): (ker del ^ ker delbar) / im del delbar
  if (n >= 1) {
    const auto b11 = pq_basis(n, 1, 1);
    const Eigen::MatrixXcd del =
        op_matrix(Op::DelTheta, s, b11, pq_basis(n, 2, 1));
    const Eigen::MatrixXcd delbar =
        op_matrix(Op::DelbarTheta, s, b11, pq_basis(n, 1, 2));
    const long long closed = static_cast<long long>(b11.size()) -
                             checked_rank(vcat(del, delbar), tally.low_confidence);
    const long long exact = checked_rank(
        op_matrix(Op::DelDelbarTheta, s, pq_basis(n, 0, 0), b11), tally.low_confidence);
    tally.bott_chern_11 += closed - exact;
  }
}

inline ModeTally tally_all(int n, int cutoff, const ConstantLeeForm& theta) {
  const int chunk_count = 2 * cutoff + 1;
  std::vector<ModeTally> partial(chunk_count, ModeTally(n));
  parallel_chunks(chunk_count, [&](int chunk) {
    visit_modes_with_leading(n, cutoff, chunk - cutoff, [&](const Mode& k) {
      tally_mode(n, mode_symbols(n, k, theta), partial[chunk]);
    });
  });
  ModeTally total(n);
  for (const auto& part : partial) total += part;
  return total;
}

}  // namespace detail

/** Cohomology dimensions of the model at a fixed cutoff. */
struct DimsReport {
  /** Twisted de Rham dimensions by degree 0..2n. */
  std::vector<long long> de_rham;
  /** Twisted Dolbeault dimensions h^{p,q}, 0 <= p,q <= n. */
  std::vector<std::vector<long long>> dolbeault;
  /** Twisted Bott-Chern dimension in bidegree (1,1). */
  long long bott_chern_11 = 0;
  int cutoff = 0;
  /** True when recomputing at cutoff+2 reproduces every dimension. */
  bool stable = false;
  bool low_confidence = false;
};

/**
 * All cohomology dimensions of the twisted model, summed over modes.
 *
 * @param check_stability Recompute at cutoff+2 and compare (doubles cost).
 */
inline DimsReport harmonic_dims(const FlatTorus& torus, const ConstantLeeForm& theta,
                                bool check_stability = true) {
  if (static_cast<int>(theta.c.size()) != 2 * torus.n) {
    throw std::invalid_argument("Lee form must have 2n coefficients");
  }
  const auto tally = detail::tally_all(torus.n, torus.cutoff, theta);
  DimsReport report;
  report.de_rham = tally.de_rham;
  report.dolbeault = tally.dolbeault;
  report.bott_chern_11 = tally.bott_chern_11;
  report.cutoff = torus.cutoff;
  report.low_confidence = tally.low_confidence;
  if (check_stability) {
    const auto wider = detail::tally_all(torus.n, torus.cutoff + 2, theta);
    report.stable = wider.de_rham == tally.de_rham &&
                    wider.dolbeault == tally.dolbeault &&
                    wider.bott_chern_11 == tally.bott_chern_11;
    report.low_confidence = report.low_confidence || wider.low_confidence;
  } else {
    report.stable = true;
  }
  return report;
}

/**
 * Rank bookkeeping for the exact sequence
 *
 *   H^1(L) + conj H^1(conj L)  -->  H^{1,1}_BC  --nu-->  H^2_theta ,
 *
 * where the first map sends classes (a, b) to [del_theta a + delbar_theta b]
 * and nu forgets down to twisted de Rham cohomology.  Exactness in the
 * middle is checked numerically as rank(image) == dim ker(nu), with the two
 * sides computed along independent routes (images of kernel bases vs.
 * quotient dimensions of nu).
 */
struct BCSequenceReport {
  long long h1_bundle = 0;       // twisted Dolbeault h^{0,1}
  long long h1_conjugate = 0;    // conjugate partner: h^{1,0} w.r.t. del_theta
  long long h11_bott_chern = 0;
  long long h2_de_rham = 0;
  long long rank_image = 0;      // rank of (a,b) -> [del a + delbar b]
  long long dim_ker_nu = 0;
  bool exact = false;
  int cutoff = 0;
  bool stable = false;
  bool low_confidence = false;
};

namespace detail {

struct SequenceTally {
  long long h1_bundle = 0, h1_conjugate = 0, h11 = 0, h2 = 0;
  long long rank_image = 0, dim_ker_nu = 0;
  bool low_confidence = false;

  SequenceTally& operator+=(const SequenceTally& o) {
    h1_bundle += o.h1_bundle;
    h1_conjugate += o.h1_conjugate;
    h11 += o.h11;
    h2 += o.h2;
    rank_image += o.rank_image;
    dim_ker_nu += o.dim_ker_nu;
    low_confidence = low_confidence || o.low_confidence;
    return *this;
  }

  bool same_dims(const SequenceTally& o) const {
    return h1_bundle == o.h1_bundle && h1_conjugate == o.h1_conjugate && h11 == o.h11 &&
           h2 == o.h2 && rank_image == o.rank_image && dim_ker_nu == o.dim_ker_nu;
  }
};

/** Side-by-side concatenation that tolerates zero-column blocks. */
inline Eigen::MatrixXcd hcat(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

inline void tally_sequence_mode(int n, const ModeSymbols& s, SequenceTally& tally) {
  const auto b00 = pq_basis(n, 0, 0);
  const auto b10 = pq_basis(n, 1, 0);
  const auto b01 = pq_basis(n, 0, 1);
  const auto b11 = pq_basis(n, 1, 1);
  bool& lc = tally.low_confidence;

  // twisted Dolbeault h^{0,1} and its conjugate partner h^{1,0}
  const Eigen::MatrixXcd delbar_00 = op_matrix(Op::DelbarTheta, s, b00, b01);
  const Eigen::MatrixXcd delbar_01 = op_matrix(Op::DelbarTheta, s, b01, pq_basis(n, 0, 2));
  tally.h1_bundle += static_cast<long long>(b01.size()) - checked_rank(delbar_01, lc) -
                     checked_rank(delbar_00, lc);
  const Eigen::MatrixXcd del_00 = op_matrix(Op::DelTheta, s, b00, b10);
  const Eigen::MatrixXcd del_10 = op_matrix(Op::DelTheta, s, b10, pq_basis(n, 2, 0));
  tally.h1_conjugate += static_cast<long long>(b10.size()) - checked_rank(del_10, lc) -
                        checked_rank(del_00, lc);

  // Bott-Chern (1,1): closed under both operators modulo del delbar
  const Eigen::MatrixXcd del_11 = op_matrix(Op::DelTheta, s, b11, pq_basis(n, 2, 1));
  const Eigen::MatrixXcd delbar_11 = op_matrix(Op::DelbarTheta, s, b11, pq_basis(n, 1, 2));
  const Eigen::MatrixXcd bc_stack = vcat(del_11, delbar_11);
  const Eigen::MatrixXcd deldelbar = op_matrix(Op::DelDelbarTheta, s, b00, b11);
  const long long h11_mode = static_cast<long long>(b11.size()) -
                             checked_rank(bc_stack, lc) - checked_rank(deldelbar, lc);
  tally.h11 += h11_mode;

  // twisted de Rham degree 2
  const auto deg1 = degree_basis(n, 1);
  const auto deg2 = degree_basis(n, 2);
  const Eigen::MatrixXcd d_1 = op_matrix(Op::DTheta, s, deg1, deg2);
  const Eigen::MatrixXcd d_2 = op_matrix(Op::DTheta, s, deg2, degree_basis(n, 3));
  tally.h2 += static_cast<long long>(deg2.size()) - checked_rank(d_2, lc) -
              checked_rank(d_1, lc);

  // image of (a, b) -> del a + delbar b on Dolbeault-closed representatives
  const Eigen::MatrixXcd ker_delbar_01 = kernel_basis(delbar_01);
  const Eigen::MatrixXcd ker_del_10 = kernel_basis(del_10);
  const Eigen::MatrixXcd del_01 = op_matrix(Op::DelTheta, s, b01, b11);
  const Eigen::MatrixXcd delbar_10 = op_matrix(Op::DelbarTheta, s, b10, b11);
  const Eigen::MatrixXcd image_cols =
      hcat(del_01 * ker_delbar_01, delbar_10 * ker_del_10);
  const long long b_bc_rank = checked_rank(deldelbar, lc);
  {
    const NumericRank joint = rank_svd(hcat(image_cols, deldelbar));
    lc = lc || joint.low_confidence;
    tally.rank_image += joint.rank - b_bc_rank;
  }

  // ker nu through the independent quotient route:
  // rank nu = dim(Z_BC + im d_theta) - dim im d_theta on degree-2 forms,
  // with Lambda^{1,1} embedded into the full degree-2 space.
  Eigen::MatrixXcd z_bc_11 = kernel_basis(bc_stack);
  Eigen::MatrixXcd z_bc = Eigen::MatrixXcd::Zero(static_cast<int>(deg2.size()),
                                                 z_bc_11.cols());
  for (int r = 0; r < static_cast<int>(b11.size()); ++r) {
    const auto it = std::find(deg2.begin(), deg2.end(), b11[r]);
    z_bc.row(it - deg2.begin()) = z_bc_11.row(r);
  }
  const long long rank_d1 = checked_rank(d_1, lc);
  const long long rank_nu = dim_column_span_union(z_bc, d_1) - rank_d1;
  tally.dim_ker_nu += h11_mode - rank_nu;
}

inline SequenceTally tally_sequence_all(int n, int cutoff, const ConstantLeeForm& theta) {
  const int chunk_count = 2 * cutoff + 1;
  std::vector<SequenceTally> partial(chunk_count);
  parallel_chunks(chunk_count, [&](int chunk) {
    visit_modes_with_leading(n, cutoff, chunk - cutoff, [&](const Mode& k) {
      tally_sequence_mode(n, mode_symbols(n, k, theta), partial[chunk]);
    });
  });
  SequenceTally total;
  for (const auto& part : partial) total += part;
  return total;
}

}  // namespace detail

/** Build the exact-sequence rank report; see BCSequenceReport. */
inline BCSequenceReport bc_exact_sequence_report(const FlatTorus& torus,
                                                 const ConstantLeeForm& theta,
                                                 bool check_stability = true) {
  if (static_cast<int>(theta.c.size()) != 2 * torus.n) {
    throw std::invalid_argument("Lee form must have 2n coefficients");
  }
  const auto tally = detail::tally_sequence_all(torus.n, torus.cutoff, theta);
  BCSequenceReport report;
  report.h1_bundle = tally.h1_bundle;
  report.h1_conjugate = tally.h1_conjugate;
  report.h11_bott_chern = tally.h11;
  report.h2_de_rham = tally.h2;
  report.rank_image = tally.rank_image;
  report.dim_ker_nu = tally.dim_ker_nu;
  report.exact = tally.rank_image == tally.dim_ker_nu;
  report.cutoff = torus.cutoff;
  report.low_confidence = tally.low_confidence;
  if (check_stability) {
    const auto wider = detail::tally_sequence_all(torus.n, torus.cutoff + 2, theta);
    report.stable = tally.same_dims(wider);
    report.low_confidence = report.low_confidence || wider.low_confidence;
  } else {
    report.stable = true;
  }
  return report;
}

}  // namespace mnlck::spectral
