#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace loglight {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Relative diagonal threshold below which a triangular factor entry is
/// treated as zero when deciding rank.
inline constexpr double kRankTolerance = 1e-13;

struct LstsqResult {
    ComplexVector x;
    bool rank_deficient = false;
};

struct RealLstsqResult {
    RealVector x;
    bool rank_deficient = false;
};

/// Solve min_x sum_i w_i |A_i x - b_i|^2 by column-pivoted Householder QR
/// (w == nullptr means uniform weights).  Rank deficiency to working
/// precision is flagged, not fatal; the pivoted solve then returns a
/// minimum-norm-style solution.
LstsqResult lstsq(const ComplexMatrix& A, const ComplexVector& b,
                  const RealVector* w = nullptr);

RealLstsqResult lstsq(const RealMatrix& A, const RealVector& b,
                      const RealVector* w = nullptr);

/// Orthonormal basis on a sample set, built by a Krylov-style recurrence:
/// each new column is the previous one multiplied pointwise by a generator
/// ("multiplier") and orthogonalized against all earlier columns.
///
/// Columns of Q are orthonormal under the discrete inner product
/// <u,v> = (1/rows) * sum_i conj(u_i) v_i, so column norms stay O(1)
/// independent of grid size and the Hessenberg entries H are scale-free
/// across grid refinements.
struct ArnoldiBasis {
    ComplexVector nodes;          ///< training sample points
    std::string multiplier_tag;   ///< how the generator is derived from a node
    ComplexMatrix Q;              ///< rows x (dim+1), orthonormal columns
    ComplexMatrix H;              ///< (dim+1) x dim recurrence coefficients
    int dim = 0;
    double seed_scale = 1.0;      ///< discrete norm of the seed column
    bool breakdown = false;       ///< true if the recurrence stopped early

    int rows() const { return static_cast<int>(Q.rows()); }
};

/// Build an ArnoldiBasis of dimension `dim` (dim+1 columns) on `nodes`.
/// `multiplier` holds the generator values at the nodes.  The Krylov
/// sequence starts from `seed` (constant one if absent), which is how
/// pinned bases that must omit low powers are produced.
///
/// Uses modified Gram-Schmidt with one reorthogonalization pass; on
/// breakdown (norm underflow at step k) the basis is truncated to
/// dimension k and the breakdown flag is set.
ArnoldiBasis build_arnoldi(const ComplexVector& nodes,
                           const ComplexVector& multiplier, int dim,
                           const ComplexVector* seed = nullptr,
                           std::string multiplier_tag = {});

/// Re-evaluate the basis columns at new points through the stored
/// Hessenberg recurrence q_{k+1} = (multiplier*q_k - sum_j H(j,k) q_j) / H(k+1,k).
/// `multiplier` (and `seed`, when the basis was seeded) must be evaluated
/// at the new points with the same generator definition used at build time.
/// Throws if the recurrence hits H(k+1,k) == 0 (a breakdown-truncated basis
/// evaluated past its truncation point).
ComplexMatrix eval_arnoldi(const ArnoldiBasis& basis,
                           const ComplexVector& multiplier,
                           const ComplexVector* seed = nullptr);

}  // namespace loglight
