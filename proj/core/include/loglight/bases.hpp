#pragma once

#include "loglight/domains.hpp"
#include "loglight/numkit.hpp"
#include "loglight/poles.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace loglight {

/// One singular term of a reciprocal-log approximant: a branch point, the
/// rotation placing the logarithm's cut, and the pole recipe.
struct BranchTerm {
    Complex branch_point;
    double rotation = 0.0;  ///< theta in log(e^{i*theta}(z - z_j))
    PoleConfig config;
};

/// Term anchored at a domain corner, with the branch cut laid along the
/// exterior bisector.
BranchTerm corner_term(const Corner& corner, const PoleConfig& config);

/// log(e^{i*theta}(z - z0)), principal branch of the rotated argument.
Complex rotated_log(Complex z, Complex branch_point, double rotation);

/// A family of design-matrix columns evaluated on a sample grid, with the
/// data needed to re-evaluate the same (scaled or orthonormalized) columns
/// anywhere else.
struct ColumnBlock {
    ComplexMatrix A;                    ///< grid-size x n_cols
    RealVector scale;                   ///< recorded per-column norms (ones when orthonormalized)
    std::optional<ArnoldiBasis> basis;  ///< set when Arnoldi-stabilized
    bool includes_constant = false;     ///< first column spans the constant direction
};

/// Columns 1/(log(e^{i*theta}(z - z_j)) - s_k) for distinct singularities
/// s_k (HankelParabola or FejerWalsh configs, or an explicit list), scaled
/// to unit discrete norm.
ColumnBlock columns_distinct(const ComplexVector& z, const BranchTerm& term);
ColumnBlock columns_distinct(const ComplexVector& z, Complex branch_point, double rotation,
                             const ComplexVector& s);

/// Columns spanning {w^0, ..., w^n}, w = 1/(log(e^{i*theta}(z - z_j)) - s0).
/// With use_arnoldi the returned columns are the orthonormalized basis and
/// the recurrence record is kept for later evaluation.
ColumnBlock columns_confluent(const ComplexVector& z, const BranchTerm& term, bool use_arnoldi);

/// Columns spanning {w^J, ..., w^{J+n}} (no constant): the singular part is
/// forced to vanish like O(1/log^J) at the branch point.  The Arnoldi
/// variant seeds the Krylov sequence with w^J so powers below J are never
/// formed.
ColumnBlock columns_pinned(const ComplexVector& z, const BranchTerm& term, bool use_arnoldi);

/// Polynomial basis of dimension degree+1: Arnoldi-orthonormalized
/// (multiplier = z) or raw monomials.
ColumnBlock columns_polynomial(const ComplexVector& z, int degree, bool use_arnoldi);

/// Exponentially clustered pole locations for a lightning (rational) term:
/// s_k = corner + direction * exp(4*(sqrt(k) - sqrt(n))), k = 1..n.
ComplexVector lightning_pole_locations(Complex corner, Complex direction, int n);

/// Columns 1/(z - s_k) at the lightning poles, unit-normalized.  If an
/// inside predicate is supplied, a pole landing inside the domain is an
/// error.
ColumnBlock lightning_columns(const ComplexVector& z, Complex corner, Complex direction,
                              int n, const std::function<bool(Complex)>& inside = {});

/// Fitted polynomial tail p_0.
struct PolyPart {
    int degree = 0;
    bool use_arnoldi = true;
    ComplexVector coeff;
    std::optional<ArnoldiBasis> basis;
    RealVector scale;
};

struct FittedLogTerm {
    BranchTerm term;
    ComplexVector poles;  ///< explicit s_k for distinct kinds (empty otherwise)
    ComplexVector coeff;  ///< aligned with the kept columns
    std::optional<ArnoldiBasis> basis;
    RealVector scale;
    bool constant_dropped = false;  ///< family's constant column folded into p_0
};

/// g(z) = sum_j (singular family at z_j) + p_0(z), with all the
/// stabilization data required to evaluate off the training grid.
class ReciprocalLogApproximant {
  public:
    PolyPart poly;
    std::vector<FittedLogTerm> terms;
    int dof = 0;
    bool rank_deficient = false;
    double training_err = 0.0;
    bool real_coefficients = false;

    ComplexVector evaluate(const ComplexVector& z) const;
    Complex evaluate_one(Complex z) const;
};

struct LightningTerm {
    Complex corner;
    Complex direction;
    ComplexVector poles;  ///< z-plane pole locations
    ComplexVector coeff;
    RealVector scale;
};

/// r(z) = sum_j sum_k d_jk/(z - s_jk) + p_0(z).
class LightningRationalApproximant {
  public:
    PolyPart poly;
    std::vector<LightningTerm> terms;
    int dof = 0;
    bool rank_deficient = false;
    double training_err = 0.0;
    bool real_coefficients = false;

    ComplexVector evaluate(const ComplexVector& z) const;
    Complex evaluate_one(Complex z) const;
};

}  // namespace loglight
