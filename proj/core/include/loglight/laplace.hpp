#pragma once

#include "loglight/fit.hpp"

#include <variant>
#include <vector>

namespace loglight {

using BoundaryData = std::function<double(Complex)>;

struct LaplaceOptions {
    int per_edge = 500;          ///< training points per boundary edge
    double min_dist = 1e-14;     ///< relative clustering depth
    int validation_factor = 4;   ///< validation grid density multiple
    /// Validation clustering depth; 0 means match the training depth.
    /// Clustering the validation grid deeper than training probes the
    /// region where no fitting happened, which measures the (slow)
    /// sub-resolution drift of reciprocal-log terms instead of the
    /// approximation quality on the resolved boundary.
    double validation_min_dist = 0.0;
    bool use_arnoldi = true;
};

/// Harmonic solution u(z) = Re g(z) of a Dirichlet problem.  u is harmonic
/// wherever g is analytic; by the maximum principle the interior error is
/// bounded by the boundary residual, which is what boundary_err reports.
struct HarmonicSolution {
    PlanarDomain domain;
    std::variant<ReciprocalLogApproximant, LightningRationalApproximant> g;
    double boundary_err = 0.0;  ///< max |u - data| on the validation boundary grid
    double training_err = 0.0;  ///< max |u - data| on the training grid
    int dof = 0;                ///< real degrees of freedom

    /// g(z), without the domain membership check (field export).
    ComplexVector evaluate_complex(const ComplexVector& z) const;
};

/// Log-lightning Dirichlet solve: n singularities per corner on the
/// parabolic contour scaled by n*pole_scale_factor, a degree-poly_degree
/// polynomial tail, real-coefficient least squares on a clustered boundary
/// grid.  For m corners the real dof count is 2(m*n + poly_degree + 1) - 1.
HarmonicSolution solve_dirichlet(const PlanarDomain& domain, const BoundaryData& data,
                                 int n_per_corner, int poly_degree,
                                 double pole_scale_factor = 1.0 / 3.0,
                                 const LaplaceOptions& options = {});

/// Lightning (rational) comparison solver: simple poles on the exterior
/// bisectors at distances exp(4(sqrt(k) - sqrt(n))).
HarmonicSolution solve_dirichlet_lightning(const PlanarDomain& domain,
                                           const BoundaryData& data, int n_per_corner,
                                           int poly_degree,
                                           const LaplaceOptions& options = {});

/// u = Re g at points of the closed domain; a point outside is an error.
RealVector eval_solution(const HarmonicSolution& sol, const ComplexVector& z);

struct FieldSample {
    Complex z;
    double u = 0.0;
    Complex gval;
};

/// Sample u (and g) on an nx-by-ny lattice over the bounding box, clipped
/// to the domain.
std::vector<FieldSample> sample_field(const HarmonicSolution& sol, int nx, int ny);

}  // namespace loglight
