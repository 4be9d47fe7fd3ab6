#pragma once

#include "loglight/bases.hpp"
#include "loglight/domains.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace loglight {

/// Weighted samples of the target on a grid.
struct SampleSet {
    ComplexVector points;
    ComplexVector values;
    RealVector weights;  ///< size 0 means uniform

    static SampleSet from_grid(const ClusteredGrid& grid,
                               const std::function<Complex(Complex)>& f);
};

/// What to fit: singular terms, polynomial tail, stabilization and
/// coefficient-field choices.  With real_coefficients each complex basis
/// column phi contributes the two real columns Re(phi) and -Im(phi), and
/// the redundant imaginary part of the global constant is pinned to zero.
struct FitSpec {
    std::vector<BranchTerm> terms;
    int poly_degree = 0;
    bool use_arnoldi = true;
    bool real_coefficients = false;
};

/// Assemble the design matrix over the samples, solve least squares
/// (2x oversampling enforced), and package the approximant.
ReciprocalLogApproximant fit(const FitSpec& spec, const SampleSet& samples);

struct LawsonResult {
    ReciprocalLogApproximant approx;
    /// max |residual| on the training grid after each solve (steps+1 entries)
    std::vector<double> max_residual_history;
    bool weight_collapse = false;
};

/// Iteratively reweighted least squares toward the L-inf optimum for the
/// fixed basis: start from the unweighted fit, then `steps` times set
/// w_i <- w_i * |r_i|, renormalize to sum 1, and re-solve.
LawsonResult lawson_refine(const FitSpec& spec, const SampleSet& samples, int steps = 20);

/// Lightning (rational) analogue of FitSpec: simple poles clustered
/// outside the domain near each corner.
struct LightningSpec {
    std::vector<std::pair<Complex, Complex>> corners;  ///< (corner, exterior direction)
    int n_per_corner = 1;
    int poly_degree = 0;
    bool use_arnoldi = true;
    bool real_coefficients = false;
    std::function<bool(Complex)> pole_inside_check;
};

LightningRationalApproximant fit_lightning(const LightningSpec& spec,
                                           const SampleSet& samples);

struct MaxErrorResult {
    double err = 0.0;
    Complex argmax;
};

/// max |g - f| over the grid (|Re g - Re f| when real_part), with argmax.
template <class Approx>
MaxErrorResult max_error(const Approx& g, const std::function<Complex(Complex)>& f,
                         const ComplexVector& grid, bool real_part = false) {
    ComplexVector gv = g.evaluate(grid);
    MaxErrorResult res;
    res.argmax = grid.size() ? grid[0] : Complex(0, 0);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        Complex e = gv[i] - f(grid[i]);
        double a = real_part ? std::abs(e.real()) : std::abs(e);
        if (a > res.err) {
            res.err = a;
            res.argmax = grid[i];
        }
    }
    return res;
}

struct ErrorCurvePoint {
    Complex z;
    Complex err;  ///< g(z) - f(z)
};

template <class Approx>
std::vector<ErrorCurvePoint> error_curve(const Approx& g,
                                         const std::function<Complex(Complex)>& f,
                                         const ComplexVector& grid) {
    ComplexVector gv = g.evaluate(grid);
    std::vector<ErrorCurvePoint> out(static_cast<size_t>(grid.size()));
    for (Eigen::Index i = 0; i < grid.size(); ++i)
        out[static_cast<size_t>(i)] = {grid[i], gv[i] - f(grid[i])};
    return out;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double corr = 0.0;  ///< Pearson correlation
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct ConvergencePoint {
    int N = 0;              ///< degrees of freedom
    double max_err = 0.0;   ///< validation-grid error
    double boundary_err = 0.0;  ///< training-grid residual
    double runtime_ms = 0.0;
};

struct FitOutcome {
    int dof = 0;
    double validation_err = 0.0;
    double training_err = 0.0;
};

/// (N, error) series with exponential rates fitted over the
/// pre-rounding-plateau region err > err_floor.
struct ConvergenceReport {
    std::vector<ConvergencePoint> series;
    double err_floor = 1e-11;
    double rate_vs_N = 0.0;           ///< slope of ln(err) against N
    double rate_vs_N_over_logN = 0.0; ///< slope of ln(err) against N/ln(N)

    /// ln(max_err) regressed against xform(N), filtered by err_floor.
    LineFit line_against(const std::function<double(double)>& xform) const;
};

/// Run one fit per n (strictly increasing), timing each, and fit the rates.
ConvergenceReport convergence_sweep(const std::vector<int>& n_values,
                                    const std::function<FitOutcome(int)>& run);

}  // namespace loglight
