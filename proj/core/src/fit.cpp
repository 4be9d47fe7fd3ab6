#include "loglight/fit.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace loglight {

SampleSet SampleSet::from_grid(const ClusteredGrid& grid,
                               const std::function<Complex(Complex)>& f) {
    SampleSet s;
    s.points = grid.as_vector();
    s.values.resize(s.points.size());
    for (Eigen::Index i = 0; i < s.points.size(); ++i) s.values[i] = f(s.points[i]);
    return s;
}

namespace {

struct Assembly {
    ComplexMatrix A;
    PolyPart poly;
    std::vector<FittedLogTerm> terms;
    std::vector<Eigen::Index> cols_per_term;
    Eigen::Index poly_cols = 0;
};

Assembly assemble(const FitSpec& spec, const ComplexVector& pts) {
    Assembly as;

    ColumnBlock pb = columns_polynomial(pts, spec.poly_degree, spec.use_arnoldi);
    as.poly.degree = spec.poly_degree;
    as.poly.use_arnoldi = spec.use_arnoldi;
    as.poly.basis = pb.basis;
    as.poly.scale = pb.scale;
    as.poly_cols = pb.A.cols();

    std::vector<ComplexMatrix> kept;
    kept.reserve(spec.terms.size());
    Eigen::Index total = as.poly_cols;

    for (const BranchTerm& term : spec.terms) {
        FittedLogTerm ft;
        ft.term = term;
        ComplexMatrix cols;
        switch (term.config.kind) {
            case PoleKind::HankelParabola:
            case PoleKind::FejerWalsh: {
                ft.poles = term.config.kind == PoleKind::HankelParabola
                               ? hankel_poles(term.config.n, term.config.scale)
                               : fejer_walsh_poles(term.config.n, term.config.fw.sigma,
                                                   term.config.fw.mu, term.config.fw.rho)
                                     .poles;
                ColumnBlock b =
                    columns_distinct(pts, term.branch_point, term.rotation, ft.poles);
                cols = std::move(b.A);
                ft.scale = b.scale;
                break;
            }
            case PoleKind::Confluent: {
                ColumnBlock b = columns_confluent(pts, term, spec.use_arnoldi);
                // The family's constant direction is supplied by the global
                // polynomial part; keep only the n non-constant columns.
                Eigen::Index n = b.A.cols() - 1;
                cols = b.A.rightCols(n);
                ft.scale = b.scale.tail(n);
                ft.basis = std::move(b.basis);
                ft.constant_dropped = true;
                break;
            }
            case PoleKind::Pinned: {
                ColumnBlock b = columns_pinned(pts, term, spec.use_arnoldi);
                cols = std::move(b.A);
                ft.scale = b.scale;
                ft.basis = std::move(b.basis);
                break;
            }
        }
        as.cols_per_term.push_back(cols.cols());
        total += cols.cols();
        kept.push_back(std::move(cols));
        as.terms.push_back(std::move(ft));
    }

    as.A.resize(pts.size(), total);
    as.A.leftCols(as.poly_cols) = pb.A;
    Eigen::Index off = as.poly_cols;
    for (const auto& m : kept) {
        as.A.middleCols(off, m.cols()) = m;
        off += m.cols();
    }
    return as;
}

/// Real expansion of the complex design matrix: [Re phi_j | -Im phi_j]
/// per column, with the imaginary part of the global constant omitted.
/// Unknown layout: [a_0, a_1, b_1, a_2, b_2, ...].
RealMatrix real_expand(const ComplexMatrix& A) {
    const Eigen::Index K = A.cols();
    RealMatrix Ar(A.rows(), 2 * K - 1);
    Ar.col(0) = A.col(0).real();
    for (Eigen::Index j = 1; j < K; ++j) {
        Ar.col(2 * j - 1) = A.col(j).real();
        Ar.col(2 * j) = -A.col(j).imag();
    }
    return Ar;
}

ComplexVector real_coeffs_to_complex(const RealVector& x, Eigen::Index K) {
    ComplexVector c(K);
    c[0] = Complex(x[0], 0.0);
    for (Eigen::Index j = 1; j < K; ++j) c[j] = Complex(x[2 * j - 1], x[2 * j]);
    return c;
}

struct SolveOutcome {
    ComplexVector coeff;      // complex coefficients (reassembled in real mode)
    RealVector residual_abs;  // per-sample |residual|
    double max_residual = 0.0;
    bool rank_deficient = false;
};

class System {
  public:
    System(const FitSpec& spec, const SampleSet& samples)
        : assembly_(assemble(spec, samples.points)), real_(spec.real_coefficients) {
        if (samples.values.size() != samples.points.size())
            throw std::invalid_argument("fit: values/points size mismatch");
        if (!samples.values.allFinite())
            throw std::invalid_argument("fit: non-finite sample values");
        const Eigen::Index M = samples.points.size();
        const Eigen::Index K = assembly_.A.cols();
        dof_ = real_ ? 2 * static_cast<int>(K) - 1 : static_cast<int>(K);
        if (2 * static_cast<Eigen::Index>(dof_) > M)
            throw std::invalid_argument(
                "fit: oversampling violated (need at least 2 samples per dof)");
        if (real_) {
            Ar_ = real_expand(assembly_.A);
            br_ = samples.values.real();
        } else {
            b_ = samples.values;
        }
    }

    SolveOutcome solve(const RealVector* w) const {
        SolveOutcome out;
        if (real_) {
            RealLstsqResult res = lstsq(Ar_, br_, w);
            out.coeff = real_coeffs_to_complex(res.x, assembly_.A.cols());
            out.residual_abs = (Ar_ * res.x - br_).cwiseAbs();
            out.rank_deficient = res.rank_deficient;
        } else {
            LstsqResult res = lstsq(assembly_.A, b_, w);
            out.coeff = res.x;
            out.residual_abs = (assembly_.A * res.x - b_).cwiseAbs();
            out.rank_deficient = res.rank_deficient;
        }
        out.max_residual = out.residual_abs.size() ? out.residual_abs.maxCoeff() : 0.0;
        return out;
    }

    ReciprocalLogApproximant package(const SolveOutcome& s) const {
        ReciprocalLogApproximant g;
        g.poly = assembly_.poly;
        g.poly.coeff = s.coeff.head(assembly_.poly_cols);
        g.terms = assembly_.terms;
        Eigen::Index off = assembly_.poly_cols;
        for (size_t t = 0; t < g.terms.size(); ++t) {
            Eigen::Index nc = assembly_.cols_per_term[t];
            g.terms[t].coeff = s.coeff.segment(off, nc);
            off += nc;
        }
        g.dof = dof_;
        g.rank_deficient = s.rank_deficient;
        g.training_err = s.max_residual;
        g.real_coefficients = real_;
        return g;
    }

    Eigen::Index rows() const { return real_ ? Ar_.rows() : b_.size(); }

  private:
    Assembly assembly_;
    bool real_ = false;
    ComplexVector b_;
    RealMatrix Ar_;
    RealVector br_;
    int dof_ = 0;
};

}  // namespace

ReciprocalLogApproximant fit(const FitSpec& spec, const SampleSet& samples) {
    System sys(spec, samples);
    const RealVector* w = samples.weights.size() > 0 ? &samples.weights : nullptr;
    return sys.package(sys.solve(w));
}

LawsonResult lawson_refine(const FitSpec& spec, const SampleSet& samples, int steps) {
    if (steps < 0) throw std::invalid_argument("lawson_refine: steps must be >= 0");
    System sys(spec, samples);

    LawsonResult result;
    SolveOutcome current = sys.solve(nullptr);
    result.max_residual_history.push_back(current.max_residual);

    const Eigen::Index M = sys.rows();
    RealVector w = RealVector::Constant(M, 1.0 / static_cast<double>(M));
    for (int step = 0; step < steps; ++step) {
        if (current.max_residual < 1e-15) break;  // already at rounding level
        w = w.cwiseProduct(current.residual_abs);
        double total = w.sum();
        if (!(total > 0.0)) {
            result.weight_collapse = true;
            break;
        }
        w /= total;
        current = sys.solve(&w);
        result.max_residual_history.push_back(current.max_residual);
    }
    result.approx = sys.package(current);
    return result;
}

LightningRationalApproximant fit_lightning(const LightningSpec& spec,
                                           const SampleSet& samples) {
    if (samples.values.size() != samples.points.size())
        throw std::invalid_argument("fit_lightning: values/points size mismatch");

    ColumnBlock pb = columns_polynomial(samples.points, spec.poly_degree, spec.use_arnoldi);
    const Eigen::Index poly_cols = pb.A.cols();

    std::vector<LightningTerm> terms;
    std::vector<ComplexMatrix> blocks;
    Eigen::Index total = poly_cols;
    for (const auto& [corner, direction] : spec.corners) {
        ColumnBlock b = lightning_columns(samples.points, corner, direction,
                                          spec.n_per_corner, spec.pole_inside_check);
        LightningTerm t;
        t.corner = corner;
        t.direction = direction / std::abs(direction);
        t.poles = lightning_pole_locations(corner, direction, spec.n_per_corner);
        t.scale = b.scale;
        total += b.A.cols();
        blocks.push_back(std::move(b.A));
        terms.push_back(std::move(t));
    }

    ComplexMatrix A(samples.points.size(), total);
    A.leftCols(poly_cols) = pb.A;
    Eigen::Index off = poly_cols;
    for (const auto& m : blocks) {
        A.middleCols(off, m.cols()) = m;
        off += m.cols();
    }

    const Eigen::Index M = samples.points.size();
    const Eigen::Index K = A.cols();
    const int dof = spec.real_coefficients ? 2 * static_cast<int>(K) - 1 : static_cast<int>(K);
    if (2 * static_cast<Eigen::Index>(dof) > M)
        throw std::invalid_argument(
            "fit_lightning: oversampling violated (need at least 2 samples per dof)");

    LightningRationalApproximant r;
    ComplexVector coeff;
    const RealVector* w = samples.weights.size() > 0 ? &samples.weights : nullptr;
    if (spec.real_coefficients) {
        RealMatrix Ar = real_expand(A);
        RealVector br = samples.values.real();
        RealLstsqResult res = lstsq(Ar, br, w);
        coeff = real_coeffs_to_complex(res.x, K);
        r.training_err = (Ar * res.x - br).cwiseAbs().maxCoeff();
        r.rank_deficient = res.rank_deficient;
    } else {
        LstsqResult res = lstsq(A, samples.values, w);
        coeff = res.x;
        r.training_err = (A * res.x - samples.values).cwiseAbs().maxCoeff();
        r.rank_deficient = res.rank_deficient;
    }

    r.poly.degree = spec.poly_degree;
    r.poly.use_arnoldi = spec.use_arnoldi;
    r.poly.basis = pb.basis;
    r.poly.scale = pb.scale;
    r.poly.coeff = coeff.head(poly_cols);
    off = poly_cols;
    for (auto& t : terms) {
        t.coeff = coeff.segment(off, t.poles.size());
        off += t.poles.size();
    }
    r.terms = std::move(terms);
    r.dof = dof;
    r.real_coefficients = spec.real_coefficients;
    return r;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit lf;
    const size_t n = x.size();
    if (n != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    if (n < 2) return lf;
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return lf;
    lf.slope = sxy / sxx;
    lf.intercept = my - lf.slope * mx;
    lf.corr = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
    return lf;
}

LineFit ConvergenceReport::line_against(const std::function<double(double)>& xform) const {
    std::vector<double> xs, ys;
    for (const auto& p : series) {
        if (p.max_err > err_floor) {
            xs.push_back(xform(static_cast<double>(p.N)));
            ys.push_back(std::log(p.max_err));
        }
    }
    return fit_line(xs, ys);
}

ConvergenceReport convergence_sweep(const std::vector<int>& n_values,
                                    const std::function<FitOutcome(int)>& run) {
    for (size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("convergence_sweep: n values must be increasing");

    ConvergenceReport report;
    for (int n : n_values) {
        auto t0 = std::chrono::steady_clock::now();
        FitOutcome o = run(n);
        auto t1 = std::chrono::steady_clock::now();
        ConvergencePoint p;
        p.N = o.dof;
        p.max_err = o.validation_err;
        p.boundary_err = o.training_err;
        p.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (!report.series.empty() && p.N <= report.series.back().N)
            throw std::invalid_argument("convergence_sweep: dof must be strictly increasing");
        report.series.push_back(p);
    }
    report.rate_vs_N = report.line_against([](double n) { return n; }).slope;
    report.rate_vs_N_over_logN =
        report.line_against([](double n) { return n / std::log(n); }).slope;
    return report;
}

}  // namespace loglight
