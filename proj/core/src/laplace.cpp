#include "loglight/laplace.hpp"

#include <cmath>
#include <stdexcept>

namespace loglight {

namespace {

SampleSet boundary_samples(const PlanarDomain& domain, const BoundaryData& data,
                           int per_edge, double min_dist) {
    ClusteredGrid grid = boundary_grid(domain, per_edge, min_dist);
    SampleSet s;
    s.points = grid.as_vector();
    s.values.resize(s.points.size());
    for (Eigen::Index i = 0; i < s.points.size(); ++i) {
        double v = data(s.points[i]);
        if (!std::isfinite(v))
            throw std::invalid_argument("solve_dirichlet: boundary data not finite");
        s.values[i] = Complex(v, 0.0);
    }
    return s;
}

template <class Approx>
double boundary_residual(const Approx& g, const PlanarDomain& domain,
                         const BoundaryData& data, int per_edge, double min_dist) {
    ClusteredGrid grid = boundary_grid(domain, per_edge, min_dist);
    ComplexVector pts = grid.as_vector();
    ComplexVector gv = g.evaluate(pts);
    double err = 0.0;
    for (Eigen::Index i = 0; i < pts.size(); ++i)
        err = std::max(err, std::abs(gv[i].real() - data(pts[i])));
    return err;
}

}  // namespace

ComplexVector HarmonicSolution::evaluate_complex(const ComplexVector& z) const {
    return std::visit([&](const auto& approx) { return approx.evaluate(z); }, g);
}

HarmonicSolution solve_dirichlet(const PlanarDomain& domain, const BoundaryData& data,
                                 int n_per_corner, int poly_degree,
                                 double pole_scale_factor, const LaplaceOptions& options) {
    if (n_per_corner < 1)
        throw std::invalid_argument("solve_dirichlet: n_per_corner must be >= 1");
    if (!(pole_scale_factor > 0.0))
        throw std::invalid_argument("solve_dirichlet: pole scale factor must be positive");

    FitSpec spec;
    spec.poly_degree = poly_degree;
    spec.use_arnoldi = options.use_arnoldi;
    spec.real_coefficients = true;
    for (const Corner& c : domain.corners())
        spec.terms.push_back(
            corner_term(c, PoleConfig::hankel(n_per_corner, n_per_corner * pole_scale_factor)));

    SampleSet samples = boundary_samples(domain, data, options.per_edge, options.min_dist);
    ReciprocalLogApproximant g = fit(spec, samples);

    HarmonicSolution sol;
    sol.domain = domain;
    sol.training_err = g.training_err;
    sol.dof = g.dof;
    double vdepth = options.validation_min_dist > 0.0 ? options.validation_min_dist
                                                      : options.min_dist;
    sol.boundary_err = boundary_residual(
        g, domain, data, options.per_edge * options.validation_factor, vdepth);
    sol.g = std::move(g);
    return sol;
}

HarmonicSolution solve_dirichlet_lightning(const PlanarDomain& domain,
                                           const BoundaryData& data, int n_per_corner,
                                           int poly_degree, const LaplaceOptions& options) {
    if (n_per_corner < 1)
        throw std::invalid_argument("solve_dirichlet_lightning: n_per_corner must be >= 1");

    LightningSpec spec;
    spec.n_per_corner = n_per_corner;
    spec.poly_degree = poly_degree;
    spec.use_arnoldi = options.use_arnoldi;
    spec.real_coefficients = true;
    for (const Corner& c : domain.corners()) spec.corners.emplace_back(c.vertex, c.bisector);
    spec.pole_inside_check = [&domain](Complex z) { return domain.contains(z); };

    SampleSet samples = boundary_samples(domain, data, options.per_edge, options.min_dist);
    LightningRationalApproximant r = fit_lightning(spec, samples);

    HarmonicSolution sol;
    sol.domain = domain;
    sol.training_err = r.training_err;
    sol.dof = r.dof;
    double vdepth = options.validation_min_dist > 0.0 ? options.validation_min_dist
                                                      : options.min_dist;
    sol.boundary_err = boundary_residual(
        r, domain, data, options.per_edge * options.validation_factor, vdepth);
    sol.g = std::move(r);
    return sol;
}

RealVector eval_solution(const HarmonicSolution& sol, const ComplexVector& z) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (!sol.domain.contains(z[i], 1e-10))
            throw std::domain_error("eval_solution: point outside the closed domain");
    }
    return sol.evaluate_complex(z).real();
}

std::vector<FieldSample> sample_field(const HarmonicSolution& sol, int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("sample_field: need nx, ny >= 2");
    auto [lo, hi] = sol.domain.bounding_box();

    std::vector<Complex> pts;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            Complex z(lo.real() + ix * (hi.real() - lo.real()) / (nx - 1),
                      lo.imag() + iy * (hi.imag() - lo.imag()) / (ny - 1));
            bool at_corner = false;
            for (const Corner& c : sol.domain.corners())
                if (z == c.vertex) at_corner = true;
            if (!at_corner && sol.domain.contains(z)) pts.push_back(z);
        }
    }
    ComplexVector zv(static_cast<Eigen::Index>(pts.size()));
    for (Eigen::Index i = 0; i < zv.size(); ++i) zv[i] = pts[static_cast<size_t>(i)];
    ComplexVector gv = sol.evaluate_complex(zv);

    std::vector<FieldSample> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        out[i] = FieldSample{pts[i], gv[static_cast<Eigen::Index>(i)].real(),
                             gv[static_cast<Eigen::Index>(i)]};
    return out;
}

}  // namespace loglight
