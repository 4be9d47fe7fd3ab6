#include "loglight/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loglight {

namespace {

constexpr double kPi = std::numbers::pi;

double discrete_norm(const ComplexVector& v) {
    return std::sqrt(v.squaredNorm() / static_cast<double>(v.size()));
}

void normalize_columns(ComplexMatrix& A, RealVector& scale) {
    scale.resize(A.cols());
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
        double s = std::sqrt(A.col(k).squaredNorm() / static_cast<double>(A.rows()));
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::runtime_error("column normalization: zero or non-finite column norm");
        A.col(k) /= s;
        scale[k] = s;
    }
}

/// w = 1/(log(e^{i*theta}(z - z_j)) - s0) pointwise.  At z == z_j the
/// limit value 0 is substituted when allowed; otherwise the log
/// singularity is an error.
ComplexVector recip_log_variable(const ComplexVector& z, Complex branch_point,
                                 double rotation, double s0, bool allow_branch_point) {
    ComplexVector w(z.size());
    const Complex rot = std::polar(1.0, rotation);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        Complex d = z[i] - branch_point;
        if (d == Complex(0.0, 0.0)) {
            if (!allow_branch_point)
                throw std::domain_error("sample point coincides with a branch point");
            w[i] = Complex(0.0, 0.0);
            continue;
        }
        w[i] = 1.0 / (std::log(rot * d) - s0);
    }
    return w;
}

ComplexVector pointwise_pow(const ComplexVector& v, int p) {
    ComplexVector out = ComplexVector::Ones(v.size());
    for (int i = 0; i < p; ++i) out = out.cwiseProduct(v);
    return out;
}

}  // namespace

BranchTerm corner_term(const Corner& corner, const PoleConfig& config) {
    // Put the cut of log(e^{i*theta}(z - z_j)) along the exterior bisector:
    // arg(z - z_j) = pi - theta there.
    return BranchTerm{corner.vertex, kPi - std::arg(corner.bisector), config};
}

Complex rotated_log(Complex z, Complex branch_point, double rotation) {
    return std::log(std::polar(1.0, rotation) * (z - branch_point));
}

ColumnBlock columns_distinct(const ComplexVector& z, Complex branch_point, double rotation,
                             const ComplexVector& s) {
    ComplexMatrix A(z.size(), s.size());
    const Complex rot = std::polar(1.0, rotation);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        Complex d = z[i] - branch_point;
        if (d == Complex(0.0, 0.0))
            throw std::domain_error("columns_distinct: sample point at branch point");
        Complex lg = std::log(rot * d);
        for (Eigen::Index k = 0; k < s.size(); ++k) A(i, k) = 1.0 / (lg - s[k]);
    }
    ColumnBlock block;
    block.A = std::move(A);
    normalize_columns(block.A, block.scale);
    return block;
}

ColumnBlock columns_distinct(const ComplexVector& z, const BranchTerm& term) {
    const PoleConfig& c = term.config;
    ComplexVector s;
    if (c.kind == PoleKind::HankelParabola) {
        s = hankel_poles(c.n, c.scale);
    } else if (c.kind == PoleKind::FejerWalsh) {
        s = fejer_walsh_poles(c.n, c.fw.sigma, c.fw.mu, c.fw.rho).poles;
    } else {
        throw std::invalid_argument("columns_distinct: config is not a distinct-pole kind");
    }
    return columns_distinct(z, term.branch_point, term.rotation, s);
}

ColumnBlock columns_confluent(const ComplexVector& z, const BranchTerm& term,
                              bool use_arnoldi) {
    if (term.config.kind != PoleKind::Confluent)
        throw std::invalid_argument("columns_confluent: config kind must be Confluent");
    const int n = term.config.n;
    const double s0 = term.config.scale;
    ComplexVector w = recip_log_variable(z, term.branch_point, term.rotation, s0, false);

    ColumnBlock block;
    block.includes_constant = true;
    if (use_arnoldi) {
        block.basis = build_arnoldi(z, w, n, nullptr, "recip_log");
        block.A = block.basis->Q;
        block.scale = RealVector::Ones(block.A.cols());
    } else {
        ComplexMatrix A(z.size(), n + 1);
        ComplexVector p = ComplexVector::Ones(z.size());
        for (int k = 0; k <= n; ++k) {
            A.col(k) = p;
            p = p.cwiseProduct(w);
        }
        block.A = std::move(A);
        normalize_columns(block.A, block.scale);
    }
    return block;
}

ColumnBlock columns_pinned(const ComplexVector& z, const BranchTerm& term, bool use_arnoldi) {
    if (term.config.kind != PoleKind::Pinned)
        throw std::invalid_argument("columns_pinned: config kind must be Pinned");
    const int n = term.config.n;
    const int J = term.config.pin_power;
    const double s0 = term.config.scale;
    ComplexVector w = recip_log_variable(z, term.branch_point, term.rotation, s0, false);

    ColumnBlock block;
    block.includes_constant = false;
    if (use_arnoldi) {
        ComplexVector seed = pointwise_pow(w, J);
        block.basis = build_arnoldi(z, w, n, &seed, "recip_log");
        block.A = block.basis->Q;
        block.scale = RealVector::Ones(block.A.cols());
    } else {
        ComplexMatrix A(z.size(), n + 1);
        ComplexVector p = pointwise_pow(w, J);
        for (int k = 0; k <= n; ++k) {
            A.col(k) = p;
            p = p.cwiseProduct(w);
        }
        block.A = std::move(A);
        normalize_columns(block.A, block.scale);
    }
    return block;
}

ColumnBlock columns_polynomial(const ComplexVector& z, int degree, bool use_arnoldi) {
    if (degree < 0) throw std::invalid_argument("columns_polynomial: degree must be >= 0");
    ColumnBlock block;
    block.includes_constant = true;
    if (use_arnoldi) {
        block.basis = build_arnoldi(z, z, degree, nullptr, "z");
        block.A = block.basis->Q;
        block.scale = RealVector::Ones(block.A.cols());
    } else {
        ComplexMatrix A(z.size(), degree + 1);
        ComplexVector p = ComplexVector::Ones(z.size());
        for (int k = 0; k <= degree; ++k) {
            A.col(k) = p;
            p = p.cwiseProduct(z);
        }
        block.A = std::move(A);
        block.scale = RealVector::Ones(degree + 1);
    }
    return block;
}

ComplexVector lightning_pole_locations(Complex corner, Complex direction, int n) {
    if (n < 1) throw std::invalid_argument("lightning_pole_locations: n must be >= 1");
    double m = std::abs(direction);
    if (!(m > 0.0)) throw std::invalid_argument("lightning_pole_locations: zero direction");
    Complex dir = direction / m;
    ComplexVector s(n);
    for (int k = 1; k <= n; ++k) {
        double d = std::exp(4.0 * (std::sqrt(static_cast<double>(k)) -
                                   std::sqrt(static_cast<double>(n))));
        s[k - 1] = corner + dir * d;
    }
    return s;
}

ColumnBlock lightning_columns(const ComplexVector& z, Complex corner, Complex direction,
                              int n, const std::function<bool(Complex)>& inside) {
    ComplexVector s = lightning_pole_locations(corner, direction, n);
    if (inside) {
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (inside(s[k]))
                throw std::domain_error("lightning_columns: pole falls inside the domain");
    }
    ComplexMatrix A(z.size(), n);
    for (Eigen::Index k = 0; k < s.size(); ++k) A.col(k) = (z.array() - s[k]).inverse();
    ColumnBlock block;
    block.A = std::move(A);
    normalize_columns(block.A, block.scale);
    return block;
}

namespace {

/// Accumulate the polynomial tail into `out`.
void add_poly_part(const PolyPart& poly, const ComplexVector& z, ComplexVector& out) {
    if (poly.coeff.size() == 0) return;
    if (poly.basis) {
        ComplexMatrix W = eval_arnoldi(*poly.basis, z);
        out += W.leftCols(poly.coeff.size()) * poly.coeff;
    } else {
        ComplexVector p = ComplexVector::Ones(z.size());
        for (Eigen::Index k = 0; k < poly.coeff.size(); ++k) {
            out += (poly.coeff[k] / poly.scale[k]) * p;
            p = p.cwiseProduct(z);
        }
    }
}

}  // namespace

ComplexVector ReciprocalLogApproximant::evaluate(const ComplexVector& z) const {
    ComplexVector out = ComplexVector::Zero(z.size());
    add_poly_part(poly, z, out);

    for (const auto& t : terms) {
        const PoleKind kind = t.term.config.kind;
        const bool pinned = kind == PoleKind::Pinned;

        if (t.poles.size() > 0) {
            // Distinct singularities.
            const Complex rot = std::polar(1.0, t.term.rotation);
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                Complex d = z[i] - t.term.branch_point;
                if (d == Complex(0.0, 0.0))
                    throw std::domain_error(
                        "evaluate: z at the branch point of a non-pinned term");
                Complex lg = std::log(rot * d);
                Complex acc(0.0, 0.0);
                for (Eigen::Index k = 0; k < t.poles.size(); ++k)
                    acc += t.coeff[k] / t.scale[k] / (lg - t.poles[k]);
                out[i] += acc;
            }
            continue;
        }

        // Confluent / pinned families in the variable w.
        ComplexVector w = recip_log_variable(z, t.term.branch_point, t.term.rotation,
                                             t.term.config.scale, pinned);
        if (t.basis) {
            ComplexMatrix W;
            if (pinned) {
                ComplexVector seed = pointwise_pow(w, t.term.config.pin_power);
                W = eval_arnoldi(*t.basis, w, &seed);
            } else {
                W = eval_arnoldi(*t.basis, w);
            }
            Eigen::Index start = t.constant_dropped ? 1 : 0;
            out += W.middleCols(start, t.coeff.size()) * t.coeff;
        } else {
            int p0 = pinned ? t.term.config.pin_power : (t.constant_dropped ? 1 : 0);
            ComplexVector p = pointwise_pow(w, p0);
            for (Eigen::Index k = 0; k < t.coeff.size(); ++k) {
                out += (t.coeff[k] / t.scale[k]) * p;
                p = p.cwiseProduct(w);
            }
        }
    }
    return out;
}

Complex ReciprocalLogApproximant::evaluate_one(Complex z) const {
    ComplexVector v(1);
    v[0] = z;
    return evaluate(v)[0];
}

ComplexVector LightningRationalApproximant::evaluate(const ComplexVector& z) const {
    ComplexVector out = ComplexVector::Zero(z.size());
    add_poly_part(poly, z, out);
    for (const auto& t : terms) {
        for (Eigen::Index k = 0; k < t.poles.size(); ++k)
            out += (t.coeff[k] / t.scale[k]) * (z.array() - t.poles[k]).inverse().matrix();
    }
    return out;
}

Complex LightningRationalApproximant::evaluate_one(Complex z) const {
    ComplexVector v(1);
    v[0] = z;
    return evaluate(v)[0];
}

}  // namespace loglight
