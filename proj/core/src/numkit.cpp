#include "loglight/numkit.hpp"

#include <cmath>
#include <stdexcept>

namespace loglight {

namespace {

void check_weights(const RealVector& w, Eigen::Index rows, Eigen::Index cols) {
    if (w.size() != rows)
        throw std::invalid_argument("lstsq: weight vector length does not match rows");
    Eigen::Index positive = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] < 0.0 || !std::isfinite(w[i]))
            throw std::invalid_argument("lstsq: weights must be finite and nonnegative");
        if (w[i] > 0.0) ++positive;
    }
    if (positive < cols)
        throw std::invalid_argument("lstsq: fewer strictly positive weights than columns");
}

template <class Matrix, class Vector, class Result>
Result lstsq_impl(const Matrix& A, const Vector& b, const RealVector* w) {
    if (A.rows() != b.size())
        throw std::invalid_argument("lstsq: A.rows() != len(b)");
    if (A.rows() < A.cols())
        throw std::invalid_argument("lstsq: system must have rows >= cols");

    Eigen::ColPivHouseholderQR<Matrix> qr;
    qr.setThreshold(kRankTolerance);
    Result res;
    if (w != nullptr) {
        check_weights(*w, A.rows(), A.cols());
        RealVector sw = w->array().sqrt();
        Matrix Aw = sw.asDiagonal() * A;
        Vector bw = sw.asDiagonal() * b;
        qr.compute(Aw);
        res.x = qr.solve(bw);
    } else {
        qr.compute(A);
        res.x = qr.solve(b);
    }
    res.rank_deficient = qr.rank() < A.cols();
    return res;
}

double discrete_norm(const ComplexVector& v) {
    return std::sqrt(v.squaredNorm() / static_cast<double>(v.size()));
}

}  // namespace

LstsqResult lstsq(const ComplexMatrix& A, const ComplexVector& b, const RealVector* w) {
    return lstsq_impl<ComplexMatrix, ComplexVector, LstsqResult>(A, b, w);
}

RealLstsqResult lstsq(const RealMatrix& A, const RealVector& b, const RealVector* w) {
    return lstsq_impl<RealMatrix, RealVector, RealLstsqResult>(A, b, w);
}

ArnoldiBasis build_arnoldi(const ComplexVector& nodes, const ComplexVector& multiplier,
                           int dim, const ComplexVector* seed, std::string multiplier_tag) {
    const auto rows = nodes.size();
    if (dim < 0) throw std::invalid_argument("build_arnoldi: dim must be >= 0");
    if (dim + 1 > rows)
        throw std::invalid_argument("build_arnoldi: dim + 1 exceeds number of nodes");
    if (multiplier.size() != rows)
        throw std::invalid_argument("build_arnoldi: multiplier length mismatch");
    if (!multiplier.allFinite())
        throw std::invalid_argument("build_arnoldi: multiplier has non-finite entries");
    if (seed != nullptr && seed->size() != rows)
        throw std::invalid_argument("build_arnoldi: seed length mismatch");

    const double M = static_cast<double>(rows);

    ArnoldiBasis basis;
    basis.nodes = nodes;
    basis.multiplier_tag = std::move(multiplier_tag);
    basis.Q.resize(rows, dim + 1);
    basis.H = ComplexMatrix::Zero(dim + 1, dim);
    basis.dim = dim;

    ComplexVector q0 = seed ? *seed : ComplexVector::Ones(rows);
    basis.seed_scale = discrete_norm(q0);
    if (!(basis.seed_scale > 0.0) || !std::isfinite(basis.seed_scale))
        throw std::invalid_argument("build_arnoldi: seed column has zero or non-finite norm");
    basis.Q.col(0) = q0 / basis.seed_scale;

    for (int k = 0; k < dim; ++k) {
        ComplexVector v = multiplier.cwiseProduct(basis.Q.col(k));
        const double start_norm = discrete_norm(v);

        // Modified Gram-Schmidt plus one reorthogonalization pass; the
        // generating sequences here are far too ill-conditioned for a
        // single pass to retain orthogonality.
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j <= k; ++j) {
                Complex h = basis.Q.col(j).dot(v) / M;
                v -= h * basis.Q.col(j);
                basis.H(j, k) += h;
            }
        }

        const double nrm = discrete_norm(v);
        if (!std::isfinite(nrm) || nrm <= 1e-14 * std::max(start_norm, 1e-300)) {
            basis.dim = k;
            basis.Q.conservativeResize(Eigen::NoChange, k + 1);
            basis.H.conservativeResize(k + 1, k);
            basis.breakdown = true;
            return basis;
        }
        basis.H(k + 1, k) = nrm;
        basis.Q.col(k + 1) = v / nrm;
    }
    return basis;
}

ComplexMatrix eval_arnoldi(const ArnoldiBasis& basis, const ComplexVector& multiplier,
                           const ComplexVector* seed) {
    const auto rows = multiplier.size();
    if (seed != nullptr && seed->size() != rows)
        throw std::invalid_argument("eval_arnoldi: seed length mismatch");

    ComplexMatrix W(rows, basis.dim + 1);
    if (seed)
        W.col(0) = *seed / basis.seed_scale;
    else
        W.col(0) = ComplexVector::Constant(rows, 1.0 / basis.seed_scale);

    for (int k = 0; k < basis.dim; ++k) {
        if (basis.H(k + 1, k) == Complex(0.0, 0.0))
            throw std::domain_error("eval_arnoldi: zero subdiagonal in recurrence "
                                    "(basis evaluated past breakdown truncation)");
        ComplexVector v = multiplier.cwiseProduct(W.col(k));
        for (int j = 0; j <= k; ++j) v -= basis.H(j, k) * W.col(j);
        W.col(k + 1) = v / basis.H(k + 1, k);
    }
    return W;
}

}  // namespace loglight
