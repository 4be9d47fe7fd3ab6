#include "loglight/poles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loglight {

namespace {
constexpr double kPi = std::numbers::pi;
}

PoleConfig PoleConfig::hankel(int n, double scale) {
    if (n < 1) throw std::invalid_argument("PoleConfig: n must be >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("PoleConfig: scale must be positive");
    PoleConfig c;
    c.kind = PoleKind::HankelParabola;
    c.n = n;
    c.scale = scale;
    return c;
}

PoleConfig PoleConfig::confluent(int n, double s0) {
    if (n < 1) throw std::invalid_argument("PoleConfig: n must be >= 1");
    if (!(s0 > 0.0)) throw std::invalid_argument("PoleConfig: s0 must be positive");
    PoleConfig c;
    c.kind = PoleKind::Confluent;
    c.n = n;
    c.scale = s0;
    return c;
}

PoleConfig PoleConfig::pinned(int n, double s0, int J) {
    PoleConfig c = confluent(n, s0);
    if (J < 2) throw std::invalid_argument("PoleConfig: pin power J must be >= 2");
    c.kind = PoleKind::Pinned;
    c.pin_power = J;
    return c;
}

PoleConfig PoleConfig::fejer_walsh(int n, const FejerWalshParams& fw) {
    if (n < 1) throw std::invalid_argument("PoleConfig: n must be >= 1");
    if (!(fw.sigma > 0.0) || !(fw.mu > 1.0) || !(fw.rho > 0.0))
        throw std::invalid_argument("PoleConfig: need sigma > 0, mu > 1, rho > 0");
    PoleConfig c;
    c.kind = PoleKind::FejerWalsh;
    c.n = n;
    c.scale = fw.sigma;
    c.fw = fw;
    return c;
}

ComplexVector hankel_poles(int n, double scale) {
    if (n < 1) throw std::invalid_argument("hankel_poles: n must be >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("hankel_poles: scale must be positive");
    ComplexVector s(n);
    for (int k = 1; k <= n; ++k) {
        double theta = -kPi + 2.0 * kPi * (k - 0.5) / n;
        Complex w(1.0, theta);
        s[k - 1] = scale * w * w;
    }
    return s;
}

RealVector fejer_walsh_interp_points(int n, double sigma) {
    if (n < 1) throw std::invalid_argument("fejer_walsh_interp_points: n must be >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("fejer_walsh_interp_points: sigma must be positive");
    RealVector alpha(n);
    for (int j = 1; j <= n; ++j) {
        double c = std::tan(kPi / 2.0 - kPi * j / (2.0 * (n + 1)));  // cot
        alpha[j - 1] = -n * sigma * c * c;
    }
    return alpha;
}

Complex phi_product(Complex s, const RealVector& alphas, const ComplexVector& poles) {
    if (alphas.size() != poles.size())
        throw std::invalid_argument("phi_product: alphas and poles must have equal length");
    Complex phi(1.0, 0.0);
    for (Eigen::Index j = 0; j < alphas.size(); ++j) {
        Complex denom = s - poles[j];
        if (denom == Complex(0.0, 0.0))
            throw std::domain_error("phi_product: s coincides with a pole");
        phi *= (s - alphas[j]) / denom;
    }
    return phi;
}

Complex phi_closed(Complex t, int n) {
    if (n < 0) throw std::invalid_argument("phi_closed: n must be >= 0");
    if (t == Complex(0.0, 0.0)) throw std::invalid_argument("phi_closed: t must be nonzero");
    // Sum of powers t^{-n}, t^{-n+2}, ..., t^{n}; regular at t = +-1.
    Complex term = std::pow(t, -n);
    Complex t2 = t * t;
    Complex sum(0.0, 0.0);
    for (int i = 0; i <= n; ++i) {
        sum += term;
        term *= t2;
    }
    return sum / static_cast<double>(n + 1);
}

PhiMapResult phi_map_t(Complex s, int n, double sigma) {
    if (n < 1 || !(sigma > 0.0)) throw std::invalid_argument("phi_map_t: bad parameters");
    Complex q = s / (n * sigma);
    // For the principal root Re sqrt(q) >= 0, so |t| <= 1.
    Complex r = std::sqrt(q);
    PhiMapResult res;
    res.t = (r - 1.0) / (r + 1.0);
    res.on_cut = (s.imag() == 0.0 && s.real() <= 0.0) || r.real() == 0.0;
    return res;
}

double elliptic_K(double m) {
    if (!(m >= 0.0) || m >= 1.0)
        throw std::domain_error("elliptic_K: parameter m must lie in [0, 1)");
    double a = 1.0;
    double g = std::sqrt(1.0 - m);
    for (int i = 0; i < 64 && std::abs(a - g) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return kPi / (2.0 * a);
}

Complex jacobi_sn(Complex u, double m) {
    if (!(m >= 0.0) || m >= 1.0)
        throw std::domain_error("jacobi_sn: parameter m must lie in [0, 1)");
    if (m == 0.0) return std::sin(u);

    // Descending Landen: shrink the modulus quadratically toward 0,
    // evaluate sin there, then transform back up.
    std::vector<double> ks;
    double k = std::sqrt(m);
    Complex v = u;
    for (int i = 0; i < 64 && k > 1e-15; ++i) {
        double kp = std::sqrt((1.0 - k) * (1.0 + k));
        double k1 = (1.0 - kp) / (1.0 + kp);
        ks.push_back(k1);
        v /= (1.0 + k1);
        k = k1;
    }
    Complex s = std::sin(v);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
        double k1 = *it;
        s = (1.0 + k1) * s / (1.0 + k1 * s * s);
    }
    return s;
}

Complex FejerWalshMap::map(Complex w) const {
    Complex y = jacobi_sn(w, m);
    Complex base = (b + y) / (M - y);
    return sigma - sigma * std::pow(base, mu);
}

FejerWalshMap make_fejer_walsh_map(int n, const FejerWalshParams& fw) {
    if (n < 1) throw std::invalid_argument("make_fejer_walsh_map: n must be >= 1");
    if (!(fw.sigma > 0.0) || !(fw.mu > 1.0) || !(fw.rho > 0.0))
        throw std::invalid_argument("make_fejer_walsh_map: need sigma > 0, mu > 1, rho > 0");

    FejerWalshMap fwm;
    fwm.sigma = fw.sigma;
    fwm.mu = fw.mu;
    fwm.L = fw.rho * n;
    double Lmu = std::pow(fwm.L, fw.mu);
    fwm.b = Lmu + std::sqrt(Lmu + Lmu * Lmu);
    fwm.M = 1.0 + 2.0 * fwm.b;
    fwm.m = 1.0 / (fwm.M * fwm.M);
    if (!std::isfinite(fwm.b) || fwm.m <= 0.0)
        throw std::overflow_error(
            "make_fejer_walsh_map: L^mu overflows double precision for L = " +
            std::to_string(fwm.L) + ", mu = " + std::to_string(fw.mu));
    fwm.K = elliptic_K(fwm.m);
    fwm.Kp = elliptic_K(1.0 - fwm.m);
    return fwm;
}

FejerWalshPoints fejer_walsh_poles(int n, double sigma, double mu, double rho) {
    FejerWalshParams fw{sigma, mu, rho};
    FejerWalshMap map = make_fejer_walsh_map(n, fw);
    FejerWalshPoints pts;
    pts.poles.resize(n);
    pts.interp.resize(n);
    for (int k = 1; k <= n; ++k) {
        double im = (k - 0.5) * map.Kp / n;
        // With principal-branch sn and pow, the rectangle edge Re w = -K is
        // the one that lands on the near-apex segments of length sigma*L
        // where the poles belong; Re w = +K runs down the slit and carries
        // the interpolation points.
        pts.poles[k - 1] = map.map(Complex(-map.K, im));
        pts.interp[k - 1] = map.map(Complex(map.K, im));
    }
    if (!pts.poles.allFinite() || !pts.interp.allFinite())
        throw std::overflow_error("fejer_walsh_poles: non-finite point generated; "
                                  "parameters too extreme");
    return pts;
}

PhiDiagnostics phi_diagnostics(int n, double sigma) {
    PhiDiagnostics d;
    d.n = n;
    d.sigma = sigma;
    d.interp_points = fejer_walsh_interp_points(n, sigma);
    d.pole_location = n * sigma;
    return d;
}

}  // namespace loglight
