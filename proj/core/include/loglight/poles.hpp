#pragma once

#include "loglight/numkit.hpp"

namespace loglight {

enum class PoleKind { HankelParabola, Confluent, Pinned, FejerWalsh };

struct FejerWalshParams {
    double sigma = 0.5;  ///< wedge scale; the governing theory is non-constructive here
    double mu = 2.0;     ///< wedge interior angle is pi/mu
    double rho = 1.0;    ///< segment length parameter, L = rho * n
};

/// Recipe for the singularity parameters s_k of one reciprocal-log term.
struct PoleConfig {
    PoleKind kind = PoleKind::HankelParabola;
    int n = 1;             ///< number of singularities
    double scale = 0.25;   ///< parabola prefactor, or the confluent location s0
    int pin_power = 2;     ///< lowest retained power J (Pinned only)
    FejerWalshParams fw;   ///< (FejerWalsh only)

    static PoleConfig hankel(int n, double scale);
    static PoleConfig hankel(int n) { return hankel(n, n / 4.0); }
    static PoleConfig confluent(int n, double s0);
    static PoleConfig confluent(int n) { return confluent(n, n / 2.0); }
    static PoleConfig pinned(int n, double s0, int J);
    static PoleConfig fejer_walsh(int n, const FejerWalshParams& fw);
};

/// Singularities on a parabolic contour in the s-plane:
/// s_k = scale*(1 + i*theta_k)^2, theta_k = -pi + 2*pi*(k-1/2)/n, k = 1..n.
/// The set is closed under conjugation when n is even.
ComplexVector hankel_poles(int n, double scale);

/// Potential-theory interpolation points on (-inf, 0] for confluent poles at
/// n*sigma: alpha_j = -n*sigma*cot^2(pi*j/(2(n+1))), j = 1..n.  Magnitudes
/// decrease as j grows.
RealVector fejer_walsh_interp_points(int n, double sigma);

/// phi(s) = prod_j (s - alpha_j)/(s - s_j).  Throws if s hits a pole.
Complex phi_product(Complex s, const RealVector& alphas, const ComplexVector& poles);

/// Closed form of phi for confluent poles at n*sigma, as a function of the
/// disk variable t:  phi = (t^-n + t^-n+2 + ... + t^n)/(n+1).
/// The power-sum form is used so t = +-1 are regular points.
Complex phi_closed(Complex t, int n);

struct PhiMapResult {
    Complex t;
    bool on_cut = false;  ///< s was on (-inf,0]; both roots lie on |t| = 1
};

/// Invert s = n*sigma*((1+t)/(1-t))^2 for the root with |t| <= 1.
/// Either root gives the same phi_closed value, so the disk branch is a
/// free (and numerically tame) choice.
PhiMapResult phi_map_t(Complex s, int n, double sigma);

/// Complete elliptic integral of the first kind, parameter convention
/// m = k^2, via the arithmetic-geometric mean: K = pi / (2*AGM(1, sqrt(1-m))).
double elliptic_K(double m);

/// Jacobi elliptic sine sn(u | m) for complex u and real m in [0,1),
/// by descending Landen transformation.
Complex jacobi_sn(Complex u, double m);

/// Conformal map of the rectangle -K < Re w < K, 0 < Im w < K' onto the
/// slit wedge used to place poles and interpolation points:
///   s(w) = sigma - sigma*((b + y)/(1 + 2b - y))^mu,  y = sn(w | M^-2),
/// with M = 1 + 2b, b = L^mu + sqrt(L^mu + L^2mu), L = rho*n.
struct FejerWalshMap {
    double sigma = 0.5;
    double mu = 2.0;
    double L = 1.0;
    double b = 0.0;
    double M = 1.0;   ///< 1 + 2b
    double m = 0.0;   ///< elliptic parameter M^-2
    double K = 0.0;
    double Kp = 0.0;  ///< K' = K(1 - m)

    Complex map(Complex w) const;
};

FejerWalshMap make_fejer_walsh_map(int n, const FejerWalshParams& fw);

struct FejerWalshPoints {
    ComplexVector poles;   ///< s_k = s(K + i(k-1/2)K'/n)
    ComplexVector interp;  ///< alpha_k = s(-K + i(k-1/2)K'/n)
};

/// Pole/interpolation pairs on the wedge segments.  This is a generator,
/// not a validator: the wedge-angle constraint tan(pi/2mu) < tau is the
/// caller's responsibility.  Throws on overflow in L^mu.
FejerWalshPoints fejer_walsh_poles(int n, double sigma, double mu, double rho);

/// Interpolation-point diagnostics for confluent poles at n*sigma.
struct PhiDiagnostics {
    int n = 0;
    double sigma = 0.0;
    RealVector interp_points;  ///< alpha_j, all real and <= 0
    double pole_location = 0.0;  ///< n*sigma
};

PhiDiagnostics phi_diagnostics(int n, double sigma);

}  // namespace loglight
