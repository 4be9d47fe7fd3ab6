#include "loglight/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace loglight {

namespace {

constexpr double kPi = std::numbers::pi;

double arg_positive(Complex z) {
    double a = std::arg(z);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

Complex unit(Complex z) {
    double m = std::abs(z);
    if (m == 0.0) throw std::invalid_argument("unit: zero vector");
    return z / m;
}

}  // namespace

ComplexVector ClusteredGrid::as_vector() const {
    ComplexVector v(static_cast<Eigen::Index>(points.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = points[static_cast<size_t>(i)];
    return v;
}

ClusteredGrid logspace_grid(double lo_exp, double hi_exp, int M) {
    if (!(lo_exp < hi_exp)) throw std::invalid_argument("logspace_grid: need lo_exp < hi_exp");
    if (M < 2) throw std::invalid_argument("logspace_grid: need M >= 2");
    ClusteredGrid g;
    g.points.resize(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
        double e = lo_exp + j * (hi_exp - lo_exp) / (M - 1);
        g.points[static_cast<size_t>(j)] = std::pow(10.0, e);
    }
    g.anchors = {Complex(0.0, 0.0)};
    g.min_dist = std::pow(10.0, lo_exp);
    g.count = M;
    return g;
}

Edge Edge::segment(Complex a, Complex b) {
    if (a == b) throw std::invalid_argument("Edge::segment: degenerate (zero length)");
    Edge e;
    e.kind_ = Kind::Segment;
    e.a_ = a;
    e.b_ = b;
    return e;
}

Edge Edge::arc(Complex center, double radius, double ang_a, double ang_b) {
    if (!(radius > 0.0)) throw std::invalid_argument("Edge::arc: radius must be positive");
    if (ang_a == ang_b) throw std::invalid_argument("Edge::arc: degenerate (zero sweep)");
    Edge e;
    e.kind_ = Kind::Arc;
    e.center_ = center;
    e.radius_ = radius;
    e.ang_a_ = ang_a;
    e.ang_b_ = ang_b;
    return e;
}

Complex Edge::start() const {
    return kind_ == Kind::Segment ? a_ : center_ + radius_ * std::polar(1.0, ang_a_);
}

Complex Edge::end() const {
    return kind_ == Kind::Segment ? b_ : center_ + radius_ * std::polar(1.0, ang_b_);
}

double Edge::length() const {
    return kind_ == Kind::Segment ? std::abs(b_ - a_) : radius_ * std::abs(ang_b_ - ang_a_);
}

Complex Edge::point_at_arclength(double s) const {
    double len = length();
    double t = std::clamp(s / len, 0.0, 1.0);
    if (kind_ == Kind::Segment) return a_ + t * (b_ - a_);
    double ang = ang_a_ + t * (ang_b_ - ang_a_);
    return center_ + radius_ * std::polar(1.0, ang);
}

Complex Edge::point_from_end(double d) const {
    double len = length();
    double t = std::clamp(d / len, 0.0, 1.0);
    if (kind_ == Kind::Segment) return b_ + t * (a_ - b_);
    double ang = ang_b_ + t * (ang_a_ - ang_b_);
    return center_ + radius_ * std::polar(1.0, ang);
}

double Edge::distance(Complex z) const {
    if (kind_ == Kind::Segment) {
        Complex d = b_ - a_;
        double len2 = std::norm(d);
        double t = std::clamp(((z - a_) * std::conj(d)).real() / len2, 0.0, 1.0);
        return std::abs(z - (a_ + t * d));
    }
    // Arc: radial distance if the angle of z falls inside the swept sector,
    // otherwise distance to the nearer endpoint.
    Complex rel = z - center_;
    if (std::abs(rel) == 0.0) return radius_;
    double ang = std::arg(rel);
    double lo = std::min(ang_a_, ang_b_), hi = std::max(ang_a_, ang_b_);
    for (double cand : {ang - 2.0 * kPi, ang, ang + 2.0 * kPi}) {
        if (cand >= lo && cand <= hi) return std::abs(std::abs(rel) - radius_);
    }
    return std::min(std::abs(z - start()), std::abs(z - end()));
}

PlanarDomain::PlanarDomain(std::vector<Corner> corners, std::vector<Edge> edges,
                           std::function<bool(Complex)> inside)
    : corners_(std::move(corners)), edges_(std::move(edges)), inside_(std::move(inside)) {}

bool PlanarDomain::contains(Complex z, double boundary_tol) const {
    bool in;
    if (inside_) {
        in = inside_(z);
    } else {
        // Winding number over a polyline approximation (exact when all
        // edges are segments).
        double total = 0.0;
        for (const auto& e : edges_) {
            int steps = e.kind() == Edge::Kind::Segment ? 1 : 512;
            Complex prev = e.start();
            for (int i = 1; i <= steps; ++i) {
                Complex cur = e.point_at_arclength(e.length() * i / steps);
                total += std::arg((cur - z) / (prev - z));
                prev = cur;
            }
        }
        in = std::abs(total) > kPi;  // winding 1 -> 2*pi, outside -> 0
    }
    if (in) return true;
    return boundary_tol > 0.0 && boundary_distance(z) <= boundary_tol;
}

double PlanarDomain::boundary_distance(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& e : edges_) d = std::min(d, e.distance(z));
    return d;
}

std::pair<Complex, Complex> PlanarDomain::bounding_box() const {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = xhi;
    for (const auto& e : edges_) {
        int steps = e.kind() == Edge::Kind::Segment ? 1 : 128;
        for (int i = 0; i <= steps; ++i) {
            Complex p = e.point_at_arclength(e.length() * i / steps);
            xlo = std::min(xlo, p.real());
            xhi = std::max(xhi, p.real());
            ylo = std::min(ylo, p.imag());
            yhi = std::max(yhi, p.imag());
        }
    }
    return {Complex(xlo, ylo), Complex(xhi, yhi)};
}

PlanarDomain make_polygon(const std::vector<Complex>& vertices) {
    const size_t m = vertices.size();
    if (m < 3) throw std::invalid_argument("make_polygon: need at least 3 vertices");

    std::vector<Corner> corners(m);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        Complex v = vertices[i];
        Complex u = vertices[(i + m - 1) % m];
        Complex w = vertices[(i + 1) % m];
        Complex to_prev = unit(u - v);
        Complex to_next = unit(w - v);
        double interior = arg_positive((u - v) / (w - v));
        Complex sum = to_prev + to_next;
        Complex bis;
        if (std::abs(sum) < 1e-12) {
            // Straight corner: exterior normal is to the right of travel.
            bis = Complex(0.0, -1.0) * to_next;
        } else {
            bis = unit(sum);
            if (interior < kPi) bis = -bis;
        }
        corners[i] = Corner{v, interior, bis};
        edges.push_back(Edge::segment(v, w));
    }

    auto inside = [vertices](Complex z) {
        // Even-odd crossing count on the closed polygon, with a boundary
        // snap so points on edges count as inside.
        const size_t n = vertices.size();
        bool in = false;
        for (size_t i = 0, j = n - 1; i < n; j = i++) {
            Complex a = vertices[j], b = vertices[i];
            Complex d = b - a;
            double len2 = std::norm(d);
            double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
            if (std::abs(z - (a + t * d)) <= 1e-12) return true;
            if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
                double x = a.real() + (z.imag() - a.imag()) / (b.imag() - a.imag()) *
                                          (b.real() - a.real());
                if (z.real() < x) in = !in;
            }
        }
        return in;
    };
    return PlanarDomain(std::move(corners), std::move(edges), inside);
}

PlanarDomain pacman_domain() {
    const Complex omega = std::polar(1.0, kPi / 3.0);
    const Complex omega_bar = std::conj(omega);

    std::vector<Corner> corners = {
        // Interior spans 4*pi/3 at the origin; the exterior bisector points
        // straight into the removed wedge.
        Corner{Complex(0.0, 0.0), 4.0 * kPi / 3.0, Complex(1.0, 0.0)},
        Corner{omega, kPi / 2.0, std::polar(1.0, kPi / 12.0)},
        Corner{omega_bar, kPi / 2.0, std::polar(1.0, -kPi / 12.0)},
    };
    std::vector<Edge> edges = {
        Edge::segment(Complex(0.0, 0.0), omega),
        Edge::arc(Complex(0.0, 0.0), 1.0, kPi / 3.0, 5.0 * kPi / 3.0),
        Edge::segment(omega_bar, Complex(0.0, 0.0)),
    };
    auto inside = [](Complex z) {
        double r = std::abs(z);
        if (r > 1.0) return false;
        if (r == 0.0) return true;
        double a = arg_positive(z);
        return a >= kPi / 3.0 && a <= 5.0 * kPi / 3.0;
    };
    return PlanarDomain(std::move(corners), std::move(edges), inside);
}

Complex pacman_target(Complex z) {
    if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    const Complex omega = std::polar(1.0, kPi / 3.0);
    const Complex omega_bar = std::conj(omega);
    return z * std::log(-0.5 * z) * std::sqrt(1.0 - z / omega) *
           std::pow(1.0 - z / omega_bar, 1.5);
}

PlanarDomain lshape_domain() {
    std::vector<Complex> verts = {
        {0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0},
    };
    PlanarDomain poly = make_polygon(verts);
    auto inside = [](Complex z) {
        double x = z.real(), y = z.imag();
        return (x >= 0.0 && x <= 2.0 && y >= 0.0 && y <= 1.0) ||
               (x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 2.0);
    };
    return PlanarDomain(poly.corners(), poly.edges(), inside);
}

double lshape_boundary_data(Complex z) { return (z * z).real(); }

PlanarDomain unit_square_domain() {
    return make_polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

double square_z3_data(Complex z) { return (z * z * z).real(); }

ClusteredGrid boundary_grid(const PlanarDomain& domain, int per_edge, double min_dist) {
    if (per_edge < 4) throw std::invalid_argument("boundary_grid: need per_edge >= 4");
    if (!(min_dist > 0.0) || min_dist >= 0.5)
        throw std::invalid_argument("boundary_grid: min_dist must lie in (0, 0.5)");

    ClusteredGrid g;
    for (const auto& e : domain.edges()) {
        double len = e.length();
        if (!(len > 0.0)) throw std::invalid_argument("boundary_grid: degenerate edge");

        // Half the points cluster toward each endpoint; the log range is
        // half-open at len/2 so the two sides never duplicate the midpoint.
        int m = per_edge / 2;
        double lo = std::log10(min_dist * len);
        double hi = std::log10(0.5 * len);
        std::vector<Complex> from_start, from_end;
        for (int i = 0; i < m; ++i) {
            double d0 = std::pow(10.0, lo + i * (hi - lo) / m);
            // An offset below the double resolution at the corner's own
            // coordinates rounds back onto the corner; push such points out
            // to the nearest representable depth instead.
            double d = d0;
            Complex p = e.point_at_arclength(d);
            while (p == e.start()) {
                d *= 2.0;
                p = e.point_at_arclength(d);
            }
            from_start.push_back(p);
            d = d0;
            p = e.point_from_end(d);
            while (p == e.end()) {
                d *= 2.0;
                p = e.point_from_end(d);
            }
            from_end.push_back(p);
        }
        for (const Complex& p : from_start) g.points.push_back(p);
        if (per_edge % 2 != 0) g.points.push_back(e.point_at_arclength(0.5 * len));
        for (auto it = from_end.rbegin(); it != from_end.rend(); ++it) g.points.push_back(*it);
    }
    for (const auto& c : domain.corners()) g.anchors.push_back(c.vertex);
    double dmin = std::numeric_limits<double>::infinity();
    for (const Complex& p : g.points)
        for (const Complex& a : g.anchors) dmin = std::min(dmin, std::abs(p - a));
    g.min_dist = dmin;
    g.count = static_cast<int>(g.points.size());
    return g;
}

TestProblem builtin_problem(const std::string& name) {
    TestProblem p;
    p.name = name;
    if (name == "sqrt") {
        p.target = [](Complex z) { return std::sqrt(z); };
    } else if (name == "pacman") {
        p.domain = pacman_domain();
        p.target = [](Complex z) { return pacman_target(z); };
    } else if (name == "lshape") {
        p.domain = lshape_domain();
        p.target = [](Complex z) { return Complex(lshape_boundary_data(z), 0.0); };
        p.real_data = true;
    } else if (name == "square-z3") {
        p.domain = unit_square_domain();
        p.target = [](Complex z) { return Complex(square_z3_data(z), 0.0); };
        p.real_data = true;
    } else {
        throw std::invalid_argument("builtin_problem: unknown problem '" + name + "'");
    }
    return p;
}

}  // namespace loglight
