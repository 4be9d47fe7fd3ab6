#pragma once

#include "loglight/numkit.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loglight {

/// Sample points clustered exponentially toward singular anchor points.
struct ClusteredGrid {
    std::vector<Complex> points;
    std::vector<Complex> anchors;  ///< singular endpoint(s) the clustering targets
    double min_dist = 0.0;         ///< smallest point-to-anchor distance
    int count = 0;

    ComplexVector as_vector() const;
};

/// M points 10^e, e equispaced in [lo_exp, hi_exp], anchored at 0 and
/// sorted by distance to the anchor.
ClusteredGrid logspace_grid(double lo_exp, double hi_exp, int M);

struct Corner {
    Complex vertex;
    double interior_angle = 0.0;  ///< in (0, 2*pi)
    Complex bisector;             ///< unit direction bisecting the exterior angle
};

/// Boundary piece: straight segment or circular arc.
class Edge {
  public:
    enum class Kind { Segment, Arc };

    static Edge segment(Complex a, Complex b);
    /// Arc of |z - center| = radius traversed from angle ang_a to ang_b
    /// (ang_b > ang_a means counterclockwise).
    static Edge arc(Complex center, double radius, double ang_a, double ang_b);

    Kind kind() const { return kind_; }
    Complex start() const;
    Complex end() const;
    double length() const;
    Complex point_at_arclength(double s) const;
    /// Point at arclength d measured back from the end of the edge,
    /// computed from the endpoint so tiny d stays representable.
    Complex point_from_end(double d) const;
    double distance(Complex z) const;

    Complex center() const { return center_; }
    double radius() const { return radius_; }
    double ang_a() const { return ang_a_; }
    double ang_b() const { return ang_b_; }
    Complex seg_a() const { return a_; }
    Complex seg_b() const { return b_; }

  private:
    Kind kind_ = Kind::Segment;
    Complex a_, b_;        // segment endpoints
    Complex center_;       // arc data
    double radius_ = 0.0;
    double ang_a_ = 0.0, ang_b_ = 0.0;
};

/// Closed Jordan region with corners, positively oriented boundary edges,
/// and (optionally) an exact membership test for the closed region.
class PlanarDomain {
  public:
    PlanarDomain() = default;
    PlanarDomain(std::vector<Corner> corners, std::vector<Edge> edges,
                 std::function<bool(Complex)> inside = {});

    const std::vector<Corner>& corners() const { return corners_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Membership in the closed region, with an optional extra tolerance
    /// band around the boundary.
    bool contains(Complex z, double boundary_tol = 0.0) const;
    double boundary_distance(Complex z) const;
    std::pair<Complex, Complex> bounding_box() const;

  private:
    std::vector<Corner> corners_;
    std::vector<Edge> edges_;
    std::function<bool(Complex)> inside_;
};

/// Simple polygon from counterclockwise vertices; corner angles and
/// exterior bisectors are derived from the geometry.
PlanarDomain make_polygon(const std::vector<Complex>& vertices);

/// Two-thirds bite of the unit disk: corners 0, w = e^{i*pi/3}, conj(w),
/// bounded by the two radial segments and the major arc through -1.
/// The removed wedge straddles the positive real axis.
PlanarDomain pacman_domain();

/// f(z) = z*log(-z/2)*(1 - z/w)^{1/2}*(1 - z/conj(w))^{3/2}, principal
/// branches, with f(0) = 0 by continuity.
Complex pacman_target(Complex z);

/// L-shaped region with vertices 0, 2, 2+i, 1+i, 1+2i, 2i.
PlanarDomain lshape_domain();

/// Dirichlet data Re(z^2) = x^2 - y^2.
double lshape_boundary_data(Complex z);

PlanarDomain unit_square_domain();

/// Dirichlet data Re(z^3); the exact solution of the associated Laplace
/// problem is Re(z^3) itself.
double square_z3_data(Complex z);

/// Boundary sampling with two-sided exponential clustering: on each edge,
/// half the points at log-uniform distances in [min_dist*len, len/2] from
/// each endpoint, measured along the edge.  min_dist is relative to edge
/// length.  Points are in boundary-traversal order.
ClusteredGrid boundary_grid(const PlanarDomain& domain, int per_edge, double min_dist);

/// Named test problem: an interval or planar domain plus the boundary
/// target.  real_data marks Dirichlet problems (only Re of the target is
/// data; the fit is over real coefficient pairs).
struct TestProblem {
    std::string name;
    std::optional<PlanarDomain> domain;  ///< empty: the interval [0,1]
    std::function<Complex(Complex)> target;
    bool real_data = false;
};

/// Built-ins: "sqrt", "pacman", "lshape", "square-z3".
TestProblem builtin_problem(const std::string& name);

}  // namespace loglight
