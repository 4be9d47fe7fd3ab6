#include "loglight/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace loglight {

namespace {

Json vec_re(const ComplexVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i].real());
    return a;
}

Json vec_im(const ComplexVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i].imag());
    return a;
}

Json vec_real(const RealVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

ComplexVector complex_vec(const Json& re, const Json& im) {
    if (re.size() != im.size())
        throw std::invalid_argument("approximant JSON: re/im length mismatch");
    ComplexVector v(static_cast<Eigen::Index>(re.size()));
    for (size_t i = 0; i < re.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = Complex(re[i].get<double>(), im[i].get<double>());
    return v;
}

RealVector real_vec(const Json& a) {
    RealVector v(static_cast<Eigen::Index>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    return v;
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex pair_complex(const Json& j) { return Complex(j.at(0).get<double>(), j.at(1).get<double>()); }

Json arnoldi_to_json(const ArnoldiBasis& b) {
    Json h_re = Json::array(), h_im = Json::array();
    for (Eigen::Index i = 0; i < b.H.rows(); ++i) {
        Json row_re = Json::array(), row_im = Json::array();
        for (Eigen::Index j = 0; j < b.H.cols(); ++j) {
            row_re.push_back(b.H(i, j).real());
            row_im.push_back(b.H(i, j).imag());
        }
        h_re.push_back(row_re);
        h_im.push_back(row_im);
    }
    return Json{{"dim", b.dim},
                {"seed_scale", b.seed_scale},
                {"breakdown", b.breakdown},
                {"multiplier_tag", b.multiplier_tag},
                {"h_re", h_re},
                {"h_im", h_im}};
}

ArnoldiBasis arnoldi_from_json(const Json& j) {
    ArnoldiBasis b;
    b.dim = j.at("dim").get<int>();
    b.seed_scale = j.at("seed_scale").get<double>();
    b.breakdown = j.at("breakdown").get<bool>();
    b.multiplier_tag = j.at("multiplier_tag").get<std::string>();
    const Json& h_re = j.at("h_re");
    const Json& h_im = j.at("h_im");
    b.H.resize(b.dim + 1, b.dim);
    for (int i = 0; i <= b.dim; ++i)
        for (int k = 0; k < b.dim; ++k)
            b.H(i, k) = Complex(h_re[static_cast<size_t>(i)][static_cast<size_t>(k)].get<double>(),
                                h_im[static_cast<size_t>(i)][static_cast<size_t>(k)].get<double>());
    return b;
}

Json poly_to_json(const PolyPart& p) {
    Json j{{"degree", p.degree},
           {"use_arnoldi", p.use_arnoldi},
           {"coeff_re", vec_re(p.coeff)},
           {"coeff_im", vec_im(p.coeff)},
           {"scale", vec_real(p.scale)}};
    j["arnoldi"] = p.basis ? arnoldi_to_json(*p.basis) : Json(nullptr);
    return j;
}

PolyPart poly_from_json(const Json& j) {
    PolyPart p;
    p.degree = j.at("degree").get<int>();
    p.use_arnoldi = j.at("use_arnoldi").get<bool>();
    p.coeff = complex_vec(j.at("coeff_re"), j.at("coeff_im"));
    p.scale = real_vec(j.at("scale"));
    if (!j.at("arnoldi").is_null()) p.basis = arnoldi_from_json(j.at("arnoldi"));
    return p;
}

std::string kind_name(PoleKind k) {
    switch (k) {
        case PoleKind::HankelParabola: return "hankel";
        case PoleKind::Confluent: return "confluent";
        case PoleKind::Pinned: return "pinned";
        case PoleKind::FejerWalsh: return "fejer_walsh";
    }
    return "?";
}

PoleKind kind_from_name(const std::string& s) {
    if (s == "hankel") return PoleKind::HankelParabola;
    if (s == "confluent") return PoleKind::Confluent;
    if (s == "pinned") return PoleKind::Pinned;
    if (s == "fejer_walsh") return PoleKind::FejerWalsh;
    throw std::invalid_argument("approximant JSON: unknown pole kind '" + s + "'");
}

std::ostream& csv_stream(std::ostream& os) {
    os << std::setprecision(17);
    return os;
}

}  // namespace

Json to_json(const ReciprocalLogApproximant& g) {
    Json terms = Json::array();
    for (const auto& t : g.terms) {
        Json jt{{"branch_point", complex_pair(t.term.branch_point)},
                {"rotation", t.term.rotation},
                {"kind", kind_name(t.term.config.kind)},
                {"n", t.term.config.n},
                {"s_scale", t.term.config.scale},
                {"pin_power", t.term.config.pin_power},
                {"fw",
                 {{"sigma", t.term.config.fw.sigma},
                  {"mu", t.term.config.fw.mu},
                  {"rho", t.term.config.fw.rho}}},
                {"poles_re", vec_re(t.poles)},
                {"poles_im", vec_im(t.poles)},
                {"coeff_re", vec_re(t.coeff)},
                {"coeff_im", vec_im(t.coeff)},
                {"col_scale", vec_real(t.scale)},
                {"constant_dropped", t.constant_dropped}};
        jt["arnoldi"] = t.basis ? arnoldi_to_json(*t.basis) : Json(nullptr);
        terms.push_back(jt);
    }
    return Json{{"type", "reciprocal_log"},
                {"dof", g.dof},
                {"rank_deficient", g.rank_deficient},
                {"training_err", g.training_err},
                {"real_coefficients", g.real_coefficients},
                {"poly", poly_to_json(g.poly)},
                {"terms", terms}};
}

ReciprocalLogApproximant approximant_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "reciprocal_log")
        throw std::invalid_argument("approximant JSON: wrong type tag");
    ReciprocalLogApproximant g;
    g.dof = j.at("dof").get<int>();
    g.rank_deficient = j.at("rank_deficient").get<bool>();
    g.training_err = j.at("training_err").get<double>();
    g.real_coefficients = j.at("real_coefficients").get<bool>();
    g.poly = poly_from_json(j.at("poly"));
    for (const Json& jt : j.at("terms")) {
        FittedLogTerm t;
        t.term.branch_point = pair_complex(jt.at("branch_point"));
        t.term.rotation = jt.at("rotation").get<double>();
        t.term.config.kind = kind_from_name(jt.at("kind").get<std::string>());
        t.term.config.n = jt.at("n").get<int>();
        t.term.config.scale = jt.at("s_scale").get<double>();
        t.term.config.pin_power = jt.at("pin_power").get<int>();
        t.term.config.fw.sigma = jt.at("fw").at("sigma").get<double>();
        t.term.config.fw.mu = jt.at("fw").at("mu").get<double>();
        t.term.config.fw.rho = jt.at("fw").at("rho").get<double>();
        t.poles = complex_vec(jt.at("poles_re"), jt.at("poles_im"));
        t.coeff = complex_vec(jt.at("coeff_re"), jt.at("coeff_im"));
        t.scale = real_vec(jt.at("col_scale"));
        t.constant_dropped = jt.at("constant_dropped").get<bool>();
        if (!jt.at("arnoldi").is_null()) t.basis = arnoldi_from_json(jt.at("arnoldi"));
        g.terms.push_back(std::move(t));
    }
    return g;
}

Json to_json(const LightningRationalApproximant& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        terms.push_back(Json{{"corner", complex_pair(t.corner)},
                             {"direction", complex_pair(t.direction)},
                             {"poles_re", vec_re(t.poles)},
                             {"poles_im", vec_im(t.poles)},
                             {"coeff_re", vec_re(t.coeff)},
                             {"coeff_im", vec_im(t.coeff)},
                             {"col_scale", vec_real(t.scale)}});
    }
    return Json{{"type", "lightning_rational"},
                {"dof", r.dof},
                {"rank_deficient", r.rank_deficient},
                {"training_err", r.training_err},
                {"real_coefficients", r.real_coefficients},
                {"poly", poly_to_json(r.poly)},
                {"terms", terms}};
}

LightningRationalApproximant lightning_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "lightning_rational")
        throw std::invalid_argument("approximant JSON: wrong type tag");
    LightningRationalApproximant r;
    r.dof = j.at("dof").get<int>();
    r.rank_deficient = j.at("rank_deficient").get<bool>();
    r.training_err = j.at("training_err").get<double>();
    r.real_coefficients = j.at("real_coefficients").get<bool>();
    r.poly = poly_from_json(j.at("poly"));
    for (const Json& jt : j.at("terms")) {
        LightningTerm t;
        t.corner = pair_complex(jt.at("corner"));
        t.direction = pair_complex(jt.at("direction"));
        t.poles = complex_vec(jt.at("poles_re"), jt.at("poles_im"));
        t.coeff = complex_vec(jt.at("coeff_re"), jt.at("coeff_im"));
        t.scale = real_vec(jt.at("col_scale"));
        r.terms.push_back(std::move(t));
    }
    return r;
}

Json to_json(const PlanarDomain& domain) {
    Json corners = Json::array();
    for (const Corner& c : domain.corners())
        corners.push_back(Json{{"vertex", complex_pair(c.vertex)},
                               {"interior_angle", c.interior_angle},
                               {"bisector", complex_pair(c.bisector)}});
    Json edges = Json::array();
    for (const Edge& e : domain.edges()) {
        if (e.kind() == Edge::Kind::Segment) {
            edges.push_back(Json{{"type", "segment"},
                                 {"a", complex_pair(e.seg_a())},
                                 {"b", complex_pair(e.seg_b())}});
        } else {
            edges.push_back(Json{{"type", "arc"},
                                 {"center", complex_pair(e.center())},
                                 {"radius", e.radius()},
                                 {"ang_a", e.ang_a()},
                                 {"ang_b", e.ang_b()}});
        }
    }
    return Json{{"corners", corners}, {"edges", edges}};
}

void save_text_atomic(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& writer) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        writer(os);
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void save_json_atomic(const std::filesystem::path& path, const Json& j) {
    save_text_atomic(path, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
}

void write_report_csv(std::ostream& os, const ConvergenceReport& report) {
    csv_stream(os) << "N,max_err,boundary_err,runtime_ms\n";
    for (const auto& p : report.series)
        os << p.N << "," << p.max_err << "," << p.boundary_err << "," << p.runtime_ms << "\n";
}

void write_error_curve_csv(std::ostream& os, const std::vector<ErrorCurvePoint>& curve) {
    csv_stream(os) << "re_z,im_z,re_err,im_err,abs_err\n";
    for (const auto& p : curve)
        os << p.z.real() << "," << p.z.imag() << "," << p.err.real() << "," << p.err.imag()
           << "," << std::abs(p.err) << "\n";
}

void write_grid_csv(std::ostream& os, const ClusteredGrid& grid) {
    csv_stream(os) << "re_z,im_z,dist_nearest_corner\n";
    for (const Complex& z : grid.points) {
        double d = std::numeric_limits<double>::infinity();
        for (const Complex& a : grid.anchors) d = std::min(d, std::abs(z - a));
        os << z.real() << "," << z.imag() << "," << d << "\n";
    }
}

void write_field_csv(std::ostream& os, const std::vector<FieldSample>& field) {
    csv_stream(os) << "re_z,im_z,u,re_g,im_g\n";
    for (const auto& s : field)
        os << s.z.real() << "," << s.z.imag() << "," << s.u << "," << s.gval.real() << ","
           << s.gval.imag() << "\n";
}

}  // namespace loglight
