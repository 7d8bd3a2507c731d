#include "mfn/transforms.hpp"

#include <memory>

namespace mfn {

namespace {

// Frequencies entering the separable factorization of e^{-i p.x}:
// time axis p0, space axes -p_j.
std::array<double, 4> axis_frequencies(const FourVector& p) {
    return {p.x0, -p.x1, -p.x2, -p.x3};
}

CVector gaussian_transform_value(const GaussianPacket& g, int n, const FourVector& p) {
    const Mat2 finv = g.frame.inverse();
    const Mat2 qm = finv * pauli_embed(p) * finv.dagger();
    const FourVector q = pauli_unembed(qm);
    const FourVector d = q - g.momentum_shift;
    const double e2 = d.x0 * d.x0 + d.x1 * d.x1 + d.x2 * d.x2 + d.x3 * d.x3;
    const double w = g.width;
    const c64 scal = g.amplitude * std::pow(2.0 * kPi, 2.0) * w * w * w * w *
                     std::exp(-0.5 * w * w * e2) *
                     std::polar(1.0, -minkowski_dot(p, g.center));
    CVector v = sym_power(g.frame.conj(), n) * g.polarization;
    v *= scal;
    return v;
}

struct BumpTables {
    std::array<std::shared_ptr<AxisTransformTable>, 4> axis;
    std::array<double, 4> center;
    CVector polarization;
};

BumpTables build_bump_tables(const LatticeBump& b, int pad_override) {
    BumpTables t;
    const int n = b.samples_per_axis;
    const int pad = pad_override > 0 ? pad_override : b.pad_factor;
    std::vector<double> prof(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const double tm = -1.0 + 2.0 * (m + 0.5) / n;
        prof[static_cast<std::size_t>(m)] = 0.5 * (1.0 + std::cos(kPi * tm));
    }
    for (int i = 0; i < 4; ++i)
        t.axis[i] = std::make_shared<AxisTransformTable>(prof, 0.0, b.half_widths[i], pad);
    t.center = {b.center.x0, b.center.x1, b.center.x2, b.center.x3};
    t.polarization = b.polarization;
    return t;
}

CVector bump_table_value(const BumpTables& t, const FourVector& p) {
    const auto nu = axis_frequencies(p);
    c64 s = 1.0;
    for (int i = 0; i < 4; ++i) s *= (*t.axis[i])(nu[i]) * std::polar(1.0, -nu[i] * t.center[i]);
    CVector v = t.polarization;
    v *= s;
    return v;
}

}  // namespace

CVector PositionSum::transform(const FourVector& p) const {
    std::vector<CVector> terms;
    terms.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const c64 ph = std::polar(1.0, -minkowski_dot(p, points[i]));
        terms.push_back(weighted_values[i] * ph);
    }
    if (terms.empty()) return CVector(dim);
    return pairwise_sum(terms);
}

PositionSum position_sum(const TestFunction& f, int order_per_axis) {
    if (order_per_axis < 2) throw std::invalid_argument("position_sum: order must be >= 2");
    const BoundingBox box = f.support_box();
    const QuadRule gl = gauss_legendre(order_per_axis);
    PositionSum ps;
    ps.dim = f.dimension();
    std::array<std::vector<double>, 4> xs, ws;
    for (int a = 0; a < 4; ++a) {
        const double mid = 0.5 * (box.hi[a] + box.lo[a]);
        const double half = 0.5 * (box.hi[a] - box.lo[a]);
        for (int i = 0; i < order_per_axis; ++i) {
            xs[a].push_back(mid + half * gl.nodes[i]);
            ws[a].push_back(half * gl.weights[i]);
        }
    }
    for (int i0 = 0; i0 < order_per_axis; ++i0)
        for (int i1 = 0; i1 < order_per_axis; ++i1)
            for (int i2 = 0; i2 < order_per_axis; ++i2)
                for (int i3 = 0; i3 < order_per_axis; ++i3) {
                    const FourVector x(xs[0][i0], xs[1][i1], xs[2][i2], xs[3][i3]);
                    CVector v = f.evaluate(x);
                    double nn = 0.0;
                    for (std::size_t k = 0; k < v.size(); ++k) nn += std::norm(v[k]);
                    if (nn == 0.0) continue;
                    v *= ws[0][i0] * ws[1][i1] * ws[2][i2] * ws[3][i3];
                    ps.points.push_back(x);
                    ps.weighted_values.push_back(std::move(v));
                }
    return ps;
}

PositionSum hermite_position_sum(const TestFunction& f, const FourVector& center, double width,
                                 int order_per_axis) {
    if (order_per_axis < 2 || width <= 0.0)
        throw std::invalid_argument("hermite_position_sum: bad arguments");
    const QuadRule gh = gauss_hermite_unit_weight(order_per_axis);
    PositionSum ps;
    ps.dim = f.dimension();
    const std::array<double, 4> c = {center.x0, center.x1, center.x2, center.x3};
    for (int i0 = 0; i0 < order_per_axis; ++i0)
        for (int i1 = 0; i1 < order_per_axis; ++i1)
            for (int i2 = 0; i2 < order_per_axis; ++i2)
                for (int i3 = 0; i3 < order_per_axis; ++i3) {
                    const FourVector x(c[0] + width * gh.nodes[i0], c[1] + width * gh.nodes[i1],
                                       c[2] + width * gh.nodes[i2], c[3] + width * gh.nodes[i3]);
                    CVector v = f.evaluate(x);
                    double nn = 0.0;
                    for (std::size_t k = 0; k < v.size(); ++k) nn += std::norm(v[k]);
                    if (nn == 0.0) continue;
                    const double w = width * width * width * width * gh.weights[i0] *
                                     gh.weights[i1] * gh.weights[i2] * gh.weights[i3];
                    v *= w;
                    ps.points.push_back(x);
                    ps.weighted_values.push_back(std::move(v));
                }
    return ps;
}

TransformPair make_transform(const TestFunction& f, const TransformOptions& opt) {
    const std::size_t dim = f.dimension();
    TransformPair pair;
    pair.at_p.dim = dim;
    pair.at_minus_p.dim = dim;

    if (std::holds_alternative<GaussianPacket>(f.body)) {
        const auto g = std::get<GaussianPacket>(f.body);
        const int n = f.degree();
        pair.at_p.eval = [g, n](const MomentumOnCone& p) {
            return gaussian_transform_value(g, n, p.p);
        };
        pair.at_minus_p.eval = [g, n](const MomentumOnCone& p) {
            return gaussian_transform_value(g, n, -p.p);
        };
        return pair;
    }
    if (std::holds_alternative<LatticeBump>(f.body)) {
        const auto tables =
            std::make_shared<BumpTables>(build_bump_tables(std::get<LatticeBump>(f.body),
                                                           opt.bump_pad_factor));
        pair.at_p.eval = [tables](const MomentumOnCone& p) { return bump_table_value(*tables, p.p); };
        pair.at_minus_p.eval = [tables](const MomentumOnCone& p) {
            return bump_table_value(*tables, -p.p);
        };
        return pair;
    }
    const auto ps = std::make_shared<PositionSum>(position_sum(f, opt.mobius_axis_order));
    pair.at_p.eval = [ps](const MomentumOnCone& p) { return ps->transform(p.p); };
    pair.at_minus_p.eval = [ps](const MomentumOnCone& p) { return ps->transform(-p.p); };
    return pair;
}

CVector fourier_value(const TestFunction& f, const FourVector& p, const TransformOptions& opt) {
    if (std::holds_alternative<GaussianPacket>(f.body))
        return gaussian_transform_value(std::get<GaussianPacket>(f.body), f.degree(), p);
    if (std::holds_alternative<LatticeBump>(f.body)) {
        const auto tables = build_bump_tables(std::get<LatticeBump>(f.body), opt.bump_pad_factor);
        return bump_table_value(tables, p);
    }
    return position_sum(f, opt.mobius_axis_order).transform(p);
}

CVector bump_transform_closed(const TestFunction& f, const FourVector& p) {
    const auto& b = std::get<LatticeBump>(f.body);
    const auto nu = axis_frequencies(p);
    const std::array<double, 4> c = {b.center.x0, b.center.x1, b.center.x2, b.center.x3};
    c64 s = 1.0;
    for (int i = 0; i < 4; ++i) {
        s *= b.half_widths[i] * hann_transform(b.half_widths[i] * nu[i]) *
             std::polar(1.0, -nu[i] * c[i]);
    }
    CVector v = b.polarization;
    v *= s;
    return v;
}

TransformPair make_gaussian_lattice_transform(const TestFunction& f, int samples_per_axis,
                                              int pad_factor) {
    const auto& g = std::get<GaussianPacket>(f.body);
    if ((g.frame - Mat2::identity()).norm() > 1e-14)
        throw std::invalid_argument("lattice transform: identity frame required");
    const double h = g.cutoff_widths * g.width;
    std::vector<double> prof(static_cast<std::size_t>(samples_per_axis));
    for (int m = 0; m < samples_per_axis; ++m) {
        const double tm = -1.0 + 2.0 * (m + 0.5) / samples_per_axis;
        prof[static_cast<std::size_t>(m)] =
            std::exp(-0.5 * (tm * h) * (tm * h) / (g.width * g.width));
    }
    std::array<std::shared_ptr<AxisTransformTable>, 4> axis;
    for (int i = 0; i < 4; ++i)
        axis[i] = std::make_shared<AxisTransformTable>(prof, 0.0, h, pad_factor);
    const std::array<double, 4> c = {g.center.x0, g.center.x1, g.center.x2, g.center.x3};
    const FourVector shift = g.momentum_shift;
    const CVector pol = g.polarization;
    const c64 amp = g.amplitude;

    auto value = [axis, c, shift, pol, amp](const FourVector& p) {
        // e^{i k.u} folds into a per-axis frequency shift
        const auto nu = axis_frequencies(p);
        const std::array<double, 4> knu = {shift.x0, -shift.x1, -shift.x2, -shift.x3};
        c64 s = amp;
        for (int i = 0; i < 4; ++i)
            s *= (*axis[i])(nu[i] - knu[i]) * std::polar(1.0, -nu[i] * c[i]);
        CVector v = pol;
        v *= s;
        return v;
    };
    TransformPair pair;
    pair.at_p.dim = f.dimension();
    pair.at_minus_p.dim = f.dimension();
    pair.at_p.eval = [value](const MomentumOnCone& p) { return value(p.p); };
    pair.at_minus_p.eval = [value](const MomentumOnCone& p) { return value(-p.p); };
    return pair;
}

}  // namespace mfn
