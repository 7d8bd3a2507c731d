#include "mfn/testfunc.hpp"

namespace mfn {

namespace {

double hann_profile(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * t));
}

FourVector frame_pullback(const Mat2& frame, const FourVector& y) {
    const Mat2 finv = frame.inverse();
    const Mat2 pu = finv * pauli_embed(y) * finv.dagger();
    return pauli_unembed(pu);
}

}  // namespace

double hann_transform(double nu) {
    const double pi2 = kPi * kPi;
    if (std::abs(nu) < 1e-4) {
        const double n2 = nu * nu;
        // series of pi^2 sin(nu) / (nu (pi^2 - nu^2)) around 0
        return 1.0 - n2 * (1.0 / 6.0 - 1.0 / pi2) + n2 * n2 * (1.0 / 120.0 - 1.0 / (6.0 * pi2) + 1.0 / (pi2 * pi2));
    }
    const double an = std::abs(nu);
    if (std::abs(an - kPi) < 1e-3) {
        // removable point nu = +-pi: B = pi^2 sinc(eps) / ((pi-eps)(2pi-eps))
        const double eps = kPi - an;
        const double s = (std::abs(eps) < 1e-9) ? 1.0 : std::sin(eps) / eps;
        return pi2 * s / ((kPi - eps) * (2.0 * kPi - eps));
    }
    return pi2 * std::sin(nu) / (nu * (pi2 - nu * nu));
}

CVector TestFunction::evaluate(const FourVector& x) const {
    if (std::holds_alternative<GaussianPacket>(body)) {
        const auto& g = std::get<GaussianPacket>(body);
        const FourVector u = frame_pullback(g.frame, x - g.center);
        const double r2 = u.x0 * u.x0 + u.x1 * u.x1 + u.x2 * u.x2 + u.x3 * u.x3;
        const double cut = g.cutoff_widths * g.width;
        CVector v(dimension());
        if (r2 > cut * cut) return v;
        const c64 phase = std::polar(1.0, minkowski_dot(g.momentum_shift, u));
        const c64 scal = g.amplitude * phase * std::exp(-0.5 * r2 / (g.width * g.width));
        const CMatrix dress = sym_power(g.frame.conj(), degree());
        CVector dp = dress * g.polarization;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = scal * dp[i];
        return v;
    }
    if (std::holds_alternative<LatticeBump>(body)) {
        const auto& b = std::get<LatticeBump>(body);
        const std::array<double, 4> u = {x.x0 - b.center.x0, x.x1 - b.center.x1,
                                         x.x2 - b.center.x2, x.x3 - b.center.x3};
        double prod = 1.0;
        for (int i = 0; i < 4; ++i) prod *= hann_profile(u[i] / b.half_widths[i]);
        CVector v(dimension());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = prod * b.polarization[i];
        return v;
    }
    const auto& m = std::get<MobiusImage>(body);
    CVector v(dimension());
    FourVector xin;
    try {
        xin = mobius_point(m.i1, m.i2, m.i3, m.i4, x);
    } catch (const std::domain_error&) {
        return v;  // past the singular locus; the base has decayed there
    }
    const CVector base = m.base->evaluate(xin);
    double bn = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) bn += std::norm(base[i]);
    if (bn == 0.0) return v;
    const Mat2 M = m.a3 * pauli_embed(xin) + m.a4;
    const c64 scale = M.det() * M.det() * M.det();  // det is real on the Hermitian slice
    const CMatrix dress = sym_power(M.inverse().transpose(), m.n);
    CVector dp = dress * base;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = scale * dp[i];
    return v;
}

BoundingBox TestFunction::support_box() const {
    if (std::holds_alternative<GaussianPacket>(body)) {
        const auto& g = std::get<GaussianPacket>(body);
        const Mat2 gram = g.frame.dagger() * g.frame;
        const double smax = herm2_eigenvalues(gram)[1];  // sigma_max(frame)^2
        const double r = g.cutoff_widths * g.width * smax;
        BoundingBox box;
        const std::array<double, 4> c = {g.center.x0, g.center.x1, g.center.x2, g.center.x3};
        for (int i = 0; i < 4; ++i) {
            box.lo[i] = c[i] - r;
            box.hi[i] = c[i] + r;
        }
        return box;
    }
    if (std::holds_alternative<LatticeBump>(body)) {
        const auto& b = std::get<LatticeBump>(body);
        BoundingBox box;
        const std::array<double, 4> c = {b.center.x0, b.center.x1, b.center.x2, b.center.x3};
        for (int i = 0; i < 4; ++i) {
            box.lo[i] = c[i] - b.half_widths[i];
            box.hi[i] = c[i] + b.half_widths[i];
        }
        return box;
    }
    return std::get<MobiusImage>(body).box;
}

TestFunction make_gaussian_packet(int n, const GaussianPacket& packet) {
    if (packet.width <= 0.0) throw std::invalid_argument("GaussianPacket: width must be positive");
    if (packet.polarization.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("GaussianPacket: polarization dimension mismatch");
    if (std::abs(packet.frame.det() - c64(1.0)) > 1e-10)
        throw std::invalid_argument("GaussianPacket: frame must be in SL(2,C)");
    TestFunction f;
    f.label = SpinLabel(0, n);
    f.body = packet;
    return f;
}

TestFunction make_lattice_bump(int n, const LatticeBump& bump) {
    if (bump.polarization.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("LatticeBump: polarization dimension mismatch");
    for (double h : bump.half_widths)
        if (h <= 0.0) throw std::invalid_argument("LatticeBump: half widths must be positive");
    TestFunction f;
    f.label = SpinLabel(0, n);
    f.body = bump;
    return f;
}

TestFunction dilate_packet(const TestFunction& f, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("dilate_packet: scale must be positive");
    if (!std::holds_alternative<GaussianPacket>(f.body))
        throw std::invalid_argument("dilate_packet: only Gaussian packets dilate in closed form");
    const auto& g = std::get<GaussianPacket>(f.body);
    GaussianPacket out = g;
    out.center = g.center * s;
    out.width = g.width * s;
    out.momentum_shift = g.momentum_shift * (1.0 / s);
    out.amplitude = g.amplitude * std::pow(s, 0.5 * f.degree() - 3.0);
    return make_gaussian_packet(f.degree(), out);
}

FourVector mobius_point(const Mat2& a1, const Mat2& a2, const Mat2& a3, const Mat2& a4,
                        const FourVector& x) {
    const Mat2 X = pauli_embed(x);
    const Mat2 M = a3 * X + a4;
    const double scale = M.norm();
    if (std::abs(M.det()) < 1e-10 * std::max(1.0, scale * scale))
        throw std::domain_error("mobius_point: singular locus det(A3 X + A4) = 0");
    Mat2 img = (a1 * X + a2) * M.inverse();
    img = (img + img.dagger()) * 0.5;
    return pauli_unembed(img);
}

AxisTransformTable::AxisTransformTable(std::vector<double> profile, double center,
                                       double half_width, int pad_factor) {
    if (profile.empty() || pad_factor < 1)
        throw std::invalid_argument("AxisTransformTable: bad arguments");
    center_ = center;
    const int n = static_cast<int>(profile.size());
    const double du = 2.0 * half_width / n;
    const int len = n * pad_factor / 2;
    // theta = nu * half_width; table spacing pi / pad_factor covers up to Nyquist
    const double dtheta = kPi / pad_factor;
    dnu_ = dtheta / half_width;
    table_.resize(static_cast<std::size_t>(len));
    for (int r = 0; r < len; ++r) {
        c64 acc = 0.0;
        const double theta = r * dtheta;
        for (int m = 0; m < n; ++m) {
            const double t = -1.0 + 2.0 * (m + 0.5) / n;
            acc += profile[static_cast<std::size_t>(m)] * std::polar(1.0, -theta * t);
        }
        table_[static_cast<std::size_t>(r)] = acc * du;
    }
}

c64 AxisTransformTable::operator()(double nu) const {
    const double a = std::abs(nu) / dnu_;
    const auto r0 = static_cast<std::size_t>(a);
    if (r0 + 1 >= table_.size()) return 0.0;
    const double frac = a - static_cast<double>(r0);
    c64 v = table_[r0] * (1.0 - frac) + table_[r0 + 1] * frac;
    if (nu < 0.0) v = std::conj(v);
    return v * std::polar(1.0, -nu * center_);
}

}  // namespace mfn
