#include "mfn/poincare.hpp"

namespace mfn {

PoincareElement PoincareElement::operator*(const PoincareElement& o) const {
    PoincareElement r;
    r.a = a * o.a;
    r.translation = lorentz_act(a, o.translation) + translation;
    return r;
}

PoincareElement PoincareElement::inverse() const {
    PoincareElement r;
    r.a = a.inverse();
    r.translation = lorentz_act(r.a, -translation);
    return r;
}

ConeFunction scalar_cone_function(std::function<c64(const MomentumOnCone&)> f) {
    ConeFunction cf;
    cf.dim = 1;
    cf.eval = [f = std::move(f)](const MomentumOnCone& p) {
        CVector v(1);
        v[0] = f(p);
        return v;
    };
    return cf;
}

FourVector lorentz_act(const Mat2& a, const FourVector& x) {
    const Mat2 img = a * pauli_embed(x) * a.dagger();
    return pauli_unembed(img);
}

Mat2 boost_section(const MomentumOnCone& mp) {
    const FourVector& p = mp.p;
    if (on_singular_ray(p)) throw std::domain_error("boost_section: singular ray p3 = -p0");
    const double p0 = p.x0;
    const double pp = p.x0 + p.x3;
    const double s = 1.0 / std::sqrt(2.0 * p0 * pp);
    const double sq = std::sqrt(p0);
    Mat2 h;
    h.a = c64(-sq * pp, 0.0) * s;
    h.b = c64(p.x1, -p.x2) * (s / sq);
    h.c = c64(-sq * p.x1, -sq * p.x2) * s;
    h.d = c64(-pp / sq, 0.0) * s;
    return h;
}

Mat2 little_group_factor(const Mat2& a, const MomentumOnCone& p) {
    const FourVector q = lorentz_act(a.inverse(), p.p);
    const MomentumOnCone mq(q);
    return boost_section(p).inverse() * a * boost_section(mq);
}

c64 wigner_phase(const Mat2& a, const MomentumOnCone& p) {
    const c64 z = -a.b * c64(p.p.x1, p.p.x2) + a.d * c64(p.p.x0 + p.p.x3, 0.0);
    const double m = std::abs(z);
    if (m < 1e-12) throw std::domain_error("wigner_phase: undefined at this point");
    return z / m;
}

ConeFunction wigner_act(const PoincareElement& g, const ConeFunction& phi, int n, Sign sign) {
    if (phi.dim != 1) throw std::invalid_argument("wigner_act: scalar cone function expected");
    const Mat2 ainv = g.a.inverse();
    ConeFunction out;
    out.dim = 1;
    out.eval = [g, ainv, phi, n, sign](const MomentumOnCone& p) {
        const c64 tphase = std::polar(1.0, -minkowski_dot(p.p, g.translation));
        c64 h = wigner_phase(g.a, p);          // e^{-i theta/2}
        if (sign == Sign::plus) h = std::conj(h);
        c64 hp = 1.0;
        for (int i = 0; i < n; ++i) hp *= h;
        const MomentumOnCone q(lorentz_act(ainv, p.p));
        CVector v = phi(q);
        v *= tphase * hp;
        return v;
    };
    return out;
}

ConeFunction canonical_V_act(const PoincareElement& g, const ConeFunction& phi, int variant, int n) {
    if (variant < 1 || variant > 4) throw std::invalid_argument("canonical_V_act: variant in 1..4");
    if (phi.dim != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("canonical_V_act: dimension mismatch");
    const bool plus_label = (variant == 1 || variant == 3);   // (0, n/2) vs (n/2, 0)
    const double esign = (variant == 1 || variant == 2) ? -1.0 : 1.0;
    const CMatrix d = plus_label ? sym_power(g.a.conj(), n) : sym_power(g.a, n);
    const Mat2 ainv = g.a.inverse();
    ConeFunction out;
    out.dim = phi.dim;
    out.eval = [g, ainv, phi, d, esign](const MomentumOnCone& p) {
        const c64 tphase = std::polar(1.0, esign * minkowski_dot(p.p, g.translation));
        const MomentumOnCone q(lorentz_act(ainv, p.p));
        CVector v = d * phi(q);
        v *= tphase;
        return v;
    };
    return out;
}

TestFunction covariant_act(const PoincareElement& g, const TestFunction& f) {
    if (!std::holds_alternative<GaussianPacket>(f.body))
        throw std::invalid_argument("covariant_act: catalog is closed on Gaussian packets");
    const auto& p = std::get<GaussianPacket>(f.body);
    GaussianPacket out = p;
    out.frame = g.a * p.frame;
    out.center = lorentz_act(g.a, p.center) + g.translation;
    return make_gaussian_packet(f.degree(), out);
}

}  // namespace mfn
