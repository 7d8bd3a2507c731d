#include "mfn/freenet.hpp"

namespace mfn {

ConeFunction gamma0_cone(const ConeFunction& f) {
    ConeFunction out;
    out.dim = f.dim;
    out.eval = [f](const MomentumOnCone& p) { return f(p).conj(); };
    return out;
}

TransformPair fourier_on_cone(const TestFunction& f, const TransformOptions& opt) {
    return make_transform(f, opt);
}

EmbedImage embed_In(const TestFunction& f, int n, const TransformOptions& opt) {
    if (f.degree() != n) throw std::invalid_argument("embed_In: label mismatch");
    const TransformPair tp = make_transform(f, opt);
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    EmbedImage img;
    img.n = n;
    img.fermi = (n % 2 == 1);

    auto part = [&](Sign sign, bool at_minus, bool conjugate) {
        FactorVector fv;
        fv.n = n;
        fv.sign = sign;
        fv.rep.dim = dim;
        const ConeFunction base = at_minus ? tp.at_minus_p : tp.at_p;
        fv.rep = conjugate ? gamma0_cone(base) : base;
        fv.rep.dim = dim;
        return fv;
    };

    // hat(Gamma0 f)(p) = conj(hat f(-p))
    img.parts.push_back(part(Sign::plus, false, false));
    img.parts.push_back(part(Sign::minus, true, true));
    if (img.fermi) {
        img.parts.push_back(part(Sign::plus, true, false));
        img.parts.push_back(part(Sign::minus, false, true));
    }
    return img;
}

c64 image_pairing(const EmbedImage& a, const EmbedImage& b, const QuadratureGrid& grid) {
    if (a.n != b.n || a.parts.size() != b.parts.size())
        throw std::invalid_argument("image_pairing: shape mismatch");
    c64 s = 0.0;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        s += inner_beta(a.parts[i].rep, b.parts[i].rep, a.n, a.parts[i].sign, grid);
    return s;
}

double image_norm(const EmbedImage& a, const QuadratureGrid& grid) {
    return std::sqrt(std::max(0.0, std::real(image_pairing(a, a, grid))));
}

double sigma_n(const EmbedImage& a, const EmbedImage& b, const QuadratureGrid& grid) {
    if (a.n % 2 != 0) throw std::invalid_argument("sigma_n: Bose form needs even n");
    if (a.fermi || b.fermi) throw std::invalid_argument("sigma_n: Bose images expected");
    return std::imag(image_pairing(a, b, grid));
}

EmbedImage gamma_n(const EmbedImage& a) {
    if (a.n % 2 != 1 || a.parts.size() != 4)
        throw std::invalid_argument("gamma_n: Fermi quadruple expected");
    EmbedImage out;
    out.n = a.n;
    out.fermi = true;
    out.parts.resize(4);
    // (phi+, phi-, psi+, psi-) -> (G0 psi-, G0 psi+, G0 phi-, G0 phi+)
    out.parts[0] = {gamma0_cone(a.parts[3].rep), a.n, Sign::plus};
    out.parts[1] = {gamma0_cone(a.parts[2].rep), a.n, Sign::minus};
    out.parts[2] = {gamma0_cone(a.parts[1].rep), a.n, Sign::plus};
    out.parts[3] = {gamma0_cone(a.parts[0].rep), a.n, Sign::minus};
    return out;
}

EmbedImage embed_act_poincare(const PoincareElement& g, const EmbedImage& img) {
    EmbedImage out;
    out.n = img.n;
    out.fermi = img.fermi;
    const int variants_bose[2] = {1, 2};
    const int variants_fermi[4] = {1, 2, 3, 4};
    const int* variants = img.fermi ? variants_fermi : variants_bose;
    for (std::size_t i = 0; i < img.parts.size(); ++i) {
        FactorVector fv;
        fv.n = img.n;
        fv.sign = img.parts[i].sign;
        fv.rep = canonical_V_act(g, img.parts[i].rep, variants[i], img.n);
        out.parts.push_back(std::move(fv));
    }
    return out;
}

EmbedImage embed_act_dilation(double s, const EmbedImage& img) {
    if (!(s > 0.0)) throw std::invalid_argument("embed_act_dilation: scale must be > 0");
    EmbedImage out;
    out.n = img.n;
    out.fermi = img.fermi;
    const double amp = std::pow(s, 1.0 + 0.5 * img.n);
    for (const auto& part : img.parts) {
        FactorVector fv;
        fv.n = img.n;
        fv.sign = part.sign;
        fv.rep.dim = part.rep.dim;
        fv.rep.eval = [s, amp, base = part.rep](const MomentumOnCone& p) {
            const MomentumOnCone q(p.p * s);
            CVector v = base(q);
            v *= amp;
            return v;
        };
        out.parts.push_back(std::move(fv));
    }
    return out;
}

namespace {

double image_residual(const EmbedImage& a, const EmbedImage& b, const QuadratureGrid& grid) {
    EmbedImage diff;
    diff.n = a.n;
    diff.fermi = a.fermi;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        FactorVector fv;
        fv.n = a.n;
        fv.sign = a.parts[i].sign;
        fv.rep = cone_add(a.parts[i].rep, b.parts[i].rep, c64(-1.0));
        diff.parts.push_back(std::move(fv));
    }
    const double den = std::max(image_norm(a, grid), 1e-300);
    return image_norm(diff, grid) / den;
}

}  // namespace

double intertwiner_check(const PoincareElement& g, const TestFunction& f, int n,
                         const QuadratureGrid& grid, const TransformOptions& opt) {
    const EmbedImage lhs = embed_In(covariant_act(g, f), n, opt);
    const EmbedImage rhs = embed_act_poincare(g, embed_In(f, n, opt));
    return image_residual(lhs, rhs, grid);
}

double intertwiner_check_dilation(double lambda, const TestFunction& f, int n,
                                  const QuadratureGrid& grid, const TransformOptions& opt) {
    const double s = lambda * lambda;  // tube dilation Z -> lambda^2 Z
    const EmbedImage lhs = embed_In(dilate_packet(f, s), n, opt);
    const EmbedImage rhs = embed_act_dilation(s, embed_In(f, n, opt));
    return image_residual(lhs, rhs, grid);
}

double intertwiner_check_special_conformal(const Mat2& c, const TestFunction& f, int n,
                                           const QuadratureGrid& grid, int axis_order) {
    const ConformalElement g = special_conformal_element(c);
    if (!std::holds_alternative<GaussianPacket>(f.body))
        throw std::invalid_argument("special-conformal route check expects a Gaussian packet");
    const auto& pk = std::get<GaussianPacket>(f.body);

    // route 1: honest transform of T0(g) f, discretized by a Hermite rule
    // around the image of the packet bulk, widened by the local stretch of
    // the Mobius map there
    const TestFunction tf = t0_act(g, f, n);
    const FourVector icenter =
        mobius_point(g.block(1), g.block(2), g.block(3), g.block(4), pk.center);
    const Mat2 mc = g.block(3) * pauli_embed(pk.center) + g.block(4);
    const double stretch = 1.0 / herm2_eigenvalues(mc.dagger() * mc)[0];
    const auto route1 = std::make_shared<PositionSum>(
        hermite_position_sum(tf, icenter, 1.25 * stretch * pk.width, axis_order));

    // route 2: transported phases over the original support with the
    // Jacobian-free multiplier
    PositionSum ps = hermite_position_sum(f, pk.center, 1.05 * pk.width, axis_order);
    auto route2 = std::make_shared<PositionSum>();
    route2->dim = ps.dim;
    const Mat2 a1 = g.block(1), a2 = g.block(2), a3 = g.block(3), a4 = g.block(4);
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
        const FourVector& x = ps.points[i];
        const Mat2 m = a3 * pauli_embed(x) + a4;
        const CMatrix dress = sym_power(m.transpose().inverse(), n) * (1.0 / m.det());
        route2->points.push_back(mobius_point(a1, a2, a3, a4, x));
        route2->weighted_values.push_back(dress * ps.weighted_values[i]);
    }

    auto image_from_sum = [&](const std::shared_ptr<PositionSum>& s) {
        EmbedImage img;
        img.n = n;
        img.fermi = (n % 2 == 1);
        const std::size_t dim = static_cast<std::size_t>(n) + 1;
        auto plus_at = [s, dim](double sign) {
            ConeFunction cf;
            cf.dim = dim;
            cf.eval = [s, sign](const MomentumOnCone& p) { return s->transform(p.p * sign); };
            return cf;
        };
        img.parts.push_back({plus_at(1.0), n, Sign::plus});
        img.parts.push_back({gamma0_cone(plus_at(-1.0)), n, Sign::minus});
        if (img.fermi) {
            img.parts.push_back({plus_at(-1.0), n, Sign::plus});
            img.parts.push_back({gamma0_cone(plus_at(1.0)), n, Sign::minus});
        }
        return img;
    };

    return image_residual(image_from_sum(route1), image_from_sum(route2), grid);
}

RegionImage region_transform(const ConformalElement& g, const Region& r) {
    RegionImage out;
    std::vector<FourVector> samples;
    samples.push_back(r.center);
    samples.push_back(r.center + FourVector(r.radius, 0, 0, 0));
    samples.push_back(r.center - FourVector(r.radius, 0, 0, 0));
    const int nth = 6, nph = 8;
    for (int i = 0; i < nth; ++i) {
        const double th = kPi * (i + 0.5) / nth;
        for (int j = 0; j < nph; ++j) {
            const double ph = 2.0 * kPi * j / nph;
            const FourVector dir(0.0, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                 std::cos(th));
            samples.push_back(r.center + dir * r.radius);                       // equator
            samples.push_back(r.center + dir * (0.5 * r.radius) +
                              FourVector(0.5 * r.radius, 0, 0, 0));             // upper cone
            samples.push_back(r.center + dir * (0.5 * r.radius) -
                              FourVector(0.5 * r.radius, 0, 0, 0));             // lower cone
        }
    }
    const Mat2 a3 = g.block(3), a4 = g.block(4);

    // det(A3 X + A4) is real on Hermitian X; a sign change over the closed
    // region means the singular locus crosses it
    {
        const int m = 7;
        bool pos = false, neg = false;
        for (int i0 = 0; i0 < m && out.regular; ++i0)
            for (int i1 = 0; i1 < m && out.regular; ++i1)
                for (int i2 = 0; i2 < m && out.regular; ++i2)
                    for (int i3 = 0; i3 < m && out.regular; ++i3) {
                        const auto t = [&](int idx) { return -1.0 + 2.0 * idx / (m - 1.0); };
                        const FourVector x =
                            r.center + FourVector(t(i0), t(i1), t(i2), t(i3)) * r.radius;
                        if (!r.contains(x)) continue;
                        const double d = std::real((a3 * pauli_embed(x) + a4).det());
                        if (std::abs(d) < 1e-6) out.regular = false;
                        (d > 0.0 ? pos : neg) = true;
                        if (pos && neg) out.regular = false;
                    }
    }

    std::vector<FourVector> images;
    for (const auto& x : samples) {
        const Mat2 den = a3 * pauli_embed(x) + a4;
        if (std::abs(den.det()) < 1e-6) {
            out.regular = false;
            continue;
        }
        try {
            images.push_back(mobius_point(g.block(1), g.block(2), a3, a4, x));
        } catch (const std::domain_error&) {
            out.regular = false;
        }
    }
    if (images.empty()) {
        out.regular = false;
        out.region = r;
        return out;
    }
    const FourVector c = images.front();  // image of the center
    double rad = 0.0;
    for (const auto& y : images) {
        const FourVector d = y - c;
        rad = std::max(rad, d.spatial_norm() + std::abs(d.x0));
    }
    out.region.center = c;
    out.region.radius = rad * 1.05 + 1e-12;
    return out;
}

bool spacelike_separated(const Region& r1, const Region& r2) {
    const FourVector d = r1.center - r2.center;
    return d.spatial_norm() - std::abs(d.x0) > r1.radius + r2.radius;
}

double causality_check(const TestFunction& f, const TestFunction& h, int n,
                       const QuadratureGrid& grid, const TransformOptions& opt) {
    const EmbedImage fi = embed_In(f, n, opt);
    const EmbedImage hi = embed_In(h, n, opt);
    const double den = std::max(image_norm(fi, grid) * image_norm(hi, grid), 1e-300);
    if (n % 2 == 0) return std::abs(sigma_n(fi, hi, grid)) / den;
    return std::abs(image_pairing(fi, hi, grid)) / den;
}

c64 fock_two_point(const TestFunction& f, const TestFunction& h, int n,
                   const QuadratureGrid& grid, const TransformOptions& opt) {
    const EmbedImage fi = embed_In(f, n, opt);
    const EmbedImage hi = embed_In(h, n, opt);
    // Bose: the one-particle product on h_n; Fermi: the basis projection
    // keeps the first half of the quadruple. Both reduce to the first two
    // parts.
    c64 s = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        s += inner_beta(fi.parts[i].rep, hi.parts[i].rep, n, fi.parts[i].sign, grid);
    return s;
}

}  // namespace mfn
