#include "mfn/conequad.hpp"

#include <sstream>

namespace mfn {

QuadratureGrid QuadratureGrid::build(int radial_order, int angular_order, double radial_scale) {
    if (radial_order < 2 || angular_order < 2)
        throw std::invalid_argument("QuadratureGrid: orders must be >= 2");
    if (!(radial_scale > 0.0)) throw std::invalid_argument("QuadratureGrid: scale must be > 0");
    QuadratureGrid g;
    g.rule_ = RadialRule::laguerre;
    g.radial_order_ = radial_order;
    g.angular_order_ = angular_order;
    g.radial_scale_ = radial_scale;

    const QuadRule rad = gauss_laguerre_unit_weight(radial_order);
    const QuadRule pol = gauss_legendre(angular_order);
    const int naz = angular_order;
    g.nodes_.reserve(static_cast<std::size_t>(radial_order) * angular_order * naz);
    for (int i = 0; i < radial_order; ++i) {
        const double r = radial_scale * rad.nodes[i];
        const double wr = radial_scale * rad.weights[i];
        for (int j = 0; j < angular_order; ++j) {
            const double u = pol.nodes[j];
            const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
            for (int k = 0; k < naz; ++k) {
                const double phi = 2.0 * kPi * (k + 0.5) / naz;
                const FourVector p(r, r * su * std::cos(phi), r * su * std::sin(phi), r * u);
                const double w = wr * (r / 2.0) * pol.weights[j] * (2.0 * kPi / naz);
                g.nodes_.push_back({MomentumOnCone(p), w});
            }
        }
    }
    return g;
}

QuadratureGrid QuadratureGrid::build_finite(int radial_order, int angular_order, double r_max) {
    if (radial_order < 2 || angular_order < 2)
        throw std::invalid_argument("QuadratureGrid: orders must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("QuadratureGrid: r_max must be > 0");
    QuadratureGrid g;
    g.rule_ = RadialRule::legendre;
    g.radial_order_ = radial_order;
    g.angular_order_ = angular_order;
    g.radial_cut_ = r_max;

    const QuadRule rad = gauss_legendre(radial_order);
    const QuadRule pol = gauss_legendre(angular_order);
    const int naz = angular_order;
    g.nodes_.reserve(static_cast<std::size_t>(radial_order) * angular_order * naz);
    for (int i = 0; i < radial_order; ++i) {
        const double r = 0.5 * r_max * (rad.nodes[i] + 1.0);
        const double wr = 0.5 * r_max * rad.weights[i];
        for (int j = 0; j < angular_order; ++j) {
            const double u = pol.nodes[j];
            const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
            for (int k = 0; k < naz; ++k) {
                const double phi = 2.0 * kPi * (k + 0.5) / naz;
                const FourVector p(r, r * su * std::cos(phi), r * su * std::sin(phi), r * u);
                const double w = wr * (r / 2.0) * pol.weights[j] * (2.0 * kPi / naz);
                g.nodes_.push_back({MomentumOnCone(p), w});
            }
        }
    }
    return g;
}

c64 QuadratureGrid::integrate(const std::function<c64(const MomentumOnCone&)>& f) const {
    std::vector<c64> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) terms[i] = nodes_[i].weight * f(nodes_[i].p);
    return pairwise_sum(terms);
}

const std::vector<CMatrix>& QuadratureGrid::beta_cache(int n, Sign sign) const {
    const auto key = std::make_pair(n, sign == Sign::plus ? 0 : 1);
    auto it = beta_.find(key);
    if (it == beta_.end()) {
        std::vector<CMatrix> mats;
        mats.reserve(nodes_.size());
        for (const auto& node : nodes_) {
            const Mat2 pd = node.p.pauli_dag;
            mats.push_back(sign == Sign::plus ? sym_power(pd.conj(), n) : sym_power(pd, n));
        }
        it = beta_.emplace(key, std::move(mats)).first;
    }
    return it->second;
}

void QuadratureGrid::warm_beta_cache(int n) const {
    beta_cache(n, Sign::plus);
    beta_cache(n, Sign::minus);
}

std::string QuadratureGrid::descriptor() const {
    std::ostringstream os;
    os << (rule_ == RadialRule::laguerre ? "laguerre" : "legendre") << " radial=" << radial_order_
       << " angular=" << angular_order_ << "x" << angular_order_;
    if (rule_ == RadialRule::laguerre)
        os << " scale=" << radial_scale_;
    else
        os << " rmax=" << radial_cut_;
    os << " nodes=" << nodes_.size();
    return os.str();
}

c64 inner_beta(const ConeFunction& phi, const ConeFunction& psi, int n, Sign sign,
               const QuadratureGrid& grid) {
    const std::size_t want = static_cast<std::size_t>(n) + 1;
    if (phi.dim != want || psi.dim != want)
        throw std::invalid_argument("inner_beta: dimension mismatch");
    const auto& betas = grid.beta_cache(n, sign);
    const auto& nodes = grid.nodes();
    std::vector<c64> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const CVector a = phi(nodes[i].p);
        const CVector b = psi(nodes[i].p);
        terms[i] = nodes[i].weight * dot(a, betas[i] * b);
    }
    return pairwise_sum(terms);
}

CVector sym_tensor_power(const std::array<c64, 2>& w, int n) {
    CVector v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c64 t = std::sqrt(binomial(n, k));
        for (int i = 0; i < n - k; ++i) t *= w[0];
        for (int i = 0; i < k; ++i) t *= w[1];
        v[static_cast<std::size_t>(k)] = t;
    }
    return v;
}

namespace {

CVector range_unit(const MomentumOnCone& p, int n, Sign sign) {
    auto [vplus, vzero] = null_eigenpair(p.p);
    const double nn = std::sqrt(std::norm(vplus[0]) + std::norm(vplus[1]));
    std::array<c64, 2> w = {vplus[0] / nn, vplus[1] / nn};
    if (sign == Sign::plus) w = {std::conj(w[0]), std::conj(w[1])};
    return sym_tensor_power(w, n);
}

}  // namespace

ConeFunction project_range(const ConeFunction& phi, int n, Sign sign) {
    if (phi.dim != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("project_range: dimension mismatch");
    ConeFunction out;
    out.dim = phi.dim;
    out.eval = [phi, n, sign](const MomentumOnCone& p) {
        const CVector u = range_unit(p, n, sign);
        const CVector v = phi(p);
        return u * dot(u, v);
    };
    return out;
}

ConeFunction project_null(const ConeFunction& phi, int n, Sign sign) {
    if (phi.dim != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("project_null: dimension mismatch");
    ConeFunction out;
    out.dim = phi.dim;
    out.eval = [phi, n, sign](const MomentumOnCone& p) {
        const CVector u = range_unit(p, n, sign);
        const CVector v = phi(p);
        return v - u * dot(u, v);
    };
    return out;
}

FactorVector phi_plus(const ConeFunction& chi, int n) {
    if (chi.dim != 1) throw std::invalid_argument("phi_plus: scalar cone function expected");
    FactorVector fv;
    fv.n = n;
    fv.sign = Sign::plus;
    fv.rep.dim = static_cast<std::size_t>(n) + 1;
    fv.rep.eval = [chi, n](const MomentumOnCone& p) {
        const Mat2 hc = boost_section(p).conj();
        // Sym^n(conj H_p) e_n = (second column of conj H_p)^{(x) n}
        CVector v = sym_tensor_power({hc.b, hc.d}, n);
        const c64 x = chi(p)[0];
        v *= x;
        return v;
    };
    return fv;
}

double factor_norm(const FactorVector& v, const QuadratureGrid& grid) {
    const c64 s = inner_beta(v.rep, v.rep, v.n, v.sign, grid);
    return std::sqrt(std::max(0.0, std::real(s)));
}

bool factor_equal(const FactorVector& a, const FactorVector& b, const QuadratureGrid& grid,
                  double tol_rel) {
    if (a.n != b.n || a.sign != b.sign) return false;
    FactorVector d;
    d.n = a.n;
    d.sign = a.sign;
    d.rep = cone_add(a.rep, b.rep, c64(-1.0));
    const double scale = std::max(factor_norm(a, grid), factor_norm(b, grid));
    return factor_norm(d, grid) <= tol_rel * std::max(scale, 1e-30);
}

ConeFunction cone_add(const ConeFunction& a, const ConeFunction& b, c64 bcoef) {
    if (a.dim != b.dim) throw std::invalid_argument("cone_add: dimension mismatch");
    ConeFunction out;
    out.dim = a.dim;
    out.eval = [a, b, bcoef](const MomentumOnCone& p) { return a(p) + b(p) * bcoef; };
    return out;
}

ConeFunction cone_scale(const ConeFunction& a, c64 s) {
    ConeFunction out;
    out.dim = a.dim;
    out.eval = [a, s](const MomentumOnCone& p) { return a(p) * s; };
    return out;
}

}  // namespace mfn
