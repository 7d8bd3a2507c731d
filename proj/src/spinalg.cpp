#include "mfn/spinalg.hpp"

namespace mfn {

Mat2 pauli_embed(const FourVector& p) {
    return {c64(p.x0 + p.x3, 0.0), c64(p.x1, -p.x2),
            c64(p.x1, p.x2), c64(p.x0 - p.x3, 0.0)};
}

Mat2 pauli_dagger(const FourVector& p) {
    return {c64(0.5 * (p.x0 - p.x3), 0.0), c64(-0.5 * p.x1, 0.5 * p.x2),
            c64(-0.5 * p.x1, -0.5 * p.x2), c64(0.5 * (p.x0 + p.x3), 0.0)};
}

FourVector pauli_unembed(const Mat2& P) {
    FourVector x;
    x.x0 = 0.5 * std::real(P.a + P.d);
    x.x3 = 0.5 * std::real(P.a - P.d);
    x.x1 = 0.5 * std::real(P.c + P.b);
    x.x2 = 0.5 * (std::imag(P.c) - std::imag(P.b));
    return x;
}

bool on_cone(const FourVector& p, double rel_tol) {
    if (!(p.x0 > 0.0)) return false;
    return std::abs(p.x0 - p.spatial_norm()) <= rel_tol * p.x0;
}

void require_on_cone(const FourVector& p) {
    if (!on_cone(p)) throw std::domain_error("four-vector is not on the forward cone mantle");
}

bool on_singular_ray(const FourVector& p, double rel_tol) {
    const double s = (p.x0 + p.x3) * (p.x0 + p.x3) + p.x1 * p.x1 + p.x2 * p.x2;
    return s <= rel_tol * rel_tol * p.x0 * p.x0;
}

namespace {

c64 ipow(c64 z, int n) {
    c64 r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace

CMatrix sym_power(const Mat2& m, int n) {
    if (n < 0) throw std::invalid_argument("sym_power: negative degree");
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    CMatrix s(dim, dim);
    if (n == 0) {
        s(0, 0) = 1.0;
        return s;
    }
    // Column k: expand (a e1 + c e2)^{n-k} (b e1 + d e2)^k over the monomials
    // e1^{n-i} e2^i, then rescale to the orthonormal basis.
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i <= n; ++i) {
            c64 coeff = 0.0;
            const int smin = std::max(0, i - (n - k));
            const int smax = std::min(k, i);
            for (int t = smin; t <= smax; ++t) {
                coeff += binomial(n - k, i - t) * binomial(k, t) *
                         ipow(m.a, n - k - i + t) * ipow(m.c, i - t) *
                         ipow(m.b, k - t) * ipow(m.d, t);
            }
            s(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                coeff * std::sqrt(binomial(n, k) / binomial(n, i));
        }
    }
    return s;
}

SpinOperator rep_D(const SpinLabel& label, const Mat2& a) {
    SpinOperator op;
    op.label = label;
    if (label.j_doubled == 0) {
        op.matrix = sym_power(a.conj(), label.k_doubled);
    } else if (label.k_doubled == 0) {
        op.matrix = sym_power(a, label.j_doubled);
    } else {
        op.matrix = kron(sym_power(a, label.j_doubled), sym_power(a.conj(), label.k_doubled));
    }
    return op;
}

SpinOperator beta(const FourVector& p, int n, Sign sign) {
    require_on_cone(p);
    if (n < 0) throw std::invalid_argument("beta: negative degree");
    const Mat2 pd = pauli_dagger(p);
    SpinOperator op;
    if (sign == Sign::plus) {
        op.label = SpinLabel(0, n);
        op.matrix = sym_power(pd.conj(), n);
    } else {
        op.label = SpinLabel(n, 0);
        op.matrix = sym_power(pd, n);
    }
    return op;
}

std::pair<std::array<c64, 2>, std::array<c64, 2>> null_eigenpair(const FourVector& p) {
    require_on_cone(p);
    if (on_singular_ray(p)) throw std::domain_error("null_eigenpair: singular ray p3 = -p0");

    const std::array<c64, 2> vplus = {c64(-p.x1, p.x2), c64(p.x0 + p.x3, 0.0)};
    std::array<c64, 2> vzero = {c64(p.x1, -p.x2), c64(p.x0 - p.x3, 0.0)};

    const double zn = std::sqrt(std::norm(vzero[0]) + std::norm(vzero[1]));
    if (zn <= 1e-9 * p.x0) {
        // ray p1 = p2 = 0, p3 = +p0: take the unit vector orthogonal to vplus
        const double pn = std::sqrt(std::norm(vplus[0]) + std::norm(vplus[1]));
        vzero = {-std::conj(vplus[1] / pn), std::conj(vplus[0] / pn)};
    }
    return {vplus, vzero};
}

}  // namespace mfn
