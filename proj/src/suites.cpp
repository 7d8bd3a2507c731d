#include "mfn/suites.hpp"

#include "mfn/freenet.hpp"
#include "mfn/random.hpp"

#include <chrono>

namespace mfn {

namespace {

using clock_type = std::chrono::steady_clock;

class SuiteBuilder {
  public:
    SuiteBuilder(std::string suite, const SuiteConfig& cfg) : cfg_(cfg) {
        rep_.suite = std::move(suite);
        rep_.config = cfg;
        mark_ = clock_type::now();
    }

    void add(const std::string& id, const std::string& identity, std::size_t samples,
             double residual, double tol, int criterion = 0) {
        const auto now = clock_type::now();
        ReportRecord r;
        r.suite = rep_.suite;
        r.id = id;
        r.identity = identity;
        r.samples = samples;
        r.max_residual = residual;
        r.tolerance = tol * cfg_.tol_scale;
        r.pass = residual <= r.tolerance;
        r.criterion = criterion;
        r.wall_ms = std::chrono::duration<double, std::milli>(now - mark_).count();
        mark_ = now;
        rep_.records.push_back(std::move(r));
    }

    // witness records: pass when the measured quantity EXCEEDS the bound
    void add_witness(const std::string& id, const std::string& identity, std::size_t samples,
                     double measured, double lower_bound, int criterion = 0) {
        const double residual = measured >= lower_bound ? 0.0 : 1.0;
        add(id, identity, samples, residual, 0.5, criterion);
        rep_.records.back().max_residual = residual;
    }

    Report& report() { return rep_; }

    const SuiteConfig& cfg() const { return cfg_; }
    std::size_t count(std::size_t full) const {
        return cfg_.quick ? std::max<std::size_t>(4, full / 12) : full;
    }

  private:
    SuiteConfig cfg_;
    Report rep_;
    clock_type::time_point mark_;
};

double rel(double num, double den) { return num / std::max(den, 1e-300); }

double matrix_rel(const CMatrix& a, const CMatrix& b) {
    return rel((a - b).norm(), std::max(a.norm(), b.norm()));
}

double mat2_rel(const Mat2& a, const Mat2& b) {
    return rel((a - b).norm(), std::max(a.norm(), b.norm()));
}

// ---------------------------------------------------------------------------
// spin suite

Report run_spin(const SuiteConfig& cfg) {
    SuiteBuilder sb("spin", cfg);
    RandomSource rng(cfg.seed + 101);
    const std::size_t N = sb.count(500);

    double r_mult = 0.0, r_repd = 0.0, r_beta = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
        const int n = 1 + static_cast<int>(s % 4);
        const Mat2 a = rng.sl2(), b = rng.sl2();
        r_mult = std::max(r_mult, matrix_rel(sym_power(a * b, n), sym_power(a, n) * sym_power(b, n)));

        const SpinLabel lbl(static_cast<int>(s % 3), static_cast<int>((s / 3) % 3));
        r_repd = std::max(r_repd, matrix_rel(rep_D(lbl, a * b).matrix,
                                             rep_D(lbl, a).matrix * rep_D(lbl, b).matrix));

        const Mat2 am = rng.sl2_moderate(0.5);
        const FourVector p = rng.cone_point();
        const FourVector q = lorentz_act(am.inverse(), p);
        {
            const CMatrix d = sym_power(am.conj(), n);
            const CMatrix lhs = d.adjoint() * beta(p, n, Sign::plus).matrix * d;
            r_beta = std::max(r_beta, matrix_rel(lhs, beta(q, n, Sign::plus).matrix));
        }
        {
            const CMatrix d = sym_power(am, n);
            const CMatrix lhs = d.adjoint() * beta(p, n, Sign::minus).matrix * d;
            r_beta = std::max(r_beta, matrix_rel(lhs, beta(q, n, Sign::minus).matrix));
        }
    }
    sb.add("sym-mult", "Sym^n(M1 M2) = Sym^n(M1) Sym^n(M2), n <= 4", N, r_mult, 1e-10, 1);
    sb.add("repd-mult", "D^(j/2,k/2)(AB) = D(A) D(B)", N, r_repd, 1e-10, 1);
    sb.add("beta-covariance", "D(A)^* beta_pm(p) D(A) = beta_pm(Lambda_A^-1 p)", 2 * N, r_beta,
           1e-10, 1);

    const std::size_t M = sb.count(200);
    double r_star = 0.0, r_det = 0.0, r_eig = 0.0, r_rank = 0.0, r_null = 0.0;
    for (std::size_t s = 0; s < M; ++s) {
        const int n = 1 + static_cast<int>(s % 4);
        const Mat2 a = rng.sl2();
        r_star = std::max(r_star, matrix_rel(sym_power(a.dagger(), n), sym_power(a, n).adjoint()));
        const c64 lhs = sym_power(a, n).det();
        c64 rhs = 1.0;
        for (int i = 0; i < n * (n + 1) / 2; ++i) rhs *= a.det();
        r_det = std::max(r_det, std::abs(lhs - rhs) / std::abs(rhs));

        const FourVector p = rng.cone_point();
        const auto ev = hermitian_eigenvalues(beta(p, 2, Sign::minus).matrix);
        r_eig = std::max({r_eig, std::abs(ev[0]) / (p.x0 * p.x0), std::abs(ev[1]) / (p.x0 * p.x0),
                          std::abs(ev[2] - p.x0 * p.x0) / (p.x0 * p.x0)});
        const int nr = 1 + static_cast<int>(s % 4);
        const c64 tr = beta(p, nr, Sign::plus).matrix.trace();
        double p0n = 1.0;
        for (int i = 0; i < nr; ++i) p0n *= p.x0;
        r_rank = std::max(r_rank, std::abs(tr - c64(p0n)) / p0n);

        const auto [vp, v0] = null_eigenpair(p);
        const Mat2 pd = pauli_dagger(p);
        const auto iv = pd.apply(v0);
        const auto ev2 = pd.apply(vp);
        const double vpn = std::sqrt(std::norm(vp[0]) + std::norm(vp[1]));
        r_null = std::max(r_null, std::sqrt(std::norm(iv[0]) + std::norm(iv[1])) / (p.x0 * vpn));
        r_null = std::max(r_null, std::sqrt(std::norm(ev2[0] - p.x0 * vp[0]) +
                                            std::norm(ev2[1] - p.x0 * vp[1])) /
                                      (p.x0 * vpn));
        r_null = std::max(r_null,
                          std::abs(std::conj(vp[0]) * v0[0] + std::conj(vp[1]) * v0[1]) / (vpn * vpn));
    }
    sb.add("sym-adjoint", "Sym^n(M^*) = Sym^n(M)^*", M, r_star, 1e-12);
    sb.add("sym-det", "det Sym^n(M) = det(M)^(n(n+1)/2)", M, r_det, 1e-10);
    sb.add("beta-spectrum", "eigenvalues of beta(p,2,-) are {p0^2, 0, 0}", M, r_eig, 1e-10);
    sb.add("beta-trace", "tr beta(p,n,+-) = p0^n", M, r_rank, 1e-10);
    sb.add("pdag-eigenpair", "P^dag v+ = p0 v+, P^dag v0 = 0, v+ _|_ v0", M, r_null, 1e-12);

    // pinned examples
    {
        const Mat2 p1 = pauli_embed({1, 0, 0, 1});
        const double e1 = (p1 - Mat2::diag(2.0, 0.0)).norm();
        const Mat2 p2 = pauli_dagger({1, 0, 0, 1});
        const double e2 = (p2 - Mat2::diag(0.0, 1.0)).norm();
        const Mat2 p3 = pauli_embed({1, 1, 0, 0});
        const double e3 = (p3 - Mat2{1, 1, 1, 1}).norm();
        const CMatrix b1 = beta({1, 0, 0, 1}, 1, Sign::plus).matrix;
        CMatrix b1ref(2, 2);
        b1ref(1, 1) = 1.0;
        sb.add("pauli-pinned", "P(1,0,0,1) = diag(2,0); P^dag(1,0,0,1) = diag(0,1)", 4,
               std::max({e1, e2, e3, (b1 - b1ref).norm()}), 1e-15);
    }
    {
        const Mat2 d{c64(1.3, 0.2), 0.0, 0.0, c64(0.4, -0.7)};
        const CMatrix s2 = sym_power(d, 2);
        CMatrix ref(3, 3);
        ref(0, 0) = d.a * d.a;
        ref(1, 1) = d.a * d.d;
        ref(2, 2) = d.d * d.d;
        sb.add("sym-diag", "Sym^2(diag(a,d)) = diag(a^2, ad, d^2)", 1, (s2 - ref).norm(), 1e-13);
    }
    {
        const Mat2 a = RandomSource(cfg.seed + 7).sl2();
        const double r = matrix_rel(rep_D(SpinLabel(3, 0), a).matrix,
                                    rep_D(SpinLabel(0, 3), a).matrix.conj());
        sb.add("repd-conj", "D^(n/2,0)(A) = conj D^(0,n/2)(A)", 1, r, 1e-14);
    }
    {
        bool threw = false;
        try {
            beta({1.0, 0.0, 0.0, 0.5}, 1, Sign::plus);
        } catch (const std::domain_error&) {
            threw = true;
        }
        sb.add("beta-off-cone", "beta rejects p with |p0 - |p|| > tol p0", 1, threw ? 0.0 : 1.0,
               0.5);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// poincare suite

Report run_poincare(const SuiteConfig& cfg) {
    SuiteBuilder sb("poincare", cfg);
    RandomSource rng(cfg.seed + 202);

    {
        const MomentumOnCone phat(FourVector{1, 0, 0, 1});
        const Mat2 h = boost_section(phat);
        sb.add("hp-reference", "H_(1,0,0,1) = -1", 1, (h + Mat2::identity()).norm(), 1e-15, 2);
    }

    const std::size_t N = sb.count(500);
    double r_section = 0.0, r_det = 0.0, r_fact = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
        const MomentumOnCone p(rng.cone_point());
        const Mat2 h = boost_section(p);
        r_section = std::max(r_section, mat2_rel(h * Mat2::diag(2.0, 0.0) * h.dagger(), p.pauli));
        r_det = std::max(r_det, std::abs(h.det() - c64(1.0)));
        const Mat2 hinv = h.inverse();
        r_fact = std::max(r_fact,
                          mat2_rel(hinv.dagger() * Mat2::diag(0.0, 1.0) * hinv, p.pauli_dag));
    }
    sb.add("boost-section", "H_p diag(2,0) H_p^* = P", N, r_section, 1e-10, 2);
    sb.add("boost-section-det", "det H_p = 1", N, r_det, 1e-12, 2);
    sb.add("pdag-factorization", "P^dag = (H_p^-1)^* diag(0,1) H_p^-1", N, r_fact, 1e-10, 2);

    double r_e2 = 0.0, r_cocycle = 0.0, r_closed = 0.0;
    std::size_t used = 0;
    for (std::size_t s = 0; s < N; ++s) {
        const Mat2 a1 = rng.sl2_moderate(0.5), a2 = rng.sl2_moderate(0.5);
        const MomentumOnCone p(rng.cone_point());
        const FourVector q1 = lorentz_act(a1.inverse(), p.p);
        const FourVector q12 = lorentz_act((a1 * a2).inverse(), p.p);
        if (on_singular_ray(q1, 1e-3) || on_singular_ray(q12, 1e-3)) continue;
        ++used;
        const Mat2 l = little_group_factor(a1, p);
        r_e2 = std::max({r_e2, std::abs(l.c) / l.norm(), std::abs(std::abs(l.d) - 1.0),
                         std::abs(std::abs(l.a) - 1.0)});
        r_closed = std::max(r_closed, std::abs(wigner_phase(a1, p) - l.d));
        const c64 lhs = wigner_phase(a1 * a2, p);
        const c64 rhs = wigner_phase(a1, p) * wigner_phase(a2, MomentumOnCone(q1));
        r_cocycle = std::max(r_cocycle, std::abs(lhs - rhs));
    }
    sb.add("little-group", "H_p^-1 A H_q upper triangular with unit-modulus diagonal", used, r_e2,
           1e-9, 3);
    sb.add("phase-closed-form", "phase(A,p) = (H_p^-1 A H_q)_22", used, r_closed, 1e-10, 3);
    sb.add("phase-cocycle", "phase(A1 A2, p) = phase(A1,p) phase(A2, Lambda_A1^-1 p)", used,
           r_cocycle, 1e-9, 3);

    const std::size_t L = sb.count(1000);
    double r_norm = 0.0, r_fwd = 0.0;
    for (std::size_t s = 0; s < L; ++s) {
        const Mat2 a = rng.sl2();
        const FourVector x = rng.four_vector(1.5);
        const FourVector y = lorentz_act(a, x);
        r_norm = std::max(r_norm, std::abs(y.minkowski_sq() - x.minkowski_sq()) /
                                      std::max(1.0, std::abs(x.minkowski_sq())));
        const FourVector pc = rng.cone_point();
        const FourVector qc = lorentz_act(a, pc);
        r_fwd = std::max(r_fwd, qc.x0 > 0.0 ? 0.0 : 1.0);
        r_fwd = std::max(r_fwd, std::abs(qc.x0 - qc.spatial_norm()) / qc.x0);
    }
    sb.add("lorentz-norm", "Minkowski norm invariance of Lambda_A", L, r_norm, 1e-10);
    sb.add("lorentz-cone", "Lambda_A preserves the forward cone", L, r_fwd, 1e-9);

    // representation laws evaluated pointwise
    const std::size_t K = sb.count(100);
    double r_ucomp = 0.0, r_vinv = 0.0, r_tcomp = 0.0;
    const ConeFunction chi = scalar_cone_function(
        [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0) * (1.0 + 0.2 * p.p.x1)); });
    for (std::size_t s = 0; s < K; ++s) {
        const PoincareElement g1(rng.sl2_moderate(0.4), rng.four_vector(0.6));
        const PoincareElement g2(rng.sl2_moderate(0.4), rng.four_vector(0.6));
        const MomentumOnCone p(rng.cone_point());
        const int n = 1 + static_cast<int>(s % 2);
        {
            const ConeFunction u12 = wigner_act(g1 * g2, chi, n, Sign::plus);
            const ConeFunction u1u2 = wigner_act(g1, wigner_act(g2, chi, n, Sign::plus), n, Sign::plus);
            const c64 a = u12(p)[0], b = u1u2(p)[0];
            r_ucomp = std::max(r_ucomp, std::abs(a - b) / std::max(std::abs(a), 1e-30));
        }
        {
            // pointwise invariance of the beta pairing under V1
            ConeFunction phi, psi;
            phi.dim = static_cast<std::size_t>(n) + 1;
            psi.dim = phi.dim;
            phi.eval = [n](const MomentumOnCone& q) {
                CVector v(static_cast<std::size_t>(n) + 1);
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = std::exp(-q.p.x0) * c64(1.0 + 0.1 * static_cast<double>(i), 0.3 * q.p.x3);
                return v;
            };
            psi.eval = [n](const MomentumOnCone& q) {
                CVector v(static_cast<std::size_t>(n) + 1);
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = std::exp(-0.7 * q.p.x0) * c64(0.4 * q.p.x1, 1.0 - 0.05 * static_cast<double>(i));
                return v;
            };
            const ConeFunction v1phi = canonical_V_act(g1, phi, 1, n);
            const ConeFunction v1psi = canonical_V_act(g1, psi, 1, n);
            const MomentumOnCone q(lorentz_act(g1.a.inverse(), p.p));
            const CMatrix bp = beta(p.p, n, Sign::plus).matrix;
            const CMatrix bq = beta(q.p, n, Sign::plus).matrix;
            const c64 lhs = dot(v1phi(p), bp * v1psi(p));
            const c64 rhs = dot(phi(q), bq * psi(q));
            r_vinv = std::max(r_vinv, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-30));
        }
        {
            const int n2 = 1;
            GaussianPacket pk;
            pk.center = {0.1, -0.2, 0.3, 0.0};
            pk.width = 0.9;
            pk.momentum_shift = {0.4, 0.1, -0.2, 0.3};
            pk.polarization = CVector{1.0, c64(0.2, 0.5)};
            const TestFunction f = make_gaussian_packet(n2, pk);
            const TestFunction lhs = covariant_act(g1 * g2, f);
            const TestFunction rhs = covariant_act(g1, covariant_act(g2, f));
            const FourVector x = rng.four_vector(1.0);
            const CVector dl = lhs.evaluate(x), dr = rhs.evaluate(x);
            double dn = 0.0, dd = 0.0;
            for (std::size_t i = 0; i < dl.size(); ++i) {
                dn += std::norm(dl[i] - dr[i]);
                dd += std::norm(dl[i]);
            }
            if (dd > 1e-18) r_tcomp = std::max(r_tcomp, std::sqrt(dn / dd));
        }
    }
    sb.add("wigner-composition", "U(g1 g2) = U(g1) U(g2) pointwise", K, r_ucomp, 1e-10, 3);
    sb.add("v1-pairing-invariance",
           "<V1 phi, beta_+ V1 psi>(p) = <phi, beta_+ psi>(Lambda^-1 p)", K, r_vinv, 1e-10);
    sb.add("covariant-composition", "T(g1 g2) f = T(g1) T(g2) f at sampled x", K, r_tcomp, 1e-10);

    {
        // invariant measure: boost change of variables in quadrature
        const QuadratureGrid grid = QuadratureGrid::build(cfg.radial_order, cfg.angular_order,
                                                          cfg.radial_scale);
        const Mat2 a = Mat2::diag(std::exp(0.2), std::exp(-0.2));
        auto f = [](const MomentumOnCone& p) {
            return c64(std::exp(-p.p.x0) * (1.0 + 0.3 * p.p.x1 - 0.2 * p.p.x3));
        };
        const c64 direct = grid.integrate(f);
        const c64 moved = grid.integrate(
            [&](const MomentumOnCone& p) { return f(MomentumOnCone(lorentz_act(a.inverse(), p.p))); });
        sb.add("measure-invariance", "int phi(Lambda^-1 p) dmu0 = int phi dmu0", 1,
               std::abs(direct - moved) / std::abs(direct), 1e-6);
    }

    {
        bool threw = false;
        try {
            boost_section(MomentumOnCone(FourVector{1.0, 1e-12, 0.0, -1.0 + 1e-12}));
        } catch (const std::domain_error&) {
            threw = true;
        }
        sb.add("singular-ray", "boost_section rejects the ray p3 = -p0", 1, threw ? 0.0 : 1.0, 0.5);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// factor suite

ConeFunction fixed_vector_field(int n, int variant) {
    ConeFunction f;
    f.dim = static_cast<std::size_t>(n) + 1;
    f.eval = [n, variant](const MomentumOnCone& p) {
        CVector v(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double a = 1.0 + 0.15 * static_cast<double>(i) * (variant + 1);
            v[i] = std::exp(-0.8 * p.p.x0) *
                   c64(a + 0.2 * p.p.x3, 0.1 * variant * p.p.x1 - 0.05 * p.p.x2);
        }
        return v;
    };
    return f;
}

Report run_factor(const SuiteConfig& cfg) {
    SuiteBuilder sb("factor", cfg);
    RandomSource rng(cfg.seed + 303);
    const QuadratureGrid grid =
        QuadratureGrid::build(cfg.radial_order, cfg.angular_order, cfg.radial_scale);

    // reference integrals of the measure convention
    const c64 i1 = grid.integrate([](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
    const c64 i2 = grid.integrate([](const MomentumOnCone& p) { return c64(std::exp(-2.0 * p.p.x0)); });
    double odd = 0.0;
    const std::array<double FourVector::*, 3> comps = {&FourVector::x1, &FourVector::x2,
                                                       &FourVector::x3};
    for (auto c : comps) {
        const c64 m = grid.integrate(
            [c](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0) * (p.p.*c)); });
        odd = std::max(odd, std::abs(m) / (2.0 * kPi));
    }
    sb.add("measure-exp", "int e^-p0 dmu0 = 2 pi", 1, std::abs(i1 - c64(2.0 * kPi)) / (2.0 * kPi),
           1e-8, 4);
    sb.add("measure-exp2", "int e^-2p0 dmu0 = pi/2", 1, std::abs(i2 - c64(kPi / 2.0)) / (kPi / 2.0),
           1e-8, 4);
    sb.add("measure-odd", "int e^-p0 p_i dmu0 = 0", 3, odd, 1e-10, 4);

    {
        // strictly improving radial ladder for the pi/2 reference
        const std::vector<int> ladder = {4, 6, 8, 12, 16};
        double prev = 1e300, worst = 0.0;
        for (int ord : ladder) {
            const QuadratureGrid g = QuadratureGrid::build(ord, 8, 1.0);
            const c64 v = g.integrate(
                [](const MomentumOnCone& p) { return c64(std::exp(-2.0 * p.p.x0)); });
            const double err = std::abs(v - c64(kPi / 2.0)) / (kPi / 2.0);
            if (prev < 1e200) worst = std::max(worst, err / prev);
            prev = err;
        }
        sb.add("measure-ladder", "radial-order ladder errors strictly decreasing", ladder.size(),
               worst, 0.999, 4);
    }
    {
        const QuadratureGrid g2 =
            QuadratureGrid::build(2 * cfg.radial_order, cfg.angular_order, cfg.radial_scale);
        const c64 j1 = g2.integrate([](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); });
        sb.add("measure-doubling", "doubled radial order shifts references < 1e-9", 1,
               std::abs(j1 - i1) / std::abs(i1), 1e-9);
    }

    // beta-null fields pair to zero
    {
        ConeFunction nullf;
        nullf.dim = 2;
        nullf.eval = [](const MomentumOnCone& p) {
            const auto [vp, v0] = null_eigenpair(p.p);
            CVector v(2);
            v[0] = v0[0] * std::exp(-p.p.x0);
            v[1] = v0[1] * std::exp(-p.p.x0);
            return v;
        };
        const c64 zm = inner_beta(nullf, nullf, 1, Sign::minus, grid);
        const c64 zp = inner_beta(gamma0_cone(nullf), gamma0_cone(nullf), 1, Sign::plus, grid);
        const c64 scale = grid.integrate([](const MomentumOnCone& p) {
            return c64(std::exp(-2.0 * p.p.x0) * p.p.x0 * p.p.x0 * p.p.x0);
        });
        sb.add("null-field", "<phi0, phi0>_beta = 0 for the null eigenfield", 2,
               std::max(std::abs(zm), std::abs(zp)) / std::abs(scale), 1e-10);
    }
    {
        const ConeFunction a = fixed_vector_field(1, 0), b = fixed_vector_field(1, 1);
        const c64 ab = inner_beta(a, b, 1, Sign::plus, grid);
        const c64 ba = inner_beta(b, a, 1, Sign::plus, grid);
        sb.add("pairing-hermitian", "<phi,psi>_beta = conj <psi,phi>_beta", 1,
               std::abs(ab - std::conj(ba)) / std::abs(ab), 1e-13);
    }
    {
        const int n = 2;
        std::vector<ConeFunction> fs;
        for (int v = 0; v < 4; ++v) fs.push_back(fixed_vector_field(n, v));
        CMatrix g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    inner_beta(fs[static_cast<std::size_t>(i)], fs[static_cast<std::size_t>(j)], n,
                               Sign::plus, grid);
        const auto ev = hermitian_eigenvalues(g);
        sb.add("gram-psd", "Gram matrices of <.,.>_beta are PSD", 4,
               std::max(0.0, -ev.front()) / std::abs(std::real(g.trace())), 1e-8);
    }

    // pointwise splitting
    {
        const std::size_t M = sb.count(200);
        double r_rec = 0.0, r_null = 0.0, r_range = 0.0;
        const ConeFunction f = fixed_vector_field(2, 1);
        const ConeFunction fr = project_range(f, 2, Sign::plus);
        const ConeFunction f0 = project_null(f, 2, Sign::plus);
        for (std::size_t s = 0; s < M; ++s) {
            const MomentumOnCone p(rng.cone_point());
            const CVector v = f(p), a = fr(p), b = f0(p);
            double dn = 0.0, vn = 0.0, bn = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                dn += std::norm(v[i] - a[i] - b[i]);
                vn += std::norm(v[i]);
                bn += std::norm(b[i]);
            }
            r_rec = std::max(r_rec, std::sqrt(dn / std::max(vn, 1e-300)));
            const CMatrix bm = beta(p.p, 2, Sign::plus).matrix;
            const CVector bnull = bm * b;
            double bnn = 0.0;
            for (std::size_t i = 0; i < bnull.size(); ++i) bnn += std::norm(bnull[i]);
            r_null = std::max(r_null, std::sqrt(bnn) / (bm.norm() * std::sqrt(std::max(vn, 1e-300))));
            const CVector rr = project_null(fr, 2, Sign::plus)(p);
            double rrn = 0.0;
            for (std::size_t i = 0; i < rr.size(); ++i) rrn += std::norm(rr[i]);
            r_range = std::max(r_range, std::sqrt(rrn / std::max(vn, 1e-300)));
        }
        sb.add("split-reconstruction", "phi = range(phi) + null(phi) pointwise", M, r_rec, 1e-12);
        sb.add("split-null", "beta(p) null(phi)(p) = 0", M, r_null, 1e-12);
        sb.add("split-idempotent", "null(range(phi)) = 0", M, r_range, 1e-12);
        const c64 nb = inner_beta(f0, f0, 2, Sign::plus, grid);
        const c64 fb = inner_beta(f, f, 2, Sign::plus, grid);
        sb.add("null-seminorm", "<null(phi), null(phi)>_beta = 0", 1,
               std::abs(nb) / std::abs(fb), 1e-10);
    }

    // isometry and intertwining of Phi_+
    std::vector<ConeFunction> chis;
    chis.push_back(scalar_cone_function([](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); }));
    chis.push_back(scalar_cone_function(
        [](const MomentumOnCone& p) { return c64((0.5 + 0.4 * p.p.x3) * std::exp(-p.p.x0)); }));
    chis.push_back(scalar_cone_function([](const MomentumOnCone& p) {
        return std::exp(-0.8 * p.p.x0) * c64(1.0, 0.3 * p.p.x1);
    }));
    double r_iso = 0.0, r_int = 0.0, r_repind = 0.0, r_vnorm = 0.0;
    std::vector<PoincareElement> gs;
    gs.emplace_back(Mat2::diag(std::exp(0.3), std::exp(-0.3)), FourVector{0.2, 0.0, -0.3, 0.1});
    gs.emplace_back(Mat2{std::cosh(0.2), std::sinh(0.2), std::sinh(0.2), std::cosh(0.2)},
                    FourVector{0.0, 0.5, 0.0, 0.0});
    gs.emplace_back(Mat2{std::polar(1.0, -0.4), 0.0, 0.0, std::polar(1.0, 0.4)},
                    FourVector{-0.3, 0.2, 0.0, 0.4});
    for (int n = 1; n <= 3; ++n) {
        for (const auto& chi : chis) {
            const FactorVector fv = phi_plus(chi, n);
            const double bnorm = factor_norm(fv, grid);
            const double l2 = std::sqrt(std::max(
                0.0, std::real(grid.integrate([&](const MomentumOnCone& p) {
                    return std::norm(chi(p)[0]) * c64(1.0);
                }))));
            r_iso = std::max(r_iso, std::abs(bnorm - l2) / l2);

            for (const auto& g : gs) {
                const FactorVector lhs = phi_plus(wigner_act(g, chi, n, Sign::plus), n);
                FactorVector rhs;
                rhs.n = n;
                rhs.sign = Sign::plus;
                rhs.rep = canonical_V_act(g, fv.rep, 1, n);
                FactorVector diff;
                diff.n = n;
                diff.sign = Sign::plus;
                diff.rep = cone_add(lhs.rep, rhs.rep, c64(-1.0));
                r_int = std::max(r_int, factor_norm(diff, grid) / bnorm);
                r_vnorm = std::max(r_vnorm, std::abs(factor_norm(rhs, grid) - bnorm) / bnorm);
            }

            // representative independence: adding a null field keeps the norm
            FactorVector shifted = fv;
            shifted.rep = cone_add(fv.rep, project_null(fixed_vector_field(n, 2), n, Sign::plus),
                                   c64(0.7, -0.4));
            r_repind = std::max(r_repind, std::abs(factor_norm(shifted, grid) - bnorm) / bnorm);
        }
    }
    sb.add("phi-plus-isometry", "|Phi_+ chi|_beta = |chi|_L2", 9, r_iso, 1e-8, 6);
    sb.add("phi-plus-intertwining", "Phi_+ U_+(g) = V_1(g) Phi_+ modulo null", 27, r_int, 1e-8, 6);
    sb.add("factor-norm-representative", "factor norm ignores null shifts", 9, r_repind, 1e-9, 6);
    sb.add("factor-norm-invariance", "|V_1(g) phi|_beta = |phi|_beta", 27, r_vnorm, 1e-8, 6);

    {
        // the range subspace is not invariant: a boost pushes a range field
        // out of it, while null fields stay null
        const int n = 1;
        const FactorVector fv = phi_plus(chis[0], n);
        double witness = 0.0;
        for (double rap : {0.6, 1.0}) {
            const PoincareElement boost(Mat2::diag(std::exp(rap / 2.0), std::exp(-rap / 2.0)),
                                        FourVector{});
            const ConeFunction moved = canonical_V_act(boost, fv.rep, 1, n);
            const ConeFunction nullpart = project_null(moved, n, Sign::plus);
            const double num = std::real(grid.integrate([&](const MomentumOnCone& p) {
                const CVector v = nullpart(p);
                double s = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(v[i]);
                return c64(s);
            }));
            const double den = std::real(grid.integrate([&](const MomentumOnCone& p) {
                const CVector v = moved(p);
                double s = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(v[i]);
                return c64(s);
            }));
            witness = std::max(witness, std::sqrt(num / den));
        }
        sb.add_witness("range-not-invariant",
                       "V_1(boost) leaves the range subspace: null component > 1e-3", 2, witness,
                       1e-3, 6);

        const ConeFunction nullf = project_null(fixed_vector_field(n, 1), n, Sign::plus);
        const PoincareElement boost(Mat2::diag(std::exp(0.5), std::exp(-0.5)), FourVector{});
        const ConeFunction movednull = canonical_V_act(boost, nullf, 1, n);
        // pointwise: beta(p) (V_1 null)(p) = 0 relative to |beta||v|
        double worstnull = 0.0;
        for (std::size_t s = 0; s < 200; ++s) {
            const MomentumOnCone p(rng.cone_point());
            const CVector v = movednull(p);
            const CMatrix bm = beta(p.p, n, Sign::plus).matrix;
            const CVector bv = bm * v;
            double vn = 0.0, bn = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                vn += std::norm(v[i]);
                bn += std::norm(bv[i]);
            }
            if (vn > 1e-30)
                worstnull = std::max(worstnull, std::sqrt(bn) / (bm.norm() * std::sqrt(vn)));
        }
        sb.add("null-stays-null", "V_1(g) maps the null space into itself", 200, worstnull, 1e-9,
               6);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// conformal-cocycle suite

Report run_cocycle(const SuiteConfig& cfg) {
    SuiteBuilder sb("conformal-cocycle", cfg);
    RandomSource rng(cfg.seed + 404);
    const std::array<ExtensionMode, 3> modes = {ExtensionMode::conjugate, ExtensionMode::transpose,
                                                ExtensionMode::plain};

    {
        const double r0 = su22_residual(CMatrix::identity(4));
        CMatrix pert = CMatrix::identity(4);
        pert(0, 1) = 0.01;
        const bool detects = su22_residual(pert) > 1e-4;
        const double re = su22_residual(embed_poincare(rng.sl2(), rng.four_vector()).matrix());
        sb.add("su22-residual", "g zeta g^* = zeta, det g = 1 detector", 3,
               std::max(r0, detects ? re : 1.0), 1e-12);
    }

    const std::size_t N = sb.count(100);
    double r_closure = 0.0, r_hom = 0.0, r_stab = 0.0, r_assoc = 0.0, r_trans = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
        const ConformalElement g1 = rng.su22(), g2 = rng.su22();
        r_closure = std::max({r_closure, su22_residual((g1 * g2).matrix()),
                              su22_residual(g1.inverse().matrix()),
                              ((g1 * g1.inverse()).matrix() - CMatrix::identity(4)).norm()});
        {
            const Mat2 a1 = rng.sl2_moderate(0.5), a2 = rng.sl2_moderate(0.5);
            const FourVector t1 = rng.four_vector(0.7), t2 = rng.four_vector(0.7);
            const PoincareElement p1(a1, t1), p2(a2, t2);
            const PoincareElement p12 = p1 * p2;
            const CMatrix lhs = (embed_poincare(a1, t1) * embed_poincare(a2, t2)).matrix();
            const CMatrix rhs = embed_poincare(p12.a, p12.translation).matrix();
            r_hom = std::max(r_hom, matrix_rel(lhs, rhs));
        }
        {
            const ConformalElement k = rng.k0();
            const TubePoint i1;
            const TubePoint img = tube_act(k, i1);
            r_stab = std::max(r_stab, (img.z() - i1.z()).norm());
        }
        {
            const TubePoint z = rng.tube_point();
            try {
                const Mat2 lhs = tube_act(g1, tube_act(g2, z)).z();
                const Mat2 rhs = tube_act(g1 * g2, z).z();
                r_assoc = std::max(r_assoc, (lhs - rhs).norm() / rhs.norm());
            } catch (const std::domain_error&) {
            }
        }
        {
            const FourVector a = rng.four_vector(0.8);
            const TubePoint z = rng.tube_point();
            const Mat2 lhs = tube_act(embed_poincare(Mat2::identity(), a), z).z();
            const Mat2 rhs = z.z() + pauli_embed(a);
            r_trans = std::max(r_trans, (lhs - rhs).norm() / rhs.norm());
        }
    }
    sb.add("su22-closure", "products and inverses stay in SU(2,2)", 3 * N, r_closure, 1e-10);
    sb.add("poincare-homomorphism", "(A,a) -> SU(2,2) block embedding is multiplicative", N, r_hom,
           1e-10);
    sb.add("k0-stabilizer", "K in K0 fixes i 1 under the tube action", N, r_stab, 1e-10);
    sb.add("mobius-associativity", "g1 (g2 Z) = (g1 g2) Z", N, r_assoc, 1e-10);
    sb.add("tube-translation", "embed_poincare(1, a): Z -> Z + pauli(a)", N, r_trans, 1e-12);

    {
        const TubePoint z = rng.tube_point();
        double r = 0.0;
        for (int n : {0, 1, 2})
            for (ExtensionMode m : modes) {
                ConformalElement e = ConformalElement::from_matrix(CMatrix::identity(4));
                const CMatrix j = cocycle_J_at(e, z.z(), n, m);
                r = std::max(r, (j - CMatrix::identity(static_cast<std::size_t>(n) + 1)).norm());
            }
        sb.add("cocycle-identity", "J(1, Z) = 1", 9, r, 1e-14, 7);
    }

    const std::size_t M = sb.count(200);
    for (ExtensionMode m : modes) {
        double r = 0.0;
        std::size_t used = 0;
        RandomSource mrng(cfg.seed + 405);  // same samples per mode
        for (std::size_t s = 0; s < M; ++s) {
            const ConformalElement g1 = mrng.su22(), g2 = mrng.su22();
            const TubePoint z = mrng.tube_point();
            const int n = 1 + static_cast<int>(s % 2);
            try {
                r = std::max(r, cocycle_law_residual(g1, g2, z, n, m));
                ++used;
            } catch (const std::domain_error&) {
            }
        }
        sb.add(std::string("cocycle-law-") + extension_mode_name(m),
               "J(g1 g2, Z) = J(g1, g2 Z) J(g2, Z) (transpose mode composes reversed)", used, r,
               1e-9, 7);
    }

    const std::size_t K = sb.count(100);
    double r_tau = 0.0, r_j3 = 0.0;
    for (std::size_t s = 0; s < K; ++s) {
        const ConformalElement k = rng.k0();
        for (ExtensionMode m : modes) {
            const int n = 1 + static_cast<int>(s % 2);
            const CMatrix tau = tau_k0(k, n, m);
            const CMatrix unit =
                tau.adjoint() * tau - CMatrix::identity(static_cast<std::size_t>(n) + 1);
            r_tau = std::max(r_tau, unit.norm());
            const CMatrix j = cocycle_J_at(k, TubePoint().z(), n, m);
            r_j3 = std::max(r_j3, (j - tau).norm() / tau.norm());
        }
    }
    sb.add("tau-unitarity", "tau(K)^* tau(K) = 1 on K0", 3 * K, r_tau, 1e-10, 7);
    sb.add("cocycle-at-base", "J(K, i 1) = tau(K)", 3 * K, r_j3, 1e-13, 7);
    return sb.report();
}

// ---------------------------------------------------------------------------
// kernel suite

Report run_kernel(const SuiteConfig& cfg) {
    SuiteBuilder sb("kernel", cfg);
    const QuadratureGrid grid =
        QuadratureGrid::build(cfg.radial_order, cfg.angular_order, cfg.radial_scale);
    std::vector<int> degrees = {0, 1, 2};
    for (int n = 3; n <= cfg.n_max; ++n) degrees.push_back(n);

    const CalibrationRecord cal = calibrate_extension(grid, degrees, cfg.seed);
    auto& summary = sb.report().calibration;
    summary.valid = true;
    summary.measure_convention = cal.measure_convention;
    summary.degrees = cal.degrees;
    summary.c_moment = cal.c_moment;
    summary.c_kernel = cal.c_kernel;
    summary.kernel_mode = extension_mode_name(cal.kernel_mode);
    summary.covariance_sides =
        cal.covariance_sides == CovarianceSides::swapped ? "swapped" : "as_displayed";
    summary.covariance_mode = extension_mode_name(cal.covariance_mode);
    summary.grid_descriptor = cal.grid_descriptor;

    {
        double r = 0.0;
        for (std::size_t i = 0; i < cal.degrees.size(); ++i)
            r = std::max(r, cal.moment_residual[i]);
        sb.add("moment-identity",
               "int e^-Tr(Pdag Y) beta_+ dmu = C_n det(Y)^-1 Sym^n(conj Y)^-1", 10 * degrees.size(),
               r, 1e-6, 5);
        sb.add("moment-c0", "C_0 = 2 pi", 1, std::abs(cal.c_moment[0] - 2.0 * kPi) / (2.0 * kPi), 1e-6,
               5);
        sb.add("moment-c1", "C_1 = 2 pi", 1, std::abs(cal.c_moment[1] - 2.0 * kPi) / (2.0 * kPi), 1e-6,
               5);
        sb.add("moment-c2", "C_2 = 4 pi (angular-average oracle)", 1,
               std::abs(cal.c_moment[2] - 4.0 * kPi) / (4.0 * kPi), 1e-5);
        double rc = 0.0;
        for (std::size_t i = 0; i < cal.degrees.size(); ++i) {
            const double expected = cal.c_moment[i] / std::pow(2.0, cal.degrees[i] + 2.0);
            rc = std::max(rc, std::abs(cal.c_kernel[i] - expected) / expected);
        }
        sb.add("kernel-constant-scaling", "kernel constant = C_n / 2^(n+2)", cal.degrees.size(), rc,
               1e-6);
    }
    {
        double r = 0.0;
        for (std::size_t i = 0; i < cal.degrees.size(); ++i)
            r = std::max(r, cal.kernel_residual[i]);
        sb.add("kernel-closed-form",
               "quadrature kernel matches the closed form in one extension mode", 20 * degrees.size(),
               r, 1e-6, 8);
        sb.add("kernel-mode-unique", "exactly one extension mode matches (n >= 1)", degrees.size(),
               cal.mode_unique ? 0.0 : 1.0, 0.5, 8);
    }

    RandomSource rng(cfg.seed + 506);
    const QuadratureGrid pair_grid =
        QuadratureGrid::build(cfg.radial_order, cfg.angular_order, 0.5);
    auto tame_pair = [&rng]() {
        for (;;) {
            const TubePoint z1 = rng.tube_point(0.35, 1.0, 0.15);
            const TubePoint z2 = rng.tube_point(0.35, 1.0, 0.15);
            if (tube_point_tame(z1) && tube_point_tame(z2)) return std::make_pair(z1, z2);
        }
    };
    {
        // Hermitian symmetry and diagonal positivity
        const std::size_t M = sb.count(20);
        double r_sym = 0.0, r_psd = 0.0;
        for (std::size_t s = 0; s < M; ++s) {
            const int n = 1 + static_cast<int>(s % 2);
            const auto [z1, z2] = tame_pair();
            const CMatrix k12 = kernel_quadrature(z1, z2, n, Sign::plus, pair_grid).matrix;
            const CMatrix k21 = kernel_quadrature(z2, z1, n, Sign::plus, pair_grid).matrix;
            r_sym = std::max(r_sym, matrix_rel(k12.adjoint(), k21));
            const CMatrix kd = kernel_quadrature(z1, z1, n, Sign::plus, pair_grid).matrix;
            const auto ev = hermitian_eigenvalues(kd);
            r_psd = std::max(r_psd, std::max(0.0, -ev.front()) / std::real(kd.trace()));
        }
        sb.add("kernel-hermitian", "K(Z1,Z2)^* = K(Z2,Z1)", M, r_sym, 1e-8, 8);
        sb.add("kernel-diagonal-psd", "K(Z,Z) is PSD", M, r_psd, 1e-8, 8);
    }
    {
        // pinned diagonal references at Z = i 1
        const TubePoint i1;
        const CMatrix k0 = kernel_quadrature(i1, i1, 0, Sign::plus, pair_grid).matrix;
        sb.add("kernel-ref-n0", "K_0(i,i) = pi/2", 1,
               std::abs(k0(0, 0) - c64(kPi / 2.0)) / (kPi / 2.0), 1e-7, 8);
        const CMatrix k1 = kernel_quadrature(i1, i1, 1, Sign::plus, pair_grid).matrix;
        const CMatrix ref = CMatrix::identity(2) * (kPi / 4.0);
        sb.add("kernel-ref-n1", "K_1(i,i) = (pi/4) 1", 1, matrix_rel(k1, ref), 1e-6, 8);
    }
    {
        // covariance with the calibrated side/mode assignment
        const std::size_t M = sb.count(100);
        double worst = 0.0;
        bool stable = true;
        for (int n : {1, 2}) {
            RandomSource crng(cfg.seed + 507);
            std::size_t done = 0;
            while (done < M) {
                const ConformalElement g = crng.su22(0.08);
                const TubePoint z1 = crng.tube_point(0.35, 1.0, 0.15);
                const TubePoint z2 = crng.tube_point(0.35, 1.0, 0.15);
                TubePoint w1p = z1, w2p = z2;
                try {
                    w1p = tube_act(g, z1);
                    w2p = tube_act(g, z2);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!tube_point_tame(z1) || !tube_point_tame(z2) || !tube_point_tame(w1p) ||
                    !tube_point_tame(w2p))
                    continue;
                {
                    const auto dx = herm2_eigenvalues(w1p.x - w2p.x);
                    if (std::max(std::abs(dx[0]), std::abs(dx[1])) > 2.0) continue;
                    if (herm2_eigenvalues(w1p.y + w2p.y)[0] < 0.9) continue;
                }
                ++done;
                const QuadratureGrid glhs =
                    adapted_kernel_grid(w1p, w2p, cfg.radial_order, cfg.angular_order);
                const CMatrix lhs = kernel_quadrature(w1p, w2p, n, Sign::plus, glhs).matrix;
                const CMatrix k = kernel_quadrature(z1, z2, n, Sign::plus, pair_grid).matrix;
                const CMatrix j1 = cocycle_J_at(g, z1.z(), n, cal.covariance_mode);
                const CMatrix j2 = cocycle_J_at(g, z2.z(), n, cal.covariance_mode);
                const CMatrix cali = cal.covariance_sides == CovarianceSides::swapped
                                         ? j2.adjoint() * k * j1
                                         : j1 * k * j2.adjoint();
                const CMatrix other = cal.covariance_sides == CovarianceSides::swapped
                                          ? j1 * k * j2.adjoint()
                                          : j2.adjoint() * k * j1;
                const double rc = matrix_rel(lhs, cali);
                worst = std::max(worst, rc);
                if (matrix_rel(lhs, other) < rc) stable = false;
            }
        }
        sb.add("kernel-covariance",
               "K(gZ1, gZ2) = J(g,Z2)^* K(Z1,Z2) J(g,Z1) in the calibrated assignment", 2 * M,
               worst, 1e-6, 8);
        sb.add("kernel-covariance-stable", "the calibrated side assignment wins on every sample",
               2 * M, stable ? 0.0 : 1.0, 0.5, 8);
    }
    {
        // opposite helicity mirror
        const std::size_t M = sb.count(10);
        double r_mirror = 0.0, r_closed = 0.0;
        for (std::size_t s = 0; s < M; ++s) {
            const int n = 1 + static_cast<int>(s % 2);
            const auto [z1, z2] = tame_pair();
            const CMatrix km = kernel_quadrature(z1, z2, n, Sign::minus, pair_grid).matrix;
            const CMatrix kp = kernel_quadrature(z1, z2, n, Sign::plus, pair_grid).matrix;
            r_mirror = std::max(r_mirror, matrix_rel(km, kp.transpose()));
            const CMatrix kc =
                kernel_closed(z1, z2, n, cal.kernel_mode, cal.c_kernel[static_cast<std::size_t>(n)],
                              Sign::minus)
                    .matrix;
            r_closed = std::max(r_closed, matrix_rel(km, kc));
        }
        sb.add("kernel-mirror", "K_-(Z1,Z2) = K_+(Z1,Z2)^t", M, r_mirror, 1e-13);
        sb.add("kernel-mirror-closed", "closed form of the mirrored kernel", M, r_closed, 1e-6);
    }
    {
        // resolution monitor: the default orders agree with finer ones
        const QuadratureGrid fine = QuadratureGrid::build(
            cfg.radial_order + cfg.radial_order / 2, cfg.angular_order + 8, 0.5);
        const auto [z1, z2] = tame_pair();
        const CMatrix a = kernel_quadrature(z1, z2, 2, Sign::plus, pair_grid).matrix;
        const CMatrix b = kernel_quadrature(z1, z2, 2, Sign::plus, fine).matrix;
        sb.add("kernel-resolution", "kernel stable under grid refinement", 1, matrix_rel(a, b),
               1e-7);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// extension suite

Report run_extension(const SuiteConfig& cfg) {
    SuiteBuilder sb("extension", cfg);
    RandomSource rng(cfg.seed + 608);
    const QuadratureGrid grid = QuadratureGrid::build(cfg.radial_order, cfg.angular_order, 0.5);
    const int n = 1;

    std::vector<KernelPoint> pts;
    const std::size_t npts = cfg.quick ? 4 : 8;
    while (pts.size() < npts) {
        KernelPoint kp;
        kp.z = rng.tube_point(0.35, 1.0, 0.15);
        if (!tube_point_tame(kp.z)) continue;
        kp.v = CVector(static_cast<std::size_t>(n) + 1);
        for (std::size_t k = 0; k < kp.v.size(); ++k) kp.v[k] = rng.complex_gaussian();
        pts.push_back(std::move(kp));
    }
    const CMatrix g0 = gram(pts, n, grid);

    {
        const std::size_t ng = cfg.quick ? 4 : 20;
        double worst = 0.0;
        std::size_t used = 0;
        while (used < ng) {
            const ConformalElement g = rng.su22(0.06);
            std::vector<KernelPoint> moved;
            bool tame = true;
            try {
                for (const auto& kp : pts) {
                    moved.push_back(w1_act(g, kp, n));
                    tame = tame && tube_point_tame(moved.back().z, 1.8, 0.45, 2.2);
                }
            } catch (const std::domain_error&) {
                continue;
            }
            if (!tame) continue;
            ++used;
            const QuadratureGrid gmoved =
                adapted_points_grid(moved, cfg.radial_order, cfg.angular_order);
            const CMatrix g1 = gram(moved, n, gmoved);
            worst = std::max(worst, matrix_rel(g1, g0));
        }
        sb.add("gram-invariance", "gram(W1'(g) pts) = gram(pts) including special conformal g",
               used * pts.size() * pts.size(), worst, 1e-5, 9);
    }
    {
        // Poincare restriction matches the fibrewise action pointwise
        const std::size_t M = sb.count(50);
        double worst = 0.0;
        for (std::size_t s = 0; s < M; ++s) {
            const Mat2 a = rng.sl2_moderate(0.5);
            const FourVector t = rng.four_vector(0.6);
            const ConformalElement gp = embed_poincare(a, t);
            const KernelPoint kp = pts[s % pts.size()];
            const KernelPoint moved = w1_act(gp, kp, n);
            const MomentumOnCone p(rng.cone_point());
            // moved kernel function value at p
            const c64 ph = std::exp(c64(0.0, -1.0) * trace_prod(p.pauli_dag, moved.z.z_star()));
            CVector lhs = moved.v * ph;
            // V1 action on the kernel function
            const MomentumOnCone q(lorentz_act(a.inverse(), p.p));
            const c64 ph2 = std::exp(c64(0.0, -1.0) * trace_prod(q.pauli_dag, kp.z.z_star()));
            CVector rhs = sym_power(a.conj(), n) * kp.v;
            rhs *= ph2 * std::polar(1.0, -minkowski_dot(p.p, t));
            double dn = 0.0, dd = 0.0;
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                dn += std::norm(lhs[i] - rhs[i]);
                dd += std::norm(rhs[i]);
            }
            worst = std::max(worst, std::sqrt(dn / std::max(dd, 1e-300)));
        }
        sb.add("poincare-restriction", "W1'(g0) K_{Z,v} = e^-ipa D(A) K_{Z,v}(Lambda^-1 p)", M,
               worst, 1e-8, 9);
    }
    {
        const std::size_t M = sb.count(50);
        double worst = 0.0;
        std::size_t used = 0;
        for (std::size_t s = 0; s < M; ++s) {
            const ConformalElement g1 = rng.su22(), g2 = rng.su22();
            const KernelPoint kp = pts[s % pts.size()];
            try {
                const KernelPoint lhs = w1_act(g1, w1_act(g2, kp, n), n);
                const KernelPoint rhs = w1_act(g1 * g2, kp, n);
                double dn = (lhs.z.z() - rhs.z.z()).norm() / rhs.z.z().norm();
                double vn = 0.0, vd = 0.0;
                for (std::size_t i = 0; i < lhs.v.size(); ++i) {
                    vn += std::norm(lhs.v[i] - rhs.v[i]);
                    vd += std::norm(rhs.v[i]);
                }
                worst = std::max({worst, dn, std::sqrt(vn / std::max(vd, 1e-300))});
                ++used;
            } catch (const std::domain_error&) {
            }
        }
        sb.add("w1-composition", "W1'(g1) W1'(g2) = W1'(g1 g2)", used, worst, 1e-9, 9);
    }
    {
        // gram of the canonical frame at i 1 reproduces the kernel matrix
        std::vector<KernelPoint> frame;
        for (int k = 0; k <= n; ++k) {
            KernelPoint kp;
            kp.z = TubePoint();
            kp.v = CVector(static_cast<std::size_t>(n) + 1);
            kp.v[static_cast<std::size_t>(k)] = 1.0;
            frame.push_back(std::move(kp));
        }
        const CMatrix gf = gram(frame, n, grid);
        const CMatrix kd = kernel_quadrature(TubePoint(), TubePoint(), n, Sign::plus, grid).matrix;
        sb.add("gram-frame", "gram({(i 1, e_k)}) = K(i 1, i 1)", 1, matrix_rel(gf, kd), 1e-12);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// embedding suite

Report run_embedding(const SuiteConfig& cfg) {
    SuiteBuilder sb("embedding", cfg);
    const int n = 1;

    // wide packet: the y-limit rate is set by the first p0 moment
    GaussianPacket wide;
    wide.width = 16.0;
    wide.polarization = CVector{1.0, c64(0.4, 0.2)};
    const TestFunction f = make_gaussian_packet(n, wide);
    const QuadratureGrid grid = QuadratureGrid::build(40, 12, 0.02);

    const TransformPair tp = make_transform(f);
    FactorVector fhat;
    fhat.n = n;
    fhat.sign = Sign::plus;
    fhat.rep = tp.at_p;
    const double base = factor_norm(fhat, grid);

    {
        double prev = 1e300, worst = 0.0, final_ratio = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double t = std::pow(2.0, -k);
            const FactorVector iy = embed_y(f, FourVector{t, 0, 0, 0}, n);
            FactorVector diff;
            diff.n = n;
            diff.sign = Sign::plus;
            diff.rep = cone_add(iy.rep, fhat.rep, c64(-1.0));
            const double ratio = factor_norm(diff, grid) / base;
            if (prev < 1e200) worst = std::max(worst, ratio / prev);
            prev = ratio;
            final_ratio = ratio;
        }
        sb.add("y-limit-monotone", "|I_y f - [fhat]| decreases along y = 2^-k e0", 10, worst,
               0.999, 10);
        sb.add("y-limit-final", "|I_y f - [fhat]| / |[fhat]| < 1e-4 at k = 10", 1, final_ratio,
               1e-4, 10);
    }
    {
        const FactorVector iy = embed_y(f, FourVector{0.5, 0.1, 0.0, -0.1}, n);
        const double nn = factor_norm(iy, grid);
        sb.add("embed-finite", "I_y f has finite positive beta norm", 1,
               (std::isfinite(nn) && nn > 0.0) ? 0.0 : 1.0, 0.5);
        bool threw = false;
        try {
            embed_y(f, FourVector{0.1, 0.5, 0.0, 0.0}, n);
        } catch (const std::domain_error&) {
            threw = true;
        }
        sb.add("embed-domain", "embed_y rejects y outside the forward cone", 1, threw ? 0.0 : 1.0,
               0.5);
    }
    {
        // two evaluations of the same packet transform
        GaussianPacket pk;
        pk.center = {0.2, -0.1, 0.3, 0.0};
        pk.width = 1.0;
        pk.momentum_shift = {0.3, 0.2, -0.1, 0.1};
        pk.polarization = CVector{1.0, c64(0.1, -0.6)};
        const TestFunction fg = make_gaussian_packet(n, pk);
        const TransformPair closed = make_transform(fg);
        const TransformPair lattice = make_gaussian_lattice_transform(fg, 32, 128);
        const QuadratureGrid g2 = QuadratureGrid::build(24, 16, 0.8);
        double worst = 0.0, peak = 0.0;
        std::vector<double> diffs;
        for (const auto& node : g2.nodes()) {
            if (node.p.p.x0 > 3.5) continue;
            const CVector a = closed.at_p(node.p), b = lattice.at_p(node.p);
            double dn = 0.0, dd = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                dn += std::norm(a[i] - b[i]);
                dd += std::norm(a[i]);
            }
            diffs.push_back(std::sqrt(dn));
            peak = std::max(peak, std::sqrt(dd));
        }
        for (double d : diffs) worst = std::max(worst, d / peak);
        sb.add("gaussian-lattice-agreement", "closed-form vs sampled-lattice packet transform",
               g2.size(), worst, 1e-5);
    }
    {
        // sampled bump transform against the exact window product
        LatticeBump b;
        b.center = {0.1, 0.2, -0.1, 0.0};
        b.half_widths = {1.0, 1.2, 0.9, 1.1};
        b.polarization = CVector{1.0, c64(0.3, 0.2)};
        const TestFunction fb = make_lattice_bump(n, b);
        const QuadratureGrid g2 = QuadratureGrid::build(16, 12, 0.7);
        const TransformPair table = make_transform(fb);
        double worst = 0.0;
        const CVector at0 = bump_transform_closed(fb, FourVector{});
        const double scale = std::sqrt(std::norm(at0[0]) + std::norm(at0[1]));
        for (const auto& node : g2.nodes()) {
            if (node.p.p.x0 > 5.0) continue;
            const CVector a = bump_transform_closed(fb, node.p.p);
            const CVector bb = table.at_p(node.p);
            double dn = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) dn += std::norm(a[i] - bb[i]);
            worst = std::max(worst, std::sqrt(dn) / scale);
        }
        sb.add("bump-table-oracle", "sampled bump transform vs exact Hann product", g2.size(),
               worst, 1e-3);
        bool zero_ok = true;
        LatticeBump z = b;
        z.polarization = CVector{0.0, 0.0};
        const TestFunction fz = make_lattice_bump(n, z);
        const CVector vz = fourier_value(fz, FourVector{0.3, 0.1, 0.0, -0.2});
        for (std::size_t i = 0; i < vz.size(); ++i) zero_ok = zero_ok && std::abs(vz[i]) == 0.0;
        sb.add("zero-function", "f = 0 embeds to the zero vector", 1, zero_ok ? 0.0 : 1.0, 0.5);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// net-axioms suite

struct CatalogElement {
    enum class Kind { poincare, dilation, special_conformal } kind;
    PoincareElement poin;
    double lambda = 1.0;
    Mat2 sc;
    std::string name;
};

std::vector<CatalogElement> group_catalog() {
    std::vector<CatalogElement> cat;
    auto poin = [&](const Mat2& a, const FourVector& t, const std::string& name) {
        CatalogElement e;
        e.kind = CatalogElement::Kind::poincare;
        e.poin = PoincareElement(a, t);
        e.name = name;
        cat.push_back(e);
    };
    poin(Mat2::identity(), {0.7, 0, 0, 0}, "translation-t");
    poin(Mat2::identity(), {0, 0.6, 0, 0}, "translation-x");
    poin(Mat2::identity(), {0, 0, 0.5, 0}, "translation-y");
    poin(Mat2::identity(), {0.2, 0, 0, 0.5}, "translation-tz");
    poin(Mat2::diag(std::exp(0.25), std::exp(-0.25)), {}, "boost-z");
    poin(Mat2{std::cosh(0.15), std::sinh(0.15), std::sinh(0.15), std::cosh(0.15)}, {}, "boost-x");
    poin(Mat2::diag(std::polar(1.0, -0.35), std::polar(1.0, 0.35)), {}, "rotation-z");
    poin(Mat2{std::cos(0.3), c64(0.0, -std::sin(0.3)), c64(0.0, -std::sin(0.3)), std::cos(0.3)},
         {}, "rotation-x");
    {
        CatalogElement e;
        e.kind = CatalogElement::Kind::dilation;
        e.lambda = std::sqrt(1.5);
        e.name = "dilation-up";
        cat.push_back(e);
        e.lambda = std::sqrt(0.7);
        e.name = "dilation-down";
        cat.push_back(e);
    }
    {
        CatalogElement e;
        e.kind = CatalogElement::Kind::special_conformal;
        e.sc = Mat2::diag(0.05, -0.025);
        e.name = "special-conformal-z";
        cat.push_back(e);
        e.sc = Mat2{0.015, 0.025, 0.025, -0.01};
        e.name = "special-conformal-x";
        cat.push_back(e);
    }
    return cat;
}

std::vector<TestFunction> packet_catalog(int n) {
    std::vector<TestFunction> fs;
    const std::array<double, 3> widths = {0.7, 0.8, 0.9};
    const std::array<FourVector, 3> centers = {FourVector{0.1, -0.1, 0.2, 0.0},
                                               FourVector{0.0, 0.2, 0.0, -0.15},
                                               FourVector{-0.1, 0.0, 0.1, 0.1}};
    const std::array<FourVector, 3> shifts = {FourVector{0.3, 0.1, 0.0, -0.2},
                                              FourVector{0.0, -0.3, 0.2, 0.0},
                                              FourVector{0.2, 0.0, -0.1, 0.3}};
    for (int k = 0; k < 3; ++k) {
        GaussianPacket p;
        p.width = widths[static_cast<std::size_t>(k)];
        p.center = centers[static_cast<std::size_t>(k)];
        p.momentum_shift = shifts[static_cast<std::size_t>(k)];
        p.cutoff_widths = 6.0;
        p.polarization = CVector(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            p.polarization[static_cast<std::size_t>(i)] =
                c64(1.0 - 0.2 * i, 0.3 * ((i + k) % 2 ? 1.0 : -0.5));
        fs.push_back(make_gaussian_packet(n, p));
    }
    return fs;
}

Report run_net(const SuiteConfig& cfg) {
    SuiteBuilder sb("net-axioms", cfg);
    RandomSource rng(cfg.seed + 809);

    const auto catalog = group_catalog();
    const std::vector<int> degrees = cfg.quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2};

    // grids: a mid-resolution one for closed-form cases, a reduced-radius one
    // for the brute-force conformal routes
    const QuadratureGrid grid_mid = QuadratureGrid::build_finite(14, 14, 3.5);
    const QuadratureGrid grid_sc = QuadratureGrid::build_finite(5, 6, 2.2);

    double r_poin = 0.0, r_dil = 0.0, r_sc = 0.0;
    std::size_t n_poin = 0, n_dil = 0, n_sc = 0;
    for (int n : degrees) {
        const auto packets = packet_catalog(n);
        const std::size_t npk = cfg.quick ? 1 : packets.size();
        for (std::size_t pi = 0; pi < npk; ++pi) {
            const TestFunction& f = packets[pi];
            for (const auto& el : catalog) {
                switch (el.kind) {
                    case CatalogElement::Kind::poincare:
                        r_poin = std::max(r_poin, intertwiner_check(el.poin, f, n, grid_mid));
                        ++n_poin;
                        break;
                    case CatalogElement::Kind::dilation:
                        r_dil = std::max(r_dil,
                                         intertwiner_check_dilation(el.lambda, f, n, grid_mid));
                        ++n_dil;
                        break;
                    case CatalogElement::Kind::special_conformal:
                        r_sc = std::max(r_sc, intertwiner_check_special_conformal(
                                                  el.sc, f, n, grid_sc, cfg.sc_axis_order));
                        ++n_sc;
                        break;
                }
            }
        }
    }
    sb.add("intertwiner-poincare", "I_n T(g) = V_n(g) I_n over the Poincare catalog", n_poin,
           r_poin, 1e-6, 11);
    sb.add("intertwiner-dilation", "I_n T_0(d) = W_n(d) I_n for dilations", n_dil, r_dil, 1e-6, 11);
    sb.add("intertwiner-special-conformal",
           "transform of T_0(g) f = transported-phase integral (two quadrature routes)", n_sc,
           r_sc, 1e-6, 11);

    {
        // support containment supp(T0(g) f) in g supp(f)
        double worst = 0.0;
        std::size_t cases = 0;
        for (int n : degrees) {
        const auto packets = packet_catalog(n);
        for (const auto& el : catalog) {
            ConformalElement g = ConformalElement::from_matrix(CMatrix::identity(4));
            switch (el.kind) {
                case CatalogElement::Kind::poincare:
                    g = embed_poincare(el.poin.a, el.poin.translation);
                    break;
                case CatalogElement::Kind::dilation:
                    g = dilation_element(el.lambda);
                    break;
                case CatalogElement::Kind::special_conformal:
                    g = special_conformal_element(el.sc);
                    break;
            }
            const ConformalElement ginv = g.inverse();
            for (const auto& f : packets) {
                const TestFunction tf = t0_act(g, f, n);
                const BoundingBox inner = f.support_box();
                const BoundingBox outer = tf.support_box();
                double peak = 0.0;
                {
                    const auto& pk = std::get<GaussianPacket>(f.body);
                    const FourVector ic = mobius_point(g.block(1), g.block(2), g.block(3),
                                                       g.block(4), pk.center);
                    const CVector v = tf.evaluate(ic);
                    for (std::size_t i = 0; i < v.size(); ++i)
                        peak = std::max(peak, std::abs(v[i]));
                }
                std::size_t outside = 0;
                double leak = 0.0;
                while (outside < (cfg.quick ? 100u : 1000u)) {
                    const FourVector x(rng.uniform(outer.lo[0] - 0.5, outer.hi[0] + 0.5),
                                       rng.uniform(outer.lo[1] - 0.5, outer.hi[1] + 0.5),
                                       rng.uniform(outer.lo[2] - 0.5, outer.hi[2] + 0.5),
                                       rng.uniform(outer.lo[3] - 0.5, outer.hi[3] + 0.5));
                    FourVector back;
                    try {
                        back = mobius_point(ginv.block(1), ginv.block(2), ginv.block(3),
                                            ginv.block(4), x);
                    } catch (const std::domain_error&) {
                        continue;
                    }
                    if (inner.contains(back, 1e-9)) continue;
                    ++outside;
                    const CVector v = tf.evaluate(x);
                    for (std::size_t i = 0; i < v.size(); ++i) leak = std::max(leak, std::abs(v[i]));
                }
                worst = std::max(worst, leak / std::max(peak, 1e-300));
                ++cases;
            }
        }
        }
        sb.add("support-containment", "supp(T_0(g) f) inside g supp(f), sampled", cases * 1000,
               worst, 1e-8, 11);
    }

    // causality: matched spacelike/timelike bump pairs
    {
        const QuadratureGrid cgrid = cfg.quick ? QuadratureGrid::build_finite(20, 16, 8.0)
                                               : QuadratureGrid::build_finite(40, 28, 9.0);
        double worst_space = 0.0, worst_ratio = 0.0;
        for (int n : (cfg.quick ? std::vector<int>{0} : std::vector<int>{0, 1, 2})) {
            LatticeBump bf;
            bf.center = {0, 0, 0, 0};
            bf.polarization = CVector(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                bf.polarization[static_cast<std::size_t>(i)] = c64(1.0, 0.2 * i);
            LatticeBump bs = bf;
            bs.center = {0, 5, 0, 0};
            bs.polarization = bf.polarization;
            for (int i = 0; i <= n; ++i)
                bs.polarization[static_cast<std::size_t>(i)] += c64(0.1 * i, -0.3);
            // the massless commutator function lives on the light cone, so
            // the nontriviality witness pair must straddle it
            LatticeBump bt = bs;
            bt.center = {2, 0, 0, 0};
            const TestFunction f = make_lattice_bump(n, bf);
            const TestFunction hs = make_lattice_bump(n, bs);
            const TestFunction ht = make_lattice_bump(n, bt);
            const double rs = causality_check(f, hs, n, cgrid);
            const double rt = causality_check(f, ht, n, cgrid);
            worst_space = std::max(worst_space, rs);
            worst_ratio = std::max(worst_ratio, rs / std::max(rt, 1e-300));
        }
        sb.add("causality-spacelike", "commutator form vanishes at spacelike separation", 3,
               worst_space, 1e-3, 12);
        sb.add("causality-ratio", "spacelike residual < 0.1 x timelike residual", 3, worst_ratio,
               0.1, 12);
    }

    // symplectic/Hermitian structures
    {
        const int n = 2;
        const auto packets = packet_catalog(n);
        const EmbedImage a = embed_In(packets[0], n);
        const EmbedImage b = embed_In(packets[1], n);
        const double saa = sigma_n(a, a, grid_mid);
        const double sab = sigma_n(a, b, grid_mid);
        const double sba = sigma_n(b, a, grid_mid);
        const double scale = image_norm(a, grid_mid) * image_norm(b, grid_mid);
        sb.add("sigma-antisymmetric", "sigma(F,F) = 0 and sigma(F,G) = -sigma(G,F)", 3,
               std::max(std::abs(saa) / (image_norm(a, grid_mid) * image_norm(a, grid_mid)),
                        std::abs(sab + sba) / scale),
               1e-12);
        // boosts move the radial cutoff of a finite grid, so the invariance
        // check integrates on an unbounded Laguerre grid instead
        const QuadratureGrid grid_inv = QuadratureGrid::build(48, 20, 0.3);
        const PoincareElement g(Mat2::diag(std::exp(0.2), std::exp(-0.2)),
                                FourVector{0.3, -0.1, 0.2, 0.1});
        const double sab_inv = sigma_n(a, b, grid_inv);
        const double sv = sigma_n(embed_act_poincare(g, a), embed_act_poincare(g, b), grid_inv);
        const double scale_inv = image_norm(a, grid_inv) * image_norm(b, grid_inv);
        sb.add("sigma-invariance", "sigma(V_n F, V_n G) = sigma(F, G)", 1,
               std::abs(sv - sab_inv) / scale_inv, 1e-8);
        bool gated = false;
        try {
            sigma_n(embed_In(packet_catalog(1)[0], 1), embed_In(packet_catalog(1)[0], 1), grid_mid);
        } catch (const std::invalid_argument&) {
            gated = true;
        }
        sb.add("sigma-parity", "sigma_n rejects odd n", 1, gated ? 0.0 : 1.0, 0.5);
    }
    {
        const int n = 1;
        const auto packets = packet_catalog(n);
        const EmbedImage a = embed_In(packets[0], n);
        const EmbedImage b = embed_In(packets[2], n);
        const EmbedImage gga = gamma_n(gamma_n(a));
        EmbedImage diff = a;
        for (std::size_t i = 0; i < diff.parts.size(); ++i)
            diff.parts[i].rep = cone_add(gga.parts[i].rep, a.parts[i].rep, c64(-1.0));
        sb.add("gamma-involution", "Gamma_n^2 = 1", 1,
               image_norm(diff, grid_mid) / image_norm(a, grid_mid), 1e-12);
        const c64 lhs = image_pairing(gamma_n(a), gamma_n(b), grid_mid);
        const c64 rhs = image_pairing(b, a, grid_mid);
        sb.add("gamma-antiunitary", "<Gamma F, Gamma G> = <G, F>", 1,
               std::abs(lhs - rhs) / std::abs(rhs), 1e-9);
        const PoincareElement g(rng.sl2_moderate(0.4), rng.four_vector(0.5));
        const EmbedImage l2 = gamma_n(embed_act_poincare(g, a));
        const EmbedImage r2 = embed_act_poincare(g, gamma_n(a));
        EmbedImage d2 = l2;
        for (std::size_t i = 0; i < d2.parts.size(); ++i)
            d2.parts[i].rep = cone_add(l2.parts[i].rep, r2.parts[i].rep, c64(-1.0));
        sb.add("gamma-intertwines", "Gamma_n V_n(g) = V_n(g) Gamma_n", 1,
               image_norm(d2, grid_mid) / image_norm(l2, grid_mid), 1e-8);
        bool gated = false;
        try {
            gamma_n(embed_In(packet_catalog(2)[0], 2));
        } catch (const std::invalid_argument&) {
            gated = true;
        }
        sb.add("gamma-parity", "Gamma_n rejects even n", 1, gated ? 0.0 : 1.0, 0.5);
    }
    {
        // Fock two-point function
        const int n = 1;
        const auto packets = packet_catalog(n);
        const c64 diag = fock_two_point(packets[0], packets[0], n, grid_mid);
        sb.add("fock-diagonal", "two-point function is real nonnegative on the diagonal", 1,
               std::abs(std::imag(diag)) / std::abs(diag) + (std::real(diag) >= 0.0 ? 0.0 : 1.0),
               1e-10);
        const PoincareElement tr(Mat2::identity(), {0.4, -0.2, 0.3, 0.1});
        const c64 moved = fock_two_point(covariant_act(tr, packets[0]),
                                         covariant_act(tr, packets[1]), n, grid_mid);
        const c64 fixed = fock_two_point(packets[0], packets[1], n, grid_mid);
        sb.add("fock-invariance", "simultaneous translation preserves the two-point function", 1,
               std::abs(moved - fixed) / std::abs(fixed), 1e-9);
        // Fermi projection: only the first half of the quadruple contributes
        const EmbedImage fa = embed_In(packets[0], n);
        const EmbedImage fb = embed_In(packets[1], n);
        c64 manual = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            manual += inner_beta(fa.parts[i].rep, fb.parts[i].rep, n, fa.parts[i].sign, grid_mid);
        sb.add("fock-projection", "basis projection keeps the +p half of the quadruple", 1,
               std::abs(manual - fixed) / std::abs(fixed), 1e-13);
    }
    {
        // double-cone geometry
        const Region r1{{0, 0, 0, 0}, 1.0};
        const Region r2{{0, 5, 0, 0}, 1.0};
        const Region r3{{5, 0, 0, 0}, 1.0};
        bool ok = spacelike_separated(r1, r2) && !spacelike_separated(r1, r3) &&
                  !spacelike_separated(r1, r1);
        sb.add("spacelike-criterion", "|dx| - |dt| > r1 + r2 for double cones", 3, ok ? 0.0 : 1.0,
               0.5);

        const ConformalElement gp = embed_poincare(Mat2::identity(), {0.3, 1.0, 0.0, 0.0});
        const RegionImage shifted = region_transform(gp, r1);
        const double rshift =
            std::abs(shifted.region.radius / 1.05 - r1.radius) +
            std::abs(shifted.region.center.x1 - 1.0) + (shifted.regular ? 0.0 : 1.0);
        sb.add("region-poincare", "translations move double cones isometrically", 1, rshift, 1e-9);

        const RegionImage flagged =
            region_transform(special_conformal_element(Mat2::diag(3.0, 3.0)), r1);
        sb.add("region-singular", "large special conformal flags the singular locus", 1,
               flagged.regular ? 1.0 : 0.0, 0.5);

        // isotony bookkeeping: nested supports give nested generator regions
        const auto packets = packet_catalog(0);
        const BoundingBox box = packets[0].support_box();
        double rad = 0.0;
        for (int i = 0; i < 4; ++i) rad = std::max(rad, std::max(std::abs(box.lo[i]), box.hi[i]));
        // a double cone of radius (sqrt(3)+1) r contains the cube of half-width r
        const Region small{{0, 0, 0, 0}, 3.0 * rad};
        const Region large{{0, 0, 0, 0}, 3.5 * rad};
        bool isotone = true;
        for (const auto corner : {FourVector{box.lo[0], box.lo[1], box.lo[2], box.lo[3]},
                                  FourVector{box.hi[0], box.hi[1], box.hi[2], box.hi[3]}})
            isotone = isotone && small.contains(corner) && large.contains(corner);
        isotone = isotone && (small.radius <= large.radius);
        sb.add("isotony-bookkeeping", "supp f in O1 in O2 gives generator inclusion", 1,
               isotone ? 0.0 : 1.0, 0.5);
    }
    return sb.report();
}

// ---------------------------------------------------------------------------
// convergence suite

double reference_value(const std::string& id) {
    if (id == "exp-p0") return 2.0 * kPi;
    if (id == "exp-2p0") return kPi / 2.0;
    if (id == "odd-moment") return 0.0;
    return 0.0;  // self-convergent kernel diagonals
}

double evaluate_integral(const std::string& id, int order, const SuiteConfig& cfg) {
    if (id == "exp-p0" || id == "exp-2p0" || id == "odd-moment") {
        const QuadratureGrid g = QuadratureGrid::build(order, std::max(8, cfg.angular_order / 2), 1.0);
        if (id == "exp-p0")
            return std::real(
                g.integrate([](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0)); }));
        if (id == "exp-2p0")
            return std::real(
                g.integrate([](const MomentumOnCone& p) { return c64(std::exp(-2.0 * p.p.x0)); }));
        return std::real(g.integrate(
            [](const MomentumOnCone& p) { return c64(std::exp(-p.p.x0) * p.p.x2); }));
    }
    if (id.rfind("kernel-diag-n", 0) == 0) {
        const int n = std::stoi(id.substr(std::string("kernel-diag-n").size()));
        const QuadratureGrid g = QuadratureGrid::build(order, cfg.angular_order, cfg.radial_scale);
        const TubePoint i1;
        return std::real(kernel_quadrature(i1, i1, n, Sign::plus, g).matrix.trace());
    }
    throw std::invalid_argument("unknown integral id: " + id);
}

Report run_convergence(const SuiteConfig& cfg) {
    SuiteBuilder sb("convergence", cfg);
    const std::vector<int> ladder = {4, 6, 8, 12, 16, 24, 32};
    for (const std::string id : {"exp-p0", "exp-2p0"}) {
        double prev_err = 1e300, worst = 0.0, final_err = 0.0;
        for (int ord : ladder) {
            const double v = evaluate_integral(id, ord, cfg);
            const double err =
                std::abs(v - reference_value(id)) / std::max(reference_value(id), 1e-30);
            // strict decay is asserted above the roundoff plateau
            if (prev_err < 1e200 && err > 1e-13) worst = std::max(worst, err / prev_err);
            prev_err = err;
            final_err = err;
        }
        sb.add("ladder-" + id, "radial ladder error decay for the reference integral",
               ladder.size(), worst, 0.999, 4);
        sb.add("final-" + id, "reference integral at order 32", 1, final_err, 1e-10, 4);
    }
    {
        double prev = 0.0, last_change = 1e300;
        const std::vector<int> korders = {8, 12, 16, 24, 32};
        for (int ord : korders) {
            const double v = evaluate_integral("kernel-diag-n2", ord, cfg);
            if (prev != 0.0) last_change = std::abs(v - prev) / std::abs(v);
            prev = v;
        }
        sb.add("kernel-diag-selfconvergence", "kernel diagonal stable in the radial order",
               korders.size(), last_change, 1e-6);
    }
    return sb.report();
}

}  // namespace

std::vector<std::string> registered_suites() {
    return {"spin",   "poincare",  "factor",    "conformal-cocycle", "kernel",
            "extension", "embedding", "net-axioms", "convergence"};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "spin") return run_spin(cfg);
    if (name == "poincare") return run_poincare(cfg);
    if (name == "factor") return run_factor(cfg);
    if (name == "conformal-cocycle") return run_cocycle(cfg);
    if (name == "kernel") return run_kernel(cfg);
    if (name == "extension") return run_extension(cfg);
    if (name == "embedding") return run_embedding(cfg);
    if (name == "net-axioms") return run_net(cfg);
    if (name == "convergence") return run_convergence(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> registered_integrals() {
    return {"exp-p0", "exp-2p0", "odd-moment", "kernel-diag-n0", "kernel-diag-n1", "kernel-diag-n2"};
}

std::vector<ConvergenceRow> convergence_study(const std::string& integral_id,
                                              const std::vector<int>& orders,
                                              const SuiteConfig& cfg) {
    const auto known = registered_integrals();
    if (std::find(known.begin(), known.end(), integral_id) == known.end())
        throw std::invalid_argument("unknown integral id: " + integral_id);
    std::vector<ConvergenceRow> rows;
    double prev = 0.0;
    bool have_prev = false;
    for (int ord : orders) {
        ConvergenceRow row;
        row.order = ord;
        row.value = evaluate_integral(integral_id, ord, cfg);
        row.error_estimate = have_prev ? std::abs(row.value - prev) : 0.0;
        prev = row.value;
        have_prev = true;
        rows.push_back(row);
    }
    return rows;
}

CalibrationSummary run_calibration(const SuiteConfig& cfg) {
    const QuadratureGrid grid =
        QuadratureGrid::build(cfg.radial_order, cfg.angular_order, cfg.radial_scale);
    std::vector<int> degrees;
    for (int n = cfg.n_min; n <= std::max(cfg.n_max, 2); ++n) degrees.push_back(n);
    if (degrees.size() < 3) degrees = {0, 1, 2};
    const CalibrationRecord cal = calibrate_extension(grid, degrees, cfg.seed);
    CalibrationSummary s;
    s.valid = true;
    s.measure_convention = cal.measure_convention;
    s.degrees = cal.degrees;
    s.c_moment = cal.c_moment;
    s.c_kernel = cal.c_kernel;
    s.kernel_mode = extension_mode_name(cal.kernel_mode);
    s.covariance_sides =
        cal.covariance_sides == CovarianceSides::swapped ? "swapped" : "as_displayed";
    s.covariance_mode = extension_mode_name(cal.covariance_mode);
    s.grid_descriptor = cal.grid_descriptor;
    return s;
}

}  // namespace mfn
