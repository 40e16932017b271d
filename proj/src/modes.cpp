#include "mva/modes.hpp"

#include <stdexcept>

namespace mva {

namespace {

ModuleVector unit(const ModTerm& t, const Prime& p) {
    ModuleVector v;
    v.add(t, Fp::one(p));
    return v;
}

Fp sign(int64_t e, const Prime& p) {
    return (e % 2 == 0) ? Fp::one(p) : -Fp::one(p);
}

// Lie mode a_j of the generating field: L(j-1) for Virasoro (weight 2),
// a(j) for affine (weight 1).
Gen field_mode(const LieAlgebra& alg, int32_t base, int64_t j) {
    return alg.is_affine() ? Gen::affine(base, j) : Gen::vir(j - 1);
}

ModuleVector act_gen_pow(const Module& M, Gen g, uint32_t e, ModuleVector w) {
    for (uint32_t i = 0; i < e && !w.is_zero(); ++i) w = M.act_gen(g, w);
    return w;
}

ModuleVector act_lie_pow(const Module& M, const LieElement& x, uint32_t e, ModuleVector w) {
    for (uint32_t i = 0; i < e && !w.is_zero(); ++i) w = M.act_lie(x, w);
    return w;
}

LieElement combination(const FpVec& coeffs, int64_t mode) {
    LieElement x;
    for (size_t i = 0; i < coeffs.size(); ++i)
        x.add(Gen::affine(static_cast<int32_t>(i), mode), coeffs[i]);
    return x;
}

}  // namespace

ModuleVector ModeEngine::term_mode(const PBWMonomial& mono, int64_t n, const ModTerm& wt) const {
    const Prime& p = prime();
    const int64_t rd = mono.degree() + wt.degree() - n - 1;
    if (rd < 0) return {};  // the module lives in degrees >= 0
    if (rd > static_cast<int64_t>(W_.max_degree()))
        throw TruncationOverflow("mode_act: result degree " + std::to_string(rd) +
                                 " exceeds truncation " + std::to_string(W_.max_degree()));

    if (mono.is_one()) {
        ModuleVector r;
        if (n == -1) r = unit(wt, p);
        return r;
    }

    auto key = std::tuple(mono, n, wt);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const auto& [g, e] = mono.factors.front();
    if (g.is_central() || g.n >= 0)
        throw std::invalid_argument("mode_act: state vector is not vacuum-type");

    PBWMonomial u = mono;
    if (e == 1)
        u.factors.erase(u.factors.begin());
    else
        u.factors.front().second = e - 1;

    // Vertex-mode index of the leading factor: g contributes the field mode
    // a_m with m = g.n + weight - 1 (weight 2 for Virasoro, 1 for affine).
    const int64_t wt_shift = W_.algebra().is_affine() ? 0 : 1;
    const int64_t m = g.n + wt_shift;
    const int64_t du = u.degree();
    const int64_t dw = wt.degree();
    const ModuleVector w1 = unit(wt, p);

    ModuleVector res;
    // a_m u)_n w = sum_i (-1)^i binom(m,i) (a_{m-i} (u_{n+i} w)
    //                                       - (-1)^m u_{n+m-i} (a_i w))
    const int64_t bound1 = du + dw - n - 1;
    for (int64_t i = 0; i <= bound1; ++i) {
        Fp c = sign(i, p) * fp_binomial(m, static_cast<uint64_t>(i), p);
        if (c.is_zero()) continue;
        ModuleVector inner = mono_mode(u, n + i, w1);
        if (inner.is_zero()) continue;
        res += W_.act_gen(field_mode(W_.algebra(), g.base, m - i), inner).scaled(c);
    }
    const int64_t bound2 = dw + wt_shift;  // a_i w vanishes beyond
    const Fp sm = sign(m, p);
    for (int64_t i = 0; i <= bound2; ++i) {
        Fp c = sign(i, p) * fp_binomial(m, static_cast<uint64_t>(i), p) * sm;
        if (c.is_zero()) continue;
        ModuleVector gw = W_.act_gen(field_mode(W_.algebra(), g.base, i), w1);
        if (gw.is_zero()) continue;
        res -= mono_mode(u, n + m - i, gw).scaled(c);
    }

    memo_.emplace(std::move(key), res);
    return res;
}

ModuleVector ModeEngine::mono_mode(const PBWMonomial& mono, int64_t n,
                                   const ModuleVector& w) const {
    ModuleVector r;
    for (const auto& [t, c] : w.terms()) r += term_mode(mono, n, t).scaled(c);
    return r;
}

ModuleVector ModeEngine::mode_act(const ModuleVector& v, int64_t n,
                                  const ModuleVector& w) const {
    ModuleVector r;
    for (const auto& [vt, c] : v.terms()) {
        if (vt.hw != 0)
            throw std::invalid_argument("mode_act: state vector must be vacuum-type");
        r += mono_mode(vt.mono, n, w).scaled(c);
    }
    return r;
}

ModuleVector ModeEngine::d_operator(uint64_t k, const ModuleVector& v) const {
    return mode_act(v, -static_cast<int64_t>(k) - 1, W_.hw_vector());
}

Report check_skew_symmetry(const ModeEngine& E, const ModuleVector& u,
                           const ModuleVector& v, int64_t window) {
    const Prime& p = E.prime();
    Report rep;
    rep.suite = "skew_symmetry";
    rep.params = {{"p", p.value()}, {"window", window}};
    auto du = u.degree(), dv = v.degree();
    if (!du || !dv) {
        rep.add("homogeneous_input", {}, false, "u and v must be homogeneous");
        return rep;
    }
    const int64_t N = static_cast<int64_t>(E.module().max_degree());
    size_t skipped = 0;
    bool pass = true;
    std::optional<std::string> wit;
    for (int64_t m = -window; m <= window; ++m) {
        const int64_t total = *du + *dv + m;
        if (total > N) {
            ++skipped;
            continue;
        }
        ModuleVector lhs = E.mode_act(u, -m - 1, v);
        ModuleVector rhs;
        for (int64_t j = 0; j <= total; ++j) {
            ModuleVector inner = E.mode_act(v, j - m - 1, u);
            if (inner.is_zero()) continue;
            rhs += E.d_operator(static_cast<uint64_t>(j), inner)
                       .scaled(sign(j + m, p));
        }
        lhs -= rhs;
        if (!lhs.is_zero() && pass) {
            pass = false;
            wit = "coefficient x^" + std::to_string(m) +
                  ": difference " + E.module().describe(lhs);
        }
    }
    rep.add("coefficients_match", {{"skipped", skipped}}, pass, wit);
    return rep;
}

Report check_conjugation(const ModeEngine& E, const ModuleVector& v, uint64_t zmax,
                         int64_t nwindow, uint64_t dstar) {
    const Prime& p = E.prime();
    Report rep;
    rep.suite = "conjugation";
    rep.params = {{"p", p.value()}, {"zmax", zmax}, {"nwindow", nwindow}, {"dstar", dstar}};
    auto dv = v.degree();
    if (!dv) {
        rep.add("homogeneous_input", {}, false, "v must be homogeneous");
        return rep;
    }
    const int64_t N = static_cast<int64_t>(E.module().max_degree());
    const Module& M = E.module();
    for (uint64_t r = 0; r <= zmax; ++r) {
        for (int64_t n = -nwindow; n <= nwindow; ++n) {
            size_t skipped = 0;
            bool pass = true;
            std::optional<std::string> wit;
            for (uint64_t d = 0; d <= dstar; ++d) {
                for (const ModTerm& bt : M.basis(d)) {
                    const int64_t total =
                        *dv + static_cast<int64_t>(d + r) - n - 1;
                    const int64_t inter = std::max<int64_t>(
                        {static_cast<int64_t>(d + r), total,
                         *dv + static_cast<int64_t>(r)});
                    if (inter > N) {
                        ++skipped;
                        continue;
                    }
                    ModuleVector w = unit(bt, p);
                    ModuleVector lhs;
                    for (uint64_t b = 0; b <= r; ++b) {
                        ModuleVector x = E.d_operator(b, w);
                        if (x.is_zero()) continue;
                        x = E.mode_act(v, n, x);
                        if (x.is_zero()) continue;
                        lhs += E.d_operator(r - b, x).scaled(sign(b, p));
                    }
                    ModuleVector rhs = E.mode_act(E.d_operator(r, v), n, w);
                    lhs -= rhs;
                    if (!lhs.is_zero() && pass) {
                        pass = false;
                        wit = "w = " + M.describe(w) + ": difference " + M.describe(lhs);
                    }
                }
            }
            rep.add("z^" + std::to_string(r) + "_n" + std::to_string(n),
                    {{"skipped", skipped}}, pass, wit);
        }
    }
    return rep;
}

Report check_jacobi_coefficient(const ModeEngine& E, const ModuleVector& u,
                                const ModuleVector& v, const ModuleVector& w,
                                int64_t win) {
    const Prime& p = E.prime();
    Report rep;
    rep.suite = "jacobi_coefficient";
    rep.params = {{"p", p.value()}, {"window", win}};
    auto du = u.degree(), dv = v.degree(), dw = w.degree();
    if (!du || !dv || !dw) {
        rep.add("homogeneous_input", {}, false, "u, v, w must be homogeneous");
        return rep;
    }
    const int64_t N = static_cast<int64_t>(E.module().max_degree());
    size_t skipped = 0, tested = 0;
    bool pass = true;
    std::optional<std::string> wit;
    for (int64_t m = -win; m <= win; ++m)
        for (int64_t n = -win; n <= win; ++n)
            for (int64_t k = -win; k <= win; ++k) {
                const int64_t ba = *dv + *dw - k - 1;   // v_{k+i} w alive
                const int64_t bb = *du + *dw - n - 1;   // u_{n+i} w alive
                const int64_t bc = *du + *dv - m - 1;   // u_{m+i} v alive
                const int64_t fin = *du + *dv + *dw - m - n - k - 2;
                if (std::max({ba, bb, bc, fin}) > N) {
                    ++skipped;
                    continue;
                }
                ++tested;
                ModuleVector lhs;
                for (int64_t i = 0; i <= ba; ++i) {
                    Fp c = sign(i, p) * fp_binomial(m, static_cast<uint64_t>(i), p);
                    if (c.is_zero()) continue;
                    ModuleVector x = E.mode_act(v, k + i, w);
                    if (x.is_zero()) continue;
                    lhs += E.mode_act(u, m + n - i, x).scaled(c);
                }
                const Fp sm = sign(m, p);
                for (int64_t i = 0; i <= bb; ++i) {
                    Fp c = sign(i, p) * fp_binomial(m, static_cast<uint64_t>(i), p) * sm;
                    if (c.is_zero()) continue;
                    ModuleVector x = E.mode_act(u, n + i, w);
                    if (x.is_zero()) continue;
                    lhs -= E.mode_act(v, m + k - i, x).scaled(c);
                }
                ModuleVector rhs;
                for (int64_t i = 0; i <= bc; ++i) {
                    Fp c = fp_binomial(n, static_cast<uint64_t>(i), p);
                    if (c.is_zero()) continue;
                    ModuleVector x = E.mode_act(u, m + i, v);
                    if (x.is_zero()) continue;
                    rhs += E.mode_act(x, n + k - i, w).scaled(c);
                }
                lhs -= rhs;
                if (!lhs.is_zero() && pass) {
                    pass = false;
                    wit = "(m,n,k) = (" + std::to_string(m) + "," + std::to_string(n) +
                          "," + std::to_string(k) + "): difference " +
                          E.module().describe(lhs);
                }
            }
    rep.add("jacobi_box", {{"tested", tested}, {"skipped", skipped}}, pass, wit);
    return rep;
}

Report check_power_field(const ModeEngine& E, const FpVec& a, int64_t n,
                         int64_t mwindow, uint64_t dstar) {
    const Prime& p = E.prime();
    const Module& M = E.module();
    Report rep;
    rep.suite = "power_field";
    rep.params = {{"p", p.value()}, {"n", n}, {"mwindow", mwindow}, {"dstar", dstar}};
    if (!M.algebra().is_affine() || n < 1) {
        rep.add("input", {}, false, "requires an affine module and n >= 1");
        return rep;
    }
    const uint32_t pv = p.value();
    const int64_t N = static_cast<int64_t>(M.max_degree());

    // precondition a_i a in F1 for i >= 0: only i = 0 is nontrivial by degree
    ModuleVector va = M.act_lie(combination(a, -1), M.hw_vector());
    const bool pre = E.mode_act(va, 0, va).is_zero();
    rep.add("precondition_a_i_a", {}, pre,
            pre ? std::nullopt : std::optional<std::string>("a_0 a != 0"));

    ModuleVector gen = act_lie_pow(M, combination(a, -n), pv, M.hw_vector());
    for (int64_t m = -mwindow; m <= mwindow; ++m) {
        size_t skipped = 0;
        bool pass = true;
        std::optional<std::string> wit;
        for (uint64_t d = 0; d <= dstar; ++d) {
            for (const ModTerm& bt : M.basis(d)) {
                const int64_t total = n * pv + static_cast<int64_t>(d) + m;
                if (total > N) {
                    ++skipped;
                    continue;
                }
                ModuleVector w = unit(bt, p);
                ModuleVector lhs = E.mode_act(gen, -m - 1, w);
                ModuleVector rhs;
                if (m >= 0 && m % pv == 0) {
                    int64_t j = m / pv;
                    Fp c = fp_binomial(n + j - 1, static_cast<uint64_t>(j), p);
                    rhs = act_lie_pow(M, combination(a, -n - j), pv, w).scaled(c);
                } else if (m < 0 && (-m) % pv == 0 && (-m) / pv >= n) {
                    int64_t j = (-m) / pv - n;
                    Fp c = sign(n - 1, p) *
                           fp_binomial(n + j - 1, static_cast<uint64_t>(j), p);
                    rhs = act_lie_pow(M, combination(a, j), pv, w).scaled(c);
                }
                lhs -= rhs;
                if (!lhs.is_zero() && pass) {
                    pass = false;
                    wit = "w = " + M.describe(w) + ": difference " + M.describe(lhs);
                }
            }
        }
        rep.add("x^" + std::to_string(m), {{"skipped", skipped}}, pass, wit);
    }
    return rep;
}

Report check_virasoro_pcenter_field(const ModeEngine& E, int64_t n, int64_t mwindow,
                                    uint64_t dstar) {
    const Prime& p = E.prime();
    const Module& M = E.module();
    Report rep;
    rep.suite = "virasoro_pcenter_field";
    rep.params = {{"p", p.value()}, {"n", n}, {"mwindow", mwindow}, {"dstar", dstar}};
    if (M.algebra().is_affine() || n < 2) {
        rep.add("input", {}, false, "requires a Virasoro module and n >= 2");
        return rep;
    }
    const uint32_t pv = p.value();
    const int64_t N = static_cast<int64_t>(M.max_degree());

    // z(s) w = L(-s)^p w - delta_{p|s} L(-sp) w, valid for any integer s
    auto pcenter_op = [&](int64_t s, const ModuleVector& w) {
        ModuleVector r = act_gen_pow(M, Gen::vir(-s), pv, w);
        if (s % static_cast<int64_t>(pv) == 0)
            r -= M.act_gen(Gen::vir(-s * pv), w);
        return r;
    };

    ModuleVector gen = pcenter_op(n, M.hw_vector());
    for (int64_t m = -mwindow; m <= mwindow; ++m) {
        size_t skipped = 0;
        bool pass = true;
        std::optional<std::string> wit;
        for (uint64_t d = 0; d <= dstar; ++d) {
            for (const ModTerm& bt : M.basis(d)) {
                const int64_t total = n * pv + static_cast<int64_t>(d) + m;
                if (total > N) {
                    ++skipped;
                    continue;
                }
                ModuleVector w = unit(bt, p);
                ModuleVector lhs = E.mode_act(gen, -m - 1, w);
                ModuleVector rhs;
                if (m % static_cast<int64_t>(pv) == 0) {
                    if (m >= 0) {
                        int64_t j = m / pv;
                        Fp c = sign(j, p) *
                               fp_binomial(-n + 1, static_cast<uint64_t>(j), p);
                        rhs = pcenter_op(n + j, w).scaled(c);
                    } else {
                        int64_t j = 1 - n - m / static_cast<int64_t>(pv);
                        if (j >= 0) {
                            Fp c = sign(n + j, p) *
                                   fp_binomial(-n + 1, static_cast<uint64_t>(j), p);
                            rhs = pcenter_op(1 - j, w).scaled(c);
                        }
                    }
                }
                lhs -= rhs;
                if (!lhs.is_zero() && pass) {
                    pass = false;
                    wit = "w = " + M.describe(w) + ": difference " + M.describe(lhs);
                }
            }
        }
        rep.add("x^" + std::to_string(m), {{"skipped", skipped}}, pass, wit);
    }
    return rep;
}

Report check_dnv_corollary(const ModeEngine& E, int64_t n, uint64_t m) {
    const Prime& p = E.prime();
    const Module& M = E.module();
    Report rep;
    rep.suite = "dnv_corollary";
    rep.params = {{"p", p.value()}, {"n", n}, {"m", m}};
    if (M.algebra().is_affine() || n < 2) {
        rep.add("input", {}, false, "requires a Virasoro module and n >= 2");
        return rep;
    }
    const uint32_t pv = p.value();
    ModuleVector gen = act_gen_pow(M, Gen::vir(-n), pv, M.hw_vector());
    if (n % static_cast<int64_t>(pv) == 0)
        gen -= M.act_gen(Gen::vir(-n * pv), M.hw_vector());
    ModuleVector lhs = E.d_operator(m, gen);
    ModuleVector rhs;
    if (m % pv == 0) {
        int64_t k = static_cast<int64_t>(m / pv);
        Fp c = sign(k, p) * fp_binomial(-n + 1, static_cast<uint64_t>(k), p);
        rhs = act_gen_pow(M, Gen::vir(-n - k), pv, M.hw_vector());
        if ((n + k) % static_cast<int64_t>(pv) == 0)
            rhs -= M.act_gen(Gen::vir(-(n + k) * pv), M.hw_vector());
        rhs = rhs.scaled(c);
    }
    lhs -= rhs;
    rep.add("value", {}, lhs.is_zero(),
            lhs.is_zero() ? std::nullopt
                          : std::optional<std::string>("difference " + M.describe(lhs)));
    return rep;
}

}  // namespace mva
