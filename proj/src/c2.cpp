#include "mva/c2.hpp"

#include <random>

namespace mva {

namespace {

ModuleVector term_unit(const ModTerm& t, const Prime& p) {
    ModuleVector v;
    v.add(t, Fp::one(p));
    return v;
}

}  // namespace

GradedSubspace c2_span(const ModeEngine& E) {
    const Module& V = E.module();
    const Prime& p = E.prime();
    const uint64_t N = V.max_degree();
    GradedSubspace C2;
    C2.comp.reserve(N + 1);
    for (uint64_t d = 0; d <= N; ++d) {
        RowSpan span(V.dim(d), p);
        // u_{-2-k} v has degree du + dv + k + 1
        for (uint64_t du = 1; du + 1 <= d; ++du) {
            for (uint64_t dv = 0; du + dv + 1 <= d; ++dv) {
                const int64_t k = static_cast<int64_t>(d - du - dv - 1);
                for (const auto& ut : V.basis(du)) {
                    ModuleVector u = term_unit(ut, p);
                    for (const auto& vt : V.basis(dv)) {
                        ModuleVector w = E.mode_act(u, -2 - k, term_unit(vt, p));
                        span.insert(V.coords(w, d));
                    }
                }
            }
        }
        C2.comp.push_back(std::move(span));
    }
    return C2;
}

Report verify_c2_quotient_algebra(const ModeEngine& E, uint64_t dmax, uint64_t seed) {
    const Module& V = E.module();
    const Prime& p = E.prime();
    Report rep;
    rep.suite = "c2_quotient_algebra";
    rep.params = {{"p", p.value()}, {"dmax", dmax}, {"seed", seed},
                  {"algebra", V.algebra().is_affine() ? "affine" : "virasoro"}};
    GradedSubspace C2 = c2_span(E);
    std::mt19937_64 rng(seed);

    auto in_c2 = [&](const ModuleVector& w, uint64_t d) {
        return C2.comp[d].contains(V.coords(w, d));
    };
    auto congruent = [&](const ModuleVector& a, const ModuleVector& b, uint64_t d) {
        ModuleVector diff = a;
        diff -= b;
        return in_c2(diff, d);
    };
    auto rand_term = [&](uint64_t lo, uint64_t hi) {
        for (;;) {
            uint64_t d = lo + rng() % (hi - lo + 1);
            if (V.dim(d) > 0)
                return std::pair(term_unit(V.basis(d)[rng() % V.dim(d)], p), d);
        }
    };

    {
        const uint64_t d2 = V.algebra().is_affine() ? 1 : 2;
        bool ok = C2.dim(0) == 0 && V.dim(d2) - C2.dim(d2) == V.dim(d2);
        for (uint64_t d = 1; d < d2; ++d) ok = ok && C2.dim(d) == 0;
        rep.add("low_degree_components", {{"first_gen_degree", d2}}, ok,
                ok ? std::nullopt
                   : std::optional<std::string>("unexpected C2 in low degree"));
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            auto [v, d] = rand_term(0, dmax > 3 ? dmax - 3 : 0);
            for (uint64_t k = 1; k <= 2 && ok; ++k) {
                ModuleVector w = E.d_operator(k, v);
                if (!in_c2(w, d + k)) {
                    ok = false;
                    wit = "D^(" + std::to_string(k) + ") " + V.describe(v);
                }
            }
        }
        rep.add("hasse_translates_in_c2", {{"trials", 12}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        std::vector<Gen> lowers;
        if (V.algebra().is_affine()) {
            lowers = {Gen::affine(0, -1), Gen::affine(1, -2), Gen::affine(2, -1)};
        } else {
            lowers = {Gen::vir(-2), Gen::vir(-3)};
        }
        for (uint64_t d = 2; d <= dmax && ok; ++d) {
            for (const auto& row : C2.comp[d].rows()) {
                ModuleVector w = V.from_coords(row, d);
                for (Gen g : lowers) {
                    uint64_t dd = d + static_cast<uint64_t>(g.degree());
                    if (dd > dmax) continue;
                    if (!in_c2(V.act_gen(g, w), dd)) {
                        ok = false;
                        wit = "mode " + V.algebra().gen_name(g) + " at degree " +
                              std::to_string(d);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        rep.add("lowering_modes_preserve_c2", {}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        ModuleVector one = V.hw_vector();
        for (int trial = 0; trial < 10 && ok; ++trial) {
            auto [v, d] = rand_term(0, dmax);
            if (!(E.mode_act(one, -1, v) == v) ||
                !congruent(E.mode_act(v, -1, one), v, d)) {
                ok = false;
                wit = "unit failure on " + V.describe(v);
            }
        }
        rep.add("unit", {{"trials", 10}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 15 && ok; ++trial) {
            auto [u, du] = rand_term(1, dmax / 2);
            auto [v, dv] = rand_term(1, dmax - du);
            if (!congruent(E.mode_act(u, -1, v), E.mode_act(v, -1, u), du + dv)) {
                ok = false;
                wit = V.describe(u) + " vs " + V.describe(v);
            }
        }
        rep.add("commutative_mod_c2", {{"trials", 15}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            auto [u, du] = rand_term(1, dmax / 3);
            auto [v, dv] = rand_term(1, (dmax - du) / 2);
            auto [w, dw] = rand_term(1, dmax - du - dv);
            ModuleVector lhs = E.mode_act(E.mode_act(u, -1, v), -1, w);
            ModuleVector rhs = E.mode_act(u, -1, E.mode_act(v, -1, w));
            if (!congruent(lhs, rhs, du + dv + dw)) {
                ok = false;
                wit = "associativity at degrees " + std::to_string(du) + "," +
                      std::to_string(dv) + "," + std::to_string(dw);
            }
        }
        rep.add("associative_mod_c2", {{"trials", 10}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            auto [v, dv] = rand_term(1, dmax / 2);
            uint64_t dz = 2 + rng() % (dmax - dv > 2 ? dmax - dv - 1 : 1);
            if (C2.comp[dz].rank() == 0) continue;
            const auto& rows = C2.comp[dz].rows();
            ModuleVector z = V.from_coords(rows[rng() % rows.size()], dz);
            if (!in_c2(E.mode_act(z, -1, v), dz + dv) ||
                !in_c2(E.mode_act(v, -1, z), dz + dv)) {
                ok = false;
                wit = "C2 absorbs products failed at degrees " + std::to_string(dz) +
                      "," + std::to_string(dv);
            }
        }
        rep.add("representative_independence", {{"trials", 12}}, ok, wit);
    }
    return rep;
}

Report verify_c2_cofinite_vir(const Prime& p, Fp c, uint64_t N) {
    Report rep;
    rep.suite = "c2_cofinite_vir";
    rep.params = {{"p", p.value()}, {"c", c.v}, {"N", N}};
    const uint32_t pv = p.value();
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {N, c});
    ModeEngine E(V);
    GradedSubspace C2 = c2_span(E);
    GradedSubspace I = ideal_graded_span(V, IdealDescription::imu(Fp::zero(p)));

    std::vector<RowSpan> S;
    for (uint64_t d = 0; d <= N; ++d) {
        RowSpan s = C2.comp[d];
        if (d < I.comp.size())
            for (const auto& row : I.comp[d].rows()) s.insert(row);
        S.push_back(std::move(s));
    }

    std::vector<ModuleVector> omega_pow = {V.hw_vector()};
    for (uint32_t k = 1; 2 * k <= N; ++k)
        omega_pow.push_back(V.act_gen(Gen::vir(-2), omega_pow.back()));

    if (2 * pv <= N) {
        bool ok = S[2 * pv].contains(V.coords(omega_pow[pv], 2 * pv));
        rep.add("omega_pth_power_vanishes", {{"degree", 2 * pv}}, ok,
                ok ? std::nullopt
                   : std::optional<std::string>("L(-2)^p 1 not in C2 + I_0"));
    } else {
        rep.add("omega_pth_power_vanishes", {{"degree", 2 * pv}}, false,
                "N too small to reach degree 2p");
    }

    bool span_ok = true;
    std::optional<std::string> wit;
    for (uint64_t d = 0; d <= N && span_ok; ++d) {
        RowSpan s = S[d];
        if (d % 2 == 0 && d / 2 < pv) s.insert(V.coords(omega_pow[d / 2], d));
        if (s.rank() != V.dim(d)) {
            span_ok = false;
            wit = "degree " + std::to_string(d) + ": " + std::to_string(s.rank()) +
                  " of " + std::to_string(V.dim(d));
        }
    }
    rep.add("omega_powers_span", {{"through_degree", N}}, span_ok, wit);
    return rep;
}

Report verify_c2_cofinite_affine(const StructureConstants& sc, Fp level, uint64_t N) {
    const Prime p = sc.p;
    Report rep;
    rep.suite = "c2_cofinite_affine";
    rep.params = {{"p", p.value()}, {"level", level.v}, {"N", N}};
    const uint32_t pv = p.value();
    AffineAlgebra g(sc);
    Module V = Module::vacuum(g, {N, level});
    ModeEngine E(V);
    GradedSubspace C2 = c2_span(E);
    GradedSubspace J = ideal_graded_span(V, IdealDescription::jchi(zero_vec(sc.dim(), p)));

    std::vector<RowSpan> S;
    for (uint64_t d = 0; d <= N; ++d) {
        RowSpan s = C2.comp[d];
        if (d < J.comp.size())
            for (const auto& row : J.comp[d].rows()) s.insert(row);
        S.push_back(std::move(s));
    }

    for (size_t i = 0; i < sc.dim(); ++i) {
        if (pv > N) {
            rep.add("gen_pth_power_vanishes_" + sc.names[i], {}, false,
                    "N too small to reach degree p");
            continue;
        }
        ModuleVector v = V.hw_vector();
        for (uint32_t k = 0; k < pv; ++k)
            v = V.act_gen(Gen::affine(static_cast<int32_t>(i), -1), v);
        bool ok = S[pv].contains(V.coords(v, pv));
        rep.add("gen_pth_power_vanishes_" + sc.names[i], {{"degree", pv}}, ok,
                ok ? std::nullopt
                   : std::optional<std::string>("a(-1)^p 1 not in C2 + J_0"));
    }

    bool span_ok = true;
    std::optional<std::string> wit;
    for (uint64_t d = 0; d <= N && span_ok; ++d) {
        RowSpan s = S[d];
        for (const auto& t : V.basis(d)) {
            bool stack = true;
            for (const auto& [gen, e] : t.mono.factors)
                if (gen.n != -1 || e >= pv) stack = false;
            if (!stack) continue;
            ModuleVector m;
            m.add(t, Fp::one(p));
            s.insert(V.coords(m, d));
        }
        if (s.rank() != V.dim(d)) {
            span_ok = false;
            wit = "degree " + std::to_string(d) + ": " + std::to_string(s.rank()) +
                  " of " + std::to_string(V.dim(d));
        }
    }
    rep.add("reduced_stacks_span", {{"through_degree", N}}, span_ok, wit);
    return rep;
}

}  // namespace mva
