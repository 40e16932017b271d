// Acceptance harness: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget. Exit code is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mva/c2.hpp"
#include "mva/zhu.hpp"

using namespace mva;

namespace {

std::string g_cli_path;

ModuleVector unit_term(const ModTerm& t, const Prime& p) {
    ModuleVector v;
    v.add(t, Fp::one(p));
    return v;
}

bool crit_appendix(std::string& note) {
    for (uint32_t pv : {3u, 5u, 7u}) {
        Report r = verify_appendix_identities(Prime(pv), -12, 12, -12, 12, 10);
        if (!r.all_pass()) {
            note = "p=" + std::to_string(pv);
            return false;
        }
    }
    return true;
}

bool crit_lucas(std::string& note) {
    for (uint32_t pv : {3u, 5u, 7u}) {
        Report r = verify_lucas_lemma(Prime(pv), 25, 25);
        if (!r.all_pass()) {
            note = "p=" + std::to_string(pv);
            return false;
        }
    }
    return true;
}

bool crit_restricted(std::string& note) {
    for (uint32_t pv : {3u, 5u, 7u}) {
        Prime p(pv);
        VirasoroAlgebra vir(p);
        for (int64_t m = -8; m <= 8; ++m) {
            LieElement lm = LieElement::single(Gen::vir(m), Fp::one(p));
            LieElement lmp = vir.p_map_gen(Gen::vir(m));
            for (int64_t n = -8; n <= 8; ++n) {
                LieElement ln = LieElement::single(Gen::vir(n), Fp::one(p));
                if (!(vir.ad_power(lm, pv, ln) == vir.bracket(lmp, ln))) {
                    note = "p=" + std::to_string(pv) + " m=" + std::to_string(m) +
                           " n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    for (uint32_t pv : {3u, 5u}) {
        Prime p(pv);
        AffineAlgebra g(StructureConstants::sl2(p));
        Report r = verify_restricted_axioms(g, 1);
        if (!r.all_pass()) {
            note = "sl2 axioms p=" + std::to_string(pv);
            return false;
        }
    }
    return true;
}

bool crit_centrality(std::string& note) {
    auto central = [&](uint32_t pv, int64_t n) {
        Prime p(pv);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        UEAElement z = U.one();
        for (uint32_t i = 0; i < pv; ++i) z = U.mul_gen(z, Gen::vir(-n));
        if (n % pv == 0) z -= U.gen_elem(Gen::vir(-n * pv));
        auto res = U.is_central(z, 6);
        if (!res.central) note = "p=" + std::to_string(pv) + " n=" + std::to_string(n) +
                                 " " + res.witness;
        return res.central;
    };
    for (int64_t n : {2, 3, 4})
        if (!central(3, n)) return false;
    return central(5, 2);
}

bool crit_cmn(std::string& note) {
    std::mt19937_64 rng(2024);
    {
        Prime p(3);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<UEAElement> a;
            for (int i = 0; i < 3; ++i)
                a.push_back(U.gen_elem(Gen::vir(static_cast<int64_t>(rng() % 9) - 4))
                                .scaled(Fp(1 + static_cast<int64_t>(rng() % 2), p)));
            if (!cmn_identity_check(U, a).all_pass()) {
                note = "S3 trial " + std::to_string(trial);
                return false;
            }
        }
    }
    for (uint32_t pv : {3u, 5u}) {
        Prime p(pv);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        std::vector<UEAElement> a = {U.gen_elem(Gen::vir(-2)), U.gen_elem(Gen::vir(1))};
        std::vector<uint32_t> r = {pv - 1, 1};
        if (!cmn_multiset_check(U, a, r).all_pass()) {
            note = "multiset p=" + std::to_string(pv);
            return false;
        }
    }
    return true;
}

bool crit_field_expansion(std::string& note) {
    Prime p(3);
    VirasoroAlgebra vir(p);
    for (int64_t cv : {0, 1, 2}) {
        Module V = Module::vacuum(vir, {27, Fp(cv, p)});
        ModeEngine E(V);
        for (int64_t n : {2, 3}) {
            Report r = check_virasoro_pcenter_field(E, n, 9, 9);
            if (!r.all_pass()) {
                note = "c=" + std::to_string(cv) + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool crit_zhu_vir(std::string& note) {
    Report r3 = verify_zhu_vir(Prime(3), Fp(0, Prime(3)), 4, 1);
    if (!r3.all_pass()) {
        note = "p=3";
        return false;
    }
    Report r5 = verify_zhu_vir(Prime(5), Fp(0, Prime(5)), 2, 1);
    if (!r5.all_pass()) {
        note = "p=5";
        return false;
    }
    // [L(-2)^p 1] = x^p - x exactly, directly
    Prime p(3);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {8, Fp(0, p)});
    ModeEngine E(V);
    ModuleVector v = V.hw_vector();
    for (int i = 0; i < 3; ++i) v = V.act_gen(Gen::vir(-2), v);
    VirReduction r = reduce_vir(E, v);
    Poly expect = {Fp::zero(p), Fp(-1, p), Fp::zero(p), Fp::one(p)};
    ModuleVector back = r.hat;
    back += resum(E, r.cert);
    if (!poly_eq(r.poly, expect) || !(back == v)) {
        note = "[L(-2)^3 1] = " + poly_str(r.poly);
        return false;
    }
    return true;
}

bool crit_zhu_affine(std::string& note) {
    Prime p(3);
    StructureConstants sc = StructureConstants::sl2(p);
    for (int64_t l : {0, 1, 2}) {
        Report r = verify_zhu_affine(sc, Fp(l, p), 2, 3);
        if (!r.all_pass()) {
            note = "level " + std::to_string(l);
            return false;
        }
    }
    // u(sl2) relations e^3 = f^3 = 0, h^3 = h
    RestrictedUEA R(sc);
    auto cube = [&](size_t i) {
        UEAElement x = R.gen_elem(i);
        return R.multiply(R.multiply(x, x), x);
    };
    if (!cube(0).is_zero() || !cube(1).is_zero()) {
        note = "e^3 or f^3 nonzero in u(sl2)";
        return false;
    }
    if (!(cube(2) == R.gen_elem(2))) {
        note = "h^3 != h in u(sl2)";
        return false;
    }
    return true;
}

size_t cli_module_count(uint32_t pv, std::string& note) {
    std::string cmd = "\"" + g_cli_path + "\" classify --p " + std::to_string(pv);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        note = "cannot run CLI";
        return 0;
    }
    char buf[512];
    size_t rows = 0;
    while (fgets(buf, sizeof buf, pipe))
        if (std::string(buf).rfind("L_Vir", 0) == 0) ++rows;
    pclose(pipe);
    return rows;
}

bool crit_classification(std::string& note) {
    for (uint32_t pv : {3u, 5u}) {
        Prime p(pv);
        Report r = classify_irreducibles_u_sl2(p);
        if (!r.all_pass()) {
            note = "u(sl2) classification p=" + std::to_string(pv);
            return false;
        }
        if (cli_module_count(pv, note) != pv) {
            note = "CLI did not list " + std::to_string(pv) + " modules";
            return false;
        }
    }
    {
        Prime p(3);
        VirasoroAlgebra vir(p);
        for (int64_t lv : {0, 1, 2}) {
            QuotientModule W = build_graded_module_vir(vir, {5, Fp(1, p)}, Fp(lv, p));
            if (!omega_w_action_check_vir(W, Fp(lv, p)).all_pass()) {
                note = "omega action lambda=" + std::to_string(lv);
                return false;
            }
        }
        AffineAlgebra g(StructureConstants::sl2(p));
        std::vector<std::vector<FpVec>> rho0(3, {zero_vec(1, p)});
        QuotientModule W0 = build_graded_module_affine(g, {4, Fp(0, p)}, rho0);
        if (!omega_w_action_check_affine(W0, rho0).all_pass()) {
            note = "affine omega action, trivial U";
            return false;
        }
        auto z2 = [&] { return std::vector<FpVec>(2, zero_vec(2, p)); };
        auto e = z2(), f = z2(), h = z2();
        e[0][1] = Fp::one(p);
        f[1][0] = Fp::one(p);
        h[0][0] = Fp::one(p);
        h[1][1] = Fp(-1, p);
        std::vector<std::vector<FpVec>> rho1 = {e, f, h};
        QuotientModule W1 = build_graded_module_affine(g, {4, Fp(1, p)}, rho1);
        if (!omega_w_action_check_affine(W1, rho1).all_pass()) {
            note = "affine omega action, U = L(1)";
            return false;
        }
    }
    return true;
}

bool crit_dims(std::string& note) {
    Prime p(3);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {8, Fp(0, p)});
    const std::vector<size_t> expect = {1, 0, 1, 1, 2, 2, 4, 4, 7};
    for (uint64_t d = 0; d <= 8; ++d) {
        if (V.dim(d) != expect[d] || V.dim(d) != partition_count(d, 2)) {
            note = "V dim mismatch at degree " + std::to_string(d);
            return false;
        }
    }
    GradedSubspace I = ideal_graded_span(V, IdealDescription::imu(Fp::zero(p)));
    for (uint64_t d = 0; d <= 5; ++d)
        if (I.dim(d) != 0) {
            note = "I_0 nonzero at degree " + std::to_string(d);
            return false;
        }
    if (I.dim(6) != 1) {
        note = "I_0 at degree 6 has dim " + std::to_string(I.dim(6));
        return false;
    }
    return true;
}

bool crit_c2(std::string& note) {
    Report rv = verify_c2_cofinite_vir(Prime(3), Fp(0, Prime(3)), 8);
    if (!rv.all_pass()) {
        note = "virasoro";
        return false;
    }
    Report ra = verify_c2_cofinite_affine(StructureConstants::sl2(Prime(3)),
                                          Fp(0, Prime(3)), 5);
    if (!ra.all_pass()) {
        note = "affine sl2";
        return false;
    }
    return true;
}

bool crit_singular(std::string& note) {
    for (uint64_t l : {0u, 1u, 2u}) {
        Report r = verify_singular_vectors_sl2(Prime(3), l);
        if (!r.all_pass()) {
            note = "level " + std::to_string(l);
            return false;
        }
    }
    return true;
}

bool crit_axiom_suite(std::string& note) {
    for (uint32_t pv : {3u, 5u}) {
        Prime p(pv);
        VirasoroAlgebra vir(p);
        Module V = Module::vacuum(vir, {24, Fp(1, p)});
        ModeEngine E(V);
        std::mt19937_64 rng(900 + pv);
        auto rand_vec = [&]() {
            for (;;) {
                uint64_t d = rng() % 6;
                if (V.dim(d) == 0) continue;
                return unit_term(V.basis(d)[rng() % V.dim(d)], p);
            }
        };
        for (int trial = 0; trial < 50; ++trial) {
            ModuleVector u = rand_vec(), v = rand_vec(), w = rand_vec();
            if (!check_skew_symmetry(E, u, v, 4).all_pass()) {
                note = "skew p=" + std::to_string(pv) + " trial " + std::to_string(trial);
                return false;
            }
            if (!check_conjugation(E, u, 2, 4, 4).all_pass()) {
                note = "conjugation p=" + std::to_string(pv) + " trial " +
                       std::to_string(trial);
                return false;
            }
            Report rj = check_jacobi_coefficient(E, u, v, w, 4);
            if (!rj.all_pass()) {
                note = "jacobi p=" + std::to_string(pv) + " trial " +
                       std::to_string(trial);
                return false;
            }
            // commutator formula [u_m, v_n] = sum_i binom(m,i) (u_i v)_{m+n-i}
            const int64_t du = *u.degree(), dv = *v.degree();
            for (int k = 0; k < 4; ++k) {
                int64_t m = static_cast<int64_t>(rng() % 9) - 4;
                int64_t n = static_cast<int64_t>(rng() % 9) - 4;
                ModuleVector lhs = E.mode_act(u, m, E.mode_act(v, n, w));
                lhs -= E.mode_act(v, n, E.mode_act(u, m, w));
                ModuleVector rhs;
                for (int64_t i = 0; i <= du + dv; ++i) {
                    Fp b = fp_binomial(m, static_cast<uint64_t>(i), p);
                    if (b.is_zero()) continue;
                    rhs += E.mode_act(E.mode_act(u, i, v), m + n - i, w).scaled(b);
                }
                if (!(lhs == rhs)) {
                    note = "commutator p=" + std::to_string(pv) + " trial " +
                           std::to_string(trial);
                    return false;
                }
            }
        }
    }
    return true;
}

bool crit_frobenius_powers(std::string& note) {
    Prime p(3);
    AffineAlgebra g(StructureConstants::sl2(p));
    Module V = Module::vacuum(g, {15, Fp(1, p)});
    ModeEngine E(V);
    FpVec a = zero_vec(3, p);
    a[0] = Fp::one(p);
    Report r = check_power_field(E, a, 1, 6, 5);
    if (!r.all_pass()) {
        note = "power field expansion failed";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "appendix-identities", 10, crit_appendix},
        {2, "lucas-lemma", 5, crit_lucas},
        {3, "restrictedness", 30, crit_restricted},
        {4, "p-center-centrality", 60, crit_centrality},
        {5, "cmn-identity", 30, crit_cmn},
        {6, "field-expansion", 120, crit_field_expansion},
        {7, "zhu-virasoro", 120, crit_zhu_vir},
        {8, "zhu-affine", 60, crit_zhu_affine},
        {9, "classification", 60, crit_classification},
        {10, "graded-dimensions", 10, crit_dims},
        {11, "c2-cofiniteness", 60, crit_c2},
        {12, "singular-vectors", 30, crit_singular},
        {13, "axiom-property-suite", 180, crit_axiom_suite},
        {14, "frobenius-field-powers", 60, crit_frobenius_powers},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_budget = secs < c.limit_s;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  "
             << c.name;
        std::printf("%s  %.2fs (limit %.0fs)%s%s\n", line.str().c_str(), secs,
                    c.limit_s, note.empty() ? "" : "  -- ", note.c_str());
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
