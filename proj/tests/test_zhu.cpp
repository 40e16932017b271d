#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mva/zhu.hpp"

using namespace mva;

namespace {

ModuleVector apply_word(const Module& M, const std::vector<Gen>& word) {
    ModuleVector r = M.hw_vector();
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = M.act_gen(*it, r);
    return r;
}

Poly poly_x(const Prime& p) { return {Fp::zero(p), Fp::one(p)}; }

}  // namespace

TEST_CASE("polynomial helpers") {
    Prime p(5);
    Poly x = poly_x(p);
    Poly f = poly_add(poly_mul(x, x, p), poly_scale(x, Fp(3, p)), p);
    CHECK(poly_eq(f, Poly{Fp::zero(p), Fp(3, p), Fp::one(p)}));
    CHECK(poly_eq(poly_sub(f, f, p), Poly{}));
    CHECK(poly_trim(Poly{Fp(2, p), Fp::zero(p)}).size() == 1);

    // x^5 == x, x^6 == x^2, x^9 == x^5 == x mod (x^5 - x)
    Poly x5(6, Fp::zero(p));
    x5[5] = Fp::one(p);
    CHECK(poly_eq(poly_mod_frobenius(x5, p), x));
    Poly x9(10, Fp::zero(p));
    x9[9] = Fp::one(p);
    CHECK(poly_eq(poly_mod_frobenius(x9, p), x));
    CHECK(poly_str(f) == "1*x^2 + 3*x^1");
}

TEST_CASE("star products in the Virasoro vacuum module") {
    Prime p(5);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {10, Fp(1, p)});
    ModeEngine E(V);
    ModuleVector one = V.hw_vector();
    ModuleVector omega = V.act_gen(Gen::vir(-2), one);

    CHECK(star(E, omega, one) == omega);
    CHECK(star(E, one, omega) == omega);

    // omega * omega = L(-2)omega + 2 L(-1)omega + L(0)omega
    //               = (L(-2)^2 + 2 L(-3) + 2 L(-2)) 1
    ModuleVector expect = apply_word(V, {Gen::vir(-2), Gen::vir(-2)});
    expect += apply_word(V, {Gen::vir(-3)}).scaled(Fp(2, p));
    expect += omega.scaled(Fp(2, p));
    CHECK(star(E, omega, omega) == expect);

    // omega circ_0 1 = L(-3) 1 + 2 L(-2) 1
    ModuleVector c0 = apply_word(V, {Gen::vir(-3)});
    c0 += omega.scaled(Fp(2, p));
    CHECK(circ(E, omega, 0, one) == c0);
}

TEST_CASE("circ against the d-operator expansion") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {14, Fp(0, p)});
    ModeEngine E(V);
    ModuleVector one = V.hw_vector();

    // v circ_{k-1} 1 = sum_{i<=k} binom(deg v, i) D^(k-i) v
    for (uint64_t d : {2u, 3u, 4u}) {
        for (size_t b = 0; b < V.dim(d); ++b) {
            ModuleVector v;
            v.add(V.basis(d)[b], Fp::one(p));
            for (uint64_t k = 1; k <= 4; ++k) {
                ModuleVector rhs;
                for (uint64_t i = 0; i <= k; ++i)
                    rhs += E.d_operator(k - i, v).scaled(
                        fp_binomial(static_cast<int64_t>(d), i, p));
                CHECK(circ(E, v, static_cast<int64_t>(k) - 1, one) == rhs);
            }
        }
    }
}

TEST_CASE("affine circ products") {
    Prime p(3);
    AffineAlgebra g(StructureConstants::sl2(p));
    Module V = Module::vacuum(g, {8, Fp(1, p)});
    ModeEngine E(V);
    ModuleVector one = V.hw_vector();
    ModuleVector a = V.act_gen(Gen::affine(0, -1), one);

    // a circ_0 1 = a(-2) 1 + a(-1) 1
    ModuleVector expect = apply_word(V, {Gen::affine(0, -2)});
    expect += a;
    CHECK(circ(E, a, 0, one) == expect);
    CHECK(star(E, a, one) == a);
}

TEST_CASE("reduce_vir: base cases") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {12, Fp(0, p)});
    ModeEngine E(V);
    ModuleVector one = V.hw_vector();

    SUBCASE("vacuum reduces to 1") {
        VirReduction r = reduce_vir(E, one);
        CHECK(poly_eq(r.poly, Poly{Fp::one(p)}));
        CHECK(r.cert.empty());
        CHECK(r.hat == one);
    }
    SUBCASE("L(-3) 1 reduces to -2x") {
        ModuleVector v = apply_word(V, {Gen::vir(-3)});
        VirReduction r = reduce_vir(E, v);
        CHECK(poly_eq(r.poly, poly_scale(poly_x(p), Fp(-2, p))));
        ModuleVector back = r.hat;
        back += resum(E, r.cert);
        CHECK(back == v);
    }
    SUBCASE("omega reduces to x") {
        VirReduction r = reduce_vir(E, V.act_gen(Gen::vir(-2), one));
        CHECK(poly_eq(r.poly, poly_x(p)));
    }
    SUBCASE("L(-2)^p 1 reduces to x^p - x") {
        ModuleVector v = apply_word(V, {Gen::vir(-2), Gen::vir(-2), Gen::vir(-2)});
        VirReduction r = reduce_vir(E, v);
        Poly expect(4, Fp::zero(p));
        expect[3] = Fp::one(p);
        expect[1] = Fp(-1, p);
        CHECK(poly_eq(r.poly, expect));
        ModuleVector back = r.hat;
        back += resum(E, r.cert);
        CHECK(back == v);
    }
}

TEST_CASE("reduce_vir: every certificate re-sums exactly") {
    Prime p(5);
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {9, Fp(2, p)});
    ModeEngine E(V);
    for (uint64_t d = 0; d <= 7; ++d) {
        for (size_t b = 0; b < V.dim(d); ++b) {
            ModuleVector v;
            v.add(V.basis(d)[b], Fp::one(p));
            VirReduction r = reduce_vir(E, v);
            ModuleVector back = r.hat;
            back += resum(E, r.cert);
            CHECK(back == v);
        }
    }
}

TEST_CASE("reduce_affine: base cases over sl2") {
    Prime p(3);
    StructureConstants sc = StructureConstants::sl2(p);
    AffineAlgebra g(sc);
    Module V = Module::vacuum(g, {10, Fp(1, p)});
    ModeEngine E(V);
    UEA U(g);
    ModuleVector one = V.hw_vector();
    Gen e0 = Gen::affine(0, 0);

    SUBCASE("vacuum reduces to 1") {
        AffineReduction r = reduce_affine(E, one);
        CHECK(r.image == U.one());
        CHECK(r.cert.empty());
    }
    SUBCASE("e(-1) 1 reduces to e") {
        AffineReduction r = reduce_affine(E, apply_word(V, {Gen::affine(0, -1)}));
        CHECK(r.image == U.gen_elem(e0));
    }
    SUBCASE("e(-2) 1 reduces to -e") {
        ModuleVector v = apply_word(V, {Gen::affine(0, -2)});
        AffineReduction r = reduce_affine(E, v);
        CHECK(r.image == U.gen_elem(e0).scaled(Fp(-1, p)));
        ModuleVector back = r.rep;
        back += resum(E, r.cert);
        CHECK(back == v);
    }
    SUBCASE("stacks multiply in reverse order") {
        // h(-1) f(-1) 1 |-> f h  (via [a(-1)w] = [w][a])
        ModuleVector v = apply_word(V, {Gen::affine(2, -1), Gen::affine(1, -1)});
        AffineReduction r = reduce_affine(E, v);
        CHECK(r.image == U.multiply(U.gen_elem(Gen::affine(1, 0)),
                                    U.gen_elem(Gen::affine(2, 0))));
    }
}

TEST_CASE("reduce_affine: p-center generators over sl2") {
    Prime p(3);
    StructureConstants sc = StructureConstants::sl2(p);
    AffineAlgebra g(sc);
    Module V = Module::vacuum(g, {10, Fp(0, p)});
    ModeEngine E(V);
    UEA U(g);

    auto pow3 = [&](Gen gg) {
        UEAElement r = U.one();
        for (int i = 0; i < 3; ++i) r = U.mul_gen(r, gg);
        return r;
    };

    // e(-1)^3 1 |-> e^3  (e^[3] = 0)
    ModuleVector v = apply_word(V, {Gen::affine(0, -1), Gen::affine(0, -1),
                                    Gen::affine(0, -1)});
    AffineReduction r = reduce_affine(E, v);
    CHECK(r.image == pow3(Gen::affine(0, 0)));

    // (h(-1)^3 - h(-3)) 1 |-> h^3 - h
    ModuleVector w = apply_word(V, {Gen::affine(2, -1), Gen::affine(2, -1),
                                    Gen::affine(2, -1)});
    w -= apply_word(V, {Gen::affine(2, -3)});
    AffineReduction rw = reduce_affine(E, w);
    UEAElement expect = pow3(Gen::affine(2, 0));
    expect -= U.gen_elem(Gen::affine(2, 0));
    CHECK(rw.image == expect);
    ModuleVector back = rw.rep;
    back += resum(E, rw.cert);
    CHECK(back == w);

    // e(-2)^3 1 |-> (-1)^{2-1} e^3 = -e^3
    ModuleVector u = apply_word(V, {Gen::affine(0, -2), Gen::affine(0, -2),
                                    Gen::affine(0, -2)});
    AffineReduction ru = reduce_affine(E, u);
    CHECK(ru.image == pow3(Gen::affine(0, 0)).scaled(Fp(-1, p)));

    // both images vanish in u(sl2)
    RestrictedUEA R(sc);
    CHECK(R.reduce(r.image).is_zero());
    CHECK(R.reduce(rw.image).is_zero());
}

TEST_CASE("verify_zhu_vir suites") {
    Report r3 = verify_zhu_vir(Prime(3), Fp(0, Prime(3)), 3, 11);
    INFO(r3.to_text());
    CHECK(r3.all_pass());
    Report r5 = verify_zhu_vir(Prime(5), Fp(1, Prime(5)), 2, 12);
    INFO(r5.to_text());
    CHECK(r5.all_pass());
}

TEST_CASE("verify_zhu_affine suites") {
    Prime p(3);
    StructureConstants sc = StructureConstants::sl2(p);
    for (uint32_t l : {0u, 1u}) {
        Report r = verify_zhu_affine(sc, Fp(l, p), 2, 7);
        INFO(r.to_text());
        CHECK(r.all_pass());
    }
}

TEST_CASE("omega action on simple quotients") {
    Prime p(5);
    VirasoroAlgebra vir(p);
    for (uint32_t lv : {0u, 1u, 3u}) {
        QuotientModule W = build_graded_module_vir(vir, {6, Fp(1, p)}, Fp(lv, p));
        Report r = omega_w_action_check_vir(W, Fp(lv, p));
        INFO(r.to_text());
        CHECK(r.all_pass());
        Report bad = omega_w_action_check_vir(W, Fp(lv + 1, p));
        CHECK_FALSE(bad.all_pass());
    }

    Prime q(3);
    StructureConstants sc = StructureConstants::sl2(q);
    AffineAlgebra g(sc);
    // trivial module U: rho = 0
    std::vector<std::vector<FpVec>> rho0(3, {zero_vec(1, q)});
    QuotientModule W0 = build_graded_module_affine(g, {5, Fp(0, q)}, rho0);
    Report r0 = omega_w_action_check_affine(W0, rho0);
    INFO(r0.to_text());
    CHECK(r0.all_pass());

    // 2-dimensional L(1): e, f, h in the standard basis v, fv
    auto z = [&] { return std::vector<FpVec>(2, zero_vec(2, q)); };
    auto e = z(), f = z(), h = z();
    e[0][1] = Fp::one(q);
    f[1][0] = Fp::one(q);
    h[0][0] = Fp::one(q);
    h[1][1] = Fp(-1, q);
    std::vector<std::vector<FpVec>> rho1 = {e, f, h};
    QuotientModule W1 = build_graded_module_affine(g, {5, Fp(1, q)}, rho1);
    Report r1 = omega_w_action_check_affine(W1, rho1);
    INFO(r1.to_text());
    CHECK(r1.all_pass());
}

TEST_CASE("classification of u(sl2) irreducibles") {
    for (uint32_t pv : {3u, 5u}) {
        Report r = classify_irreducibles_u_sl2(Prime(pv));
        INFO(r.to_text());
        CHECK(r.all_pass());
        size_t dims = 0, irr = 0;
        for (const auto& c : r.checks) {
            if (c.name.rfind("dim_L_lambda", 0) == 0 && c.pass) ++dims;
            if (c.name.rfind("irreducible_lambda", 0) == 0 && c.pass) ++irr;
        }
        CHECK(dims == pv);
        CHECK(irr == pv);
    }
}
