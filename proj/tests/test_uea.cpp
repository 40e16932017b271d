#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mva/uea.hpp"

using namespace mva;

namespace {

PBWMonomial mono(std::initializer_list<std::pair<Gen, uint32_t>> fs) {
    PBWMonomial m;
    for (const auto& f : fs) m.factors.push_back(f);
    return m;
}

Fp coeff(const UEAElement& u, const PBWMonomial& m) {
    auto it = u.terms().find(m);
    REQUIRE(it != u.terms().end());
    return it->second;
}

}  // namespace

TEST_CASE("straighten") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    UEA U(vir);

    SUBCASE("L_2 * L_-2 = L_-2 L_2 + L_0 + 2c") {
        UEAElement r = U.straighten({Gen::vir(2), Gen::vir(-2)});
        CHECK(r.terms().size() == 3);
        CHECK(coeff(r, mono({{Gen::vir(-2), 1}, {Gen::vir(2), 1}})).v == 1);
        CHECK(coeff(r, mono({{Gen::vir(0), 1}})).v == 1);
        CHECK(coeff(r, mono({{Gen::central(), 1}})).v == 2);
    }
    SUBCASE("sorted word stays a single monomial") {
        UEAElement r = U.straighten({Gen::vir(-3), Gen::vir(-3), Gen::vir(1)});
        CHECK(r.terms().size() == 1);
        CHECK(coeff(r, mono({{Gen::vir(-3), 2}, {Gen::vir(1), 1}})).v == 1);
    }
    SUBCASE("e(0) e(-1) e(-1) = e(-1)^2 e(0), no correction") {
        AffineAlgebra g(StructureConstants::sl2(p));
        UEA Ug(g);
        UEAElement r = Ug.straighten(
            {Gen::affine(0, 0), Gen::affine(0, -1), Gen::affine(0, -1)});
        CHECK(r.terms().size() == 1);
        CHECK(coeff(r, mono({{Gen::affine(0, -1), 2}, {Gen::affine(0, 0), 1}})).v == 1);
    }
}

TEST_CASE("multiply") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    UEA U(vir);

    SUBCASE("unit law") {
        UEAElement u = U.straighten({Gen::vir(1), Gen::vir(-1)});
        CHECK(U.multiply(u, U.one()) == u);
        CHECK(U.multiply(U.one(), u) == u);
    }
    SUBCASE("(L_-2)^p is a single monomial") {
        UEAElement u = U.one();
        for (uint32_t i = 0; i < 3; ++i) u = U.multiply(u, U.gen_elem(Gen::vir(-2)));
        CHECK(u.terms().size() == 1);
        CHECK(coeff(u, mono({{Gen::vir(-2), 3}})).v == 1);
    }
    SUBCASE("h * e = e h + 2e in U(sl2)") {
        AffineAlgebra g(StructureConstants::sl2(p));
        UEA Ug(g);
        Gen e = Gen::affine(0, 0), h = Gen::affine(2, 0);
        UEAElement r = Ug.multiply(Ug.gen_elem(h), Ug.gen_elem(e));
        CHECK(r.terms().size() == 2);
        CHECK(coeff(r, mono({{e, 1}, {h, 1}})).v == 1);
        CHECK(coeff(r, mono({{e, 1}})).v == 2);
    }
    SUBCASE("associativity on random triples") {
        std::mt19937 rng(777);
        for (int trial = 0; trial < 100; ++trial) {
            auto rand_word = [&] {
                std::vector<Gen> w;
                size_t len = 1 + rng() % 2;
                for (size_t i = 0; i < len; ++i)
                    w.push_back(Gen::vir(static_cast<int64_t>(rng() % 11) - 5));
                return w;
            };
            UEAElement a = U.straighten(rand_word());
            UEAElement b = U.straighten(rand_word());
            UEAElement c = U.straighten(rand_word());
            CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));
        }
    }
    SUBCASE("straightening is confluent across split strategies") {
        std::mt19937 rng(991);
        for (int trial = 0; trial < 200; ++trial) {
            size_t len = 2 + rng() % 5;  // words of length <= 6
            std::vector<Gen> w;
            for (size_t i = 0; i < len; ++i)
                w.push_back(Gen::vir(static_cast<int64_t>(rng() % 11) - 5));
            UEAElement direct = U.straighten(w);
            size_t cut = 1 + rng() % (len - 1);
            UEAElement split = U.multiply(
                U.straighten({w.begin(), w.begin() + cut}),
                U.straighten({w.begin() + cut, w.end()}));
            CHECK(direct == split);
        }
    }
    SUBCASE("grading is additive") {
        UEAElement u = U.straighten({Gen::vir(-2), Gen::vir(-2)});
        UEAElement v = U.straighten({Gen::vir(1)});
        REQUIRE(u.degree());
        REQUIRE(v.degree());
        UEAElement w = U.multiply(u, v);
        REQUIRE(w.degree());
        CHECK(*w.degree() == *u.degree() + *v.degree());
        CHECK(*w.degree() == 3);
    }
}

TEST_CASE("central charge specialization") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    UEA U(vir, Fp(1, p));
    UEAElement r = U.straighten({Gen::vir(2), Gen::vir(-2)});
    // the 2c term becomes the scalar 2
    CHECK(r.terms().size() == 3);
    CHECK(coeff(r, PBWMonomial{}).v == 2);
}

TEST_CASE("window-certified centrality of p-center elements") {
    SUBCASE("L_-2^3 central, p=3") {
        Prime p(3);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        UEAElement z = U.one();
        for (int i = 0; i < 3; ++i) z = U.multiply(z, U.gen_elem(Gen::vir(-2)));
        auto res = U.is_central(z, 6);
        CHECK(res.central);
    }
    SUBCASE("L_-3^3 - L_-9 central, p=3") {
        Prime p(3);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        UEAElement z = U.one();
        for (int i = 0; i < 3; ++i) z = U.multiply(z, U.gen_elem(Gen::vir(-3)));
        z -= U.gen_elem(Gen::vir(-9));
        auto res = U.is_central(z, 6);
        CHECK(res.central);
    }
    SUBCASE("L_-2 is not central, witnessed") {
        Prime p(3);
        VirasoroAlgebra vir(p);
        UEA U(vir);
        auto res = U.is_central(U.gen_elem(Gen::vir(-2)), 2);
        CHECK_FALSE(res.central);
        CHECK(!res.witness.empty());
    }
    SUBCASE("p-center family, p in {3,5}, n in {2,3,4}") {
        for (uint32_t pv : {3u, 5u}) {
            Prime p(pv);
            VirasoroAlgebra vir(p);
            UEA U(vir);
            for (int64_t n : {2, 3, 4}) {
                UEAElement z = U.one();
                for (uint32_t i = 0; i < pv; ++i)
                    z = U.multiply(z, U.gen_elem(Gen::vir(-n)));
                if (n % pv == 0) z -= U.gen_elem(Gen::vir(-n * pv));
                auto res = U.is_central(z, 6);
                CHECK(res.central);
            }
        }
    }
    SUBCASE("affine p-center a(-m)^p - a^[p](-mp)") {
        for (uint32_t pv : {3u, 5u}) {
            Prime p(pv);
            AffineAlgebra g(StructureConstants::sl2(p));
            UEA U(g);
            for (int32_t b : {0, 1, 2}) {  // e, f, h
                for (int64_t m : {1, 2}) {
                    UEAElement z = U.one();
                    for (uint32_t i = 0; i < pv; ++i)
                        z = U.multiply(z, U.gen_elem(Gen::affine(b, -m)));
                    z -= U.from_lie(g.p_map_gen(Gen::affine(b, -m)));
                    auto res = U.is_central(z, 4);
                    CHECK(res.central);
                }
            }
        }
    }
}

TEST_CASE("CMN symmetrization identity") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    UEA U(vir);

    SUBCASE("commuting equal arguments: both sides vanish") {
        std::vector<UEAElement> a(3, U.gen_elem(Gen::vir(-2)));
        Report r = cmn_identity_check(U, a);
        CHECK(r.all_pass());
    }
    SUBCASE("(L_-1, L_0, L_1)") {
        std::vector<UEAElement> a = {U.gen_elem(Gen::vir(-1)), U.gen_elem(Gen::vir(0)),
                                     U.gen_elem(Gen::vir(1))};
        CHECK(cmn_identity_check(U, a).all_pass());
    }
    SUBCASE("(e(-1), f(0), h(1)) in affine sl2") {
        AffineAlgebra g(StructureConstants::sl2(p));
        UEA Ug(g);
        std::vector<UEAElement> a = {Ug.gen_elem(Gen::affine(0, -1)),
                                     Ug.gen_elem(Gen::affine(1, 0)),
                                     Ug.gen_elem(Gen::affine(2, 1))};
        CHECK(cmn_identity_check(Ug, a).all_pass());
    }
    SUBCASE("p=5 random generator quintuples") {
        Prime p5(5);
        VirasoroAlgebra vir5(p5);
        UEA U5(vir5);
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<UEAElement> a;
            for (int i = 0; i < 5; ++i)
                a.push_back(U5.gen_elem(Gen::vir(static_cast<int64_t>(rng() % 7) - 3)));
            CHECK(cmn_identity_check(U5, a).all_pass());
        }
    }
    SUBCASE("wrong arity rejected") {
        std::vector<UEAElement> a(2, U.gen_elem(Gen::vir(0)));
        CHECK_THROWS_AS(cmn_identity_check(U, a), std::invalid_argument);
    }
}

TEST_CASE("CMN multiset identity") {
    Prime p(3);
    VirasoroAlgebra vir(p);
    UEA U(vir);

    SUBCASE("t=1, r=(p): p a^p = 0 on both sides") {
        CHECK(cmn_multiset_check(U, {U.gen_elem(Gen::vir(-2))}, {3}).all_pass());
    }
    SUBCASE("p=3, (L_-2, L_1), r=(2,1)") {
        CHECK(cmn_multiset_check(U, {U.gen_elem(Gen::vir(-2)), U.gen_elem(Gen::vir(1))},
                                 {2, 1})
                  .all_pass());
    }
    SUBCASE("p=5, sl2 (e(-1), h(0)), r=(4,1)") {
        Prime p5(5);
        AffineAlgebra g(StructureConstants::sl2(p5));
        UEA Ug(g);
        CHECK(cmn_multiset_check(Ug,
                                 {Ug.gen_elem(Gen::affine(0, -1)),
                                  Ug.gen_elem(Gen::affine(2, 0))},
                                 {4, 1})
                  .all_pass());
    }
    SUBCASE("bad multiplicities rejected") {
        CHECK_THROWS_AS(
            cmn_multiset_check(U, {U.gen_elem(Gen::vir(0))}, {2}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            cmn_multiset_check(U, {U.gen_elem(Gen::vir(0)), U.gen_elem(Gen::vir(1))},
                               {3, 0}),
            std::invalid_argument);
    }
}

TEST_CASE("restricted enveloping algebra u(sl2)") {
    Prime p(3);
    RestrictedUEA u(StructureConstants::sl2(p));

    SUBCASE("dimension p^3 = 27") {
        CHECK(u.dimension() == 27);
        CHECK(u.basis().size() == 27);
    }
    SUBCASE("e^p = 0, f^p = 0, h^p = h") {
        UEAElement e = u.gen_elem(0), f = u.gen_elem(1), h = u.gen_elem(2);
        UEAElement ep = u.one(), fp = u.one(), hp = u.one();
        for (int i = 0; i < 3; ++i) {
            ep = u.multiply(ep, e);
            fp = u.multiply(fp, f);
            hp = u.multiply(hp, h);
        }
        CHECK(ep.is_zero());
        CHECK(fp.is_zero());
        CHECK(hp == h);
    }
    SUBCASE("coordinates are a bijection on the basis") {
        auto basis = u.basis();
        for (size_t i = 0; i < basis.size(); ++i) {
            UEAElement x;
            x.add(basis[i], Fp::one(p));
            auto coords = u.coordinates(x);
            for (size_t j = 0; j < coords.size(); ++j)
                CHECK(coords[j].v == (i == j ? 1u : 0u));
        }
    }
    SUBCASE("associativity in u(sl2) on random triples") {
        std::mt19937 rng(55);
        auto rand_elem = [&] {
            UEAElement x = u.one();
            size_t len = 1 + rng() % 3;
            for (size_t i = 0; i < len; ++i)
                x = u.multiply(x, u.gen_elem(rng() % 3));
            return x;
        };
        for (int trial = 0; trial < 30; ++trial) {
            UEAElement a = rand_elem(), b = rand_elem(), c = rand_elem();
            CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
        }
    }
}
