#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "mva/fp.hpp"

using namespace mva;

namespace {

// integer oracle: binom(m,k) over Z for small k, any sign of m
int64_t z_binom(int64_t m, uint64_t k) {
    int64_t num = 1, den = 1;
    for (uint64_t i = 0; i < k; ++i) {
        num *= m - static_cast<int64_t>(i);
        den *= static_cast<int64_t>(i + 1);
    }
    return num / den;
}

int64_t mod_p(int64_t x, uint32_t p) {
    int64_t r = x % static_cast<int64_t>(p);
    return r < 0 ? r + p : r;
}

}  // namespace

TEST_CASE("Prime rejects non-primes, evens, and p=2") {
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(2), std::invalid_argument);
    CHECK_THROWS_AS(Prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Prime(91), std::invalid_argument);  // 7 * 13
    CHECK(Prime(3).value() == 3);
    CHECK(Prime(101).value() == 101);
}

TEST_CASE("Fp arithmetic is canonical and exact") {
    Prime p(7);
    Fp a(10, p), b(-3, p);
    CHECK(a.v == 3);
    CHECK(b.v == 4);
    CHECK((a + b).is_zero());
    CHECK((a * b).v == 5);
    CHECK((-a).v == 4);
    CHECK((a - b).v == 6);
    for (uint32_t x = 1; x < 7; ++x) {
        Fp e(x, p);
        CHECK((e * e.inverse()).v == 1);
    }
    CHECK_THROWS_AS(Fp::zero(p).inverse(), std::domain_error);
    CHECK(Fp(3, p).pow(0).v == 1);
    CHECK(Fp(3, p).pow(6).v == 1);  // Fermat
}

TEST_CASE("mixed moduli are rejected") {
    Prime p3(3), p5(5);
    Fp a(1, p3), b(1, p5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("fp_binomial at negative upper argument") {
    Prime p3(3), p5(5);
    // binom(-2,3) = -4
    CHECK(fp_binomial(-2, 3, p3) == Fp(-4, p3));
    CHECK(fp_binomial(-2, 3, p3).v == 2);
    // binom(-1,j) = (-1)^j
    for (uint64_t j = 0; j <= 12; ++j)
        CHECK(fp_binomial(-1, j, p5) == Fp(j % 2 == 0 ? 1 : -1, p5));
    // binom(m,0) = 1, binom(0,k>0) = 0
    CHECK(fp_binomial(-17, 0, p5).v == 1);
    CHECK(fp_binomial(0, 4, p5).is_zero());
}

TEST_CASE("fp_binomial matches the integer oracle on a signed range") {
    Prime p(7);
    for (int64_t m = -12; m <= 12; ++m)
        for (uint64_t k = 0; k <= 8; ++k)
            CHECK(fp_binomial(m, k, p).v ==
                  static_cast<uint32_t>(mod_p(z_binom(m, k), 7)));
}

TEST_CASE("Pascal recurrence for all signs of m, k past p") {
    for (uint32_t pv : {3u, 5u, 7u}) {
        Prime p(pv);
        for (int64_t m = -10; m <= 10; ++m)
            for (uint64_t k = 1; k <= 12; ++k)
                CHECK(fp_binomial(m, k, p) ==
                      fp_binomial(m - 1, k, p) + fp_binomial(m - 1, k - 1, p));
    }
}

TEST_CASE("Vandermonde convolution mod p") {
    Prime p(5);
    for (int64_t m = -6; m <= 6; ++m)
        for (int64_t n = -6; n <= 6; ++n)
            for (uint64_t k = 0; k <= 7; ++k) {
                Fp s = Fp::zero(p);
                for (uint64_t i = 0; i <= k; ++i)
                    s += fp_binomial(m, k - i, p) * fp_binomial(n, i, p);
                CHECK(s == fp_binomial(m + n, k, p));
            }
}

TEST_CASE("lucas_binomial agrees with fp_binomial on [0,200] x [0,200]") {
    for (uint32_t pv : {3u, 5u, 7u}) {
        Prime p(pv);
        for (uint64_t m = 0; m <= 200; ++m)
            for (uint64_t k = 0; k <= 200; ++k) {
                if (lucas_binomial(m, k, p) != fp_binomial(static_cast<int64_t>(m), k, p)) {
                    CAPTURE(pv);
                    CAPTURE(m);
                    CAPTURE(k);
                    CHECK(lucas_binomial(m, k, p) ==
                          fp_binomial(static_cast<int64_t>(m), k, p));
                }
            }
        CHECK(true);
    }
}

TEST_CASE("delta_p_divides") {
    Prime p(3);
    CHECK(delta_p_divides(0, p).v == 1);
    CHECK(delta_p_divides(6, p).v == 1);
    CHECK(delta_p_divides(-9, p).v == 1);
    CHECK(delta_p_divides(2, p).is_zero());
    CHECK(delta_p_divides(-5, p).is_zero());
}
