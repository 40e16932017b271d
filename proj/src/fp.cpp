#include "mva/fp.hpp"

#include <gmpxx.h>

namespace mva {

Prime::Prime(uint32_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("Prime: need p >= 3");
    if (p % 2 == 0) throw std::invalid_argument("Prime: p must be odd");
    for (uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
}

Fp Fp::pow(uint64_t e) const {
    Prime pr(p);
    Fp r = Fp::one(pr);
    Fp b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fp Fp::inverse() const {
    if (v == 0) throw std::domain_error("Fp: division by zero");
    return pow(p - 2);
}

Fp fp_binomial(int64_t m, uint64_t k, const Prime& p) {
    // Falling factorial over Z, exact division by k!, then reduce.
    mpz_class num = 1;
    for (uint64_t i = 0; i < k; ++i) num *= mpz_class(static_cast<long>(m)) - static_cast<unsigned long>(i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class q = num / fact;
    mpz_class r = q % static_cast<unsigned long>(p.value());
    long rv = r.get_si();
    return Fp(rv, p);
}

Fp lucas_binomial(uint64_t m, uint64_t k, const Prime& p) {
    const uint64_t pp = p.value();
    Fp r = Fp::one(p);
    while (m > 0 || k > 0) {
        uint64_t md = m % pp, kd = k % pp;
        if (kd > md) return Fp::zero(p);
        // digit binomial, both arguments < p: plain falling-factorial mod p
        Fp d = Fp::one(p);
        for (uint64_t i = 0; i < kd; ++i)
            d = d * Fp(static_cast<int64_t>(md - i), p) / Fp(static_cast<int64_t>(i + 1), p);
        r *= d;
        m /= pp;
        k /= pp;
    }
    return r;
}

Fp delta_p_divides(int64_t m, const Prime& p) {
    return (m % static_cast<int64_t>(p.value()) == 0) ? Fp::one(p) : Fp::zero(p);
}

}  // namespace mva
