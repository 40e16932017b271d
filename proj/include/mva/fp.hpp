#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mva {

/// Checked odd prime modulus. Everything in this library works over F_p
/// with p >= 3; p = 2 is rejected because 1/2 is needed in the Virasoro
/// cocycle.
class Prime {
public:
    explicit Prime(uint32_t p);
    uint32_t value() const { return p_; }
    bool operator==(const Prime& o) const { return p_ == o.p_; }
    bool operator!=(const Prime& o) const { return p_ != o.p_; }

private:
    uint32_t p_;
};

/// Element of F_p, canonical representative in [0, p). Arithmetic is exact;
/// mixing elements over different primes throws.
struct Fp {
    uint32_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(int64_t x, const Prime& pr) : p(pr.value()) {
        int64_t m = static_cast<int64_t>(p);
        int64_t r = x % m;
        if (r < 0) r += m;
        v = static_cast<uint32_t>(r);
    }

    static Fp zero(const Prime& pr) { return Fp(0, pr); }
    static Fp one(const Prime& pr) { return Fp(1, pr); }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        uint64_t s = static_cast<uint64_t>(a.v) + b.v;
        if (s >= a.p) s -= a.p;
        a.v = static_cast<uint32_t>(s);
        return a;
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        a.v = (a.v >= b.v) ? a.v - b.v : a.v + a.p - b.v;
        return a;
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        a.v = static_cast<uint32_t>((static_cast<uint64_t>(a.v) * b.v) % a.p);
        return a;
    }
    Fp operator-() const {
        Fp r = *this;
        if (r.v != 0) r.v = r.p - r.v;
        return r;
    }
    Fp& operator+=(Fp b) { *this = *this + b; return *this; }
    Fp& operator-=(Fp b) { *this = *this - b; return *this; }
    Fp& operator*=(Fp b) { *this = *this * b; return *this; }

    Fp inverse() const;
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp pow(uint64_t e) const;

    bool operator==(const Fp& o) const { check(o); return v == o.v; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    void check(const Fp& o) const {
        if (p != o.p)
            throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p) +
                                        " and " + std::to_string(o.p));
    }
};

/// binom(m, k) for any sign of m, computed in exact integer arithmetic and
/// reduced mod p afterwards. Division by k! happens over Z, so the result is
/// well defined even when p <= k.
Fp fp_binomial(int64_t m, uint64_t k, const Prime& p);

/// binom(m, k) for m, k >= 0 via the digitwise base-p product (Lucas).
Fp lucas_binomial(uint64_t m, uint64_t k, const Prime& p);

/// Kronecker-style indicator: 1 if p | m, else 0, as an element of F_p.
Fp delta_p_divides(int64_t m, const Prime& p);

}  // namespace mva
