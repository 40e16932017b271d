#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mva/lie.hpp"

namespace mva {

/// Normal-form PBW monomial: factors strictly increasing in the global
/// generator order (centrals greatest), exponents >= 1.
struct PBWMonomial {
    std::vector<std::pair<Gen, uint32_t>> factors;

    bool is_one() const { return factors.empty(); }
    int64_t degree() const {
        int64_t d = 0;
        for (const auto& [g, e] : factors) d += g.degree() * e;
        return d;
    }
    uint64_t length() const {
        uint64_t l = 0;
        for (const auto& [g, e] : factors) l += e;
        return l;
    }

    auto key() const {
        std::vector<std::tuple<int, int64_t, int32_t, uint32_t>> k;
        for (const auto& [g, e] : factors)
            k.emplace_back(g.is_central() ? 1 : 0, g.n, g.base, e);
        return k;
    }
    bool operator<(const PBWMonomial& o) const { return key() < o.key(); }
    bool operator==(const PBWMonomial& o) const { return factors == o.factors; }
};

/// F_p-combination of normal-form PBW monomials.
class UEAElement {
public:
    UEAElement() = default;

    void add(const PBWMonomial& m, Fp c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, Fp>& terms() const { return terms_; }

    UEAElement& operator+=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    UEAElement scaled(Fp c) const {
        UEAElement r;
        for (const auto& [m, x] : terms_) r.add(m, x * c);
        return r;
    }
    bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }

    /// Z-degree if homogeneous.
    std::optional<int64_t> degree() const {
        std::optional<int64_t> d;
        for (const auto& [m, c] : terms_) {
            if (!d) d = m.degree();
            else if (*d != m.degree()) return std::nullopt;
        }
        return d;
    }

private:
    std::map<PBWMonomial, Fp> terms_;
};

/// Universal enveloping algebra of a Virasoro or affine Lie algebra, with
/// PBW straightening. The central generator stays symbolic unless a scalar
/// value is supplied, in which case it is specialized on sight.
class UEA {
public:
    explicit UEA(const LieAlgebra& alg, std::optional<Fp> central_value = std::nullopt)
        : alg_(alg), central_(central_value) {}

    const LieAlgebra& algebra() const { return alg_; }
    const Prime& prime() const { return alg_.prime(); }
    std::optional<Fp> central_value() const { return central_; }

    UEAElement one() const {
        UEAElement u;
        u.add(PBWMonomial{}, Fp::one(prime()));
        return u;
    }
    UEAElement gen_elem(Gen g) const;
    UEAElement from_lie(const LieElement& x) const;

    /// u * g with u in normal form (right multiplication by a generator).
    UEAElement mul_gen(const UEAElement& u, Gen g) const;
    UEAElement multiply(const UEAElement& u, const UEAElement& v) const;
    UEAElement straighten(const std::vector<Gen>& word) const;
    UEAElement commutator(const UEAElement& u, const UEAElement& v) const;

    std::string describe(const UEAElement& u) const;

    struct CentralityResult {
        bool central = false;
        std::string witness;  // violating generator, when not central
    };
    /// Certifies [g, z] = 0 for every non-central generator with mode index
    /// in [-window, window] only.
    CentralityResult is_central(const UEAElement& z, int64_t window) const;

private:
    const LieAlgebra& alg_;
    std::optional<Fp> central_;
};

/// Full S_p symmetrization of a_1..a_p versus the sum over sigma(1)=1 of
/// left-nested commutators.
Report cmn_identity_check(const UEA& U, const std::vector<UEAElement>& a);

/// Multiset refinement over the maps T(r_1,...,r_t), sum r_i = p.
Report cmn_multiset_check(const UEA& U, const std::vector<UEAElement>& a,
                          const std::vector<uint32_t>& r);

/// Restricted enveloping algebra u(g) of a finite-dimensional restricted Lie
/// algebra: PBW basis with exponents < p, dimension p^dim g.
class RestrictedUEA {
public:
    explicit RestrictedUEA(StructureConstants sc);

    const StructureConstants& constants() const { return loop_.base(); }
    const Prime& prime() const { return loop_.prime(); }
    uint64_t dimension() const;

    UEAElement gen_elem(size_t base_index) const {
        return uea_.gen_elem(Gen::affine(static_cast<int32_t>(base_index), 0));
    }
    UEAElement one() const { return uea_.one(); }

    /// Rewrites x^p -> x^[p] factors to fixpoint (all exponents < p).
    UEAElement reduce(UEAElement u) const;
    UEAElement multiply(const UEAElement& u, const UEAElement& v) const;

    /// The p^dim monomial basis in lexicographic exponent order.
    std::vector<PBWMonomial> basis() const;
    /// Coordinates of a reduced element in the basis() order.
    std::vector<Fp> coordinates(const UEAElement& u) const;

private:
    // base algebra realized as loop-degree-zero modes; the cocycle vanishes
    // there, so products agree with U(g)
    AffineAlgebra loop_;
    UEA uea_;
};

}  // namespace mva
