#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "mva/fp.hpp"
#include "mva/report.hpp"

namespace mva {

/// A Lie generator: L_n / a_i(n) / the central element. `base` is the
/// base-algebra basis index (always 0 for Virasoro). The ordering is the
/// global PBW order: by mode index, then base index, with the central
/// element greatest.
struct Gen {
    static constexpr int32_t kCentral = -1;

    int32_t base = 0;
    int64_t n = 0;

    static Gen central() { return Gen{kCentral, 0}; }
    static Gen vir(int64_t n) { return Gen{0, n}; }
    static Gen affine(int32_t base, int64_t n) { return Gen{base, n}; }

    bool is_central() const { return base == kCentral; }
    int64_t degree() const { return is_central() ? 0 : -n; }

    auto key() const { return std::tuple(is_central() ? 1 : 0, n, base); }
    bool operator<(const Gen& o) const { return key() < o.key(); }
    bool operator==(const Gen& o) const { return base == o.base && n == o.n; }
    bool operator!=(const Gen& o) const { return !(*this == o); }
};

/// Finitely supported F_p-combination of generators.
class LieElement {
public:
    LieElement() = default;

    void add(Gen g, Fp c) {
        if (c.is_zero()) return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static LieElement single(Gen g, Fp c) {
        LieElement e;
        e.add(g, c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Gen, Fp>& terms() const { return terms_; }

    LieElement& operator+=(const LieElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }
    LieElement scaled(Fp c) const {
        LieElement r;
        for (const auto& [g, x] : terms_) r.add(g, x * c);
        return r;
    }
    bool operator==(const LieElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Gen, Fp> terms_;
};

/// Bracket table, bilinear form, and p-mapping for a finite-dimensional
/// restricted Lie algebra, validated eagerly at construction.
struct StructureConstants {
    Prime p;
    std::vector<std::string> names;
    // bracket[i][j]: [a_i, a_j] as (index, coeff) pairs
    std::vector<std::vector<std::vector<std::pair<size_t, Fp>>>> bracket;
    std::vector<std::vector<Fp>> form;                      // <a_i, a_j>
    std::vector<std::vector<std::pair<size_t, Fp>>> p_map;  // a_i^{[p]}

    size_t dim() const { return names.size(); }

    /// Throws std::invalid_argument describing the first violated axiom
    /// (antisymmetry, Jacobi, invariance of the form, or restrictedness of
    /// the p-mapping table).
    void validate() const;

    static StructureConstants sl2(const Prime& p);
    static StructureConstants from_json(const nlohmann::json& j, bool validate = true);
    nlohmann::json to_json() const;
};

/// Common interface of the Virasoro algebra and affine Lie algebras:
/// brackets, the p-mapping on generators, and the Hasse-derivative action.
class LieAlgebra {
public:
    virtual ~LieAlgebra() = default;

    const Prime& prime() const { return p_; }

    virtual LieElement bracket_gen(Gen a, Gen b) const = 0;
    virtual LieElement p_map_gen(Gen g) const = 0;
    virtual LieElement hasse_gen(uint64_t k, Gen g) const = 0;
    virtual std::string gen_name(Gen g) const = 0;
    virtual bool is_affine() const = 0;

    LieElement bracket(const LieElement& x, const LieElement& y) const;
    LieElement hasse(uint64_t k, const LieElement& x) const;
    /// (ad x)^e y
    LieElement ad_power(const LieElement& x, uint64_t e, const LieElement& y) const;

protected:
    explicit LieAlgebra(const Prime& p) : p_(p) {}
    Prime p_;
};

class VirasoroAlgebra final : public LieAlgebra {
public:
    explicit VirasoroAlgebra(const Prime& p)
        : LieAlgebra(p), half_(Fp(2, p).inverse()) {}

    LieElement bracket_gen(Gen a, Gen b) const override;
    LieElement p_map_gen(Gen g) const override;
    LieElement hasse_gen(uint64_t k, Gen g) const override;
    std::string gen_name(Gen g) const override;
    bool is_affine() const override { return false; }

private:
    Fp half_;
};

class AffineAlgebra final : public LieAlgebra {
public:
    explicit AffineAlgebra(StructureConstants sc)
        : LieAlgebra(sc.p), sc_(std::move(sc)) {}

    const StructureConstants& base() const { return sc_; }

    LieElement bracket_gen(Gen a, Gen b) const override;
    LieElement p_map_gen(Gen g) const override;
    LieElement hasse_gen(uint64_t k, Gen g) const override;
    std::string gen_name(Gen g) const override;
    bool is_affine() const override { return true; }

private:
    StructureConstants sc_;
};

/// Restricted-structure verification: axiom (i) on generator pairs from the
/// sample window, axiom (ii) for all scalars, axiom (iii) through the
/// s_i(a,b) expansion in the algebra extended by a polynomial indeterminate.
/// For the (infinite) Virasoro algebra the sample is the index window
/// [-window, window]; for an affine algebra it is all base generators at
/// loop degrees in the window.
Report verify_restricted_axioms(const LieAlgebra& alg, int64_t window);

/// B-module Lie algebra compatibility D^(k)[x,y] = sum [D^(k-i)x, D^(i)y]
/// on sampled generator pairs, plus the composition law
/// D^(m) D^(n) = binom(m+n,n) D^(m+n) checked through the action.
Report verify_b_module_lie(const LieAlgebra& alg, int64_t window, uint64_t kmax);

/// Appendix identities (A.1), (A.2) over the given ranges.
Report verify_appendix_identities(const Prime& p, int64_t mmin, int64_t mmax,
                                  int64_t nmin, int64_t nmax, uint64_t kmax);

/// Lucas-lemma checks: (i) binom(pn+k-1,k) = 0 for p not dividing k,
/// (ii) binom(pn+pk-1,pk) = binom(n+k-1,k), for 1 <= n <= nmax, 1 <= k <= kmax.
Report verify_lucas_lemma(const Prime& p, uint64_t nmax, uint64_t kmax);

}  // namespace mva
