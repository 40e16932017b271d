#include "mva/uea.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mva {

UEAElement UEA::gen_elem(Gen g) const {
    UEAElement u = one();
    return mul_gen(u, g);
}

UEAElement UEA::from_lie(const LieElement& x) const {
    UEAElement r;
    for (const auto& [g, c] : x.terms()) r += gen_elem(g).scaled(c);
    return r;
}

UEAElement UEA::mul_gen(const UEAElement& u, Gen g) const {
    if (g.is_central() && central_) return u.scaled(*central_);
    UEAElement out;
    for (const auto& [m, c] : u.terms()) {
        if (m.factors.empty() || m.factors.back().first < g) {
            PBWMonomial nm = m;
            nm.factors.emplace_back(g, 1);
            out.add(nm, c);
            continue;
        }
        if (m.factors.back().first == g) {
            PBWMonomial nm = m;
            ++nm.factors.back().second;
            out.add(nm, c);
            continue;
        }
        // last factor h > g: peel one h, commute, recurse.
        // m = m' h^e with h > g: m g = (m' h^{e-1} g) h + m' h^{e-1} [h, g]
        Gen h = m.factors.back().first;
        PBWMonomial mp = m;
        if (--mp.factors.back().second == 0) mp.factors.pop_back();
        UEAElement head;
        head.add(mp, c);
        out += mul_gen(mul_gen(head, g), h);
        LieElement br = alg_.bracket_gen(h, g);
        for (const auto& [bg, bc] : br.terms())
            out += mul_gen(head, bg).scaled(bc);
    }
    return out;
}

UEAElement UEA::multiply(const UEAElement& u, const UEAElement& v) const {
    UEAElement out;
    for (const auto& [m, c] : v.terms()) {
        UEAElement acc = u.scaled(c);
        for (const auto& [g, e] : m.factors)
            for (uint32_t i = 0; i < e; ++i) acc = mul_gen(acc, g);
        out += acc;
    }
    return out;
}

UEAElement UEA::straighten(const std::vector<Gen>& word) const {
    UEAElement acc = one();
    for (Gen g : word) acc = mul_gen(acc, g);
    return acc;
}

UEAElement UEA::commutator(const UEAElement& u, const UEAElement& v) const {
    UEAElement r = multiply(u, v);
    r -= multiply(v, u);
    return r;
}

std::string UEA::describe(const UEAElement& u) const {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.v;
        for (const auto& [g, e] : m.factors) {
            os << "*" << alg_.gen_name(g);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

UEA::CentralityResult UEA::is_central(const UEAElement& z, int64_t window) const {
    std::vector<Gen> gens;
    if (alg_.is_affine()) {
        const auto& sc = static_cast<const AffineAlgebra&>(alg_).base();
        for (int64_t s = -window; s <= window; ++s)
            for (size_t i = 0; i < sc.dim(); ++i)
                gens.push_back(Gen::affine(static_cast<int32_t>(i), s));
    } else {
        for (int64_t s = -window; s <= window; ++s) gens.push_back(Gen::vir(s));
    }
    for (Gen g : gens) {
        UEAElement c = commutator(gen_elem(g), z);
        if (!c.is_zero())
            return {false, "[" + alg_.gen_name(g) + ", z] = " + describe(c)};
    }
    return {true, ""};
}

Report cmn_identity_check(const UEA& U, const std::vector<UEAElement>& a) {
    const uint32_t p = U.prime().value();
    Report rep;
    rep.suite = "cmn";
    rep.params = {{"p", p}, {"arity", a.size()}};
    if (a.size() != p)
        throw std::invalid_argument("cmn_identity_check: need exactly p elements");

    std::vector<size_t> perm(p);
    for (size_t i = 0; i < p; ++i) perm[i] = i;
    UEAElement lhs, rhs;
    do {
        UEAElement prod = a[perm[0]];
        for (size_t i = 1; i < p; ++i) prod = U.multiply(prod, a[perm[i]]);
        lhs += prod;
        if (perm[0] == 0) {
            UEAElement nest = a[0];
            for (size_t i = 1; i < p; ++i) nest = U.commutator(nest, a[perm[i]]);
            rhs += nest;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    bool ok = lhs == rhs;
    std::optional<std::string> wit;
    if (!ok)
        wit = "symmetrization = " + U.describe(lhs) + " but nested brackets = " +
              U.describe(rhs);
    rep.add("symmetrization_equals_nested_brackets", {}, ok, wit);
    return rep;
}

Report cmn_multiset_check(const UEA& U, const std::vector<UEAElement>& a,
                          const std::vector<uint32_t>& r) {
    const uint32_t p = U.prime().value();
    Report rep;
    rep.suite = "cmn_multiset";
    rep.params = {{"p", p}, {"t", a.size()}, {"r", r}};
    if (a.size() != r.size() || a.empty())
        throw std::invalid_argument("cmn_multiset_check: need one multiplicity per element");
    uint64_t total = 0;
    for (uint32_t x : r) {
        if (x == 0) throw std::invalid_argument("cmn_multiset_check: multiplicities must be positive");
        total += x;
    }
    if (total != p)
        throw std::invalid_argument("cmn_multiset_check: multiplicities must sum to p");

    // enumerate T(r_1..r_t) as multiset permutations of (1^{r_1} ... t^{r_t})
    std::vector<size_t> seq;
    for (size_t i = 0; i < r.size(); ++i)
        for (uint32_t j = 0; j < r[i]; ++j) seq.push_back(i);
    std::sort(seq.begin(), seq.end());

    UEAElement lhs, rhs;
    do {
        UEAElement prod = a[seq[0]];
        for (size_t i = 1; i < p; ++i) prod = U.multiply(prod, a[seq[i]]);
        lhs += prod;
        if (seq[0] == 0) {
            UEAElement nest = a[0];
            for (size_t i = 1; i < p; ++i) nest = U.commutator(nest, a[seq[i]]);
            rhs += nest;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    lhs = lhs.scaled(Fp(static_cast<int64_t>(r[0]), U.prime()));

    bool ok = lhs == rhs;
    std::optional<std::string> wit;
    if (!ok)
        wit = "r_1 * sum = " + U.describe(lhs) + " but nested sum = " + U.describe(rhs);
    rep.add("multiset_symmetrization_equals_nested_brackets", {}, ok, wit);
    return rep;
}

RestrictedUEA::RestrictedUEA(StructureConstants sc)
    : loop_(std::move(sc)), uea_(loop_) {}

uint64_t RestrictedUEA::dimension() const {
    uint64_t d = 1;
    for (size_t i = 0; i < constants().dim(); ++i) d *= prime().value();
    return d;
}

UEAElement RestrictedUEA::reduce(UEAElement u) const {
    const uint32_t p = prime().value();
    for (;;) {
        // find a monomial with some exponent >= p
        const PBWMonomial* target = nullptr;
        size_t pos = 0;
        for (const auto& [m, c] : u.terms()) {
            for (size_t i = 0; i < m.factors.size(); ++i)
                if (m.factors[i].second >= p) {
                    target = &m;
                    pos = i;
                    break;
                }
            if (target) break;
        }
        if (!target) return u;
        PBWMonomial m = *target;
        Fp c = u.terms().at(m);
        u.add(m, -c);
        // m = A g^e B with e >= p; rewrite g^p -> g^[p]
        Gen g = m.factors[pos].first;
        PBWMonomial A, B;
        A.factors.assign(m.factors.begin(), m.factors.begin() + pos);
        B.factors.assign(m.factors.begin() + pos + 1, m.factors.end());
        uint32_t e = m.factors[pos].second;
        if (e > p) A.factors.emplace_back(g, e - p);
        UEAElement head;
        head.add(A, c);
        head = uea_.multiply(head, uea_.from_lie(loop_.p_map_gen(g)));
        UEAElement tail;
        tail.add(B, Fp::one(prime()));
        u += uea_.multiply(head, tail);
    }
}

UEAElement RestrictedUEA::multiply(const UEAElement& u, const UEAElement& v) const {
    return reduce(uea_.multiply(u, v));
}

std::vector<PBWMonomial> RestrictedUEA::basis() const {
    const size_t d = constants().dim();
    const uint32_t p = prime().value();
    std::vector<PBWMonomial> out;
    std::vector<uint32_t> exp(d, 0);
    for (;;) {
        PBWMonomial m;
        for (size_t i = 0; i < d; ++i)
            if (exp[i] > 0) m.factors.emplace_back(Gen::affine(static_cast<int32_t>(i), 0), exp[i]);
        out.push_back(m);
        size_t i = 0;
        while (i < d && exp[i] == p - 1) exp[i++] = 0;
        if (i == d) break;
        ++exp[i];
    }
    return out;
}

std::vector<Fp> RestrictedUEA::coordinates(const UEAElement& u) const {
    const size_t d = constants().dim();
    const uint32_t p = prime().value();
    std::vector<Fp> out(dimension(), Fp::zero(prime()));
    for (const auto& [m, c] : u.terms()) {
        uint64_t idx = 0;
        for (const auto& [g, e] : m.factors) {
            if (g.is_central() || g.n != 0 || e >= p)
                throw std::invalid_argument("coordinates: element not reduced");
            uint64_t radix = 1;
            for (int32_t i = 0; i < g.base; ++i) radix *= p;
            idx += radix * e;
        }
        (void)d;
        out[idx] += c;
    }
    return out;
}

}  // namespace mva
