#include "mva/zhu.hpp"

#include <random>
#include <stdexcept>

namespace mva {

namespace {

Fp sign(int64_t e, const Prime& p) {
    return (e % 2 == 0) ? Fp::one(p) : -Fp::one(p);
}

ModuleVector term_unit(const ModTerm& t, const Prime& p) {
    ModuleVector v;
    v.add(t, Fp::one(p));
    return v;
}

}  // namespace

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

Poly poly_add(const Poly& a, const Poly& b, const Prime& p) {
    Poly r(std::max(a.size(), b.size()), Fp::zero(p));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b, const Prime& p) {
    Poly r(std::max(a.size(), b.size()), Fp::zero(p));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b, const Prime& p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Fp::zero(p));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, Fp c) {
    Poly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(x * c);
    return poly_trim(std::move(r));
}

bool poly_eq(const Poly& a, const Poly& b) { return poly_trim(a) == poly_trim(b); }

Poly poly_mod_frobenius(Poly f, const Prime& p) {
    const size_t pv = p.value();
    while (f.size() > pv) {
        size_t k = f.size() - 1;
        f[k - pv + 1] += f[k];
        f.pop_back();
    }
    return poly_trim(std::move(f));
}

std::string poly_str(const Poly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(f[i].v);
        if (i >= 1) s += "*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

ModuleVector star(const ModeEngine& E, const ModuleVector& a, const ModuleVector& b) {
    const Prime& p = E.prime();
    ModuleVector r;
    for (const auto& [t, c] : a.terms()) {
        const int64_t da = t.degree();
        ModuleVector ta = term_unit(t, p).scaled(c);
        for (int64_t i = 0; i <= da; ++i) {
            Fp bc = fp_binomial(da, static_cast<uint64_t>(i), p);
            if (bc.is_zero()) continue;
            r += E.mode_act(ta, i - 1, b).scaled(bc);
        }
    }
    return r;
}

ModuleVector circ(const ModeEngine& E, const ModuleVector& a, int64_t n,
                  const ModuleVector& b) {
    if (n < 0) throw std::invalid_argument("circ: n must be a natural number");
    const Prime& p = E.prime();
    ModuleVector r;
    for (const auto& [t, c] : a.terms()) {
        const int64_t da = t.degree();
        ModuleVector ta = term_unit(t, p).scaled(c);
        for (int64_t i = 0; i <= da; ++i) {
            Fp bc = fp_binomial(da, static_cast<uint64_t>(i), p);
            if (bc.is_zero()) continue;
            r += E.mode_act(ta, i - n - 2, b).scaled(bc);
        }
    }
    return r;
}

ModuleVector resum(const ModeEngine& E, const OVCertificate& cert) {
    ModuleVector r;
    for (const auto& t : cert) r += circ(E, t.a, t.n, t.b).scaled(t.coeff);
    return r;
}

VirReduction reduce_vir(const ModeEngine& E, const ModuleVector& v) {
    const Module& M = E.module();
    const Prime& p = E.prime();
    if (M.algebra().is_affine() || M.kind() != Module::Kind::VacuumVir)
        throw std::invalid_argument("reduce_vir: requires a Virasoro vacuum module");

    ModuleVector omega = M.act_gen(Gen::vir(-2), M.hw_vector());
    // hat-basis powers (L(-2)+L(-1))^k 1; top term of ek[k] is L(-2)^k 1
    std::vector<ModuleVector> ek = {M.hw_vector()};
    auto ensure_ek = [&](size_t k) {
        while (ek.size() <= k) {
            ModuleVector next = M.act_gen(Gen::vir(-2), ek.back());
            next += M.act_gen(Gen::vir(-1), ek.back());
            ek.push_back(next);
        }
    };

    Poly f;
    OVCertificate cert;
    ModuleVector cur = v;
    // invariant: v = cur + sum_k f[k] ek[k] + resum(cert)
    while (!cur.is_zero()) {
        auto it = cur.terms().begin();
        for (auto j = cur.terms().begin(); j != cur.terms().end(); ++j)
            if (j->first.degree() > it->first.degree()) it = j;
        const ModTerm t = it->first;
        const Fp c = it->second;
        cur.add(t, -c);
        if (t.mono.is_one()) {
            if (f.empty()) f.resize(1, Fp::zero(p));
            f[0] += c;
            continue;
        }
        const Gen lead = t.mono.factors.front().first;
        const int64_t n = -lead.n;
        if (n >= 3) {
            PBWMonomial tail = t.mono;
            if (tail.factors.front().second == 1)
                tail.factors.erase(tail.factors.begin());
            else
                tail.factors.front().second -= 1;
            ModuleVector u = term_unit(ModTerm{tail, 0}, p);
            // L(-n)u = omega circ_{n-3} u - 2 L(-n+1)u - L(-n+2)u
            cert.push_back({omega, n - 3, u, c});
            cur -= M.act_gen(Gen::vir(-n + 1), u).scaled(c * Fp(2, p));
            cur -= M.act_gen(Gen::vir(-n + 2), u).scaled(c);
        } else {
            // the monomial is L(-2)^k 1; swap it for the hat-basis power
            const size_t k = t.mono.factors.front().second;
            ensure_ek(k);
            if (f.size() <= k) f.resize(k + 1, Fp::zero(p));
            f[k] += c;
            ModuleVector rest = ek[k];
            rest.add(t, -Fp::one(p));
            cur -= rest.scaled(c);
        }
    }
    ModuleVector hat;
    for (size_t k = 0; k < f.size(); ++k) {
        if (f[k].is_zero()) continue;
        ensure_ek(k);
        hat += ek[k].scaled(f[k]);
    }
    return {poly_trim(std::move(f)), std::move(cert), std::move(hat)};
}

AffineReduction reduce_affine(const ModeEngine& E, const ModuleVector& v) {
    const Module& M = E.module();
    const Prime& p = E.prime();
    if (!M.algebra().is_affine() || M.kind() != Module::Kind::VacuumAffine)
        throw std::invalid_argument("reduce_affine: requires an affine vacuum module");

    OVCertificate cert;
    ModuleVector cur = v;
    // invariant: v = cur + resum(cert); rewrite a(-n) -> -a(-n+1) for n >= 2
    // through the certificate a circ_{n-2} u = a(-n)u + a(-n+1)u
    for (;;) {
        const ModTerm* deep = nullptr;
        Fp c = Fp::zero(p);
        for (const auto& [t, coeff] : cur.terms()) {
            if (t.mono.is_one() || t.mono.factors.front().first.n == -1) continue;
            if (!deep || t.degree() > deep->degree()) {
                deep = &t;
                c = coeff;
            }
        }
        if (!deep) break;
        const ModTerm t = *deep;
        const Gen lead = t.mono.factors.front().first;
        const int64_t n = -lead.n;
        PBWMonomial tail = t.mono;
        if (tail.factors.front().second == 1)
            tail.factors.erase(tail.factors.begin());
        else
            tail.factors.front().second -= 1;
        ModuleVector u = term_unit(ModTerm{tail, 0}, p);
        ModuleVector a = M.act_gen(Gen::affine(lead.base, -1), M.hw_vector());
        cert.push_back({a, n - 2, u, c});
        cur.add(t, -c);
        cur -= M.act_gen(Gen::affine(lead.base, -n + 1), u).scaled(c);
    }

    // image of a stack b1(-1)...bk(-1) 1 is bk ... b1 under [a(-1)w] = [w][a]
    UEA U(M.algebra());
    UEAElement image;
    for (const auto& [t, c] : cur.terms()) {
        UEAElement img = U.one();
        for (auto it = t.mono.factors.rbegin(); it != t.mono.factors.rend(); ++it)
            for (uint32_t i = 0; i < it->second; ++i)
                img = U.mul_gen(img, Gen::affine(it->first.base, 0));
        image += img.scaled(c);
    }
    return {std::move(image), std::move(cert), std::move(cur)};
}

Report verify_zhu_vir(const Prime& p, Fp c, uint64_t nmax, uint64_t seed) {
    Report rep;
    rep.suite = "zhu_vir";
    rep.params = {{"p", p.value()}, {"c", c.v}, {"nmax", nmax}, {"seed", seed}};
    const uint32_t pv = p.value();
    const uint64_t N = nmax * pv + 6;
    VirasoroAlgebra vir(p);
    Module V = Module::vacuum(vir, {N, c});
    ModeEngine E(V);
    std::mt19937_64 rng(seed);

    auto pcenter_gen = [&](int64_t n) {
        ModuleVector g = V.hw_vector();
        for (uint32_t i = 0; i < pv; ++i) g = V.act_gen(Gen::vir(-n), g);
        if (n % pv == 0) g -= V.act_gen(Gen::vir(-n * pv), V.hw_vector());
        return g;
    };
    auto exact = [&](const ModuleVector& v, const VirReduction& r) {
        ModuleVector d = v;
        d -= r.hat;
        d -= resum(E, r.cert);
        return d.is_zero();
    };

    Poly frob = {Fp::zero(p), -Fp::one(p)};  // x^p - x
    frob.resize(pv + 1, Fp::zero(p));
    frob[pv] = Fp::one(p);

    for (int64_t n = 2; n <= static_cast<int64_t>(nmax); ++n) {
        ModuleVector g = pcenter_gen(n);
        VirReduction r = reduce_vir(E, g);
        Poly expect = poly_scale(frob, sign(pv * n, p) * Fp(n - 1, p));
        bool ok = poly_eq(r.poly, expect) && exact(g, r);
        rep.add("pcenter_generator_n" + std::to_string(n), {{"n", n}}, ok,
                ok ? std::nullopt
                   : std::optional<std::string>("got " + poly_str(r.poly) +
                                                ", expected " + poly_str(expect)));
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 10; ++trial) {
            int64_t n = 2 + static_cast<int64_t>(nmax > 2 ? rng() % (nmax - 1) : 0);
            uint64_t d = rng() % 5;
            if (V.dim(d) == 0) d = 0;
            const auto& bas = V.basis(d);
            ModuleVector u = term_unit(bas[rng() % bas.size()], p);
            ModuleVector w = u;
            for (uint32_t i = 0; i < pv; ++i) w = V.act_gen(Gen::vir(-n), w);
            if (n % pv == 0) w -= V.act_gen(Gen::vir(-n * pv), u);
            VirReduction r = reduce_vir(E, w);
            if (!poly_mod_frobenius(r.poly, p).empty() || !exact(w, r)) {
                ok = false;
                wit = "trial " + std::to_string(trial) + ": " + poly_str(r.poly);
                break;
            }
        }
        rep.add("ideal_images_in_frobenius_ideal", {{"trials", 10}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        auto red = [&](const Poly& f) { return poly_mod_frobenius(f, p); };
        std::vector<Poly> bas;
        for (uint32_t i = 0; i < pv; ++i) {
            Poly xi(i + 1, Fp::zero(p));
            xi[i] = Fp::one(p);
            bas.push_back(xi);
        }
        for (const auto& a : bas)
            for (const auto& b : bas) {
                if (!poly_eq(red(poly_mul(a, b, p)), red(poly_mul(b, a, p)))) ok = false;
                if (!poly_eq(red(poly_mul(a, bas[0], p)), red(a))) ok = false;
                for (const auto& d : bas)
                    if (!poly_eq(red(poly_mul(poly_mul(a, b, p), d, p)),
                                 red(poly_mul(a, poly_mul(b, d, p), p))))
                        ok = false;
            }
        if (!ok) wit = "algebra axiom violated in F[x]/(x^p - x)";
        rep.add("quotient_algebra_axioms", {}, ok, wit);
    }

    {
        ModuleVector omega = V.act_gen(Gen::vir(-2), V.hw_vector());
        Poly x = {Fp::zero(p), Fp::one(p)};
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 20; ++trial) {
            uint64_t d = rng() % 7;
            if (V.dim(d) == 0) d = 2;
            const auto& bas = V.basis(d);
            ModuleVector v = term_unit(bas[rng() % bas.size()], p);
            VirReduction rv = reduce_vir(E, v);
            ModuleVector sv = star(E, omega, v);
            VirReduction rs = reduce_vir(E, sv);
            if (!poly_eq(rs.poly, poly_mul(x, rv.poly, p)) || !exact(v, rv) ||
                !exact(sv, rs)) {
                ok = false;
                wit = "trial " + std::to_string(trial) + ": " + V.describe(v);
                break;
            }
        }
        rep.add("star_compatibility", {{"trials", 20}}, ok, wit);
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (uint64_t d : {2u, 4u, 5u})
            for (size_t i = 0; i < V.dim(d) && ok; ++i)
                for (uint64_t k = 0; k <= 3 && ok; ++k) {
                    ModuleVector v = term_unit(V.basis(d)[i], p);
                    VirReduction rv = reduce_vir(E, v);
                    VirReduction rd = reduce_vir(E, E.d_operator(k, v));
                    Fp bc = fp_binomial(-static_cast<int64_t>(d), k, p);
                    if (!poly_eq(rd.poly, poly_scale(rv.poly, bc))) {
                        ok = false;
                        wit = "d = " + std::to_string(d) + ", k = " + std::to_string(k);
                    }
                }
        rep.add("d_reduction", {}, ok, wit);
    }
    return rep;
}

Report verify_zhu_affine(const StructureConstants& sc, Fp level, uint64_t nmax,
                         uint64_t seed) {
    const Prime p = sc.p;
    Report rep;
    rep.suite = "zhu_affine";
    rep.params = {{"p", p.value()}, {"level", level.v}, {"nmax", nmax}, {"seed", seed}};
    const uint32_t pv = p.value();
    const uint64_t N = nmax * pv + 4;
    AffineAlgebra g(sc);
    Module V = Module::vacuum(g, {N, level});
    ModeEngine E(V);
    UEA U(g);
    RestrictedUEA R(sc);
    std::mt19937_64 rng(seed);

    auto pmap_elem = [&](size_t i, int64_t mode) {
        LieElement x;
        for (const auto& [j, coeff] : sc.p_map[i])
            x.add(Gen::affine(static_cast<int32_t>(j), mode), coeff);
        return x;
    };
    auto exact = [&](const ModuleVector& v, const AffineReduction& r) {
        ModuleVector d = v;
        d -= r.rep;
        d -= resum(E, r.cert);
        return d.is_zero();
    };

    for (size_t i = 0; i < sc.dim(); ++i) {
        UEAElement apow = U.one();
        for (uint32_t k = 0; k < pv; ++k)
            apow = U.mul_gen(apow, Gen::affine(static_cast<int32_t>(i), 0));
        UEAElement pimage = U.from_lie(pmap_elem(i, 0));
        for (int64_t n = 1; n <= static_cast<int64_t>(nmax); ++n) {
            ModuleVector gen = V.hw_vector();
            for (uint32_t k = 0; k < pv; ++k)
                gen = V.act_gen(Gen::affine(static_cast<int32_t>(i), -n), gen);
            gen -= V.act_lie(pmap_elem(i, -n * pv), V.hw_vector());
            AffineReduction r = reduce_affine(E, gen);
            UEAElement expect = apow;
            expect -= pimage;
            expect = expect.scaled(sign(n - 1, p));
            bool ok = r.image == expect && exact(gen, r);
            bool killed = R.reduce(r.image).is_zero();
            rep.add("pcenter_generator_" + sc.names[i] + "_n" + std::to_string(n),
                    {{"n", n}}, ok && killed,
                    (ok && killed)
                        ? std::nullopt
                        : std::optional<std::string>("got " + U.describe(r.image)));
        }
    }

    {
        bool ok = true;
        std::optional<std::string> wit;
        for (int trial = 0; trial < 15; ++trial) {
            auto rand_vec = [&]() {
                uint64_t d = 1 + rng() % 3;
                const auto& bas = V.basis(d);
                return term_unit(bas[rng() % bas.size()], p);
            };
            ModuleVector u = rand_vec(), v = rand_vec();
            AffineReduction ru = reduce_affine(E, u);
            AffineReduction rv = reduce_affine(E, v);
            ModuleVector sv = star(E, u, v);
            AffineReduction rs = reduce_affine(E, sv);
            if (!(rs.image == U.multiply(ru.image, rv.image)) || !exact(u, ru) ||
                !exact(v, rv) || !exact(sv, rs)) {
                ok = false;
                wit = "trial " + std::to_string(trial);
                break;
            }
        }
        rep.add("star_multiplicativity", {{"trials", 15}}, ok, wit);
    }
    return rep;
}

Report omega_w_action_check_vir(const QuotientModule& W, Fp lambda) {
    const Prime& p = W.prime();
    Report rep;
    rep.suite = "omega_action_vir";
    rep.params = {{"p", p.value()}, {"lambda", lambda.v}};
    bool dim_ok = W.dim(0) == 1 && W.ambient().dim(0) == 1;
    rep.add("degree_zero_dim", {}, dim_ok,
            dim_ok ? std::nullopt : std::optional<std::string>("W(0) is not a line"));
    if (!dim_ok) return rep;

    FpVec unit = {Fp::one(p)};
    bool in_omega = omega_membership(W, 0, unit);
    rep.add("W0_in_Omega", {}, in_omega,
            in_omega ? std::nullopt
                     : std::optional<std::string>("W(0) not annihilated by L(1), L(2)"));
    FpVec img = W.act_coords(Gen::vir(0), 0, unit);
    bool eig = img.size() == 1 && img[0] == lambda;
    rep.add("omega_acts_by_lambda", {}, eig,
            eig ? std::nullopt
                : std::optional<std::string>("L(0) eigenvalue mismatch"));
    return rep;
}

Report omega_w_action_check_affine(const QuotientModule& W,
                                   const std::vector<std::vector<FpVec>>& rho) {
    const Prime& p = W.prime();
    Report rep;
    rep.suite = "omega_action_affine";
    rep.params = {{"p", p.value()}};
    const size_t hw = rho.empty() ? 1 : rho[0].size();
    bool dim_ok = W.dim(0) == hw && W.ambient().dim(0) == hw;
    rep.add("degree_zero_dim", {{"dim", hw}}, dim_ok,
            dim_ok ? std::nullopt : std::optional<std::string>("W(0) dimension mismatch"));
    if (!dim_ok) return rep;

    bool in_omega = true;
    for (size_t j = 0; j < hw && in_omega; ++j) {
        FpVec unit = zero_vec(hw, p);
        unit[j] = Fp::one(p);
        in_omega = omega_membership(W, 0, unit);
    }
    rep.add("W0_in_Omega", {}, in_omega,
            in_omega ? std::nullopt
                     : std::optional<std::string>("W(0) not annihilated by a(1), a(2)"));

    bool act_ok = true;
    std::optional<std::string> wit;
    for (size_t i = 0; i < rho.size() && act_ok; ++i)
        for (size_t j = 0; j < hw && act_ok; ++j) {
            FpVec unit = zero_vec(hw, p);
            unit[j] = Fp::one(p);
            FpVec img = W.act_coords(Gen::affine(static_cast<int32_t>(i), 0), 0, unit);
            FpVec expect = zero_vec(hw, p);
            for (size_t r = 0; r < hw; ++r) expect[r] = rho[i][r][j];
            if (img != expect) {
                act_ok = false;
                wit = "generator " + std::to_string(i) + " on hw vector " +
                      std::to_string(j);
            }
        }
    rep.add("a_acts_as_rho", {}, act_ok, wit);
    return rep;
}

Report verify_singular_vectors_sl2(const Prime& p, uint64_t level) {
    Report rep;
    rep.suite = "singular_vectors_sl2";
    rep.params = {{"p", p.value()}, {"level", level}};
    AffineAlgebra g(StructureConstants::sl2(p));
    const uint64_t N = level + 3;
    Module V = Module::vacuum(g, {N, Fp(static_cast<int64_t>(level), p)});

    ModuleVector v = V.hw_vector();
    for (uint64_t k = 0; k <= level; ++k) v = V.act_gen(Gen::affine(0, -1), v);
    rep.add("nonzero_in_vacuum", {}, !v.is_zero(),
            v.is_zero() ? std::optional<std::string>("e(-1)^{l+1} 1 vanished")
                        : std::nullopt);

    bool e0 = V.act_gen(Gen::affine(0, 0), v).is_zero();
    rep.add("killed_by_e0", {}, e0,
            e0 ? std::nullopt : std::optional<std::string>("e(0) image nonzero"));
    bool f1 = V.act_gen(Gen::affine(1, 1), v).is_zero();
    rep.add("killed_by_f1", {}, f1,
            f1 ? std::nullopt : std::optional<std::string>("f(1) image nonzero"));

    GradedSubspace rad = maximal_graded_submodule(V);
    bool in_rad = rad.contains(V, v);
    rep.add("in_radical", {{"degree", level + 1}}, in_rad,
            in_rad ? std::nullopt
                   : std::optional<std::string>("not in the maximal graded submodule"));
    return rep;
}

Report classify_irreducibles_u_sl2(const Prime& p) {
    Report rep;
    rep.suite = "classify_u_sl2";
    rep.params = {{"p", p.value()}};
    const uint32_t pv = p.value();
    RestrictedUEA R(StructureConstants::sl2(p));
    const auto basis = R.basis();
    const size_t D = basis.size();

    // left-multiplication columns in u(sl2) coordinates
    std::vector<std::vector<FpVec>> lcols(3);
    std::vector<UEAElement> gens;
    for (int32_t gidx = 0; gidx < 3; ++gidx) gens.push_back(R.gen_elem(gidx));
    for (int32_t gidx = 0; gidx < 3; ++gidx) {
        lcols[gidx].reserve(D);
        for (const auto& m : basis) {
            UEAElement me;
            me.add(m, Fp::one(p));
            lcols[gidx].push_back(R.coordinates(R.multiply(gens[gidx], me)));
        }
    }
    auto lmul = [&](int32_t gidx, const FpVec& x) {
        FpVec y = zero_vec(D, p);
        for (size_t j = 0; j < D; ++j) {
            if (x[j].is_zero()) continue;
            const FpVec& col = lcols[gidx][j];
            for (size_t i = 0; i < D; ++i) y[i] += col[i] * x[j];
        }
        return y;
    };

    std::vector<std::vector<size_t>> spectra;
    for (uint32_t lambda = 0; lambda < pv; ++lambda) {
        // baby Verma Z(lambda) = u(sl2) / (left ideal of e and h - lambda)
        RowSpan I(D, p);
        for (const auto& m : basis) {
            UEAElement me;
            me.add(m, Fp::one(p));
            I.insert(R.coordinates(R.multiply(me, gens[0])));
            UEAElement hl = gens[2];
            hl.add(PBWMonomial{}, Fp(-static_cast<int64_t>(lambda), p));
            I.insert(R.coordinates(R.multiply(me, hl)));
        }
        const size_t dimZ = D - I.rank();
        rep.add("baby_verma_dim_lambda" + std::to_string(lambda),
                {{"dim", dimZ}}, dimZ == pv,
                dimZ == pv ? std::nullopt
                           : std::optional<std::string>("dim " + std::to_string(dimZ)));
        if (dimZ != pv) continue;

        // Z coordinates are the free columns of I (canonical representatives)
        const auto freeI = I.free_columns();
        auto to_z = [&](const FpVec& amb) {
            FpVec z(dimZ, Fp::zero(p));
            for (size_t j = 0; j < dimZ; ++j) z[j] = amb[freeI[j]];
            return z;
        };
        std::vector<std::vector<FpVec>> az(3);
        for (int32_t gidx = 0; gidx < 3; ++gidx)
            for (size_t j = 0; j < dimZ; ++j) {
                FpVec unit = zero_vec(D, p);
                unit[freeI[j]] = Fp::one(p);
                az[gidx].push_back(to_z(I.reduce(lmul(gidx, unit))));
            }
        auto zmul = [&](int32_t gidx, const FpVec& x) {
            FpVec y = zero_vec(dimZ, p);
            for (size_t j = 0; j < dimZ; ++j) {
                if (x[j].is_zero()) continue;
                for (size_t i = 0; i < dimZ; ++i) y[i] += az[gidx][j][i] * x[j];
            }
            return y;
        };
        auto closure = [&](const RowSpan& base, const FpVec& seed) {
            RowSpan S = base;
            std::vector<FpVec> work;
            if (S.insert(seed)) work.push_back(seed);
            while (!work.empty()) {
                FpVec x = std::move(work.back());
                work.pop_back();
                for (int32_t gidx = 0; gidx < 3; ++gidx) {
                    FpVec y = zmul(gidx, x);
                    if (S.insert(y)) work.push_back(y);
                }
            }
            return S;
        };
        auto each_nonzero = [&](const RowSpan& mod, auto&& fn) {
            const auto fc = mod.free_columns();
            const size_t k = fc.size();
            std::vector<uint32_t> tup(k, 0);
            for (;;) {
                size_t i = 0;
                while (i < k && tup[i] == pv - 1) tup[i++] = 0;
                if (i == k) break;
                ++tup[i];
                FpVec x = zero_vec(dimZ, p);
                for (size_t j = 0; j < k; ++j) x[fc[j]] = Fp(tup[j], p);
                if (!fn(mod.reduce(std::move(x)))) return false;
            }
            return true;
        };

        // maximal submodule: sum of every cyclic submodule that is proper
        RowSpan Jz(dimZ, p);
        RowSpan empty(dimZ, p);
        each_nonzero(empty, [&](FpVec x) {
            RowSpan S = closure(empty, x);
            if (S.rank() < dimZ)
                for (const auto& row : S.rows()) Jz.insert(row);
            return true;
        });
        const size_t dimL = dimZ - Jz.rank();
        rep.add("dim_L_lambda" + std::to_string(lambda), {{"dim", dimL}},
                dimL == lambda + 1,
                dimL == lambda + 1
                    ? std::nullopt
                    : std::optional<std::string>("dim " + std::to_string(dimL)));

        // exhaustive irreducibility: every nonzero vector of L is cyclic
        bool irr = each_nonzero(Jz, [&](FpVec x) {
            if (is_zero_vec(x)) return true;  // lies in the submodule
            return closure(Jz, x).rank() == dimZ;
        });
        rep.add("irreducible_lambda" + std::to_string(lambda), {}, irr,
                irr ? std::nullopt
                    : std::optional<std::string>("non-cyclic vector found"));

        // h-spectrum of L: dim ker(h - mu) per mu
        const auto fcJ = Jz.free_columns();
        std::vector<size_t> spec;
        for (uint32_t mu = 0; mu < pv; ++mu) {
            std::vector<FpVec> rows(dimZ, zero_vec(fcJ.size(), p));
            for (size_t j = 0; j < fcJ.size(); ++j) {
                FpVec unit = zero_vec(dimZ, p);
                unit[fcJ[j]] = Fp::one(p);
                FpVec y = Jz.reduce(zmul(2, unit));
                y[fcJ[j]] -= Fp(mu, p);
                for (size_t i = 0; i < dimZ; ++i) rows[i][j] = y[i];
            }
            spec.push_back(kernel_basis(rows, fcJ.size(), p).size());
        }
        spectra.push_back(spec);
    }

    bool distinct = true;
    for (size_t i = 0; i < spectra.size(); ++i)
        for (size_t j = i + 1; j < spectra.size(); ++j)
            if (spectra[i] == spectra[j]) distinct = false;
    rep.add("pairwise_distinct_h_spectra", {{"count", spectra.size()}},
            distinct && spectra.size() == pv,
            (distinct && spectra.size() == pv)
                ? std::nullopt
                : std::optional<std::string>("spectra collision or wrong count"));
    return rep;
}

}  // namespace mva
