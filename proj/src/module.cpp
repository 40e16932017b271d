#include "mva/module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mva {

namespace {

std::vector<Gen> lowering_gens(const LieAlgebra& alg, int64_t threshold, uint64_t budget) {
    // generators with threshold >= n >= -budget, in increasing PBW order
    std::vector<Gen> out;
    if (alg.is_affine()) {
        const auto& sc = static_cast<const AffineAlgebra&>(alg).base();
        for (int64_t n = -static_cast<int64_t>(budget); n <= threshold; ++n)
            for (size_t i = 0; i < sc.dim(); ++i)
                out.push_back(Gen::affine(static_cast<int32_t>(i), n));
    } else {
        for (int64_t n = -static_cast<int64_t>(budget); n <= threshold; ++n)
            out.push_back(Gen::vir(n));
    }
    return out;
}

std::vector<Gen> raising_gens(const LieAlgebra& alg, uint64_t max_deg_drop) {
    std::vector<Gen> out;
    if (alg.is_affine()) {
        const auto& sc = static_cast<const AffineAlgebra&>(alg).base();
        for (uint64_t k = 1; k <= max_deg_drop; ++k)
            for (size_t i = 0; i < sc.dim(); ++i)
                out.push_back(Gen::affine(static_cast<int32_t>(i), static_cast<int64_t>(k)));
    } else {
        for (uint64_t k = 1; k <= max_deg_drop; ++k)
            out.push_back(Gen::vir(static_cast<int64_t>(k)));
    }
    return out;
}

void enumerate_monomials(const std::vector<Gen>& gens, size_t gi, uint64_t rem,
                         PBWMonomial& cur, std::vector<PBWMonomial>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    if (gi == gens.size()) return;
    enumerate_monomials(gens, gi + 1, rem, cur, out);
    uint64_t deg = static_cast<uint64_t>(gens[gi].degree());
    for (uint32_t e = 1; e * deg <= rem; ++e) {
        cur.factors.emplace_back(gens[gi], e);
        enumerate_monomials(gens, gi + 1, rem - e * deg, cur, out);
        cur.factors.pop_back();
    }
}

}  // namespace

Module Module::vacuum(const LieAlgebra& alg, TruncationConfig cfg) {
    Kind k = alg.is_affine() ? Kind::VacuumAffine : Kind::VacuumVir;
    return Module(alg, cfg, k, Fp::zero(alg.prime()), {}, 1);
}

Module Module::verma(const VirasoroAlgebra& alg, TruncationConfig cfg, Fp lambda) {
    return Module(alg, cfg, Kind::VermaVir, lambda, {}, 1);
}

Module Module::generalized_verma(const AffineAlgebra& alg, TruncationConfig cfg,
                                 std::vector<std::vector<FpVec>> rho) {
    const auto& sc = alg.base();
    const Prime& p = alg.prime();
    const size_t d = sc.dim();
    if (rho.size() != d) throw std::invalid_argument("generalized_verma: need one matrix per base generator");
    const size_t u = rho.empty() ? 1 : rho[0].size();
    for (const auto& m : rho) {
        if (m.size() != u) throw std::invalid_argument("generalized_verma: ragged action matrices");
        for (const auto& row : m)
            if (row.size() != u) throw std::invalid_argument("generalized_verma: non-square action matrix");
    }
    auto matmul = [&](const std::vector<FpVec>& a, const std::vector<FpVec>& b) {
        std::vector<FpVec> c(u, zero_vec(u, p));
        for (size_t i = 0; i < u; ++i)
            for (size_t k = 0; k < u; ++k)
                for (size_t j = 0; j < u; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    // bracket compatibility: [rho_i, rho_j] = rho([a_i, a_j])
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            std::vector<FpVec> lhs = matmul(rho[i], rho[j]);
            std::vector<FpVec> neg = matmul(rho[j], rho[i]);
            std::vector<FpVec> rhs(u, zero_vec(u, p));
            for (const auto& [k, c] : sc.bracket[i][j])
                for (size_t r = 0; r < u; ++r)
                    for (size_t s = 0; s < u; ++s) rhs[r][s] += rho[k][r][s] * c;
            for (size_t r = 0; r < u; ++r)
                for (size_t s = 0; s < u; ++s)
                    if (lhs[r][s] - neg[r][s] != rhs[r][s])
                        throw std::invalid_argument(
                            "generalized_verma: action incompatible with bracket at (" +
                            sc.names[i] + "," + sc.names[j] + ")");
        }
    // restrictedness: rho_i^p = rho(a_i^[p]) (u(g)-module condition)
    for (size_t i = 0; i < d; ++i) {
        std::vector<FpVec> pw(u, zero_vec(u, p));
        for (size_t r = 0; r < u; ++r) pw[r][r] = Fp::one(p);
        for (uint32_t e = 0; e < p.value(); ++e) pw = matmul(pw, rho[i]);
        std::vector<FpVec> rhs(u, zero_vec(u, p));
        for (const auto& [k, c] : sc.p_map[i])
            for (size_t r = 0; r < u; ++r)
                for (size_t s = 0; s < u; ++s) rhs[r][s] += rho[k][r][s] * c;
        for (size_t r = 0; r < u; ++r)
            for (size_t s = 0; s < u; ++s)
                if (pw[r][s] != rhs[r][s])
                    throw std::invalid_argument(
                        "generalized_verma: action incompatible with the p-mapping at " +
                        sc.names[i]);
    }
    return Module(alg, cfg, Kind::GenVermaAffine, Fp::zero(p), std::move(rho), u);
}

ModuleVector Module::hw_vector(size_t i) const {
    if (i >= hw_dim_) throw std::invalid_argument("hw_vector: index out of range");
    ModuleVector v;
    v.add(ModTerm{PBWMonomial{}, i}, Fp::one(alg_.prime()));
    return v;
}

int64_t Module::lowering_threshold() const {
    return kind_ == Kind::VacuumVir ? -2 : -1;
}

ModuleVector Module::hw_rule(Gen g, size_t hw) const {
    const Prime& p = alg_.prime();
    ModuleVector out;
    switch (kind_) {
        case Kind::VacuumVir:
            if (g.n >= -1) return out;
            break;
        case Kind::VacuumAffine:
            if (g.n >= 0) return out;
            break;
        case Kind::VermaVir:
            if (g.n >= 1) return out;
            if (g.n == 0) {
                out.add(ModTerm{PBWMonomial{}, hw}, lambda_);
                return out;
            }
            break;
        case Kind::GenVermaAffine:
            if (g.n >= 1) return out;
            if (g.n == 0) {
                const auto& m = rho_[static_cast<size_t>(g.base)];
                for (size_t r = 0; r < hw_dim_; ++r)
                    out.add(ModTerm{PBWMonomial{}, r}, m[r][hw]);
                return out;
            }
            break;
    }
    PBWMonomial mono;
    mono.factors.emplace_back(g, 1);
    out.add(ModTerm{mono, hw}, Fp::one(p));
    return out;
}

ModuleVector Module::act_term(Gen g, const PBWMonomial& mono, size_t hw) const {
    const Prime& p = alg_.prime();
    if (g.is_central()) {
        ModuleVector out;
        out.add(ModTerm{mono, hw}, cfg_.scalar);
        return out;
    }
    int64_t target = g.degree() + mono.degree();
    if (target > static_cast<int64_t>(cfg_.max_degree))
        throw TruncationOverflow("act: degree " + std::to_string(target) +
                                 " exceeds truncation " + std::to_string(cfg_.max_degree));
    if (mono.factors.empty()) return hw_rule(g, hw);

    const auto& [h, e] = mono.factors.front();
    if (g < h) {
        PBWMonomial nm;
        nm.factors.emplace_back(g, 1);
        nm.factors.insert(nm.factors.end(), mono.factors.begin(), mono.factors.end());
        ModuleVector out;
        out.add(ModTerm{nm, hw}, Fp::one(p));
        return out;
    }
    if (g == h) {
        PBWMonomial nm = mono;
        ++nm.factors.front().second;
        ModuleVector out;
        out.add(ModTerm{nm, hw}, Fp::one(p));
        return out;
    }
    // g > h: g h^e X = h (g h^{e-1} X) + [g,h] (h^{e-1} X)
    PBWMonomial rest = mono;
    if (--rest.factors.front().second == 0) rest.factors.erase(rest.factors.begin());
    ModuleVector out = act_gen(h, act_term(g, rest, hw));
    ModuleVector base;
    base.add(ModTerm{rest, hw}, Fp::one(p));
    out += act_lie(alg_.bracket_gen(g, h), base);
    return out;
}

ModuleVector Module::act_gen(Gen g, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [t, c] : v.terms()) out += act_term(g, t.mono, t.hw).scaled(c);
    return out;
}

ModuleVector Module::act_lie(const LieElement& x, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [g, c] : x.terms()) out += act_gen(g, v).scaled(c);
    return out;
}

ModuleVector Module::act_uea(const UEAElement& u, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [m, c] : u.terms()) {
        ModuleVector acc = v.scaled(c);
        for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
            for (uint32_t i = 0; i < it->second; ++i) acc = act_gen(it->first, acc);
        out += acc;
    }
    return out;
}

const std::vector<ModTerm>& Module::basis(uint64_t d) const {
    auto it = basis_cache_.find(d);
    if (it != basis_cache_.end()) return it->second;
    if (d > cfg_.max_degree)
        throw TruncationOverflow("basis: degree beyond truncation");
    std::vector<Gen> gens = lowering_gens(alg_, lowering_threshold(), d);
    std::vector<PBWMonomial> monos;
    PBWMonomial cur;
    enumerate_monomials(gens, 0, d, cur, monos);
    std::sort(monos.begin(), monos.end());
    std::vector<ModTerm> out;
    for (const auto& m : monos)
        for (size_t h = 0; h < hw_dim_; ++h) out.push_back(ModTerm{m, h});
    auto& slot = basis_cache_[d] = std::move(out);
    auto& idx = index_cache_[d];
    for (size_t i = 0; i < slot.size(); ++i) idx.emplace(slot[i], i);
    return slot;
}

FpVec Module::coords(const ModuleVector& v, uint64_t d) const {
    basis(d);
    const auto& idx = index_cache_.at(d);
    FpVec out = zero_vec(idx.size(), alg_.prime());
    for (const auto& [t, c] : v.terms()) {
        auto it = idx.find(t);
        if (it == idx.end())
            throw std::invalid_argument("coords: term of degree " +
                                        std::to_string(t.degree()) +
                                        " not in degree-" + std::to_string(d) + " basis");
        out[it->second] += c;
    }
    return out;
}

ModuleVector Module::from_coords(const FpVec& v, uint64_t d) const {
    const auto& b = basis(d);
    if (v.size() != b.size()) throw std::invalid_argument("from_coords: size mismatch");
    ModuleVector out;
    for (size_t i = 0; i < b.size(); ++i) out.add(b[i], v[i]);
    return out;
}

FpVec Module::act_coords(Gen g, uint64_t d, const FpVec& v) const {
    int64_t target = static_cast<int64_t>(d) + g.degree();
    if (target < 0) return {};
    return coords(act_gen(g, from_coords(v, d)), static_cast<uint64_t>(target));
}

std::string Module::describe(const ModuleVector& v) const {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.v;
        for (const auto& [g, e] : t.mono.factors) {
            os << "*" << alg_.gen_name(g);
            if (e > 1) os << "^" << e;
        }
        os << (hw_dim_ > 1 ? "*u" + std::to_string(t.hw) : "*1");
    }
    return os.str();
}

bool GradedSubspace::contains(const Module& M, const ModuleVector& v) const {
    if (v.is_zero()) return true;
    auto d = v.degree();
    if (!d || *d < 0) return false;
    uint64_t du = static_cast<uint64_t>(*d);
    if (du >= comp.size()) return false;
    return comp[du].contains(M.coords(v, du));
}

bool IdealDescription::is_graded(const Prime&) const {
    if (family == Family::Imu) return mu.v == 0;
    for (const auto& x : chi)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// p-center generator z applied (as a central operator) to a module vector
ModuleVector pcenter_apply(const Module& M, const IdealDescription& ideal, int64_t n,
                           size_t base, const ModuleVector& u) {
    const LieAlgebra& alg = M.algebra();
    const Prime& p = alg.prime();
    if (ideal.family == IdealDescription::Family::Imu) {
        ModuleVector v = u;
        for (uint32_t i = 0; i < p.value(); ++i) v = M.act_gen(Gen::vir(-n), v);
        if (n % p.value() == 0) v -= M.act_gen(Gen::vir(-n * p.value()), u);
        if (n == 2) v -= u.scaled(ideal.mu.pow(p.value()));
        return v;
    }
    Gen g = Gen::affine(static_cast<int32_t>(base), -n);
    ModuleVector v = u;
    for (uint32_t i = 0; i < p.value(); ++i) v = M.act_gen(g, v);
    v -= M.act_lie(alg.p_map_gen(g), u);
    if (n == 1 && !ideal.chi.empty()) v -= u.scaled(ideal.chi[base].pow(p.value()));
    return v;
}

struct PCenterGen {
    int64_t n;    // mode depth: generator built from modes at -n
    size_t base;  // affine base index (0 for Virasoro)
    uint64_t top_degree;
};

std::vector<PCenterGen> pcenter_generators(const Module& M, const IdealDescription& ideal) {
    const Prime& p = M.algebra().prime();
    const uint64_t N = M.max_degree();
    std::vector<PCenterGen> out;
    if (ideal.family == IdealDescription::Family::Imu) {
        for (int64_t n = 2; static_cast<uint64_t>(n) * p.value() <= N; ++n)
            out.push_back({n, 0, static_cast<uint64_t>(n) * p.value()});
    } else {
        const auto& sc = static_cast<const AffineAlgebra&>(M.algebra()).base();
        for (int64_t n = 1; static_cast<uint64_t>(n) * p.value() <= N; ++n)
            for (size_t i = 0; i < sc.dim(); ++i)
                out.push_back({n, i, static_cast<uint64_t>(n) * p.value()});
    }
    return out;
}

}  // namespace

GradedSubspace ideal_graded_span(const Module& M, const IdealDescription& ideal) {
    const Prime& p = M.algebra().prime();
    if (!ideal.is_graded(p))
        throw std::invalid_argument("ideal_graded_span: ideal is graded only for mu = 0 / chi = 0");
    const uint64_t N = M.max_degree();
    GradedSubspace out;
    for (uint64_t d = 0; d <= N; ++d) out.comp.emplace_back(M.dim(d), p);
    auto gens = pcenter_generators(M, ideal);
    for (uint64_t d = 0; d <= N; ++d)
        for (const auto& z : gens) {
            if (z.top_degree > d) continue;
            for (const auto& t : M.basis(d - z.top_degree)) {
                ModuleVector u;
                u.add(t, Fp::one(p));
                ModuleVector v = pcenter_apply(M, ideal, z.n, z.base, u);
                if (!v.is_zero()) out.comp[d].insert(M.coords(v, d));
            }
        }
    return out;
}

std::vector<size_t> ideal_filtration_dims(const Module& M, const IdealDescription& ideal) {
    const Prime& p = M.algebra().prime();
    const uint64_t N = M.max_degree();
    std::vector<size_t> offset(N + 2, 0);
    for (uint64_t d = 0; d <= N; ++d) offset[d + 1] = offset[d] + M.dim(d);
    RowSpan span(offset[N + 1], p);
    std::vector<size_t> dims(N + 1, 0);
    auto flatten = [&](const ModuleVector& v) {
        FpVec out = zero_vec(offset[N + 1], p);
        std::map<int64_t, ModuleVector> by_deg;
        for (const auto& [t, c] : v.terms()) by_deg[t.degree()].add(t, c);
        for (const auto& [d, part] : by_deg) {
            FpVec cs = M.coords(part, static_cast<uint64_t>(d));
            for (size_t i = 0; i < cs.size(); ++i) out[offset[d] + i] = cs[i];
        }
        return out;
    };
    auto gens = pcenter_generators(M, ideal);
    for (uint64_t d = 0; d <= N; ++d)
        for (const auto& z : gens) {
            if (z.top_degree > d) continue;
            for (const auto& t : M.basis(d - z.top_degree)) {
                ModuleVector u;
                u.add(t, Fp::one(p));
                ModuleVector v = pcenter_apply(M, ideal, z.n, z.base, u);
                if (!v.is_zero() && span.insert(flatten(v))) ++dims[d];
            }
        }
    return dims;
}

ModuleVector QuotientModule::reduce(const ModuleVector& v) const {
    std::map<int64_t, ModuleVector> by_deg;
    for (const auto& [t, c] : v.terms()) by_deg[t.degree()].add(t, c);
    ModuleVector out;
    for (const auto& [d, part] : by_deg) {
        uint64_t du = static_cast<uint64_t>(d);
        if (du >= sub_.comp.size()) {
            out += part;
            continue;
        }
        FpVec r = sub_.comp[du].reduce(ambient_.coords(part, du));
        out += ambient_.from_coords(r, du);
    }
    return out;
}

FpVec QuotientModule::act_coords(Gen g, uint64_t d, const FpVec& v) const {
    int64_t target = static_cast<int64_t>(d) + g.degree();
    if (target < 0) return {};
    FpVec w = ambient_.act_coords(g, d, v);
    uint64_t tu = static_cast<uint64_t>(target);
    return tu < sub_.comp.size() ? sub_.comp[tu].reduce(std::move(w)) : w;
}

GradedSubspace maximal_graded_submodule(const GradedModuleView& M) {
    const Prime& p = M.prime();
    const uint64_t N = M.max_degree();
    GradedSubspace K;
    K.comp.emplace_back(M.coord_dim(0), p);  // K_0 = 0 (or the quotiented rows)
    if (const RowSpan* q = M.quotient_span(0))
        for (const auto& r : q->rows()) K.comp[0].insert(r);
    for (uint64_t d = 1; d <= N; ++d) {
        const size_t nd = M.coord_dim(d);
        std::vector<FpVec> rows;
        for (Gen g : raising_gens(M.algebra(), d)) {
            uint64_t k = static_cast<uint64_t>(-g.degree());
            std::vector<FpVec> images;
            for (size_t j = 0; j < nd; ++j) {
                FpVec e = zero_vec(nd, p);
                e[j] = Fp::one(p);
                images.push_back(K.comp[d - k].reduce(M.act_coords(g, d, e)));
            }
            const size_t nt = M.coord_dim(d - k);
            for (size_t r = 0; r < nt; ++r) {
                FpVec row = zero_vec(nd, p);
                for (size_t j = 0; j < nd; ++j) row[j] = images[j][r];
                rows.push_back(std::move(row));
            }
        }
        RowSpan Kd(nd, p);
        for (auto& v : kernel_basis(rows, nd, p)) Kd.insert(std::move(v));
        if (const RowSpan* q = M.quotient_span(d))
            for (const auto& r : q->rows()) Kd.insert(r);
        K.comp.push_back(std::move(Kd));
    }
    return K;
}

GradedSubspace maximal_graded_submodule_closure(const GradedModuleView& M) {
    // direct enumeration of pure-raising words of total degree d, mapped into
    // degree 0; independent of the degree recursion above
    const Prime& p = M.prime();
    const uint64_t N = M.max_degree();
    GradedSubspace K;
    K.comp.emplace_back(M.coord_dim(0), p);
    if (const RowSpan* q = M.quotient_span(0))
        for (const auto& r : q->rows()) K.comp[0].insert(r);
    for (uint64_t d = 1; d <= N; ++d) {
        const size_t nd = M.coord_dim(d);
        // words as sequences of raising gens summing to d
        std::vector<std::vector<Gen>> words;
        std::vector<Gen> cur;
        std::function<void(uint64_t)> rec = [&](uint64_t rem) {
            if (rem == 0) {
                words.push_back(cur);
                return;
            }
            for (Gen g : raising_gens(M.algebra(), rem)) {
                cur.push_back(g);
                rec(rem - static_cast<uint64_t>(-g.degree()));
                cur.pop_back();
            }
        };
        rec(d);
        std::vector<FpVec> rows;
        for (const auto& w : words) {
            std::vector<FpVec> images;
            for (size_t j = 0; j < nd; ++j) {
                FpVec v = zero_vec(nd, p);
                v[j] = Fp::one(p);
                uint64_t cd = d;
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    v = M.act_coords(*it, cd, v);
                    cd -= static_cast<uint64_t>(-it->degree());
                }
                images.push_back(std::move(v));
            }
            for (size_t r = 0; r < M.coord_dim(0); ++r) {
                FpVec row = zero_vec(nd, p);
                for (size_t j = 0; j < nd; ++j) row[j] = K.comp[0].reduce(images[j])[r];
                rows.push_back(std::move(row));
            }
        }
        RowSpan Kd(nd, p);
        for (auto& v : kernel_basis(rows, nd, p)) Kd.insert(std::move(v));
        if (const RowSpan* q = M.quotient_span(d))
            for (const auto& r : q->rows()) Kd.insert(r);
        K.comp.push_back(std::move(Kd));
    }
    return K;
}

bool omega_membership(const GradedModuleView& M, uint64_t d, const FpVec& v) {
    for (Gen g : raising_gens(M.algebra(), std::min<uint64_t>(2, d))) {
        FpVec w = M.act_coords(g, d, v);
        if (!is_zero_vec(w)) return false;
    }
    return true;
}

QuotientModule build_graded_module_vir(const VirasoroAlgebra& alg, TruncationConfig cfg,
                                       Fp lambda) {
    Module M = Module::verma(alg, cfg, lambda);
    GradedSubspace J = maximal_graded_submodule(M);
    return QuotientModule(std::move(M), std::move(J));
}

QuotientModule build_graded_module_affine(const AffineAlgebra& alg, TruncationConfig cfg,
                                          std::vector<std::vector<FpVec>> rho) {
    Module M = Module::generalized_verma(alg, cfg, std::move(rho));
    GradedSubspace J = maximal_graded_submodule(M);
    return QuotientModule(std::move(M), std::move(J));
}

uint64_t partition_count(uint64_t n, uint64_t min_part) {
    // dp[m] = partitions of m into parts >= current bound, built top-down
    std::vector<uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (uint64_t part = n; part >= min_part && part >= 1; --part)
        for (uint64_t m = part; m <= n; ++m) dp[m] += dp[m - part];
    return dp[n];
}

}  // namespace mva
