#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mva/lie.hpp"
#include "mva/linalg.hpp"
#include "mva/uea.hpp"

namespace mva {

/// Raised when a computation would produce a vector above the truncation
/// degree. Nothing is ever silently dropped.
struct TruncationOverflow : std::runtime_error {
    explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationConfig {
    uint64_t max_degree = 0;
    Fp scalar;  // central charge c (Virasoro) or level l (affine)
};

/// Basis term of a highest-weight module: a normal-form monomial in lowering
/// generators applied to the hw-space basis vector of the given index.
struct ModTerm {
    PBWMonomial mono;
    size_t hw = 0;

    int64_t degree() const { return mono.degree(); }
    auto key() const { return std::pair(mono.key(), hw); }
    bool operator<(const ModTerm& o) const { return key() < o.key(); }
    bool operator==(const ModTerm& o) const { return mono == o.mono && hw == o.hw; }
};

class ModuleVector {
public:
    ModuleVector() = default;

    void add(const ModTerm& t, Fp c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<ModTerm, Fp>& terms() const { return terms_; }

    ModuleVector& operator+=(const ModuleVector& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    ModuleVector& operator-=(const ModuleVector& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    ModuleVector scaled(Fp c) const {
        ModuleVector r;
        for (const auto& [t, x] : terms_) r.add(t, x * c);
        return r;
    }
    bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }

    std::optional<int64_t> degree() const {
        std::optional<int64_t> d;
        for (const auto& [t, c] : terms_) {
            if (!d) d = t.degree();
            else if (*d != t.degree()) return std::nullopt;
        }
        return d;
    }

private:
    std::map<ModTerm, Fp> terms_;
};

/// Coordinate-level interface shared by modules and their quotients:
/// per-degree dimensions and generator actions on coordinate vectors.
class GradedModuleView {
public:
    virtual ~GradedModuleView() = default;
    virtual const LieAlgebra& algebra() const = 0;
    virtual uint64_t max_degree() const = 0;
    virtual size_t dim(uint64_t d) const = 0;
    /// Action of a non-central mode of degree -k on degree-d coordinates;
    /// result lives in degree d + deg g. Returns the empty vector when the
    /// target degree is negative (the action is zero there).
    virtual FpVec act_coords(Gen g, uint64_t d, const FpVec& v) const = 0;
    /// Size of the coordinate vectors act_coords works with. For quotients
    /// this is the ambient dimension (classes are carried as reduced
    /// ambient representatives); dim() stays the quotient dimension.
    virtual size_t coord_dim(uint64_t d) const { return dim(d); }
    /// Rows of the subspace being quotiented out, in ambient coordinates
    /// (null for plain modules).
    virtual const RowSpan* quotient_span(uint64_t) const { return nullptr; }
    const Prime& prime() const { return algebra().prime(); }
};

/// Degree-truncated highest-weight module: vacuum module, Virasoro Verma
/// module, or generalized Verma module over an affine algebra.
class Module : public GradedModuleView {
public:
    enum class Kind { VacuumVir, VacuumAffine, VermaVir, GenVermaAffine };

    static Module vacuum(const LieAlgebra& alg, TruncationConfig cfg);
    static Module verma(const VirasoroAlgebra& alg, TruncationConfig cfg, Fp lambda);
    /// rho[i] is the hw-space matrix of a_i(0): rho[i][r][c] = coefficient of
    /// hw_r in a_i(0) hw_c. Consistency with the bracket and p-mapping of the
    /// base algebra is checked.
    static Module generalized_verma(const AffineAlgebra& alg, TruncationConfig cfg,
                                    std::vector<std::vector<FpVec>> rho);

    Kind kind() const { return kind_; }
    const LieAlgebra& algebra() const override { return alg_; }
    uint64_t max_degree() const override { return cfg_.max_degree; }
    const TruncationConfig& config() const { return cfg_; }
    size_t hw_dim() const { return hw_dim_; }

    ModuleVector hw_vector(size_t i = 0) const;

    ModuleVector act_gen(Gen g, const ModuleVector& v) const;
    ModuleVector act_lie(const LieElement& x, const ModuleVector& v) const;
    /// Applies a PBW element as an operator (monomial factors act
    /// right-to-left).
    ModuleVector act_uea(const UEAElement& u, const ModuleVector& v) const;

    const std::vector<ModTerm>& basis(uint64_t d) const;
    size_t dim(uint64_t d) const override { return basis(d).size(); }
    FpVec coords(const ModuleVector& v, uint64_t d) const;
    ModuleVector from_coords(const FpVec& v, uint64_t d) const;
    FpVec act_coords(Gen g, uint64_t d, const FpVec& v) const override;

    std::string describe(const ModuleVector& v) const;

private:
    Module(const LieAlgebra& alg, TruncationConfig cfg, Kind kind, Fp lambda,
           std::vector<std::vector<FpVec>> rho, size_t hw_dim)
        : alg_(alg), cfg_(cfg), kind_(kind), lambda_(lambda), rho_(std::move(rho)),
          hw_dim_(hw_dim) {}

    ModuleVector act_term(Gen g, const PBWMonomial& mono, size_t hw) const;
    ModuleVector hw_rule(Gen g, size_t hw) const;  // mono exhausted
    int64_t lowering_threshold() const;            // modes n <= threshold are basis factors

    const LieAlgebra& alg_;
    TruncationConfig cfg_;
    Kind kind_;
    Fp lambda_;
    std::vector<std::vector<FpVec>> rho_;
    size_t hw_dim_;
    mutable std::map<uint64_t, std::vector<ModTerm>> basis_cache_;
    mutable std::map<uint64_t, std::map<ModTerm, size_t>> index_cache_;
};

/// Per-degree row-reduced subspaces against a module's basis coordinates.
struct GradedSubspace {
    std::vector<RowSpan> comp;  // index = degree

    size_t dim(uint64_t d) const { return d < comp.size() ? comp[d].rank() : 0; }
    bool contains(const Module& M, const ModuleVector& v) const;
};

struct IdealDescription {
    enum class Family { Imu, Jchi };
    Family family = Family::Imu;
    Fp mu;       // I_mu: generators (L(-n)^p - delta_{p|n} L(-np) - delta_{n,2} mu^p) 1
    FpVec chi;   // J_chi: generators (a(-m)^p - a^[p](-pm) - delta_{m,1} chi(a)^p) 1

    static IdealDescription imu(Fp mu) { return {Family::Imu, mu, {}}; }
    static IdealDescription jchi(FpVec chi) { return {Family::Jchi, Fp(), std::move(chi)}; }
    bool is_graded(const Prime& p) const;
};

/// Exact per-degree span of a graded p-center ideal (mu = 0 / chi = 0),
/// computed through centrality: degree-d component is spanned by z u over
/// p-center generators z and basis monomials u of complementary degree.
GradedSubspace ideal_graded_span(const Module& M, const IdealDescription& ideal);

/// For non-graded ideals (mu != 0 or chi != 0): dimensions of the span
/// organized by top degree (rank growth as generators times basis vectors
/// are inserted in top-degree order).
std::vector<size_t> ideal_filtration_dims(const Module& M, const IdealDescription& ideal);

/// Quotient of a module by a graded subspace, with canonical coset
/// representatives per degree.
class QuotientModule : public GradedModuleView {
public:
    QuotientModule(Module ambient, GradedSubspace sub)
        : ambient_(std::move(ambient)), sub_(std::move(sub)) {}

    const Module& ambient() const { return ambient_; }
    const GradedSubspace& submodule() const { return sub_; }
    const LieAlgebra& algebra() const override { return ambient_.algebra(); }
    uint64_t max_degree() const override { return ambient_.max_degree(); }
    size_t dim(uint64_t d) const override {
        return ambient_.dim(d) - sub_.dim(d);
    }

    ModuleVector reduce(const ModuleVector& v) const;
    ModuleVector act_gen(Gen g, const ModuleVector& v) const {
        return reduce(ambient_.act_gen(g, v));
    }
    FpVec act_coords(Gen g, uint64_t d, const FpVec& v) const override;
    size_t coord_dim(uint64_t d) const override { return ambient_.dim(d); }
    const RowSpan* quotient_span(uint64_t d) const override {
        return d < sub_.comp.size() ? &sub_.comp[d] : nullptr;
    }

private:
    Module ambient_;
    GradedSubspace sub_;
};

/// Maximal graded submodule with zero degree-0 part, per degree d >= 1 the
/// common kernel K_d = {v : g v in K_{d-k} for every raising mode g of
/// degree -k}, K_0 = 0. Lowering factors cannot return to degree 0 and zero
/// modes preserve it, so pure-raising annihilation characterizes the radical.
/// For a quotient view the result is the preimage in ambient coordinates
/// (it contains the quotiented subspace).
GradedSubspace maximal_graded_submodule(const GradedModuleView& M);

/// Closure-iteration cross-check oracle for the radical: grows candidate
/// spans downward until stable. Exponential in degree; use on tiny N only.
GradedSubspace maximal_graded_submodule_closure(const GradedModuleView& M);

/// v lies in Omega: annihilated by L(1), L(2) (Virasoro) resp. a_i(1),
/// a_i(2) for all base generators (affine).
bool omega_membership(const GradedModuleView& M, uint64_t d, const FpVec& v);

/// Simple graded quotient L(c,lambda) resp. L_g(l,U) of the (generalized)
/// Verma module, truncated at cfg.max_degree.
QuotientModule build_graded_module_vir(const VirasoroAlgebra& alg, TruncationConfig cfg,
                                       Fp lambda);
QuotientModule build_graded_module_affine(const AffineAlgebra& alg, TruncationConfig cfg,
                                          std::vector<std::vector<FpVec>> rho);

/// Number of partitions of n into parts >= min_part (independent oracle for
/// vacuum-basis dimensions).
uint64_t partition_count(uint64_t n, uint64_t min_part);

}  // namespace mva
