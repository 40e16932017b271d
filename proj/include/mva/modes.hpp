#pragma once

#include <cstdint>
#include <map>
#include <tuple>

#include "mva/module.hpp"

namespace mva {

/// Vertex-operator modes Y(v,x) = sum v_n x^{-n-1} on a truncated
/// vacuum-type module, computed by structural recursion on the PBW form of v
/// (the iterate formula), with memoization. Both v and w live in the
/// attached module.
class ModeEngine {
public:
    explicit ModeEngine(const Module& W) : W_(W) {}

    const Module& module() const { return W_; }
    const Prime& prime() const { return W_.algebra().prime(); }

    /// v_n w. Homogeneous pieces of degree deg v + deg w - n - 1; raises
    /// TruncationOverflow when that exceeds the truncation.
    ModuleVector mode_act(const ModuleVector& v, int64_t n, const ModuleVector& w) const;

    /// D^(k) v = v_{-k-1} 1.
    ModuleVector d_operator(uint64_t k, const ModuleVector& v) const;

private:
    ModuleVector term_mode(const PBWMonomial& mono, int64_t n, const ModTerm& wt) const;
    ModuleVector mono_mode(const PBWMonomial& mono, int64_t n, const ModuleVector& w) const;

    const Module& W_;
    mutable std::map<std::tuple<PBWMonomial, int64_t, ModTerm>, ModuleVector> memo_;
};

/// Y(u,x)v = e^{xD} Y(v,-x)u, compared coefficientwise for x^m over
/// |m| <= window.
Report check_skew_symmetry(const ModeEngine& E, const ModuleVector& u,
                           const ModuleVector& v, int64_t window);

/// e^{zD} Y(v,x) e^{-zD} = Y(e^{zD}v, x): coefficient of z^r x^{-n-1} for
/// r <= zmax, |n| <= nwindow, as operators on basis vectors of degree <= dstar.
Report check_conjugation(const ModeEngine& E, const ModuleVector& v, uint64_t zmax,
                         int64_t nwindow, uint64_t dstar);

/// Coefficient-extracted Jacobi identity for all (m,n,k) in the box
/// [-win,win]^3. Instances whose intermediate degrees exceed the truncation
/// are counted as skipped, never silently dropped.
Report check_jacobi_coefficient(const ModeEngine& E, const ModuleVector& u,
                                const ModuleVector& v, const ModuleVector& w,
                                int64_t win);

/// Y((a(-n))^p 1, x) = sum_j binom(n+j-1,j)(a(-n-j))^p x^{jp}
///                   + sum_j (-1)^{n-1} binom(n+j-1,j)(a(j))^p x^{(-n-j)p}
/// as operators on basis vectors of degree <= dstar, coefficients x^m with
/// |m| <= mwindow; requires an affine engine; a given by base coefficients.
Report check_power_field(const ModeEngine& E, const FpVec& a, int64_t n,
                         int64_t mwindow, uint64_t dstar);

/// Virasoro p-center field expansion for n >= 2:
/// Y((L(-n)^p - delta_{p|n} L(-np)) 1, x) equals the bilateral sum of
/// p-center operators at exponents in p Z; all other coefficients vanish.
Report check_virasoro_pcenter_field(const ModeEngine& E, int64_t n, int64_t mwindow,
                                    uint64_t dstar);

/// D^(m) of the Virasoro p-center generator: (-1)^k binom(-n+1,k) times the
/// depth-(n+k) generator when m = kp, zero otherwise.
Report check_dnv_corollary(const ModeEngine& E, int64_t n, uint64_t m);

}  // namespace mva
