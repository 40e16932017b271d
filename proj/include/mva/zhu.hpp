#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mva/modes.hpp"
#include "mva/uea.hpp"

namespace mva {

/// Polynomial over F_p, coefficient of x^i at index i, trailing zeros trimmed.
using Poly = std::vector<Fp>;

Poly poly_trim(Poly f);
Poly poly_add(const Poly& a, const Poly& b, const Prime& p);
Poly poly_sub(const Poly& a, const Poly& b, const Prime& p);
Poly poly_mul(const Poly& a, const Poly& b, const Prime& p);
Poly poly_scale(const Poly& a, Fp c);
bool poly_eq(const Poly& a, const Poly& b);
/// Canonical representative mod (x^p - x): folds x^k -> x^{k-p+1} for k >= p.
Poly poly_mod_frobenius(Poly f, const Prime& p);
std::string poly_str(const Poly& f);

/// One summand of an explicit O(V) combination: coeff * (a circ_n b).
struct OVTerm {
    ModuleVector a;
    int64_t n = 0;
    ModuleVector b;
    Fp coeff;
};
using OVCertificate = std::vector<OVTerm>;

/// a*b = sum_i binom(deg a, i) a_{i-1} b, extended per homogeneous component
/// of a.
ModuleVector star(const ModeEngine& E, const ModuleVector& a, const ModuleVector& b);
/// a circ_n b = sum_i binom(deg a, i) a_{i-n-2} b, n >= 0.
ModuleVector circ(const ModeEngine& E, const ModuleVector& a, int64_t n,
                  const ModuleVector& b);
/// Exact re-summation of a certificate.
ModuleVector resum(const ModeEngine& E, const OVCertificate& cert);

/// Reduction of [v] in A(V_Vir(c,0)) to a polynomial in [omega]:
/// v = hat + resum(cert) exactly, hat = sum_k poly[k] (L(-2)+L(-1))^k 1.
struct VirReduction {
    Poly poly;
    OVCertificate cert;
    ModuleVector hat;
};
VirReduction reduce_vir(const ModeEngine& E, const ModuleVector& v);

/// Reduction of [v] in A(V_g(l,0)) to a U(g) element (generators at loop
/// degree 0): v = rep + resum(cert) exactly, with rep a combination of
/// a1(-1)...ak(-1) 1 stacks and image its value under [a(-1)w] = [w][a].
struct AffineReduction {
    UEAElement image;
    OVCertificate cert;
    ModuleVector rep;
};
AffineReduction reduce_affine(const ModeEngine& E, const ModuleVector& v);

/// (a) p-center generators reduce to (-1)^{pn}(n-1)(x^p - x); (b) random
/// ideal elements reduce into (x^p - x)F[x]; (c) F[x]/(x^p - x) algebra
/// axioms; (d) star-compatibility reduce(omega * v) = x reduce(v); every
/// certificate is re-summed exactly.
Report verify_zhu_vir(const Prime& p, Fp c, uint64_t nmax, uint64_t seed);

/// (a) J_0 generators reduce to (-1)^{n-1}(a^p - a^[p]); (b) reduction is
/// multiplicative against star; (c) images vanish in u(g).
Report verify_zhu_affine(const StructureConstants& sc, Fp level, uint64_t nmax,
                         uint64_t seed);

/// W(0) lies in Omega(W) and [omega] acts on it as L(0) by lambda.
Report omega_w_action_check_vir(const QuotientModule& W, Fp lambda);
/// W(0) lies in Omega(W) and each [a_i] acts on it as a_i(0) by rho[i].
Report omega_w_action_check_affine(const QuotientModule& W,
                                   const std::vector<std::vector<FpVec>>& rho);

/// The vector e(-1)^{l+1} 1 in V_sl2(l) is singular: annihilated by e(0) and
/// f(1), nonzero in the vacuum module, and contained in the maximal graded
/// submodule at degree l+1 (so it dies in L_g(l, 0)).
Report verify_singular_vectors_sl2(const Prime& p, uint64_t level);

/// Constructs u(sl2) and its baby Verma quotients, extracts the simple heads
/// L(lambda) for lambda in F_p, and certifies: dimensions lambda + 1,
/// exhaustive irreducibility, pairwise distinct h-spectra.
Report classify_irreducibles_u_sl2(const Prime& p);

}  // namespace mva
