#pragma once

#include <cstdint>

#include "mva/modes.hpp"

namespace mva {

/// Per-degree span of C_2(V) = span{ u_{-2-k} v : k >= 0 }, computed over all
/// homogeneous basis pairs through the truncation degree.
GradedSubspace c2_span(const ModeEngine& E);

/// Structural checks on V/C_2(V) with product [u][v] = [u_{-1}v]: the product
/// is representative-independent, commutative, associative and unital mod
/// C_2; D^(k)v lies in C_2 for k >= 1; lowering generator modes preserve C_2;
/// the low-degree components have the expected dimensions.
Report verify_c2_quotient_algebra(const ModeEngine& E, uint64_t dmax, uint64_t seed);

/// C_2-cofiniteness evidence for V0 = V_Vir(c,0)/I_0 through degree N:
/// [omega]^p = 0 in V0/C_2(V0) and the powers 1, [omega], ..., [omega]^{p-1}
/// span it, verified degreewise as V_d = (C_2 + I_0)_d + F omega^{d/2}.
Report verify_c2_cofinite_vir(const Prime& p, Fp c, uint64_t N);

/// C_2-cofiniteness evidence for V0 = V_g(l)/J_0 through degree N:
/// [a]^p = 0 for every base generator and the exponent-< p stacks
/// a_1(-1)^{e_1}...a_k(-1)^{e_k} 1 span V0/C_2(V0).
Report verify_c2_cofinite_affine(const StructureConstants& sc, Fp level, uint64_t N);

}  // namespace mva
