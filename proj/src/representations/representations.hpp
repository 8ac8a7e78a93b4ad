#pragma once

#include "axioms/axioms.hpp"

namespace hompois {

// Identity families are matrix identities evaluated column by column: a
// witness tuple lists the algebra basis indices followed by the module basis
// index v the identity was applied to.

// s(x·y)β = s(αx)s(y), βs(x) = s(αx)β.
CheckReport check_bimodule_comm_assoc(const AlgebraPresentation& a, const ModulePresentation& m, const CheckOptions& o = {});
// ρ({x,y})β = ρ(αx)ρ(y) - ρ(αy)ρ(x), βρ(x) = ρ(αx)β.
CheckReport check_rep_hom_lie(const AlgebraPresentation& a, const ModulePresentation& m, const CheckOptions& o = {});
// Both of the above plus 2s({x,y})β = ρ(αx)s(y) - ρ(αy)s(x) and
// 2s(αx)ρ(y) = ρ(x·y)β + ρ(αy)s(x).
CheckReport check_rep_transposed(const AlgebraPresentation& a, const ModulePresentation& m, const CheckOptions& o = {});
// Left/right actions of a Hom-pre-Lie algebra; ρ = l - r. The second
// condition acts on v on both sides: r(αy)ρ(x)v = l(αx)r(y)v - r(x∗y)βv.
CheckReport check_bimodule_pre_lie(const AlgebraPresentation& a, const ModulePresentation& m, const CheckOptions& o = {});
CheckReport check_bimodule_pre_lie_poisson(const AlgebraPresentation& a, const ModulePresentation& m,
                                           const CheckOptions& o = {});
// Dispatch on class; Hom-Poisson has no module notion here.
CheckReport check_module(const AlgebraPresentation& a, const ModulePresentation& m, AlgebraClass cls,
                         const CheckOptions& o = {});

// Regular structure on A itself with β = α: s = L·, rho = ad, l = L∗, r = R∗,
// whichever the class uses.
ModulePresentation regular_module(const AlgebraPresentation& a, AlgebraClass cls);

// A ⊕ V, algebra block first, twist α ⊕ β.
AlgebraPresentation semidirect_product(const AlgebraPresentation& a, const ModulePresentation& m, AlgebraClass cls,
                                       const CheckOptions& o = {});

struct DualRepresentation {
  ModulePresentation dual;
  // Flags: hypotheses (printed form), hypotheses_alpha_variant, dual_is_representation,
  // conclusion_holds. Sub-reports: the three reports behind those flags.
  CheckReport report;
};

// Dual (-s*, ρ*, β*) with s*(x) = -s(x)ᵀ, ρ*(x) = -ρ(x)ᵀ, i.e. actions s(x)ᵀ,
// -ρ(x)ᵀ and twist βᵀ. The report passes unless the hypotheses hold while the
// dual fails to be a representation.
DualRepresentation dual_representation(const AlgebraPresentation& a, const ModulePresentation& m,
                                       const CheckOptions& o = {});

// V = dst with s(x)y = f(x)·y, l(x)y = f(x)∗y, r(x)y = y∗f(x), β = dst.alpha.
ModulePresentation bimodule_from_morphism(const AlgebraPresentation& src, const AlgebraPresentation& dst,
                                          const Matrix& f, const CheckOptions& o = {});

struct TwistedBimodule {
  AlgebraPresentation algebra;
  ModulePresentation module;
};

// Actions s(α'x)β', l(α'x)β', r(α'x)β' and twist ββ' over compose_twist(a, α').
TwistedBimodule twisted_bimodule(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& g_alg,
                                 const Matrix& g_mod, const CheckOptions& o = {});

// rho = l - r. class_in HomPreLie gives a Hom-Lie representation of the
// sub-adjacent algebra; HomPreLiePoisson keeps s and gives a transposed one.
ModulePresentation rep_commutator(const AlgebraPresentation& a, const ModulePresentation& m, AlgebraClass class_in,
                                  const CheckOptions& o = {});

}  // namespace hompois
