#pragma once

#include "representations/representations.hpp"

#include <optional>

namespace hompois {

// T: V -> A, a dim_A × dim_V matrix. Families: αT = Tβ, and for u, v in V
//   T(u)·T(v) = T(s(Tu)v + s(Tv)u)       (dot classes)
//   {T(u), T(v)} = T(ρ(Tu)v - ρ(Tv)u)    (bracket classes)
// cls is one of CommHomAssociative, HomLie, TransposedHomPoisson; the module
// is gated on its representation check.
CheckReport check_o_operator(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                             AlgebraClass cls, const CheckOptions& o = {});
// O-operator for the regular structure of a.
CheckReport check_rota_baxter(const AlgebraPresentation& a, const Matrix& r, AlgebraClass cls,
                              const CheckOptions& o = {});

// On V with twist β: u ⋄ v = s(Tu)v + s(Tv)u as "dot" and u ∗ v = ρ(Tu)v as
// "star". CommHomAssociative yields the dot, HomLie the star (Hom-pre-Lie),
// TransposedHomPoisson both (Hom-pre-Lie Poisson).
AlgebraPresentation induced_products(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                                     AlgebraClass cls = AlgebraClass::TransposedHomPoisson,
                                     const CheckOptions& o = {});
// T as a morphism from (V, ⋄, commutator of ∗, β) to a.
CheckReport o_operator_is_morphism(const AlgebraPresentation& a, const ModulePresentation& m, const Matrix& t,
                                   AlgebraClass cls = AlgebraClass::TransposedHomPoisson,
                                   const CheckOptions& o = {});

// x·y = T(s(x)T⁻¹y + s(y)T⁻¹x), x∗y = T(ρ(x)T⁻¹y) on A with twist α. Its
// sub-adjacent structure must reproduce a's dot and bracket.
AlgebraPresentation compatible_pre_lie_from_invertible(const AlgebraPresentation& a, const ModulePresentation& m,
                                                       const Matrix& t, const CheckOptions& o = {});

// x⋄y = R(x)·y + x·R(y), x∗y = {R(x), y} with twist α; R must be a
// Rota-Baxter operator of the transposed class.
AlgebraPresentation rota_baxter_induced(const AlgebraPresentation& a, const Matrix& r, const CheckOptions& o = {});

// Canonical basis (reduced row echelon over the unknowns D[r][c] at index
// r * n + c) of the derivations of `op`, optionally commuting with a named map.
std::vector<Matrix> derivation_space(const AlgebraPresentation& a, const std::string& op,
                                     const std::optional<std::string>& commuting_with = std::nullopt,
                                     const CheckOptions& o = {});

}  // namespace hompois
