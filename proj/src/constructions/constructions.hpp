#pragma once

#include "axioms/axioms.hpp"

namespace hompois {

// Every builder gates its inputs (throwing Error(Precondition) with the failed
// report) and re-verifies its output (throwing Error(Postcondition)).

// Ops become g ∘ op, twist becomes g. Input must be untwisted (α = id) and a
// member of `cls`; g must be a class morphism of it.
AlgebraPresentation yau_twist(const AlgebraPresentation& a, AlgebraClass cls, const Matrix& g,
                              const CheckOptions& o = {});
// Ops become g ∘ op, twist becomes α ∘ g; g must be a class morphism
// commuting with α.
AlgebraPresentation compose_twist(const AlgebraPresentation& a, AlgebraClass cls, const Matrix& g,
                                  const CheckOptions& o = {});
// Type 1: αⁿ ∘ op with twist α^{n+1}; type 2: α^{2ⁿ-1} ∘ op with twist α^{2ⁿ}.
AlgebraPresentation derived_algebra(const AlgebraPresentation& a, AlgebraClass cls, unsigned n, int type,
                                    const CheckOptions& o = {});
// Keeps the ops of a transposed Poisson algebra and sets α to x -> h·x.
AlgebraPresentation alpha_h_twist(const AlgebraPresentation& a, const Vec& h, const CheckOptions& o = {});
// {x,y} = x·D(y) - D(x)·y.
AlgebraPresentation bracket_from_derivation(const AlgebraPresentation& a, const Matrix& d, const CheckOptions& o = {});
// {x,y} = D1(x)·D2(y) - D1(y)·D2(x).
AlgebraPresentation bracket_from_two_derivations(const AlgebraPresentation& a, const Matrix& d1, const Matrix& d2,
                                                 const CheckOptions& o = {});
// Basis e_i ⊗ f_j at index i * dim2 + j.
AlgebraPresentation tensor_product(const AlgebraPresentation& a1, const AlgebraPresentation& a2, AlgebraClass cls,
                                   const CheckOptions& o = {});
// Commutator bracket of the star; HomPreLie -> HomLie, HomPreLiePoisson ->
// TransposedHomPoisson (dot kept).
AlgebraPresentation sub_adjacent(const AlgebraPresentation& a, AlgebraClass class_in, const CheckOptions& o = {});
// The commutator bracket alone, without gating.
BilinearMap commutator(const BilinearMap& op);

// Flags: trivial, dot_associative, bracket_jacobi, not_rigid. Input must be
// untwisted and g a morphism of its dot and bracket.
CheckReport twisting_report(const AlgebraPresentation& a, const Matrix& g, const CheckOptions& o = {});

// x -> h·x for the op "dot".
Matrix left_multiplication(const AlgebraPresentation& a, const Vec& h);

}  // namespace hompois
