#pragma once

#include "representations/representations.hpp"

namespace hompois {

/// Two algebras acting on each other. `ab` is A acting on B (module_dim =
/// b.dim), `ba` is B acting on A. Action names follow the class: s for the
/// dot, rho for the bracket, l and r for the star.
struct MatchedPairData {
  AlgebraPresentation a;
  AlgebraPresentation b;
  ModulePresentation ab;
  ModulePresentation ba;
};

// A ⊕ B, A block first:
//   (x+a)·(y+b) = x·y + s_A(x)b + s_A(y)a + a·b + s_B(a)y + s_B(b)x
//   [x+a, y+b]  = {x,y} + ρ_A(x)b - ρ_A(y)a + {a,b} + ρ_B(a)y - ρ_B(b)x
//   (x+a)∗(y+b) = x∗y + l_A(x)b + r_A(y)a + a∗b + l_B(a)y + r_B(b)x
// with twist α ⊕ β. Both action sets are gated on their module checks and
// must carry the opposite algebra's twist as module twist.
AlgebraPresentation build_double(const MatchedPairData& mp, AlgebraClass cls, const CheckOptions& o = {});

// The same sum without gating the action sets.
AlgebraPresentation assemble_double(const MatchedPairData& mp, AlgebraClass cls);

// The verdict is the class check of the double. The sub-report "advisory"
// evaluates the written compatibility families that type-check, one identity
// per family, and lists the skipped ones in its notes. Flag
// advisory_implies_normative is false when every advisory family passes yet
// the double fails.
CheckReport check_matched_pair(const MatchedPairData& mp, AlgebraClass cls, const CheckOptions& o = {});

// Sub-adjacent algebras with ρ = l - r on both sides.
MatchedPairData mp_pre_lie_to_lie(const MatchedPairData& mp, const CheckOptions& o = {});

// (B, A, ba, ab).
MatchedPairData swap_pair(const MatchedPairData& mp);
// A ⊕ B -> B ⊕ A.
Matrix block_swap(std::size_t dim_a, std::size_t dim_b);
// Block swap as a class morphism from the double of mp to the double of the
// swapped pair.
CheckReport check_double_symmetry(const MatchedPairData& mp, AlgebraClass cls, const CheckOptions& o = {});

}  // namespace hompois
