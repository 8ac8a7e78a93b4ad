#pragma once

#include "core/presentation.hpp"
#include "core/report.hpp"

#include <string>
#include <vector>

namespace hompois {

enum class AlgebraClass {
  CommHomAssociative,
  HomLie,
  HomPoisson,
  TransposedHomPoisson,
  HomPreLie,
  HomPreLiePoisson,
};

const char* to_string(AlgebraClass c);
// Accepts the kebab-case names printed by to_string; "transposed-poisson" is
// an alias of the transposed class.
AlgebraClass parse_class(const std::string& name);
// Ops a presentation of the class must carry.
std::vector<std::string> class_ops(AlgebraClass c);

struct CheckOptions {
  std::size_t max_witnesses = kDefaultMaxWitnesses;
};

CheckReport check_comm_hom_assoc(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_hom_lie(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_hom_poisson(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_transposed_hom_poisson(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_hom_pre_lie(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_hom_pre_lie_poisson(const AlgebraPresentation& a, const CheckOptions& o = {});
CheckReport check_class(const AlgebraPresentation& a, AlgebraClass c, const CheckOptions& o = {});

CheckReport check_multiplicative(const AlgebraPresentation& a, const std::string& op, const std::string& map,
                                 const CheckOptions& o = {});
CheckReport check_derivation(const AlgebraPresentation& a, const std::string& op, const Matrix& d,
                             const CheckOptions& o = {});
// The Leibniz family alone, without D∘α = α∘D.
CheckReport check_leibniz(const AlgebraPresentation& a, const std::string& op, const Matrix& d,
                          const CheckOptions& o = {});
CheckReport check_morphism(const AlgebraPresentation& src, const AlgebraPresentation& dst, const Matrix& f,
                           const std::vector<std::string>& op_names, const CheckOptions& o = {});

// Cyclic identity α(x)·{y,z} + α(y)·{z,x} + α(z)·{x,y} = 0, plus the
// four-variable identity {xz,yt} + {xt,yz} = 2 (zt)·{x,y} when α = id.
CheckReport check_transposed_consequences(const AlgebraPresentation& a, const CheckOptions& o = {});

// Reports is_hom_poisson, is_transposed and the annihilation condition
// α(x)·{y,z} = 0 = {x·y, α(z)}, and checks that (Hom-Poisson and transposed)
// holds exactly when annihilation holds. The biconditional is only claimed
// for a commutative Hom-associative dot with a Hom-Lie bracket; otherwise it
// is marked vacuous and the report passes.
CheckReport check_poisson_intersection(const AlgebraPresentation& a, const CheckOptions& o = {});

// Untwisted associativity of `op` (α = id in the Hom-associator).
CheckReport check_associative(const AlgebraPresentation& a, const std::string& op, const CheckOptions& o = {});
// Untwisted skew-symmetry and Jacobi identity of `op`.
CheckReport check_lie(const AlgebraPresentation& a, const std::string& op, const CheckOptions& o = {});

}  // namespace hompois
