#include "support.hpp"

#include <doctest.h>

using namespace fx;

namespace {

constexpr auto C = AlgebraClass::CommHomAssociative;
constexpr auto L = AlgebraClass::HomLie;
constexpr auto T = AlgebraClass::TransposedHomPoisson;
constexpr auto PL = AlgebraClass::HomPreLie;
constexpr auto PLP = AlgebraClass::HomPreLiePoisson;

std::vector<std::string> action_names(AlgebraClass c) {
  switch (c) {
    case C: return {acts::s};
    case L: return {acts::rho};
    case T: return {acts::s, acts::rho};
    case PL: return {acts::l, acts::r};
    default: return {acts::s, acts::l, acts::r};
  }
}

ModulePresentation zero_actions(const AlgebraPresentation& on, const AlgebraPresentation& acting, AlgebraClass c) {
  ModulePresentation m(acting.dim, on.dim);
  for (const auto& n : action_names(c)) m.actions[n] = std::vector<Matrix>(acting.dim, Matrix(on.dim, on.dim));
  m.beta = on.alpha();
  return m;
}

AlgebraPresentation zero_algebra(const Matrix& alpha, AlgebraClass c) {
  AlgebraPresentation z(alpha.rows());
  for (const auto& n : class_ops(c)) z.ops[n] = BilinearMap(alpha.rows());
  z.maps[ops::alpha] = alpha;
  return z;
}

AlgebraPresentation plp_twisted() {
  auto a = cat("PLP2", bind({{"a", "0"}}));
  a.maps[ops::alpha] = Matrix::identity(2);
  return yau_twist(a, PLP, mat({{1, 0}, {0, 3}}));
}

AlgebraPresentation tp_twisted() { return yau_twist(tp2v(), T, mat({{3, 0}, {0, 1}})); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Argument;
}

}  // namespace

TEST_CASE("a zero opposite algebra recovers the semidirect product exactly") {
  const std::vector<std::pair<AlgebraClass, AlgebraPresentation>> cases = {
      {C, cat("CA2a")}, {L, tp_twisted()}, {T, tp_twisted()}, {PL, plp_twisted()}, {PLP, plp_twisted()}};
  for (const auto& [cls, a] : cases) {
    CAPTURE(to_string(cls));
    const auto m = regular_module(a, cls);
    MatchedPairData mp{a, zero_algebra(m.beta, cls), m, zero_actions(a, zero_algebra(m.beta, cls), cls)};
    const auto d = build_double(mp, cls);
    const auto sd = semidirect_product(a, m, cls);
    CHECK(d == sd);
    CHECK(serialize(to_document(d)) == serialize(to_document(sd)));
    CHECK(check_double_symmetry(mp, cls).passed());
  }
}

TEST_CASE("zero actions give the direct product") {
  const auto a = tp_twisted();
  const auto b = tp2v();
  MatchedPairData mp{a, b, zero_actions(b, a, T), zero_actions(a, b, T)};
  const auto r = check_matched_pair(mp, T);
  CHECK(r.passed());
  CHECK(r.flag("double_passes"));
  CHECK(r.flag("advisory_implies_normative"));
  const auto d = build_double(mp, T);
  CHECK(d.alpha() == direct_sum(a.alpha(), b.alpha()));
  // No cross terms: e1 (from A) times f1 (index 2) vanishes.
  CHECK(is_zero(d.op(ops::dot).product(0, 2)));
  CHECK(is_zero(d.op(ops::bracket).product(1, 3)));
  CHECK(check_double_symmetry(mp, T).passed());

  // A one-dimensional zero B.
  const auto z = zero_algebra(Matrix::identity(1), T);
  MatchedPairData small{a, z, zero_actions(z, a, T), zero_actions(a, z, T)};
  CHECK(check_matched_pair(small, T).passed());
  CHECK(build_double(small, T).dim == 3);
}

TEST_CASE("regular actions on both sides") {
  const auto a = cat("CA2a");
  const auto m = regular_module(a, C);
  MatchedPairData mp{a, a, m, m};
  const auto r = check_matched_pair(mp, C);
  // The normative verdict is the class check of the double.
  const auto d = assemble_double(mp, C);
  Rng rng(23);
  CHECK(r.passed() == class_holds_on_random(d, C, rng));
  CHECK(r.flag("double_passes") == r.passed());
  CHECK(r.find("advisory") != nullptr);
  CHECK(check_double_symmetry(mp, C).passed());
}

TEST_CASE("corrupted actions") {
  const auto a = tp_twisted();
  const auto b = tp2v();
  SUBCASE("an action that is not a module is rejected at the gate") {
    auto ab = zero_actions(b, a, T);
    ab.actions[acts::s][0] = mat({{1, 0}, {0, 0}});
    MatchedPairData mp{a, b, ab, zero_actions(a, b, T)};
    try {
      check_matched_pair(mp, T);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
      REQUIRE(e.report().has_value());
      CHECK(e.report()->name() == "sides");
    }
  }
  SUBCASE("module twists must match the acted-on algebra") {
    auto ab = zero_actions(b, a, T);
    ab.beta = 2 * Matrix::identity(2);
    MatchedPairData mp{a, b, ab, zero_actions(a, b, T)};
    try {
      build_double(mp, T);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
      CHECK(e.report()->name() == "module_twists");
    }
  }
  SUBCASE("valid modules that do not match give a failing double") {
    // A = B = CA2a with regular actions on one side and zero on the other.
    const auto ca = cat("CA2a");
    MatchedPairData mp{ca, ca, regular_module(ca, C), zero_actions(ca, ca, C)};
    const auto r = check_matched_pair(mp, C);
    Rng rng(29);
    CHECK(r.passed() == class_holds_on_random(assemble_double(mp, C), C, rng));
    if (!r.passed()) CHECK(r.witnesses().front().identity.rfind("double/", 0) == 0);
  }
}

TEST_CASE("pre-Lie pairs pass to their sub-adjacent Lie pairs") {
  const auto a = plp_twisted();
  auto pre = a;
  pre.ops.erase(ops::dot);
  MatchedPairData mp{pre, pre, zero_actions(pre, pre, PL), zero_actions(pre, pre, PL)};
  const auto lie = mp_pre_lie_to_lie(mp);
  CHECK(lie.a.op(ops::bracket) == commutator(pre.op(ops::star)));
  for (const auto& x : lie.ab.action(acts::rho)) CHECK(x.is_zero());
  CHECK(check_matched_pair(lie, L).passed());

  const auto rho = rep_commutator(pre, regular_module(pre, PL), PL);
  CHECK(rho.action(acts::rho) == regular_module(sub_adjacent(pre, PL), L).action(acts::rho));
}

TEST_CASE("swap helpers") {
  const auto p = block_swap(2, 3);
  CHECK(p.rows() == 5);
  CHECK(p * block_swap(3, 2) == Matrix::identity(5));
  CHECK(p.apply(Vec{1, 2, 3, 4, 5}) == Vec{3, 4, 5, 1, 2});
  const auto a = tp_twisted();
  const auto b = tp2v();
  MatchedPairData mp{a, b, zero_actions(b, a, T), zero_actions(a, b, T)};
  const auto s = swap_pair(mp);
  CHECK(s.a == b);
  CHECK(s.ab == mp.ba);
  CHECK(kind_of([&] { build_double(mp, AlgebraClass::HomPoisson); }) == ErrorKind::Argument);
}
