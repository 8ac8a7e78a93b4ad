#include "support.hpp"

#include <doctest.h>

using namespace fx;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Argument;
}

constexpr auto C = AlgebraClass::CommHomAssociative;
constexpr auto L = AlgebraClass::HomLie;
constexpr auto T = AlgebraClass::TransposedHomPoisson;
constexpr auto PL = AlgebraClass::HomPreLie;
constexpr auto PLP = AlgebraClass::HomPreLiePoisson;

// PLP2 at a = 0 with alpha = id; the pre-Lie identity is homogeneous in alpha
// so this is an (untwisted) pre-Lie Poisson algebra.
AlgebraPresentation plp_untwisted() {
  auto a = cat("PLP2", bind({{"a", "0"}}));
  a.maps[ops::alpha] = Matrix::identity(2);
  return a;
}

// Multiplicative twisted fixtures: Yau twists by automorphisms.
AlgebraPresentation tp_twisted() { return yau_twist(tp2v(), T, mat({{3, 0}, {0, 1}})); }
AlgebraPresentation plp_twisted() { return yau_twist(plp_untwisted(), PLP, mat({{1, 0}, {0, 3}})); }

// Left multiplication matrices read straight off the table.
std::vector<Matrix> left_of(const BilinearMap& mu) {
  const std::size_t n = mu.dim();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = mu.at(i, j, k);
    out.push_back(m);
  }
  return out;
}

std::vector<Matrix> right_of(const BilinearMap& mu) { return left_of(opposite(mu)); }

ModulePresentation zero_module(std::size_t adim, std::size_t mdim, std::vector<std::string> names) {
  ModulePresentation m(adim, mdim);
  for (const auto& n : names) m.actions[n] = std::vector<Matrix>(adim, Matrix(mdim, mdim));
  return m;
}

}  // namespace

TEST_CASE("regular structures are read off the tables") {
  const auto a = tp_twisted();
  const auto m = regular_module(a, T);
  CHECK(m.action(acts::s) == left_of(a.op(ops::dot)));
  CHECK(m.action(acts::rho) == left_of(a.op(ops::bracket)));
  CHECK(m.beta == a.alpha());
  const auto p = regular_module(plp_untwisted(), PLP);
  CHECK(p.action(acts::l) == left_of(plp_untwisted().op(ops::star)));
  CHECK(p.action(acts::r) == right_of(plp_untwisted().op(ops::star)));
  CHECK(kind_of([] { regular_module(tp2v(), AlgebraClass::HomPoisson); }) == ErrorKind::Argument);
}

TEST_CASE("commutative Hom-associative bimodules") {
  const auto a = cat("CA2a");
  CHECK(check_bimodule_comm_assoc(a, regular_module(a, C)).passed());
  CHECK(check_bimodule_comm_assoc(a, zero_module(2, 3, {acts::s})).passed());

  auto m = regular_module(a, C);
  m.beta = Matrix::identity(2);
  const auto r = check_bimodule_comm_assoc(a, m);
  CHECK_FALSE(r.passed());
  // beta s(e1) = s(e1) but s(alpha e1) beta = s(e1); at e2: s(e2) vs s(-e2) = -s(e2).
  bool twist = false;
  for (const auto& w : r.witnesses())
    if (w.tuple.front() == 1 && w.identity.find("twist") != std::string::npos) twist = true;
  CHECK(twist);
  CHECK_THROWS_AS(check_bimodule_comm_assoc(a, zero_module(2, 2, {acts::rho})), Error);
}

TEST_CASE("Hom-Lie representations") {
  const auto a = tp_twisted();
  CHECK(check_rep_hom_lie(a, regular_module(a, L)).passed());
  CHECK(check_rep_hom_lie(a, zero_module(2, 2, {acts::rho})).passed());
  // beta = 0 kills the left side and the intertwining, but not
  // rho(alpha x)rho(y) - rho(alpha y)rho(x).
  auto dead = regular_module(a, L);
  dead.beta = Matrix(2, 2);
  CHECK_FALSE(check_rep_hom_lie(a, dead).passed());

  // With alpha = -id the bracket is not multiplicative and ad is not a representation.
  const auto neg = check_rep_hom_lie(thp2v(1), regular_module(thp2v(1), L));
  CHECK_FALSE(neg.passed());
}

TEST_CASE("transposed representations") {
  for (const auto& a : {tp2v(), tp_twisted(), alpha_h_twist(tp2v(), Vec{0, 1})}) {
    CHECK(check_rep_transposed(a, regular_module(a, T)).passed());
  }
  const auto a = tp_twisted();
  CHECK(check_rep_transposed(a, zero_module(2, 2, {acts::s, acts::rho})).passed());

  auto m = regular_module(a, T);
  for (auto& r : m.actions[acts::rho]) r = 2 * r;
  const auto r = check_rep_transposed(a, m);
  CHECK_FALSE(r.passed());
  // rho({x,y}) beta picks up a factor 2, the quadratic side a factor 4.
  bool lie = false;
  for (const auto& w : r.witnesses())
    if (w.identity == "rep_hom_lie/rep_lie") lie = true;
  CHECK(lie);
}

TEST_CASE("pre-Lie bimodules") {
  for (const auto& a : {plp_untwisted(), plp_twisted()}) {
    CHECK(check_bimodule_pre_lie(a, regular_module(a, PL)).passed());
    CHECK(check_bimodule_pre_lie_poisson(a, regular_module(a, PLP)).passed());
  }
  CHECK(check_bimodule_pre_lie(plp_untwisted(), zero_module(2, 2, {acts::l, acts::r})).passed());
  CHECK(check_bimodule_pre_lie_poisson(plp_untwisted(), zero_module(2, 2, {acts::s, acts::l, acts::r})).passed());

  SUBCASE("dropping r leaves only the l-conditions") {
    auto m = regular_module(plp_untwisted(), PL);
    for (auto& r : m.actions[acts::r]) r = Matrix(2, 2);
    // Every condition mentioning r is linear in r.
    CHECK(check_bimodule_pre_lie(plp_untwisted(), m).passed());
  }
  SUBCASE("the twisted regular bimodule of PLP2 at a = 0 fails the intertwining") {
    const auto p = cat("PLP2", bind({{"a", "0"}}));
    CHECK_FALSE(check_bimodule_pre_lie(p, regular_module(p, PL)).passed());
  }
}

TEST_CASE("semidirect products") {
  SUBCASE("all five classes with regular structures") {
    const std::vector<std::pair<AlgebraClass, AlgebraPresentation>> cases = {
        {C, cat("CA2a")}, {L, tp_twisted()}, {T, tp_twisted()}, {PL, plp_twisted()}, {PLP, plp_twisted()}};
    for (const auto& [cls, a] : cases) {
      CAPTURE(to_string(cls));
      const auto sd = semidirect_product(a, regular_module(a, cls), cls);
      CHECK(sd.dim == 4);
      CHECK(sd.alpha() == direct_sum(a.alpha(), a.alpha()));
      Rng rng(17);
      CHECK(class_holds_on_random(sd, cls, rng));
    }
  }
  SUBCASE("zero actions give A plus an abelian ideal") {
    const auto a = tp_twisted();
    auto m = zero_module(2, 1, {acts::s, acts::rho});
    m.beta = mat({{5}});
    const auto sd = semidirect_product(a, m, T);
    CHECK(sd.dim == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const Scalar want = (i < 2 && j < 2 && k < 2) ? a.op(ops::dot).at(i, j, k) : Scalar(0);
          CHECK(sd.op(ops::dot).at(i, j, k) == want);
        }
  }
  SUBCASE("the explicit formulas on the algebra-module cross terms") {
    const auto a = cat("CA2a");
    const auto m = regular_module(a, C);
    const auto sd = semidirect_product(a, m, C);
    // (x + u).(y + v) = xy + s(x)v + s(y)u; pick x = e1, v = e2' (index 3).
    CHECK(sd.op(ops::dot).product(0, 3) == Vec{0, 0, 0, 1});
    CHECK(sd.op(ops::dot).product(3, 0) == Vec{0, 0, 0, 1});
    CHECK(sd.op(ops::dot).product(2, 3).size() == 4);
    CHECK(is_zero(sd.op(ops::dot).product(2, 3)));
  }
  CHECK(kind_of([] { semidirect_product(thp2v(1), regular_module(thp2v(1), T), T); }) == ErrorKind::Precondition);
}

TEST_CASE("dual representations") {
  SUBCASE("untwisted transposed Poisson") {
    const auto a = tp2v();
    const auto m = regular_module(a, T);
    const auto d = dual_representation(a, m);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(d.dual.action(acts::s)[i] == m.action(acts::s)[i].transpose());
      CHECK(d.dual.action(acts::rho)[i] == -m.action(acts::rho)[i].transpose());
    }
    CHECK(d.dual.beta == m.beta.transpose());
    CHECK(d.report.flags().count("hypotheses"));
    CHECK(d.report.flags().count("hypotheses_alpha_variant"));
    CHECK(d.report.flags().count("strict_paper_form"));
    if (d.report.flag("hypotheses")) CHECK(d.report.flag("dual_is_representation"));
    CHECK(d.report.flag("dual_is_representation") == check_rep_transposed(a, d.dual).passed());

    // Dualizing twice returns the original actions; the second pass is gated
    // on the dual being a representation.
    if (d.report.flag("dual_is_representation")) {
      const auto dd = dual_representation(a, d.dual);
      CHECK(dd.dual.action(acts::s) == m.action(acts::s));
      CHECK(dd.dual.action(acts::rho) == m.action(acts::rho));
    } else {
      CHECK(kind_of([&] { dual_representation(a, d.dual); }) == ErrorKind::Precondition);
    }
  }
  SUBCASE("zero actions") {
    const auto a = tp_twisted();
    const auto d = dual_representation(a, zero_module(2, 3, {acts::s, acts::rho}));
    CHECK(d.report.passed());
    CHECK(d.report.flag("hypotheses"));
    CHECK(d.report.flag("dual_is_representation"));
  }
  CHECK(kind_of([] { dual_representation(thp2v(1), regular_module(thp2v(1), T)); }) == ErrorKind::Precondition);
}

TEST_CASE("bimodules from morphisms") {
  const auto a = plp_untwisted();
  const auto m = bimodule_from_morphism(a, a, Matrix::identity(2));
  const auto reg = regular_module(a, PLP);
  CHECK(m.action(acts::s) == reg.action(acts::s));
  CHECK(m.action(acts::l) == reg.action(acts::l));
  CHECK(m.action(acts::r) == reg.action(acts::r));
  CHECK(m.beta == a.alpha());

  const auto z = bimodule_from_morphism(a, a, Matrix(2, 2));
  for (const auto& x : z.action(acts::l)) CHECK(x.is_zero());
  CHECK(check_bimodule_pre_lie_poisson(a, z).passed());

  const auto t = plp_twisted();
  CHECK(check_bimodule_pre_lie_poisson(t, bimodule_from_morphism(t, t, t.alpha())).passed());
}

TEST_CASE("twisted bimodules") {
  const auto a = plp_twisted();
  const auto m = regular_module(a, PLP);
  const auto same = twisted_bimodule(a, m, Matrix::identity(2), Matrix::identity(2));
  CHECK(same.algebra == a);
  CHECK(same.module == m);

  const auto p = twisted_bimodule(a, m, a.alpha(), m.beta);
  CHECK(p.algebra.alpha() == a.alpha() * a.alpha());
  CHECK(p.module.beta == m.beta * m.beta);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(p.module.action(acts::l)[i] == m.act(acts::l, a.alpha().column(i)) * m.beta);
  CHECK(check_bimodule_pre_lie_poisson(p.algebra, p.module).passed());

  const auto z = twisted_bimodule(a, m, Matrix::identity(2), Matrix(2, 2));
  for (const auto& x : z.module.action(acts::s)) CHECK(x.is_zero());
}

TEST_CASE("commutator representations") {
  for (const auto& a : {plp_untwisted(), plp_twisted()}) {
    const auto rho = rep_commutator(a, regular_module(a, PLP), PLP);
    const auto sub = sub_adjacent(a, PLP);
    CHECK(rho.action(acts::rho) == regular_module(sub, T).action(acts::rho));
    CHECK(rho.action(acts::s) == regular_module(a, PLP).action(acts::s));
    CHECK(check_rep_transposed(sub, rho).passed());
  }
  auto a = plp_untwisted();
  a.ops.erase(ops::dot);
  const auto flat = rep_commutator(a, zero_module(2, 2, {acts::l, acts::r}), PL);
  for (const auto& x : flat.action(acts::rho)) CHECK(x.is_zero());
}
