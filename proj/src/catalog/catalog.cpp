#include "catalog/catalog.hpp"

#include "core/error.hpp"

namespace hompois {

namespace {

struct RawEntry {
  const char* id;
  AlgebraClass cls;
  const char* json;
  const char* description;
  const char* erratum;
  bool negative;
};

constexpr const char* kThp2 = R"({
  "dim": 2, "params": ["lambda"],
  "ops": {
    "dot": [{"i":0,"j":0,"k":0,"c":"-1"}, {"i":0,"j":1,"k":1,"c":"1"}, {"i":1,"j":0,"k":1,"c":"1"}],
    "bracket": [{"i":0,"j":1,"k":1,"c":"lambda"}, {"i":1,"j":0,"k":1,"c":"-lambda"}]
  },
  "maps": {"alpha": [["-1","0"],["0","-1"]], "D": [["0","0"],["0","lambda"]]}
})";

const RawEntry kRaw[] = {
    {"CA2a", AlgebraClass::CommHomAssociative, R"({
  "dim": 2,
  "ops": {"dot": [{"i":0,"j":0,"k":0,"c":"-1"}, {"i":0,"j":1,"k":1,"c":"1"}, {"i":1,"j":0,"k":1,"c":"1"},
                  {"i":1,"j":1,"k":0,"c":"1"}]},
  "maps": {"alpha": [["1","0"],["0","-1"]]}
})",
     "2-dim commutative Hom-associative algebra with alpha = diag(1,-1)", "", false},
    {"CA2b", AlgebraClass::CommHomAssociative, R"({
  "dim": 2,
  "ops": {"dot": [{"i":0,"j":0,"k":0,"c":"1"}, {"i":1,"j":1,"k":1,"c":"1"}]},
  "maps": {"alpha": [["1","0"],["0","0"]]}
})",
     "2-dim commutative Hom-associative algebra with alpha = diag(1,0)", "", false},
    {"CA3a", AlgebraClass::CommHomAssociative, R"({
  "dim": 3,
  "ops": {"dot": [{"i":0,"j":0,"k":0,"c":"1"},
                  {"i":1,"j":1,"k":1,"c":"1"}, {"i":1,"j":1,"k":2,"c":"1"},
                  {"i":2,"j":2,"k":1,"c":"1"}, {"i":2,"j":2,"k":2,"c":"1"},
                  {"i":1,"j":2,"k":1,"c":"1"}, {"i":1,"j":2,"k":2,"c":"1"},
                  {"i":2,"j":1,"k":1,"c":"1"}, {"i":2,"j":1,"k":2,"c":"1"}]},
  "maps": {"alpha": [["1","0","0"],["0","0","0"],["0","0","0"]]}
})",
     "3-dim commutative Hom-associative algebra with alpha projecting onto e1", "", false},
    {"CA3b", AlgebraClass::CommHomAssociative, R"({
  "dim": 3, "params": ["p1", "p2", "p3"],
  "ops": {"dot": [{"i":0,"j":0,"k":0,"c":"p1"}, {"i":1,"j":1,"k":1,"c":"p2"}, {"i":2,"j":2,"k":2,"c":"p3"}]},
  "maps": {"alpha": [["1","0","0"],["0","1","0"],["0","0","0"]]}
})",
     "3-dim diagonal commutative Hom-associative algebra e_i e_i = p_i e_i, alpha = diag(1,1,0)", "", false},
    {"HP3", AlgebraClass::HomPoisson, R"({
  "dim": 3, "params": ["a", "b", "c", "d", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"],
  "ops": {
    "dot": [{"i":0,"j":0,"k":0,"c":"1"}, {"i":0,"j":1,"k":2,"c":"1"}, {"i":1,"j":0,"k":2,"c":"1"}],
    "bracket": [{"i":0,"j":1,"k":1,"c":"a"}, {"i":0,"j":1,"k":2,"c":"b"},
                {"i":1,"j":0,"k":1,"c":"-a"}, {"i":1,"j":0,"k":2,"c":"-b"},
                {"i":0,"j":2,"k":1,"c":"c"}, {"i":0,"j":2,"k":2,"c":"d"},
                {"i":2,"j":0,"k":1,"c":"-c"}, {"i":2,"j":0,"k":2,"c":"-d"}]
  },
  "maps": {"alpha": [["0","0","0"],["lambda1","lambda3","lambda5"],["lambda2","lambda4","lambda6"]]}
})",
     "3-dim Hom-Poisson family with parameters a, b, c, d and the six entries of alpha",
     "fails Hom-associativity at (e1,e1,e2) when every parameter is 1; the all-zero binding passes",
     false},
    {"THP2", AlgebraClass::TransposedHomPoisson, kThp2,
     "2-dim transposed Hom-Poisson algebra with alpha = -id, bracket induced by the derivation D = diag(0, lambda)",
     "as stored the dot is not Hom-associative for any lambda: the associator at (e1,e1,e2) is (0,2); with "
     "e1.e1 = +e1 the structure passes",
     false},
    {"THP2-HP", AlgebraClass::HomPoisson, kThp2,
     "THP2 read as a Hom-Poisson algebra; expected to fail whenever lambda is nonzero", "", true},
    {"TP2", AlgebraClass::TransposedHomPoisson, R"({
  "dim": 2,
  "ops": {
    "dot": [{"i":0,"j":1,"k":0,"c":"1"}, {"i":1,"j":0,"k":0,"c":"1"}, {"i":1,"j":1,"k":1,"c":"1"}],
    "bracket": [{"i":0,"j":1,"k":1,"c":"1"}, {"i":1,"j":0,"k":1,"c":"-1"}]
  },
  "maps": {"alpha": [["1","0"],["0","1"]], "alpha_e1": [["0","1"],["0","0"]]}
})",
     "2-dim transposed Poisson algebra (alpha = id) with the twist alpha_e1 = left multiplication by e1",
     "as stored the transposed Leibniz rule fails at (e1,e2,e1) with residual (2,0); with {e1,e2} = e1 it passes",
     false},
    {"PLP2", AlgebraClass::HomPreLiePoisson, R"({
  "dim": 2, "params": ["a"],
  "ops": {
    "dot": [{"i":0,"j":0,"k":1,"c":"a"}],
    "star": [{"i":0,"j":0,"k":0,"c":"1"}, {"i":0,"j":1,"k":1,"c":"1"}]
  },
  "maps": {"alpha": [["2","0"],["0","2"]]}
})",
     "2-dim Hom-pre-Lie Poisson algebra with alpha = 2 id",
     "the compatibility (x.y)*alpha(z) = alpha(x).(y*z) fails at (e1,e1,e1) for every a != 0", false},
};

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (const auto& r : kRaw) {
    out.push_back({r.id, r.cls, parse_algebra_document(r.json), r.description, r.erratum, r.negative});
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& id) {
  for (const auto& e : catalog_list()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorKind::Argument, "unknown catalog id '" + id + "'");
}

AlgebraPresentation catalog_instantiate(const std::string& id, const ParameterBinding& binding) {
  return instantiate(catalog_get(id).document, binding);
}

}  // namespace hompois
