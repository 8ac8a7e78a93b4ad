#pragma once

#include "core/presentation.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hompois {

using ParameterBinding = std::map<std::string, Scalar>;

// "k=v,k2=v2" with rational values; empty text gives an empty binding.
ParameterBinding parse_binding(std::string_view text);

/// A coefficient as written in a document: a rational constant, or a rational
/// multiple of one declared parameter ("lambda", "-a", "3/2*p1").
struct Coefficient {
  Scalar factor = 0;
  std::string param;

  static Coefficient constant(const Scalar& s) { return {s, {}}; }
  bool is_constant() const { return param.empty(); }
  bool is_zero() const { return sgn(factor) == 0; }
  Scalar evaluate(const ParameterBinding& b) const;
  bool operator==(const Coefficient& o) const = default;
};

Coefficient parse_coefficient(std::string_view text, const std::vector<std::string>& params);
std::string to_string(const Coefficient& c);

using ParamMatrix = std::vector<std::vector<Coefficient>>;

struct ParamEntry {
  std::size_t i, j, k;
  Coefficient c;
  bool operator==(const ParamEntry& o) const = default;
};

/// Algebra file contents before parameter substitution.
struct AlgebraDocument {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<std::string> params;
  std::map<std::string, std::vector<ParamEntry>> ops;
  std::map<std::string, ParamMatrix> maps;
  bool operator==(const AlgebraDocument& o) const = default;
};

/// Representation file: `dim` is the algebra dimension.
struct ModuleDocument {
  std::size_t dim = 0;
  std::size_t module_dim = 0;
  std::vector<std::string> basis;
  std::vector<std::string> params;
  std::map<std::string, std::vector<ParamMatrix>> actions;
  ParamMatrix beta;
  bool operator==(const ModuleDocument& o) const = default;
};

/// A single matrix (twist, derivation, O-operator T, bilinear form B).
struct MatrixDocument {
  std::string key = "map";
  std::vector<std::string> params;
  ParamMatrix rows;
  bool operator==(const MatrixDocument& o) const = default;
};

struct CoalgebraDocument {
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::map<std::string, std::vector<ParamEntry>> coops;
  bool operator==(const CoalgebraDocument& o) const = default;
};

AlgebraDocument parse_algebra_document(std::string_view text);
ModuleDocument parse_module_document(std::string_view text);
// Accepts a bare array of rows or an object holding one of the keys
// "map", "T", "B", "R", "D", "g", "f".
MatrixDocument parse_matrix_document(std::string_view text);
CoalgebraDocument parse_coalgebra_document(std::string_view text);

std::string serialize(const AlgebraDocument& d);
std::string serialize(const ModuleDocument& d);
std::string serialize(const MatrixDocument& d);
std::string serialize(const CoalgebraDocument& d);

// substitute_params: every coefficient becomes concrete. Names in the
// binding that the document does not declare are ignored; declared names
// missing from the binding raise Unbound.
AlgebraPresentation instantiate(const AlgebraDocument& d, const ParameterBinding& b);
ModulePresentation instantiate(const ModuleDocument& d, const ParameterBinding& b);
Matrix instantiate(const MatrixDocument& d, const ParameterBinding& b);
Coalgebra instantiate(const CoalgebraDocument& d, const ParameterBinding& b);

AlgebraDocument to_document(const AlgebraPresentation& a);
ModuleDocument to_document(const ModulePresentation& m);
MatrixDocument to_document(const Matrix& m, const std::string& key = "map");
CoalgebraDocument to_document(const Coalgebra& c);

// Parses a vector written over basis names, e.g. "e1", "e1+e2", "2*e1-1/2*e2".
Vec parse_vector(std::string_view text, const std::vector<std::string>& basis);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hompois
