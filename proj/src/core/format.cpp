#include "core/format.hpp"

#include "core/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

namespace hompois {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("syntax error: ") + e.what());
  }
}

const std::regex& identifier() {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return re;
}

std::size_t get_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> get_names(const json& obj, const char* key, const std::string& where) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  const json& arr = obj.at(key);
  if (!arr.is_array()) fail(where + "." + key, "expected an array of names");
  for (std::size_t n = 0; n < arr.size(); ++n) {
    if (!arr[n].is_string()) fail(where + "." + key + "[" + std::to_string(n) + "]", "expected a string");
    out.push_back(arr[n].get<std::string>());
  }
  return out;
}

std::vector<std::string> get_params(const json& obj) {
  auto params = get_names(obj, "params", "document");
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (!std::regex_match(p, identifier())) fail("document.params", "invalid parameter name '" + p + "'");
    if (!seen.insert(p).second) fail("document.params", "duplicate parameter '" + p + "'");
  }
  return params;
}

Coefficient coefficient_at(const json& j, const std::vector<std::string>& params, const std::string& where) {
  try {
    if (j.is_number_integer()) return Coefficient::constant(parse_rational(j.dump()));
    if (!j.is_string()) fail(where, "coefficient must be a string");
    return parse_coefficient(j.get<std::string>(), params);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse && std::string(e.what()).rfind(where, 0) != 0) fail(where, e.what());
    throw;
  }
}

std::vector<ParamEntry> entries_at(const json& arr, std::size_t dim, const std::vector<std::string>& params,
                                   const std::string& where) {
  if (!arr.is_array()) fail(where, "expected an array of {i,j,k,c} entries");
  std::vector<ParamEntry> out;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string at = where + "[" + std::to_string(n) + "]";
    const json& e = arr[n];
    if (!e.is_object()) fail(at, "expected an object");
    for (const char* key : {"i", "j", "k", "c"}) {
      if (!e.contains(key)) fail(at, std::string("missing field '") + key + "'");
    }
    ParamEntry pe{get_size(e.at("i"), at + ".i"), get_size(e.at("j"), at + ".j"), get_size(e.at("k"), at + ".k"),
                  coefficient_at(e.at("c"), params, at + ".c")};
    for (auto [name, v] : {std::pair{"i", pe.i}, std::pair{"j", pe.j}, std::pair{"k", pe.k}}) {
      if (v >= dim) {
        fail(at, std::string("index ") + name + "=" + std::to_string(v) + " out of range for dim " + std::to_string(dim));
      }
    }
    if (!seen.insert({pe.i, pe.j, pe.k}).second) {
      fail(at, "duplicate entry (" + std::to_string(pe.i) + "," + std::to_string(pe.j) + "," + std::to_string(pe.k) + ")");
    }
    if (!pe.c.is_zero()) out.push_back(std::move(pe));
  }
  // Canonical order, so equal tables give equal documents.
  std::sort(out.begin(), out.end(),
            [](const ParamEntry& a, const ParamEntry& b) { return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k); });
  return out;
}

ParamMatrix matrix_at(const json& arr, std::size_t rows, std::size_t cols, const std::vector<std::string>& params,
                      const std::string& where) {
  if (!arr.is_array()) fail(where, "expected an array of rows");
  if (rows != 0 && arr.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(arr.size()));
  ParamMatrix m;
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    const json& row = arr[r];
    if (!row.is_array()) fail(at, "expected a row array");
    std::size_t want = cols != 0 ? cols : (m.empty() ? row.size() : m.front().size());
    if (row.size() != want) fail(at, "expected " + std::to_string(want) + " columns, got " + std::to_string(row.size()));
    std::vector<Coefficient> out;
    for (std::size_t c = 0; c < row.size(); ++c) out.push_back(coefficient_at(row[c], params, at + "[" + std::to_string(c) + "]"));
    m.push_back(std::move(out));
  }
  return m;
}

void check_basis(const std::vector<std::string>& basis, std::size_t dim, const std::string& where) {
  if (!basis.empty() && basis.size() != dim) fail(where, "basis must list exactly " + std::to_string(dim) + " names");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) fail(where, "duplicate basis name");
}

json names_json(const std::vector<std::string>& names) {
  json arr = json::array();
  for (const auto& n : names) arr.push_back(n);
  return arr;
}

json entries_json(const std::vector<ParamEntry>& entries) {
  std::vector<ParamEntry> sorted;
  for (const auto& e : entries) {
    if (!e.c.is_zero()) sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end(), [](const ParamEntry& a, const ParamEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  json arr = json::array();
  for (const auto& e : sorted) arr.push_back(json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", to_string(e.c)}});
  return arr;
}

json matrix_json(const ParamMatrix& m) {
  json arr = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    arr.push_back(std::move(r));
  }
  return arr;
}

bool flat(const json& j) {
  if (j.is_primitive()) return true;
  for (const auto& v : j) {
    if (!v.is_primitive()) return false;
  }
  return true;
}

// Stable layout: two-space indentation, arrays and objects whose members are
// all scalars stay on one line.
void render(const json& j, std::ostringstream& out, int indent) {
  if (j.is_primitive()) {
    out << j.dump();
    return;
  }
  const bool obj = j.is_object();
  if (j.empty()) {
    out << (obj ? "{}" : "[]");
    return;
  }
  if (flat(j)) {
    out << (obj ? "{" : "[");
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ", ";
      first = false;
      if (obj) out << json(it.key()).dump() << ": ";
      out << it.value().dump();
    }
    out << (obj ? "}" : "]");
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out << (obj ? "{\n" : "[\n");
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out << ",\n";
    first = false;
    out << pad;
    if (obj) out << json(it.key()).dump() << ": ";
    render(it.value(), out, indent + 2);
  }
  out << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << (obj ? "}" : "]");
}

std::string render(const json& j) {
  std::ostringstream out;
  render(j, out, 0);
  out << "\n";
  return out.str();
}

Scalar lookup(const ParameterBinding& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw Error(ErrorKind::Unbound, "parameter '" + name + "' is not bound");
  return it->second;
}

void require_bound(const std::vector<std::string>& params, const ParameterBinding& b) {
  for (const auto& p : params) lookup(b, p);
}

Matrix concrete(const ParamMatrix& m, std::size_t rows, std::size_t cols, const ParameterBinding& b) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m.at(r).at(c).evaluate(b);
  return out;
}

ParamMatrix symbolic(const Matrix& m) {
  ParamMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(Coefficient::constant(m(r, c)));
  return out;
}

BilinearMap concrete(const std::vector<ParamEntry>& entries, std::size_t dim, const ParameterBinding& b) {
  BilinearMap op(dim);
  for (const auto& e : entries) op.set(e.i, e.j, e.k, e.c.evaluate(b));
  return op;
}

std::vector<ParamEntry> symbolic(const BilinearMap& op) {
  std::vector<ParamEntry> out;
  for (const auto& e : op.entries()) out.push_back({e.i, e.j, e.k, Coefficient::constant(e.c)});
  return out;
}

}  // namespace

ParameterBinding parse_binding(std::string_view text) {
  ParameterBinding b;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "parameter binding '" + item + "' lacks '='");
    std::string name = item.substr(0, eq);
    if (!std::regex_match(name, identifier())) throw Error(ErrorKind::Parse, "invalid parameter name '" + name + "'");
    b[name] = parse_rational(item.substr(eq + 1));
  }
  return b;
}

Scalar Coefficient::evaluate(const ParameterBinding& b) const {
  if (param.empty()) return factor;
  return factor * lookup(b, param);
}

Coefficient parse_coefficient(std::string_view text, const std::vector<std::string>& params) {
  static const std::regex term("(-)?(?:([0-9]+(?:/[1-9][0-9]*)?)\\*)?([A-Za-z_][A-Za-z0-9_]*)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, term)) {
    const std::string name = m[3].str();
    if (std::find(params.begin(), params.end(), name) == params.end()) {
      throw Error(ErrorKind::Parse, "undeclared parameter '" + name + "'");
    }
    Scalar f = m[2].matched ? parse_rational(m[2].str()) : Scalar(1);
    if (m[1].matched) f = -f;
    return {f, name};
  }
  return Coefficient::constant(parse_rational(s));
}

std::string to_string(const Coefficient& c) {
  if (c.param.empty()) return to_string(c.factor);
  if (c.factor == 1) return c.param;
  if (c.factor == -1) return "-" + c.param;
  return to_string(c.factor) + "*" + c.param;
}

AlgebraDocument parse_algebra_document(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("document", "expected an object");
  if (!j.contains("dim")) fail("document", "missing 'dim'");
  AlgebraDocument d;
  d.dim = get_size(j.at("dim"), "dim");
  d.basis = get_names(j, "basis", "document");
  check_basis(d.basis, d.dim, "basis");
  d.params = get_params(j);
  if (j.contains("ops")) {
    if (!j.at("ops").is_object()) fail("ops", "expected an object");
    for (auto it = j.at("ops").begin(); it != j.at("ops").end(); ++it) {
      d.ops[it.key()] = entries_at(it.value(), d.dim, d.params, "ops." + it.key());
    }
  }
  if (j.contains("maps")) {
    if (!j.at("maps").is_object()) fail("maps", "expected an object");
    for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
      d.maps[it.key()] = matrix_at(it.value(), d.dim, d.dim, d.params, "maps." + it.key());
    }
  }
  return d;
}

ModuleDocument parse_module_document(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("document", "expected an object");
  for (const char* key : {"dim", "module_dim", "actions", "beta"}) {
    if (!j.contains(key)) fail("document", std::string("missing '") + key + "'");
  }
  ModuleDocument d;
  d.dim = get_size(j.at("dim"), "dim");
  d.module_dim = get_size(j.at("module_dim"), "module_dim");
  d.basis = get_names(j, "basis", "document");
  check_basis(d.basis, d.module_dim, "basis");
  d.params = get_params(j);
  if (!j.at("actions").is_object()) fail("actions", "expected an object");
  for (auto it = j.at("actions").begin(); it != j.at("actions").end(); ++it) {
    const std::string where = "actions." + it.key();
    if (!it.value().is_array() || it.value().size() != d.dim) {
      fail(where, "expected " + std::to_string(d.dim) + " matrices (one per algebra basis element)");
    }
    std::vector<ParamMatrix> fam;
    for (std::size_t n = 0; n < d.dim; ++n) {
      fam.push_back(matrix_at(it.value()[n], d.module_dim, d.module_dim, d.params, where + "[" + std::to_string(n) + "]"));
    }
    d.actions[it.key()] = std::move(fam);
  }
  d.beta = matrix_at(j.at("beta"), d.module_dim, d.module_dim, d.params, "beta");
  return d;
}

MatrixDocument parse_matrix_document(std::string_view text) {
  json j = parse_json(text);
  MatrixDocument d;
  if (j.is_array()) {
    d.rows = matrix_at(j, 0, 0, {}, "matrix");
    return d;
  }
  if (!j.is_object()) fail("document", "expected a matrix or an object holding one");
  d.params = get_params(j);
  int found = 0;
  for (const char* key : {"map", "T", "B", "R", "D", "g", "f"}) {
    if (j.contains(key)) {
      d.key = key;
      ++found;
    }
  }
  if (found != 1) fail("document", "expected exactly one matrix key among map, T, B, R, D, g, f");
  d.rows = matrix_at(j.at(d.key), 0, 0, d.params, d.key);
  return d;
}

CoalgebraDocument parse_coalgebra_document(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("document", "expected an object");
  if (!j.contains("dim")) fail("document", "missing 'dim'");
  CoalgebraDocument d;
  d.dim = get_size(j.at("dim"), "dim");
  d.params = get_params(j);
  if (j.contains("coops")) {
    if (!j.at("coops").is_object()) fail("coops", "expected an object");
    for (auto it = j.at("coops").begin(); it != j.at("coops").end(); ++it) {
      d.coops[it.key()] = entries_at(it.value(), d.dim, d.params, "coops." + it.key());
    }
  }
  return d;
}

std::string serialize(const AlgebraDocument& d) {
  json j;
  j["dim"] = d.dim;
  if (!d.basis.empty()) j["basis"] = names_json(d.basis);
  if (!d.params.empty()) j["params"] = names_json(d.params);
  json ops = json::object();
  for (const auto& [name, entries] : d.ops) ops[name] = entries_json(entries);
  j["ops"] = ops;
  json maps = json::object();
  for (const auto& [name, m] : d.maps) maps[name] = matrix_json(m);
  j["maps"] = maps;
  return render(j);
}

std::string serialize(const ModuleDocument& d) {
  json j;
  j["dim"] = d.dim;
  j["module_dim"] = d.module_dim;
  if (!d.basis.empty()) j["basis"] = names_json(d.basis);
  if (!d.params.empty()) j["params"] = names_json(d.params);
  json acts = json::object();
  for (const auto& [name, fam] : d.actions) {
    json arr = json::array();
    for (const auto& m : fam) arr.push_back(matrix_json(m));
    acts[name] = arr;
  }
  j["actions"] = acts;
  j["beta"] = matrix_json(d.beta);
  return render(j);
}

std::string serialize(const MatrixDocument& d) {
  json j;
  if (!d.params.empty()) j["params"] = names_json(d.params);
  j[d.key] = matrix_json(d.rows);
  return render(j);
}

std::string serialize(const CoalgebraDocument& d) {
  json j;
  j["dim"] = d.dim;
  if (!d.params.empty()) j["params"] = names_json(d.params);
  json coops = json::object();
  for (const auto& [name, entries] : d.coops) coops[name] = entries_json(entries);
  j["coops"] = coops;
  return render(j);
}

AlgebraPresentation instantiate(const AlgebraDocument& d, const ParameterBinding& b) {
  require_bound(d.params, b);
  AlgebraPresentation a(d.dim);
  if (!d.basis.empty()) a.basis = d.basis;
  for (const auto& [name, entries] : d.ops) a.ops[name] = concrete(entries, d.dim, b);
  for (const auto& [name, m] : d.maps) a.maps[name] = concrete(m, d.dim, d.dim, b);
  return a;
}

ModulePresentation instantiate(const ModuleDocument& d, const ParameterBinding& b) {
  require_bound(d.params, b);
  ModulePresentation m(d.dim, d.module_dim);
  if (!d.basis.empty()) m.basis = d.basis;
  for (const auto& [name, fam] : d.actions) {
    std::vector<Matrix> mats;
    for (const auto& pm : fam) mats.push_back(concrete(pm, d.module_dim, d.module_dim, b));
    m.actions[name] = std::move(mats);
  }
  m.beta = concrete(d.beta, d.module_dim, d.module_dim, b);
  return m;
}

Matrix instantiate(const MatrixDocument& d, const ParameterBinding& b) {
  require_bound(d.params, b);
  const std::size_t rows = d.rows.size();
  const std::size_t cols = rows == 0 ? 0 : d.rows.front().size();
  return concrete(d.rows, rows, cols, b);
}

Coalgebra instantiate(const CoalgebraDocument& d, const ParameterBinding& b) {
  require_bound(d.params, b);
  Coalgebra c;
  c.dim = d.dim;
  for (const auto& [name, entries] : d.coops) c.coops.emplace(name, Comultiplication(concrete(entries, d.dim, b)));
  return c;
}

AlgebraDocument to_document(const AlgebraPresentation& a) {
  AlgebraDocument d;
  d.dim = a.dim;
  if (a.basis != default_basis(a.dim)) d.basis = a.basis;
  for (const auto& [name, op] : a.ops) d.ops[name] = symbolic(op);
  for (const auto& [name, m] : a.maps) d.maps[name] = symbolic(m);
  return d;
}

ModuleDocument to_document(const ModulePresentation& m) {
  ModuleDocument d;
  d.dim = m.algebra_dim;
  d.module_dim = m.module_dim;
  if (m.basis != default_basis(m.module_dim, "v")) d.basis = m.basis;
  for (const auto& [name, fam] : m.actions) {
    for (const auto& mat : fam) d.actions[name].push_back(symbolic(mat));
    if (fam.empty()) d.actions[name] = {};
  }
  d.beta = symbolic(m.beta);
  return d;
}

MatrixDocument to_document(const Matrix& m, const std::string& key) {
  MatrixDocument d;
  d.key = key;
  d.rows = symbolic(m);
  return d;
}

CoalgebraDocument to_document(const Coalgebra& c) {
  CoalgebraDocument d;
  d.dim = c.dim;
  for (const auto& [name, co] : c.coops) d.coops[name] = symbolic(co.coefficients());
  return d;
}

Vec parse_vector(std::string_view text, const std::vector<std::string>& basis) {
  static const std::regex term("([+-]?)(?:([0-9]+(?:/[1-9][0-9]*)?)\\*?)?([A-Za-z_][A-Za-z0-9_]*)?");
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorKind::Parse, "empty vector expression");
  Vec v(basis.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find_first_of("+-", pos + 1);
    // A sign directly after '/' or '*' cannot occur in this grammar, so every
    // later +/- starts a new term.
    std::string t = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(t, m, term) || (!m[2].matched && !m[3].matched)) {
      throw Error(ErrorKind::Parse, "bad term '" + t + "' in vector expression");
    }
    Scalar c = m[2].matched ? parse_rational(m[2].str()) : Scalar(1);
    if (m[1].str() == "-") c = -c;
    if (!m[3].matched) throw Error(ErrorKind::Parse, "term '" + t + "' names no basis element");
    auto it = std::find(basis.begin(), basis.end(), m[3].str());
    if (it == basis.end()) throw Error(ErrorKind::Parse, "unknown basis element '" + m[3].str() + "'");
    v[static_cast<std::size_t>(it - basis.begin())] += c;
    pos = next == std::string::npos ? s.size() : next;
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Argument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace hompois
