#include "liext/manifest.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace liext {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return Scalar::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(Rat(v.get<long long>()));
  if (v.is_number_float()) return Scalar::approx(v.get<double>());
  throw ContractViolation("bracket value must be a number or a \"p/q\" string");
}

Rat rat_from_json(const json& v) { return scalar_from_json(v).value(); }

LieAlgebra algebra_from_json(const json& j) {
  if (!j.contains("dim")) throw ContractViolation("algebra entry needs \"dim\"");
  int dim = j.at("dim").get<int>();
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  std::vector<BracketEntry> entries;
  if (j.contains("brackets"))
    for (const auto& e : j.at("brackets"))
      entries.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                         scalar_from_json(e.at("v"))});
  return LieAlgebra::from_brackets(dim, std::move(names), entries);
}

RatMat matrix_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols) throw ContractViolation("ragged matrix");
    for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j.at(i).at(c));
  }
  return m;
}

std::vector<Rat> rat_vector_from_json(const json& j) {
  std::vector<Rat> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Vec vec_from_json(const json& j) {
  Vec v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = j.at(i).get<double>();
  return v;
}

Grid grid_from_json(const json& j) {
  Grid g;
  for (const auto& row : j) {
    std::vector<Vec> r;
    for (const auto& cell : row) r.push_back(vec_from_json(cell));
    g.push_back(std::move(r));
  }
  return g;
}

} // namespace

Manifest Manifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnresolvedReference("cannot open manifest: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Manifest Manifest::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ContractViolation(std::string("manifest is not valid JSON: ") + e.what());
  }
  Manifest m;
  if (j.contains("defaults")) {
    const auto& d = j.at("defaults");
    if (d.contains("tol_ode")) m.defaults.tol_ode = d.at("tol_ode").get<double>();
    if (d.contains("steps")) m.defaults.steps = d.at("steps").get<int>();
  }
  if (j.contains("algebras"))
    for (const auto& [name, a] : j.at("algebras").items())
      m.algebras_.emplace(name, algebra_from_json(a));
  if (j.contains("couples"))
    for (const auto& [name, c] : j.at("couples").items()) {
      RawCouple rc;
      rc.base = c.at("base").get<std::string>();
      rc.kernel = c.at("kernel").get<std::string>();
      for (const auto& d : c.at("D")) rc.D.push_back(matrix_from_json(d));
      if (c.contains("omega"))
        for (const auto& w : c.at("omega"))
          rc.omega.emplace_back(w.at("i").get<int>(), w.at("j").get<int>(),
                                rat_vector_from_json(w.at("v")));
      m.couples_.emplace(name, std::move(rc));
    }
  if (j.contains("paths"))
    for (const auto& [name, p] : j.at("paths").items()) {
      RawPath rp;
      rp.algebra = p.at("algebra").get<std::string>();
      for (const auto& s : p.at("samples")) rp.samples.push_back(vec_from_json(s));
      if (p.contains("N") && p.at("N").get<int>() + 1 != static_cast<int>(rp.samples.size()))
        throw ContractViolation("path N does not match its sample count");
      m.paths_.emplace(name, std::move(rp));
    }
  if (j.contains("grids"))
    for (const auto& [name, g] : j.at("grids").items()) {
      RawGrid rg;
      rg.algebra = g.at("algebra").get<std::string>();
      rg.a = grid_from_json(g.at("a"));
      rg.b = grid_from_json(g.at("b"));
      if (g.contains("tol_grid")) rg.tol_grid = g.at("tol_grid").get<double>();
      m.grids_.emplace(name, std::move(rg));
    }
  if (j.contains("reps"))
    for (const auto& [name, r] : j.at("reps").items()) {
      Representation rep;
      rep.dim = r.at("dim").get<int>();
      for (const auto& rho : r.at("rho")) rep.rho.push_back(matrix_from_json(rho));
      m.reps_.emplace(name, std::move(rep));
    }
  return m;
}

const LieAlgebra& Manifest::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw UnresolvedReference("unknown algebra: " + name);
  return it->second;
}

const RawCouple& Manifest::raw_couple(const std::string& name) const {
  auto it = couples_.find(name);
  if (it == couples_.end()) throw UnresolvedReference("unknown couple: " + name);
  return it->second;
}

Couple Manifest::couple(const std::string& name) const {
  const RawCouple& rc = raw_couple(name);
  const LieAlgebra& base = algebra(rc.base);
  const LieAlgebra& kern = algebra(rc.kernel);
  const int nb = base.dim(), nk = kern.dim();
  std::vector<std::vector<Rat>> omega(static_cast<std::size_t>(binomial(nb, 2)),
                                      std::vector<Rat>(nk, Rat(0)));
  for (const auto& [i, j, v] : rc.omega) {
    if (i == j || i < 0 || j < 0 || i >= nb || j >= nb)
      throw ContractViolation("omega entry index out of range");
    if (static_cast<int>(v.size()) != nk) throw ContractViolation("omega value length mismatch");
    auto r = subset_rank(nb, {std::min(i, j), std::max(i, j)});
    for (int k = 0; k < nk; ++k) omega[r][k] = (i < j) ? v[k] : -v[k];
  }
  return Couple(base, kern, rc.D, std::move(omega));
}

APath Manifest::path(const std::string& name) const {
  auto it = paths_.find(name);
  if (it == paths_.end()) throw UnresolvedReference("unknown path: " + name);
  return APath(algebra(it->second.algebra), it->second.samples);
}

HomotopyGrid Manifest::grid(const std::string& name) const {
  auto it = grids_.find(name);
  if (it == grids_.end()) throw UnresolvedReference("unknown grid: " + name);
  const RawGrid& rg = it->second;
  return HomotopyGrid::make(algebra(rg.algebra), rg.a, rg.b, rg.tol_grid);
}

Representation Manifest::rep(const std::string& name) const {
  auto it = reps_.find(name);
  if (it == reps_.end()) throw UnresolvedReference("unknown representation: " + name);
  return it->second;
}

std::string algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  json brackets = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int jj = i + 1; jj < L.dim(); ++jj)
      for (int k = 0; k < L.dim(); ++k)
        if (!(L.c(i, jj, k) == Scalar(0)))
          brackets.push_back({{"i", i}, {"j", jj}, {"k", k}, {"v", L.c(i, jj, k).str()}});
  j["brackets"] = std::move(brackets);
  return j.dump(2);
}

} // namespace liext
