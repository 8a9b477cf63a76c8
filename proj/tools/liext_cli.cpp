#include "liext/bigraded.hpp"
#include "liext/holonomy.hpp"
#include "liext/manifest.hpp"
#include "liext/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

using namespace liext;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 failed mathematical check, 2 input/reference error,
// 3 numerical failure
constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2, kNumericalError = 3;

struct Options {
  std::string manifest_path;
  bool as_json = false;
  double tol_ode = 1e-6;
  int steps = 512;
  std::uint64_t seed = 0;
  std::string rep_name;
};

std::string fmt(double v) { return format_double(v); }

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    std::string line;
    for (int j = 0; j < m.cols(); ++j) {
      line += fmt(m(i, j));
      if (j + 1 < m.cols()) line += " ";
    }
    std::printf("%s\n", line.c_str());
  }
}

struct CheckRow {
  std::string name;
  bool ok;
  double residual;
};

int report_checks(const Options& opt, const std::vector<CheckRow>& rows) {
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok;
  if (opt.as_json) {
    json j;
    j["ok"] = all_ok;
    j["checks"] = json::array();
    for (const auto& r : rows)
      j["checks"].push_back({{"name", r.name}, {"ok", r.ok}, {"residual", r.residual}});
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    for (const auto& r : rows)
      std::printf("%-24s %-4s residual=%s\n", r.name.c_str(), r.ok ? "pass" : "FAIL",
                  fmt(r.residual).c_str());
    std::printf("overall: %s\n", all_ok ? "pass" : "FAIL");
  }
  return all_ok ? kOk : kCheckFailed;
}

int cmd_validate(const Options& opt, const Manifest& man, const std::string& name) {
  std::vector<CheckRow> rows;
  if (man.has_algebra(name)) {
    auto rep = check_jacobi(man.algebra(name), opt.tol_ode);
    rows.push_back({"jacobi", rep.ok, rep.max_residual});
    if (!rep.ok && !opt.as_json)
      for (const auto& v : rep.violations)
        std::printf("violation at triple (%d,%d,%d), residual %s\n", v.i, v.j, v.k,
                    fmt(v.residual).c_str());
    return report_checks(opt, rows);
  }
  if (man.has_couple(name)) {
    const RawCouple& rc = man.raw_couple(name);
    const LieAlgebra& base = man.algebra(rc.base);
    const LieAlgebra& kern = man.algebra(rc.kernel);
    auto jb = check_jacobi(base, opt.tol_ode);
    auto jk = check_jacobi(kern, opt.tol_ode);
    rows.push_back({"base.jacobi", jb.ok, jb.max_residual});
    rows.push_back({"kernel.jacobi", jk.ok, jk.max_residual});
    bool all_der = static_cast<int>(rc.D.size()) == base.dim();
    for (const RatMat& d : rc.D)
      all_der = all_der && d.rows() == kern.dim() && d.cols() == kern.dim() && is_derivation(kern, d);
    rows.push_back({"D.derivations", all_der, 0.0});
    if (jb.ok && jk.ok && all_der) {
      Couple cpl = man.couple(name);
      auto adm = is_admissible(cpl, opt.tol_ode);
      rows.push_back({"admissible.closure", adm.closure_ok, adm.closure_residual});
      rows.push_back({"admissible.curvature", adm.curvature_ok, adm.curvature_residual});
    }
    return report_checks(opt, rows);
  }
  if (man.has_grid(name)) {
    HomotopyGrid g = man.grid(name); // throws if the morphism residual is out of tolerance
    rows.push_back({"grid.morphism", true, morphism_residual(g.algebra, g.a, g.b)});
    return report_checks(opt, rows);
  }
  if (man.has_path(name)) {
    APath p = man.path(name); // shape enforced at load
    rows.push_back({"path.shape", true, 0.0});
    return report_checks(opt, rows);
  }
  throw UnresolvedReference("unknown name: " + name);
}

int cmd_cohomology(const Options& opt, const Manifest& man, const std::string& name) {
  const LieAlgebra& L = man.algebra(name);
  std::optional<Representation> rep;
  if (!opt.rep_name.empty()) rep = man.rep(opt.rep_name);
  auto betti = cohomology_dims(L, rep);
  if (opt.as_json) {
    std::printf("%s\n", json{{"betti", betti}}.dump(2).c_str());
  } else {
    std::string line;
    for (std::size_t i = 0; i < betti.size(); ++i)
      line += (i ? " " : "") + std::to_string(betti[i]);
    std::printf("%s\n", line.c_str());
  }
  return kOk;
}

int cmd_spectral(const Options& opt, const Manifest& man, const std::string& name) {
  Couple cpl = man.couple(name);
  FilteredComplex fc(cpl);
  json pages = json::array();
  std::string text;
  for (int r = 0; r <= fc.stable_r(); ++r) {
    Page pg = fc.page(r);
    json table = json::array();
    char buf[64];
    std::snprintf(buf, sizeof buf, "page r=%d\n", r);
    text += buf;
    for (const auto& e : pg.entries)
      if (e.dim > 0) {
        table.push_back({e.p, e.q, e.dim});
        std::snprintf(buf, sizeof buf, "  E[%d,%d] = %d\n", e.p, e.q, e.dim);
        text += buf;
      }
    pages.push_back({{"r", r}, {"table", std::move(table)}});
  }
  AbutmentReport ab = abutment(cpl);
  if (opt.as_json) {
    json j;
    j["pages"] = std::move(pages);
    j["abutment"] = ab.spectral;
    j["betti"] = ab.betti;
    j["abutment_ok"] = ab.ok;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s", text.c_str());
    std::string line = "abutment:";
    for (int b : ab.spectral) line += " " + std::to_string(b);
    std::printf("%s\n", line.c_str());
    std::printf("matches direct Betti numbers: %s\n", ab.ok ? "yes" : "NO");
  }
  return ab.ok ? kOk : kCheckFailed;
}

int cmd_extend(const Options& opt, const Manifest& man, const std::string& name) {
  Couple cpl = man.couple(name);
  ExtendedAlgebra ext = build_extension(cpl);
  auto jac = check_jacobi(ext.total, opt.tol_ode);
  if (opt.as_json) {
    json j;
    j["algebra"] = json::parse(algebra_to_json(ext.total));
    j["jacobi_ok"] = jac.ok;
    j["jacobi_residual"] = jac.max_residual;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s\n", algebra_to_json(ext.total).c_str());
    std::printf("jacobi: %s (residual %s)\n", jac.ok ? "pass" : "FAIL", fmt(jac.max_residual).c_str());
  }
  return jac.ok ? kOk : kCheckFailed;
}

int cmd_transport(const Options& opt, const Manifest& man, const std::string& couple_name,
                  const std::string& path_name, double t) {
  Couple cpl = man.couple(couple_name);
  APath a = man.path(path_name);
  Transport tr = parallel_transport(cpl, a, t, opt.steps);
  double res = transport_bracket_residual(cpl, tr.phi);
  if (res > opt.tol_ode)
    throw NumericalFailure("transport failed the morphism property: residual " + fmt(res));
  if (opt.as_json) {
    json j;
    j["phi"] = matrix_json(tr.phi);
    j["bracket_residual"] = res;
    j["t"] = t;
    j["steps"] = opt.steps;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    print_matrix(tr.phi);
    std::printf("bracket residual: %s\n", fmt(res).c_str());
  }
  return kOk;
}

int cmd_monodromy(const Options& opt, const Manifest& man, const std::string& couple_name,
                  const std::string& grid_name) {
  Couple cpl = man.couple(couple_name);
  HomotopyGrid g = man.grid(grid_name);
  std::optional<MatrixRep> rep;
  if (!opt.rep_name.empty()) rep = MatrixRep::from(man.rep(opt.rep_name));
  MonodromyElement el = monodromy_partial(cpl, g, rep);
  if (opt.as_json) {
    json j;
    json kp = json::array();
    for (const Vec& v : el.kpath.samples) {
      json row = json::array();
      for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
      kp.push_back(std::move(row));
    }
    j["kpath"] = std::move(kp);
    j["group_element"] = el.group_element ? matrix_json(*el.group_element) : json();
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("kpath samples (eps-indexed):\n");
    for (const Vec& v : el.kpath.samples) {
      std::string line;
      for (int i = 0; i < v.size(); ++i) line += (i ? " " : "") + fmt(v[i]);
      std::printf("  %s\n", line.c_str());
    }
    if (el.group_element) {
      std::printf("group element:\n");
      print_matrix(*el.group_element);
    }
  }
  return kOk;
}

int cmd_homotopy_check(const Options& opt, const Manifest& man, const std::string& grid_name) {
  HomotopyGrid g = man.grid(grid_name);
  HomotopyDecision d = is_homotopy(g, opt.tol_ode);
  if (opt.as_json) {
    std::printf("%s\n",
                json{{"is_homotopy", d.is_homotopy}, {"residual", d.residual}, {"tol_ode", opt.tol_ode}}
                    .dump(2)
                    .c_str());
  } else {
    std::printf("is_homotopy: %s (terminal residual %s, tol %s)\n", d.is_homotopy ? "yes" : "no",
                fmt(d.residual).c_str(), fmt(opt.tol_ode).c_str());
  }
  return d.is_homotopy ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"liext: Lie bracket extensions, their cohomology, and path holonomy"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--manifest", opt.manifest_path, "manifest JSON file")->required();
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--tol-ode", opt.tol_ode, "tolerance for integrated quantities");
  app.add_option("--steps", opt.steps, "fixed-step count for flows");
  app.add_option("--seed", opt.seed, "seed for any sampled auxiliary data");
  app.add_option("--rep", opt.rep_name, "named matrix representation from the manifest");

  std::string name, couple_name, path_name, grid_name;
  double transport_t = 1.0;

  auto* validate = app.add_subcommand("validate", "run structural and admissibility checks");
  validate->add_option("name", name)->required();
  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers of a named algebra");
  cohomology->add_option("name", name)->required();
  auto* spectral = app.add_subcommand("spectral", "spectral pages and abutment of a couple");
  spectral->add_option("name", name)->required();
  auto* extend = app.add_subcommand("extend", "assemble the extension algebra of a couple");
  extend->add_option("name", name)->required();
  auto* transport = app.add_subcommand("transport", "parallel transport along a base path");
  transport->add_option("couple", couple_name)->required();
  transport->add_option("path", path_name)->required();
  transport->add_option("--t", transport_t, "transport time in [0,1]");
  auto* monodromy = app.add_subcommand("monodromy", "boundary operator of a base homotopy");
  monodromy->add_option("couple", couple_name)->required();
  monodromy->add_option("grid", grid_name)->required();
  auto* hcheck = app.add_subcommand("homotopy-check", "test the homotopy condition of a grid");
  hcheck->add_option("grid", grid_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Manifest man = Manifest::load_file(opt.manifest_path);
    if (validate->parsed()) return cmd_validate(opt, man, name);
    if (cohomology->parsed()) return cmd_cohomology(opt, man, name);
    if (spectral->parsed()) return cmd_spectral(opt, man, name);
    if (extend->parsed()) return cmd_extend(opt, man, name);
    if (transport->parsed()) return cmd_transport(opt, man, couple_name, path_name, transport_t);
    if (monodromy->parsed()) return cmd_monodromy(opt, man, couple_name, grid_name);
    if (hcheck->parsed()) return cmd_homotopy_check(opt, man, grid_name);
  } catch (const UnresolvedReference& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumericalError;
  } catch (const ContractViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
