#pragma once

#include "liext/apath.hpp"
#include "liext/couple.hpp"
#include "liext/evolution.hpp"

#include <map>
#include <string>

namespace liext {

/// A name used in the manifest does not resolve (CLI exit code 2 semantics).
class UnresolvedReference : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Couple entry as written in the manifest, before the type invariants are
/// enforced; cmd_validate reports on these pieces instead of refusing to load.
struct RawCouple {
  std::string base, kernel;
  std::vector<RatMat> D;
  // entries (i, j, value); antisymmetric completion happens at Couple build
  std::vector<std::tuple<int, int, std::vector<Rat>>> omega;
};

struct ManifestDefaults {
  double tol_ode = 1e-6;
  int steps = 512;
};

/// Named entities shared by the CLI commands. One manifest file per run;
/// couples reference algebras by name so shared structure is written once.
class Manifest {
public:
  static Manifest load_file(const std::string& path);
  static Manifest parse(const std::string& json_text);

  ManifestDefaults defaults;

  const LieAlgebra& algebra(const std::string& name) const;
  const RawCouple& raw_couple(const std::string& name) const;
  Couple couple(const std::string& name) const;
  APath path(const std::string& name) const;
  /// Grids load with their declared tolerance (field "tol_grid", optional).
  HomotopyGrid grid(const std::string& name) const;
  Representation rep(const std::string& name) const;

  bool has_algebra(const std::string& name) const { return algebras_.count(name) > 0; }
  bool has_couple(const std::string& name) const { return couples_.count(name) > 0; }
  bool has_path(const std::string& name) const { return paths_.count(name) > 0; }
  bool has_grid(const std::string& name) const { return grids_.count(name) > 0; }
  bool has_rep(const std::string& name) const { return reps_.count(name) > 0; }

private:
  std::map<std::string, LieAlgebra> algebras_;
  std::map<std::string, RawCouple> couples_;
  struct RawPath {
    std::string algebra;
    std::vector<Vec> samples;
  };
  struct RawGrid {
    std::string algebra;
    Grid a, b;
    std::optional<double> tol_grid;
  };
  std::map<std::string, RawPath> paths_;
  std::map<std::string, RawGrid> grids_;
  std::map<std::string, Representation> reps_;
};

/// {"dim":…, "basis":[…], "brackets":[{"i":…,"j":…,"k":…,"v":…}]} with
/// omitted entries zero and antisymmetric completion applied at load.
std::string algebra_to_json(const LieAlgebra& L);

} // namespace liext
