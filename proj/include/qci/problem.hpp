#pragma once

#include "qci/suites.hpp"

namespace qci {

// A problem file bundles one algebra with optional named modules, named
// hypersurface polynomials (in the central variables y_i = x_i^l), and raw
// point lists. Everything is validated on load.
struct Problem {
  QciAlgebra algebra;
  std::vector<std::pair<std::string, ModuleRep>> modules;  // name-ascending
  std::vector<std::pair<std::string, HypersurfacePoly>> hypersurfaces;
  std::vector<std::vector<FF>> points;  // raw, possibly unnormalized

  explicit Problem(QciAlgebra a) : algebra(std::move(a)) {}

  const ModuleRep& module(const std::string& name) const;
  const HypersurfacePoly& hypersurface(const std::string& name) const;
};

// Field element from JSON: integer (reduced mod p on the prime subfield) or
// low-degree-first digit array for extensions.
FF parse_field_elem(const Field& F, const Json& j, const std::string& where);

Problem parse_problem(const Json& j);
Problem load_problem(const std::string& path);

}  // namespace qci
