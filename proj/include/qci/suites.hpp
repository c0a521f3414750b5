#pragma once

#include <json.hpp>

#include "qci/operators.hpp"

namespace qci {

using Json = nlohmann::ordered_json;

// Outcome of one verification suite. Reports are deterministic: fixed inputs
// give byte-identical JSON. Failing cases carry a reproducible witness.
struct SuiteReport {
  std::string suite;
  Json params = Json::object();
  struct Case {
    std::string name;
    bool pass = true;
    std::string detail;
    Json witness;  // null unless the case failed
  };
  std::vector<Case> cases;
  bool pass = true;

  void add(Case c) {
    pass = pass && c.pass;
    cases.push_back(std::move(c));
  }
  Json to_json() const;
  std::string to_text() const;
};

using NamedModules = std::vector<std::pair<std::string, ModuleRep>>;

Json field_elem_json(const Field& F, FF v);
Json algebra_json(const QciAlgebra& A);
Json module_json(const Field& F, const ModuleRep& M);
Json point_json(const Field& F, const ProjPoint& p);
Json hypersurface_json(const Field& F, const HypersurfacePoly& f);

// Two hypersurface presentations with the same linear part must produce the
// same reduced cycle and identical Tor tables on [0, n+4] for every corpus
// module; the operator route must agree with both at the common point.
SuiteReport suite_representative_independence(const QciAlgebra& A, const HypersurfacePoly& f,
                                              const HypersurfacePoly& g,
                                              const NamedModules& corpus,
                                              const std::string& corpus_desc);

// Freeness, bounded Ext, and empty enumerated support must coincide for
// every corpus module (extension degrees e0 and 2*e0).
SuiteReport suite_detection(const QciAlgebra& A, const NamedModules& corpus,
                            const std::string& corpus_desc);

// Tate verdict = operator-route verdict at every rational point over
// F_{p^e}; for modules named in ann_exact, the degree-1 annihilator zero
// locus must equal the enumerated supported set.
SuiteReport suite_route_agreement(const QciAlgebra& A, const NamedModules& corpus, int e,
                                  const std::vector<std::string>& ann_exact,
                                  const std::string& corpus_desc);

// Commutative regime with l = p only: the classical shifted-subgroup rank
// criterion must agree with the Tate verdict at every point over F_{p^e}.
SuiteReport suite_rank_variety(const QciAlgebra& A, const NamedModules& corpus, int e,
                               const std::string& corpus_desc);

}  // namespace qci
