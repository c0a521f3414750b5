#include "qci/suites.hpp"

#include <algorithm>
#include <sstream>

namespace qci {

namespace {

std::string dims_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string point_str(const ProjPoint& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.c.size(); ++i) os << (i ? ":" : "") << p.c[i];
  os << "]";
  return os.str();
}

bool tate_verdict(const std::vector<int>& table_from_zero, int n) {
  return table_from_zero[static_cast<size_t>(n + 1)] > 0 ||
         table_from_zero[static_cast<size_t>(n + 2)] > 0;
}

}  // namespace

Json field_elem_json(const Field& F, FF v) {
  if (F.e() == 1) return Json(v);
  Json arr = Json::array();
  FF k = v;
  for (int i = 0; i < F.e(); ++i) {
    arr.push_back(k % F.p());
    k /= F.p();
  }
  return arr;
}

Json algebra_json(const QciAlgebra& A) {
  Json j = Json::object();
  j["p"] = A.field().p();
  j["e"] = A.field().e();
  j["n"] = A.n();
  j["l"] = A.l();
  j["q"] = field_elem_json(A.field(), A.q());
  Json rows = Json::array();
  for (int i = 0; i < A.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < A.n(); ++k) row.push_back(A.a(i, k));
    rows.push_back(row);
  }
  j["a"] = rows;
  j["regime"] = A.regime() == Regime::Quantum ? "quantum" : "commutative";
  return j;
}

Json module_json(const Field& F, const ModuleRep& M) {
  Json j = Json::object();
  j["dim"] = M.dim;
  Json mats = Json::array();
  for (const Matrix& X : M.X) {
    Json rows = Json::array();
    for (int r = 0; r < X.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < X.cols(); ++c) row.push_back(field_elem_json(F, X.at(r, c)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["X"] = mats;
  return j;
}

Json point_json(const Field& F, const ProjPoint& p) {
  Json arr = Json::array();
  for (FF v : p.c) arr.push_back(field_elem_json(F, v));
  return arr;
}

Json hypersurface_json(const Field& F, const HypersurfacePoly& f) {
  Json arr = Json::array();
  for (const auto& [m, v] : f.terms) {
    Json term = Json::object();
    Json exp = Json::array();
    for (uint8_t x : m.e) exp.push_back(static_cast<int>(x));
    term["exp"] = exp;
    term["c"] = field_elem_json(F, v);
    arr.push_back(term);
  }
  return arr;
}

Json SuiteReport::to_json() const {
  Json j = Json::object();
  j["suite"] = suite;
  j["params"] = params;
  j["pass"] = pass;
  Json cs = Json::array();
  for (const Case& c : cases) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    if (!c.pass) cj["witness"] = c.witness;
    cs.push_back(cj);
  }
  j["cases"] = cs;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  os << "params " << params.dump() << "\n";
  for (const Case& c : cases) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
    if (!c.pass && !c.witness.is_null()) os << "        witness " << c.witness.dump() << "\n";
  }
  os << (pass ? "PASS" : "FAIL") << " (" << cases.size() << " cases)\n";
  return os.str();
}

SuiteReport suite_representative_independence(const QciAlgebra& A, const HypersurfacePoly& f,
                                              const HypersurfacePoly& g,
                                              const NamedModules& corpus,
                                              const std::string& corpus_desc) {
  const Field& F = A.field();
  int n = A.n();
  check(linear_part(A, f) == linear_part(A, g), Err::PreconditionViolated,
        "the two hypersurfaces must have the same linear part");

  SuiteReport rep;
  rep.suite = "representative_independence";
  rep.params["algebra"] = algebra_json(A);
  rep.params["f"] = hypersurface_json(F, f);
  rep.params["g"] = hypersurface_json(F, g);
  rep.params["corpus"] = corpus_desc;
  rep.params["window"] = {0, n + 4};

  KoszulElem zf = bounding_cocycle_reduced(A, f);
  KoszulElem zg = bounding_cocycle_reduced(A, g);
  bool divisions_differ = divide_by_generators(A, f) != divide_by_generators(A, g);
  {
    SuiteReport::Case c;
    c.name = "reduced_cycle";
    c.pass = (zf == zg);
    c.detail = divisions_differ ? "divisions differ, reductions must agree"
                                : "divisions identical";
    if (!c.pass) {
      c.witness["z_f"] = Json(zf.c);
      c.witness["z_g"] = Json(zg.c);
    }
    rep.add(std::move(c));
  }

  ProjPoint common = normalize_point(F, linear_part(A, f));
  for (const auto& [name, M] : corpus) {
    std::vector<int> tf = tor_dims_from_poly(A, M, f, 0, n + 4);
    std::vector<int> tg = tor_dims_from_poly(A, M, g, 0, n + 4);
    {
      SuiteReport::Case c;
      c.name = "tor:" + name;
      c.pass = (tf == tg);
      c.detail = dims_str(tf) + (c.pass ? "" : " vs " + dims_str(tg));
      if (!c.pass) {
        c.witness["module"] = module_json(F, M);
        c.witness["tor_f"] = Json(tf);
        c.witness["tor_g"] = Json(tg);
      }
      rep.add(std::move(c));
    }
    {
      GradedExtModule ext = ext_module(A, M, n + 6);
      bool fiber = fiber_supported_at(A, ext, common, F, n, n + 4);
      bool tate_f = tate_verdict(tf, n);
      bool tate_g = tate_verdict(tg, n);
      SuiteReport::Case c;
      c.name = "fiber:" + name;
      c.pass = (fiber == tate_f) && (fiber == tate_g);
      c.detail = std::string(fiber ? "supported" : "unsupported") + " at " + point_str(common);
      if (!c.pass) {
        c.witness["module"] = module_json(F, M);
        c.witness["point"] = point_json(F, common);
        c.witness["fiber"] = fiber;
        c.witness["tate_f"] = tate_f;
        c.witness["tate_g"] = tate_g;
      }
      rep.add(std::move(c));
    }
  }
  return rep;
}

SuiteReport suite_detection(const QciAlgebra& A, const NamedModules& corpus,
                            const std::string& corpus_desc) {
  const Field& F = A.field();
  int n = A.n();
  int e0 = F.e();

  SuiteReport rep;
  rep.suite = "detection";
  rep.params["algebra"] = algebra_json(A);
  rep.params["corpus"] = corpus_desc;
  rep.params["extension_degrees"] = {e0, 2 * e0};

  for (const auto& [name, M] : corpus) {
    bool free = module_is_free(A, M);
    Resolution res = minimal_resolution(A, M, n + 6);
    bool bounded = false;
    for (int s = 1; s <= res.D; ++s)
      if (res.betti[static_cast<size_t>(s)] == 0) bounded = true;
    int supported_points = 0;
    for (int e : {e0, 2 * e0}) {
      SupportReport sup = support_enumerate(A, M, e, name);
      for (const auto& entry : sup.points)
        if (entry.supported) ++supported_points;
    }
    SuiteReport::Case c;
    c.name = name;
    c.pass = (free == bounded) && (free == (supported_points == 0));
    std::ostringstream os;
    os << "free=" << free << " bounded=" << bounded << " supported_points=" << supported_points;
    c.detail = os.str();
    if (!c.pass) {
      c.witness["module"] = module_json(F, M);
      c.witness["betti"] = Json(res.betti);
    }
    rep.add(std::move(c));
  }
  return rep;
}

SuiteReport suite_route_agreement(const QciAlgebra& A, const NamedModules& corpus, int e,
                                  const std::vector<std::string>& ann_exact,
                                  const std::string& corpus_desc) {
  const Field& F = A.field();
  int n = A.n();
  check(e >= 1 && e % F.e() == 0, Err::PreconditionViolated,
        "extension degree must be a positive multiple of the base degree");
  Field K = Field::create(F.p(), e);

  SuiteReport rep;
  rep.suite = "route_agreement";
  rep.params["algebra"] = algebra_json(A);
  rep.params["corpus"] = corpus_desc;
  rep.params["extension_degree"] = e;

  for (const auto& [name, M] : corpus) {
    SupportReport sup = support_enumerate(A, M, e, name);
    GradedExtModule ext = ext_module(A, M, n + 6);

    SuiteReport::Case c;
    c.name = "route:" + name;
    int agreements = 0;
    for (const auto& entry : sup.points) {
      bool fiber = fiber_supported_at(A, ext, entry.point, K, n, n + 4);
      if (fiber == entry.supported) {
        ++agreements;
        continue;
      }
      c.pass = false;
      c.witness["module"] = module_json(F, M);
      c.witness["point"] = point_json(K, entry.point);
      c.witness["tor_window"] = Json(entry.tor_window);
      c.witness["tate"] = entry.supported;
      c.witness["fiber"] = fiber;
      break;
    }
    std::ostringstream os;
    os << agreements << "/" << sup.points.size() << " points agree";
    c.detail = os.str();
    rep.add(std::move(c));

    if (std::find(ann_exact.begin(), ann_exact.end(), name) != ann_exact.end()) {
      AnnWindow ann = annihilator_window(A, ext, 1);
      std::vector<ProjPoint> locus = zero_locus(A, ann, e);
      std::vector<ProjPoint> expected;
      for (const auto& entry : sup.points)
        if (entry.supported) expected.push_back(entry.point);
      SuiteReport::Case lc;
      lc.name = "locus:" + name;
      lc.pass = (locus == expected);
      std::ostringstream ls;
      ls << locus.size() << " locus points, " << expected.size() << " supported";
      lc.detail = ls.str();
      if (!lc.pass) {
        lc.witness["module"] = module_json(F, M);
        Json la = Json::array();
        for (const auto& p : locus) la.push_back(point_json(K, p));
        lc.witness["locus"] = la;
        Json ea = Json::array();
        for (const auto& p : expected) ea.push_back(point_json(K, p));
        lc.witness["supported"] = ea;
      }
      rep.add(std::move(lc));
    }
  }
  return rep;
}

SuiteReport suite_rank_variety(const QciAlgebra& A, const NamedModules& corpus, int e,
                               const std::string& corpus_desc) {
  const Field& F = A.field();
  int n = A.n();
  int p = F.p();
  check(A.regime() == Regime::Commutative && A.l() == p, Err::WrongRegime,
        "rank-variety oracle needs the commutative regime with l = p");
  check(e >= 1 && e % F.e() == 0, Err::PreconditionViolated,
        "extension degree must be a positive multiple of the base degree");
  Field K = Field::create(p, e);
  bool same_field = K == F;
  std::vector<FF> emb;
  if (!same_field) emb = F.embedding_into(K);

  SuiteReport rep;
  rep.suite = "rank_variety";
  rep.params["algebra"] = algebra_json(A);
  rep.params["corpus"] = corpus_desc;
  rep.params["extension_degree"] = e;

  for (const auto& [name, M] : corpus) {
    std::vector<Matrix> XK;
    for (const Matrix& X : M.X) XK.push_back(same_field ? X : embed_matrix(X, K, emb));
    SupportReport sup = support_enumerate(A, M, e, name);

    SuiteReport::Case c;
    c.name = name;
    int agreements = 0;
    for (const auto& entry : sup.points) {
      Matrix U(K, M.dim, M.dim);
      for (int i = 0; i < n; ++i) {
        FF ci = entry.point.c[static_cast<size_t>(i)];
        if (ci != 0) U = U.add(XK[static_cast<size_t>(i)].scale(ci));
      }
      Matrix P = Matrix::identity(K, M.dim);
      for (int k = 0; k < p - 1; ++k) P = P.mul(U);
      // free over k[u]/(u^p) iff u^{p-1} has the maximal possible rank dim/p
      bool oracle = (p * P.rank() != M.dim);
      if (oracle == entry.supported) {
        ++agreements;
        continue;
      }
      c.pass = false;
      c.witness["module"] = module_json(F, M);
      c.witness["point"] = point_json(K, entry.point);
      c.witness["oracle"] = oracle;
      c.witness["tate"] = entry.supported;
      c.witness["tor_window"] = Json(entry.tor_window);
      break;
    }
    std::ostringstream os;
    os << agreements << "/" << sup.points.size() << " points agree";
    c.detail = os.str();
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace qci
