#include "qci/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qci/problem.hpp"

namespace qci {

namespace {

FF parse_point_coord(const Field& F, const std::string& tok) {
  int64_t v = 0;
  try {
    v = std::stoll(tok);
  } catch (const std::exception&) {
    fail(Err::ValidationError, "bad point coordinate '" + tok + "'");
  }
  if (F.e() == 1) {
    int64_t r = v % F.p();
    if (r < 0) r += F.p();
    return static_cast<FF>(r);
  }
  if (v < 0 || static_cast<uint64_t>(v) >= F.size())
    fail(Err::ValidationError, "point coordinate code out of range for the field");
  return static_cast<FF>(v);
}

std::vector<FF> parse_point(const Field& F, int n, const std::string& s) {
  std::vector<FF> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(parse_point_coord(F, tok));
  check(static_cast<int>(c.size()) == n, Err::ValidationError,
        "point needs " + std::to_string(n) + " comma-separated coordinates");
  return c;
}

std::pair<int, int> parse_window(const std::string& s, int default_lo, int default_hi) {
  if (s.empty()) return {default_lo, default_hi};
  auto colon = s.find(':');
  check(colon != std::string::npos, Err::ValidationError, "window must be LO:HI");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(s.substr(0, colon));
    hi = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    fail(Err::ValidationError, "window must be LO:HI with integers");
  }
  check(0 <= lo && lo <= hi, Err::ValidationError, "window needs 0 <= LO <= HI");
  return {lo, hi};
}

std::string text_point(const ProjPoint& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.c.size(); ++i) os << (i ? ":" : "") << p.c[i];
  os << "]";
  return os.str();
}

void emit(std::ostream& out, const Json& j, const std::string& text, bool json) {
  if (json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int cmd_validate(const Problem& prob, bool json, std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  Json j = Json::object();
  j["ok"] = true;
  j["algebra"] = algebra_json(A);
  Json mods = Json::array();
  for (const auto& [name, m] : prob.modules) mods.push_back(name);
  j["modules"] = mods;
  Json hyps = Json::array();
  for (const auto& [name, f] : prob.hypersurfaces) hyps.push_back(name);
  j["hypersurfaces"] = hyps;
  j["points"] = prob.points.size();

  std::ostringstream os;
  os << "ok: n=" << A.n() << " l=" << A.l() << " over F_" << A.field().size() << " ("
     << (A.regime() == Regime::Quantum ? "quantum" : "commutative") << " regime)\n";
  os << "modules:";
  for (const auto& [name, m] : prob.modules) os << " " << name << "(dim " << m.dim << ")";
  os << "\nhypersurfaces:";
  for (const auto& [name, f] : prob.hypersurfaces) os << " " << name;
  os << "\npoints: " << prob.points.size() << "\n";
  emit(out, j, os.str(), json);
  return 0;
}

int cmd_tor(const Problem& prob, const std::string& module, const std::string& point,
            const std::string& window, bool json, std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  const ModuleRep& M = prob.module(module);
  ProjPoint c = normalize_point(A.field(), parse_point(A.field(), A.n(), point));
  auto [lo, hi] = parse_window(window, 0, A.n() + 4);
  std::vector<int> dims = tor_dims(A, M, c, lo, hi);

  Json j = Json::object();
  j["module"] = module;
  j["point"] = point_json(A.field(), c);
  j["window"] = {lo, hi};
  j["tor"] = dims;

  std::ostringstream os;
  os << "tor dims of " << module << " at " << text_point(c) << ", degrees " << lo << ".." << hi
     << ":";
  for (int d : dims) os << " " << d;
  os << "\n";
  emit(out, j, os.str(), json);
  return 0;
}

int cmd_supp(const Problem& prob, const std::string& module, int e, bool json,
             std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  SupportReport rep = support_enumerate(A, prob.module(module), e, module);
  Field K = Field::create(A.field().p(), e);

  Json j = Json::object();
  j["module"] = rep.module_name;
  j["extension_degree"] = rep.extension_degree;
  j["decision_degrees"] = {A.n() + 1, A.n() + 2};
  Json pts = Json::array();
  for (const auto& entry : rep.points) {
    Json pj = Json::object();
    pj["point"] = point_json(K, entry.point);
    pj["supported"] = entry.supported;
    pj["tor"] = entry.tor_window;
    pts.push_back(pj);
  }
  j["points"] = pts;

  std::ostringstream os;
  os << "support of " << module << " over F_" << K.size() << " (decision degrees "
     << A.n() + 1 << "," << A.n() + 2 << "):\n";
  for (const auto& entry : rep.points)
    os << "  " << text_point(entry.point) << "  " << (entry.supported ? "supported" : "-")
       << "  tor=(" << entry.tor_window[0] << "," << entry.tor_window[1] << ")\n";
  emit(out, j, os.str(), json);
  return 0;
}

int cmd_resolve(const Problem& prob, const std::string& module, int depth, bool json,
                std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  int D = depth > 0 ? depth : A.n() + 6;
  Resolution res = minimal_resolution(A, prob.module(module), D);

  Json j = Json::object();
  j["module"] = module;
  j["depth"] = D;
  j["betti"] = res.betti;
  j["syzygy_dims"] = res.stage_dims;

  std::ostringstream os;
  os << "betti numbers of " << module << " to degree " << D << ":";
  for (int b : res.betti) os << " " << b;
  os << "\nsyzygy dims:";
  for (int d : res.stage_dims) os << " " << d;
  os << "\n";
  emit(out, j, os.str(), json);
  return 0;
}

Json matrix_json(const Field& F, const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(field_elem_json(F, m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_ext(const Problem& prob, const std::string& module, int depth, bool json,
            std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  int D = depth > 0 ? depth : A.n() + 6;
  GradedExtModule ext = ext_module(A, prob.module(module), D);

  Json j = Json::object();
  j["module"] = module;
  j["depth"] = D;
  j["dims"] = ext.dims;
  j["bounded"] = ext.bounded;
  Json ops = Json::array();
  for (int i = 0; i < ext.n; ++i) {
    Json per = Json::array();
    for (int s = 0; s + 2 <= D; ++s)
      per.push_back(matrix_json(A.field(), ext.ops.op[static_cast<size_t>(i)][static_cast<size_t>(s)]));
    ops.push_back(per);
  }
  j["operators"] = ops;

  std::ostringstream os;
  os << "ext dims of " << module << " to degree " << D << ":";
  for (int d : ext.dims) os << " " << d;
  os << "\nbounded: " << (ext.bounded ? "yes" : "no") << "\n";
  emit(out, j, os.str(), json);
  return 0;
}

int cmd_ann(const Problem& prob, const std::string& module, int depth, int d_max, int e,
            bool json, std::ostream& out) {
  const QciAlgebra& A = prob.algebra;
  int D = depth > 0 ? depth : A.n() + 2 * d_max + 4;
  GradedExtModule ext = ext_module(A, prob.module(module), D);
  AnnWindow ann = annihilator_window(A, ext, d_max);
  std::vector<ProjPoint> locus = zero_locus(A, ann, e);
  Field K = Field::create(A.field().p(), e);

  Json j = Json::object();
  j["module"] = module;
  j["depth"] = D;
  j["d_max"] = d_max;
  j["window"] = {ann.window_lo, ann.window_hi};
  j["bounded"] = ann.bounded;
  Json pieces = Json::array();
  for (const auto& piece : ann.pieces) {
    Json pj = Json::object();
    pj["degree"] = piece.t;
    Json monos = Json::array();
    for (const Mono& m : piece.monomials) {
      Json exp = Json::array();
      for (uint8_t v : m.e) exp.push_back(static_cast<int>(v));
      monos.push_back(exp);
    }
    pj["monomials"] = monos;
    pj["basis"] = matrix_json(A.field(), piece.basis);
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  j["extension_degree"] = e;
  Json lj = Json::array();
  for (const auto& p : locus) lj.push_back(point_json(K, p));
  j["zero_locus"] = lj;

  std::ostringstream os;
  os << "annihilator of " << module << " in operator degree <= " << 2 * d_max << " on window ["
     << ann.window_lo << "," << ann.window_hi << "]"
     << (ann.bounded ? " (bounded module, empty support)" : "") << "\n";
  for (const auto& piece : ann.pieces)
    os << "  degree " << piece.t << ": " << piece.basis.rows() << " of "
       << piece.monomials.size() << " dims annihilate\n";
  os << "zero locus over F_" << K.size() << ":";
  for (const auto& p : locus) os << " " << text_point(p);
  os << "\n";
  emit(out, j, os.str(), json);
  return 0;
}

int cmd_suite(const Problem& prob, const std::string& suite, uint64_t seed, int count,
              int max_rank, int e, const std::string& fname, const std::string& gname,
              bool json, std::ostream& out, std::ostream& errs) {
  const QciAlgebra& A = prob.algebra;

  NamedModules corpus = designed_modules(A);
  std::vector<std::string> designed_names;
  for (const auto& [name, m] : corpus) designed_names.push_back(name);
  for (const auto& [name, m] : prob.modules) corpus.emplace_back(name, m);
  std::vector<ModuleRep> seeded = corpus_generate(A, seed, count, max_rank);
  for (size_t i = 0; i < seeded.size(); ++i) {
    std::ostringstream nm;
    nm << "seeded_" << std::setfill('0') << std::setw(3) << i;
    corpus.emplace_back(nm.str(), seeded[i]);
  }
  std::ostringstream desc;
  desc << "designed+input+seeded(seed=" << seed << ",count=" << count
       << ",max_rank=" << max_rank << ")";

  SuiteReport rep;
  if (suite == "representative_independence") {
    if (fname.empty() || gname.empty()) {
      errs << "suite representative_independence needs --f and --g\n";
      return 64;
    }
    rep = suite_representative_independence(A, prob.hypersurface(fname),
                                            prob.hypersurface(gname), corpus, desc.str());
  } else if (suite == "detection") {
    rep = suite_detection(A, corpus, desc.str());
  } else if (suite == "route_agreement") {
    rep = suite_route_agreement(A, corpus, e, designed_names, desc.str());
  } else if (suite == "rank_variety") {
    rep = suite_rank_variety(A, corpus, e, desc.str());
  } else {
    errs << "unknown suite '" << suite << "'\n";
    return 64;
  }

  emit(out, rep.to_json(), rep.to_text(), json);
  return rep.pass ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact hypersurface-support engine for truncated skew polynomial algebras"};
  app.require_subcommand(1);

  std::string input, module, point, window, suite, fname, gname, format = "text";
  int ext_degree = 0;  // 0: default to the problem field's degree
  int max_degree = 0;  // 0: command-specific default
  int d_max = 1;
  int count = 20;
  int max_rank = 2;
  uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_module) {
    cmd->add_option("--input", input, "problem JSON file")->required();
    auto* m = cmd->add_option("--module", module, "module name from the problem file");
    if (needs_module) m->required();
    cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    return cmd;
  };

  auto* c_validate = add_common(app.add_subcommand("validate", "load and validate a problem"),
                                false);
  auto* c_tor = add_common(app.add_subcommand("tor", "homology dimensions at a point"), true);
  c_tor->add_option("--point", point, "comma-separated coordinates (element codes)")
      ->required();
  c_tor->add_option("--window", window, "degree window LO:HI (default 0:n+4)");
  auto* c_supp =
      add_common(app.add_subcommand("supp", "support verdicts at all rational points"), true);
  c_supp->add_option("--ext-degree", ext_degree, "field degree over the prime field");
  auto* c_resolve =
      add_common(app.add_subcommand("resolve", "minimal free resolution data"), true);
  c_resolve->add_option("--max-degree", max_degree, "resolution depth (default n+6)");
  auto* c_ext = add_common(app.add_subcommand("ext", "graded module of operators"), true);
  c_ext->add_option("--max-degree", max_degree, "resolution depth (default n+6)");
  auto* c_ann = add_common(app.add_subcommand("ann", "annihilator window and zero locus"), true);
  c_ann->add_option("--max-degree", max_degree, "resolution depth (default n+2*d_max+4)");
  c_ann->add_option("--d-max", d_max, "polynomial degree bound (default 1)");
  c_ann->add_option("--ext-degree", ext_degree, "field degree for the zero locus");
  auto* c_suite = add_common(app.add_subcommand("suite", "run a verification suite"), false);
  c_suite->add_option("--suite", suite,
                      "representative_independence|detection|route_agreement|rank_variety")
      ->required();
  c_suite->add_option("--seed", seed, "corpus seed");
  c_suite->add_option("--count", count, "seeded corpus size");
  c_suite->add_option("--max-rank", max_rank, "free cover rank bound for seeded modules");
  c_suite->add_option("--ext-degree", ext_degree, "field degree for point enumeration");
  c_suite->add_option("--f", fname, "hypersurface name");
  c_suite->add_option("--g", gname, "hypersurface name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << pe.what() << "\n";
    return 64;
  }

  bool json = format == "json";
  try {
    Problem prob = load_problem(input);
    int e = ext_degree > 0 ? ext_degree : prob.algebra.field().e();
    if (c_validate->parsed()) return cmd_validate(prob, json, out);
    if (c_tor->parsed()) return cmd_tor(prob, module, point, window, json, out);
    if (c_supp->parsed()) return cmd_supp(prob, module, e, json, out);
    if (c_resolve->parsed()) return cmd_resolve(prob, module, max_degree, json, out);
    if (c_ext->parsed()) return cmd_ext(prob, module, max_degree, json, out);
    if (c_ann->parsed()) return cmd_ann(prob, module, max_degree, d_max, e, json, out);
    if (c_suite->parsed())
      return cmd_suite(prob, suite, seed, count, max_rank, e, fname, gname, json, out, err);
  } catch (const Error& ex) {
    err << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "no command dispatched\n";
  return 64;
}

}  // namespace qci
