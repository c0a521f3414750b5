#include "qci/problem.hpp"

#include <algorithm>
#include <fstream>

namespace qci {

namespace {

int64_t get_int(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Err::ParseError, "missing or non-integer field '" + key + "'");
  return j[key].get<int64_t>();
}

}  // namespace

const ModuleRep& Problem::module(const std::string& name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return m;
  fail(Err::ValidationError, "no module named '" + name + "'");
}

const HypersurfacePoly& Problem::hypersurface(const std::string& name) const {
  for (const auto& [n, f] : hypersurfaces)
    if (n == name) return f;
  fail(Err::ValidationError, "no hypersurface named '" + name + "'");
}

FF parse_field_elem(const Field& F, const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    int64_t v = j.get<int64_t>();
    int64_t p = F.p();
    int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<FF>(r);  // prime-subfield element
  }
  if (j.is_array()) {
    if (F.e() == 1 || static_cast<int>(j.size()) > F.e())
      fail(Err::ParseError, where + ": digit array too long for the field");
    FF code = 0;
    uint64_t scale = 1;
    for (const auto& d : j) {
      if (!d.is_number_integer()) fail(Err::ParseError, where + ": non-integer digit");
      int64_t v = d.get<int64_t>();
      if (v < 0 || v >= F.p()) fail(Err::ParseError, where + ": digit out of range");
      code += static_cast<FF>(v * scale);
      scale *= F.p();
    }
    return code;
  }
  fail(Err::ParseError, where + ": expected integer or digit array");
}

Problem parse_problem(const Json& j) {
  if (!j.is_object()) fail(Err::ParseError, "problem must be a JSON object");
  int64_t p = get_int(j, "p");
  int64_t e = j.contains("e") ? get_int(j, "e") : 1;
  int64_t l = get_int(j, "l");
  if (p < 2 || e < 1) fail(Err::ParseError, "bad field parameters");
  Field F = Field::create(static_cast<int>(p), static_cast<int>(e));

  if (!j.contains("a") || !j["a"].is_array())
    fail(Err::ParseError, "missing exponent matrix 'a'");
  int n = static_cast<int>(j["a"].size());
  std::vector<std::vector<int64_t>> a;
  for (const auto& row : j["a"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(Err::ParseError, "'a' must be a square integer matrix");
    std::vector<int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(Err::ParseError, "'a' entries must be integers");
      r.push_back(v.get<int64_t>());
    }
    a.push_back(std::move(r));
  }
  FF q = j.contains("q") ? parse_field_elem(F, j["q"], "q") : 1;

  Problem prob(QciAlgebra::create(F, n, static_cast<int>(l), q, a));
  const QciAlgebra& A = prob.algebra;

  if (j.contains("modules")) {
    if (!j["modules"].is_object()) fail(Err::ParseError, "'modules' must be an object");
    std::vector<std::string> names;
    for (const auto& [name, spec] : j["modules"].items()) names.push_back(name);
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
      const Json& spec = j["modules"][name];
      int dim = static_cast<int>(get_int(spec, "dim"));
      if (dim < 1 || !spec.contains("X") || !spec["X"].is_array() ||
          static_cast<int>(spec["X"].size()) != n)
        fail(Err::ParseError, "module '" + name + "': need dim >= 1 and " +
                                  std::to_string(n) + " action matrices");
      std::vector<Matrix> X;
      for (const auto& mat : spec["X"]) {
        if (!mat.is_array() || static_cast<int>(mat.size()) != dim)
          fail(Err::ParseError, "module '" + name + "': matrix row count != dim");
        Matrix m(F, dim, dim);
        for (int r = 0; r < dim; ++r) {
          const Json& row = mat[static_cast<size_t>(r)];
          if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail(Err::ParseError, "module '" + name + "': matrix column count != dim");
          for (int c = 0; c < dim; ++c)
            m.set(r, c, parse_field_elem(F, row[static_cast<size_t>(c)],
                                         "module '" + name + "'"));
        }
        X.push_back(std::move(m));
      }
      try {
        prob.modules.emplace_back(name, module_validate(A, dim, std::move(X)));
      } catch (const Error& err) {
        fail(err.code(), "module '" + name + "': " + err.what());
      }
    }
  }

  if (j.contains("hypersurfaces")) {
    if (!j["hypersurfaces"].is_object())
      fail(Err::ParseError, "'hypersurfaces' must be an object");
    std::vector<std::string> names;
    for (const auto& [name, spec] : j["hypersurfaces"].items()) names.push_back(name);
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
      const Json& spec = j["hypersurfaces"][name];
      if (!spec.is_array()) fail(Err::ParseError, "hypersurface '" + name + "' must be a list");
      std::vector<std::pair<Mono, FF>> terms;
      for (const auto& term : spec) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("c") ||
            !term["exp"].is_array() || static_cast<int>(term["exp"].size()) != n)
          fail(Err::ParseError,
               "hypersurface '" + name + "': terms are {exp: [n ints], c: elem}");
        Mono m = mono_zero(n);
        for (int i = 0; i < n; ++i) {
          int64_t v = term["exp"][static_cast<size_t>(i)].get<int64_t>();
          if (v < 0 || v > 255)
            fail(Err::ParseError, "hypersurface '" + name + "': exponent out of range");
          m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
        }
        terms.emplace_back(m, parse_field_elem(F, term["c"], "hypersurface '" + name + "'"));
      }
      try {
        prob.hypersurfaces.emplace_back(name, make_hypersurface(A, terms));
      } catch (const Error& err) {
        fail(err.code(), "hypersurface '" + name + "': " + err.what());
      }
    }
  }

  if (j.contains("points")) {
    if (!j["points"].is_array()) fail(Err::ParseError, "'points' must be a list");
    for (const auto& pt : j["points"]) {
      if (!pt.is_array() || static_cast<int>(pt.size()) != n)
        fail(Err::ParseError, "each point needs " + std::to_string(n) + " coordinates");
      std::vector<FF> c;
      for (const auto& v : pt) c.push_back(parse_field_elem(F, v, "point"));
      normalize_point(F, c);  // rejects the zero point early
      prob.points.push_back(std::move(c));
    }
  }

  return prob;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& ex) {
    fail(Err::ParseError, std::string("invalid JSON: ") + ex.what());
  }
  return parse_problem(j);
}

}  // namespace qci
