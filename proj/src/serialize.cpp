#include "dirac/serialize.hpp"

#include <map>

namespace dirac {

namespace {

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(std::string("missing field: ") + name);
  return *it;
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_unsigned()) throw Error(std::string("field must be a count: ") + name);
  return f.get<std::size_t>();
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed spec file: ") + e.what());
  }
  SpecFile s;
  if (!j.is_object()) throw Error("spec file must be a JSON object");
  s.format_version = field(j, "format_version").get<int>();
  if (s.format_version != 1)
    throw Error("unknown format_version " + std::to_string(s.format_version));
  s.kind = field(j, "kind").get<std::string>();
  static const char* known[] = {"triple",   "groupoid", "module",    "classification",
                                "robinson", "rep",      "metrized",  "double",
                                "subspaces"};
  bool ok = false;
  for (const char* k : known) ok = ok || s.kind == k;
  if (!ok) throw Error("unknown spec kind: " + s.kind);
  s.payload = field(j, "payload");
  return s;
}

std::string write_spec(const SpecFile& spec) {
  Json j;
  j["format_version"] = spec.format_version;
  j["kind"] = spec.kind;
  j["payload"] = spec.payload;
  return j.dump(2) + "\n";
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Json& j, std::size_t cols_hint) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  std::size_t rows = j.size();
  if (rows && !j[0].is_array()) throw Error("matrix rows must be arrays");
  std::size_t cols = rows ? j[0].size() : cols_hint;
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw Error("ragged matrix in spec file");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_string()) throw Error("matrix entries must be rational strings");
      m.at(i, c) = rat_parse(j[i][c].get<std::string>());
    }
  }
  return m;
}

Json subspace_to_json(const Subspace& s) { return mat_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  return Subspace(ambient, mat_from_json(j, ambient));
}

Json algebra_to_json(const LieAlgebra& l) {
  Json j;
  j["dim"] = l.dim();
  Json labels = Json::array();
  for (const auto& s : l.labels()) labels.push_back(s);
  j["basis"] = labels;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t jj = i + 1; jj < l.dim(); ++jj)
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (l.c(i, jj, k) != 0) {
          Json rec;
          rec["i"] = i;
          rec["j"] = jj;
          rec["k"] = k;
          rec["coeff"] = rat_str(l.c(i, jj, k));
          brackets.push_back(rec);
        }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  std::size_t dim = count_field(j, "dim");
  std::vector<std::string> labels;
  if (j.contains("basis"))
    for (const auto& s : j["basis"]) labels.push_back(s.get<std::string>());
  std::vector<BracketRule> rules;
  // gather per-(i,j) coefficient vectors
  std::map<std::pair<std::size_t, std::size_t>, Vec> acc;
  for (const auto& rec : field(j, "brackets")) {
    std::size_t i = field(rec, "i").get<std::size_t>();
    std::size_t jj = field(rec, "j").get<std::size_t>();
    std::size_t k = field(rec, "k").get<std::size_t>();
    if (i >= dim || jj >= dim || k >= dim) throw Error("bracket index out of range");
    if (i >= jj) throw Error("bracket records must have i < j");
    auto& v = acc.try_emplace({i, jj}, Vec(dim, Rat(0))).first->second;
    v[k] += rat_parse(field(rec, "coeff").get<std::string>());
  }
  for (auto& [ij, v] : acc) rules.push_back({ij.first, ij.second, v});
  return LieAlgebra(dim, rules, labels);
}

SpecFile triple_to_spec(const DiracManinTriple& t) {
  SpecFile s;
  s.kind = "triple";
  Json p = algebra_to_json(t.d);
  p["beta"] = mat_to_json(t.beta.gram());
  p["g"] = subspace_to_json(t.g);
  p["h"] = subspace_to_json(t.h);
  Json samples = Json::array();
  for (const auto& m : t.samples) samples.push_back(mat_to_json(m));
  p["samples"] = samples;
  s.payload = p;
  return s;
}

DiracManinTriple triple_from_spec(const SpecFile& s) {
  if (s.kind != "triple") throw Error("expected a triple spec, got " + s.kind);
  const Json& p = s.payload;
  DiracManinTriple t;
  t.d = algebra_from_json(p);
  std::size_t n = t.d.dim();
  Mat beta = mat_from_json(field(p, "beta"), n);
  if (beta.rows() != n || beta.cols() != n) throw Error("beta dimension mismatch");
  t.beta = SymBivector(beta);
  t.g = subspace_from_json(field(p, "g"), n);
  t.h = subspace_from_json(field(p, "h"), n);
  if (p.contains("samples"))
    for (const auto& m : p["samples"]) t.samples.push_back(mat_from_json(m, n));
  return t;
}

SpecFile groupoid_to_spec(const LinearGroupoid& g) {
  SpecFile s;
  s.kind = "groupoid";
  Json p;
  p["dim"] = g.dim;
  p["units"] = subspace_to_json(g.units);
  p["s"] = mat_to_json(g.s);
  p["t"] = mat_to_json(g.t);
  s.payload = p;
  return s;
}

LinearGroupoid groupoid_from_spec(const SpecFile& s) {
  if (s.kind != "groupoid") throw Error("expected a groupoid spec, got " + s.kind);
  const Json& p = s.payload;
  std::size_t dim = count_field(p, "dim");
  return make_groupoid(dim, subspace_from_json(field(p, "units"), dim),
                       mat_from_json(field(p, "s"), dim), mat_from_json(field(p, "t"), dim));
}

SpecFile module_to_spec(const LinearModule& m) {
  SpecFile s;
  s.kind = "module";
  Json p;
  p["groupoid"] = groupoid_to_spec(m.over).payload;
  p["P_dim"] = m.p_dim;
  p["u"] = mat_to_json(m.u);
  p["A"] = mat_to_json(m.core_act);
  s.payload = p;
  return s;
}

LinearModule module_from_spec(const SpecFile& s) {
  if (s.kind != "module") throw Error("expected a module spec, got " + s.kind);
  const Json& p = s.payload;
  SpecFile g{1, "groupoid", field(p, "groupoid")};
  LinearGroupoid gpd = groupoid_from_spec(g);
  std::size_t p_dim = count_field(p, "P_dim");
  return make_module(gpd, p_dim, mat_from_json(field(p, "u"), p_dim),
                     mat_from_json(field(p, "A"), gpd.dim));
}

SpecFile rep_to_spec(const MatrixRep& r) {
  SpecFile s;
  s.kind = "rep";
  Json p;
  p["rep_dim"] = r.rep_dim;
  Json images = Json::array();
  for (const auto& m : r.images) images.push_back(mat_to_json(m));
  p["images"] = images;
  s.payload = p;
  return s;
}

MatrixRep rep_from_spec(const SpecFile& s, const LieAlgebra& algebra) {
  if (s.kind != "rep") throw Error("expected a rep spec, got " + s.kind);
  const Json& p = s.payload;
  MatrixRep r;
  r.algebra = algebra;
  r.rep_dim = count_field(p, "rep_dim");
  for (const auto& m : field(p, "images")) r.images.push_back(mat_from_json(m, r.rep_dim));
  if (r.images.size() != algebra.dim()) throw Error("rep image count mismatch");
  return r;
}

SpecFile classification_to_spec(const ClassificationData& d) {
  SpecFile s;
  s.kind = "classification";
  Json p;
  p["n"] = algebra_to_json(d.n);
  p["gamma_n"] = mat_to_json(d.metric_n.gram());
  p["u"] = subspace_to_json(d.u);
  p["k"] = subspace_to_json(d.k);
  p["f_n"] = mat_to_json(d.f_n);
  Json samples = Json::array();
  for (const auto& ks : d.samples) {
    Json rec;
    rec["A_n"] = mat_to_json(ks.a_n);
    rec["A_d"] = mat_to_json(ks.a_d);
    if (ks.rep_matrix) rec["rep"] = mat_to_json(*ks.rep_matrix);
    samples.push_back(rec);
  }
  p["samples"] = samples;
  s.payload = p;
  return s;
}

ClassificationData classification_from_spec(const SpecFile& s, std::size_t d_dim) {
  if (s.kind != "classification") throw Error("expected a classification spec, got " + s.kind);
  const Json& p = s.payload;
  ClassificationData d;
  d.n = algebra_from_json(field(p, "n"));
  std::size_t nd = d.n.dim();
  d.metric_n = SymBilinearForm(mat_from_json(field(p, "gamma_n"), nd));
  d.u = subspace_from_json(field(p, "u"), nd);
  d.k = subspace_from_json(field(p, "k"), nd);
  d.f_n = mat_from_json(field(p, "f_n"), nd);
  if (d.f_n.rows() != d_dim || d.f_n.cols() != nd) throw Error("f_n dimension mismatch");
  if (p.contains("samples"))
    for (const auto& rec : p["samples"]) {
      KSample ks;
      ks.a_n = mat_from_json(field(rec, "A_n"), nd);
      ks.a_d = mat_from_json(field(rec, "A_d"), d_dim);
      if (rec.contains("rep")) ks.rep_matrix = mat_from_json(rec["rep"]);
      d.samples.push_back(ks);
    }
  return d;
}

SpecFile robinson_to_spec(const RobinsonDatum& d, std::size_t d_dim) {
  SpecFile s;
  s.kind = "robinson";
  Json p;
  p["dim"] = d_dim;
  p["c"] = subspace_to_json(d.c);
  p["k"] = subspace_to_json(d.k);
  Json samples = Json::array();
  for (const auto& ds : d.samples) {
    Json rec;
    rec["A_d"] = mat_to_json(ds.a_d);
    if (ds.rep_matrix) rec["rep"] = mat_to_json(*ds.rep_matrix);
    samples.push_back(rec);
  }
  p["samples"] = samples;
  s.payload = p;
  return s;
}

RobinsonDatum robinson_from_spec(const SpecFile& s, std::size_t d_dim) {
  if (s.kind != "robinson") throw Error("expected a robinson spec, got " + s.kind);
  const Json& p = s.payload;
  if (p.contains("dim") && count_field(p, "dim") != d_dim)
    throw Error("robinson spec dimension mismatch with the triple");
  RobinsonDatum d;
  d.c = subspace_from_json(field(p, "c"), d_dim);
  d.k = subspace_from_json(field(p, "k"), d_dim);
  if (p.contains("samples"))
    for (const auto& rec : p["samples"]) {
      DSample ds;
      ds.a_d = mat_from_json(field(rec, "A_d"), d_dim);
      if (rec.contains("rep")) ds.rep_matrix = mat_from_json(rec["rep"]);
      d.samples.push_back(ds);
    }
  return d;
}

SpecFile metrized_to_spec(const MetrizedLieAlgebra& m) {
  SpecFile s;
  s.kind = "metrized";
  Json p = algebra_to_json(m.algebra);
  p["metric"] = mat_to_json(m.metric.gram());
  s.payload = p;
  return s;
}

MetrizedLieAlgebra metrized_from_spec(const SpecFile& s) {
  if (s.kind != "metrized") throw Error("expected a metrized spec, got " + s.kind);
  const Json& p = s.payload;
  MetrizedLieAlgebra m;
  m.algebra = algebra_from_json(p);
  m.metric = SymBilinearForm(mat_from_json(field(p, "metric"), m.algebra.dim()));
  return m;
}

SpecFile double_to_spec(const Double& d) {
  SpecFile s;
  s.kind = "double";
  Json p = algebra_to_json(d.dtilde.algebra);
  p["metric"] = mat_to_json(d.dtilde.metric.gram());
  p["s"] = mat_to_json(d.s_map);
  p["t"] = mat_to_json(d.t_map);
  p["beta_tilde"] = mat_to_json(d.beta_tilde.gram());
  s.payload = p;
  return s;
}

Double double_from_spec(const SpecFile& s) {
  if (s.kind != "double") throw Error("expected a double spec, got " + s.kind);
  const Json& p = s.payload;
  Double d;
  LieAlgebra alg = algebra_from_json(p);
  std::size_t n2 = alg.dim();
  d.dtilde = {alg, SymBilinearForm(mat_from_json(field(p, "metric"), n2))};
  d.s_map = mat_from_json(field(p, "s"), n2);
  d.t_map = mat_from_json(field(p, "t"), n2);
  d.beta_tilde = SymBivector(mat_from_json(field(p, "beta_tilde"), n2));
  return d;
}

SpecFile subspaces_to_spec(std::size_t ambient, const std::vector<Subspace>& list) {
  SpecFile s;
  s.kind = "subspaces";
  Json p;
  p["dim"] = ambient;
  Json arr = Json::array();
  for (const auto& sub : list) arr.push_back(subspace_to_json(sub));
  p["list"] = arr;
  s.payload = p;
  return s;
}

std::vector<Subspace> subspaces_from_spec(const SpecFile& s) {
  if (s.kind != "subspaces") throw Error("expected a subspaces spec, got " + s.kind);
  const Json& p = s.payload;
  std::size_t ambient = count_field(p, "dim");
  std::vector<Subspace> out;
  for (const auto& j : field(p, "list")) out.push_back(subspace_from_json(j, ambient));
  return out;
}

}  // namespace dirac
