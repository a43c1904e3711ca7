#include "dirac/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dirac/catalog.hpp"

namespace dirac {

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_text(const Report& r, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [path, digest] : r.inputs) os << "input: " << path << " sha:" << digest << "\n";
  for (const auto& c : r.checks.items) {
    if (c.pass)
      os << green << "PASS" << reset << " " << c.name;
    else
      os << red << "FAIL" << reset << " " << c.name;
    if (!c.witness.empty()) os << " | witness: " << c.witness;
    os << "\n";
  }
  for (const auto& o : r.outputs) os << "output: " << o << "\n";
  os << "exit: " << r.exit_code << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  Json inputs = Json::array();
  for (const auto& [path, digest] : r.inputs) {
    Json rec;
    rec["path"] = path;
    rec["digest"] = digest;
    inputs.push_back(rec);
  }
  j["inputs"] = inputs;
  Json checks = Json::array();
  for (const auto& c : r.checks.items) {
    Json rec;
    rec["name"] = c.name;
    rec["pass"] = c.pass;
    if (!c.witness.empty()) rec["witness"] = c.witness;
    checks.push_back(rec);
  }
  j["checks"] = checks;
  Json outputs = Json::array();
  for (const auto& o : r.outputs) outputs.push_back(o);
  j["outputs"] = outputs;
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

namespace {

struct Args {
  std::string subcommand;
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  bool flag(const std::string& name) const { return options.count(name) > 0; }
  std::optional<std::string> opt(const std::string& name) const {
    auto it = options.find(name);
    if (it == options.end()) return std::nullopt;
    return it->second;
  }
};

const char* kUsage =
    "usage: dirac <subcommand> [args]\n"
    "subcommands:\n"
    "  validate FILE                          check a spec file's invariants\n"
    "  double FILE [-o OUT]                   build d x| d*_beta from a triple\n"
    "  qpair FILE [-o OUT]                    build the Manin pair groupoid q =| g\n"
    "  reduce FILE --subspace ROWS [-o OUT]   coisotropic reduction of a metrized algebra\n"
    "  dualize FILE [-o OUT]                  Pradines dual of a linear groupoid\n"
    "  classify --triple T FILE               validate classification data against T\n"
    "  robinson --triple T FILE [-o OUT]      build classification data from (c, k)\n"
    "  search --triple T --candidates ROWS [--lagrangian] [--dim N] [--k ROWS] [-o OUT]\n"
    "  dress --triple T --rep R --element M --lambda V\n"
    "  exactness --triple T [--data FILE]\n"
    "options: --format json|text, -o OUT, - reads stdin\n";

bool takes_value(const std::string& opt) {
  static const char* with_value[] = {"--format", "-o",     "--triple",    "--rep", "--subspace",
                                     "--candidates", "--dim", "--k", "--element", "--lambda",
                                     "--data"};
  for (const char* o : with_value)
    if (opt == o) return true;
  return false;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SpecFile load_spec(const std::string& path, Report& report) {
  std::string bytes = read_input(path);
  report.inputs.emplace_back(path, content_digest(bytes));
  return parse_spec(bytes);
}

void write_output(const std::string& path, const SpecFile& spec, Report& report) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write file: " + path);
  f << write_spec(spec);
  report.outputs.push_back(path);
}

Mat rows_from_arg(const std::string& text, std::size_t cols) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed rows argument: ") + e.what());
  }
  return mat_from_json(j, cols);
}

void cmd_validate(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("validate expects exactly one file");
  SpecFile spec = load_spec(args.positional[0], report);
  if (spec.kind == "triple") {
    DiracManinTriple t = triple_from_spec(spec);
    TripleReport tr = validate_triple(t);
    report.checks = tr.checks;
    report.checks.add("exactness", true, tr.exact ? "exact" : "not exact");
  } else if (spec.kind == "groupoid") {
    try {
      LinearGroupoid g = groupoid_from_spec(spec);
      report.checks.add("groupoid axioms", true);
      report.checks.add("core well-modeled", true,
                        "core dim " + std::to_string(g.core_dim()));
    } catch (const Error& e) {
      report.checks.add("groupoid axioms", false, e.what());
    }
  } else if (spec.kind == "module") {
    try {
      module_from_spec(spec);
      report.checks.add("module axioms", true);
    } catch (const Error& e) {
      report.checks.add("module axioms", false, e.what());
    }
  } else if (spec.kind == "metrized" || spec.kind == "double") {
    MetrizedLieAlgebra m = spec.kind == "metrized"
                               ? metrized_from_spec(spec)
                               : double_from_spec(spec).dtilde;
    JacobiReport jac = check_jacobi(m.algebra);
    report.checks.add("Jacobi identity", jac.ok,
                      jac.ok ? ""
                             : "triple (" + std::to_string(jac.i) + "," + std::to_string(jac.j) +
                                   "," + std::to_string(jac.k) + ")");
    report.checks.add("metric nondegenerate", m.metric.nondegenerate());
    report.checks.add("metric ad-invariant", metric_ad_invariant(m.algebra, m.metric));
  } else if (spec.kind == "rep") {
    auto tpath = args.opt("--triple");
    if (!tpath) throw Error("validating a rep requires --triple for the algebra");
    DiracManinTriple t = triple_from_spec(load_spec(*tpath, report));
    MatrixRep r = rep_from_spec(spec, t.d);
    RepReport rr = check_rep(r);
    report.checks.add("homomorphism", rr.homomorphism);
    report.checks.add("faithful", rr.faithful);
  } else {
    throw Error("validate does not handle kind " + spec.kind);
  }
}

void cmd_double(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("double expects exactly one triple file");
  DiracManinTriple t = triple_from_spec(load_spec(args.positional[0], report));
  try {
    Double dbl = build_double(t.d, t.beta);
    report.checks.add("beta ad-invariant", true);
    report.checks.add("Jacobi on the double", true);
    report.checks.add("metric ad-invariant", true);
    report.checks.add("s(beta_tilde) = -beta",
                      pushforward(dbl.s_map, dbl.beta_tilde) == SymBivector(-t.beta.gram()));
    report.checks.add("t(beta_tilde) = beta",
                      pushforward(dbl.t_map, dbl.beta_tilde) == t.beta);
    if (auto out = args.opt("-o")) write_output(*out, double_to_spec(dbl), report);
  } catch (const Error& e) {
    report.checks.add("double construction", false, e.what());
  }
}

void cmd_qpair(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("qpair expects exactly one triple file");
  DiracManinTriple t = triple_from_spec(load_spec(args.positional[0], report));
  try {
    QPair qp = build_q_pair(t);
    report.checks.add("dim q = 2 dim g", qp.q.dim() == 2 * t.g.dim());
    report.checks.add("embedded g Lagrangian",
                      orth_complement(qp.g_image, qp.q.metric) == qp.g_image);
    report.checks.add("f_q morphism", check_morphism(qp.q.algebra, t.d, qp.fq));
    report.checks.add("f_q restricts to the inclusion",
                      qp.fq * qp.g_embed == t.g.basis().transpose());
    report.checks.add("f_q(gamma_q) = beta", pushforward(qp.fq, qp.gamma_q) == t.beta);
    if (auto out = args.opt("-o")) {
      if (qp.r) {
        MetrizedLinearGroupoid mg = groupoid_of_qpair(qp);
        write_output(*out, groupoid_to_spec(mg.gpd), report);
      } else {
        write_output(*out, metrized_to_spec(qp.q), report);
      }
    }
  } catch (const Error& e) {
    report.checks.add("q-pair construction", false, e.what());
  }
}

void cmd_reduce(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("reduce expects exactly one metrized/double file");
  SpecFile spec = load_spec(args.positional[0], report);
  MetrizedLieAlgebra m =
      spec.kind == "double" ? double_from_spec(spec).dtilde : metrized_from_spec(spec);
  auto rows = args.opt("--subspace");
  if (!rows) throw Error("reduce requires --subspace");
  Subspace c(m.dim(), rows_from_arg(*rows, m.dim()));
  try {
    Reduced red = reduce_coisotropic(m, c);
    report.checks.add("c subalgebra, c^perp ideal inside c", true);
    report.checks.add("reduced metric nondegenerate", true,
                      "dim " + std::to_string(red.dim()));
    if (auto out = args.opt("-o")) write_output(*out, metrized_to_spec(red.algebra()), report);
  } catch (const Error& e) {
    report.checks.add("coisotropic reduction", false, e.what());
  }
}

void cmd_dualize(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("dualize expects exactly one groupoid file");
  LinearGroupoid g = groupoid_from_spec(load_spec(args.positional[0], report));
  LinearGroupoid dual = dualize(g);  // pairing law verified inside
  report.checks.add("pairing law on composable bases", true);
  LinearGroupoid dd = dualize(dual);
  report.checks.add("double dual restores s and t", dd.s == g.s && dd.t == g.t);
  report.checks.add("vacancy duality",
                    (g.core_dim() == 0) == (dual.units.dim() == 0),
                    g.vacant() ? "vacant: dual is a group" : "core dim " +
                        std::to_string(g.core_dim()));
  if (auto out = args.opt("-o")) write_output(*out, groupoid_to_spec(dual), report);
}

DiracManinTriple required_triple(const Args& args, Report& report) {
  auto tpath = args.opt("--triple");
  if (!tpath) throw Error("this subcommand requires --triple");
  return triple_from_spec(load_spec(*tpath, report));
}

void cmd_classify(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("classify expects exactly one data file");
  DiracManinTriple t = required_triple(args, report);
  SpecFile spec = load_spec(args.positional[0], report);
  ClassificationData data;
  if (spec.kind == "robinson") {
    try {
      data = robinson_build(robinson_from_spec(spec, t.dim()), t);
      report.checks.add("datum admissible", true);
    } catch (const Error& e) {
      report.checks.add("datum admissible", false, e.what());
      return;
    }
  } else {
    data = classification_from_spec(spec, t.dim());
  }
  report.checks.merge(validate_classification(data, t));
  report.checks.add("transitive", check_transitive(data, t));
  if (validate_triple(t).exact) {
    ExactCaseResult ex = check_exact_case(data, t);
    report.checks.add("exact normal form", ex.ok,
                      ex.ok ? "c = " + ex.c.basis().str() : "dim n != dim d or f_n not bijective");
  }
}

void cmd_robinson(const Args& args, Report& report) {
  if (args.positional.size() != 1) throw Error("robinson expects exactly one datum file");
  DiracManinTriple t = required_triple(args, report);
  RobinsonDatum datum = robinson_from_spec(load_spec(args.positional[0], report), t.dim());
  try {
    ClassificationData data = robinson_build(datum, t);
    report.checks.add("datum admissible", true);
    report.checks.merge(validate_classification(data, t));
    report.checks.add("transitive", check_transitive(data, t));
    report.checks.merge(verify_robinson_iso(data, t));
    if (auto out = args.opt("-o")) write_output(*out, classification_to_spec(data), report);
  } catch (const Error& e) {
    report.checks.add("datum admissible", false, e.what());
  }
}

void cmd_search(const Args& args, Report& report) {
  DiracManinTriple t = required_triple(args, report);
  auto cand = args.opt("--candidates");
  if (!cand) throw Error("search requires --candidates");
  Mat rows = rows_from_arg(*cand, t.dim());
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < rows.rows(); ++i) candidates.push_back(rows.row(i));
  SearchConstraints cons;
  cons.lagrangian = args.flag("--lagrangian");
  if (auto d = args.opt("--dim")) cons.dim = std::stoul(*d);
  cons.k = args.opt("--k") ? Subspace(t.dim(), rows_from_arg(*args.opt("--k"), t.dim()))
                           : Subspace::zero(t.dim());
  std::vector<Subspace> found = search_coisotropic(t, candidates, cons);
  report.checks.add("search completed", true,
                    std::to_string(found.size()) + " subspace(s) found");
  for (std::size_t i = 0; i < found.size(); ++i)
    report.checks.add("found " + std::to_string(i), true, found[i].basis().str());
  if (auto out = args.opt("-o")) write_output(*out, subspaces_to_spec(t.dim(), found), report);
}

void cmd_dress(const Args& args, Report& report) {
  DiracManinTriple t = required_triple(args, report);
  auto rpath = args.opt("--rep");
  if (!rpath) throw Error("dress requires --rep");
  MatrixRep rep = rep_from_spec(load_spec(*rpath, report), t.d);
  auto elt = args.opt("--element");
  auto lam = args.opt("--lambda");
  if (!elt || !lam) throw Error("dress requires --element and --lambda");
  Mat m = rows_from_arg(*elt, rep.rep_dim);
  Mat lrow = rows_from_arg("[" + *lam + "]", t.dim());
  try {
    GroupElement h = make_group_element(t, rep, m);
    report.checks.add("group element valid", true);
    Vec field_val = dressing_field(t, h, lrow.row(0));
    report.checks.add("dressing field", true, vec_str(field_val));
    StabilizerReport st = stabilizer_kernel(t, h);
    report.checks.add("stabilizer beta-coisotropic", st.coisotropic,
                      st.coisotropic ? "" : st.kernel.basis().str());
  } catch (const Error& e) {
    report.checks.add("group element valid", false, e.what());
  }
}

void cmd_exactness(const Args& args, Report& report) {
  DiracManinTriple t = required_triple(args, report);
  TripleReport tr = validate_triple(t);
  report.checks.add("triple valid", tr.ok());
  report.checks.add("exactness", true, tr.exact ? "exact" : "not exact");
  if (auto dpath = args.opt("--data")) {
    ClassificationData data = classification_from_spec(load_spec(*dpath, report), t.dim());
    if (!tr.exact) throw Error("--data requires an exact triple");
    ExactCaseResult ex = check_exact_case(data, t);
    report.checks.add("exact normal form", ex.ok,
                      ex.ok ? "c = " + ex.c.basis().str() : "dim n != dim d or f_n not bijective");
  }
}

}  // namespace

int execute(const std::vector<std::string>& argv, std::string& out) {
  Report report;
  std::string format = "text";
  try {
    if (argv.empty()) {
      out = kUsage;
      return 2;
    }
    Args args;
    args.subcommand = argv[0];
    for (std::size_t i = 1; i < argv.size(); ++i) {
      const std::string& a = argv[i];
      if (a.size() > 1 && a[0] == '-' && a != "-") {
        if (takes_value(a)) {
          if (i + 1 >= argv.size()) throw Error("option " + a + " needs a value");
          args.options[a] = argv[++i];
        } else {
          args.options[a] = "";
        }
      } else {
        args.positional.push_back(a);
      }
    }
    if (auto f = args.opt("--format")) {
      if (*f != "json" && *f != "text") throw Error("unknown format: " + *f);
      format = *f;
    }
    report.command = args.subcommand;

    if (args.subcommand == "validate") cmd_validate(args, report);
    else if (args.subcommand == "double") cmd_double(args, report);
    else if (args.subcommand == "qpair") cmd_qpair(args, report);
    else if (args.subcommand == "reduce") cmd_reduce(args, report);
    else if (args.subcommand == "dualize") cmd_dualize(args, report);
    else if (args.subcommand == "classify") cmd_classify(args, report);
    else if (args.subcommand == "robinson") cmd_robinson(args, report);
    else if (args.subcommand == "search") cmd_search(args, report);
    else if (args.subcommand == "dress") cmd_dress(args, report);
    else if (args.subcommand == "exactness") cmd_exactness(args, report);
    else {
      out = "unknown subcommand: " + args.subcommand + "\n" + kUsage;
      return 2;
    }
  } catch (const Error& e) {
    out = std::string("error: ") + e.what() + "\n";
    return 2;
  }
  report.finalize();
  const char* env = std::getenv("DIRAC_COLOR");
  bool color = !(env && std::string(env) == "0");
  out = format == "json" ? render_json(report) : render_text(report, color);
  return report.exit_code;
}

}  // namespace dirac
