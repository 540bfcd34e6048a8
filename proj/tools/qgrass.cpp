#include "qgrass/autos.hpp"
#include "qgrass/checks.hpp"
#include "qgrass/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qgrass;
using nlohmann::ordered_json;

namespace {

struct Common {
  std::string ring = "qm";
  int k = 2;
  int m = 2;
  int n = 4;
  bool n_set = false;
  std::string expr;
  unsigned seed = CheckOptions{}.seed;
  std::string json_path;
  bool mutate = false;
};

RelationConstants relations(const Common& c) {
  return c.mutate ? RelationConstants::mutated() : RelationConstants::standard();
}

void emit_json(const ordered_json& j, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

// Prints text unless the JSON goes to stdout.
void emit(const Common& c, const std::string& text, const ordered_json& j) {
  if (c.json_path != "-") std::cout << text << "\n";
  emit_json(j, c.json_path);
}

GrassShape parse_shape(const std::string& s) {
  GrassShape shape;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> shape.k >> comma >> shape.n) || comma != ',' || !in.eof())
    throw CLI::ValidationError("--shape", "expected k,n but got '" + s + "'");
  shape.validate();
  return shape;
}

QScalar parse_scalar(const ordered_json& v) {
  if (v.is_number_integer()) return QScalar(v.get<long long>());
  if (!v.is_string()) throw std::invalid_argument("torus entries must be integers or scalar expressions");
  const NCPoly p = std::get<NCPoly>(parse_expr(v.get<std::string>(), {RingKind::qm, 1, 1, {}}));
  if (p.is_zero()) return QScalar(0);
  if (p.size() != 1 || p.terms().begin()->first.degree() != 0)
    throw std::invalid_argument("'" + v.get<std::string>() + "' is not a scalar");
  return p.terms().begin()->second;
}

std::vector<QScalar> parse_scalars(const ordered_json& v) {
  std::vector<QScalar> out;
  if (!v.is_array()) throw std::invalid_argument("expected an array of scalars");
  for (const auto& x : v) out.push_back(parse_scalar(x));
  return out;
}

// {"alpha0": "q", "alpha": [1, 2], "beta": ["q^-1", 1], "diagram": false}
AutoSpec parse_auto(const std::string& text, GrassShape shape) {
  const auto j = ordered_json::parse(text);
  H1Element f = H1Element::identity(shape);
  if (j.contains("alpha0")) f.alpha0 = parse_scalar(j["alpha0"]);
  if (j.contains("alpha")) f.alpha = parse_scalars(j["alpha"]);
  if (j.contains("beta")) f.beta = parse_scalars(j["beta"]);
  f.validate(shape);
  AutoSpec spec{h1_canonicalize(f), j.value("diagram", false)};
  spec.validate(shape);
  return spec;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void print_reports(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    std::cout << to_string(r.status) << "  " << r.id << " " << r.shape.to_string();
    if (r.status == CheckStatus::skipped) std::cout << "  (" << r.reason << ")";
    std::cout << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    for (const auto& w : r.witnesses) std::cout << "    witness: " << w << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in quantum matrices and quantum grassmannians"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool with_expr) {
    sub->add_option("--ring", c.ring, "qm, grass or t")->check(CLI::IsMember({"qm", "grass", "t"}));
    sub->add_option("--k", c.k, "grassmannian k");
    sub->add_option("--m", c.m, "rows of O_q(M(m,n))");
    sub->add_option("--n", c.n, "columns / grassmannian n")->each([&](const std::string&) { c.n_set = true; });
    sub->add_option("--json", c.json_path, "write JSON to a path, or - for stdout");
    sub->add_flag("--mutate", c.mutate, "use the perturbed row relation (self-test)");
    if (with_expr) sub->add_option("--expr", c.expr, "expression")->required();
  };

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  add_common(nf, true);
  auto* det = app.add_subcommand("det", "quantum determinant of O_q(M(n,n))");
  add_common(det, false);
  std::string rows, cols;
  auto* minor = app.add_subcommand("minor", "quantum minor [rows|cols] in O_q(M(m,n))");
  add_common(minor, false);
  minor->add_option("--rows", rows, "comma-separated rows")->required();
  minor->add_option("--cols", cols, "comma-separated columns")->required();
  auto* straighten = app.add_subcommand("straighten", "expand in standard monomials of O_q(G(k,n))");
  add_common(straighten, true);
  std::string auto_json, map = "auto";
  bool no_certify = false;
  auto* apply = app.add_subcommand("apply-auto", "apply an automorphism or theta to a grassmannian element");
  add_common(apply, true);
  apply->add_option("--auto", auto_json, "torus as JSON: {\"alpha0\":..,\"alpha\":[..],\"beta\":[..],\"diagram\":bool}");
  apply->add_option("--map", map, "auto, theta or kn")->check(CLI::IsMember({"auto", "theta", "kn"}));
  apply->add_flag("--no-certify", no_certify, "skip the degree-2 certification");
  std::vector<std::string> shapes;
  std::string id;
  auto* check = app.add_subcommand("check", "run one catalog check");
  add_common(check, false);
  check->add_option("--id", id, "check id")->required();
  check->add_option("--shape", shapes, "k,n (repeatable)");
  check->add_option("--seed", c.seed, "seed for randomized sub-checks");
  auto* check_all = app.add_subcommand("check-all", "run the whole catalog");
  add_common(check_all, false);
  check_all->add_option("--shape", shapes, "k,n (repeatable)");
  check_all->add_option("--seed", c.seed, "seed for randomized sub-checks");
  bool list = false;
  check_all->add_flag("--list", list, "print the catalog and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    const GrassShape gshape{c.k, c.n};
    if (nf->parsed()) {
      const ParseContext ctx{parse_ring_kind(c.ring), c.ring == "qm" ? c.m : c.k, c.n, relations(c)};
      const std::string out = render(parse_expr(c.expr, ctx));
      emit(c, out, {{"ring", c.ring}, {"value", out}});
    } else if (det->parsed()) {
      const QMatrixAlgebra alg({c.n, c.n}, relations(c));
      const std::string out = alg.quantum_determinant().to_string();
      emit(c, out, {{"n", c.n}, {"value", out}});
    } else if (minor->parsed()) {
      const QMatrixAlgebra alg({c.m, c.n}, relations(c));
      const auto r = parse_list(rows), s = parse_list(cols);
      const std::string out = alg.quantum_minor(r, s).to_string();
      emit(c, out, {{"rows", r}, {"cols", s}, {"value", out}});
    } else if (straighten->parsed()) {
      const Grassmannian g(gshape, relations(c));
      const auto v = std::get<LocalizedElement>(parse_expr(c.expr, {RingKind::grass, c.k, c.n, relations(c)}));
      // Without [u]^-1 the answer is a sum of standard monomials; otherwise
      // the [u] powers stay on the right of each straightened word.
      std::string out;
      if (v.min_upow() >= 0) {
        std::map<PluckerWord, QScalar> acc;
        for (const auto& t : v.terms()) {
          PluckerWord w = t.word;
          w.insert(w.end(), t.upow, u_index(gshape));
          for (const auto& [coeff, sw] : g.straighten(w)) acc[sw] += t.coeff * coeff;
        }
        StandardExpansion e;
        for (const auto& [word, coeff] : acc)
          if (!coeff.is_zero()) e.emplace_back(coeff, word);
        out = to_string(e);
      } else {
        LocalizedElement sum(gshape);
        for (const auto& t : v.terms())
          for (const auto& [coeff, sw] : g.straighten(t.word))
            sum = sum + LocalizedElement::term(gshape, t.coeff * coeff, sw, t.upow);
        out = sum.to_string();
      }
      emit(c, out, {{"k", c.k}, {"n", c.n}, {"value", out}});
    } else if (apply->parsed()) {
      const auto v = std::get<LocalizedElement>(parse_expr(c.expr, {RingKind::grass, c.k, c.n, relations(c)}));
      LocalizedElement out;
      if (map == "theta") {
        out = theta_antiauto(v);
      } else if (map == "kn") {
        out = kn_isomorphism(v);
      } else {
        AutoSpec spec = auto_json.empty() ? AutoSpec::identity(gshape) : parse_auto(auto_json, gshape);
        if (!no_certify) spec = certified(spec, Grassmannian(gshape, relations(c)));
        out = auto_apply(spec, v);
      }
      emit(c, out.to_string(), {{"map", map}, {"value", out.to_string()}});
    } else if (check->parsed() || check_all->parsed()) {
      if (list) {
        for (const auto& info : check_catalog()) std::cout << info.id << "  " << info.claim << "\n";
        return 0;
      }
      std::vector<GrassShape> gs;
      for (const auto& s : shapes) gs.push_back(parse_shape(s));
      if (gs.empty()) gs = c.n_set ? std::vector<GrassShape>{gshape} : default_check_shapes();
      const CheckOptions options{c.seed, c.mutate};
      std::vector<CheckReport> reports;
      if (check->parsed()) {
        if (!is_known_check(id)) throw std::invalid_argument("unknown check id '" + id + "'");
        for (const auto& s : gs) reports.push_back(run_check(id, s, options));
      } else {
        reports = run_all(gs, options);
      }
      if (c.json_path != "-") print_reports(reports);
      emit_json(report_json(reports, options), c.json_path);
      return any_failed(reports) ? 1 : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
