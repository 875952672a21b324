// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "ecbounds/bounds.hpp"
#include "ecbounds/cn_family.hpp"
#include "ecbounds/constants.hpp"
#include "ecbounds/division_polynomials.hpp"
#include "ecbounds/error.hpp"
#include "ecbounds/heights.hpp"
#include "ecbounds/lattice.hpp"

namespace ecbounds::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string format = "text";
  std::string curve = "1,-1";
  // constants
  std::string name;
  int n = 3;
  int m = 1;
  int s = 1;
  int r = -1;
  double hw = -1;
  // bounds
  double h_v = 0.0;
  long deg_v = 1;
  std::string variant = "e2";
  std::string epsilon = "0";
  // cn
  int cn_n = 1;
  std::int64_t radius = 5;
  unsigned threads = 1;
  // heights
  std::string point = "1,1";
  double tol = 1e-3;
  int max_depth = 12;
  // lattice
  std::string rows;
  // divpoly
  bool generic = false;
  // aux-subgroup
  std::string v = "1;2;3";
  std::vector<double> gen_heights;
  double t = 16;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

IntegerMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<std::int64_t> r;
    for (const auto& e : split(row, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(e, &used));
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad matrix entry '" + e + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows);
}

json vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json matrix_json(const IntegerMatrix& m) {
  json a = json::array();
  for (const auto& row : m.row_vectors()) a.push_back(vector_json(row));
  return a;
}

json exact_value(const Symbolic& s, const Bindings& b = {}) {
  return {{"exact", s.to_string()}, {"value", real_to_json(s.evaluate(b))}};
}

json height_json(const HeightInterval& h) {
  return {{"lo", real_to_json(h.lo)}, {"hi", real_to_json(h.hi)}, {"depth", h.depth}};
}

json interval_json(const Interval& i) {
  return {{"lo", real_to_json(i.lo)}, {"hi", real_to_json(i.hi)}};
}

double curve_hw(const Options& o) {
  if (o.hw >= 0) return o.hw;
  return hw(parse_curve(o.curve)).hi;
}

std::vector<int> constant_params(const Options& o, const std::vector<std::string>& names) {
  std::vector<int> p;
  for (const auto& nm : names) {
    if (nm == "N") p.push_back(o.n);
    else if (nm == "m") p.push_back(o.m);
    else if (nm == "s") p.push_back(o.s);
    else p.push_back(o.r < 0 ? o.n : o.r);
  }
  return p;
}

json constant_json(const ConstantValue& c, const std::vector<std::string>& names) {
  json params = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = c.params[i];
  return {{"name", c.name}, {"params", params}, {"exact", c.exact}, {"value", real_to_json(c.value)}};
}

json run_constants(const Options& o) {
  const double w = curve_hw(o);
  json out = {{"hW", real_to_json(w)}};
  json list = json::array();
  for (const auto& [name, names] : constant_catalog()) {
    if (!o.name.empty() && name != o.name) continue;
    list.push_back(constant_json(constant(name, constant_params(o, names), w), names));
  }
  if (list.empty()) fail(ErrorCode::BadParams, "unknown constant: " + o.name);
  out["constants"] = list;
  return out;
}

json run_thm12(const Options& o) {
  return {{"certificate", theorem12_bound(parse_curve(o.curve), o.n, o.h_v, o.deg_v)}};
}

json run_thm14(const Options& o) {
  Theorem14Input in;
  if (o.variant == "e2") in.variant = Theorem14Variant::TransverseE2;
  else if (o.variant == "weak") in.variant = Theorem14Variant::WeakTransverse;
  else fail(ErrorCode::BadParams, "variant must be e2 or weak");
  in.n = o.n;
  in.h_c_value = o.h_v;
  in.deg_c = o.deg_v;
  mpq_class eps;
  if (eps.set_str(o.epsilon, 10) != 0) fail(ErrorCode::ParseError, "bad epsilon '" + o.epsilon + "'");
  eps.canonicalize();
  in.epsilon = eps;
  return {{"certificate", theorem14_bound(parse_curve(o.curve), in)}};
}

json run_cn_report(const Options& o) {
  const CnReport r = cn_report(o.cn_n);
  json fibers = json::array();
  for (const auto& f : r.genus.fibers) {
    fibers.push_back({{"point", f.label},
                      {"ramified", f.ramified},
                      {"index", f.index},
                      {"unramified", f.unramified},
                      {"contribution", f.contribution()}});
  }
  const auto& e = r.essential_min;
  const auto& c = r.coefficients;
  return {
      {"n", r.n},
      {"degree", r.degree.get_str()},
      {"genus", r.genus.genus},
      {"map_degree", r.genus.map_degree},
      {"ramification", fibers},
      {"ramification_sum", r.genus.ramification_sum},
      {"hurwitz_balanced", r.genus.balanced},
      {"essential_min_chain",
       {{"h(zeta)", exact_value(e.h_zeta)},
        {"h(y2)", exact_value(e.h_y2)},
        {"h(x1)", exact_value(e.h_x1)},
        {"h(y1)", exact_value(e.h_y1)},
        {"h(x1,y1)", exact_value(e.h_x1y1)},
        {"h(zeta,y2)", exact_value(e.h_zeta_y2)},
        {"h2(x1,y1)", exact_value(e.h2_x1y1)},
        {"h2(zeta,y2)", exact_value(e.h2_zeta_y2)},
        {"h2(Q_zeta)", exact_value(e.total)}}},
      {"essential_min_upper", real_to_json(r.essential_min_upper)},
      {"curve_height_upper", exact_value(r.curve_height_upper)},
      {"point_height_bound", r.point_bound},
      {"a_max", real_to_json(c.a_max)},
      {"a_max_computed_bound", real_to_json(c.a_max_computed_bound)},
      {"a_max_certified_generator", real_to_json(c.a_max_certified_generator)},
      {"b_bound",
       {{"quadratic", c.b_quadratic.get_str()},
        {"constant", exact_value(c.b_constant)},
        {"form", "|b| <= sqrt(" + c.b_quadratic.get_str() + " a^2 + " + c.b_constant.to_string() + ")"}}},
  };
}

json run_cn_search(const Options& o) {
  const auto sols = cn_search(o.cn_n, o.radius, o.threads);
  json list = json::array();
  for (const auto& s : sols) {
    list.push_back({{"a", s.a}, {"b", s.b}, {"x_a", s.x_a.get_str()}, {"y_b", s.y_b.get_str()}});
  }
  return {{"n", o.cn_n}, {"radius", o.radius}, {"count", sols.size()}, {"solutions", list}};
}

json run_height(const Options& o) {
  const Curve curve = parse_curve(o.curve);
  const Point p = parse_point(curve, o.point);
  NeronTateOptions nt;
  nt.max_depth = o.max_depth;
  const HeightComparison c = height_comparison_report(p, o.tol, nt);
  json out = {{"curve", curve.to_string()},
              {"point", p.to_string()},
              {"tol", real_to_json(o.tol)},
              {"h_hat", height_json(c.hhat)}};
  if (c.affine) {
    out["h"] = interval_json(c.h);
    out["h2"] = interval_json(c.h2);
    out["h(x)"] = interval_json(c.hx);
    out["slacks"] = {{"h <= h2", real_to_json(c.h_le_h2)},
                     {"h2 <= h + log(3)/2", real_to_json(c.h2_le_h_plus)},
                     {"difference envelope lower", real_to_json(c.silverman_lower)},
                     {"difference envelope upper", real_to_json(c.silverman_upper)},
                     {"Weierstrass envelope lower", real_to_json(c.zimmer_lower)},
                     {"Weierstrass envelope upper", real_to_json(c.zimmer_upper)}};
  }
  return out;
}

json minima_json(const SuccessiveMinima& sm) {
  json a = json::array();
  for (std::size_t i = 0; i < sm.vectors.size(); ++i) {
    a.push_back({{"norm_squared", sm.norms_squared[i].get_str()},
                 {"norm", real_to_json(std::sqrt(sm.norms_squared[i].get_d()))},
                 {"vector", vector_json(sm.vectors[i])}});
  }
  return a;
}

json run_lattice(const Options& o) {
  if (o.rows.empty()) fail(ErrorCode::BadParams, "--rows is required");
  const IntegerMatrix m = parse_matrix(o.rows);
  json out = {{"basis", matrix_json(m)}};
  if (m.rows() == m.cols()) {
    const IntegerMatrix adj = adjugate(m);
    const mpz_class det = m.determinant();
    IntegerMatrix scaled = IntegerMatrix::identity(m.rows());
    for (int i = 0; i < m.rows(); ++i) scaled(i, i) = det;
    out["adjugate"] = {{"matrix", matrix_json(adj)},
                       {"det", det.get_str()},
                       {"identity_holds", m * adj == scaled},
                       {"column_bound_holds", adjugate_column_bound_holds(m, adj)}};
  }
  if (m.rank() != m.rows()) {
    out["rank"] = m.rank();
    out["note"] = "rows are dependent; lattice data skipped";
    return out;
  }
  const IntegerLattice lat(m);
  out["rank"] = lat.rank();
  out["det_squared"] = lat.det_squared().get_str();
  out["det"] = real_to_json(det_lattice(lat));
  out["minima"] = minima_json(successive_minima(lat));
  const MinkowskiCertificate mk = minkowski_certificate(lat);
  out["minkowski"] = {{"lower", {{"exact", mk.lower_exact}, {"value", real_to_json(mk.lower)}}},
                      {"middle", {{"exact", mk.middle_exact}, {"value", real_to_json(mk.middle)}}},
                      {"upper", {{"exact", mk.upper_exact}, {"value", real_to_json(mk.upper)}}},
                      {"lower_holds", mk.lower_holds},
                      {"upper_holds", mk.upper_holds}};
  if (lat.rank() < lat.ambient_dimension()) {
    const OrthogonalLattice orth = orthogonal_lattice(lat);
    std::vector<IntVector> stacked = m.row_vectors();
    for (const auto& row : orth.lattice.basis().row_vectors()) stacked.push_back(row);
    const mpz_class u = IntegerMatrix(stacked).determinant();
    out["orthogonal"] = {{"basis", matrix_json(orth.lattice.basis())},
                         {"minima_basis", orth.minima_basis},
                         {"det_squared", orth.lattice.det_squared().get_str()},
                         {"det", real_to_json(det_lattice(orth.lattice))},
                         {"stacked_det", u.get_str()},
                         {"det_product_matches",
                          u * u == lat.det_squared() * orth.lattice.det_squared()}};
  }
  return out;
}

template <class P>
json divpoly_json(const DivisionPolynomialSystem<P>& sys, int m) {
  const DivisionPoly<P> psi = sys.psi(m);
  const YPoly<P> om = sys.omega(m);
  const YPoly<P> cu = sys.psi_cubed(m);
  const DegreeReport d = degree_report(sys, m);
  return {{"m", m},
          {"psi", {{"parity", psi.parity == Parity::Odd ? "odd" : "even"},
                   {"body", psi.body.to_string()},
                   {"form", psi.parity == Parity::Odd ? "body" : "2y * body"}}},
          {"psi_squared", sys.psi_squared(m).to_string()},
          {"psi_cubed", {{"c", cu.c.to_string()}, {"y", cu.y_part.to_string()}}},
          {"phi", sys.phi(m).to_string()},
          {"omega", {{"c", om.c.to_string()}, {"y", om.y_part.to_string()}}},
          {"degrees", {{"phi", d.d_phi},
                       {"psi", d.d_psi},
                       {"psi_squared", d.d_psi_sq},
                       {"psi_cubed", d.d_psi_cubed},
                       {"omega", d.d_omega},
                       {"phi_monic", d.phi_monic},
                       {"psi_squared_leading_m2", d.psi_sq_leading_m2}}}};
}

json run_divpoly(const Options& o) {
  if (o.m < 1) fail(ErrorCode::BadParams, "m must be >= 1");
  if (o.generic) {
    json out = divpoly_json(make_generic_division_polynomials(), o.m);
    out["model"] = "generic";
    return out;
  }
  const Curve curve = parse_curve(o.curve);
  const CurveDivisionPolynomials sys = make_division_polynomials(curve);
  json out = divpoly_json(sys, o.m);
  out["model"] = curve.to_string();
  if (!o.point.empty()) {
    const Point p = parse_point(curve, o.point);
    out["point"] = p.to_string();
    out["multiple"] = mul_via_division_polys(sys, o.m, p).to_string();
    out["matches_double_and_add"] = mul_via_division_polys(sys, o.m, p) == scalar_mul(o.m, p);
  }
  return out;
}

json run_aux(const Options& o) {
  const Curve curve = parse_curve(o.curve);
  PointDecomposition data;
  data.v = parse_matrix(o.v);
  const int n = data.v.rows();
  const int m = data.v.cols();
  if (curve != Curve::e0() && o.gen_heights.empty()) {
    fail(ErrorCode::BadParams, "only E0 has built-in generator data; pass --gen-heights");
  }
  if (curve != Curve::e0()) fail(ErrorCode::BadParams, "generators are only known for E0");
  if (m != 1) fail(ErrorCode::BadParams, "E0 has rank one: v must have a single column");
  const Point g = e0_generator();
  data.gen_heights = o.gen_heights;
  if (data.gen_heights.empty()) data.gen_heights.push_back(neron_tate(g, o.tol).mid());
  for (int i = 0; i < n; ++i) data.points.push_back(scalar_mul(data.v(i, 0), g));
  AuxiliaryOptions opt;
  opt.tol = o.tol;
  const AuxiliarySubgroup aux = auxiliary_subgroup(data, o.s, o.t, opt);
  json forms = json::array();
  for (int j = 0; j < aux.forms.m(); ++j) {
    forms.push_back({{"coefficients", vector_json(aux.forms.coefficients[j])},
                     {"scale", real_to_json(aux.forms.scales[j])},
                     {"norm", real_to_json(aux.forms.norm(j))}});
  }
  json vecs = json::array();
  for (const auto& u : aux.search.vectors) vecs.push_back(vector_json(u));
  return {{"curve", curve.to_string()},
          {"v", matrix_json(data.v)},
          {"s", o.s},
          {"T", real_to_json(o.t)},
          {"forms", {{"A", real_to_json(aux.forms.a)}, {"c16", real_to_json(aux.forms.c16)}, {"forms", forms}}},
          {"H", matrix_json(aux.h)},
          {"search", {{"vectors", vecs},
                      {"norm_product", real_to_json(aux.search.norm_product)},
                      {"c17", real_to_json(aux.search.c17)},
                      {"target", real_to_json(aux.search.target)},
                      {"comparisons", aux.search.comparisons}}},
          {"degree_certificate", aux.degree},
          {"height_certificate", aux.height}};
}

void build_app(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* c = app.add_subcommand("constants", "Explicit constants with exact and numeric forms");
  c->add_option("--name", o.name, "Constant name (all when omitted)");
  c->add_option("--N", o.n, "N");
  c->add_option("--m", o.m, "m");
  c->add_option("--s", o.s, "s");
  c->add_option("--r", o.r, "Ball dimension for omega (defaults to N)");
  c->add_option("--hw", o.hw, "Weierstrass height h_W (overrides --curve)");
  c->add_option("--curve", o.curve, "Curve A,B");

  auto* t12 = app.add_subcommand("bound-thm12", "Height bound for rank-one anomalous points on V");
  t12->add_option("--curve", o.curve, "Curve A,B");
  t12->add_option("--N", o.n, "Ambient power N")->required();
  t12->add_option("--hV", o.h_v, "Height of V")->required();
  t12->add_option("--degV", o.deg_v, "Degree of V")->required();

  auto* t14 = app.add_subcommand("bound-thm14", "Height bound for rank <= 1 points on a curve");
  t14->add_option("--curve", o.curve, "Curve A,B");
  t14->add_option("--variant", o.variant, "e2 | weak")->check(CLI::IsMember({"e2", "weak"}));
  t14->add_option("--N", o.n, "Ambient power for the weak variant");
  t14->add_option("--hC", o.h_v, "Height of C")->required();
  t14->add_option("--degC", o.deg_v, "Degree of C")->required();
  t14->add_option("--epsilon", o.epsilon, "Reduction slack (rational)");

  auto* cr = app.add_subcommand("cn-report", "Invariants and bounds for C_n: x_1^n = y_2");
  cr->add_option("--n", o.cn_n, "n")->required();

  auto* cs = app.add_subcommand("cn-search", "Points ([a]g, [b]g) on C_n with |a|, |b| <= radius");
  cs->add_option("--n", o.cn_n, "n")->required();
  cs->add_option("--radius", o.radius, "Search radius");
  cs->add_option("--threads", o.threads, "Worker threads");

  auto* h = app.add_subcommand("height", "Canonical height enclosure and height comparisons");
  h->add_option("--curve", o.curve, "Curve A,B");
  h->add_option("--point", o.point, "Point x,y or O");
  h->add_option("--tol", o.tol, "Interval width");
  h->add_option("--max-depth", o.max_depth, "Doubling depth cap");

  auto* l = app.add_subcommand("lattice", "Minima, determinant, orthogonal lattice, adjugate");
  l->add_option("--rows", o.rows, "Rows, e.g. '1,1;1,-1'")->required();

  auto* d = app.add_subcommand("divpoly", "Division polynomials and their degrees");
  d->add_option("--m", o.m, "Index m")->required();
  d->add_option("--curve", o.curve, "Curve A,B");
  d->add_flag("--generic", o.generic, "Keep A and B symbolic");
  d->add_option("--point", o.point, "Point to multiply (empty to skip)");

  auto* a = app.add_subcommand("aux-subgroup", "Auxiliary subgroup for a rank-one point of E0^N");
  a->add_option("--curve", o.curve, "Curve A,B (E0 only)");
  a->add_option("--v", o.v, "Coefficients of P_i in the generator, rows 'v1;v2;...'");
  a->add_option("--gen-heights", o.gen_heights, "Generator heights (computed when omitted)");
  a->add_option("--s", o.s, "Codimension s");
  a->add_option("--T", o.t, "T >= 1");
  a->add_option("--tol", o.tol, "Height interval width");
}

struct Parsed {
  Options options;
  json parameters;
};

Parsed parse(const std::vector<std::string>& args) {
  Parsed p;
  CLI::App app{"ecbounds: explicit height and degree bounds on powers of elliptic curves"};
  build_app(app, p.options);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  const CLI::App* sub = app.get_subcommands().front();
  p.options.command = sub->get_name();
  json params = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    params[opt->get_name().substr(2)] = opt->as<std::string>();
  }
  p.parameters = params;
  return p;
}

json build(const Parsed& p) {
  const Options& o = p.options;
  json result;
  if (o.command == "constants") result = run_constants(o);
  else if (o.command == "bound-thm12") result = run_thm12(o);
  else if (o.command == "bound-thm14") result = run_thm14(o);
  else if (o.command == "cn-report") result = run_cn_report(o);
  else if (o.command == "cn-search") result = run_cn_search(o);
  else if (o.command == "height") result = run_height(o);
  else if (o.command == "lattice") result = run_lattice(o);
  else if (o.command == "divpoly") result = run_divpoly(o);
  else result = run_aux(o);
  return {{"schema", kSchema}, {"command", o.command}, {"parameters", p.parameters}, {"result", result}};
}

void render(const json& j, const std::string& indent, std::ostringstream& out);

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_real15(j.get<double>());
  return j.dump();
}

bool all_scalars(const json& a) {
  return std::all_of(a.begin(), a.end(), [](const json& e) {
    return e.is_primitive() || (e.is_array() && all_scalars(e));
  });
}

std::string inline_array(const json& a) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : a) {
    if (!first) s += ", ";
    first = false;
    s += e.is_array() ? inline_array(e) : scalar_text(e);
  }
  return s + "]";
}

void render(const json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const json& v = it.value();
    if (v.is_primitive()) {
      out << indent << key << ": " << scalar_text(v) << "\n";
    } else if (v.is_array() && all_scalars(v)) {
      out << indent << key << ": " << inline_array(v) << "\n";
    } else {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace

json record(const std::vector<std::string>& args) { return build(parse(args)); }

std::string render_text(const json& rec) {
  std::ostringstream out;
  render(rec, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parsed p;
  try {
    p = parse(args);
  } catch (const CLI::CallForHelp&) {
    CLI::App app{"ecbounds: explicit height and degree bounds on powers of elliptic curves"};
    Options scratch;
    build_app(app, scratch);
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  try {
    const json rec = build(p);
    if (p.options.format == "json") {
      out << rec.dump(2) << "\n";
    } else {
      out << render_text(rec);
    }
    return kOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace ecbounds::cli
