#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "tropfiber/balancing.hpp"
#include "tropfiber/error.hpp"
#include "tropfiber/io.hpp"
#include "tropfiber/metrics.hpp"
#include "tropfiber/svg.hpp"

namespace tropfiber {

namespace {

struct Options {
  std::string json_path;
  std::string svg_path;
  std::string tol = "1/1000000";
  std::vector<std::string> params;

  std::string file;
  std::string file_b;
  std::string m;
  std::vector<std::string> ms;
  std::string u;
  std::string box;
  bool generalized = false;
  std::size_t facet = 1;
  std::size_t steps = 8;
};

Params parse_params(const std::vector<std::string>& items) {
  Params out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::string format_row(const LinearRow& r, const char* rel) {
  std::string s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const Integer& c = r.coeffs[i];
    if (c == 0) continue;
    const std::string var = "u" + std::to_string(i + 1);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    const Integer a = abs(c);
    s += (a == 1 ? "" : a.str() + "*") + var;
  }
  return s + " " + rel + " " + to_string(r.rhs);
}

void print_complex(const PLComplex& c, std::ostream& out) {
  out << "provenance: " << c.provenance << "\n";
  out << "cells: " << c.cells.size() << "\n";
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    const auto& cell = c.cells[k];
    out << "cell " << k + 1 << " (dim " << cell.dim << ")\n";
    for (const auto& r : cell.system.equalities) out << "  " << format_row(r, "=") << "\n";
    for (const auto& r : cell.system.weak) out << "  " << format_row(r, ">=") << "\n";
    for (const auto& r : cell.system.strict) out << "  " << format_row(r, ">") << "\n";
    out << "  witness " << to_string(cell.witness) << "\n";
    if (c.dim <= 3 && is_bounded(cell.system)) {
      out << "  vertices";
      for (const auto& v : vertices(cell.system)) out << " " << to_string(v);
      out << "\n";
    }
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

void emit_json(const Options& o, const Json& j) {
  if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
}

void require_dim2(const Polytope& p, const char* what) {
  if (p.dim != 2) throw DomainError(std::string(what) + " requires a 2-dimensional polytope");
}

void emit_svg(const Options& o, const Polytope& p, const std::vector<PLComplex>& layers, const PLComplex* locus) {
  if (o.svg_path.empty()) return;
  require_dim2(p, "--svg");
  write_file(o.svg_path, render_svg(p, layers, locus));
}

Json points_json(const std::vector<RatVector>& pts) {
  Json out = Json::array();
  for (const auto& v : pts) out.push_back(to_json(v));
  return out;
}

RatVector interior_point(const Polytope& p, const std::string& text) {
  const RatVector u = parse_rat_vector(text);
  if (u.size() != p.dim) throw ParseError("--u has " + std::to_string(u.size()) + " entries, expected " + std::to_string(p.dim));
  if (!is_interior(p, u)) throw DomainError("not interior: " + to_string(u));
  return u;
}

IntVector direction(const Polytope& p, const std::string& text) {
  const IntVector m = parse_int_vector(text);
  if (m.size() != p.dim) throw ParseError("--m has " + std::to_string(m.size()) + " entries, expected " + std::to_string(p.dim));
  return m;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Polytope p = polytope_from_json(read_json_file(o.file), parse_params(o.params));
  const auto rep = validate(p);
  auto line = [&](const char* name, bool ok) { out << name << ": " << (ok ? "pass" : "fail") << "\n"; };
  line("primitive", rep.primitive);
  line("irredundant", rep.irredundant);
  line("bounded", rep.bounded);
  line("full-dimensional", rep.full_dimensional);
  for (const auto& m : rep.messages) out << m << "\n";
  Json j;
  j["primitive"] = rep.primitive;
  j["irredundant"] = rep.irredundant;
  j["bounded"] = rep.bounded;
  j["full_dimensional"] = rep.full_dimensional;
  j["messages"] = rep.messages;
  emit_json(o, j);
  return rep.ok() ? 0 : 2;
}

int cmd_primary_normals(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  const auto normals = primary_normals(p);
  Json arr = Json::array();
  for (const auto& m : normals) {
    out << to_string(m) << "\n";
    arr.push_back(to_json(m));
  }
  emit_json(o, Json{{"normals", arr}});
  return 0;
}

int cmd_trop(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  const auto c = trop_relative(p, direction(p, o.m));
  print_complex(c, out);
  emit_json(o, to_json(c));
  emit_svg(o, p, {c}, nullptr);
  return 0;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  const auto c = detect(p);
  const auto pts = isolated_points(c);
  print_complex(c, out);
  out << "isolated points:";
  for (const auto& v : pts) out << " " << to_string(v);
  out << "\n";
  Json j = to_json(c);
  j["points"] = points_json(pts);
  emit_json(o, j);
  if (!o.svg_path.empty()) {
    std::vector<PLComplex> layers;
    for (const auto& m : primary_normals(p)) layers.push_back(trop_relative(p, m));
    emit_svg(o, p, layers, &c);
  }
  return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  const RatVector u = interior_point(p, o.u);
  Json j;
  j["point"] = to_json(u);
  if (!o.m.empty()) {
    const IntVector m = direction(p, o.m);
    const bool in = member(p, m, u);
    out << "m=" << to_string(m) << ": " << (in ? "true" : "false") << "\n";
    j["m"] = to_json(m);
    j["member"] = in;
    emit_json(o, j);
    return 0;
  }
  bool all = true;
  Json per = Json::array();
  for (const auto& m : primary_normals(p)) {
    const bool in = member(p, m, u);
    all = all && in;
    out << "m=" << to_string(m) << ": " << (in ? "true" : "false") << "\n";
    per.push_back({{"m", to_json(m)}, {"member", in}});
  }
  out << "strongly bulk-balanced: " << (all ? "true" : "false") << "\n";
  j["directions"] = per;
  j["strongly_bulk_balanced"] = all;
  emit_json(o, j);
  return 0;
}

int cmd_leading_term(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  const RatVector u = interior_point(p, o.u);
  const auto basis = adapted_basis(p, u);
  const auto& f = basis.filtration;
  out << "point " << to_string(u) << "\n";
  for (std::size_t l = 0; l < f.levels.size(); ++l) {
    out << "level " << l + 1 << ": S=" << to_string(f.levels[l]) << " facets";
    for (auto j : f.groups[l]) out << " " << j + 1;
    out << " a=" << f.a[l] << " d=" << f.d[l] << "\n";
  }
  out << "kappa " << f.kappa << "\n";
  out << "scale D=" << basis.scale << "\n";
  for (std::size_t k = 0; k < basis.vectors.size(); ++k)
    out << "e*_{" << basis.slots[k].first + 1 << "," << basis.slots[k].second + 1 << "} = "
        << to_string(basis.vectors[k]) << " (facet " << basis.flag[k] + 1 << ")\n";
  const auto sys = leading_term_system(p, u, basis, o.generalized);
  for (std::size_t l = 0; l < sys.levels.size(); ++l)
    out << "(PO)_" << l + 1 << " = " << format_polynomial(sys.levels[l], basis) << "\n";
  Json eqs = Json::array();
  for (std::size_t k = 0; k < sys.equations.size(); ++k) {
    const std::string text = format_polynomial(sys.equations[k], basis) + " = 0";
    out << "equation " << k + 1 << ": " << text << "\n";
    eqs.push_back(text);
  }
  const bool ok = solvable_over_torus(p, u);
  out << "verdict: " << (ok ? "solvable" : "unsolvable") << "\n";
  emit_json(o, Json{{"point", to_json(u)}, {"kappa", f.kappa}, {"scale", basis.scale.str()},
                    {"equations", eqs}, {"solvable", ok}});
  return 0;
}

int cmd_trop_poly(const Options& o, std::ostream& out) {
  const auto f = polynomial_from_json(read_json_file(o.file));
  const auto c = trop_poly(f);
  print_complex(c, out);
  emit_json(o, to_json(c));
  return 0;
}

int cmd_balanced(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  std::vector<PLComplex> cs;
  for (std::size_t i = 0; i < p.dim; ++i) cs.push_back(log_derivative_trop(p, i));
  const auto c = intersect(cs, interior(p));
  const auto pts = isolated_points(c);
  out << "balanced candidates:";
  for (const auto& v : pts) out << " " << to_string(v);
  out << "\n";
  Json j = to_json(c);
  j["points"] = points_json(pts);
  emit_json(o, j);
  emit_svg(o, p, cs, &c);
  return 0;
}

Json distance_json(const DistanceInterval& d) { return to_json(d); }

void print_interval(const DistanceInterval& d, std::ostream& out) {
  out << "lower " << to_string(d.lower) << " (" << std::setprecision(12) << to_double(d.lower) << ")\n";
  out << "upper " << to_string(d.upper) << " (" << std::setprecision(12) << to_double(d.upper) << ")\n";
}

int cmd_hausdorff(const Options& o, std::ostream& out) {
  const Rational tol = parse_rational(o.tol);
  const Json ja = read_json_file(o.file), jb = read_json_file(o.file_b);
  const bool complex_a = ja.contains("cells"), complex_b = jb.contains("cells");
  if (complex_a != complex_b) throw ParseError("hausdorff needs two polytopes or two complexes");
  DistanceInterval d;
  if (complex_a) {
    std::optional<Box> box;
    if (!o.box.empty()) {
      const auto b = parse_rat_vector(o.box);
      if (b.size() != 4) throw ParseError("--box expects xmin,xmax,ymin,ymax");
      box = Box{b[0], b[1], b[2], b[3]};
    }
    d = hausdorff(complex_from_json(ja), complex_from_json(jb), tol, box);
  } else {
    const Params params = parse_params(o.params);
    Polytope a = polytope_from_json(ja, params), b = polytope_from_json(jb, params);
    for (const auto* p : {&a, &b}) {
      const auto rep = validate(*p);
      if (!rep.ok()) throw DomainError(rep.messages.front());
      require_dim2(*p, "hausdorff");
    }
    d = hausdorff(a, b, tol);
  }
  print_interval(d, out);
  emit_json(o, distance_json(d));
  return 0;
}

int cmd_converge(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  require_dim2(p, "converge");
  if (o.facet == 0 || o.facet > p.facets.size()) throw DomainError("--facet out of range");
  const Rational tol = parse_rational(o.tol);
  std::vector<Rational> deltas;
  for (std::size_t k = 1; k <= o.steps; ++k) deltas.push_back(Rational(1, Integer(1) << k));
  const auto rows = convergence_experiment(p, o.facet - 1, deltas, direction(p, o.m), tol);
  out << std::left << std::setw(4) << "k" << std::setw(12) << "delta" << std::setw(20) << "lower" << std::setw(20)
      << "upper"
      << "valid\n";
  Json arr = Json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    std::ostringstream lo, hi;
    lo << std::setprecision(12) << to_double(r.distance.lower);
    hi << std::setprecision(12) << to_double(r.distance.upper);
    out << std::setw(4) << k + 1 << std::setw(12) << to_string(r.delta) << std::setw(20) << lo.str() << std::setw(20)
        << hi.str() << (r.valid_translate ? "yes" : "no") << "\n";
    arr.push_back({{"delta", to_string(r.delta)}, {"lower", to_string(r.distance.lower)},
                   {"upper", to_string(r.distance.upper)}});
  }
  emit_json(o, arr);
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Polytope p = load_polytope(o.file, parse_params(o.params));
  require_dim2(p, "render");
  if (o.svg_path.empty()) throw ParseError("render requires --svg PATH");
  std::vector<PLComplex> layers;
  if (o.ms.empty()) {
    for (const auto& m : primary_normals(p)) layers.push_back(trop_relative(p, m));
  } else {
    for (const auto& m : o.ms) layers.push_back(trop_relative(p, direction(p, m)));
  }
  const auto locus = intersect(layers, interior(p));
  emit_svg(o, p, layers, &locus);
  out << "wrote " << o.svg_path << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locate non-displaceable toric fibers from a moment polytope"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--json", o.json_path, "Write the JSON result to PATH");
  app.add_option("--svg", o.svg_path, "Write an SVG rendering to PATH (dimension 2)");
  app.add_option("--tol", o.tol, "Distance tolerance p/q")->capture_default_str();
  app.add_option("--param", o.params, "Polytope parameter name=value (repeatable)");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "Polytope JSON")->required(); };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    handlers[sub] = fn;
    return sub;
  };

  file_arg(add("validate", "Check the polytope invariants", cmd_validate));
  file_arg(add("primary-normals", "List primary normals", cmd_primary_normals));
  {
    auto* s = add("trop", "Tropicalization relative to a direction", cmd_trop);
    file_arg(s);
    s->add_option("--m", o.m, "Direction a,b,...")->required();
  }
  file_arg(add("detect", "Intersect the primary tropicalizations inside the polytope", cmd_detect));
  {
    auto* s = add("member", "Pointwise membership verdicts", cmd_member);
    file_arg(s);
    s->add_option("--u", o.u, "Interior point p/q,...")->required();
    s->add_option("--m", o.m, "Single direction");
  }
  {
    auto* s = add("leading-term", "Energy filtration, adapted basis and leading term equations", cmd_leading_term);
    file_arg(s);
    s->add_option("--u", o.u, "Interior point p/q,...")->required();
    s->add_flag("--generalized", o.generalized, "Attach symbolic units to each term");
  }
  {
    auto* s = add("trop-poly", "Tropical hypersurface of a polynomial file", cmd_trop_poly);
    s->add_option("file", o.file, "Polynomial JSON {dim, terms: [{valuation, exponent}]}")->required();
  }
  file_arg(add("balanced", "Isolated points of the log-derivative tropicalizations", cmd_balanced));
  {
    auto* s = add("hausdorff", "Hausdorff distance interval between two polytopes or complexes", cmd_hausdorff);
    s->add_option("file_a", o.file, "First JSON file")->required();
    s->add_option("file_b", o.file_b, "Second JSON file")->required();
    s->add_option("--box", o.box, "Clip box xmin,xmax,ymin,ymax for complexes");
  }
  {
    auto* s = add("converge", "Hausdorff convergence under facet translation", cmd_converge);
    file_arg(s);
    s->add_option("--facet", o.facet, "Facet index (1-based)")->capture_default_str();
    s->add_option("--m", o.m, "Direction")->required();
    s->add_option("--steps", o.steps, "delta = 2^-k for k = 1..steps")->capture_default_str();
  }
  {
    auto* s = add("render", "SVG of the polytope, tropicalizations and their intersection", cmd_render);
    file_arg(s);
    s->add_option("--m", o.ms, "Directions (default: primary normals)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(o, out);
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tropfiber
