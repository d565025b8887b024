#include "cli.hpp"

#include "tropcheck/analysis.hpp"
#include "tropcheck/clarke.hpp"
#include "tropcheck/json_io.hpp"
#include "tropcheck/parser.hpp"
#include "tropcheck/svg_plot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tropcheck::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string point;
  std::uint64_t seed = 0;
  int retries = 32;
  std::string format = "json";
  std::string viewport = "-5,5,-5,5";
  std::string out_path;
  std::string clarke_at;
  std::vector<std::string> params;
};

TropicalMap load_map(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot open '" + cfg.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();

  ParseOptions options;
  for (const auto& p : cfg.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects NAME=VALUE, got '" + p + "'");
    options.params[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
  }
  return parse_map(buf.str(), options);
}

Vector load_point(const RunConfig& cfg, std::size_t dim) {
  Vector x = parse_point(cfg.point);
  if (x.size() != dim)
    throw UsageError("point has " + std::to_string(x.size()) + " coordinates, map expects " + std::to_string(dim));
  return x;
}

std::string point_text(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string matrix_text(const MatrixQ& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + point_text(m.row(r));
  return s + "]";
}

std::string cell_text(const Polyhedron& cell, const std::vector<std::string>& names) {
  if (cell.constraints.empty()) return "everywhere";
  std::string s;
  for (std::size_t i = 0; i < cell.constraints.size(); ++i) {
    const auto& c = cell.constraints[i];
    LinearForm lhs = c.form;
    lhs.constant = 0;
    s += (i ? ", " : "") + format_form(lhs, names) + (c.rel == Relation::Equal ? " = " : " >= ") +
         to_string(-c.form.constant);
  }
  return s;
}

std::string pieces_text(const Decomposition& d, const std::vector<std::string>& in_names) {
  std::ostringstream os;
  os << d.size() << " pieces\n";
  for (const auto& p : d.pieces) {
    os << "piece " << p.id << ": jac " << (p.jac ? to_string(*p.jac) : "n/a") << ", matrix " << matrix_text(p.matrix)
       << ", offset " << point_text(p.offset) << "\n  cell: " << cell_text(p.cell, in_names) << "\n";
  }
  return os.str();
}

std::string clarke_text(const ClarkeSet& c) {
  std::ostringstream os;
  os << "clarke at " << point_text(c.point) << ": " << to_string(c.verdict) << "\n";
  os << "pieces:";
  for (auto id : c.piece_ids) os << ' ' << id;
  os << "\n";
  if (c.witness && c.witness->weights) {
    os << "witness weights:";
    for (std::size_t i = 0; i < c.witness->weights->size(); ++i)
      if ((*c.witness->weights)[i] != 0) os << " piece " << c.piece_ids[i] << " -> " << to_string((*c.witness->weights)[i]);
    os << "\n";
  } else if (c.witness) {
    os << "witness: t in (" << to_string(c.witness->lo) << ", " << to_string(c.witness->hi) << ") between "
       << point_text(c.witness->from) << " and " << point_text(c.witness->to) << "\n";
  }
  return os.str();
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << " (" << to_string(r.reason) << ")\n";
  os << "pieces: " << r.piece_count << ", jacobian signs: +" << r.signs.pos << " -" << r.signs.neg << " 0:" << r.signs.zero
     << "\n";
  if (r.regular_value)
    os << "regular value: " << point_text(r.regular_value->y0) << " (" << r.regular_value->checked_facets
       << " facets checked)\n";
  if (r.degree) os << "degree: " << *r.degree << "\n";
  for (const auto& w : r.witnesses) os << "witness: " << point_text(w) << "\n";
  if (r.fast_path) os << "plane criterion: " << to_string(*r.fast_path) << "\n";
  if (!r.diagnostics.empty()) os << "note: " << r.diagnostics << "\n";
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw UsageError("cannot write '" + cfg.out_path + "'");
  f << body;
}

std::string render(const RunConfig& cfg, const Json& j, const std::string& text) {
  return cfg.format == "text" ? text : j.dump(2) + "\n";
}

int execute(const RunConfig& cfg, std::ostream& out) {
  const TropicalMap f = load_map(cfg);

  if (cfg.command == "eval") {
    const Vector y = eval_expr(f, load_point(cfg, f.dim()));
    emit(cfg, render(cfg, Json{{"point", to_json(parse_point(cfg.point))}, {"value", to_json(y)}}, point_text(y) + "\n"),
         out);
    return 0;
  }

  const Decomposition d = enumerate_pieces(f);

  if (cfg.command == "pieces") {
    emit(cfg, render(cfg, to_json(d), pieces_text(d, f.variables)), out);
    return 0;
  }
  if (cfg.command == "plot") {
    if (f.dim() != 2 || f.outputs() != 2) throw UsageError("plot needs a map of the plane (n = 2)");
    emit(cfg, plot_svg(d, parse_viewport(cfg.viewport)), out);
    return 0;
  }

  if (!f.square()) throw UsageError("this command needs a map R^n -> R^n");

  if (cfg.command == "preimage") {
    const Preimage p = preimage(d, load_point(cfg, f.outputs()));
    std::string text;
    for (const auto& q : p.points) text += point_text(q.point) + "\n";
    if (p.degenerate()) text += "degenerate fiber on singular pieces\n";
    emit(cfg, render(cfg, to_json(p), text), out);
    return 0;
  }
  if (cfg.command == "clarke") {
    const ClarkeSet c = clarke_at(d, load_point(cfg, f.dim()));
    emit(cfg, render(cfg, to_json(c), clarke_text(c)), out);
    return 0;
  }

  const AnalysisOptions options{cfg.seed, cfg.retries};
  const AnalysisReport r = decide_isomorphism(f, d, options);

  if (cfg.command == "invert") {
    if (r.verdict != Verdict::Isomorphism) {
      emit(cfg, render(cfg, to_json(r), report_text(r)), out);
      return r.verdict == Verdict::Unknown ? kExitUnknown : kExitNotIsomorphism;
    }
    std::vector<std::string> out_names;
    for (std::size_t i = 0; i < f.outputs(); ++i) out_names.push_back("y" + std::to_string(i + 1));
    emit(cfg, render(cfg, to_json(*r.inverse), pieces_text(*r.inverse, out_names)), out);
    return kExitIsomorphism;
  }

  // analyze
  Json j = to_json(r);
  std::string text = report_text(r);
  if (!cfg.clarke_at.empty()) {
    RunConfig at = cfg;
    at.point = cfg.clarke_at;
    const ClarkeSet c = clarke_at(d, load_point(at, f.dim()));
    j["clarke"] = to_json(c);
    text += clarke_text(c);
  }
  emit(cfg, render(cfg, j, text), out);
  switch (r.verdict) {
    case Verdict::Isomorphism: return kExitIsomorphism;
    case Verdict::NotIsomorphism: return kExitNotIsomorphism;
    default: return kExitUnknown;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact isomorphism checker for tropical rational maps", "tropcheck"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for regular-value sampling (default 0)")->envname("TROPCHECK_SEED");
  app.add_option("--retries", cfg.retries, "Regular-value sampling attempts")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--viewport", cfg.viewport, "Plot window XMIN,XMAX,YMIN,YMAX");
  app.add_option("--out", cfg.out_path, "Write the result to PATH instead of stdout");
  app.add_option("--param", cfg.params, "Override a declared parameter, NAME=VALUE");

  struct Spec {
    const char* name;
    const char* help;
    bool takes_point;
  };
  const Spec specs[] = {
      {"analyze", "Decide whether the map is an isomorphism", false},
      {"pieces", "List the linear pieces and their cells", false},
      {"eval", "Evaluate the map at POINT", true},
      {"preimage", "All preimages of POINT", true},
      {"clarke", "Clarke generalized Jacobian test at POINT", true},
      {"invert", "Inverse pieces of an isomorphism", false},
      {"plot", "SVG of the cell decomposition of a planar map", false},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", cfg.input, "Map file")->required();
    if (s.takes_point) sub->add_option("point", cfg.point, "Comma separated rationals, e.g. 1/2,-3")->required();
    if (std::string(s.name) == "analyze")
      sub->add_option("--clarke-at", cfg.clarke_at, "Also run the Clarke test at this point");
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tropcheck: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return execute(cfg, out);
  } catch (const ParseError& e) {
    err << "tropcheck: " << cfg.input << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "tropcheck: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace tropcheck::cli
