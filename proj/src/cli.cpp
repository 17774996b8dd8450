#include "pbound/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pbound/report.hpp"

namespace pbound {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rational> rational_list(const std::string& s, size_t n, const std::string& what) {
  auto parts = split_commas(s);
  if (parts.size() != n) throw UsageError(what + " expects " + std::to_string(n) + " comma-separated values");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

ParsedSystem load_system(const CliConfig& c) {
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw UsageError("cannot read " + c.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
  }
  if (c.system_text.empty()) throw UsageError("no system given (use --system or --file)");
  return parse_system(c.system_text);
}

PointTarget parse_point(const std::string& s) {
  auto parts = split_commas(s);
  if (parts.size() != 2) throw UsageError("--at expects z0,w0 or z0,inf");
  Rational z0 = parse_rational(parts[0]);
  if (parts[1] == "inf") return PointTarget::infinity(z0);
  return PointTarget::finite(z0, ExtElem(parse_rational(parts[1])));
}

Json system_json(const ParsedSystem& ps) {
  Json j = to_json(ps.sys);
  j["form"] = to_string(ps.source.form);
  Json params = Json::object();
  for (const auto& [k, v] : ps.source.params) params[k] = v.str();
  j["params"] = params;
  return j;
}

bool presumed_anywhere(const DarbouxSearch& s) {
  for (const auto& c : s.certificates) {
    if (!c.certified) return true;
  }
  return false;
}

// A bound through the axis when the input is in axis form, otherwise through the
// first rational invariant line; nullopt when neither exists.
std::optional<BoundReport> default_bound(const ParsedSystem& ps, const LineScan* scan, const Caps& caps) {
  if (ps.source.form == SystemSource::Form::AxisForm) return axis_degree_bound(ps.sys, caps);
  if (!scan) return std::nullopt;
  for (const auto& l : scan->lines) {
    if (l.tower) continue;
    return line_degree_bound(ps.sys, l.u.rational(), l.v.rational(), l.t.rational(), caps);
  }
  return std::nullopt;
}

int dispatch(const CliConfig& c, const Caps& caps, Json& doc) {
  doc["command"] = c.command;
  if (c.command == "lv") {
    auto p = rational_list(c.params, 3, "--params");
    LvParams lp{p[0], p[1], p[2]};
    doc["params"] = {{"a", lp.a.str()}, {"b", lp.b.str()}, {"c", lp.c.str()}};
    doc["system"] = to_json(lv_system(lp));
    LvClassification cl = classify(lp, caps);
    doc["classification"] = to_json(cl);
    doc["triple"] = to_json(lv_triple(lp, caps));
    Json sym = Json::object();
    for (auto [name, which] : {std::pair{"swap", LvSymmetry::Swap}, std::pair{"inversion", LvSymmetry::Inversion}}) {
      try {
        SymmetryImage im = apply_symmetry(lp, which);
        sym[name] = {{"params", {{"a", im.params.a.str()}, {"b", im.params.b.str()}, {"c", im.params.c.str()}}},
                     {"Z", im.Z.str()},
                     {"W", im.W.str()},
                     {"verified", symmetry_holds(lp, im)}};
      } catch (const std::invalid_argument& e) {
        sym[name] = {{"error", e.what()}};
      }
    }
    doc["symmetries"] = sym;
    return cl.kind == LvClassification::Kind::Inconclusive ? kInconclusive : kOk;
  }

  ParsedSystem ps = load_system(c);
  doc["system"] = system_json(ps);

  if (c.command == "mul") {
    if (c.at.empty()) throw UsageError("mul needs --at");
    MultiplicityResult m = multiplicity_at(ps.sys, parse_point(c.at), caps);
    doc["result"] = to_json(m);
    return m.kind == MultiplicityResult::Kind::Capped ? kInconclusive : kOk;
  }
  if (c.command == "bound") {
    std::optional<BoundReport> rep;
    if (!c.line.empty()) {
      auto l = rational_list(c.line, 3, "--line");
      rep = line_degree_bound(ps.sys, l[0], l[1], l[2], caps);
    } else {
      LineScan scan;
      if (ps.source.form != SystemSource::Form::AxisForm) {
        scan = detect_invariant_lines(ps.sys, caps);
        doc["lines"] = to_json(scan);
      }
      rep = default_bound(ps, &scan, caps);
      if (!rep) throw UsageError("no rational invariant line found; pass --line a,b,c");
    }
    doc["result"] = to_json(*rep);
    return rep->inconclusive ? kInconclusive : kOk;
  }
  if (c.command == "darboux") {
    DarbouxSearch s = search_darboux(ps.sys, c.max_degree, caps);
    doc["max_degree"] = c.max_degree;
    doc["result"] = to_json(s);
    return (s.partial || presumed_anywhere(s)) ? kInconclusive : kOk;
  }
  if (c.command == "analyze") {
    int code = kOk;
    LineScan scan = detect_invariant_lines(ps.sys, caps);
    doc["lines"] = to_json(scan);
    if (!c.at.empty()) {
      MultiplicityResult m = multiplicity_at(ps.sys, parse_point(c.at), caps);
      doc["multiplicity"] = to_json(m);
      if (m.kind == MultiplicityResult::Kind::Capped) code = kInconclusive;
    }
    Json bounds = Json::array();
    if (ps.source.form == SystemSource::Form::AxisForm) {
      BoundReport r = axis_degree_bound(ps.sys, caps);
      if (r.inconclusive) code = kInconclusive;
      bounds.push_back(to_json(r));
    }
    for (const auto& l : scan.lines) {
      if (l.tower) continue;
      BoundReport r = line_degree_bound(ps.sys, l.u.rational(), l.v.rational(), l.t.rational(), caps);
      if (r.inconclusive) code = kInconclusive;
      bounds.push_back(to_json(r));
    }
    doc["bounds"] = bounds;
    DarbouxSearch s = search_darboux(ps.sys, c.max_degree, caps);
    doc["max_degree"] = c.max_degree;
    doc["darboux"] = to_json(s);
    if (s.partial || presumed_anywhere(s)) code = kInconclusive;
    return code;
  }
  throw UsageError("unknown command: " + c.command);
}

}  // namespace

int run(const CliConfig& config, std::ostream& out) {
  ReportFormat fmt = config.json ? ReportFormat::Json : ReportFormat::Text;
  Json doc;
  int code = kOk;
  try {
    Caps caps = Caps::from_env();
    if (!config.caps.empty()) caps.apply(config.caps);
    if (config.threads > 1) caps.threads = config.threads;
    code = dispatch(config, caps, doc);
    doc["exit_code"] = code;
  } catch (const ParseError& e) {
    doc["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line}, {"column", e.column}};
    code = kParseError;
  } catch (const std::exception& e) {
    doc["error"] = {{"kind", "failure"}, {"message", e.what()}};
    code = kFailure;
  }
  out << emit_report(doc, fmt);
  return code;
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"pbound: algebraic multiplicities and invariant curve degree bounds"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool needs_system) {
    if (needs_system) {
      auto* s = sub->add_option("--system,-s", cfg.system_text, "system text");
      auto* f = sub->add_option("--file,-f", cfg.file, "file holding the system");
      s->excludes(f);
    }
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--caps", cfg.caps, "cap overrides, e.g. depth=32,tower=16");
    sub->add_option("--threads", cfg.threads, "worker threads for independent points");
  };
  auto* mul = app.add_subcommand("mul", "algebraic multiplicity at a point");
  common(mul, true);
  mul->add_option("--at", cfg.at, "z0,w0 or z0,inf")->required();
  auto* bound = app.add_subcommand("bound", "degree bound for invariant curves");
  common(bound, true);
  bound->add_option("--line", cfg.line, "invariant line a z + b w + c = 0 as a,b,c");
  auto* darb = app.add_subcommand("darboux", "search for Darboux polynomials");
  common(darb, true);
  darb->add_option("--max-degree", cfg.max_degree, "largest total degree")->check(CLI::PositiveNumber);
  auto* lv = app.add_subcommand("lv", "Lotka-Volterra classification");
  common(lv, false);
  lv->add_option("--params", cfg.params, "a,b,c")->required();
  auto* an = app.add_subcommand("analyze", "lines, bounds and Darboux search");
  common(an, true);
  an->add_option("--at", cfg.at, "also compute the multiplicity at z0,w0");
  an->add_option("--max-degree", cfg.max_degree, "largest total degree for the search")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? kOk : kParseError;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  return run(cfg, out);
}

}  // namespace pbound
