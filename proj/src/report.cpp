#include "pbound/report.hpp"

#include <sstream>

namespace pbound {

namespace {

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::string kind_name(MultiplicityResult::Kind k) {
  switch (k) {
    case MultiplicityResult::Kind::Finite:
      return "finite";
    case MultiplicityResult::Kind::Critical:
      return "critical";
    case MultiplicityResult::Kind::Capped:
      return "capped";
  }
  return "";
}

}  // namespace

std::string status_of(const MultiplicityResult& m) { return kind_name(m.kind); }

Json to_json(const Tower& t) {
  Json a = Json::array();
  for (const auto& l : tower_levels(t)) {
    a.push_back({{"generator", l->name},
                 {"minimal_polynomial", l->modulus.str(l->name)},
                 {"presumed_irreducible", l->presumed_irreducible}});
  }
  return a;
}

Json to_json(const CriticalWitness& w) {
  Json prefix = Json::array();
  for (const auto& t : w.prefix) prefix.push_back({{"exponent", t.exp.str()}, {"coefficient", t.coeff.str()}});
  return {{"rule", w.rule}, {"lambda", w.lambda.str()}, {"step", w.step}, {"prefix", prefix}};
}

Json to_json(const BranchLeaf& leaf) {
  Json exps = Json::array(), coeffs = Json::array();
  for (const auto& t : leaf.branch.terms) {
    exps.push_back(t.exp.str());
    coeffs.push_back(t.coeff.str());
  }
  Json j = {{"exponents", exps},
            {"coefficients", coeffs},
            {"tower", to_json(leaf.branch.tower)},
            {"conjugacy_degree", leaf.branch.conjugacy},
            {"ramification", leaf.branch.nu},
            {"exact", leaf.branch.exact},
            {"status", to_string(leaf.status)},
            {"fold", leaf.fold}};
  if (leaf.witness) j["witness"] = to_json(*leaf.witness);
  if (!leaf.cap.empty()) j["cap"] = leaf.cap;
  j["flags"] = strings(leaf.flags);
  return j;
}

Json to_json(const MultiplicityResult& m) {
  Json j = {{"point", m.point.str()}, {"status", kind_name(m.kind)}};
  j["mul"] = m.kind == MultiplicityResult::Kind::Finite ? Json(m.count) : Json(nullptr);
  if (m.kind == MultiplicityResult::Kind::Capped) j["mul_lower_bound"] = m.count;
  j["local_system"] = print_system(m.local);
  Json br = Json::array();
  for (const auto& b : m.branches) br.push_back(to_json(b));
  j["branches"] = br;
  j["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
  j["flags"] = strings(m.flags);
  j["diagnostics"] = strings(m.diagnostics);
  return j;
}

Json to_json(const OdeSystem& sys) {
  return {{"text", print_system(sys)}, {"P", sys.P.str()}, {"Q", sys.Q.str()}, {"degree", sys.degree()}};
}

Json to_json(const Line& l) {
  return {{"line", l.poly().str()}, {"tower", to_json(l.tower)}, {"conjugacy_degree", l.conjugacy}, {"strict", l.strict()}};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["axis_system"] = print_system(r.axis);
  j["line"] = r.line ? to_json(*r.line) : Json(nullptr);
  j["swapped"] = r.swapped;
  j["M_axis"] = r.M_axis;
  j["M_line"] = opt(r.M_line);
  j["k"] = r.k;
  Json pts = Json::array();
  for (size_t i = 0; i < r.points.size(); ++i) {
    const auto& m = r.muls[i];
    Json p = {{"point", r.points[i].str()},
              {"weight", r.points[i].weight},
              {"status", kind_name(m.kind)},
              {"mul", m.kind == MultiplicityResult::Kind::Finite ? Json(m.count) : Json(nullptr)},
              {"summand", r.summands[i]}};
    if (m.witness) p["witness"] = to_json(*m.witness);
    pts.push_back(p);
  }
  j["points"] = pts;
  Json summands = Json::array();
  for (int s : r.summands) summands.push_back(s);
  j["bounds"] = {{"sum_bound", opt(r.sum_bound)},
                 {"fallback_bound", opt(r.fallback_bound)},
                 {"line_bound", opt(r.line_bound)},
                 {"lower_bound", opt(r.lower_bound)},
                 {"summands", summands},
                 {"measures", {{"sum_bound", "deg_w"}, {"fallback_bound", "deg_w"}, {"line_bound", "total degree"}}}};
  if (r.blocking) {
    const auto& m = r.muls[*r.blocking];
    j["blocking"] = {{"point", r.points[*r.blocking].str()},
                     {"witness", m.witness ? to_json(*m.witness) : Json(nullptr)}};
  } else {
    j["blocking"] = nullptr;
  }
  j["inconclusive"] = r.inconclusive;
  j["flags"] = strings(r.flags);
  return j;
}

Json to_json(const DarbouxCertificate& c) {
  Json comps = Json::array();
  for (const auto& f : c.constant_components) comps.push_back(f.str());
  return {{"curve", c.f.str()},
          {"degree", c.f.total_degree()},
          {"deg_w", c.f.deg_w()},
          {"cofactor", c.cofactor.str()},
          {"strict", c.strict},
          {"constant_components", comps},
          {"irreducible", c.irreducible},
          {"certified", c.certified}};
}

Json to_json(const DarbouxSearch& s) {
  Json certs = Json::array();
  for (const auto& c : s.certificates) certs.push_back(to_json(c));
  return {{"certificates", certs}, {"partial", s.partial}, {"flags", strings(s.flags)}};
}

Json to_json(const LineScan& s) {
  Json lines = Json::array();
  for (const auto& l : s.lines) lines.push_back(to_json(l));
  return {{"lines", lines}, {"dicritical", s.dicritical}, {"flags", strings(s.flags)}};
}

Json to_json(const Genericity& g) {
  Json cl = Json::array();
  for (const auto& c : g.clauses) {
    cl.push_back({{"clause", c.name}, {"verdict", !c.defined ? "undefined" : (c.ok ? "holds" : "violated")}, {"detail", c.detail}});
  }
  return {{"verdict", g.holds ? "holds" : "violated"}, {"violated", g.violated.empty() ? Json(nullptr) : Json(g.violated)}, {"clauses", cl}};
}

Json to_json(const LvTriple& t) {
  auto one = [](const MultiplicityResult& m) {
    return Json{{"status", kind_name(m.kind)},
                {"mul", m.kind == MultiplicityResult::Kind::Finite ? Json(m.count) : Json(nullptr)},
                {"witness", m.witness ? to_json(*m.witness) : Json(nullptr)}};
  };
  return {{"infinity", one(t.at_infinity)}, {"a", one(t.at_a)}, {"origin", one(t.at_origin)}};
}

Json to_json(const LvClassification& c) {
  Json j = {{"verdict", to_string(c.kind)},
            {"genericity", to_json(c.genericity)},
            {"discriminant", c.discriminant.str()}};
  j["curve"] = c.curve_text.empty() ? Json(nullptr) : Json(c.curve_text);
  j["certificate"] = c.curve ? to_json(*c.curve) : Json(nullptr);
  j["bound"] = c.bound ? to_json(*c.bound) : Json(nullptr);
  j["search_degree"] = c.search ? Json(c.search_degree) : Json(nullptr);
  j["search"] = c.search ? to_json(*c.search) : Json(nullptr);
  j["notes"] = strings(c.notes);
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void outline(const Json& v, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        os << pad << k << ":\n";
        outline(x, indent + 2, os);
      } else if (x.is_structured()) {
        os << pad << k << ": (none)\n";
      } else {
        os << pad << k << ": " << scalar(x) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured() && !x.empty()) {
        os << pad << "-\n";
        outline(x, indent + 2, os);
      } else {
        os << pad << "- " << scalar(x) << "\n";
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string emit_report(const Json& doc, ReportFormat format) {
  if (format == ReportFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  outline(doc, 0, os);
  return os.str();
}

}  // namespace pbound
