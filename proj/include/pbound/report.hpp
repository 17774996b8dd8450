#pragma once

#include <string>

#include <json.hpp>

#include "pbound/bounds.hpp"
#include "pbound/darboux.hpp"
#include "pbound/lotka.hpp"
#include "pbound/sysparse.hpp"

namespace pbound {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Json };

// Field layout is documented in docs/report-schema.md.
Json to_json(const Tower& t);
Json to_json(const BranchLeaf& leaf);
Json to_json(const CriticalWitness& w);
Json to_json(const MultiplicityResult& m);
Json to_json(const BoundReport& r);
Json to_json(const DarbouxCertificate& c);
Json to_json(const DarbouxSearch& s);
Json to_json(const Line& l);
Json to_json(const LineScan& s);
Json to_json(const Genericity& g);
Json to_json(const LvTriple& t);
Json to_json(const LvClassification& c);
Json to_json(const OdeSystem& sys);

std::string status_of(const MultiplicityResult& m);

/// JSON is pretty-printed with two-space indentation; text is an indented outline
/// of the same document.
std::string emit_report(const Json& doc, ReportFormat format);

}  // namespace pbound
