#include <sstream>

#include "doctest.h"
#include "pbound/cli.hpp"
#include "pbound/report.hpp"

using namespace pbound;

namespace {

const char* kFold = "dw/dz = (z^2 + m*w) / (z + w^2); m = 0";
const char* kLv = "dz/dt = z*(z + c*w - 1); dw/dt = w*(b*z + w - a); a=-1; b=5; c=0";

struct Outcome {
  int code;
  std::string text;
  Json doc;
};

Outcome run_json(CliConfig c) {
  c.json = true;
  std::ostringstream os;
  int code = run(c, os);
  return {code, os.str(), Json::parse(os.str())};
}

}  // namespace

TEST_CASE("mul report") {
  CliConfig c;
  c.command = "mul";
  c.system_text = kFold;
  c.at = "0,0";
  Outcome o = run_json(c);
  CHECK(o.code == kOk);
  const Json& r = o.doc["result"];
  CHECK(r["status"] == "finite");
  CHECK(r["mul"] == 3);
  REQUIRE(r["branches"].size() == 2);
  const Json& b0 = r["branches"][0];
  CHECK(b0["exponents"][0] == "1/2");
  CHECK(b0["coefficients"][0] == "t1");
  CHECK(b0["tower"][0]["minimal_polynomial"] == "t1^2+1");
  CHECK(b0["conjugacy_degree"] == 2);
  CHECK(b0.contains("status"));

  c.system_text = "dw/dz = (z^2 + m*w) / (z + w^2); m = 3/2";
  Outcome crit = run_json(c);
  CHECK(crit.doc["result"]["status"] == "critical");
  CHECK(crit.doc["result"]["mul"].is_null());
  CHECK(crit.doc["result"]["witness"]["rule"] == "vertex");
  CHECK(crit.doc["result"]["witness"]["lambda"] == "3/2");
}

TEST_CASE("bound, lv and darboux reports") {
  CliConfig c;
  c.command = "bound";
  c.system_text = kLv;
  c.line = "1,0,0";
  Outcome b = run_json(c);
  CHECK(b.code == kOk);
  const Json& bounds = b.doc["result"]["bounds"];
  CHECK(bounds["line_bound"] == 6);
  CHECK(bounds["fallback_bound"] == 6);
  CHECK(bounds["sum_bound"] == 0);
  CHECK(bounds["summands"] == Json::array({0, 0, 0}));

  CliConfig l;
  l.command = "lv";
  l.params = "-1,0,0";
  Outcome lv = run_json(l);
  CHECK(lv.code == kOk);
  CHECK(lv.doc["classification"]["curve"] == "-(z-1)+w");
  CHECK(lv.doc["classification"]["certificate"]["cofactor"] == "z+w");
  CHECK(lv.doc["symmetries"]["swap"]["verified"] == true);
  CHECK(lv.doc["symmetries"]["inversion"]["verified"] == true);

  CliConfig d;
  d.command = "darboux";
  d.system_text = kLv;
  d.max_degree = 1;
  Outcome dr = run_json(d);
  CHECK(dr.code == kOk);
  CHECK(dr.doc["result"]["certificates"].size() == 3);
}

TEST_CASE("exit codes") {
  CliConfig c;
  c.command = "mul";
  c.system_text = "dw/dz = w / (z";
  c.at = "0,0";
  Outcome p = run_json(c);
  CHECK(p.code == kParseError);
  CHECK(p.doc["error"]["kind"] == "parse");
  CHECK(p.doc["error"]["column"] == 13);

  c.system_text = "dw/dz = (z^2 + m*w) / (z + w^2); m = 17/2";
  c.caps = "depth=1";
  CHECK(run_json(c).code == kInconclusive);

  c.caps = "bogus=1";
  CHECK(run_json(c).code == kFailure);

  CliConfig b;
  b.command = "bound";
  b.system_text = kLv;
  b.line = "1,1,0";
  Outcome nl = run_json(b);
  CHECK(nl.code == kFailure);
  CHECK(nl.doc["error"]["message"].get<std::string>().find("not invariant") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  CliConfig c;
  c.command = "analyze";
  c.system_text = kLv;
  c.at = "0,0";
  c.max_degree = 2;
  std::string first = run_json(c).text;
  CHECK(run_json(c).text == first);
  c.threads = 4;
  CHECK(run_json(c).text == first);
  c.json = false;
  std::ostringstream a, b;
  run(c, a);
  c.threads = 1;
  run(c, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("command line parsing") {
  std::vector<std::string> args{"pbound", "mul", "--system", kFold, "--at", "0,0", "--json"};
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  std::ostringstream out, err;
  CHECK(run_main(static_cast<int>(argv.size()), argv.data(), out, err) == kOk);
  CHECK(Json::parse(out.str())["result"]["mul"] == 3);

  std::vector<std::string> bad{"pbound", "mul", "--system", kFold};
  std::vector<char*> bargv;
  for (auto& s : bad) bargv.push_back(s.data());
  std::ostringstream o2, e2;
  CHECK(run_main(static_cast<int>(bargv.size()), bargv.data(), o2, e2) == kParseError);
}
