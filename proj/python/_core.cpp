#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pbound/cli.hpp"
#include "pbound/sysparse.hpp"

namespace py = pybind11;
using namespace pbound;

namespace {

py::tuple call(CliConfig c) {
  c.json = true;
  std::ostringstream os;
  int code;
  {
    py::gil_scoped_release release;
    code = run(c, os);
  }
  return py::make_tuple(code, os.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-returning entry points; see pbound/__init__.py";
  m.def(
      "run_command",
      [](const std::string& command, const std::string& system, const std::string& at, const std::string& line,
         const std::string& params, int max_degree, const std::string& caps, int threads) {
        CliConfig c;
        c.command = command;
        c.system_text = system;
        c.at = at;
        c.line = line;
        c.params = params;
        c.max_degree = max_degree;
        c.caps = caps;
        c.threads = threads;
        return call(c);
      },
      py::arg("command"), py::arg("system") = "", py::arg("at") = "", py::arg("line") = "", py::arg("params") = "",
      py::arg("max_degree") = 2, py::arg("caps") = "", py::arg("threads") = 1);
  m.def("normalize_system", [](const std::string& text) { return print_system(parse_system(text).sys); });
}
