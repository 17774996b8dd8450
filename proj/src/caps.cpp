#include "pbound/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pbound {

void Caps::apply(const std::string& overrides) {
  std::stringstream ss(overrides);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad caps entry: " + item);
    std::string key = item.substr(0, eq);
    long v = 0;
    try {
      v = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad caps value: " + item);
    }
    if (v <= 0) throw std::invalid_argument("caps must be positive: " + item);
    if (key == "depth") {
      depth = static_cast<int>(v);
    } else if (key == "ram") {
      ramification = v;
    } else if (key == "tower") {
      tower = static_cast<int>(v);
    } else if (key == "factor") {
      factor = static_cast<int>(v);
    } else if (key == "terms") {
      display_terms = static_cast<int>(v);
    } else if (key == "threads") {
      threads = static_cast<int>(v);
    } else if (key == "extactic") {
      extactic_dim = static_cast<int>(v);
    } else {
      throw std::invalid_argument("unknown cap: " + key);
    }
  }
}

Caps Caps::from_env() {
  Caps c;
  if (const char* env = std::getenv("PBOUND_CAPS")) c.apply(env);
  return c;
}

}  // namespace pbound
