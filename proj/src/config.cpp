#include "brpic/config.hpp"

#include <cstdlib>
#include <string>

namespace brpic {

namespace {

Caps initial_caps() {
  Caps c;
  if (const char* env = std::getenv("BRPIC_MAX_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) {
        c.analysis_order = v;
        c.bimodule_order = v;
        c.catalog_order = std::max(c.catalog_order, v);
        c.product_order = std::max(c.product_order, v * v);
      }
    } catch (const std::exception&) {
      // Unparseable override: keep the defaults.
    }
  }
  return c;
}

Caps& mutable_caps() {
  static Caps c = initial_caps();
  return c;
}

}  // namespace

const Caps& caps() { return mutable_caps(); }

void set_caps(const Caps& c) { mutable_caps() = c; }

}  // namespace brpic
