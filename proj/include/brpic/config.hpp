#pragma once

namespace brpic {

/// Size limits for the exact algorithms. All limits are group orders.
struct Caps {
  int analysis_order = 64;   // groups handled by subgroup/automorphism searches
  int product_order = 2048;  // G x G^op and other internal products
  int bimodule_order = 48;   // groups for which bimodule categories are enumerated
  int catalog_order = 48;    // largest BrPic order the identification catalog covers
};

/// Process-wide limits. The first call reads BRPIC_MAX_ORDER from the environment.
const Caps& caps();
void set_caps(const Caps& c);

}  // namespace brpic
