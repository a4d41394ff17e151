#pragma once

#include <string>
#include <vector>

#include "heckealg/modrep.hpp"

namespace heckealg {

// End-to-end reproduction of the worked n = 4, lambda = (2,2) annihilator:
// the ten closed-form generators printed in cycle notation at v = 1, the
// kernel dimensions in characteristic 0 and 2, and the characteristic-2
// element r that annihilates without lying in the reduced integral span.

struct ExampleGenerator {
  std::string label;       // tableau pair, e.g. "bc"
  std::string printed;     // cycle-notation rendering at v = 1
  bool matches_reference;  // equals the reference expansion as an element
  bool sign_flipped;       // differs by -1 from sharp applied to the whole
                           // cellular element (it then matches the variant
                           // with sharp applied to x_lambda alone)
};

struct ExampleReport {
  int n = 4;
  Partition lambda;
  std::vector<ExampleGenerator> generators;
  long dim_char0 = 0;
  long dim_char2 = 0;
  std::string r_text;
  bool r_annihilates = false;
  bool membership_of_r = true;  // membership of r in the reduced integral span
  std::string witness_char2;    // a kernel element outside that span
  bool ok = false;
};

ExampleReport example_s4_report();

std::string example_text(const ExampleReport& rep);

}  // namespace heckealg
