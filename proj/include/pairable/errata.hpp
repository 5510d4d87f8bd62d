#pragma once

// Discrepancy table: closed forms whose stated versions fail their own
// defining equations.  The implementation uses the corrected forms
// throughout; each row records the stated form, the corrected form, a
// concrete counterexample, and the two values it separates.  Values are
// computed live through the library, not hard-coded.

#include <string>
#include <vector>

namespace pairable::errata {

struct ErratumRow {
  std::string id;
  std::string printed_form;    // the form as stated
  std::string corrected_form;  // the form that satisfies the equations
  std::string counterexample;
  double printed_value = 0.0;  // what the stated form yields there
  double oracle_value = 0.0;   // what direct evaluation yields there
};

std::vector<ErratumRow> errata_table();

}  // namespace pairable::errata
