#pragma once

#include <string>
#include <vector>

namespace bergman::verify {

enum class Suite { All, Kernels, Transforms, Norms, Schwarz };

Suite suite_from_name(const std::string& name);
const char* suite_name(Suite s);

/// One named check of the verification suite. `criterion` numbers the
/// acceptance criterion the check belongs to (0 = informational only).
/// `metric` states how `observed` compares against `threshold`.
struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double threshold = 0.0;
  std::string metric;
  std::string note;
};

/// Runs the named suite. tol_scale multiplies plain error tolerances;
/// bound- and ratio-type checks state their own pass rule in `metric`.
/// All randomness is internally seeded, so repeated runs are identical.
std::vector<CheckResult> run_suite(Suite s, double tol_scale = 1.0);

}  // namespace bergman::verify
