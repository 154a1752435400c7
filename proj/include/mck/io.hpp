#ifndef MCK_IO_HPP_
#define MCK_IO_HPP_

#include <string>

#include "mck/trig_series.hpp"
#include "mck/verify.hpp"

namespace mck {

// Run configuration: the TOML/JSON coefficient schema
//   {p: {constant, cos: [...], sin: [...]}, q: {...}}
// plus n_max, steps, and the tolerance map. Unknown keys are rejected.
struct RunConfig {
  CoefficientPair<double> psi;
  int n_max = 3;
  int steps = 0;  // 0 = automatic step rule
  int degree_cap = 32;
  ToleranceSet tol;
};

// Loads .toml (native subset: sections, scalars, flat number arrays) or
// .json. Throws std::invalid_argument on schema violations.
RunConfig load_config(const std::string& path);
RunConfig parse_config_toml(const std::string& text);
RunConfig parse_config_json(const std::string& text);

// Locale-independent scientific formatting with 17 significant digits.
std::string format_number(double v);

}  // namespace mck

#endif  // MCK_IO_HPP_
