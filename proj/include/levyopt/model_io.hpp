#pragma once

#include <string>

#include "levyopt/levy.hpp"

namespace levyopt {

// JSON model document:
// {
//   "drift": number,
//   "gaussian_var": number >= 0,
//   "jumps": [{"rate": number > 0,
//              "law": {"type": "point"|"exp_up"|"exp_down",
//                      "size"?: number, "alpha"?: number}}],
//   "discount": number > 0
// }
KilledSpec parse_spec_json(const std::string& text);
KilledSpec load_spec_file(const std::string& path);
std::string spec_to_json(const KilledSpec& spec);

} // namespace levyopt
