#pragma once

#include "derivus/system.hpp"

#include <string>

namespace derivus {

// ---------- System files ----------
//
//   # comment
//   constants: a b f
//   predicates: W
//   W a
//   -> W x1 -> W x2 W x1 x2
//
// Symbol headers come first; every remaining nonempty line is one
// basis axiom.

RecursiveSystem parse_system(const std::string& text);
RecursiveSystem load_system_file(const std::string& path);
std::string read_file(const std::string& path);

} // namespace derivus
