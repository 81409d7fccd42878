#pragma once

#include <string>
#include <vector>

#include "hecke/modrep.hpp"

namespace hecke {

/// Named carriers of the worked examples (p = 2, q = 3, a_0 = 5, a = 7,
/// c = 11 unless a fixture dictates otherwise). Rebuilding a fixture is
/// byte-deterministic.
std::vector<std::string> fixture_names();
ModuleRep build_fixture(const std::string& name);

}  // namespace hecke
