#pragma once

#include "hecke/modrep.hpp"

namespace hecke {

/// Outcome of restricting an irreducible H_n-module to H_n^R, following the
/// Z/2Z-graded Clifford theory with grading basis {1, X_0}.
struct CliffordReport {
  Scalar mu;                 // scalar of the central element X_0^2 X_1...X_n
  bool splits = false;
  bool sigma_selfiso = false;
  bool minus_one_present = false;  // -1 among the eigenvalues of X_1..X_n
  ModuleRep restriction;           // res M as an H_n^R-module
  ModuleRep part1, part2;          // the two R-summands when splits
  Mat intertwiner;                 // normalized S with S^2 = 1 (when selfiso)
  std::string note;
};

CliffordReport clifford_restrict(const ModuleRep& M, uint64_t seed = kDefaultSeed);

/// Iterated psi-twists of an H_n^R-module until isomorphic to the start.
std::vector<ModuleRep> psi_orbit(const ModuleRep& N, uint64_t seed = kDefaultSeed);

}  // namespace hecke
