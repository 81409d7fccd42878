#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hecke/modrep.hpp"

namespace hecke {

/// Multiset of simultaneous generalized eigenvalue tuples with
/// multiplicities: the class [res M] in K(P_n-mod).
struct FormalCharacter {
  int rank = 0;
  std::map<std::vector<Scalar>, long long> entries;

  FormalCharacter() = default;
  explicit FormalCharacter(int r) : rank(r) {}

  long long total() const;
  void add(const std::vector<Scalar>& tuple, long long mult);
  FormalCharacter& operator+=(const FormalCharacter& o);
  bool operator==(const FormalCharacter& o) const {
    return rank == o.rank && entries == o.entries;
  }
  std::string str() const;
};

/// Exact character from the generator matrices; requires (and checks) that
/// the candidate eigenvalues exhaust the module.
FormalCharacter character(const ModuleRep& M);

/// Character of ind_{H_I}^{H_J} applied to a module with character ch:
/// one summand per distinguished coset representative, acting on tuples
/// through the Weyl action on the lattice. Pure combinatorics.
FormalCharacter induced_character(const FormalCharacter& ch, Family fam, int n,
                                  const std::vector<int>& srcI,
                                  const std::vector<int>& tgtI);

/// The Shuffle Lemma: character of ind(M boxtimes K) for M over H_m
/// (family fam) and K over H_k^A, from the two characters alone.
FormalCharacter shuffle_character(const FormalCharacter& chM, Family fam,
                                  const FormalCharacter& chK);

/// Product character of an outer tensor (concatenated tuples).
FormalCharacter tensor_character(const FormalCharacter& chM,
                                 const FormalCharacter& chK);

struct CentralCharOrbit {
  std::vector<Scalar> rep;  // lexicographically smallest element
  std::set<std::vector<Scalar>> orbit;
};
/// Closure of a tuple under the Weyl-group action on central characters.
CentralCharOrbit central_orbit(const std::vector<Scalar>& a, Family fam);

/// Direct summands of M grouped by generalized central character.
std::vector<ModuleRep> block_decompose(const ModuleRep& M);

bool char_linearly_independent(const std::vector<FormalCharacter>& chars);

/// Longest run of the value a at the tail of the tuple, not counting the
/// X_0 slot; eps_a(M) is the maximum over the character.
int eps_char(const FormalCharacter& ch, Family fam, const Scalar& a);

}  // namespace hecke
