#include "hecke/clifford.hpp"

#include <stdexcept>

#include "hecke/characters.hpp"
#include "hecke/functors.hpp"

namespace hecke {

CliffordReport clifford_restrict(const ModuleRep& M, uint64_t seed) {
  const AlgebraDesc& d = M.desc();
  if (d.fam != Family::B || !d.is_full())
    throw std::runtime_error("clifford_restrict: expects a full H_n module");

  CliffordReport rep;
  Mat z = M.mat_X(0) * M.mat_X(0);
  for (int j = 1; j <= d.n; ++j) z = z * M.mat_X(j);
  auto mu = z.scalar_of_identity();
  if (!mu)
    throw std::runtime_error("clifford_restrict: central element not scalar (reducible input?)");
  rep.mu = *mu;

  FormalCharacter ch = character(M);
  for (auto& [tu, m] : ch.entries)
    for (int i = 1; i <= d.n; ++i)
      if (tu[i] == Scalar(-1)) rep.minus_one_present = true;

  AlgebraDesc rdesc = AlgebraDesc::full_R(d.n, d.p, d.q);
  rep.restriction = restrict_mod(M, rdesc);

  ModuleRep Ms = sigma_twist(M);
  auto homs = hom_space(Ms, M);
  rep.sigma_selfiso = !homs.empty();
  if (!rep.sigma_selfiso) {
    rep.splits = false;
    rep.note = "M not isomorphic to its sigma-twist; restriction stays irreducible";
    return rep;
  }
  if (homs.size() != 1)
    throw std::runtime_error("clifford_restrict: intertwiner space not a line");
  Mat S = homs[0];
  auto c = (S * S).scalar_of_identity();
  if (!c || c->is_zero())
    throw std::runtime_error("clifford_restrict: intertwiner square is not a scalar");
  Scalar root;
  if (!c->rational_sqrt(&root)) {
    rep.splits = false;
    rep.note = "intertwiner normalization needs an irrational square root; "
               "the two summands are not defined over the rationals";
    return rep;
  }
  S = S * root.inverse();
  rep.intertwiner = S;

  // Eigenspaces of the involution S are the two R-summands.
  Mat id = Mat::identity(M.dim());
  Mat plus = (S - id).kernel();
  Mat minus = (S + id).kernel();
  if (plus.cols() == 0 || minus.cols() == 0 || plus.cols() + minus.cols() != M.dim())
    throw std::runtime_error("clifford_restrict: involution eigenspaces degenerate");
  rep.splits = true;
  rep.part1 = restrict_to_submodule(rep.restriction, plus);
  rep.part2 = restrict_to_submodule(rep.restriction, minus);
  rep.note = "restriction splits into two non-isomorphic R-summands";
  return rep;
}

std::vector<ModuleRep> psi_orbit(const ModuleRep& N, uint64_t seed) {
  std::vector<ModuleRep> orbit{N};
  ModuleRep cur = psi_twist(N);
  // The square of psi is inner on H_n^R, so the orbit length divides 2.
  while (!is_isomorphic(cur, N, seed)) {
    orbit.push_back(cur);
    cur = psi_twist(cur);
    if (orbit.size() > 2)
      throw std::runtime_error("psi_orbit: orbit longer than the grading order");
  }
  return orbit;
}

}  // namespace hecke
