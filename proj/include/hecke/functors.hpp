#pragma once

#include "hecke/characters.hpp"
#include "hecke/modrep.hpp"

namespace hecke {

ModuleRep zero_module(const AlgebraDesc& d);

/// One-dimensional module: xvals by lattice slot, tvals by T-index.
ModuleRep one_dim(const AlgebraDesc& d, const std::vector<Scalar>& xvals,
                  const std::map<int, Scalar>& tvals);

/// Parabolic induction H_I -> H_J along the basis {T_x (x) m : x in D_I^J}.
/// Basis order: coset representative (length, lex) major, module basis minor.
ModuleRep induce(const ModuleRep& M, const AlgebraDesc& tgt);

/// Restriction to a smaller descriptor (same or lower rank, generator subset).
ModuleRep restrict_mod(const ModuleRep& M, const AlgebraDesc& tgt);

/// Simultaneous generalized a-eigenspace of X_{n-m+1}..X_n as a module over
/// the parabolic that drops the wall generator T_{n-m}.
ModuleRep delta(const ModuleRep& M, const Scalar& a, int m);

int eps(const ModuleRep& M, const Scalar& a);

ModuleRep e_lower(const ModuleRep& M, const Scalar& a);
ModuleRep f_raise(const ModuleRep& M, const Scalar& a);

struct CrystalResult {
  enum class Tag { Irreducible, SplitPair, ReducibleCosocle };
  Tag tag = Tag::Irreducible;
  ModuleRep a;  // the module (Irreducible/ReducibleCosocle) or first summand
  ModuleRep b;  // second summand for SplitPair
  std::string note;
  bool is_irreducible_tag() const { return tag == Tag::Irreducible; }
};

/// soc e_a M; the zero module iff eps_a(M) = 0.
ModuleRep crystal_e(const ModuleRep& M, const Scalar& a, uint64_t seed = kDefaultSeed);
/// cosoc f_a M with the eigenvalue +-1 behavior classified, never mislabeled.
CrystalResult crystal_f(const ModuleRep& M, const Scalar& a, uint64_t seed = kDefaultSeed);

/// L^A(a^{(n)}) = ind_{R_n}^{H_n^A} (a^{(n)}) (irreducible, dim n!).
ModuleRep principal_series_A(const Scalar& a, int n, const Scalar& p, const Scalar& q);
/// The full induced module ind_{P_n}^{H_n}(a_0, a^{(n)}).
ModuleRep induced_principal_B(const Scalar& a0, const Scalar& a, int n,
                              const Scalar& p, const Scalar& q);
/// L(a_0, a^{(n)}): its cosocle. Requires a not in {1,-1}.
ModuleRep principal_series_B(const Scalar& a0, const Scalar& a, int n,
                             const Scalar& p, const Scalar& q,
                             uint64_t seed = kDefaultSeed);

/// Iterated crystal_f from the one-dimensional H_0-module (a_0).
CrystalResult build_from_path(const Scalar& a0, const std::vector<Scalar>& path,
                              const Scalar& p, const Scalar& q,
                              uint64_t seed = kDefaultSeed);

/// ^d M for the longest double coset representative of W_I.
ModuleRep d_twist(const ModuleRep& M);

/// Mackey: ch res^n_I ind^n_J M computed on matrices (left) and through the
/// double-coset filtration (right).
FormalCharacter mackey_lhs(const ModuleRep& M, const std::vector<int>& I);
FormalCharacter mackey_rhs(const ModuleRep& M, const std::vector<int>& I);

}  // namespace hecke
