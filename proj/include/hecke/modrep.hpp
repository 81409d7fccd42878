#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/desc.hpp"
#include "hecke/matrix.hpp"
#include "hecke/normal_form.hpp"

namespace hecke {

inline constexpr uint64_t kDefaultSeed = 0xB00B5;

/// Finite-dimensional module given by one exact matrix per generator
/// (column-vector convention: g acts as v -> mat(g) v).
class ModuleRep {
 public:
  ModuleRep() : dim_(0) {}
  ModuleRep(AlgebraDesc desc, int dim) : desc_(std::move(desc)), dim_(dim) {}

  const AlgebraDesc& desc() const { return desc_; }
  int dim() const { return dim_; }

  void set_T(int i, Mat m);
  void set_X(int j, Mat m);
  const Mat& mat_T(int i) const;
  const Mat& mat_X(int j) const;
  const std::map<std::string, Mat>& mats() const { return mats_; }
  void set_mat(const std::string& name, Mat m);

  /// All generator matrices in a fixed order (T's then X's).
  std::vector<std::pair<std::string, Mat>> generators() const;

  /// Per-slot candidate eigenvalues for the lattice generators; propagated
  /// through every construction so characters never need root extraction.
  const std::optional<std::vector<std::vector<Scalar>>>& slot_hints() const {
    return slot_hints_;
  }
  void set_slot_hints(std::vector<std::vector<Scalar>> h);
  void clear_slot_hints() { slot_hints_.reset(); }

 private:
  AlgebraDesc desc_;
  int dim_;
  std::map<std::string, Mat> mats_;
  std::optional<std::vector<std::vector<Scalar>>> slot_hints_;
};

/// Invariant subspace, canonically echelonized (columns).
struct Submodule {
  Mat basis;
  int dim() const { return basis.cols(); }
};

RelationReport verify_module(const ModuleRep& M);

Mat apply_poly(const ModuleRep& M, const LaurentPoly& f);
Mat apply_word(const ModuleRep& M, const WeylElem& w);
Mat apply_nf(const ModuleRep& M, const NormalFormElem& h);

ModuleRep outer_tensor(const ModuleRep& M, const ModuleRep& N);
ModuleRep tau_dual(const ModuleRep& M);
ModuleRep sigma_twist(const ModuleRep& M);
ModuleRep psi_twist(const ModuleRep& M);
/// Pullback along T_w -> T_{x^{-1} w x}, X_j -> X_{x^{-1}(j)}: from a module
/// over H_{x^{-1}I ∩ J} to one over the target descriptor H_{I ∩ xJ}.
ModuleRep coset_twist(const ModuleRep& N, const WeylElem& x, const AlgebraDesc& tgt);

/// Smallest invariant subspace containing the seed vectors.
Submodule spin(const ModuleRep& M, const std::vector<Mat>& seeds);
ModuleRep restrict_to_submodule(const ModuleRep& M, const Mat& basis);
ModuleRep quotient(const ModuleRep& M, const Mat& sub_basis);

/// Basis of all module maps M -> N (same descriptor), as dimN x dimM mats.
std::vector<Mat> hom_space(const ModuleRep& M, const ModuleRep& N);
bool is_isomorphic(const ModuleRep& M, const ModuleRep& N,
                   uint64_t seed = kDefaultSeed);

/// One simultaneous generalized eigenspace of the lattice generators.
struct SpectrumPart {
  std::vector<Scalar> tuple;
  Mat generalized;  // columns: basis of the generalized eigenspace
};
/// Full decomposition; throws if the candidate eigenvalues do not exhaust
/// the space ("non-rational eigenvalue encountered").
std::vector<SpectrumPart> simultaneous_spectrum(const ModuleRep& M);
/// True simultaneous eigenspace for the given tuple.
Mat true_eigenspace(const ModuleRep& M, const std::vector<Scalar>& tuple);

/// Largest Jordan block of X_j at eigenvalue a (0 if a is not an eigenvalue).
int jordan_max_block(const ModuleRep& M, int j, const Scalar& a);

struct IrredDecision {
  enum class Kind { Irreducible, Reducible, Unknown };
  Kind kind = Kind::Unknown;
  Mat submodule;  // proper invariant subspace when Reducible
  std::string note;
};
IrredDecision irreducible_or_submodule(const ModuleRep& M,
                                       uint64_t seed = kDefaultSeed);
/// Authoritative test; throws with diagnostics if no usable Norton element
/// is found after the configured retries.
bool is_irreducible(const ModuleRep& M, uint64_t seed = kDefaultSeed);

std::vector<ModuleRep> composition_factors(const ModuleRep& M,
                                           uint64_t seed = kDefaultSeed);

/// Hom(S, M) for irreducible S, via the cyclic-generator graph-spin (fast
/// path used by socle and isomorphism bookkeeping).
std::vector<Mat> hom_from_irreducible(const ModuleRep& S, const ModuleRep& M);
bool irreducibles_isomorphic(const ModuleRep& S1, const ModuleRep& S2);

struct SocleResult {
  Mat subspace;                  // echelonized basis of soc M
  std::vector<Mat> piece_bases;  // direct summands (bases in M)
  std::vector<ModuleRep> pieces;
};
SocleResult socle(const ModuleRep& M, uint64_t seed = kDefaultSeed);
/// Cosocle realized as quotient matrices (via soc of the tau-dual).
ModuleRep cosocle(const ModuleRep& M, uint64_t seed = kDefaultSeed);
std::vector<ModuleRep> cosocle_constituents(const ModuleRep& M,
                                            uint64_t seed = kDefaultSeed);

}  // namespace hecke
