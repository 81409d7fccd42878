#pragma once

#include <string>
#include <vector>

#include "hecke/scalar.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

/// Which lattice the algebra carries. B has X_0..X_n; R drops X_0 (this also
/// covers the type-A subalgebra, which is the R-family descriptor whose
/// generator set avoids T_0).
enum class Family { B, R };

/// Descriptor of the ambient algebra: family, rank, deformation parameters
/// and the parabolic generator subset. The full algebras, the lattice
/// subalgebras and all parabolic subalgebras are instances of this.
struct AlgebraDesc {
  Family fam = Family::B;
  int n = 0;
  Scalar p{2};
  Scalar q{3};
  std::vector<int> tgens;  // sorted subset of allowed T-indices

  static AlgebraDesc full_B(int n, const Scalar& p, const Scalar& q);
  static AlgebraDesc full_R(int n, const Scalar& p, const Scalar& q);
  static AlgebraDesc full_A(int n, const Scalar& p, const Scalar& q);
  static AlgebraDesc lattice_B(int n, const Scalar& p, const Scalar& q);  // P_n
  static AlgebraDesc lattice_R(int n, const Scalar& p, const Scalar& q);  // R_n
  static AlgebraDesc parabolic(Family fam, int n, const Scalar& p, const Scalar& q,
                               std::vector<int> I);

  int lat_min() const { return fam == Family::B ? 0 : 1; }
  int rank() const { return fam == Family::B ? n + 1 : n; }
  int slot_of(int j) const { return j - lat_min(); }
  int lattice_index(int slot) const { return slot + lat_min(); }

  /// T-indices the ambient (non-parabolic) algebra would allow.
  std::vector<int> allowed_tgens() const;
  bool has_tgen(int i) const;
  bool is_full() const;
  bool is_type_A() const;  // no T_0 present or possible

  /// The parameter of the quadratic relation for T_i (p for i=0, else q).
  const Scalar& hecke_param(int i) const { return i == 0 ? p : q; }

  /// Checks p,q != 0, +-1 and the no-root-of-unity window p^k, q^k != 1 for
  /// 1 <= k <= 4n+4 (automatic for rationals off the unit circle).
  void validate() const;

  /// Display name: B, R, A, Lattice, ParabolicB(shape), ParabolicA(shape).
  std::string variant_str() const;

  bool operator==(const AlgebraDesc& o) const;
  bool same_parameters(const AlgebraDesc& o) const;
  bool sub_desc_of(const AlgebraDesc& o) const;
};

}  // namespace hecke
