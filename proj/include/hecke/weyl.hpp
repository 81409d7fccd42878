#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Element of the finite Weyl group of type B_n as a signed permutation of
/// {1..n}: win[i-1] = w(i), with w(-i) = -w(i) implied. Generators: s_0
/// negates position 1, s_i (i>=1) swaps positions i and i+1.
class WeylElem {
 public:
  WeylElem() = default;
  static WeylElem identity(int n);
  static WeylElem gen(int n, int i);
  static WeylElem from_word(int n, const std::vector<int>& word);
  static WeylElem from_window(std::vector<int> win);

  int n() const { return (int)win_.size(); }
  /// w(i) for i in {±1..±n}.
  int map(int i) const;
  const std::vector<int>& window() const { return win_; }

  bool is_identity() const;
  WeylElem operator*(const WeylElem& o) const;  // (u*v)(i) = u(v(i))
  WeylElem inverse() const;
  auto operator<=>(const WeylElem& o) const = default;

  /// Right descent: length(w s_i) < length(w).
  bool right_descent(int i) const;
  bool left_descent(int i) const;

  WeylElem mul_gen_right(int i) const;  // w * s_i
  WeylElem mul_gen_left(int i) const;   // s_i * w

  int length() const;
  /// Canonical reduced word: repeatedly peel the smallest right descent.
  std::vector<int> reduced_word() const;

  std::string str() const;       // window, e.g. "[-1,2]"
  std::string word_str() const;  // reduced word, e.g. "[1,0,1]"

 private:
  std::vector<int> win_;
};

/// Parabolic shape (m_0; m_1,...,m_l): m_0 >= 0 is the size of the type-B
/// block (generators s_0..s_{m_0-1}); each m_i >= 1 contributes a type-A
/// block. has_b distinguishes (0; m_1,...) from pure type-A shapes.
struct ParabolicShape {
  bool has_b = true;
  int m0 = 0;
  std::vector<int> parts;

  int total() const;
  /// Generator subset I of {0..n-1} described by this shape.
  std::vector<int> gens() const;
  static ParabolicShape from_gens(int n, const std::vector<int>& I, bool has_b);
  std::string str() const;
};

// Group enumeration (bounded; the workbench needs n <= 4, hard cap below).
inline constexpr int kMaxWeylRank = 5;
std::vector<WeylElem> enumerate_group(int n);
std::vector<WeylElem> enumerate_parabolic(int n, const std::vector<int>& I);

enum class CosetSide { Left, Right };

/// Minimal-length coset representatives of W_I in W_n, ordered by
/// (length, lex on canonical reduced word). Left side: reps of cosets xW_I.
std::vector<WeylElem> min_coset_reps(int n, const std::vector<int>& I, CosetSide side);
/// Same, but inside the parabolic subgroup W_J (I must be a subset of J).
std::vector<WeylElem> min_coset_reps_in(const std::vector<WeylElem>& WJ,
                                        const std::vector<int>& I, CosetSide side);

/// Distinguished (W_I, W_J)-double coset representatives D_{I,J} = D_I^{-1} ∩ D_J.
std::vector<WeylElem> double_coset_reps(int n, const std::vector<int>& I,
                                        const std::vector<int>& J);

WeylElem longest_element(int n);
WeylElem longest_element_parabolic(int n, const std::vector<int>& I);
/// Longest element of D_{I,I}; an involution with d W_I d = W_I.
WeylElem longest_double_rep(int n, const std::vector<int>& I);

/// w = d * u with d in D_I (left reps), u in W_I, lengths additive.
std::pair<WeylElem, WeylElem> parabolic_decompose(const WeylElem& w,
                                                  const std::vector<int>& I);

/// Action of w on a lattice exponent vector. lat_min = 0 when slot 0 is X_0
/// (full lattice: s_0 maps (c0,c1,..) to (c0, c0-c1, ..)); lat_min = 1 when
/// the lattice starts at X_1 (s_0 negates the X_1 exponent).
Weight act_on_weight(const WeylElem& w, const Weight& c, int lat_min);

/// If x^{-1} s_i x is again a generator s_j, returns j, else -1.
int conjugate_generator(const WeylElem& x, int i);

/// Subset {i in I : x^{-1} s_i x in W_J} (the paper's I ∩ xJ when x is a
/// distinguished double coset representative).
std::vector<int> cap_subset(const WeylElem& x, const std::vector<int>& I,
                            const std::vector<int>& J, int n);

}  // namespace hecke
