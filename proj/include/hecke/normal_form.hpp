#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/desc.hpp"
#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

/// Algebra element in the basis {T_w X^c}: a finite map from Weyl elements
/// to Laurent polynomials (the polynomial sits to the right of T_w).
class NormalFormElem {
 public:
  explicit NormalFormElem(AlgebraDesc desc) : desc_(std::move(desc)) {}

  static NormalFormElem zero(const AlgebraDesc& d) { return NormalFormElem(d); }
  static NormalFormElem one(const AlgebraDesc& d);
  static NormalFormElem gen_T(const AlgebraDesc& d, int i);
  static NormalFormElem gen_T_inv(const AlgebraDesc& d, int i);
  static NormalFormElem gen_X(const AlgebraDesc& d, int j, int exp = 1);
  static NormalFormElem from_poly(const AlgebraDesc& d, const LaurentPoly& f);
  static NormalFormElem term(const AlgebraDesc& d, const WeylElem& w,
                             const LaurentPoly& f);

  const AlgebraDesc& desc() const { return desc_; }
  const std::map<WeylElem, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const NormalFormElem& o) const;

  void add_term(const WeylElem& w, const LaurentPoly& f);

  NormalFormElem operator+(const NormalFormElem& o) const;
  NormalFormElem operator-(const NormalFormElem& o) const;
  NormalFormElem operator*(const Scalar& c) const;
  /// Exact product, straightened back into the T_w X^c basis.
  NormalFormElem operator*(const NormalFormElem& o) const;

  std::string str() const;

 private:
  AlgebraDesc desc_;
  std::map<WeylElem, LaurentPoly> terms_;
};

/// Straightens the basis-(X^c T_w) product X^c * T_w into T-on-the-left
/// normal form. The leading term is T_w X^{w^{-1} c}; all others have
/// strictly shorter Weyl parts.
NormalFormElem monomial_past_word(const AlgebraDesc& d, const Weight& c,
                                  const WeylElem& w);

struct RelationReport {
  struct Entry {
    std::string name;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
  std::string str() const;
};

/// Evaluates every defining relation of the algebra as a normal-form
/// identity (the difference must straighten to zero).
RelationReport check_defining_relations(const AlgebraDesc& d);

}  // namespace hecke
