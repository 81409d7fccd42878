#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Exponent vector of a Laurent monomial. Slot k is the exponent of the
/// k-th lattice generator of the ambient algebra (X_0 for the full type-B
/// lattice, X_1 when X_0 is absent).
struct Weight {
  std::vector<int> e;

  Weight() = default;
  explicit Weight(int rank) : e(rank, 0) {}
  explicit Weight(std::vector<int> v) : e(std::move(v)) {}
  static Weight unit(int rank, int slot) {
    Weight w(rank);
    w.e[slot] = 1;
    return w;
  }

  int rank() const { return (int)e.size(); }
  bool is_zero() const {
    for (int x : e) if (x) return false;
    return true;
  }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  auto operator<=>(const Weight& o) const = default;
  std::string str() const;
};

/// Sparse Laurent polynomial in the lattice generators; zero coefficients
/// never stored.
class LaurentPoly {
 public:
  LaurentPoly() : rank_(0) {}
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, const Scalar& c);
  static LaurentPoly monomial(const Weight& w, const Scalar& c);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Weight, Scalar>& terms() const { return terms_; }

  void add_term(const Weight& w, const Scalar& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Scalar& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// Exact evaluation at a point with nonzero coordinates.
  Scalar eval(const std::vector<Scalar>& point) const;

  std::string str() const;

 private:
  void check_rank(const LaurentPoly& o) const;
  int rank_;
  std::map<Weight, Scalar> terms_;
};

}  // namespace hecke
