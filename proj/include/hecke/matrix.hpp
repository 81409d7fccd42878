#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Dense matrix of exact rationals, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Mat identity(int n);
  static Mat scalar(int n, const Scalar& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& c) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat transpose() const;
  Mat pow(long e) const;  // e < 0 uses the inverse
  std::optional<Mat> inverse() const;
  bool is_zero() const;
  /// If the matrix is c*I, returns c.
  std::optional<Scalar> scalar_of_identity() const;

  Mat col(int j) const;
  Mat cols_range(int j0, int j1) const;  // [j0, j1)
  static Mat hcat(const Mat& a, const Mat& b);

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  Scalar det() const;
  /// Columns form a basis of the right kernel (canonical: from RREF).
  Mat kernel() const;
  /// Characteristic polynomial coefficients c_0..c_n with p(t) = sum c_k t^k
  /// (monic, c_n = 1), via the Faddeev-LeVerrier recurrence.
  std::vector<Scalar> charpoly() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Solves A x = b exactly; nullopt if inconsistent.
std::optional<Mat> solve(const Mat& A, const Mat& b);

/// Incremental echelonized subspace of F^dim (vectors are columns).
/// Canonical: insertion order does not affect the final basis.
class EchelonSpace {
 public:
  explicit EchelonSpace(int dim) : dim_(dim) {}
  int dim() const { return (int)rows_.size(); }
  int ambient() const { return dim_; }
  /// Returns true if the vector enlarged the space.
  bool insert(const std::vector<Scalar>& v);
  bool insert_col(const Mat& v, int j = 0);
  bool contains(const std::vector<Scalar>& v) const;
  bool contains_space(const EchelonSpace& other) const;
  /// dim x k matrix whose columns are the canonical (RREF) basis.
  Mat basis() const;

 private:
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  void backsubstitute();
  int dim_;
  std::vector<std::vector<Scalar>> rows_;  // echelon rows, pivot-sorted
  std::vector<int> pivots_;
};

/// All rational roots of the polynomial (coefficients c_0..c_d, exact),
/// with multiplicity collapsed; also reports whether the polynomial factors
/// completely over the rationals into linear factors.
struct RationalRoots {
  std::vector<Scalar> roots;
  bool complete = false;
  std::vector<Scalar> leftover;  // non-linear cofactor when !complete
};
RationalRoots rational_roots(std::vector<Scalar> poly);

}  // namespace hecke
