#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hecke {

/// Exact rational number. Always kept in lowest terms with positive
/// denominator (mpq_class canonicalizes). No floating point anywhere.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "num/den" or "num" (e.g. "-5/3").
  static Scalar parse(const std::string& s);

  Scalar operator+(const Scalar& o) const { return raw(mpq_class(v_ + o.v_)); }
  Scalar operator-(const Scalar& o) const { return raw(mpq_class(v_ - o.v_)); }
  Scalar operator-() const { return raw(mpq_class(-v_)); }
  Scalar operator*(const Scalar& o) const { return raw(mpq_class(v_ * o.v_)); }
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

  Scalar inverse() const;
  Scalar pow(long e) const;
  Scalar abs() const { return raw(mpq_class(::abs(v_))); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }
  bool operator<(const Scalar& o) const { return v_ < o.v_; }
  bool operator>(const Scalar& o) const { return v_ > o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// True iff the value is r*r for rational r; if so *root is set to |r|.
  bool rational_sqrt(Scalar* root) const;

  const mpq_class& mpq() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// "num/den", omitting "/den" when den = 1.
  std::string str() const;

 private:
  static Scalar raw(const mpq_class& v) { Scalar s; s.v_ = v; return s; }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hecke
