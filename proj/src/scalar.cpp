#include "hecke/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace hecke {

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw std::runtime_error("Scalar: zero denominator");
  v_.canonicalize();
}

Scalar Scalar::parse(const std::string& s) {
  if (s.empty()) throw std::runtime_error("Scalar::parse: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::runtime_error("Scalar::parse: bad rational '" + s + "'");
  if (v.get_den() == 0) throw std::runtime_error("Scalar::parse: zero denominator");
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::runtime_error("Scalar: division by zero");
  return raw(mpq_class(v_ / o.v_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::runtime_error("Scalar: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return raw(r);
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  Scalar base = e > 0 ? *this : inverse();
  unsigned long k = e > 0 ? e : -e;
  Scalar acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::rational_sqrt(Scalar* root) const {
  if (v_ < 0) return false;
  mpz_class n = v_.get_num(), d = v_.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (root) *root = Scalar(mpq_class(rn, rd));
  return true;
}

std::string Scalar::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hecke
