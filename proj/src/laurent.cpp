#include "hecke/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.e) x = -x;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

LaurentPoly LaurentPoly::constant(int rank, const Scalar& c) {
  LaurentPoly f(rank);
  f.add_term(Weight(rank), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(const Weight& w, const Scalar& c) {
  LaurentPoly f(w.rank());
  f.add_term(w, c);
  return f;
}

void LaurentPoly::add_term(const Weight& w, const Scalar& c) {
  if (w.rank() != rank_) throw std::runtime_error("LaurentPoly: rank mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::runtime_error("LaurentPoly: rank mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r(rank_);
  for (auto& [w1, c1] : terms_)
    for (auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
  LaurentPoly r(rank_);
  if (c.is_zero()) return r;
  for (auto& [w, co] : terms_) r.terms_.emplace(w, co * c);
  return r;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& point) const {
  if ((int)point.size() != rank_)
    throw std::runtime_error("LaurentPoly::eval: point rank mismatch");
  for (auto& x : point)
    if (x.is_zero())
      throw std::runtime_error("LaurentPoly::eval: zero coordinate");
  Scalar acc(0);
  for (auto& [w, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < rank_; ++i)
      if (w.e[i]) t *= point[i].pow(w.e[i]);
    acc += t;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.is_zero()) os << " X" << w.str();
  }
  return os.str();
}

}  // namespace hecke
