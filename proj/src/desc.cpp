#include "hecke/desc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

AlgebraDesc AlgebraDesc::full_B(int n, const Scalar& p, const Scalar& q) {
  AlgebraDesc d{Family::B, n, p, q, {}};
  d.tgens = d.allowed_tgens();
  d.validate();
  return d;
}

AlgebraDesc AlgebraDesc::full_R(int n, const Scalar& p, const Scalar& q) {
  AlgebraDesc d{Family::R, n, p, q, {}};
  d.tgens = d.allowed_tgens();
  d.validate();
  return d;
}

AlgebraDesc AlgebraDesc::full_A(int n, const Scalar& p, const Scalar& q) {
  AlgebraDesc d{Family::R, n, p, q, {}};
  for (int i = 1; i < n; ++i) d.tgens.push_back(i);
  d.validate();
  return d;
}

AlgebraDesc AlgebraDesc::lattice_B(int n, const Scalar& p, const Scalar& q) {
  AlgebraDesc d{Family::B, n, p, q, {}};
  d.validate();
  return d;
}

AlgebraDesc AlgebraDesc::lattice_R(int n, const Scalar& p, const Scalar& q) {
  AlgebraDesc d{Family::R, n, p, q, {}};
  d.validate();
  return d;
}

AlgebraDesc AlgebraDesc::parabolic(Family fam, int n, const Scalar& p, const Scalar& q,
                                   std::vector<int> I) {
  AlgebraDesc d{fam, n, p, q, std::move(I)};
  std::sort(d.tgens.begin(), d.tgens.end());
  for (int i : d.tgens)
    if (i < 0 || i >= n) throw std::runtime_error("AlgebraDesc: bad T index");
  d.validate();
  return d;
}

std::vector<int> AlgebraDesc::allowed_tgens() const {
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) idx.push_back(i);
  return idx;
}

bool AlgebraDesc::has_tgen(int i) const {
  return std::binary_search(tgens.begin(), tgens.end(), i);
}

bool AlgebraDesc::is_full() const { return (int)tgens.size() == n; }

bool AlgebraDesc::is_type_A() const { return fam == Family::R && !has_tgen(0); }

void AlgebraDesc::validate() const {
  if (n < 0) throw std::runtime_error("AlgebraDesc: negative rank");
  for (const Scalar* s : {&p, &q}) {
    if (s->is_zero() || *s == Scalar(1) || *s == Scalar(-1))
      throw std::runtime_error("AlgebraDesc: parameter in {0,1,-1}");
  }
  // Rationals with |v| != 1 are never roots of unity; scan the window anyway.
  for (const Scalar* s : {&p, &q}) {
    Scalar acc(1);
    for (int k = 1; k <= 4 * n + 4; ++k) {
      acc *= *s;
      if (acc == Scalar(1))
        throw std::runtime_error("AlgebraDesc: parameter is a root of unity");
    }
  }
}

std::string AlgebraDesc::variant_str() const {
  if (fam == Family::B) {
    if (is_full() && n >= 1) return "B";
    if (tgens.empty()) return "Lattice";
    return "ParabolicB" + ParabolicShape::from_gens(n, tgens, true).str();
  }
  if (is_full() && n >= 1) return "R";
  if (!has_tgen(0) && (int)tgens.size() == std::max(0, n - 1)) return "A";
  return "ParabolicA" + ParabolicShape::from_gens(n, tgens, false).str();
}

bool AlgebraDesc::operator==(const AlgebraDesc& o) const {
  return fam == o.fam && n == o.n && p == o.p && q == o.q && tgens == o.tgens;
}

bool AlgebraDesc::same_parameters(const AlgebraDesc& o) const {
  return p == o.p && q == o.q;
}

bool AlgebraDesc::sub_desc_of(const AlgebraDesc& o) const {
  if (!(fam == o.fam && n == o.n && same_parameters(o))) return false;
  return std::includes(o.tgens.begin(), o.tgens.end(), tgens.begin(), tgens.end());
}

}  // namespace hecke
