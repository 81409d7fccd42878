#include "hecke/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

NormalFormElem NormalFormElem::one(const AlgebraDesc& d) {
  NormalFormElem e(d);
  e.add_term(WeylElem::identity(d.n), LaurentPoly::constant(d.rank(), Scalar(1)));
  return e;
}

NormalFormElem NormalFormElem::gen_T(const AlgebraDesc& d, int i) {
  if (i < 0 || i >= d.n) throw std::runtime_error("gen_T: index out of range");
  NormalFormElem e(d);
  e.add_term(WeylElem::gen(d.n, i), LaurentPoly::constant(d.rank(), Scalar(1)));
  return e;
}

NormalFormElem NormalFormElem::gen_T_inv(const AlgebraDesc& d, int i) {
  // T_i^{-1} = T_i - (q_i - q_i^{-1})
  const Scalar& qi = d.hecke_param(i);
  NormalFormElem e = gen_T(d, i);
  e.add_term(WeylElem::identity(d.n),
             LaurentPoly::constant(d.rank(), -(qi - qi.inverse())));
  return e;
}

NormalFormElem NormalFormElem::gen_X(const AlgebraDesc& d, int j, int exp) {
  if (j < d.lat_min() || j > d.n) throw std::runtime_error("gen_X: index out of range");
  Weight w(d.rank());
  w.e[d.slot_of(j)] = exp;
  NormalFormElem e(d);
  e.add_term(WeylElem::identity(d.n), LaurentPoly::monomial(w, Scalar(1)));
  return e;
}

NormalFormElem NormalFormElem::from_poly(const AlgebraDesc& d, const LaurentPoly& f) {
  NormalFormElem e(d);
  e.add_term(WeylElem::identity(d.n), f);
  return e;
}

NormalFormElem NormalFormElem::term(const AlgebraDesc& d, const WeylElem& w,
                                    const LaurentPoly& f) {
  NormalFormElem e(d);
  e.add_term(w, f);
  return e;
}

bool NormalFormElem::operator==(const NormalFormElem& o) const {
  return desc_ == o.desc_ && terms_ == o.terms_;
}

void NormalFormElem::add_term(const WeylElem& w, const LaurentPoly& f) {
  if (f.rank() != desc_.rank())
    throw std::runtime_error("NormalFormElem: poly rank mismatch");
  if (f.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalFormElem NormalFormElem::operator+(const NormalFormElem& o) const {
  if (!(desc_ == o.desc_)) throw std::runtime_error("NormalFormElem: desc mismatch");
  NormalFormElem r = *this;
  for (auto& [w, f] : o.terms_) r.add_term(w, f);
  return r;
}

NormalFormElem NormalFormElem::operator-(const NormalFormElem& o) const {
  if (!(desc_ == o.desc_)) throw std::runtime_error("NormalFormElem: desc mismatch");
  NormalFormElem r = *this;
  for (auto& [w, f] : o.terms_) r.add_term(w, -f);
  return r;
}

NormalFormElem NormalFormElem::operator*(const Scalar& c) const {
  NormalFormElem r(desc_);
  if (c.is_zero()) return r;
  for (auto& [w, f] : terms_) r.add_term(w, f * c);
  return r;
}

namespace {

struct CrossPair {
  LaurentPoly keep;  // coefficient of T_i
  LaurentPoly drop;  // terms without T_i
};

// X^c T_i = T_i * keep + drop, by peeling one variable power at a time.
CrossPair cross_mono(const AlgebraDesc& d, const Weight& c, int i) {
  const int rank = d.rank();
  int a = -1, s = 0;  // lattice index and sign to peel
  if (i == 0) {
    if (d.fam == Family::B && c.e[d.slot_of(0)] != 0) {
      a = 0;
      s = c.e[d.slot_of(0)] > 0 ? 1 : -1;
    } else if (c.e[d.slot_of(1)] != 0) {
      a = 1;
      s = c.e[d.slot_of(1)] > 0 ? 1 : -1;
    }
  } else {
    if (c.e[d.slot_of(i)] != 0) {
      a = i;
      s = c.e[d.slot_of(i)] > 0 ? 1 : -1;
    } else if (c.e[d.slot_of(i + 1)] != 0) {
      a = i + 1;
      s = c.e[d.slot_of(i + 1)] > 0 ? 1 : -1;
    }
  }
  if (a < 0) {
    // relation (7): the monomial commutes with T_i
    return {LaurentPoly::monomial(c, Scalar(1)), LaurentPoly(rank)};
  }

  const Scalar& par = d.hecke_param(i);
  Scalar dd = par - par.inverse();
  auto unit = [&](int j) { return Weight::unit(rank, d.slot_of(j)); };

  Weight m(rank);
  LaurentPoly g(rank);
  if (i >= 1) {
    if (a == i && s > 0) {  // X_i T_i = T_i X_{i+1} - dd X_{i+1}
      m = unit(i + 1);
      g.add_term(unit(i + 1), -dd);
    } else if (a == i + 1 && s > 0) {  // X_{i+1} T_i = T_i X_i + dd X_{i+1}
      m = unit(i);
      g.add_term(unit(i + 1), dd);
    } else if (a == i && s < 0) {  // X_i^{-1} T_i = T_i X_{i+1}^{-1} + dd X_i^{-1}
      m = -unit(i + 1);
      g.add_term(-unit(i), dd);
    } else {  // X_{i+1}^{-1} T_i = T_i X_i^{-1} - dd X_i^{-1}
      m = -unit(i);
      g.add_term(-unit(i), -dd);
    }
  } else {
    if (a == 0 && s > 0) {  // X_0 T_0 = T_0 X_0 X_1 - dd X_0 X_1
      m = unit(0) + unit(1);
      g.add_term(unit(0) + unit(1), -dd);
    } else if (a == 0 && s < 0) {  // X_0^{-1} T_0 = T_0 X_0^{-1} X_1^{-1} + dd X_0^{-1}
      m = -(unit(0) + unit(1));
      g.add_term(-unit(0), dd);
    } else if (a == 1 && s > 0) {  // X_1 T_0 = T_0 X_1^{-1} + dd (X_1 + 1)
      m = -unit(1);
      g.add_term(unit(1), dd);
      g.add_term(Weight(rank), dd);
    } else {  // X_1^{-1} T_0 = T_0 X_1 - dd (X_1 + 1)
      m = unit(1);
      g.add_term(unit(1), -dd);
      g.add_term(Weight(rank), -dd);
    }
  }

  Weight rest = c;
  rest.e[d.slot_of(a)] -= s;
  CrossPair sub = cross_mono(d, rest, i);
  LaurentPoly mono_m = LaurentPoly::monomial(m, Scalar(1));
  LaurentPoly mono_rest = LaurentPoly::monomial(rest, Scalar(1));
  return {sub.keep * mono_m, sub.drop * mono_m + mono_rest * g};
}

CrossPair cross_poly(const AlgebraDesc& d, const LaurentPoly& f, int i) {
  CrossPair acc{LaurentPoly(d.rank()), LaurentPoly(d.rank())};
  for (auto& [w, c] : f.terms()) {
    CrossPair one = cross_mono(d, w, i);
    acc.keep += one.keep * c;
    acc.drop += one.drop * c;
  }
  return acc;
}

// nf * T_i
NormalFormElem times_gen(const NormalFormElem& nf, int i) {
  const AlgebraDesc& d = nf.desc();
  const Scalar& par = d.hecke_param(i);
  Scalar dd = par - par.inverse();
  NormalFormElem r(d);
  for (auto& [w, f] : nf.terms()) {
    CrossPair cp = cross_poly(d, f, i);
    if (!cp.drop.is_zero()) r.add_term(w, cp.drop);
    if (cp.keep.is_zero()) continue;
    WeylElem wsi = w.mul_gen_right(i);
    if (w.right_descent(i)) {
      // T_w T_i = dd T_w + T_{w s_i}
      r.add_term(w, cp.keep * dd);
      r.add_term(wsi, cp.keep);
    } else {
      r.add_term(wsi, cp.keep);
    }
  }
  return r;
}

}  // namespace

NormalFormElem NormalFormElem::operator*(const NormalFormElem& o) const {
  if (!(desc_ == o.desc_)) throw std::runtime_error("NormalFormElem: desc mismatch");
  NormalFormElem result(desc_);
  for (auto& [w2, f2] : o.terms_) {
    NormalFormElem acc = *this;
    for (int letter : w2.reduced_word()) acc = times_gen(acc, letter);
    for (auto& [w, f] : acc.terms_) result.add_term(w, f * f2);
  }
  return result;
}

std::string NormalFormElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "T" << w.word_str() << " * [" << f.str() << "]";
  }
  return os.str();
}

NormalFormElem monomial_past_word(const AlgebraDesc& d, const Weight& c,
                                  const WeylElem& w) {
  NormalFormElem lhs = NormalFormElem::from_poly(d, LaurentPoly::monomial(c, Scalar(1)));
  NormalFormElem rhs =
      NormalFormElem::term(d, w, LaurentPoly::constant(d.rank(), Scalar(1)));
  return lhs * rhs;
}

bool RelationReport::all_pass() const {
  for (auto& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string RelationReport::str() const {
  std::ostringstream os;
  for (auto& e : entries)
    os << (e.pass ? "  ok   " : "  FAIL ") << e.name << "\n";
  return os.str();
}

RelationReport check_defining_relations(const AlgebraDesc& d) {
  RelationReport rep;
  auto add = [&](const std::string& name, const NormalFormElem& diff) {
    rep.entries.push_back({name, diff.is_zero()});
  };
  auto T = [&](int i) { return NormalFormElem::gen_T(d, i); };
  auto X = [&](int j, int e = 1) { return NormalFormElem::gen_X(d, j, e); };
  auto one = NormalFormElem::one(d);
  auto cst = [&](const Scalar& c) { return one * c; };

  for (int i : d.tgens) {
    const Scalar& par = d.hecke_param(i);
    Scalar dd = par - par.inverse();
    std::string nm = i == 0 ? "(1) (T0-p)(T0+1/p)=0" : "(2) (T" + std::to_string(i) +
                                                           "-q)(T" + std::to_string(i) +
                                                           "+1/q)=0";
    add(nm, T(i) * T(i) - T(i) * dd - one);
  }
  for (int i : d.tgens) {
    if (i >= 1 && d.has_tgen(i + 1)) {
      std::string nm = "(3) braid T" + std::to_string(i) + ",T" + std::to_string(i + 1);
      add(nm, T(i) * T(i + 1) * T(i) - T(i + 1) * T(i) * T(i + 1));
    }
  }
  for (int i : d.tgens)
    for (int j : d.tgens)
      if (j > i + 1) {
        std::string nm = "(4) comm T" + std::to_string(i) + ",T" + std::to_string(j);
        add(nm, T(i) * T(j) - T(j) * T(i));
      }
  if (d.has_tgen(0) && d.has_tgen(1))
    add("(5) T1 T0 T1 T0 = T0 T1 T0 T1",
        T(1) * T(0) * T(1) * T(0) - T(0) * T(1) * T(0) * T(1));
  if (d.has_tgen(0)) {
    Scalar pp = d.p - d.p.inverse();
    if (d.fam == Family::B)
      add("(6) T0 X0 T0 = X0 X1", T(0) * X(0) * T(0) - X(0) * X(1));
    // Holds in H_n and is the defining mixed relation of H_n^R.
    add("(6') X1 T0 = T0 X1^-1 + (p-1/p)(X1+1)",
        X(1) * T(0) - T(0) * X(1, -1) - X(1) * pp - cst(pp));
  }
  for (int i : d.tgens) {
    for (int j = d.lat_min(); j <= d.n; ++j) {
      if (j == i || j == i + 1) continue;
      if (i == 0 && j <= 1) continue;
      std::string nm =
          "(7) comm T" + std::to_string(i) + ",X" + std::to_string(j);
      add(nm, T(i) * X(j) - X(j) * T(i));
    }
  }
  for (int i : d.tgens)
    if (i >= 1) {
      std::string nm = "(8) T" + std::to_string(i) + " X" + std::to_string(i) + " T" +
                       std::to_string(i) + " = X" + std::to_string(i + 1);
      add(nm, T(i) * X(i) * T(i) - X(i + 1));
    }
  return rep;
}

}  // namespace hecke
