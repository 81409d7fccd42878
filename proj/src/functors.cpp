#include "hecke/functors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

ModuleRep zero_module(const AlgebraDesc& d) {
  ModuleRep M(d, 0);
  for (int i : d.tgens) M.set_T(i, Mat(0, 0));
  for (int j = d.lat_min(); j <= d.n; ++j) M.set_X(j, Mat(0, 0));
  return M;
}

ModuleRep one_dim(const AlgebraDesc& d, const std::vector<Scalar>& xvals,
                  const std::map<int, Scalar>& tvals) {
  if ((int)xvals.size() != d.rank()) throw std::runtime_error("one_dim: rank mismatch");
  ModuleRep M(d, 1);
  for (int j = d.lat_min(); j <= d.n; ++j) {
    Mat m(1, 1);
    m.at(0, 0) = xvals[d.slot_of(j)];
    M.set_X(j, m);
  }
  for (int i : d.tgens) {
    Mat m(1, 1);
    m.at(0, 0) = tvals.at(i);
    M.set_T(i, m);
  }
  std::vector<std::vector<Scalar>> hints;
  for (auto& v : xvals) hints.push_back({v});
  M.set_slot_hints(std::move(hints));
  return M;
}

ModuleRep induce(const ModuleRep& M, const AlgebraDesc& tgt) {
  const AlgebraDesc& src = M.desc();
  if (!src.sub_desc_of(tgt)) throw std::runtime_error("induce: shape mismatch");
  auto WJ = enumerate_parabolic(tgt.n, tgt.tgens);
  auto reps = min_coset_reps_in(WJ, src.tgens, CosetSide::Left);
  std::map<WeylElem, int> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = (int)i;

  int dim = (int)reps.size() * M.dim();
  ModuleRep R(tgt, dim);
  auto act = [&](const NormalFormElem& g) {
    Mat big(dim, dim);
    for (size_t xi = 0; xi < reps.size(); ++xi) {
      NormalFormElem tx = NormalFormElem::term(
          tgt, reps[xi], LaurentPoly::constant(tgt.rank(), Scalar(1)));
      NormalFormElem prod = g * tx;
      for (auto& [w, f] : prod.terms()) {
        auto [dpart, upart] = parabolic_decompose(w, src.tgens);
        auto it = rep_index.find(dpart);
        if (it == rep_index.end())
          throw std::runtime_error("induce: coset factor outside representative set");
        Mat blk = apply_word(M, upart) * apply_poly(M, f);
        int r0 = it->second * M.dim(), c0 = (int)xi * M.dim();
        for (int r = 0; r < M.dim(); ++r)
          for (int c = 0; c < M.dim(); ++c)
            if (!blk.at(r, c).is_zero()) big.at(r0 + r, c0 + c) += blk.at(r, c);
      }
    }
    return big;
  };
  for (int i : tgt.tgens) R.set_T(i, act(NormalFormElem::gen_T(tgt, i)));
  for (int j = tgt.lat_min(); j <= tgt.n; ++j)
    R.set_X(j, act(NormalFormElem::gen_X(tgt, j)));

  // Candidate eigenvalues for the induced module, from the exact induced
  // character of the source character.
  FormalCharacter pred =
      induced_character(character(M), tgt.fam, tgt.n, src.tgens, tgt.tgens);
  std::vector<std::vector<Scalar>> hints(tgt.rank());
  for (auto& [tu, m] : pred.entries)
    for (int s = 0; s < tgt.rank(); ++s) hints[s].push_back(tu[s]);
  R.set_slot_hints(std::move(hints));
  return R;
}

ModuleRep restrict_mod(const ModuleRep& M, const AlgebraDesc& tgt) {
  const AlgebraDesc& src = M.desc();
  if (tgt.n > src.n || !tgt.same_parameters(src))
    throw std::runtime_error("restrict_mod: not a subalgebra");
  if (src.fam == Family::R && tgt.fam == Family::B)
    throw std::runtime_error("restrict_mod: target has X_0 but source does not");
  for (int i : tgt.tgens)
    if (!src.has_tgen(i)) throw std::runtime_error("restrict_mod: missing T generator");
  ModuleRep R(tgt, M.dim());
  for (int i : tgt.tgens) R.set_T(i, M.mat_T(i));
  for (int j = tgt.lat_min(); j <= tgt.n; ++j) R.set_X(j, M.mat_X(j));
  if (M.slot_hints()) {
    std::vector<std::vector<Scalar>> h;
    for (int j = tgt.lat_min(); j <= tgt.n; ++j)
      h.push_back((*M.slot_hints())[src.slot_of(j)]);
    R.set_slot_hints(std::move(h));
  }
  return R;
}

ModuleRep delta(const ModuleRep& M, const Scalar& a, int m) {
  const AlgebraDesc& src = M.desc();
  if (m < 0 || m > src.n) throw std::runtime_error("delta: bad tail length");
  if (m == 0) return M;
  int wall = src.n - m;
  std::vector<int> I;
  for (int i : src.tgens)
    if (i != wall) I.push_back(i);
  AlgebraDesc tgt = AlgebraDesc::parabolic(src.fam, src.n, src.p, src.q, I);
  ModuleRep P = restrict_mod(M, tgt);
  Mat B = Mat::identity(M.dim());
  for (int j = src.n - m + 1; j <= src.n; ++j) {
    if (B.cols() == 0) break;
    Mat A = [&] {
      auto S = solve(B, M.mat_X(j) * B);
      if (!S) throw std::runtime_error("delta: subspace not invariant");
      return *S;
    }();
    Mat K = (A - Mat::scalar(B.cols(), a)).pow(B.cols()).kernel();
    B = B * K;
  }
  if (B.cols() == 0) return zero_module(tgt);
  return restrict_to_submodule(P, spin(P, {B}).basis);
}

int eps(const ModuleRep& M, const Scalar& a) {
  if (M.dim() == 0) return 0;
  return eps_char(character(M), M.desc().fam, a);
}

ModuleRep e_lower(const ModuleRep& M, const Scalar& a) {
  const AlgebraDesc& src = M.desc();
  if (src.n < 1) throw std::runtime_error("e_lower: rank 0");
  ModuleRep D = delta(M, a, 1);
  AlgebraDesc tgt = src.fam == Family::B
                        ? (src.n - 1 >= 1 ? AlgebraDesc::full_B(src.n - 1, src.p, src.q)
                                          : AlgebraDesc::lattice_B(0, src.p, src.q))
                        : AlgebraDesc::full_R(src.n - 1, src.p, src.q);
  if (src.is_type_A()) tgt = AlgebraDesc::full_A(src.n - 1, src.p, src.q);
  if (D.dim() == 0) return zero_module(tgt);
  return restrict_mod(D, tgt);
}

ModuleRep f_raise(const ModuleRep& M, const Scalar& a) {
  const AlgebraDesc& src = M.desc();
  AlgebraDesc line = AlgebraDesc::lattice_R(1, src.p, src.q);
  ModuleRep A1 = one_dim(line, {a}, {});
  ModuleRep T = outer_tensor(M, A1);
  AlgebraDesc tgt = src.fam == Family::B ? AlgebraDesc::full_B(src.n + 1, src.p, src.q)
                                         : AlgebraDesc::full_R(src.n + 1, src.p, src.q);
  if (src.is_type_A()) tgt = AlgebraDesc::full_A(src.n + 1, src.p, src.q);
  return induce(T, tgt);
}

ModuleRep crystal_e(const ModuleRep& M, const Scalar& a, uint64_t seed) {
  ModuleRep E = e_lower(M, a);
  if (E.dim() == 0) return E;
  auto s = socle(E, seed);
  return restrict_to_submodule(E, s.subspace);
}

namespace {

SocleResult socle_with_candidates(const ModuleRep& M,
                                  const std::vector<ModuleRep>& candidates) {
  SocleResult res;
  std::vector<ModuleRep> reps;
  for (auto& f : candidates) {
    bool fresh = true;
    for (auto& r : reps)
      if (irreducibles_isomorphic(r, f)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(f);
  }
  EchelonSpace space(M.dim());
  for (auto& S : reps) {
    for (auto& phi : hom_from_irreducible(S, M)) {
      EchelonSpace piece(M.dim());
      for (int c = 0; c < phi.cols(); ++c) piece.insert_col(phi, c);
      if (space.contains_space(piece)) continue;
      for (int c = 0; c < phi.cols(); ++c) space.insert_col(phi, c);
      res.piece_bases.push_back(piece.basis());
    }
  }
  res.subspace = space.basis();
  for (auto& b : res.piece_bases) res.pieces.push_back(restrict_to_submodule(M, b));
  return res;
}

}  // namespace

CrystalResult crystal_f(const ModuleRep& M, const Scalar& a, uint64_t seed) {
  ModuleRep W = f_raise(M, a);
  ModuleRep Wt = tau_dual(W);
  auto factors_t = composition_factors(Wt, seed);
  auto soc_t = socle_with_candidates(Wt, factors_t);

  std::string regime;
  if (a == Scalar(1) || a == Scalar(-1)) {
    bool selfdual = M.dim() > 0 && is_isomorphic(M, tau_dual(M), seed);
    regime = selfdual ? "a in {1,-1}; input tau-self-dual (endomorphism bound <= 2 applies)"
                      : "a in {1,-1}; input not tau-self-dual";
  } else {
    regime = "a not in {1,-1}; cosocle irreducible by the generic theory";
  }

  if (soc_t.subspace.cols() == W.dim()) {
    // Semisimple: constituents are direct summands of W itself.
    std::vector<ModuleRep> factors_w;
    for (auto& f : factors_t) factors_w.push_back(tau_dual(f));
    auto soc_w = socle_with_candidates(W, factors_w);
    if (soc_w.pieces.size() == 1)
      return {CrystalResult::Tag::Irreducible, W, ModuleRep(), regime};
    if (soc_w.pieces.size() == 2 &&
        !irreducibles_isomorphic(soc_w.pieces[0], soc_w.pieces[1]))
      return {CrystalResult::Tag::SplitPair, soc_w.pieces[0], soc_w.pieces[1],
              regime + "; splits into two non-isomorphic irreducibles"};
    return {CrystalResult::Tag::ReducibleCosocle, W, ModuleRep(),
            regime + "; semisimple with " + std::to_string(soc_w.pieces.size()) +
                " constituents"};
  }

  Mat rad = soc_t.subspace.transpose().kernel();
  ModuleRep C = quotient(W, rad);
  std::vector<ModuleRep> cands;
  for (auto& piece : soc_t.pieces) cands.push_back(tau_dual(piece));
  auto soc_c = socle_with_candidates(C, cands);
  if (soc_c.subspace.cols() != C.dim())
    throw std::runtime_error("crystal_f: cosocle not semisimple");
  if (soc_c.pieces.size() == 1)
    return {CrystalResult::Tag::Irreducible, C, ModuleRep(), regime};
  return {CrystalResult::Tag::ReducibleCosocle, C, ModuleRep(),
          regime + "; cosocle has " + std::to_string(soc_c.pieces.size()) +
              " constituents"};
}

ModuleRep principal_series_A(const Scalar& a, int n, const Scalar& p, const Scalar& q) {
  ModuleRep seed = one_dim(AlgebraDesc::lattice_R(n, p, q),
                           std::vector<Scalar>(n, a), {});
  return induce(seed, AlgebraDesc::full_A(n, p, q));
}

ModuleRep induced_principal_B(const Scalar& a0, const Scalar& a, int n,
                              const Scalar& p, const Scalar& q) {
  std::vector<Scalar> xv(n + 1, a);
  xv[0] = a0;
  ModuleRep seed = one_dim(AlgebraDesc::lattice_B(n, p, q), xv, {});
  return induce(seed, AlgebraDesc::full_B(n, p, q));
}

ModuleRep principal_series_B(const Scalar& a0, const Scalar& a, int n,
                             const Scalar& p, const Scalar& q, uint64_t seed) {
  if (a == Scalar(1) || a == Scalar(-1))
    throw std::runtime_error("principal_series_B: a must avoid {1,-1}");
  return cosocle(induced_principal_B(a0, a, n, p, q), seed);
}

CrystalResult build_from_path(const Scalar& a0, const std::vector<Scalar>& path,
                              const Scalar& p, const Scalar& q, uint64_t seed) {
  ModuleRep cur = one_dim(AlgebraDesc::lattice_B(0, p, q), {a0}, {});
  for (size_t step = 0; step < path.size(); ++step) {
    CrystalResult r = crystal_f(cur, path[step], seed);
    if (r.tag != CrystalResult::Tag::Irreducible) {
      r.note += "; stopped at step " + std::to_string(step + 1);
      return r;
    }
    cur = r.a;
  }
  return {CrystalResult::Tag::Irreducible, cur, ModuleRep(), ""};
}

ModuleRep d_twist(const ModuleRep& M) {
  const AlgebraDesc& d = M.desc();
  WeylElem dd = longest_double_rep(d.n, d.tgens);
  return coset_twist(M, dd, d);
}

FormalCharacter mackey_lhs(const ModuleRep& M, const std::vector<int>& I) {
  const AlgebraDesc& src = M.desc();
  AlgebraDesc full = src.fam == Family::B ? AlgebraDesc::full_B(src.n, src.p, src.q)
                                          : AlgebraDesc::full_R(src.n, src.p, src.q);
  AlgebraDesc descI = AlgebraDesc::parabolic(src.fam, src.n, src.p, src.q, I);
  return character(restrict_mod(induce(M, full), descI));
}

FormalCharacter mackey_rhs(const ModuleRep& M, const std::vector<int>& I) {
  const AlgebraDesc& src = M.desc();
  const std::vector<int>& J = src.tgens;
  int n = src.n;
  FormalCharacter acc(src.rank());
  for (auto& x : double_coset_reps(n, I, J)) {
    auto K1 = cap_subset(x, I, J, n);                 // I ∩ xJ
    auto K2 = cap_subset(x.inverse(), J, I, n);       // x^{-1}I ∩ J
    AlgebraDesc dK2 = AlgebraDesc::parabolic(src.fam, n, src.p, src.q, K2);
    AlgebraDesc dK1 = AlgebraDesc::parabolic(src.fam, n, src.p, src.q, K1);
    AlgebraDesc dI = AlgebraDesc::parabolic(src.fam, n, src.p, src.q, I);
    ModuleRep term = induce(coset_twist(restrict_mod(M, dK2), x, dK1), dI);
    acc += character(term);
  }
  return acc;
}

}  // namespace hecke
