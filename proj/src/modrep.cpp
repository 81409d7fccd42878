#include "hecke/modrep.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::string t_name(int i) { return "T" + std::to_string(i); }
std::string x_name(int j) { return "X" + std::to_string(j); }

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = x * b.at(k, l);
    }
  return r;
}

Mat vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::runtime_error("vcat: col mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

/// A with B A = X B (the action of X in the coordinates of the invariant
/// subspace spanned by the columns of B).
Mat restrict_operator(const Mat& B, const Mat& X) {
  auto A = solve(B, X * B);
  if (!A) throw std::runtime_error("restrict_operator: subspace not invariant");
  return *A;
}

}  // namespace

void ModuleRep::set_T(int i, Mat m) { set_mat(t_name(i), std::move(m)); }
void ModuleRep::set_X(int j, Mat m) { set_mat(x_name(j), std::move(m)); }

void ModuleRep::set_mat(const std::string& name, Mat m) {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw std::runtime_error("ModuleRep: matrix shape mismatch for " + name);
  mats_[name] = std::move(m);
}

const Mat& ModuleRep::mat_T(int i) const {
  auto it = mats_.find(t_name(i));
  if (it == mats_.end()) throw std::runtime_error("ModuleRep: missing " + t_name(i));
  return it->second;
}

const Mat& ModuleRep::mat_X(int j) const {
  auto it = mats_.find(x_name(j));
  if (it == mats_.end()) throw std::runtime_error("ModuleRep: missing " + x_name(j));
  return it->second;
}

std::vector<std::pair<std::string, Mat>> ModuleRep::generators() const {
  std::vector<std::pair<std::string, Mat>> out;
  for (int i : desc_.tgens) out.emplace_back(t_name(i), mat_T(i));
  for (int j = desc_.lat_min(); j <= desc_.n; ++j) out.emplace_back(x_name(j), mat_X(j));
  return out;
}

void ModuleRep::set_slot_hints(std::vector<std::vector<Scalar>> h) {
  if ((int)h.size() != desc_.rank())
    throw std::runtime_error("ModuleRep: hint rank mismatch");
  for (auto& s : h) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  slot_hints_ = std::move(h);
}

RelationReport verify_module(const ModuleRep& M) {
  const AlgebraDesc& d = M.desc();
  RelationReport rep;
  auto add = [&](const std::string& name, const Mat& diff) {
    rep.entries.push_back({name, diff.is_zero()});
  };
  const Mat id = Mat::identity(M.dim());

  for (int j = d.lat_min(); j <= d.n; ++j) {
    if (!M.mat_X(j).inverse())
      throw std::runtime_error("verify_module: X" + std::to_string(j) +
                               " not invertible");
  }
  for (int j1 = d.lat_min(); j1 <= d.n; ++j1)
    for (int j2 = j1 + 1; j2 <= d.n; ++j2)
      add("(P) comm X" + std::to_string(j1) + ",X" + std::to_string(j2),
          M.mat_X(j1) * M.mat_X(j2) - M.mat_X(j2) * M.mat_X(j1));

  for (int i : d.tgens) {
    const Scalar& par = d.hecke_param(i);
    Scalar dd = par - par.inverse();
    std::string nm = i == 0 ? "(1) quadratic T0" : "(2) quadratic T" + std::to_string(i);
    add(nm, M.mat_T(i) * M.mat_T(i) - M.mat_T(i) * dd - id);
  }
  for (int i : d.tgens)
    if (i >= 1 && d.has_tgen(i + 1))
      add("(3) braid T" + std::to_string(i) + ",T" + std::to_string(i + 1),
          M.mat_T(i) * M.mat_T(i + 1) * M.mat_T(i) -
              M.mat_T(i + 1) * M.mat_T(i) * M.mat_T(i + 1));
  for (int i : d.tgens)
    for (int j : d.tgens)
      if (j > i + 1)
        add("(4) comm T" + std::to_string(i) + ",T" + std::to_string(j),
            M.mat_T(i) * M.mat_T(j) - M.mat_T(j) * M.mat_T(i));
  if (d.has_tgen(0) && d.has_tgen(1))
    add("(5) T1T0T1T0 = T0T1T0T1",
        M.mat_T(1) * M.mat_T(0) * M.mat_T(1) * M.mat_T(0) -
            M.mat_T(0) * M.mat_T(1) * M.mat_T(0) * M.mat_T(1));
  if (d.has_tgen(0)) {
    if (d.fam == Family::B) {
      add("(6) T0X0T0 = X0X1",
          M.mat_T(0) * M.mat_X(0) * M.mat_T(0) - M.mat_X(0) * M.mat_X(1));
    }
    Scalar pp = d.p - d.p.inverse();
    Mat x1inv = *M.mat_X(1).inverse();
    add("(6') X1T0 = T0X1^-1+(p-1/p)(X1+1)",
        M.mat_X(1) * M.mat_T(0) - M.mat_T(0) * x1inv - (M.mat_X(1) + id) * pp);
  }
  for (int i : d.tgens)
    for (int j = d.lat_min(); j <= d.n; ++j) {
      if (j == i || j == i + 1) continue;
      if (i == 0 && j <= 1) continue;
      add("(7) comm T" + std::to_string(i) + ",X" + std::to_string(j),
          M.mat_T(i) * M.mat_X(j) - M.mat_X(j) * M.mat_T(i));
    }
  for (int i : d.tgens)
    if (i >= 1)
      add("(8) T" + std::to_string(i) + "X" + std::to_string(i) + "T" +
              std::to_string(i) + " = X" + std::to_string(i + 1),
          M.mat_T(i) * M.mat_X(i) * M.mat_T(i) - M.mat_X(i + 1));
  return rep;
}

Mat apply_poly(const ModuleRep& M, const LaurentPoly& f) {
  Mat acc(M.dim(), M.dim());
  for (auto& [w, c] : f.terms()) {
    Mat t = Mat::scalar(M.dim(), c);
    for (int slot = 0; slot < (int)w.e.size(); ++slot)
      if (w.e[slot]) t = t * M.mat_X(M.desc().lattice_index(slot)).pow(w.e[slot]);
    acc = acc + t;
  }
  return acc;
}

Mat apply_word(const ModuleRep& M, const WeylElem& w) {
  Mat acc = Mat::identity(M.dim());
  for (int i : w.reduced_word()) acc = acc * M.mat_T(i);
  return acc;
}

Mat apply_nf(const ModuleRep& M, const NormalFormElem& h) {
  Mat acc(M.dim(), M.dim());
  for (auto& [w, f] : h.terms()) acc = acc + apply_word(M, w) * apply_poly(M, f);
  return acc;
}

ModuleRep outer_tensor(const ModuleRep& M, const ModuleRep& N) {
  const AlgebraDesc& dm = M.desc();
  const AlgebraDesc& dn = N.desc();
  if (!dn.is_type_A())
    throw std::runtime_error("outer_tensor: right factor must be of type A");
  if (!dm.same_parameters(dn)) throw std::runtime_error("outer_tensor: parameter mismatch");
  int n = dm.n + dn.n;
  std::vector<int> I = dm.tgens;
  for (int i : dn.tgens) I.push_back(i + dm.n);
  AlgebraDesc d = AlgebraDesc::parabolic(dm.fam, n, dm.p, dm.q, I);
  ModuleRep R(d, M.dim() * N.dim());
  Mat idm = Mat::identity(M.dim()), idn = Mat::identity(N.dim());
  for (int i : dm.tgens) R.set_T(i, kron(M.mat_T(i), idn));
  for (int i : dn.tgens) R.set_T(i + dm.n, kron(idm, N.mat_T(i)));
  for (int j = dm.lat_min(); j <= dm.n; ++j) R.set_X(j, kron(M.mat_X(j), idn));
  for (int j = 1; j <= dn.n; ++j) R.set_X(j + dm.n, kron(idm, N.mat_X(j)));
  if (M.slot_hints() && N.slot_hints()) {
    auto h = *M.slot_hints();
    for (auto& s : *N.slot_hints()) h.push_back(s);
    R.set_slot_hints(std::move(h));
  }
  return R;
}

ModuleRep tau_dual(const ModuleRep& M) {
  ModuleRep R(M.desc(), M.dim());
  for (auto& [name, m] : M.mats()) R.set_mat(name, m.transpose());
  if (M.slot_hints()) R.set_slot_hints(*M.slot_hints());
  return R;
}

ModuleRep sigma_twist(const ModuleRep& M) {
  if (M.desc().fam != Family::B)
    throw std::runtime_error("sigma_twist: needs X_0");
  ModuleRep R = M;
  R.set_X(0, -M.mat_X(0));
  if (M.slot_hints()) {
    auto h = *M.slot_hints();
    for (auto& v : h[0]) v = -v;
    R.set_slot_hints(std::move(h));
  }
  return R;
}

ModuleRep psi_twist(const ModuleRep& M) {
  const AlgebraDesc& d = M.desc();
  if (d.fam != Family::R || !d.has_tgen(0))
    throw std::runtime_error("psi_twist: expects an H_n^R module");
  // psi(T_0) = X_1 T_0^{-1}; psi fixes the other generators of H_n^R.
  ModuleRep R = M;
  Scalar pp = d.p - d.p.inverse();
  Mat t0inv = M.mat_T(0) - Mat::scalar(M.dim(), pp);
  R.set_T(0, M.mat_X(1) * t0inv);
  return R;
}

ModuleRep coset_twist(const ModuleRep& N, const WeylElem& x, const AlgebraDesc& tgt) {
  const AlgebraDesc& src = N.desc();
  if (tgt.n != src.n || tgt.fam != src.fam || !tgt.same_parameters(src))
    throw std::runtime_error("coset_twist: descriptor mismatch");
  ModuleRep R(tgt, N.dim());
  for (int i : tgt.tgens) {
    int j = conjugate_generator(x, i);
    if (j < 0 || !src.has_tgen(j))
      throw std::runtime_error("coset_twist: x does not conjugate generators");
    R.set_T(i, N.mat_T(j));
  }
  WeylElem xinv = x.inverse();
  for (int j = tgt.lat_min(); j <= tgt.n; ++j) {
    Weight e = Weight::unit(tgt.rank(), tgt.slot_of(j));
    Weight img = act_on_weight(xinv, e, tgt.lat_min());
    R.set_X(j, apply_poly(N, LaurentPoly::monomial(img, Scalar(1))));
  }
  if (N.slot_hints()) {
    // Candidate values for slot j: monomials of the source candidates.
    auto& src_h = *N.slot_hints();
    std::vector<std::vector<Scalar>> h(tgt.rank());
    for (int j = tgt.lat_min(); j <= tgt.n; ++j) {
      Weight e = Weight::unit(tgt.rank(), tgt.slot_of(j));
      Weight img = act_on_weight(xinv, e, tgt.lat_min());
      std::vector<Scalar> vals{Scalar(1)};
      for (int slot = 0; slot < tgt.rank(); ++slot) {
        if (!img.e[slot]) continue;
        std::vector<Scalar> next;
        for (auto& v : vals)
          for (auto& c : src_h[slot]) next.push_back(v * c.pow(img.e[slot]));
        vals = next;
      }
      h[tgt.slot_of(j)] = vals;
    }
    R.set_slot_hints(std::move(h));
  }
  return R;
}

Submodule spin(const ModuleRep& M, const std::vector<Mat>& seeds) {
  EchelonSpace space(M.dim());
  std::vector<std::vector<Scalar>> queue;
  auto push = [&](const Mat& v, int col) {
    std::vector<Scalar> x(M.dim());
    for (int i = 0; i < M.dim(); ++i) x[i] = v.at(i, col);
    if (space.insert(x)) queue.push_back(std::move(x));
  };
  for (auto& s : seeds)
    for (int c = 0; c < s.cols(); ++c) push(s, c);
  auto gens = M.generators();
  for (size_t h = 0; h < queue.size(); ++h) {
    Mat v(M.dim(), 1);
    for (int i = 0; i < M.dim(); ++i) v.at(i, 0) = queue[h][i];
    for (auto& [name, g] : gens) push(g * v, 0);
  }
  return Submodule{space.basis()};
}

ModuleRep restrict_to_submodule(const ModuleRep& M, const Mat& basis) {
  ModuleRep R(M.desc(), basis.cols());
  for (auto& [name, m] : M.mats()) R.set_mat(name, restrict_operator(basis, m));
  if (M.slot_hints()) R.set_slot_hints(*M.slot_hints());
  return R;
}

ModuleRep quotient(const ModuleRep& M, const Mat& sub_basis) {
  int k = sub_basis.cols();
  if (k == 0) return M;
  // Pivot coordinates of the subspace; complement coordinates carry the
  // quotient.
  Mat rt = sub_basis.transpose();
  auto pivots = rt.rref();
  std::vector<bool> is_piv(M.dim(), false);
  for (int c : pivots) is_piv[c] = true;
  Mat P(M.dim(), M.dim());
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < M.dim(); ++i) P.at(i, j) = sub_basis.at(i, j);
  int col = k;
  for (int i = 0; i < M.dim(); ++i)
    if (!is_piv[i]) P.at(i, col++) = Scalar(1);
  auto Pinv = P.inverse();
  if (!Pinv) throw std::runtime_error("quotient: degenerate subspace basis");
  ModuleRep R(M.desc(), M.dim() - k);
  for (auto& [name, m] : M.mats()) {
    Mat t = *Pinv * m * P;
    // Invariance: the block mapping the subspace outside itself must vanish.
    for (int i = k; i < M.dim(); ++i)
      for (int j = 0; j < k; ++j)
        if (!t.at(i, j).is_zero())
          throw std::runtime_error("quotient: subspace not invariant under " + name);
    Mat q(M.dim() - k, M.dim() - k);
    for (int i = k; i < M.dim(); ++i)
      for (int j = k; j < M.dim(); ++j) q.at(i - k, j - k) = t.at(i, j);
    R.set_mat(name, q);
  }
  if (M.slot_hints()) R.set_slot_hints(*M.slot_hints());
  return R;
}

std::vector<Mat> hom_space(const ModuleRep& M, const ModuleRep& N) {
  if (!(M.desc() == N.desc())) throw std::runtime_error("hom_space: desc mismatch");
  int dm = M.dim(), dn = N.dim();
  if (dm == 0 || dn == 0) return {};
  auto gens = M.generators();
  Mat sys((int)gens.size() * dn * dm, dn * dm);
  int row = 0;
  for (auto& [name, gM] : gens) {
    const Mat& gN = N.mats().at(name);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) {
        // (Phi gM - gN Phi)_{ij} = 0
        for (int t = 0; t < dm; ++t) sys.at(row, i * dm + t) += gM.at(t, j);
        for (int t = 0; t < dn; ++t) sys.at(row, t * dm + j) -= gN.at(i, t);
        ++row;
      }
  }
  Mat K = sys.kernel();
  std::vector<Mat> out;
  for (int c = 0; c < K.cols(); ++c) {
    Mat phi(dn, dm);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) phi.at(i, j) = K.at(i * dm + j, c);
    out.push_back(phi);
  }
  return out;
}

bool is_isomorphic(const ModuleRep& M, const ModuleRep& N, uint64_t seed) {
  if (!(M.desc() == N.desc())) throw std::runtime_error("is_isomorphic: desc mismatch");
  if (M.dim() != N.dim()) return false;
  if (M.dim() == 0) return true;
  auto homs = hom_space(M, N);
  if (homs.empty()) return false;
  std::mt19937_64 rng(seed ^ 0x150D0C0DELL);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Mat c(M.dim(), M.dim());
    for (auto& phi : homs) c = c + phi * Scalar(coeff(rng));
    if (!c.det().is_zero()) return true;
  }
  if (homs.size() <= 3) {
    // det of a general combination is a polynomial of degree dim in each
    // coefficient; a grid of dim+1 points per variable decides vanishing.
    int d = M.dim();
    std::vector<int> idx(homs.size(), 0);
    while (true) {
      Mat c(d, d);
      for (size_t k = 0; k < homs.size(); ++k) c = c + homs[k] * Scalar(idx[k]);
      if (!c.det().is_zero()) return true;
      size_t k = 0;
      while (k < idx.size() && ++idx[k] > d) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    return false;
  }
  throw std::runtime_error("is_isomorphic: inconclusive with hom dimension > 3");
}

std::vector<SpectrumPart> simultaneous_spectrum(const ModuleRep& M) {
  const AlgebraDesc& d = M.desc();
  std::vector<SpectrumPart> parts{{{}, Mat::identity(M.dim())}};
  for (int slot = 0; slot < d.rank(); ++slot) {
    const Mat& X = M.mat_X(d.lattice_index(slot));
    std::vector<SpectrumPart> next;
    for (auto& part : parts) {
      int k = part.generalized.cols();
      Mat A = restrict_operator(part.generalized, X);
      std::vector<Scalar> cands;
      if (M.slot_hints()) cands = (*M.slot_hints())[slot];
      for (int pass = 0; pass < 2; ++pass) {
        if (pass == 1 || cands.empty()) {
          auto rr = rational_roots(A.charpoly());
          if (!rr.complete) {
            std::ostringstream os;
            os << "non-rational eigenvalue encountered for X"
               << d.lattice_index(slot) << "; irreducible factor coefficients:";
            for (auto& c : rr.leftover) os << " " << c.str();
            throw std::runtime_error(os.str());
          }
          cands = rr.roots;
        }
        int covered = 0;
        std::vector<SpectrumPart> found;
        for (auto& a : cands) {
          Mat P = (A - Mat::scalar(k, a)).pow(k);
          Mat K = P.kernel();
          if (K.cols() == 0) continue;
          covered += K.cols();
          SpectrumPart np;
          np.tuple = part.tuple;
          np.tuple.push_back(a);
          np.generalized = part.generalized * K;
          found.push_back(std::move(np));
        }
        if (covered == k) {
          for (auto& f : found) next.push_back(std::move(f));
          break;
        }
        if (pass == 1)
          throw std::runtime_error(
              "simultaneous_spectrum: eigenvalue exhaustiveness failure");
        cands.clear();  // retry with char-poly roots
      }
    }
    parts = std::move(next);
  }
  return parts;
}

Mat true_eigenspace(const ModuleRep& M, const std::vector<Scalar>& tuple) {
  const AlgebraDesc& d = M.desc();
  if ((int)tuple.size() != d.rank())
    throw std::runtime_error("true_eigenspace: tuple rank mismatch");
  Mat stack(0, M.dim());
  for (int slot = 0; slot < d.rank(); ++slot)
    stack = vcat(stack, M.mat_X(d.lattice_index(slot)) -
                            Mat::scalar(M.dim(), tuple[slot]));
  return stack.kernel();
}

int jordan_max_block(const ModuleRep& M, int j, const Scalar& a) {
  Mat N = M.mat_X(j) - Mat::scalar(M.dim(), a);
  int prev = N.rank();
  if (prev == M.dim()) return 0;
  Mat P = N;
  for (int k = 1; k <= M.dim(); ++k) {
    Mat P2 = P * N;
    int r = P2.rank();
    if (r == prev) return k;
    prev = r;
    P = P2;
  }
  return M.dim();
}

namespace {

// Norton-style probe: requires nullity exactly one to certify.
std::optional<IrredDecision> norton_probe(const ModuleRep& M, const ModuleRep& Mt,
                                          const Mat& theta) {
  auto roots = rational_roots(theta.charpoly()).roots;
  for (auto& lam : roots) {
    Mat A = theta - Mat::scalar(M.dim(), lam);
    Mat K = A.kernel();
    if (K.cols() != 1) continue;
    Submodule s = spin(M, {K});
    if (s.basis.cols() < M.dim())
      return IrredDecision{IrredDecision::Kind::Reducible, s.basis, "norton kernel spin"};
    Mat Kt = A.transpose().kernel();
    Submodule st = spin(Mt, {Kt});
    if (st.basis.cols() < M.dim()) {
      // Annihilator of a proper dual submodule is a proper submodule.
      Mat ann = st.basis.transpose().kernel();
      return IrredDecision{IrredDecision::Kind::Reducible, ann,
                           "norton transpose kernel spin"};
    }
    return IrredDecision{IrredDecision::Kind::Irreducible, Mat(), "norton"};
  }
  return std::nullopt;
}

}  // namespace

IrredDecision irreducible_or_submodule(const ModuleRep& M, uint64_t seed) {
  if (M.dim() == 0)
    throw std::runtime_error("irreducible_or_submodule: zero module");
  if (M.dim() == 1) return {IrredDecision::Kind::Irreducible, Mat(), "dim 1"};

  auto parts = simultaneous_spectrum(M);
  bool all_lines = true;
  for (auto& part : parts) {
    Mat E = true_eigenspace(M, part.tuple);
    if (E.cols() != 1) all_lines = false;
    for (int c = 0; c < E.cols(); ++c) {
      Submodule s = spin(M, {E.col(c)});
      if (s.basis.cols() < M.dim())
        return {IrredDecision::Kind::Reducible, s.basis, "eigenvector spin"};
    }
  }
  if (all_lines)
    return {IrredDecision::Kind::Irreducible, Mat(),
            "all simultaneous eigenspaces are lines with full spin"};

  ModuleRep Mt = tau_dual(M);
  auto gens = M.generators();
  std::mt19937_64 rng(seed ^ (uint64_t)M.dim() * 0x9E3779B97F4A7C15ULL);
  std::uniform_int_distribution<int> pick(0, (int)gens.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 40; ++attempt) {
    Mat theta(M.dim(), M.dim());
    int terms = 2 + (int)(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      Mat w = gens[pick(rng)].second;
      if (rng() & 1) w = w * gens[pick(rng)].second;
      int c = coeff(rng);
      if (c) theta = theta + w * Scalar(c);
    }
    auto dec = norton_probe(M, Mt, theta);
    if (dec) return *dec;
  }
  return {IrredDecision::Kind::Unknown, Mat(),
          "no usable Norton element found (nullity-1 search exhausted)"};
}

bool is_irreducible(const ModuleRep& M, uint64_t seed) {
  auto dec = irreducible_or_submodule(M, seed);
  if (dec.kind == IrredDecision::Kind::Unknown)
    throw std::runtime_error("is_irreducible: " + dec.note);
  return dec.kind == IrredDecision::Kind::Irreducible;
}

std::vector<ModuleRep> composition_factors(const ModuleRep& M, uint64_t seed) {
  if (M.dim() == 0) return {};
  auto dec = irreducible_or_submodule(M, seed);
  if (dec.kind == IrredDecision::Kind::Unknown)
    throw std::runtime_error("composition_factors: " + dec.note);
  if (dec.kind == IrredDecision::Kind::Irreducible) return {M};
  auto lower = composition_factors(restrict_to_submodule(M, dec.submodule), seed);
  auto upper = composition_factors(quotient(M, dec.submodule), seed);
  for (auto& u : upper) lower.push_back(std::move(u));
  return lower;
}

std::vector<Mat> hom_from_irreducible(const ModuleRep& S, const ModuleRep& M) {
  if (!(S.desc() == M.desc()))
    throw std::runtime_error("hom_from_irreducible: desc mismatch");
  if (S.dim() == 0 || M.dim() == 0) return {};
  // Cyclic eigenvector of S and the matching eigenspace of M.
  auto parts = simultaneous_spectrum(S);
  const auto& tuple = parts.front().tuple;
  Mat vS = true_eigenspace(S, tuple).col(0);
  Mat E = true_eigenspace(M, tuple);
  int e = E.cols();
  if (e == 0) return {};

  // Spin the pair (s, P) with P tracking phi(s) = P c for unknown c in Q^e.
  struct Row {
    std::vector<Scalar> s;
    Mat P;
    int pivot;
  };
  std::vector<Row> rows;
  std::vector<Mat> constraints;  // dimM x e blocks, want rows of P c = 0
  auto reduce_insert = [&](std::vector<Scalar> s, Mat P) -> int {
    for (auto& r : rows) {
      const Scalar f = s[r.pivot];
      if (f.is_zero()) continue;
      for (int i = 0; i < (int)s.size(); ++i)
        if (!r.s[i].is_zero()) s[i] -= f * r.s[i];
      P = P - r.P * f;
    }
    int piv = -1;
    for (int i = 0; i < (int)s.size(); ++i)
      if (!s[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      if (!P.is_zero()) constraints.push_back(P);
      return -1;
    }
    Scalar inv = s[piv].inverse();
    for (auto& x : s) x *= inv;
    P = P * inv;
    for (auto& r : rows) {
      const Scalar f = r.s[piv];
      if (f.is_zero()) continue;
      for (int i = 0; i < (int)s.size(); ++i)
        if (!s[i].is_zero()) r.s[i] -= f * s[i];
      r.P = r.P - P * f;
    }
    rows.push_back(Row{std::move(s), std::move(P), piv});
    return (int)rows.size() - 1;
  };

  std::vector<Scalar> s0(S.dim());
  for (int i = 0; i < S.dim(); ++i) s0[i] = vS.at(i, 0);
  std::vector<int> queue;
  int r0 = reduce_insert(std::move(s0), E);
  if (r0 >= 0) queue.push_back(r0);
  auto gensS = S.generators();
  auto gensM = M.generators();
  for (size_t h = 0; h < queue.size(); ++h) {
    // Copy: rows may reallocate/rewrite during insertion.
    Row cur = rows[queue[h]];
    for (size_t g = 0; g < gensS.size(); ++g) {
      std::vector<Scalar> ns(S.dim());
      const Mat& gm = gensS[g].second;
      for (int i = 0; i < S.dim(); ++i) {
        Scalar acc(0);
        for (int j = 0; j < S.dim(); ++j)
          if (!gm.at(i, j).is_zero() && !cur.s[j].is_zero())
            acc += gm.at(i, j) * cur.s[j];
        ns[i] = acc;
      }
      int idx = reduce_insert(std::move(ns), gensM[g].second * cur.P);
      if (idx >= 0) queue.push_back(idx);
    }
  }
  if ((int)rows.size() != S.dim())
    throw std::runtime_error("hom_from_irreducible: source not cyclic (reducible?)");

  Mat C(0, e);
  for (auto& P : constraints) C = vcat(C, P);
  Mat cs = C.rows() ? C.kernel() : Mat::identity(e);

  // Assemble phi for each solution c: phi(basis row s_k) = P_k c.
  Mat Sbasis(S.dim(), S.dim());
  for (int k = 0; k < S.dim(); ++k)
    for (int i = 0; i < S.dim(); ++i) Sbasis.at(i, k) = rows[k].s[i];
  Mat Sinv = *Sbasis.inverse();
  std::vector<Mat> out;
  for (int c = 0; c < cs.cols(); ++c) {
    Mat img(M.dim(), S.dim());
    for (int k = 0; k < S.dim(); ++k) {
      Mat pc = rows[k].P * cs.col(c);
      for (int i = 0; i < M.dim(); ++i) img.at(i, k) = pc.at(i, 0);
    }
    out.push_back(img * Sinv);
  }
  return out;
}

bool irreducibles_isomorphic(const ModuleRep& S1, const ModuleRep& S2) {
  if (S1.dim() != S2.dim()) return false;
  return !hom_from_irreducible(S1, S2).empty();
}

SocleResult socle(const ModuleRep& M, uint64_t seed) {
  SocleResult res;
  if (M.dim() == 0) {
    res.subspace = Mat(0, 0);
    return res;
  }
  auto factors = composition_factors(M, seed);
  std::vector<ModuleRep> reps;
  for (auto& f : factors) {
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

ModuleRep cosocle(const ModuleRep& M, uint64_t seed) {
  if (M.dim() == 0) return M;
  ModuleRep Mt = tau_dual(M);
  Mat socT = socle(Mt, seed).subspace;
  if (socT.cols() == M.dim()) {
    // Semisimple: the cosocle is M itself.
    return M;
  }
  Mat rad = socT.transpose().kernel();
  return quotient(M, rad);
}

std::vector<ModuleRep> cosocle_constituents(const ModuleRep& M, uint64_t seed) {
  ModuleRep C = cosocle(M, seed);
  auto s = socle(C, seed);
  if (s.subspace.cols() != C.dim())
    throw std::runtime_error("cosocle_constituents: cosocle not semisimple");
  return s.pieces;
}

}  // namespace hecke
