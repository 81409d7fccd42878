#include "hecke/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

long long FormalCharacter::total() const {
  long long t = 0;
  for (auto& [tu, m] : entries) t += m;
  return t;
}

void FormalCharacter::add(const std::vector<Scalar>& tuple, long long mult) {
  if ((int)tuple.size() != rank)
    throw std::runtime_error("FormalCharacter: tuple rank mismatch");
  if (mult == 0) return;
  auto it = entries.find(tuple);
  if (it == entries.end())
    entries.emplace(tuple, mult);
  else {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  if (rank != o.rank) throw std::runtime_error("FormalCharacter: rank mismatch");
  for (auto& [tu, m] : o.entries) add(tu, m);
  return *this;
}

std::string FormalCharacter::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [tu, m] : entries) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << "[(";
    for (size_t i = 0; i < tu.size(); ++i) os << (i ? "," : "") << tu[i].str();
    os << ")]";
  }
  if (first) os << "0";
  return os.str();
}

FormalCharacter character(const ModuleRep& M) {
  FormalCharacter ch(M.desc().rank());
  for (auto& part : simultaneous_spectrum(M))
    ch.add(part.tuple, part.generalized.cols());
  if (ch.total() != M.dim())
    throw std::runtime_error("character: multiplicities do not sum to dim");
  return ch;
}

FormalCharacter induced_character(const FormalCharacter& ch, Family fam, int n,
                                  const std::vector<int>& srcI,
                                  const std::vector<int>& tgtI) {
  int lat_min = fam == Family::B ? 0 : 1;
  int rank = fam == Family::B ? n + 1 : n;
  if (ch.rank != rank) throw std::runtime_error("induced_character: rank mismatch");
  auto WJ = enumerate_parabolic(n, tgtI);
  auto reps = min_coset_reps_in(WJ, srcI, CosetSide::Left);
  // Exponent vector of x^{-1}(X_j) per representative and slot.
  FormalCharacter out(rank);
  for (auto& x : reps) {
    WeylElem xinv = x.inverse();
    std::vector<Weight> img(rank);
    for (int slot = 0; slot < rank; ++slot)
      img[slot] = act_on_weight(xinv, Weight::unit(rank, slot), lat_min);
    for (auto& [tu, m] : ch.entries) {
      std::vector<Scalar> nt(rank, Scalar(1));
      for (int slot = 0; slot < rank; ++slot) {
        Scalar v(1);
        for (int s = 0; s < rank; ++s)
          if (img[slot].e[s]) v *= tu[s].pow(img[slot].e[s]);
        nt[slot] = v;
      }
      out.add(nt, m);
    }
  }
  return out;
}

FormalCharacter tensor_character(const FormalCharacter& chM,
                                 const FormalCharacter& chK) {
  FormalCharacter out(chM.rank + chK.rank);
  for (auto& [t1, m1] : chM.entries)
    for (auto& [t2, m2] : chK.entries) {
      auto t = t1;
      t.insert(t.end(), t2.begin(), t2.end());
      out.add(t, m1 * m2);
    }
  return out;
}

FormalCharacter shuffle_character(const FormalCharacter& chM, Family fam,
                                  const FormalCharacter& chK) {
  int m = fam == Family::B ? chM.rank - 1 : chM.rank;
  int k = chK.rank;
  int n = m + k;
  std::vector<int> srcI, tgtI;
  for (int i = 0; i < m; ++i) srcI.push_back(i);       // the H_m block
  for (int i = m + 1; i < n; ++i) srcI.push_back(i);   // the H_k^A block
  for (int i = 0; i < n; ++i) tgtI.push_back(i);
  if (fam == Family::R) {
    srcI.erase(std::remove(srcI.begin(), srcI.end(), 0), srcI.end());
    // target stays the full W_n; the R lattice just lacks the X_0 slot
  }
  return induced_character(tensor_character(chM, chK), fam, n, srcI, tgtI);
}

namespace {

std::vector<Scalar> tuple_act(int gen, const std::vector<Scalar>& t, Family fam) {
  auto r = t;
  if (fam == Family::B) {
    if (gen == 0) {
      r[0] = t[0] * t[1];
      r[1] = t[1].inverse();
    } else {
      std::swap(r[gen], r[gen + 1]);
    }
  } else {
    if (gen == 0)
      r[0] = t[0].inverse();
    else
      std::swap(r[gen - 1], r[gen]);
  }
  return r;
}

}  // namespace

CentralCharOrbit central_orbit(const std::vector<Scalar>& a, Family fam) {
  for (auto& v : a)
    if (v.is_zero()) throw std::runtime_error("central_orbit: zero entry");
  int n = fam == Family::B ? (int)a.size() - 1 : (int)a.size();
  CentralCharOrbit res;
  std::vector<std::vector<Scalar>> queue{a};
  res.orbit.insert(a);
  for (size_t h = 0; h < queue.size(); ++h)
    for (int i = 0; i < n; ++i) {
      auto nt = tuple_act(i, queue[h], fam);
      if (res.orbit.insert(nt).second) queue.push_back(nt);
    }
  res.rep = *res.orbit.begin();
  return res;
}

std::vector<ModuleRep> block_decompose(const ModuleRep& M) {
  auto parts = simultaneous_spectrum(M);
  // Group the spectrum parts by central-character orbit.
  std::vector<std::pair<std::vector<Scalar>, EchelonSpace>> groups;
  for (auto& part : parts) {
    auto orb = central_orbit(part.tuple, M.desc().fam);
    EchelonSpace* slot = nullptr;
    for (auto& [rep, space] : groups)
      if (rep == orb.rep) {
        slot = &space;
        break;
      }
    if (!slot) {
      groups.emplace_back(orb.rep, EchelonSpace(M.dim()));
      slot = &groups.back().second;
    }
    for (int c = 0; c < part.generalized.cols(); ++c)
      slot->insert_col(part.generalized, c);
  }
  std::vector<ModuleRep> out;
  for (auto& [rep, space] : groups)
    out.push_back(restrict_to_submodule(M, space.basis()));
  return out;
}

bool char_linearly_independent(const std::vector<FormalCharacter>& chars) {
  if (chars.empty()) return true;
  std::set<std::vector<Scalar>> tuples;
  for (auto& ch : chars) {
    if (ch.rank != chars.front().rank)
      throw std::runtime_error("char_linearly_independent: rank mismatch");
    for (auto& [tu, m] : ch.entries) tuples.insert(tu);
  }
  std::map<std::vector<Scalar>, int> col;
  int idx = 0;
  for (auto& tu : tuples) col[tu] = idx++;
  Mat A((int)chars.size(), idx);
  for (size_t r = 0; r < chars.size(); ++r)
    for (auto& [tu, m] : chars[r].entries) A.at((int)r, col[tu]) = Scalar(m);
  return A.rank() == (int)chars.size();
}

int eps_char(const FormalCharacter& ch, Family fam, const Scalar& a) {
  int max_tail = fam == Family::B ? ch.rank - 1 : ch.rank;
  int best = 0;
  for (auto& [tu, m] : ch.entries) {
    int run = 0;
    for (int i = ch.rank - 1; i >= ch.rank - max_tail; --i) {
      if (tu[i] == a)
        ++run;
      else
        break;
    }
    best = std::max(best, run);
  }
  return best;
}

}  // namespace hecke
