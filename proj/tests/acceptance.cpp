// Acceptance suite: one check per numbered criterion, each printed as a
// PASS/FAIL line with its wall-clock time. All comparisons are exact
// rational arithmetic; there are no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hecke/clifford.hpp"
#include "hecke/crystal.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/functors.hpp"
#include "hecke/json_io.hpp"

using namespace hecke;

namespace {

const Scalar kP(2), kQ(3), kA0(5), kA(7);

struct Checker {
  bool ok = true;
  std::ostringstream log;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "      failed: " << what << "\n";
    }
  }
};

// Modules collected across criteria (criteria 6 and 13 look them up).
struct Corpus {
  std::vector<std::pair<ModuleRep, std::string>> irreducibles;
  void add(const ModuleRep& M, const std::string& label) {
    irreducibles.emplace_back(M, label);
  }
};
Corpus corpus;

std::vector<Scalar> pool() { return {Scalar(7), Scalar(63), Scalar(7, 9)}; }

void criterion1(Checker& c) {
  for (int n = 1; n <= 3; ++n) {
    for (auto d : {AlgebraDesc::full_B(n, kP, kQ), AlgebraDesc::full_R(n, kP, kQ),
                   AlgebraDesc::full_A(n, kP, kQ)}) {
      RelationReport rep = check_defining_relations(d);
      c.require(rep.all_pass(), d.variant_str() + " n=" + std::to_string(n));
      if (n == 3 && d.fam == Family::B) {
        bool saw_braid = false;
        for (auto& e : rep.entries)
          if (e.name.find("(3)") != std::string::npos) saw_braid = true;
        c.require(saw_braid, "braid instances present at n=3");
      }
    }
  }
}

void criterion2(Checker& c) {
  ModuleRep M = build_fixture("h1-example");
  c.require(verify_module(M).all_pass(), "verify_module");
  c.require(is_irreducible(M), "irreducible over H_1");
  CliffordReport rep = clifford_restrict(M);
  c.require(rep.splits, "restriction splits");
  if (!rep.splits) return;
  c.require(rep.part1.dim() == 1 && rep.part2.dim() == 1, "parts are 1-dimensional");
  c.require(!is_isomorphic(rep.part1, rep.part2), "parts non-isomorphic");
  const Mat& S = rep.intertwiner;
  c.require(S.at(0, 1).is_zero() && S.at(1, 0).is_zero() && S.at(0, 0) == -S.at(1, 1),
            "intertwiner proportional to diag(1,-1)");
}

void criterion3(Checker& c) {
  ModuleRep M = build_fixture("h2-example");
  RelationReport rep = verify_module(M);
  c.require(rep.all_pass(), "verify_module (all eight relation families)");
  c.require(is_irreducible(M), "irreducible over H_2");
  c.require(is_irreducible(restrict_mod(M, AlgebraDesc::full_R(2, kP, kQ))),
            "irreducible over H_2^R");
}

void criterion4(Checker& c) {
  const Scalar kC(11), p2 = kP * kP;
  ModuleRep M1 = build_fixture("shuffle-ex-1");
  FormalCharacter ch1 = character(M1);
  FormalCharacter want1(3);
  want1.add({kA0, p2, kC}, 1);
  want1.add({kA0, kC, p2}, 1);
  want1.add({kA0 * kC, kC.inverse(), p2}, 1);
  want1.add({kA0 * kC, p2, kC.inverse()}, 1);
  c.require(ch1 == want1, "four-term character tuple-for-tuple");
  FormalCharacter seed1(2), fac1(1);
  seed1.add({kA0, p2}, 1);
  fac1.add({kC}, 1);
  c.require(shuffle_character(seed1, Family::B, fac1) == ch1, "shuffle route (4-term)");

  Scalar q2 = kQ * kQ, q2i = q2.inverse();
  ModuleRep M2 = build_fixture("shuffle-ex-2");
  FormalCharacter ch2 = character(M2);
  FormalCharacter want2(4);
  want2.add({kA0, -q2i, Scalar(-1), -q2}, 1);
  want2.add({-kA0 * q2i, -q2, Scalar(-1), -q2}, 1);
  want2.add({-kA0 * q2i, Scalar(-1), -q2, -q2}, 2);
  want2.add({kA0 * q2i, Scalar(-1), -q2, -q2}, 2);
  want2.add({kA0 * q2i, -q2, Scalar(-1), -q2}, 1);
  want2.add({-kA0, -q2i, Scalar(-1), -q2}, 1);
  c.require(ch2 == want2, "eight-term character with repeated tuples");
  FormalCharacter seed2(1), fac2(3);
  seed2.add({kA0}, 1);
  fac2.add({-q2i, Scalar(-1), -q2}, 1);
  c.require(shuffle_character(seed2, Family::B, fac2) == ch2, "shuffle route (8-term)");
}

void criterion5(Checker& c) {
  for (int n = 2; n <= 3; ++n) {
    ModuleRep L = principal_series_A(kA, n, kP, kQ);
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    c.require(L.dim() == fact, "dim n! at n=" + std::to_string(n));
    c.require(is_irreducible(L), "irreducible at n=" + std::to_string(n));
    FormalCharacter ch = character(L);
    c.require((int)ch.entries.size() == 1 && ch.entries.begin()->second == fact &&
                  ch.entries.begin()->first == std::vector<Scalar>(n, kA),
              "character n![(a^{(n)})]");
    // every Jordan block of X_n has size exactly n
    Mat N = L.mat_X(n) - Mat::scalar(L.dim(), kA);
    Mat Pw = Mat::identity(L.dim());
    for (int k = 1; k <= n; ++k) {
      Pw = Pw * N;
      c.require(Pw.rank() == L.dim() - k * (L.dim() / n),
                "Jordan rank profile k=" + std::to_string(k));
    }
    c.require(Pw.is_zero(), "(X_n - a)^n = 0");
    ModuleRep R = restrict_mod(L, AlgebraDesc::full_A(n - 1, kP, kQ));
    auto s = socle(R);
    c.require(s.pieces.size() == 1, "restriction socle irreducible");
    if (s.pieces.size() == 1)
      c.require(is_isomorphic(s.pieces[0], principal_series_A(kA, n - 1, kP, kQ)),
                "soc res = L^A(a^{(n-1)})");
  }
}

void criterion6(Checker& c) {
  ModuleRep ind = build_fixture("katoB2-ind");
  ModuleRep L = cosocle(ind);
  c.require(is_irreducible(L), "cosocle irreducible");
  std::vector<Scalar> kato_tuple{kA0, kA, kA};
  c.require(character(L).entries.count(kato_tuple) == 1, "character contains (5,7,7)");
  corpus.add(L, "L(5,7,7) cosocle");
  int carriers = 0, iso_to_L = 0;
  for (auto& [M, label] : corpus.irreducibles) {
    if (!(M.desc() == L.desc())) continue;
    if (character(M).entries.count(kato_tuple)) {
      ++carriers;
      if (is_isomorphic(M, L)) ++iso_to_L;
    }
  }
  c.require(carriers >= 1 && carriers == iso_to_L,
            "every corpus carrier of (5,7,7) is isomorphic to the cosocle");
}

void criterion7(Checker& c) {
  ModuleRep M = build_fixture("L-a0-q2");
  CrystalResult r = crystal_f(M, Scalar(1));
  c.require(r.tag == CrystalResult::Tag::SplitPair, "crystal_f splits");
  if (r.tag != CrystalResult::Tag::SplitPair) return;
  c.require(r.a.dim() == 4 && r.b.dim() == 4, "two 4-dimensional parts");
  c.require(is_irreducible(r.a) && is_irreducible(r.b), "parts irreducible");
  c.require(!is_isomorphic(r.a, r.b), "parts non-isomorphic");
  FormalCharacter cha = character(r.a), chb = character(r.b);
  std::vector<Scalar> t1{Scalar(5), Scalar(1), Scalar(9)};
  std::vector<Scalar> t2{Scalar(45), Scalar(1), Scalar(1, 9)};
  bool direct = cha.entries.count(t1) && chb.entries.count(t2);
  bool swapped = cha.entries.count(t2) && chb.entries.count(t1);
  c.require(direct || swapped, "characters contain (5,1,9) and (45,1,1/9)");
}

void criterion8(Checker& c) {
  std::vector<std::pair<ModuleRep, std::vector<Scalar>>> fixtures;
  std::vector<std::vector<Scalar>> paths;
  for (auto& a : pool()) paths.push_back({a});
  for (auto& a : pool())
    for (auto& b : pool()) paths.push_back({a, b});
  for (auto& a : pool())
    for (auto& b : pool())
      for (auto& cc : pool()) paths.push_back({a, b, cc});
  for (auto& path : paths) {
    CrystalResult r = build_from_path(kA0, path, kP, kQ);
    c.require(r.tag == CrystalResult::Tag::Irreducible,
              "path builds an irreducible module");
    if (r.tag != CrystalResult::Tag::Irreducible) continue;
    fixtures.emplace_back(r.a, path);
    std::ostringstream label;
    label << "L(5";
    for (auto& a : path) label << "," << a.str();
    label << ")";
    corpus.add(r.a, label.str());
  }
  c.require(fixtures.size() >= 20, "at least 20 fixture irreducibles");

  for (auto& [M, path] : fixtures) {
    int n = M.desc().n;
    for (auto& a : pool()) {
      int e = eps(M, a);
      c.require(jordan_max_block(M, n, a) == e, "max Jordan block = eps");
      ModuleRep ea = e_lower(M, a);
      c.require((int)hom_space(ea, ea).size() == e, "dim End(e_a M) = eps");
      if (e > 0) {
        ModuleRep etil = crystal_e(M, a);
        c.require(is_irreducible(etil), "crystal_e image irreducible");
        int mult = 0;
        for (auto& f : composition_factors(ea))
          if (irreducibles_isomorphic(f, etil)) ++mult;
        c.require(mult == e, "multiplicity of e~M in e_a M = eps");
      }
      if (n <= 2) {
        CrystalResult fr = crystal_f(M, a);
        c.require(fr.tag == CrystalResult::Tag::Irreducible, "f~ irreducible");
        if (fr.tag != CrystalResult::Tag::Irreducible) continue;
        c.require(eps(fr.a, a) == e + 1, "eps(f~M) = eps(M) + 1");
        ModuleRep back = crystal_e(fr.a, a);
        c.require(is_isomorphic(back, M), "e~ f~ M = M");
      }
    }
  }
}

void criterion9(Checker& c) {
  {
    ModuleRep M = one_dim(AlgebraDesc::parabolic(Family::B, 2, kP, kQ, {0}),
                          {kA0, kP * kP, Scalar(11)}, {{0, kP}});
    c.require(mackey_lhs(M, {0}) == mackey_rhs(M, {0}), "(1,1),(1,1) at n=2");
  }
  {
    AlgebraDesc dJ = AlgebraDesc::parabolic(Family::B, 3, kP, kQ, {0, 1});
    Scalar t0 = kP, t1 = kQ;
    std::vector<Scalar> xv{kA0, t0 * t0, t1 * t1 * t0 * t0, Scalar(11)};
    ModuleRep M = one_dim(dJ, xv, {{0, t0}, {1, t1}});
    c.require(verify_module(M).all_pass(), "seed over H_{2,1} is a module");
    c.require(mackey_lhs(M, {0, 1}) == mackey_rhs(M, {0, 1}), "(2,1),(2,1) at n=3");
    c.require(mackey_lhs(M, {0, 2}) == mackey_rhs(M, {0, 2}), "(1,2),(2,1) at n=3");
  }
}

void criterion10(Checker& c) {
  AlgebraDesc dI = AlgebraDesc::parabolic(Family::B, 2, kP, kQ, {0});
  AlgebraDesc full = AlgebraDesc::full_B(2, kP, kQ);
  std::vector<std::pair<Scalar, Scalar>> seeds{
      {kP, Scalar(11)}, {-kP.inverse(), Scalar(11)}, {kP, Scalar(1, 7)}};
  for (auto& [t0, x2] : seeds) {
    ModuleRep M = one_dim(dI, {kA0, t0 * t0, x2}, {{0, t0}});
    ModuleRep lhs = tau_dual(induce(M, full));
    ModuleRep rhs = induce(d_twist(tau_dual(M)), full);
    c.require(is_isomorphic(lhs, rhs), "(ind M)^tau = ind(^d(M^tau))");
  }
}

// Generalized a-eigenspace of X_1 (the starred delta).
ModuleRep delta_star(const ModuleRep& M, const Scalar& a) {
  Mat A = M.mat_X(1);
  Mat K = (A - Mat::scalar(M.dim(), a)).pow(M.dim()).kernel();
  std::vector<int> I;
  for (int i : M.desc().tgens)
    if (i != 1) I.push_back(i);
  AlgebraDesc d = AlgebraDesc::parabolic(Family::R, M.desc().n, kP, kQ, I);
  if (K.cols() == 0) return zero_module(d);
  EchelonSpace es(M.dim());
  for (int cc = 0; cc < K.cols(); ++cc) es.insert_col(K, cc);
  return restrict_to_submodule(restrict_mod(M, d), es.basis());
}

// Forget X_1 and T_1 by shifting the remaining generators down one slot.
ModuleRep shift_down_A(const ModuleRep& M) {
  int n = M.desc().n;
  ModuleRep R(AlgebraDesc::full_A(n - 1, kP, kQ), M.dim());
  for (int j = 2; j <= n; ++j) R.set_X(j - 1, M.mat_X(j));
  for (int i = 2; i <= n - 1; ++i) R.set_T(i - 1, M.mat_T(i));
  return R;
}

int eps_star_module(const ModuleRep& M, const Scalar& a) {
  if (M.dim() == 0) return 0;
  FormalCharacter ch = character(M);
  int best = 0;
  for (auto& [tu, m] : ch.entries) {
    int run = 0;
    for (int i = 0; i < ch.rank; ++i) {
      if (tu[i] == a)
        ++run;
      else
        break;
    }
    best = std::max(best, run);
  }
  return best;
}

void criterion11(Checker& c) {
  LambdaLine line{kA0, kQ, kP, 2};
  std::vector<Segment> segs;
  for (int lo = -1; lo <= 1; ++lo)
    for (int hi = lo; hi <= 1; ++hi) segs.push_back({lo, hi});
  std::vector<Multisegment> all;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int len_left) -> void {
    if (!pick.empty()) {
      Multisegment m;
      for (int i : pick) m.segs.push_back(segs[i]);
      all.push_back(m);
    }
    for (int i = start; i < (int)segs.size(); ++i) {
      if (segs[i].length() > len_left) continue;
      pick.push_back(i);
      self(self, i, len_left - segs[i].length());
      pick.pop_back();
    }
  };
  rec(rec, 0, 3);

  for (auto& g : all) {
    ModuleRep N = n_gamma(g, line);
    for (int a = -1; a <= 1; ++a) {
      Scalar aval = line.minus_value(a);
      c.require(eps(N, aval) == eps_A(g, a), "eps matches " + g.str());
      c.require(eps_star_module(N, aval) == eps_star_A(g, a),
                "eps* matches " + g.str());
      ModuleRep et = crystal_e(N, aval);
      auto eg = crystal_A(g, a, MsOp::E);
      if (!eg) {
        c.require(et.dim() == 0, "e~ zero marker " + g.str());
      } else {
        c.require(et.dim() > 0 && is_isomorphic(et, n_gamma(*eg, line)),
                  "e~ matches " + g.str());
      }
      ModuleRep ft = cosocle(f_raise(N, aval));
      auto fg = crystal_A(g, a, MsOp::F);
      c.require(fg && is_isomorphic(ft, n_gamma(*fg, line)), "f~ matches " + g.str());
      // starred operators act through the X_1 end
      ModuleRep dstar = delta_star(N, aval);
      auto egs = crystal_A(g, a, MsOp::Estar);
      if (!egs) {
        c.require(dstar.dim() == 0, "e*~ zero marker " + g.str());
      } else {
        auto sd = socle(dstar);
        c.require(sd.pieces.size() == 1, "soc delta* irreducible " + g.str());
        if (sd.pieces.size() == 1) {
          ModuleRep ets = shift_down_A(sd.pieces[0]);
          c.require(is_isomorphic(ets, n_gamma(*egs, line)),
                    "e*~ matches " + g.str());
        }
      }
      ModuleRep one_a = one_dim(AlgebraDesc::lattice_R(1, kP, kQ), {aval}, {});
      ModuleRep fts = cosocle(induce(outer_tensor(one_a, N),
                                     AlgebraDesc::full_A(N.desc().n + 1, kP, kQ)));
      auto fgs = crystal_A(g, a, MsOp::Fstar);
      c.require(fgs && is_isomorphic(fts, n_gamma(*fgs, line)),
                "f*~ matches " + g.str());
    }
  }
}

void criterion12(Checker& c) {
  LambdaLine line{kA0, kQ, kP, 1};
  c.require(genericity_check(line), "line genericity");
  std::vector<Segment> segs{{-1, -1}, {0, 0}, {1, 1}, {-1, 0}, {0, 1}};
  std::vector<Multisegment> all;
  for (size_t i = 0; i < segs.size(); ++i) {
    all.push_back({{segs[i]}, MsOrder::None});
    for (size_t j = i; j < segs.size(); ++j)
      if (segs[i].length() == 1 && segs[j].length() == 1)
        all.push_back({{segs[i], segs[j]}, MsOrder::None});
  }
  std::vector<Scalar> window;
  for (int i = -1; i <= 1; ++i) {
    window.push_back(line.plus_value(i));
    window.push_back(line.minus_value(i));
  }
  for (auto& g : all) {
    ModuleRep M = dict_A_to_B(g, line);  // certified irreducible inside
    corpus.add(M, "M_Gamma " + g.str());
    for (auto& a : window) {
      auto rep = crystal_edge_check(g, a, line);
      c.require(rep.ok,
                "edge check " + g.str() + " at a=" + a.str() + " (" + rep.note + ")");
    }
  }
}

void criterion13(Checker& c) {
  std::vector<std::vector<const ModuleRep*>> groups;
  std::vector<AlgebraDesc> descs;
  for (auto& [M, label] : corpus.irreducibles) {
    int gi = -1;
    for (size_t k = 0; k < descs.size(); ++k)
      if (descs[k] == M.desc()) gi = (int)k;
    if (gi < 0) {
      descs.push_back(M.desc());
      groups.emplace_back();
      gi = (int)descs.size() - 1;
    }
    bool fresh = true;
    for (auto* other : groups[gi])
      if (irreducibles_isomorphic(*other, M)) {
        fresh = false;
        break;
      }
    if (fresh) groups[gi].push_back(&M);
  }
  c.require(!corpus.irreducibles.empty(), "corpus populated by criteria 8 and 12");
  for (size_t k = 0; k < groups.size(); ++k) {
    std::vector<FormalCharacter> chars;
    for (auto* M : groups[k]) chars.push_back(character(*M));
    c.require(char_linearly_independent(chars),
              "characters independent over " + descs[k].variant_str() +
                  " n=" + std::to_string(descs[k].n) + " (" +
                  std::to_string(chars.size()) + " classes)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  struct Item {
    int num;
    const char* what;
    std::function<void(Checker&)> run;
  };
  std::vector<Item> items{
      {1, "defining relations for B, R, A at n in {1,2,3}", criterion1},
      {2, "rank-one example: split restriction with diag(1,-1) intertwiner", criterion2},
      {3, "rank-two example: irreducible over H_2 and H_2^R", criterion3},
      {4, "worked induced characters match matrices and shuffle", criterion4},
      {5, "type A principal series: Kato properties at n in {2,3}", criterion5},
      {6, "type B principal series cosocle at n=2: irreducible, unique carrier", criterion6},
      {7, "eigenvalue-one split into two non-isomorphic 4-dim irreducibles", criterion7},
      {8, "crystal operator properties over the fixture corpus", criterion8},
      {9, "Mackey character identities", criterion9},
      {10, "induction duality via the longest double coset twist", criterion10},
      {11, "multisegment operators agree with the matrix oracle", criterion11},
      {12, "type A to type B dictionary commutes with the crystal", criterion12},
      {13, "characters of the corpus are linearly independent", criterion13},
  };
  // an optional single criterion number restricts the run (profiling aid)
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (auto& item : items) {
    if (only && item.num != only) continue;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      item.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.log << "      exception: " << e.what() << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] criterion %2d (%6.2fs): %s\n", c.ok ? "PASS" : "FAIL", item.num,
                secs, item.what);
    std::cout << c.log.str();
    all_ok = all_ok && c.ok;
  }
  std::cout << (all_ok ? "ACCEPTANCE: all criteria passed\n"
                       : "ACCEPTANCE: failures present\n");
  return all_ok ? 0 : 1;
}
