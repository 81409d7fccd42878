#include "hecke/fixtures.hpp"

#include <stdexcept>

#include "hecke/functors.hpp"

namespace hecke {

namespace {

const Scalar kP(2), kQ(3), kA0(5), kA(7), kC(11);

Mat m2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Mat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

ModuleRep h1_example() {
  ModuleRep M(AlgebraDesc::full_B(1, kP, kQ), 2);
  M.set_T(0, m2(kP, Scalar(0), Scalar(0), -kP.inverse()));
  M.set_X(0, m2(Scalar(0), kA0, kA0, Scalar(0)));
  M.set_X(1, m2(Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)));
  return M;
}

ModuleRep h2_example() {
  Scalar pp = kP - kP.inverse();
  Scalar q2 = kQ * kQ;
  Scalar den = q2 + Scalar(1);
  Scalar p2 = kP * kP, p4 = p2 * p2, q4 = q2 * q2;
  Scalar top = p4 * q2 + q4 * p2 + p2 + q2;
  Scalar bot = kP * q2 * (p2 - Scalar(1)) * den;
  ModuleRep M(AlgebraDesc::full_B(2, kP, kQ), 2);
  M.set_T(0, m2(pp * q2 / den, top / bot, q2 * pp / den, pp / den));
  M.set_T(1, m2(-kQ.inverse(), Scalar(0), Scalar(0), kQ));
  M.set_X(0, m2(kA0, Scalar(0), Scalar(0), -kA0 * q2));
  M.set_X(1, m2(-q2, Scalar(0), Scalar(0), -q2.inverse()));
  M.set_X(2, m2(Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)));
  return M;
}

ModuleRep l_a0_q2() {
  Scalar pp = kP - kP.inverse();
  Scalar q2 = kQ * kQ;
  ModuleRep M(AlgebraDesc::full_B(1, kP, kQ), 2);
  M.set_T(0, m2(Scalar(0), Scalar(1), Scalar(1), pp));
  M.set_X(0, m2(kA0, -pp * kA0 * q2, Scalar(0), kA0 * q2));
  M.set_X(1, m2(q2, pp * (q2 + Scalar(1)), Scalar(0), q2.inverse()));
  return M;
}

ModuleRep shuffle_ex_1() {
  AlgebraDesc d = AlgebraDesc::parabolic(Family::B, 2, kP, kQ, {0});
  ModuleRep seed = one_dim(d, {kA0, kP * kP, kC}, {{0, kP}});
  return induce(seed, AlgebraDesc::full_B(2, kP, kQ));
}

ModuleRep shuffle_ex_2() {
  AlgebraDesc d = AlgebraDesc::parabolic(Family::B, 3, kP, kQ, {1, 2});
  Scalar q2 = kQ * kQ;
  ModuleRep seed =
      one_dim(d, {kA0, -q2.inverse(), Scalar(-1), -q2}, {{1, kQ}, {2, kQ}});
  return induce(seed, AlgebraDesc::full_B(3, kP, kQ));
}

ModuleRep smallcounterex(int part) {
  CrystalResult r = crystal_f(l_a0_q2(), Scalar(1));
  if (r.tag != CrystalResult::Tag::SplitPair)
    throw std::runtime_error("smallcounterex fixture: expected a split pair");
  return part == 1 ? r.a : r.b;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"h1-example",  "h2-example",       "shuffle-ex-1",     "shuffle-ex-2",
          "katoA2",      "katoA3",           "katoB1",           "katoB2-ind",
          "L-a0-q2",     "smallcounterex-1", "smallcounterex-2"};
}

ModuleRep build_fixture(const std::string& name) {
  if (name == "h1-example") return h1_example();
  if (name == "h2-example") return h2_example();
  if (name == "shuffle-ex-1") return shuffle_ex_1();
  if (name == "shuffle-ex-2") return shuffle_ex_2();
  if (name == "katoA2") return principal_series_A(kA, 2, kP, kQ);
  if (name == "katoA3") return principal_series_A(kA, 3, kP, kQ);
  if (name == "katoB1") return principal_series_B(kA0, kA, 1, kP, kQ);
  if (name == "katoB2-ind") return induced_principal_B(kA0, kA, 2, kP, kQ);
  if (name == "L-a0-q2") return l_a0_q2();
  if (name == "smallcounterex-1") return smallcounterex(1);
  if (name == "smallcounterex-2") return smallcounterex(2);
  throw std::runtime_error("unknown fixture '" + name + "'");
}

}  // namespace hecke
