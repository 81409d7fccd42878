#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/functors.hpp"
#include "hecke/multiseg.hpp"

namespace hecke {

/// Formal eigenvalue line I_lambda = {lambda q^{2i}, lambda^{-1} q^{2i}}
/// restricted to |i| <= window.
struct LambdaLine {
  Scalar lambda;
  Scalar q;
  Scalar p;
  int window = 2;

  Scalar plus_value(int i) const { return lambda * q.pow(2 * i); }
  Scalar minus_value(int i) const { return lambda.inverse() * q.pow(2 * i); }
  /// i with a = lambda q^{2i} within the (doubled) window, if any.
  std::optional<int> plus_exponent(const Scalar& a) const;
  std::optional<int> minus_exponent(const Scalar& a) const;
};

/// The standing hypotheses of the type-A-behavior regime: p^2, +-q, +-1
/// all avoid I_lambda, and the two half-lines are disjoint.
bool genericity_check(const LambdaLine& line);

/// One-dimensional module of a segment (entries lambda^{-1} q^{2 lo..2 hi}).
ModuleRep segment_module(const Segment& seg, const LambdaLine& line);
/// N_Gamma: cosocle of the module induced from the segment modules taken in
/// right order.
ModuleRep n_gamma(const Multisegment& ms, const LambdaLine& line,
                  uint64_t seed = kDefaultSeed);
/// M_Gamma = ind_{H_n^A}^{H_n^R} N_Gamma; certified irreducible.
ModuleRep dict_A_to_B(const Multisegment& ms, const LambdaLine& line,
                      uint64_t seed = kDefaultSeed);

struct EdgeCheckReport {
  bool ok = false;
  int eps_linear = -1;     // eps_a of M_Gamma by linear algebra
  int eps_comb = -1;       // predicted by the multisegment algorithm
  Multisegment predicted;  // f-image multisegment
  std::string note;
};
/// Computes crystal_f(M_Gamma, a) by linear algebra and independently via
/// the multisegment operators, then asserts the two routes agree.
EdgeCheckReport crystal_edge_check(const Multisegment& ms, const Scalar& a,
                                   const LambdaLine& line,
                                   uint64_t seed = kDefaultSeed);

struct CrystalGraph {
  struct Node {
    std::vector<Scalar> path;  // L(a_0, a_1, ..., a_k) label
    FormalCharacter ch;
    ModuleRep mod;
    int depth = 0;
    std::vector<std::string> marks;  // non-irreducible outcomes, no edges
  };
  struct Edge {
    int from = 0, to = 0;
    Scalar a;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::string dot() const;
};

/// Breadth-first crystal graph from the one-dimensional seed (lambda) over
/// H_0, applying crystal_f for every window value.
CrystalGraph build_graph(const LambdaLine& line, int n_max,
                         uint64_t seed = kDefaultSeed);

}  // namespace hecke
