#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// Segment on a formal eigenvalue line: exponents lo..hi stand for the
/// values lambda q^{2 lo}, ..., lambda q^{2 hi}. Purely formal integers, so
/// no rational coincidences can occur.
struct Segment {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
  bool operator==(const Segment& o) const = default;
};

enum class MsOrder { None, Right, Left };

struct Multisegment {
  std::vector<Segment> segs;
  MsOrder tag = MsOrder::None;

  int length() const;
  bool operator==(const Multisegment& o) const;  // as multisets of segments
  std::string str() const;                       // "[(-1..0),(0..2)]"
  static Multisegment parse(const std::string& s);
};

/// Stable sort by the requested order, largest segment first (the paper's
/// "write down the multisegment in ... order").
Multisegment normalize(const Multisegment& ms, MsOrder order);

/// Length of the a-tail via the -/+ cancellation procedure (right order).
int eps_A(const Multisegment& ms, int a_exp);
/// Starred version (left order).
int eps_star_A(const Multisegment& ms, int a_exp);

enum class MsOp { E, F, Estar, Fstar };

/// The four crystal operators; nullopt is the zero marker (e/e* with no
/// uncanceled minus).
std::optional<Multisegment> crystal_A(const Multisegment& ms, int a_exp, MsOp op);

}  // namespace hecke
