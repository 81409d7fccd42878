#include "hecke/multiseg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hecke {

int Multisegment::length() const {
  int t = 0;
  for (auto& s : segs) t += s.length();
  return t;
}

bool Multisegment::operator==(const Multisegment& o) const {
  auto a = segs, b = o.segs;
  auto key = [](const Segment& s) { return std::pair<int, int>(s.lo, s.hi); };
  auto cmp = [&](const Segment& x, const Segment& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

std::string Multisegment::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < segs.size(); ++i)
    os << (i ? "," : "") << "(" << segs[i].lo << ".." << segs[i].hi << ")";
  os << "]";
  return os.str();
}

Multisegment Multisegment::parse(const std::string& s) {
  Multisegment ms;
  size_t pos = 0;
  auto skip = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      throw std::runtime_error("Multisegment::parse: expected '" + std::string(1, c) +
                               "' in '" + s + "'");
    ++pos;
  };
  auto number = [&]() {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) throw std::runtime_error("Multisegment::parse: bad number");
    return std::stoi(s.substr(start, pos - start));
  };
  skip('[');
  while (pos < s.size() && s[pos] != ']') {
    if (s[pos] == ',') ++pos;
    skip('(');
    int lo = number();
    skip('.');
    skip('.');
    int hi = number();
    skip(')');
    if (lo > hi) throw std::runtime_error("Multisegment::parse: lo > hi");
    ms.segs.push_back({lo, hi});
  }
  skip(']');
  return ms;
}

Multisegment normalize(const Multisegment& ms, MsOrder order) {
  Multisegment r = ms;
  if (order == MsOrder::Right) {
    // Largest first: greater start wins; same start, shorter segment wins.
    std::stable_sort(r.segs.begin(), r.segs.end(), [](const Segment& a, const Segment& b) {
      if (a.lo != b.lo) return a.lo > b.lo;
      return a.hi < b.hi;
    });
  } else if (order == MsOrder::Left) {
    // Largest first: greater end wins; same end, smaller start wins.
    std::stable_sort(r.segs.begin(), r.segs.end(), [](const Segment& a, const Segment& b) {
      if (a.hi != b.hi) return a.hi > b.hi;
      return a.lo < b.lo;
    });
  }
  r.tag = order;
  return r;
}

namespace {

struct Marks {
  std::vector<Segment> segs;          // normalized order
  std::vector<int> surviving_minus;   // indices into segs
  std::vector<int> surviving_plus;
};

// Scan with minus as the opener: cancel "-+" pairs.
Marks scan_right(const Multisegment& ms, int a) {
  Marks mk;
  mk.segs = normalize(ms, MsOrder::Right).segs;
  std::vector<int> stack;
  for (size_t i = 0; i < mk.segs.size(); ++i) {
    if (mk.segs[i].hi == a) {
      stack.push_back((int)i);  // '-'
    } else if (mk.segs[i].hi == a - 1) {
      if (!stack.empty())
        stack.pop_back();  // cancel
      else
        mk.surviving_plus.push_back((int)i);
    }
  }
  mk.surviving_minus = stack;
  return mk;
}

// Starred scan. This is the image of the plain scan under the duality that
// reverses every segment onto the inverse line ((lo,hi) -> (-hi,-lo)), so
// segments are listed by (end ascending, start descending) and the minus
// marks open the cancellation, exactly as on the plain side.
Marks scan_left(const Multisegment& ms, int a) {
  Marks mk;
  mk.segs = ms.segs;
  std::stable_sort(mk.segs.begin(), mk.segs.end(), [](const Segment& x, const Segment& y) {
    if (x.hi != y.hi) return x.hi < y.hi;
    return x.lo > y.lo;
  });
  std::vector<int> stack;
  for (size_t i = 0; i < mk.segs.size(); ++i) {
    if (mk.segs[i].lo == a) {
      stack.push_back((int)i);  // '-'
    } else if (mk.segs[i].lo == a + 1) {
      if (!stack.empty())
        stack.pop_back();  // cancel
      else
        mk.surviving_plus.push_back((int)i);
    }
  }
  mk.surviving_minus = stack;
  return mk;
}

}  // namespace

int eps_A(const Multisegment& ms, int a) {
  return (int)scan_right(ms, a).surviving_minus.size();
}

int eps_star_A(const Multisegment& ms, int a) {
  return (int)scan_left(ms, a).surviving_minus.size();
}

std::optional<Multisegment> crystal_A(const Multisegment& ms, int a, MsOp op) {
  Marks mk = (op == MsOp::E || op == MsOp::F) ? scan_right(ms, a) : scan_left(ms, a);
  Multisegment out;
  out.segs = mk.segs;
  switch (op) {
    case MsOp::E: {
      if (mk.surviving_minus.empty()) return std::nullopt;
      int idx = mk.surviving_minus.front();  // leftmost uncanceled '-'
      out.segs[idx].hi -= 1;
      if (out.segs[idx].hi < out.segs[idx].lo) out.segs.erase(out.segs.begin() + idx);
      return normalize(out, MsOrder::Right);
    }
    case MsOp::F: {
      if (mk.surviving_plus.empty()) {
        out.segs.push_back({a, a});
      } else {
        int idx = mk.surviving_plus.back();  // rightmost uncanceled '+'
        out.segs[idx].hi += 1;
      }
      return normalize(out, MsOrder::Right);
    }
    case MsOp::Estar: {
      if (mk.surviving_minus.empty()) return std::nullopt;
      int idx = mk.surviving_minus.front();  // dual of the leftmost '-'
      out.segs[idx].lo += 1;
      if (out.segs[idx].hi < out.segs[idx].lo) out.segs.erase(out.segs.begin() + idx);
      return normalize(out, MsOrder::Left);
    }
    case MsOp::Fstar: {
      if (mk.surviving_plus.empty()) {
        out.segs.push_back({a, a});
      } else {
        int idx = mk.surviving_plus.back();  // dual of the rightmost '+'
        out.segs[idx].lo -= 1;
      }
      return normalize(out, MsOrder::Left);
    }
  }
  return std::nullopt;
}

}  // namespace hecke
