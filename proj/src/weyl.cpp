#include "hecke/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

WeylElem WeylElem::identity(int n) {
  WeylElem w;
  w.win_.resize(n);
  for (int i = 0; i < n; ++i) w.win_[i] = i + 1;
  return w;
}

WeylElem WeylElem::gen(int n, int i) {
  if (i < 0 || i >= n) throw std::runtime_error("WeylElem::gen: index out of range");
  WeylElem w = identity(n);
  if (i == 0) {
    w.win_[0] = -1;
  } else {
    std::swap(w.win_[i - 1], w.win_[i]);
  }
  return w;
}

WeylElem WeylElem::from_word(int n, const std::vector<int>& word) {
  WeylElem w = identity(n);
  for (int i : word) w = w.mul_gen_right(i);
  return w;
}

WeylElem WeylElem::from_window(std::vector<int> win) {
  int n = (int)win.size();
  std::vector<bool> seen(n, false);
  for (int v : win) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[a - 1])
      throw std::runtime_error("WeylElem: invalid window");
    seen[a - 1] = true;
  }
  WeylElem w;
  w.win_ = std::move(win);
  return w;
}

int WeylElem::map(int i) const {
  if (i > 0) return win_[i - 1];
  return -win_[-i - 1];
}

bool WeylElem::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (win_[i] != i + 1) return false;
  return true;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  WeylElem r;
  r.win_.resize(n());
  for (int i = 1; i <= n(); ++i) r.win_[i - 1] = map(o.map(i));
  return r;
}

WeylElem WeylElem::inverse() const {
  WeylElem r;
  r.win_.resize(n());
  for (int i = 1; i <= n(); ++i) {
    int j = win_[i - 1];
    if (j > 0)
      r.win_[j - 1] = i;
    else
      r.win_[-j - 1] = -i;
  }
  return r;
}

bool WeylElem::right_descent(int i) const {
  if (i == 0) return win_[0] < 0;
  return win_[i - 1] > win_[i];
}

bool WeylElem::left_descent(int i) const { return inverse().right_descent(i); }

WeylElem WeylElem::mul_gen_right(int i) const {
  WeylElem r = *this;
  if (i == 0)
    r.win_[0] = -r.win_[0];
  else
    std::swap(r.win_[i - 1], r.win_[i]);
  return r;
}

WeylElem WeylElem::mul_gen_left(int i) const {
  WeylElem r = *this;
  for (auto& v : r.win_) {
    int a = v < 0 ? -v : v;
    if (i == 0) {
      if (a == 1) v = -v;
    } else {
      if (a == i)
        v = (v < 0 ? -(i + 1) : i + 1);
      else if (a == i + 1)
        v = (v < 0 ? -i : i);
    }
  }
  return r;
}

std::vector<int> WeylElem::reduced_word() const {
  std::vector<int> rev;
  WeylElem w = *this;
  while (!w.is_identity()) {
    int d = -1;
    for (int i = 0; i < w.n(); ++i)
      if (w.right_descent(i)) {
        d = i;
        break;
      }
    rev.push_back(d);
    w = w.mul_gen_right(d);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

int WeylElem::length() const { return (int)reduced_word().size(); }

std::string WeylElem::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << win_[i];
  os << "]";
  return os.str();
}

std::string WeylElem::word_str() const {
  std::ostringstream os;
  os << "[";
  auto word = reduced_word();
  for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  os << "]";
  return os.str();
}

int ParabolicShape::total() const {
  int t = has_b ? m0 : 0;
  for (int m : parts) t += m;
  return t;
}

std::vector<int> ParabolicShape::gens() const {
  std::vector<int> I;
  int pos = 0;
  if (has_b) {
    for (int i = 0; i < m0; ++i) I.push_back(i);
    pos = m0;
  }
  for (int m : parts) {
    for (int i = pos + 1; i < pos + m; ++i) I.push_back(i);
    pos += m;
  }
  return I;
}

ParabolicShape ParabolicShape::from_gens(int n, const std::vector<int>& I, bool has_b) {
  std::vector<bool> in(n, false);
  for (int i : I) {
    if (i < 0 || i >= n) throw std::runtime_error("ParabolicShape: bad generator");
    in[i] = true;
  }
  ParabolicShape s;
  s.has_b = has_b;
  // B block: maximal run of generators starting at 0.
  int pos = 0;
  if (has_b) {
    int m0 = 0;
    while (m0 < n && in[m0]) ++m0;
    s.m0 = m0;
    pos = m0;
  }
  // Remaining positions split into A blocks at every absent "wall" index.
  while (pos < n) {
    int len = 1;
    while (pos + len <= n - 1 && in[pos + len]) ++len;
    s.parts.push_back(len);
    pos += len;
  }
  return s;
}

std::string ParabolicShape::str() const {
  std::ostringstream os;
  os << "(";
  if (has_b) os << m0 << ";";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

namespace {

struct ByLengthLex {
  bool operator()(const WeylElem& a, const WeylElem& b) const {
    auto wa = a.reduced_word(), wb = b.reduced_word();
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    if (wa != wb) return wa < wb;
    return a < b;
  }
};

std::vector<WeylElem> bfs_closure(int n, const std::vector<int>& gens) {
  std::set<WeylElem> seen;
  std::vector<WeylElem> queue{WeylElem::identity(n)};
  seen.insert(queue[0]);
  for (size_t h = 0; h < queue.size(); ++h) {
    for (int i : gens) {
      WeylElem next = queue[h].mul_gen_right(i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end(), ByLengthLex{});
  return queue;
}

}  // namespace

std::vector<WeylElem> enumerate_group(int n) {
  if (n < 0 || n > kMaxWeylRank)
    throw std::runtime_error("enumerate_group: rank bound exceeded");
  std::vector<int> gens;
  for (int i = 0; i < n; ++i) gens.push_back(i);
  return bfs_closure(n, gens);
}

std::vector<WeylElem> enumerate_parabolic(int n, const std::vector<int>& I) {
  if (n < 0 || n > kMaxWeylRank)
    throw std::runtime_error("enumerate_parabolic: rank bound exceeded");
  return bfs_closure(n, I);
}

std::vector<WeylElem> min_coset_reps_in(const std::vector<WeylElem>& WJ,
                                        const std::vector<int>& I, CosetSide side) {
  std::vector<WeylElem> reps;
  for (const auto& w : WJ) {
    bool ok = true;
    for (int i : I) {
      bool desc = side == CosetSide::Left ? w.right_descent(i) : w.left_descent(i);
      if (desc) {
        ok = false;
        break;
      }
    }
    if (ok) reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), ByLengthLex{});
  return reps;
}

std::vector<WeylElem> min_coset_reps(int n, const std::vector<int>& I, CosetSide side) {
  return min_coset_reps_in(enumerate_group(n), I, side);
}

std::vector<WeylElem> double_coset_reps(int n, const std::vector<int>& I,
                                        const std::vector<int>& J) {
  std::vector<WeylElem> reps;
  for (const auto& w : enumerate_group(n)) {
    bool ok = true;
    for (int i : I)
      if (w.left_descent(i)) {
        ok = false;
        break;
      }
    if (ok)
      for (int j : J)
        if (w.right_descent(j)) {
          ok = false;
          break;
        }
    if (ok) reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), ByLengthLex{});
  return reps;
}

WeylElem longest_element(int n) {
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = -(i + 1);
  return WeylElem::from_window(win);
}

WeylElem longest_element_parabolic(int n, const std::vector<int>& I) {
  auto WI = enumerate_parabolic(n, I);
  return WI.back();
}

WeylElem longest_double_rep(int n, const std::vector<int>& I) {
  auto reps = double_coset_reps(n, I, I);
  return reps.back();
}

std::pair<WeylElem, WeylElem> parabolic_decompose(const WeylElem& w,
                                                  const std::vector<int>& I) {
  WeylElem d = w;
  std::vector<int> word_rev;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : I)
      if (d.right_descent(i)) {
        word_rev.push_back(i);
        d = d.mul_gen_right(i);
        progress = true;
        break;
      }
  }
  WeylElem u = WeylElem::identity(w.n());
  for (auto it = word_rev.rbegin(); it != word_rev.rend(); ++it)
    u = u.mul_gen_right(*it);
  return {d, u};
}

namespace {

void gen_act(int i, Weight& c, int lat_min) {
  if (lat_min == 0) {
    if (i == 0) {
      c.e[1] = c.e[0] - c.e[1];
    } else {
      std::swap(c.e[i], c.e[i + 1]);
    }
  } else {
    if (i == 0) {
      c.e[0] = -c.e[0];
    } else {
      std::swap(c.e[i - 1], c.e[i]);
    }
  }
}

}  // namespace

Weight act_on_weight(const WeylElem& w, const Weight& c, int lat_min) {
  auto word = w.reduced_word();
  Weight r = c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) gen_act(*it, r, lat_min);
  return r;
}

int conjugate_generator(const WeylElem& x, int i) {
  WeylElem y = x.inverse() * WeylElem::gen(x.n(), i) * x;
  for (int j = 0; j < x.n(); ++j)
    if (y == WeylElem::gen(x.n(), j)) return j;
  return -1;
}

std::vector<int> cap_subset(const WeylElem& x, const std::vector<int>& I,
                            const std::vector<int>& J, int n) {
  std::vector<int> K;
  WeylElem xinv = x.inverse();
  for (int i : I) {
    WeylElem y = xinv * WeylElem::gen(n, i) * x;
    // y lies in W_J iff its distinguished coset factor is trivial.
    if (parabolic_decompose(y, J).first.is_identity()) K.push_back(i);
  }
  return K;
}

}  // namespace hecke
