#include "hecke/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

Mat Mat::identity(int n) { return scalar(n, Scalar(1)); }

Mat Mat::scalar(int n, const Scalar& c) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("Mat: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("Mat: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::runtime_error("Mat: product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(long e) const {
  if (rows_ != cols_) throw std::runtime_error("Mat::pow: not square");
  Mat base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw std::runtime_error("Mat::pow: singular");
    base = *inv;
    e = -e;
  }
  Mat acc = identity(rows_);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug = hcat(*this, identity(rows_));
  auto piv = aug.rref();
  if ((int)piv.size() < rows_ || (piv.empty() ? rows_ > 0 : piv.back() >= rows_))
    return std::nullopt;
  Mat r(rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) r.at(i, j) = aug.at(i, rows_ + j);
  return r;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Scalar> Mat::scalar_of_identity() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  Scalar c = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? c : Scalar(0))) return std::nullopt;
  return c;
}

Mat Mat::col(int j) const {
  Mat r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Mat Mat::cols_range(int j0, int j1) const {
  Mat r(rows_, j1 - j0);
  for (int i = 0; i < rows_; ++i)
    for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
  return r;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw std::runtime_error("Mat::hcat: row mismatch");
  Mat r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    Scalar inv = at(row, col).inverse();
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat tmp = *this;
  return (int)tmp.rref().size();
}

Scalar Mat::det() const {
  if (rows_ != cols_) throw std::runtime_error("Mat::det: not square");
  Mat tmp = *this;
  Scalar d(1);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int i = col; i < rows_; ++i)
      if (!tmp.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Scalar(0);
    if (sel != col) {
      for (int j = 0; j < cols_; ++j) std::swap(tmp.at(sel, j), tmp.at(col, j));
      d = -d;
    }
    d *= tmp.at(col, col);
    Scalar inv = tmp.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (tmp.at(i, col).is_zero()) continue;
      Scalar f = tmp.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) tmp.at(i, j) -= f * tmp.at(col, j);
    }
  }
  return d;
}

Mat Mat::kernel() const {
  Mat tmp = *this;
  auto pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat K(cols_, (int)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    K.at(fc, (int)k) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) K.at(pivots[r], (int)k) = -tmp.at((int)r, fc);
  }
  return K;
}

std::vector<Scalar> Mat::charpoly() const {
  if (rows_ != cols_) throw std::runtime_error("Mat::charpoly: not square");
  int n = rows_;
  if (n == 0) return {Scalar(1)};
  // Reduce to upper Hessenberg form by similarity, then expand the
  // characteristic polynomial with the Hessenberg recurrence.
  Mat H = *this;
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int i = col + 1; i < n; ++i)
      if (!H.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, col + 1));
    }
    Scalar inv = H.at(col + 1, col).inverse();
    for (int i = col + 2; i < n; ++i) {
      if (H.at(i, col).is_zero()) continue;
      Scalar f = H.at(i, col) * inv;
      for (int j = col; j < n; ++j) H.at(i, j) -= f * H.at(col + 1, j);
      for (int k = 0; k < n; ++k) H.at(k, col + 1) += f * H.at(k, i);
    }
  }
  // p_0 = 1; p_k = charpoly of the leading k x k block of H.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar(1)};
  for (int k = 1; k <= n; ++k) {
    // p_k(t) = (t - H[k-1][k-1]) p_{k-1}(t)
    //          - sum_{m=1..k-1} H[k-1-m][k-1] (prod subdiag) p_{k-1-m}(t)
    std::vector<Scalar> acc(k + 1);
    for (int i = 0; i < k; ++i) {
      acc[i + 1] += p[k - 1][i];
      acc[i] -= H.at(k - 1, k - 1) * p[k - 1][i];
    }
    Scalar sub(1);
    for (int m = 1; m <= k - 1; ++m) {
      sub *= H.at(k - m, k - m - 1);
      if (sub.is_zero()) break;
      Scalar coef = H.at(k - 1 - m, k - 1) * sub;
      if (coef.is_zero()) continue;
      for (int i = 0; i < k - m; ++i) acc[i] -= coef * p[k - 1 - m][i];
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

std::optional<Mat> solve(const Mat& A, const Mat& b) {
  Mat aug = Mat::hcat(A, b);
  auto pivots = aug.rref();
  for (int c : pivots)
    if (c >= A.cols()) return std::nullopt;  // inconsistent
  Mat x(A.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at((int)r, A.cols() + j);
  return x;
}

bool EchelonSpace::insert(const std::vector<Scalar>& v) {
  auto r = reduce(v);
  int piv = -1;
  for (int i = 0; i < dim_; ++i)
    if (!r[i].is_zero()) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = r[piv].inverse();
  for (auto& x : r) x *= inv;
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(r));
  backsubstitute();
  return true;
}

bool EchelonSpace::insert_col(const Mat& v, int j) {
  std::vector<Scalar> x(dim_);
  for (int i = 0; i < dim_; ++i) x[i] = v.at(i, j);
  return insert(x);
}

std::vector<Scalar> EchelonSpace::reduce(std::vector<Scalar> v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int i = 0; i < dim_; ++i)
      if (!rows_[k][i].is_zero()) v[i] -= f * rows_[k][i];
  }
  return v;
}

void EchelonSpace::backsubstitute() {
  for (size_t k = 0; k < rows_.size(); ++k)
    for (size_t l = 0; l < rows_.size(); ++l) {
      if (k == l) continue;
      Scalar f = rows_[k][pivots_[l]];
      if (f.is_zero()) continue;
      for (int i = 0; i < dim_; ++i)
        if (!rows_[l][i].is_zero()) rows_[k][i] -= f * rows_[l][i];
    }
}

bool EchelonSpace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  for (auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool EchelonSpace::contains_space(const EchelonSpace& other) const {
  for (auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Mat EchelonSpace::basis() const {
  Mat B(dim_, (int)rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k)
    for (int i = 0; i < dim_; ++i) B.at(i, (int)k) = rows_[k][i];
  return B;
}

namespace {

// Divisors of |z| from trial division; the unfactored cofactor participates
// as a single unit so smooth fixtures always factor completely.
std::vector<mpz_class> divisors_of(mpz_class z, size_t cap = 200000) {
  if (z < 0) z = -z;
  std::map<mpz_class, int> fac;
  for (long pr = 2; pr <= 100000 && z > 1; pr += (pr == 2 ? 1 : 2)) {
    while (z % pr == 0) {
      ++fac[pr];
      z /= pr;
    }
    mpz_class sq = mpz_class(pr) * pr;
    if (sq > z) break;
  }
  if (z > 1) ++fac[z];
  std::vector<mpz_class> divs{1};
  for (auto& [prime, e] : fac) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > cap) return divs;
      }
    }
  }
  return divs;
}

Scalar horner(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides poly by (x - r); poly must be divisible.
std::vector<Scalar> deflate(const std::vector<Scalar>& poly, const Scalar& r) {
  int d = (int)poly.size() - 1;
  std::vector<Scalar> out(d);
  Scalar carry(0);
  for (int k = d; k >= 1; --k) {
    out[k - 1] = poly[k] + carry;
    carry = out[k - 1] * r;
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(std::vector<Scalar> poly) {
  RationalRoots res;
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.empty()) throw std::runtime_error("rational_roots: zero polynomial");
  while (poly.size() > 1 && poly.front().is_zero()) {
    res.roots.push_back(Scalar(0));
    poly.erase(poly.begin());
  }
  auto dedup = [&res]() {
    std::sort(res.roots.begin(), res.roots.end());
    res.roots.erase(std::unique(res.roots.begin(), res.roots.end()), res.roots.end());
  };
  if (poly.size() == 1) {
    res.complete = true;
    dedup();
    return res;
  }
  while (poly.size() > 1) {
    if (poly.size() == 2) {  // linear: root = -c0/c1
      res.roots.push_back(-(poly[0] / poly[1]));
      poly = {Scalar(1)};
      break;
    }
    // Clear denominators to an integer polynomial.
    mpz_class denlcm = 1;
    for (auto& c : poly) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ip;
    for (auto& c : poly) ip.push_back(c.num() * (denlcm / c.den()));
    auto nums = divisors_of(ip.front());
    auto dens = divisors_of(ip.back());
    bool found = false;
    for (auto& nu : nums) {
      for (auto& de : dens) {
        for (int sign = 1; sign >= -1 && !found; sign -= 2) {
          Scalar cand(mpq_class(sign * nu, de));
          if (horner(poly, cand).is_zero()) {
            res.roots.push_back(cand);
            while (poly.size() > 1 && horner(poly, cand).is_zero())
              poly = deflate(poly, cand);
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      res.complete = false;
      res.leftover = poly;
      dedup();
      return res;
    }
  }
  res.complete = true;
  dedup();
  return res;
}

}  // namespace hecke
