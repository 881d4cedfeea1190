#include "s3hopf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace s3hopf {

RatMat mat_zero(int r, int c) { return RatMat(r, RatVec(c, Rat(0))); }

RatMat mat_identity(int n) {
  RatMat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  int r = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int c = k ? static_cast<int>(b[0].size()) : 0;
  RatMat m = mat_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (int j = 0; j < c; ++j) {
        if (is_zero(b[l][j])) continue;
        m[i][j] += a[i][l] * b[l][j];
      }
    }
  return m;
}

RatVec mat_apply(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (is_zero(a[i][j]) || is_zero(v[j])) continue;
      r[i] += a[i][j] * v[j];
    }
  return r;
}

RatMat mat_add(const RatMat& a, const RatMat& b) {
  RatMat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
  return m;
}

RatMat mat_scale(const RatMat& a, const Rat& c) {
  RatMat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

RatMat mat_transpose(const RatMat& a) {
  if (a.empty()) return a;
  RatMat m = mat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m[j][i] = a[i][j];
  return m;
}

bool mat_is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!is_zero(x)) return false;
  return true;
}

Rat mat_trace_of_product(const RatMat& a, const RatMat& b) {
  Rat t(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(a[i][j]) || is_zero(b[j][i])) continue;
      t += a[i][j] * b[j][i];
    }
  return t;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p == -1) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

RatMat nullspace(const RatMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  RatMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RatMat& m, const RatVec& b, RatVec& x) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RatMat aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  RatMat e = aug;
  std::vector<int> pivots = rref(e);
  x.assign(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return false;  // pivot in the constant column
    x[pivots[r]] = e[r][cols];
  }
  return true;
}

bool invert(const RatMat& m, RatMat& inv) {
  int n = static_cast<int>(m.size());
  RatMat aug = m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return false;
  inv = mat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return true;
}

Rat det(RatMat m) {
  int n = static_cast<int>(m.size());
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p == -1) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      Rat f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

void Echelon::reduce(RatVec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (is_zero(c)) continue;
    Rat f = c;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
  }
}

bool Echelon::add(RatVec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Echelon::add: wrong length");
  reduce(v);
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(v[j])) {
      p = j;
      break;
    }
  if (p == -1) return false;
  Rat inv = Rat(1) / v[p];
  for (int j = 0; j < ambient_; ++j) v[j] *= inv;
  // back-substitute into existing rows to stay fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][p];
    if (is_zero(f)) continue;
    for (int j = 0; j < ambient_; ++j) rows_[r][j] -= f * v[j];
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

bool Echelon::contains(RatVec v) const {
  reduce(v);
  for (const Rat& x : v)
    if (!is_zero(x)) return false;
  return true;
}

bool Echelon::contains(const Echelon& other) const {
  for (const RatVec& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Echelon::operator==(const Echelon& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

bool Echelon::operator<(const Echelon& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (int j = 0; j < ambient_; ++j) {
      if (rows_[i][j] == o.rows_[i][j]) continue;
      return rows_[i][j] < o.rows_[i][j];
    }
  return false;
}

Echelon span_of(int ambient, const std::vector<RatVec>& vecs) {
  Echelon e(ambient);
  for (const RatVec& v : vecs) e.add(v);
  return e;
}

Echelon ech_sum(const Echelon& a, const Echelon& b) {
  Echelon e = a;
  for (const RatVec& r : b.rows()) e.add(r);
  return e;
}

Echelon ech_intersect(const Echelon& a, const Echelon& b) {
  // Zassenhaus: row reduce [A A; B 0]; intersection appears in the right
  // block of rows whose left block vanished.
  int n = a.ambient();
  RatMat m;
  for (const RatVec& r : a.rows()) {
    RatVec row = r;
    row.insert(row.end(), r.begin(), r.end());
    m.push_back(std::move(row));
  }
  for (const RatVec& r : b.rows()) {
    RatVec row = r;
    row.resize(2 * n, Rat(0));
    m.push_back(std::move(row));
  }
  rref(m);
  Echelon e(n);
  for (const RatVec& row : m) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (!is_zero(row[j])) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    RatVec right(row.begin() + n, row.end());
    e.add(std::move(right));
  }
  return e;
}

}  // namespace s3hopf
