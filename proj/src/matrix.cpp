#include "ipdensity/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ipd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntVec IntMatrix::mul(const IntVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = std::move(s);
  }
  return y;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: exact division by the previous pivot.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Int f1 = a(r, c), f2 = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) = a(i, j) * f1 - a(r, j) * f2;
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance to the next combination
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

MinorSummary minor_summary(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (n < m || rank(a) < m) throw RankError("minor_summary requires rank(A) = m");
  MinorSummary s;
  s.delta = 0;
  s.gamma = 0;
  s.eta = 0;
  for (const auto& idx : subsets_of_size(n, m)) {
    Int d = boost::multiprecision::abs(determinant(a.select_columns(idx)));
    if (d == 0) continue;
    ++s.count_nonsingular;
    if (d > s.delta) s.delta = d;
    if (s.eta == 0 || d < s.eta) s.eta = d;
    s.gamma = boost::multiprecision::gcd(s.gamma, d);
  }
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * Rat(b[i]);
  return s;
}

Int l1_norm(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s += boost::multiprecision::abs(x);
  return s;
}

Int linf_norm(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s = std::max(s, Int(boost::multiprecision::abs(x)));
  return s;
}

Rat l1_dist(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("distance size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += boost::multiprecision::abs(Rat(a[i] - b[i]));
  return s;
}

Rat linf_dist(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("distance size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, Rat(boost::multiprecision::abs(Rat(a[i] - b[i]))));
  return s;
}

std::size_t support_size(const IntVec& v) {
  std::size_t k = 0;
  for (const auto& x : v)
    if (x != 0) ++k;
  return k;
}

RatVec RatMatrix::mul(const IntVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RatVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (x[j] != 0) s += (*this)(i, j) * Rat(x[j]);
    y[i] = std::move(s);
  }
  return y;
}

RatVec RatMatrix::mul(const RatVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RatVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = std::move(s);
  }
  return y;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;  // adj = transpose of cofactor matrix
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      Int d = determinant(minor);
      adj(i, j) = (((i + j) % 2) ? -d : d);
    }
  return adj;
}

RatMatrix inverse(const IntMatrix& m) {
  Int d = determinant(m);
  if (d == 0) throw RankError("inverse of singular matrix");
  IntMatrix adj = adjugate(m);
  const std::size_t n = m.rows();
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = make_rat(adj(i, j), d);
  return inv;
}

}  // namespace ipd
