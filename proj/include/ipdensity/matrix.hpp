#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ipdensity/errors.hpp"
#include "ipdensity/numeric.hpp"

namespace ipd {

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntVec col(std::size_t j) const;
  IntVec row(std::size_t i) const;

  /// Submatrix formed by the given column indices, in the given order.
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

  IntMatrix transpose() const;

  void swap_cols(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);

  IntVec mul(const IntVec& x) const;

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over Q, computed exactly by integer elimination.
std::size_t rank(const IntMatrix& m);

/// delta / gamma / eta over all nonsingular m x m column submatrices.
struct MinorSummary {
  Int delta;                    // max |det|
  Int gamma;                    // gcd of |det|
  Int eta;                      // min positive |det|
  std::size_t count_nonsingular = 0;
};

/// Enumerates all C(n, m) column subsets. Throws RankError when rank(A) < m.
MinorSummary minor_summary(const IntMatrix& a);

/// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

// --- small vector helpers -------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);

Int l1_norm(const IntVec& v);
Int linf_norm(const IntVec& v);
Rat l1_dist(const RatVec& a, const IntVec& b);
Rat linf_dist(const RatVec& a, const IntVec& b);

std::size_t support_size(const IntVec& v);

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Dense rational matrix (used for exact basis inverses).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatVec mul(const IntVec& x) const;
  RatVec mul(const RatVec& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

/// Exact inverse of a nonsingular square integer matrix.
RatMatrix inverse(const IntMatrix& m);

/// Adjugate: adj(M) = det(M) * M^{-1}, integer entries.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace ipd
