#include "ipdensity/lattice.hpp"

#include <algorithm>

namespace ipd {

namespace {

// g = ax + by with g = gcd(a, b) >= 0.
void xgcd(Int a, Int b, Int& g, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  g = a;
  x = x0;
  y = y0;
}

Int floor_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  std::size_t k = 0;  // frontier: next pivot column
  for (std::size_t r = 0; r < m; ++r) {
    if (k >= n) throw RankError("hermite_normal_form requires full row rank");
    // bring a nonzero entry to (r, k)
    std::size_t p = k;
    while (p < n && h(r, p) == 0) ++p;
    if (p == n) throw RankError("hermite_normal_form requires full row rank");
    if (p != k) h.swap_cols(k, p);
    // gcd column operations clear row r to the right of the pivot
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h(r, j) == 0) continue;
      Int g, x, y;
      xgcd(h(r, k), h(r, j), g, x, y);
      Int ak = h(r, k) / g, aj = h(r, j) / g;
      for (std::size_t i = r; i < m; ++i) {
        Int ck = h(i, k), cj = h(i, j);
        h(i, k) = x * ck + y * cj;
        h(i, j) = ak * cj - aj * ck;
      }
    }
    if (h(r, k) < 0)
      for (std::size_t i = r; i < m; ++i) h(i, k) = -h(i, k);
    // reduce earlier columns so 0 <= h(r, j) < h(r, k) for j < k
    for (std::size_t j = 0; j < k; ++j) {
      Int q = floor_div(h(r, j), h(r, k));
      if (q == 0) continue;
      for (std::size_t i = r; i < m; ++i) h(i, j) -= q * h(i, k);
    }
    ++k;
  }
  IntMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = h(i, j);
  return out;
}

LatticeBasis::LatticeBasis(IntMatrix hnf) : basis_(std::move(hnf)) {
  det_ = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) det_ *= basis_(i, i);
}

LatticeBasis LatticeBasis::from_columns(const IntMatrix& generators) {
  return LatticeBasis(hermite_normal_form(generators));
}

std::optional<IntVec> LatticeBasis::coordinates(const IntVec& b) const {
  const std::size_t m = dim();
  if (b.size() != m) throw DimensionError("lattice coordinate size mismatch");
  IntVec y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Int rhs = b[i];
    for (std::size_t j = 0; j < i; ++j) rhs -= basis_(i, j) * y[j];
    Int q, r;
    boost::multiprecision::divide_qr(rhs, basis_(i, i), q, r);
    if (r != 0) return std::nullopt;
    y[i] = q;
  }
  return y;
}

bool LatticeBasis::member(const IntVec& b) const { return coordinates(b).has_value(); }

LatticeBasis lattice_of_columns(const IntMatrix& a) { return LatticeBasis::from_columns(a); }

bool lattice_member(const LatticeBasis& l, const IntVec& b) { return l.member(b); }

SmithForm smith_normal_form(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("smith_normal_form of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix w = m;
  IntMatrix u = IntMatrix::identity(n);
  using boost::multiprecision::abs;

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block to (t, t)
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (w(i, j) != 0 && (pi == n || abs(w(i, j)) < abs(w(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw RankError("smith_normal_form requires nonsingular input");
      if (pi != t) {
        w.swap_rows(t, pi);
        u.swap_rows(t, pi);
      }
      if (pj != t) w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (w(i, t) == 0) continue;
        Int q = w(i, t) / w(t, t);
        if (q != 0)
          for (std::size_t j = 0; j < n; ++j) {
            w(i, j) -= q * w(t, j);
            u(i, j) -= q * u(t, j);
          }
        if (w(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w(t, j) == 0) continue;
        Int q = w(t, j) / w(t, t);
        if (q != 0)
          for (std::size_t i = 0; i < n; ++i) w(i, j) -= q * w(i, t);
        if (w(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // pivot shrank; run the elimination again

      // divisibility: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (w(i, j) % w(t, t) != 0) {
            for (std::size_t jj = 0; jj < n; ++jj) {
              w(t, jj) += w(i, jj);
              u(t, jj) += u(i, jj);
            }
            divides = false;
          }
      if (divides) break;
    }
    if (w(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        w(t, j) = -w(t, j);
        u(t, j) = -u(t, j);
      }
    }
  }

  SmithForm s;
  s.u = std::move(u);
  s.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.diagonal[i] = w(i, i);
  return s;
}

QuotientGroup::QuotientGroup(LatticeBasis superlattice, const IntMatrix& b) : super_(std::move(superlattice)) {
  const std::size_t m = super_.dim();
  if (b.rows() != m || b.cols() != m) throw DimensionError("sublattice matrix must be m x m");
  // transition matrix: columns of B in superlattice coordinates
  IntMatrix t(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto y = super_.coordinates(b.col(j));
    if (!y) throw ContainmentError("sublattice generator outside the superlattice");
    for (std::size_t i = 0; i < m; ++i) t(i, j) = (*y)[i];
  }
  if (determinant(t) == 0) throw RankError("sublattice must have full rank");
  sub_ = LatticeBasis::from_columns(b);
  smith_ = smith_normal_form(t);
  factors_ = smith_.diagonal;
  order_ = 1;
  for (const auto& d : factors_) order_ *= d;
}

ResidueId QuotientGroup::residue_of(const IntVec& b) const {
  auto y = super_.coordinates(b);
  if (!y) throw MembershipError("vector outside the superlattice");
  const std::size_t m = factors_.size();
  ResidueId r(m);
  for (std::size_t i = 0; i < m; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < m; ++j) s += smith_.u(i, j) * (*y)[j];
    s %= factors_[i];
    if (s < 0) s += factors_[i];
    r[i] = std::move(s);
  }
  return r;
}

ResidueId QuotientGroup::add(const ResidueId& x, const ResidueId& y) const {
  const std::size_t m = factors_.size();
  ResidueId r(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = x[i] + y[i];
    if (r[i] >= factors_[i]) r[i] -= factors_[i];
  }
  return r;
}

std::vector<ResidueId> QuotientGroup::enumerate() const {
  if (order_ > 10'000'000) throw ResourceError("quotient group too large to enumerate");
  std::vector<ResidueId> out;
  out.reserve(static_cast<std::size_t>(order_));
  const std::size_t m = factors_.size();
  ResidueId cur(m, Int(0));
  while (true) {
    out.push_back(cur);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

}  // namespace ipd
