#include "ipdensity/lp.hpp"

#include <algorithm>

namespace ipd {

namespace {

// Dense tableau over Q. Rows are constraints, the last column is the rhs.
class Tableau {
 public:
  Tableau(const IntMatrix& a, const IntVec& b) : m_(a.rows()), n_(a.cols()) {
    rows_.assign(m_, RatVec(n_ + m_ + 1));
    basic_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool neg = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = neg ? Rat(-a(i, j)) : Rat(a(i, j));
      rows_[i][n_ + i] = 1;  // artificial
      rows_[i].back() = neg ? Rat(-b[i]) : Rat(b[i]);
      basic_[i] = n_ + i;
    }
  }

  // Maximize the objective given by per-column coefficients (length cols()).
  // Returns false when unbounded.
  bool run(const RatVec& obj, std::size_t active_cols) {
    red_.assign(active_cols, Rat(0));
    value_ = 0;
    for (std::size_t j = 0; j < active_cols; ++j) {
      Rat r = obj[j];
      for (std::size_t i = 0; i < m_; ++i)
        if (obj[basic_[i]] != 0) r -= obj[basic_[i]] * rows_[i][j];
      red_[j] = std::move(r);
    }
    for (std::size_t i = 0; i < m_; ++i) value_ += obj[basic_[i]] * rows_[i].back();

    while (true) {
      // Bland: entering column = lowest index with positive reduced cost
      std::size_t enter = active_cols;
      for (std::size_t j = 0; j < active_cols; ++j)
        if (red_[j] > 0 && !is_basic(j)) {
          enter = j;
          break;
        }
      if (enter == active_cols) return true;

      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i].back() / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter, active_cols);
    }
  }

  void pivot(std::size_t r, std::size_t jcol, std::size_t active_cols) {
    Rat p = rows_[r][jcol];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][jcol] == 0) continue;
      Rat f = rows_[i][jcol];
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    Rat f = red_[jcol];
    if (f != 0) {
      for (std::size_t j = 0; j < active_cols; ++j)
        if (rows_[r][j] != 0) red_[j] -= f * rows_[r][j];
      value_ += f * rows_[r].back();
    }
    basic_[r] = jcol;
  }

  bool is_basic(std::size_t j) const {
    return std::find(basic_.begin(), basic_.end(), j) != basic_.end();
  }

  // Pivot artificial variables out of the basis; drops redundant rows.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basic_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && rows_[i][j] == 0) ++j;
      if (j < n_) {
        red_.assign(n_ + m_ + 1, Rat(0));  // placeholder; rerun sets it
        pivot(i, j, 0);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& basic() const { return basic_; }
  const Rat& rhs(std::size_t i) const { return rows_[i].back(); }
  const Rat& value() const { return value_; }

 private:
  std::size_t m_, n_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> basic_;
  RatVec red_;
  Rat value_;
};

}  // namespace

SimplexOutcome simplex_solve(const IntMatrix& a, const IntVec& b, const RatVec& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw DimensionError("simplex input size mismatch");
  Tableau t(a, b);

  // Phase 1: drive the artificial variables to zero.
  RatVec phase1(n + m + 1, Rat(0));
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
  t.run(phase1, n + m);
  SimplexOutcome out;
  if (t.value() < 0) {
    out.status = LPStatus::infeasible;
    return out;
  }
  t.purge_artificials();

  // Phase 2 over the original columns only.
  RatVec phase2(n + m + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!t.run(phase2, n)) {
    out.status = LPStatus::unbounded;
    return out;
  }
  out.status = LPStatus::optimal;
  out.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.m(); ++i)
    if (t.basic()[i] < n) out.x[t.basic()[i]] = t.rhs(i);
  out.value = t.value();
  out.basis.clear();
  for (auto j : t.basic())
    if (j < n) out.basis.push_back(j);
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

bool cone_member(const BasisInfo& b, const IntVec& rhs) {
  IntVec w = b.adj.mul(rhs);
  if (b.det > 0) {
    for (const auto& x : w)
      if (x < 0) return false;
  } else {
    for (const auto& x : w)
      if (x > 0) return false;
  }
  return true;
}

std::vector<BasisInfo> enumerate_optimal_bases(const IntMatrix& a, const RatVec& c) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<BasisInfo> out;
  for (const auto& idx : subsets_of_size(n, m)) {
    IntMatrix sub = a.select_columns(idx);
    Int det = determinant(sub);
    if (det == 0) continue;
    BasisInfo info;
    info.columns = idx;
    info.matrix = std::move(sub);
    info.det = det;
    info.det_abs = boost::multiprecision::abs(det);
    info.adj = adjugate(info.matrix);
    const std::size_t mm = m;
    info.inv = RatMatrix(mm, mm);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j) info.inv(i, j) = make_rat(info.adj(i, j), det);
    info.is_optimal = true;
    info.is_unique_optimal = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      RatVec binv_aj = info.inv.mul(a.col(j));
      Rat r = c[j];
      for (std::size_t i = 0; i < mm; ++i) r -= c[idx[i]] * binv_aj[i];
      info.nonbasic.push_back(j);
      info.reduced_costs.push_back(r);
      if (r > 0) info.is_optimal = false;
      if (r >= 0) info.is_unique_optimal = false;
    }
    if (info.is_optimal) out.push_back(std::move(info));
  }
  return out;
}

Instance Instance::validate(IntMatrix a, RatVec c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (c.size() != n) throw DimensionError("objective length must equal column count");
  if (m == 0 || n == 0) throw DimensionError("empty constraint matrix");
  if (rank(a) < m) throw RankError("constraint matrix must have full row rank");

  // Recession condition: max{c.x : Ax = 0, 0 <= x <= 1} must be 0.
  // Standard form with slacks: [A 0; I I] (x, s) = (0, 1).
  IntMatrix sys(m + n, 2 * n);
  IntVec rhs(m + n, Int(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = a(i, j);
  for (std::size_t j = 0; j < n; ++j) {
    sys(m + j, j) = 1;
    sys(m + j, n + j) = 1;
    rhs[m + j] = 1;
  }
  RatVec obj(2 * n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  SimplexOutcome rec = simplex_solve(sys, rhs, obj);
  if (rec.status != LPStatus::optimal || rec.value != 0)
    throw InvalidObjectiveError("recession condition violated: a nonnegative kernel ray has positive objective");

  Instance inst;
  inst.a_ = std::move(a);
  inst.c_ = std::move(c);
  inst.minors_ = minor_summary(inst.a_);
  inst.lattice_ = lattice_of_columns(inst.a_);
  inst.bases_ = enumerate_optimal_bases(inst.a_, inst.c_);
  inst.unique_lp_ = !inst.bases_.empty();
  for (const auto& b : inst.bases_)
    if (!b.is_unique_optimal) inst.unique_lp_ = false;
  Int box = 2 * Int(m) + 2;
  inst.proximity_ = Int(m) * ipow(box, static_cast<unsigned>(m)) * inst.minors_.delta;
  return inst;
}

bool Instance::objective_is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

LPSolution solve_lp(const Instance& inst, const IntVec& b) {
  if (b.size() != inst.m()) throw DimensionError("right hand side size mismatch");
  SimplexOutcome s = simplex_solve(inst.a(), b, inst.c());
  LPSolution out;
  out.status = s.status;
  if (s.status == LPStatus::optimal) {
    out.vertex = std::move(s.x);
    out.value = std::move(s.value);
    out.basis = std::move(s.basis);
  }
  return out;
}

bool in_cone_of_A(const Instance& inst, const IntVec& b) {
  RatVec zero(inst.n(), Rat(0));
  return simplex_solve(inst.a(), b, zero).status == LPStatus::optimal;
}

std::vector<RatVec> optimal_vertices(const Instance& inst, const IntVec& b) {
  std::vector<RatVec> out;
  for (const auto& basis : inst.optimal_bases()) {
    if (!cone_member(basis, b)) continue;
    RatVec basic = basis.inv.mul(b);
    RatVec v(inst.n(), Rat(0));
    for (std::size_t i = 0; i < basis.columns.size(); ++i) v[basis.columns[i]] = basic[i];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RatVec lexmax_optimal_vertex(const Instance& inst, const IntVec& b) {
  auto vs = optimal_vertices(inst, b);
  if (vs.empty()) throw Error("lexmax_optimal_vertex on an LP-infeasible right hand side");
  return vs.back();
}

}  // namespace ipd
