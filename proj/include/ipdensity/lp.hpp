#pragma once

#include <vector>

#include "ipdensity/lattice.hpp"
#include "ipdensity/matrix.hpp"

namespace ipd {

enum class LPStatus { optimal, infeasible, unbounded };

/// Outcome of one exact simplex run on max{c.x : Ax = b, x >= 0}.
struct SimplexOutcome {
  LPStatus status = LPStatus::infeasible;
  RatVec x;                          // full-length primal point (optimal only)
  Rat value;
  std::vector<std::size_t> basis;    // basic column indices
};

/// Two-phase dense tableau simplex with Bland's rule. Exact rational
/// arithmetic throughout; terminates on all inputs.
SimplexOutcome simplex_solve(const IntMatrix& a, const IntVec& b, const RatVec& c);

/// An m-column basis of A with nonpositive reduced costs: LP-optimal for
/// every right hand side in its cone.
struct BasisInfo {
  std::vector<std::size_t> columns;       // sorted ascending
  IntMatrix matrix;                       // the m x m submatrix
  Int det;                                // signed determinant
  Int det_abs;
  IntMatrix adj;                          // adjugate, for integer cone tests
  RatMatrix inv;                          // exact inverse
  std::vector<std::size_t> nonbasic;
  RatVec reduced_costs;                   // aligned with nonbasic
  bool is_optimal = false;
  bool is_unique_optimal = false;         // all reduced costs strictly negative
};

/// True iff B^{-1} b >= 0, tested in integer arithmetic via the adjugate.
bool cone_member(const BasisInfo& b, const IntVec& rhs);

/// Fixed constraint matrix and objective; validated once, immutable after.
class Instance {
 public:
  /// Checks rank(A) = m and the recession condition
  /// max{c.x : Ax = 0, 0 <= x <= 1} = 0, then caches the minor summary,
  /// the column lattice, and the optimal LP bases.
  static Instance validate(IntMatrix a, RatVec c);

  const IntMatrix& a() const { return a_; }
  const RatVec& c() const { return c_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }

  const MinorSummary& minors() const { return minors_; }
  const LatticeBasis& lattice() const { return lattice_; }
  const std::vector<BasisInfo>& optimal_bases() const { return bases_; }
  bool unique_lp_optima() const { return unique_lp_; }

  /// gamma^{-1} * delta, the normalized largest minor.
  Int normalized_delta() const { return minors_.delta / minors_.gamma; }

  /// m (2m+2)^m delta: every feasible right hand side admits an optimal
  /// integer solution within this L1 distance of any optimal LP vertex.
  const Int& proximity_bound() const { return proximity_; }

  bool objective_is_zero() const;

 private:
  Instance() = default;
  IntMatrix a_;
  RatVec c_;
  MinorSummary minors_;
  LatticeBasis lattice_ = LatticeBasis::from_columns(IntMatrix::identity(1));
  std::vector<BasisInfo> bases_;
  bool unique_lp_ = false;
  Int proximity_;
};

inline Instance validate_instance(IntMatrix a, RatVec c) { return Instance::validate(std::move(a), std::move(c)); }

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  RatVec vertex;
  Rat value;
  std::vector<std::size_t> basis;
};

/// Exact LP(b). Unbounded is impossible for validated instances.
LPSolution solve_lp(const Instance& inst, const IntVec& b);

/// All m-column subsets with nonzero determinant and componentwise
/// nonpositive reduced costs, ordered by column tuple.
std::vector<BasisInfo> enumerate_optimal_bases(const IntMatrix& a, const RatVec& c);

/// Feasibility of LP(b), i.e. membership of b in cone(A).
bool in_cone_of_A(const Instance& inst, const IntVec& b);

/// All optimal vertex solutions of LP(b), deduplicated, in lexicographically
/// increasing order. Empty when LP(b) is infeasible.
std::vector<RatVec> optimal_vertices(const Instance& inst, const IntVec& b);

/// The lexicographically greatest optimal vertex: the optimum selected by an
/// infinitesimal rank-ordered perturbation of the objective.
RatVec lexmax_optimal_vertex(const Instance& inst, const IntVec& b);

}  // namespace ipd
