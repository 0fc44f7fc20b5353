#pragma once

#include <optional>

#include "ipdensity/lp.hpp"

namespace ipd {

enum class FunctionKind { sigma, pi, pi_inf, pi_min, pi_max };

const char* function_kind_name(FunctionKind k);
std::optional<FunctionKind> function_kind_from_name(const std::string& s);

enum class Exactness { exact, upper_bound };

/// Value of one of the parametric functions at a single right hand side.
/// Infinite exactly when IP(b) is infeasible.
struct FunctionValue {
  FunctionKind kind = FunctionKind::sigma;
  bool infinite = false;
  Rat value;
  Exactness exactness = Exactness::exact;

  bool leq(const Rat& alpha) const { return !infinite && value <= alpha; }
};

struct IPResult {
  enum class Status { optimal, infeasible };
  Status status = Status::infeasible;
  Rat value;
  IntVec witness;
};

/// All optimal solutions with sup-norm at most box_radius. truncated means
/// lattice points of the optimal face may extend beyond the box.
struct OptimalSet {
  std::vector<IntVec> solutions;  // lexicographically sorted
  Int box_radius;
  bool truncated = false;
};

struct EvalOptions {
  long node_budget = 1'000'000;
  std::optional<Int> box_radius;  // overrides the proximity-derived default
  bool lex_tiebreak = false;      // resolve non-unique LP optima for pi/pi_inf
};

/// Exact optimum of IP(b) by branch and bound on exact LP relaxations.
/// Search is confined to the proximity-derived box, which is guaranteed to
/// contain an optimal solution whenever one exists.
IPResult solve_ip(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

/// Exhaustive enumeration of the optimal face within the given box.
OptimalSet enumerate_optimal_solutions(const Instance& inst, const IntVec& b, const Int& radius,
                                       const EvalOptions& opts = {});

/// Minimum support size over optimal solutions of IP(b).
FunctionValue sigma(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

/// L1 distance from the optimal LP vertex to the nearest optimal IP solution.
/// Requires unique LP optima unless opts.lex_tiebreak is set.
FunctionValue pi(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

/// Sup-norm variant of pi.
FunctionValue pi_inf(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

/// Minimum over optimal LP vertices of the distance to the nearest optimal
/// IP solution.
FunctionValue pi_min(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

/// Maximum over optimal LP vertices of the per-vertex nearest distance.
FunctionValue pi_max(const Instance& inst, const IntVec& b, const EvalOptions& opts = {});

FunctionValue evaluate(const Instance& inst, FunctionKind kind, const IntVec& b, const EvalOptions& opts = {});

/// Integer-scaled objective: c_scaled = denom * c with denom = lcm of the
/// objective denominators. Shared by the optimal-face machinery.
struct ScaledObjective {
  IntVec coeffs;
  Int denom;
};
ScaledObjective scale_objective(const RatVec& c);

}  // namespace ipd
