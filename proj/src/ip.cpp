#include "ipdensity/ip.hpp"

#include <algorithm>

namespace ipd {

const char* function_kind_name(FunctionKind k) {
  switch (k) {
    case FunctionKind::sigma: return "sigma";
    case FunctionKind::pi: return "pi";
    case FunctionKind::pi_inf: return "pi-inf";
    case FunctionKind::pi_min: return "pi-min";
    case FunctionKind::pi_max: return "pi-max";
  }
  return "?";
}

std::optional<FunctionKind> function_kind_from_name(const std::string& s) {
  if (s == "sigma") return FunctionKind::sigma;
  if (s == "pi") return FunctionKind::pi;
  if (s == "pi-inf" || s == "pi_inf") return FunctionKind::pi_inf;
  if (s == "pi-min" || s == "pi_min") return FunctionKind::pi_min;
  if (s == "pi-max" || s == "pi_max") return FunctionKind::pi_max;
  return std::nullopt;
}

ScaledObjective scale_objective(const RatVec& c) {
  ScaledObjective s;
  s.denom = 1;
  for (const auto& x : c) s.denom = boost::multiprecision::lcm(s.denom, rat_den(x));
  s.coeffs.reserve(c.size());
  for (const auto& x : c) s.coeffs.push_back(rat_num(x) * (s.denom / rat_den(x)));
  return s;
}

namespace {

Rat linf(const RatVec& v) {
  Rat s = 0;
  for (const auto& x : v) s = std::max(s, Rat(boost::multiprecision::abs(x)));
  return s;
}

struct Budget {
  long remaining;
  void spend() {
    if (--remaining < 0) throw ResourceError("search node budget exceeded");
  }
};

// ---------------------------------------------------------------------------
// Branch and bound over exact LP relaxations.
// Upper-bound rows enter the node LP only for variables branched downward;
// the enclosing box caps upward branching instead.
// ---------------------------------------------------------------------------

struct BBNode {
  IntVec lo;
  IntVec hi;
};

struct NodeLP {
  LPStatus status = LPStatus::infeasible;
  RatVec x;  // original variable space
  Rat value;
};

NodeLP solve_node_lp(const IntMatrix& a, const IntVec& b, const RatVec& c, const BBNode& node, const IntVec& box) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> capped;
  for (std::size_t j = 0; j < n; ++j) {
    if (node.lo[j] > node.hi[j]) return {};
    if (node.lo[j] == node.hi[j]) continue;
    free_vars.push_back(j);
    if (node.hi[j] < box[j]) capped.push_back(j);
  }

  const std::size_t rows = m + capped.size();
  const std::size_t cols = free_vars.size() + capped.size();
  IntMatrix sys(rows, cols);
  IntVec srhs(rows);
  RatVec obj(cols, Rat(0));
  for (std::size_t jj = 0; jj < free_vars.size(); ++jj) {
    std::size_t j = free_vars[jj];
    for (std::size_t i = 0; i < m; ++i) sys(i, jj) = a(i, j);
    obj[jj] = c[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Int s = b[i];
    for (std::size_t j = 0; j < n; ++j)
      if (node.lo[j] != 0) s -= a(i, j) * node.lo[j];
    srhs[i] = std::move(s);
  }
  for (std::size_t k = 0; k < capped.size(); ++k) {
    std::size_t j = capped[k];
    auto it = std::find(free_vars.begin(), free_vars.end(), j);
    sys(m + k, static_cast<std::size_t>(it - free_vars.begin())) = 1;
    sys(m + k, free_vars.size() + k) = 1;  // slack
    srhs[m + k] = node.hi[j] - node.lo[j];
  }

  SimplexOutcome out = simplex_solve(sys, srhs, obj);
  NodeLP res;
  res.status = out.status;
  if (out.status != LPStatus::optimal) return res;
  res.x.assign(n, Rat(0));
  Rat shift = 0;
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = Rat(node.lo[j]);
    if (node.lo[j] != 0) shift += c[j] * Rat(node.lo[j]);
  }
  for (std::size_t jj = 0; jj < free_vars.size(); ++jj) res.x[free_vars[jj]] += out.x[jj];
  res.value = out.value + shift;
  return res;
}

struct BBResult {
  bool feasible = false;
  Rat value;
  IntVec witness;
};

// Maximize c over {z integral : Az = b, 0 <= z <= box}.
BBResult branch_and_bound(const IntMatrix& a, const IntVec& b, const RatVec& c, const IntVec& box, Budget& budget) {
  const std::size_t n = a.cols();
  BBResult best;
  std::vector<BBNode> stack;
  stack.push_back({IntVec(n, Int(0)), box});

  while (!stack.empty()) {
    BBNode node = std::move(stack.back());
    stack.pop_back();
    budget.spend();

    NodeLP lp = solve_node_lp(a, b, c, node, box);
    if (lp.status == LPStatus::infeasible) continue;
    if (lp.status == LPStatus::unbounded) throw Error("unbounded node relaxation on a validated instance");
    if (best.feasible && lp.value <= best.value) continue;

    // most fractional variable, lowest index tie-break
    std::size_t branch = n;
    Rat branch_score = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_integral(lp.x[j])) continue;
      Rat f = lp.x[j] - Rat(floor_rat(lp.x[j]));
      Rat score = std::min(f, Rat(1 - f));
      if (branch == n || score > branch_score) {
        branch = j;
        branch_score = score;
      }
    }
    if (branch == n) {
      IntVec z(n);
      for (std::size_t j = 0; j < n; ++j) z[j] = rat_num(lp.x[j]);
      best.feasible = true;
      best.value = std::move(lp.value);
      best.witness = std::move(z);
      continue;
    }

    Int down = floor_rat(lp.x[branch]);
    BBNode up = node;
    up.lo[branch] = down + 1;
    if (up.lo[branch] <= up.hi[branch]) stack.push_back(std::move(up));
    BBNode dn = std::move(node);
    dn.hi[branch] = std::min(dn.hi[branch], down);
    if (dn.lo[branch] <= dn.hi[branch]) stack.push_back(std::move(dn));  // explored first
  }
  return best;
}

// ---------------------------------------------------------------------------
// Optimal-face search: DFS over
//   { z >= 0 integral : Az = b, c_scaled . z = denom * v*, z <= box }.
// ---------------------------------------------------------------------------

struct FaceProblem {
  IntMatrix rows;  // [A; c_scaled]
  IntVec rhs;      // (b, denom * v*)
  IntVec lo, hi;
  std::vector<std::size_t> order;
  std::vector<std::size_t> last_level;  // per row: last order level with a nonzero coefficient
  bool empty = false;
};

// One bounds-tightening sweep to fixpoint; false when a range empties.
bool propagate(const IntMatrix& rows, const IntVec& rhs, IntVec& lo, IntVec& hi) {
  const std::size_t p = rows.rows(), n = rows.cols();
  for (std::size_t round = 0; round < 4 * n + 4; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < p; ++i) {
      Int smin = 0, smax = 0;
      bool any = false;
      for (std::size_t j = 0; j < n; ++j) {
        const Int& aij = rows(i, j);
        if (aij == 0) continue;
        any = true;
        if (aij > 0) {
          smin += aij * lo[j];
          smax += aij * hi[j];
        } else {
          smin += aij * hi[j];
          smax += aij * lo[j];
        }
      }
      if (!any) {
        if (rhs[i] != 0) return false;
        continue;
      }
      if (smin > rhs[i] || smax < rhs[i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        const Int& aij = rows(i, j);
        if (aij == 0) continue;
        Int own_min, own_max;
        if (aij > 0) {
          own_min = aij * lo[j];
          own_max = aij * hi[j];
        } else {
          own_min = aij * hi[j];
          own_max = aij * lo[j];
        }
        // aij * z_j must lie in [rhs - rest_max, rhs - rest_min]
        Int tlo = rhs[i] - (smax - own_max);
        Int thi = rhs[i] - (smin - own_min);
        Int nlo, nhi;
        if (aij > 0) {
          nlo = ceil_rat(make_rat(tlo, aij));
          nhi = floor_rat(make_rat(thi, aij));
        } else {
          nlo = ceil_rat(make_rat(thi, aij));
          nhi = floor_rat(make_rat(tlo, aij));
        }
        if (nlo > lo[j]) {
          lo[j] = nlo;
          changed = true;
        }
        if (nhi < hi[j]) {
          hi[j] = nhi;
          changed = true;
        }
        if (lo[j] > hi[j]) return false;
      }
    }
    if (!changed) break;
  }
  return true;
}

// Exact LP tightening for ranges interval propagation left wide.
void lp_tighten(const IntMatrix& rows, const IntVec& rhs, IntVec& lo, IntVec& hi) {
  const std::size_t n = rows.cols();
  for (std::size_t j = 0; j < n; ++j) {
    if (hi[j] - lo[j] <= 64) continue;
    RatVec obj(n, Rat(0));
    obj[j] = -1;
    SimplexOutcome mn = simplex_solve(rows, rhs, obj);
    if (mn.status == LPStatus::optimal) lo[j] = std::max(lo[j], ceil_rat(-mn.value));
    obj[j] = 1;
    SimplexOutcome mx = simplex_solve(rows, rhs, obj);
    if (mx.status == LPStatus::optimal) hi[j] = std::min(hi[j], floor_rat(mx.value));
  }
}

IntMatrix face_rows(const Instance& inst) {
  const std::size_t m = inst.m(), n = inst.n();
  ScaledObjective sc = scale_objective(inst.c());
  IntMatrix rows(m + 1, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = inst.a()(i, j);
  for (std::size_t j = 0; j < n; ++j) rows(m, j) = sc.coeffs[j];
  return rows;
}

IntVec face_rhs(const Instance& inst, const IntVec& b, const Rat& opt_value) {
  IntVec rhs(inst.m() + 1);
  for (std::size_t i = 0; i < inst.m(); ++i) rhs[i] = b[i];
  ScaledObjective sc = scale_objective(inst.c());
  Rat scaled = opt_value * Rat(sc.denom);
  rhs[inst.m()] = rat_num(scaled);  // integral: the optimum is attained at an integer point
  return rhs;
}

FaceProblem build_face(const Instance& inst, const IntVec& b, const Rat& opt_value, const Int& box) {
  const std::size_t m = inst.m(), n = inst.n();
  FaceProblem f;
  f.rows = face_rows(inst);
  f.rhs = face_rhs(inst, b, opt_value);
  f.lo.assign(n, Int(0));
  f.hi.assign(n, box);
  if (!propagate(f.rows, f.rhs, f.lo, f.hi)) {
    f.empty = true;
    return f;
  }
  lp_tighten(f.rows, f.rhs, f.lo, f.hi);
  if (!propagate(f.rows, f.rhs, f.lo, f.hi)) {
    f.empty = true;
    return f;
  }

  f.order.resize(n);
  for (std::size_t j = 0; j < n; ++j) f.order[j] = j;
  std::sort(f.order.begin(), f.order.end(), [&](std::size_t x, std::size_t y) {
    Int wx = f.hi[x] - f.lo[x], wy = f.hi[y] - f.lo[y];
    if (wx != wy) return wx < wy;
    return x < y;
  });
  f.last_level.assign(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t lvl = 0; lvl < n; ++lvl)
      if (f.rows(i, f.order[lvl]) != 0) f.last_level[i] = lvl;
  return f;
}

// DFS over the face. Visitor contract: prune_assign(v, val) may reject an
// assignment (no unassign follows); otherwise unassign(v, val) is called
// after the subtree. order_values drives the value loop.
class FaceDFS {
 public:
  FaceDFS(const FaceProblem& f, Budget& budget) : f_(f), budget_(budget) {
    const std::size_t p = f_.rows.rows(), n = f_.rows.cols();
    fixed_.assign(p, Int(0));
    z_.assign(n, Int(0));
    suf_min_.assign(p, IntVec(n + 1, Int(0)));
    suf_max_.assign(p, IntVec(n + 1, Int(0)));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t lvl = n; lvl-- > 0;) {
        std::size_t v = f_.order[lvl];
        const Int& a = f_.rows(i, v);
        Int cmin = 0, cmax = 0;
        if (a > 0) {
          cmin = a * f_.lo[v];
          cmax = a * f_.hi[v];
        } else if (a < 0) {
          cmin = a * f_.hi[v];
          cmax = a * f_.lo[v];
        }
        suf_min_[i][lvl] = suf_min_[i][lvl + 1] + cmin;
        suf_max_[i][lvl] = suf_max_[i][lvl + 1] + cmax;
      }
  }

  template <typename Visitor>
  void run(Visitor& vis) {
    if (!f_.empty) recurse(0, vis);
  }

 private:
  template <typename Visitor>
  void recurse(std::size_t level, Visitor& vis) {
    budget_.spend();
    const std::size_t p = f_.rows.rows(), n = f_.rows.cols();
    if (level == n) {
      for (std::size_t i = 0; i < p; ++i)
        if (fixed_[i] != f_.rhs[i]) return;
      vis.leaf(z_);
      return;
    }
    const std::size_t v = f_.order[level];
    Int vlo = f_.lo[v], vhi = f_.hi[v];
    for (std::size_t i = 0; i < p; ++i) {
      const Int& a = f_.rows(i, v);
      if (a == 0) continue;
      Int tlo = f_.rhs[i] - fixed_[i] - suf_max_[i][level + 1];
      Int thi = f_.rhs[i] - fixed_[i] - suf_min_[i][level + 1];
      Int nlo, nhi;
      if (a > 0) {
        nlo = ceil_rat(make_rat(tlo, a));
        nhi = floor_rat(make_rat(thi, a));
      } else {
        nlo = ceil_rat(make_rat(thi, a));
        nhi = floor_rat(make_rat(tlo, a));
      }
      vlo = std::max(vlo, nlo);
      vhi = std::min(vhi, nhi);
      if (vlo > vhi) return;
    }
    auto try_value = [&](const Int& val) {
      if (vis.prune_assign(v, val)) return;
      z_[v] = val;
      for (std::size_t i = 0; i < p; ++i)
        if (f_.rows(i, v) != 0) fixed_[i] += f_.rows(i, v) * val;
      bool ok = true;
      for (std::size_t i = 0; i < p && ok; ++i)
        if (f_.last_level[i] == level && fixed_[i] != f_.rhs[i]) ok = false;
      if (ok) recurse(level + 1, vis);
      for (std::size_t i = 0; i < p; ++i)
        if (f_.rows(i, v) != 0) fixed_[i] -= f_.rows(i, v) * val;
      vis.unassign(v, val);
    };
    vis.order_values(v, vlo, vhi, try_value);
  }

  const FaceProblem& f_;
  Budget& budget_;
  std::vector<Int> fixed_;
  IntVec z_;
  std::vector<IntVec> suf_min_, suf_max_;
};

struct CollectVisitor {
  std::vector<IntVec>* out;
  void leaf(const IntVec& z) { out->push_back(z); }
  bool prune_assign(std::size_t, const Int&) { return false; }
  void unassign(std::size_t, const Int&) {}
  template <typename F>
  void order_values(std::size_t, const Int& lo, const Int& hi, F&& f) {
    for (Int v = lo; v <= hi; ++v) f(v);
  }
};

// Minimizes support size; zero-valued assignments first.
struct MinSupportVisitor {
  std::size_t best = 0;
  std::size_t count = 0;
  void leaf(const IntVec&) {
    if (count < best) best = count;
  }
  bool prune_assign(std::size_t, const Int& val) {
    std::size_t c = count + (val != 0 ? 1 : 0);
    if (c >= best) return true;  // cannot strictly improve
    count = c;
    return false;
  }
  void unassign(std::size_t, const Int& val) {
    if (val != 0) --count;
  }
  template <typename F>
  void order_values(std::size_t, const Int& lo, const Int& hi, F&& f) {
    if (lo <= 0 && 0 <= hi) f(Int(0));
    for (Int v = lo; v <= hi; ++v)
      if (v != 0) f(v);
  }
};

// Minimizes L1 or sup-norm distance to a rational target point.
struct MinDistVisitor {
  const RatVec* target = nullptr;
  bool use_linf = false;
  Rat best;
  Rat partial;
  std::vector<Rat> maxstack;
  RatVec rest_lb_l1;
  RatVec rest_lb_linf;
  std::vector<std::size_t> level_of;

  void init(const FaceProblem& fp) {
    const std::size_t n = fp.rows.cols();
    RatVec dmin(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& t = (*target)[j];
      if (t < Rat(fp.lo[j]))
        dmin[j] = Rat(fp.lo[j]) - t;
      else if (t > Rat(fp.hi[j]))
        dmin[j] = t - Rat(fp.hi[j]);
      else
        dmin[j] = 0;
    }
    rest_lb_l1.assign(n + 1, Rat(0));
    rest_lb_linf.assign(n + 1, Rat(0));
    for (std::size_t lvl = n; lvl-- > 0;) {
      std::size_t v = fp.order[lvl];
      rest_lb_l1[lvl] = rest_lb_l1[lvl + 1] + dmin[v];
      rest_lb_linf[lvl] = std::max(rest_lb_linf[lvl + 1], dmin[v]);
    }
    level_of.assign(n, 0);
    for (std::size_t lvl = 0; lvl < n; ++lvl) level_of[fp.order[lvl]] = lvl;
    partial = 0;
    maxstack.clear();
  }

  void leaf(const IntVec&) {
    if (partial < best) best = partial;
  }
  bool prune_assign(std::size_t v, const Int& val) {
    Rat d = boost::multiprecision::abs(Rat((*target)[v] - Rat(val)));
    std::size_t lvl = level_of[v];
    Rat bound = use_linf ? std::max(std::max(partial, d), rest_lb_linf[lvl + 1])
                         : Rat(partial + d + rest_lb_l1[lvl + 1]);
    if (bound >= best) return true;
    if (use_linf) {
      maxstack.push_back(partial);
      partial = std::max(partial, d);
    } else {
      partial += d;
    }
    return false;
  }
  void unassign(std::size_t v, const Int& val) {
    if (use_linf) {
      partial = maxstack.back();
      maxstack.pop_back();
    } else {
      partial -= boost::multiprecision::abs(Rat((*target)[v] - Rat(val)));
    }
  }
  template <typename F>
  void order_values(std::size_t v, const Int& lo, const Int& hi, F&& fn) {
    // nearest to the target first, expanding outward
    Int center = floor_rat((*target)[v]);
    if (center < lo) center = lo;
    if (center > hi) center = hi;
    Int down = center, up = center + 1;
    while (true) {
      bool more = false;
      if (down >= lo) {
        fn(down);
        --down;
        more = true;
      }
      if (up <= hi) {
        fn(up);
        ++up;
        more = true;
      }
      if (!more) break;
    }
  }
};

// Product of L1 row norms of [rows | rhs]: dominates every vertex coordinate
// of the face polytope (Cramer with Hadamard's inequality).
Int face_vertex_bound(const IntMatrix& rows, const IntVec& rhs) {
  Int prod = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    Int s = boost::multiprecision::abs(rhs[i]);
    for (std::size_t j = 0; j < rows.cols(); ++j) s += boost::multiprecision::abs(rows(i, j));
    if (s > 1) prod *= s;
  }
  return prod;
}

struct Core {
  bool feasible = false;
  LPSolution lp;
  IPResult ip;
  Int sound_box;  // proximity-derived default enumeration radius
};

Core solve_core(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core;
  if (b.size() != inst.m()) throw DimensionError("right hand side size mismatch");
  if (!inst.lattice().member(b)) return core;
  core.lp = solve_lp(inst, b);
  if (core.lp.status == LPStatus::infeasible) return core;
  if (core.lp.status == LPStatus::unbounded) throw Error("unbounded relaxation on a validated instance");

  core.sound_box = ceil_rat(linf(core.lp.vertex)) + inst.proximity_bound();
  Budget budget{opts.node_budget};
  IntVec box(inst.n(), core.sound_box);
  BBResult bb = branch_and_bound(inst.a(), b, inst.c(), box, budget);
  if (!bb.feasible) return core;
  core.feasible = true;
  core.ip.status = IPResult::Status::optimal;
  core.ip.value = std::move(bb.value);
  core.ip.witness = std::move(bb.witness);
  return core;
}

FunctionValue infinite_value(FunctionKind kind) {
  FunctionValue fv;
  fv.kind = kind;
  fv.infinite = true;
  return fv;
}

struct DistResult {
  Rat value;
  bool exact = false;
};

DistResult face_min_distance(const Instance& inst, const IntVec& b, const Core& core, const RatVec& vertex,
                             bool use_linf, const EvalOptions& opts) {
  Int sound = ceil_rat(linf(vertex)) + inst.proximity_bound();
  Int box = opts.box_radius ? *opts.box_radius : sound;
  FaceProblem face = build_face(inst, b, core.ip.value, box);
  Budget budget{opts.node_budget};
  MinDistVisitor vis;
  vis.target = &vertex;
  vis.use_linf = use_linf;
  vis.best = use_linf ? linf_dist(vertex, core.ip.witness) : l1_dist(vertex, core.ip.witness);
  vis.init(face);
  FaceDFS dfs(face, budget);
  dfs.run(vis);
  DistResult out;
  out.value = vis.best;
  bool box_sound = !opts.box_radius || *opts.box_radius >= sound;
  // any point beyond the sound box is farther than the proximity bound
  out.exact = box_sound && out.value <= Rat(inst.proximity_bound());
  return out;
}

RatVec select_pi_vertex(const Instance& inst, const IntVec& b, const Core& core, const EvalOptions& opts) {
  if (inst.unique_lp_optima()) return core.lp.vertex;
  if (opts.lex_tiebreak) return lexmax_optimal_vertex(inst, b);
  throw UniquenessError(
      "LP optima are not unique; use pi_min/pi_max or enable lexicographic tie-breaking");
}

}  // namespace

IPResult solve_ip(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) {
    IPResult r;
    r.status = IPResult::Status::infeasible;
    return r;
  }
  return core.ip;
}

OptimalSet enumerate_optimal_solutions(const Instance& inst, const IntVec& b, const Int& radius,
                                       const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) throw Error("enumerate_optimal_solutions requires a feasible IP(b)");
  OptimalSet set;
  set.box_radius = radius;

  FaceProblem face = build_face(inst, b, core.ip.value, radius);
  Budget budget{opts.node_budget};
  CollectVisitor vis{&set.solutions};
  FaceDFS dfs(face, budget);
  dfs.run(vis);
  std::sort(set.solutions.begin(), set.solutions.end());

  // truncated iff some face coordinate can exceed the box
  IntMatrix rows = face_rows(inst);
  IntVec rhs = face_rhs(inst, b, core.ip.value);
  set.truncated = false;
  for (std::size_t j = 0; j < inst.n() && !set.truncated; ++j) {
    RatVec obj(inst.n(), Rat(0));
    obj[j] = 1;
    SimplexOutcome mx = simplex_solve(rows, rhs, obj);
    if (mx.status == LPStatus::unbounded || (mx.status == LPStatus::optimal && mx.value > Rat(radius)))
      set.truncated = true;
  }
  return set;
}

FunctionValue sigma(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) return infinite_value(FunctionKind::sigma);

  Int sound = core.sound_box;
  const bool face_bounded = inst.optimal_face_bounded();
  if (face_bounded) {
    // bounded faces lie inside the Cramer/Hadamard vertex bound, so the
    // enumeration below is complete and the minimum is exact
    sound = std::max(sound, face_vertex_bound(face_rows(inst), face_rhs(inst, b, core.ip.value)));
  }
  Int box = opts.box_radius ? *opts.box_radius : sound;

  FaceProblem face = build_face(inst, b, core.ip.value, box);
  Budget budget{opts.node_budget};
  MinSupportVisitor vis;
  vis.best = support_size(core.ip.witness);
  FaceDFS dfs(face, budget);
  dfs.run(vis);

  FunctionValue fv;
  fv.kind = FunctionKind::sigma;
  fv.value = Rat(Int(vis.best));
  bool box_sound = !opts.box_radius || *opts.box_radius >= sound;
  fv.exactness = (vis.best == 0 || (face_bounded && box_sound)) ? Exactness::exact : Exactness::upper_bound;
  return fv;
}

FunctionValue pi(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) return infinite_value(FunctionKind::pi);
  RatVec vertex = select_pi_vertex(inst, b, core, opts);
  DistResult d = face_min_distance(inst, b, core, vertex, false, opts);
  FunctionValue fv;
  fv.kind = FunctionKind::pi;
  fv.value = std::move(d.value);
  fv.exactness = d.exact ? Exactness::exact : Exactness::upper_bound;
  return fv;
}

FunctionValue pi_inf(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) return infinite_value(FunctionKind::pi_inf);
  RatVec vertex = select_pi_vertex(inst, b, core, opts);
  DistResult d = face_min_distance(inst, b, core, vertex, true, opts);
  FunctionValue fv;
  fv.kind = FunctionKind::pi_inf;
  fv.value = std::move(d.value);
  fv.exactness = d.exact ? Exactness::exact : Exactness::upper_bound;
  return fv;
}

FunctionValue pi_min(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) return infinite_value(FunctionKind::pi_min);
  auto vertices = optimal_vertices(inst, b);
  if (vertices.empty()) throw Error("feasible IP without an optimal LP vertex");
  FunctionValue fv;
  fv.kind = FunctionKind::pi_min;
  bool first = true, all_exact = true;
  for (const auto& v : vertices) {
    DistResult d = face_min_distance(inst, b, core, v, false, opts);
    if (first || d.value < fv.value) fv.value = d.value;
    first = false;
    all_exact = all_exact && d.exact;
  }
  fv.exactness = all_exact ? Exactness::exact : Exactness::upper_bound;
  return fv;
}

FunctionValue pi_max(const Instance& inst, const IntVec& b, const EvalOptions& opts) {
  Core core = solve_core(inst, b, opts);
  if (!core.feasible) return infinite_value(FunctionKind::pi_max);
  auto vertices = optimal_vertices(inst, b);
  if (vertices.empty()) throw Error("feasible IP without an optimal LP vertex");
  FunctionValue fv;
  fv.kind = FunctionKind::pi_max;
  bool first = true, all_exact = true;
  for (const auto& v : vertices) {
    DistResult d = face_min_distance(inst, b, core, v, false, opts);
    if (first || d.value > fv.value) fv.value = d.value;
    first = false;
    all_exact = all_exact && d.exact;
  }
  fv.exactness = all_exact ? Exactness::exact : Exactness::upper_bound;
  return fv;
}

FunctionValue evaluate(const Instance& inst, FunctionKind kind, const IntVec& b, const EvalOptions& opts) {
  switch (kind) {
    case FunctionKind::sigma: return sigma(inst, b, opts);
    case FunctionKind::pi: return pi(inst, b, opts);
    case FunctionKind::pi_inf: return pi_inf(inst, b, opts);
    case FunctionKind::pi_min: return pi_min(inst, b, opts);
    case FunctionKind::pi_max: return pi_max(inst, b, opts);
  }
  throw Error("unknown function kind");
}

}  // namespace ipd
