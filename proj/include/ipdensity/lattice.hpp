#pragma once

#include <optional>
#include <vector>

#include "ipdensity/matrix.hpp"

namespace ipd {

/// Column-style Hermite normal form of a full-row-rank integer matrix:
/// lower triangular, positive diagonal, entries left of the diagonal reduced
/// into [0, diagonal). Throws RankError when rank < rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Full-rank lattice in Z^m, stored through its canonical Hermite basis.
class LatticeBasis {
 public:
  /// Canonicalizes an arbitrary full-row-rank generating matrix (m x n).
  static LatticeBasis from_columns(const IntMatrix& generators);

  const IntMatrix& basis() const { return basis_; }
  const Int& determinant() const { return det_; }
  std::size_t dim() const { return basis_.rows(); }

  /// True iff b is an integer combination of the basis columns.
  bool member(const IntVec& b) const;

  /// Coordinates y with basis * y = b; nullopt when b is not a member.
  std::optional<IntVec> coordinates(const IntVec& b) const;

  bool operator==(const LatticeBasis& o) const { return basis_ == o.basis_; }

 private:
  explicit LatticeBasis(IntMatrix hnf);
  IntMatrix basis_;
  Int det_;
};

/// Lattice of integer column combinations of A (rank m required).
LatticeBasis lattice_of_columns(const IntMatrix& a);

/// Membership in an arbitrary lattice basis.
bool lattice_member(const LatticeBasis& l, const IntVec& b);

struct SmithForm {
  IntMatrix u;       // unimodular left transform
  IntVec diagonal;   // invariant factors d1 | d2 | ... | dm, all positive
};

/// Smith normal form of a nonsingular integer matrix: U * M * V = diag(d).
/// Only the left transform is retained (it is what residue computation needs).
SmithForm smith_normal_form(const IntMatrix& m);

/// Canonical residue id: remainders against the Smith invariant factors.
using ResidueId = IntVec;

/// Finite abelian quotient Lambda / Gamma for a full-rank sublattice
/// Gamma = B * Z^m of Lambda.
class QuotientGroup {
 public:
  QuotientGroup(LatticeBasis superlattice, const IntMatrix& b);

  const LatticeBasis& superlattice() const { return super_; }
  const LatticeBasis& sublattice() const { return sub_; }
  const IntVec& invariant_factors() const { return factors_; }
  const Int& order() const { return order_; }

  /// Canonical residue of b in Lambda / Gamma. Throws MembershipError when
  /// b is outside the superlattice.
  ResidueId residue_of(const IntVec& b) const;

  /// residue_of(b + d) without leaving residue space.
  ResidueId add(const ResidueId& x, const ResidueId& y) const;

  ResidueId identity() const { return ResidueId(factors_.size(), Int(0)); }

  /// All residues, in lexicographic order of their id tuples.
  std::vector<ResidueId> enumerate() const;

 private:
  LatticeBasis super_;
  LatticeBasis sub_;
  SmithForm smith_;    // of the transition matrix super^{-1} * B
  IntVec factors_;
  Int order_;
};

inline QuotientGroup quotient(const LatticeBasis& superlattice, const IntMatrix& b) {
  return QuotientGroup(superlattice, b);
}

}  // namespace ipd
