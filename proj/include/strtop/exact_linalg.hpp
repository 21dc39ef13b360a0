#pragma once

#include "strtop/fin_ab_group.hpp"
#include "strtop/number.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace strtop {

/// Smith normal form U * A * V = D of an integer matrix.
///
/// D is diagonal with nonnegative entries d_1 | d_2 | ... (zeros last). The
/// inverses of the unimodular transforms are tracked alongside so callers can
/// change bases in both directions without inverting.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  Eigen::Index rank = 0;

  Integer diagonal(Eigen::Index i) const {
    return i < D.rows() && i < D.cols() ? D(i, i) : Integer(0);
  }
};

/// Pivot rule: smallest nonzero absolute value, ties broken by lowest row and
/// then lowest column, so identical inputs give identical transforms.
SnfResult smith_normal_form(const IntMatrix& A);

/// Columns form a Z-basis of the integer kernel of A.
IntMatrix kernel_basis(const IntMatrix& A);

/// Columns form a Z-basis of the lattice spanned by the columns of gens.
/// The result has `gens.rows()` rows and full column rank.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
Eigen::Index rational_rank(const IntMatrix& A);
Eigen::Index rational_rank(const RatMatrix& A);

/// Horizontal concatenation [A | B]; both must have the same number of rows.
IntMatrix hcat(const IntMatrix& A, const IntMatrix& B);

class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves B * c = z for a lattice basis B (full column rank).
class LatticeCoordinates {
 public:
  LatticeCoordinates() = default;
  explicit LatticeCoordinates(IntMatrix basis);

  const IntMatrix& basis() const { return basis_; }
  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index rank() const { return basis_.cols(); }

  /// Coordinates of z in the basis, or nullopt if z is not in the lattice.
  std::optional<IntVector> solve(const IntVector& z) const;
  bool contains(const IntVector& z) const { return solve(z).has_value(); }

 private:
  IntMatrix basis_;
  SnfResult snf_;
};

/// The subquotient N / R of a free module Z^m, where N and R are lattices
/// with R contained in N. This is how every page entry is stored: N holds the
/// surviving cycles, R the boundaries, both in the fixed ambient basis.
class Subquotient {
 public:
  Subquotient() = default;

  /// numerator_gens and denominator_gens are m x k and m x l generating sets.
  /// Throws std::invalid_argument if a denominator generator is outside N.
  Subquotient(const IntMatrix& numerator_gens, const IntMatrix& denominator_gens);

  /// All of Z^m modulo the lattice spanned by relations.
  static Subquotient quotient(Eigen::Index ambient_dim, const IntMatrix& relations);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  const FinAbGroup& group() const { return group_; }

  const IntMatrix& numerator_basis() const { return numerator_.basis(); }
  const IntMatrix& denominator_basis() const { return denominator_basis_; }

  /// Ambient representatives of the normal-form generators: torsion
  /// generators first (matching group().torsion()), then free ones.
  const IntMatrix& generators() const { return generators_; }

  /// The same generators written in the numerator basis.
  const IntMatrix& generator_numerator_coords() const { return generator_coords_; }

  /// Order of generator i (0 for free generators).
  Integer generator_order(Eigen::Index i) const;

  /// Numerator-basis coordinates of z, or nullopt if z is not in N.
  std::optional<IntVector> numerator_coordinates(const IntVector& z) const {
    return numerator_.solve(z);
  }

  bool in_numerator(const IntVector& z) const { return numerator_.contains(z); }
  bool in_denominator(const IntVector& z) const;

  /// Normal-form coordinates of the class of z (torsion entries reduced into
  /// [0, t_i)), or nullopt if z is not in N.
  std::optional<IntVector> coordinates(const IntVector& z) const;

  /// Reduces a coordinate vector on the generators (torsion entries mod t_i).
  IntVector reduce(const IntVector& coords) const;

 private:
  Eigen::Index ambient_dim_ = 0;
  LatticeCoordinates numerator_;
  LatticeCoordinates denominator_;
  IntMatrix denominator_basis_;
  SnfResult relation_snf_;
  std::vector<Eigen::Index> kept_;  // relation SNF indices with d != 1
  IntMatrix generators_;
  IntMatrix generator_coords_;
  FinAbGroup group_;
};

/// Homology ker(d_out) / im(d_in) at the middle term of C_a -> C_m -> C_b.
struct Homology {
  FinAbGroup group;
  /// m x g matrix; columns are cycle representatives of the generators,
  /// torsion generators first.
  IntMatrix basis_lift;
  Subquotient module;
};

/// d_in is m x a, d_out is b x m. Throws CompositionError if d_out * d_in != 0.
Homology homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Canonical representatives modulo a lattice: an echelon basis with strictly
/// increasing pivot rows reduces every vector to the unique representative
/// whose pivot entries lie in [0, pivot).
class EchelonReducer {
 public:
  EchelonReducer() = default;
  explicit EchelonReducer(const IntMatrix& gens);

  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const { return reduce(v).isZero(); }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }

 private:
  IntMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace strtop
