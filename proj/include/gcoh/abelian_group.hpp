#pragma once

// Finitely generated abelian groups in invariant-factor form, homomorphisms
// between them, and the kernel/cokernel/subquotient computations everything
// else is built from.

#include <gcoh/normal_form.hpp>
#include <gcoh/scalar.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace gcoh {

/**
 * Z^r + Z/d_1 + ... + Z/d_t with 1 < d_1 | d_2 | ... | d_t.
 *
 * The canonical generating set lists the torsion generators first (in chain
 * order) and then the free ones; element coordinates follow that order.
 * Two values are isomorphic exactly when they compare equal.
 */
class FgAbGroup {
 public:
  FgAbGroup() = default;

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free(Index rank);
  /// Z/order; order 0 gives Z and order +-1 the trivial group.
  static FgAbGroup cyclic(const BigInt& order);
  /// Canonical form of Z^free_rank + sum Z/orders[i] for arbitrary orders.
  static FgAbGroup from_factors(Index free_rank, const std::vector<BigInt>& orders);

  Index free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  Index torsion_count() const { return static_cast<Index>(torsion_.size()); }
  Index generator_count() const { return torsion_count() + free_rank_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  BigInt torsion_order() const;
  /// Order of generator i, 0 for free generators.
  BigInt generator_order(Index i) const;

  /// Relation matrix on the canonical generators: the group is
  /// Z^generator_count / image(relations()).
  IntMatrix relations() const;

  /// Reduce torsion coordinates into [0, d_i).
  IntVector reduce(const IntVector& coords) const;
  bool is_zero_element(const IntVector& coords) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  Index free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Z^rows / image(m): m presents a map Z^cols -> Z^rows.
FgAbGroup cokernel(const IntMatrix& m);

/// (L + D) / D where L and D are lattices in Z^n spanned by the given
/// columns.  Both matrices must have the same row count.
FgAbGroup subquotient(const IntMatrix& numerator, const IntMatrix& denominator);

/// Canonical basis of the lattice spanned by the columns (column Hermite
/// form).  Two generating sets span the same lattice iff their canonical
/// bases are equal.
IntMatrix lattice_basis(const IntMatrix& generators);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);
/// Every column of `sub` lies in the lattice spanned by `super`.
bool lattice_contains(const IntMatrix& super, const IntMatrix& sub);

/**
 * A homomorphism between canonical presentations: column j of `matrix` holds
 * the target coordinates of the image of source generator j.  Construction
 * checks that relations map to relations and reduces torsion rows.
 */
class AbHom {
 public:
  AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static AbHom identity(const FgAbGroup& g);
  static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  bool is_endomorphism() const { return source_ == target_; }

  IntVector apply(const IntVector& coords) const;

  friend bool operator==(const AbHom& a, const AbHom& b);

 private:
  FgAbGroup source_, target_;
  IntMatrix matrix_;
};

/// g after f.
AbHom compose(const AbHom& g, const AbHom& f);
/// 1 - f for an endomorphism f.
AbHom identity_minus(const AbHom& f);

FgAbGroup kernel(const AbHom& f);
FgAbGroup cokernel(const AbHom& f);
FgAbGroup image(const AbHom& f);

/// Lattice in Z^{target generators} spanned by f(source) plus the target
/// relations; subgroup comparisons reduce to lattice comparisons here.
IntMatrix image_lattice(const AbHom& f);

}  // namespace gcoh
