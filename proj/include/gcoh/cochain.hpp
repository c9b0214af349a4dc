#pragma once

// Free integer cochain complexes, their cohomology with retained generator
// data, induced maps, and the assembly of groupoid cohomology from the
// kernel and cokernel of 1 - sigma*.

#include <gcoh/abelian_group.hpp>

#include <optional>
#include <vector>

namespace gcoh {

/// C^0 -> C^1 -> ... -> C^N with d^n : C^n -> C^{n+1} of shape
/// ranks[n+1] x ranks[n].  d^N is the zero map out of the top degree.
class CochainComplex {
 public:
  CochainComplex() = default;
  /// differentials.size() must be ranks.size() - 1 (or 0 for an empty
  /// complex).  Throws ValidationError on shape mismatch or d∘d != 0.
  CochainComplex(std::vector<Index> ranks, std::vector<IntMatrix> differentials);

  Index top_degree() const { return static_cast<Index>(ranks_.size()) - 1; }
  /// Rank of C^n, zero outside [0, N].
  Index rank(Index n) const;
  /// d^n, the zero matrix of the right shape outside the stored range.
  IntMatrix differential(Index n) const;

  const std::vector<Index>& ranks() const { return ranks_; }
  const std::vector<IntMatrix>& differentials() const { return differentials_; }

 private:
  std::vector<Index> ranks_;
  std::vector<IntMatrix> differentials_;
};

/// H^n together with what is needed to move between cocycles and
/// coordinates on the canonical generators.
struct Cohomology {
  Index degree = 0;
  FgAbGroup group;
  IntMatrix cycles;       // basis of Z^n as columns
  IntMatrix to_smith;     // cycle coordinates -> Smith coordinates (U)
  std::vector<Index> kept;  // Smith coordinates surviving in the quotient, canonical order
  IntMatrix lifts;        // cocycle representative of each canonical generator

  /// Canonical coordinates of the class of a cocycle.  Throws InternalError
  /// when the vector is not a cocycle.
  IntVector coordinates(const IntVector& cocycle) const;
};

Cohomology cohomology(const CochainComplex& c, Index n);

/// Components f^n : C_source^n -> C_target^n commuting with d.
class CochainMap {
 public:
  CochainMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components);

  static CochainMap identity(const CochainComplex& c);
  static CochainMap zero(const CochainComplex& source, const CochainComplex& target);

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }
  /// f^n, zero outside the stored range.
  IntMatrix component(Index n) const;
  const std::vector<IntMatrix>& components() const { return components_; }

 private:
  CochainComplex source_, target_;
  std::vector<IntMatrix> components_;
};

/// g after f.
CochainMap compose(const CochainMap& g, const CochainMap& f);

/// The map H^n(source) -> H^n(target).  Both cohomologies must have been
/// computed from f's own complexes in degree n.
AbHom induced_map(const CochainMap& f, const Cohomology& source, const Cohomology& target);
AbHom induced_map(const CochainMap& f, Index n);

/// sigma*_n for an endomorphism of a complex, n = 0 .. max(top, min_top).
/// Degrees above the complex carry the zero endomorphism of the trivial group.
std::vector<AbHom> induced_on_cohomology(const CochainMap& f, Index min_top = 0);

/// Pad a table of sigma* with zero endomorphisms of 0 up to degree `top`.
std::vector<AbHom> pad_sigma_star(std::vector<AbHom> sigma_star, Index top);

struct GammaCohomology {
  Index degree = 0;
  FgAbGroup kernel_part;    // ker(1 - sigma*_n)
  FgAbGroup cokernel_part;  // coker(1 - sigma*_{n-1}); trivial for n = 0
  std::optional<FgAbGroup> split_sum;
  bool split_certified = false;

  /// The group if certified, otherwise "ext(coker=..., ker=...)".
  std::string to_string() const;
};

/// H^n of the groupoid from 0 -> coker(1 - sigma*_{n-1}) -> H^n -> ker(1 - sigma*_n) -> 0.
/// sigma_star[m] must be an endomorphism for every m <= n.
GammaCohomology groupoid_cohomology(const std::vector<AbHom>& sigma_star, Index n);

struct BrauerEnds {
  FgAbGroup cokernel_part;  // coker(1 - sigma*_2)
  FgAbGroup kernel_part;    // ker(1 - sigma*_3)
  GammaCohomology h3;
};

/// Requires sigma* in degrees 0..3.
BrauerEnds brauer_ends(const std::vector<AbHom>& sigma_star);

}  // namespace gcoh
