#pragma once

// Covering maps of the k-torus given by integer matrices: cohomology of the
// torus with the induced exterior-power action, and the resulting groupoid
// cohomology and Brauer group.

#include <gcoh/cochain.hpp>

#include <string>
#include <vector>

namespace gcoh {

class TorusEndo {
 public:
  /// Throws ValidationError unless R is square, nonempty, with det R != 0.
  explicit TorusEndo(IntMatrix r);

  Index k() const { return r_.rows(); }
  const IntMatrix& matrix() const { return r_; }
  /// |det R|.
  const BigInt& degree() const { return degree_; }
  /// Set when |det R| < 2, i.e. the map is a homeomorphism.
  bool homeomorphism() const { return degree_ < 2; }

 private:
  IntMatrix r_;
  BigInt degree_;
};

/// H^n(T^k) = Z^{C(k,n)} with sigma*_n = Lambda^n R for n = 0..max(k+1, 3);
/// degrees above k are trivial.
std::vector<AbHom> torus_cohomology_data(const TorusEndo& e);

struct GroupoidTable {
  std::vector<GammaCohomology> degrees;  // n = 0 .. top
  GammaCohomology brauer;                // the degree-3 entry
};

/// Direct computation through Smith forms of I - Lambda^n R for n = 0..max(k+1, 3).
GroupoidTable torus_groupoid_cohomology(const TorusEndo& e);

/// Table for any sigma* sequence, n = 0 .. top (top >= 3), padding with zero groups.
GroupoidTable groupoid_table(const std::vector<AbHom>& sigma_star, Index top);

}  // namespace gcoh
