#pragma once

// Twists of the groupoid with Z/n fibres, built from a Z/n-bundle over X by
// gluing the bundles T_{k,l} = (T^k * conj(T)^l) pulled back along
// (x, m, y) -> (x, sigma x, ..., sigma^{k-1} x, sigma^{l-1} y, ..., y).

#include <gcoh/groupoid.hpp>

#include <cstdint>
#include <vector>

namespace gcoh {

/// A Z/n-torsor over every point of X.  The fibre over x is the label set
/// {0, ..., n-1}; labeling[x] is a bijection onto Z/n and z acts by
/// z.t = labeling^{-1}(labeling(t) + z).
class FiberBundle {
 public:
  FiberBundle(int n, std::vector<std::vector<int>> labeling);
  static FiberBundle trivial(Index points, int n);

  int n() const { return n_; }
  Index points() const { return static_cast<Index>(labeling_.size()); }
  const std::vector<std::vector<int>>& labeling() const { return labeling_; }
  bool is_identity_labeling() const;

  /// z.t in the fibre over x.
  int act(Index x, int z, int t) const;
  /// The unique z with z.b = a, found by searching the action.
  int difference(Index x, int a, int b) const;
  /// Label sent to 0 by the trivialization.
  int zero_label(Index x) const { return inverse_[static_cast<std::size_t>(x)][0]; }

 private:
  int n_;
  std::vector<std::vector<int>> labeling_, inverse_;
};

/// A point of T_{k,l} over `base`: the class of z.(u_1, ..., u_k, conj v_l, ..., conj v_1)
/// where u_i lies over sigma^{i-1}(x) and v_j over sigma^{j-1}(y).  (k, l) is any
/// witness of the base, not necessarily the minimal one.
struct TwistElement {
  GroupoidElement base;
  Witness level;
  int scalar = 0;
  std::vector<int> u;  // u_1..u_k
  std::vector<int> v;  // v_1..v_l
};

class Twist {
 public:
  Twist(const FiniteSystem& sys, FiberBundle bundle);

  const FiniteSystem& system() const { return *sys_; }
  const FiberBundle& bundle() const { return bundle_; }
  int n() const { return bundle_.n(); }

  /// Validates that every label sits in the right fibre.
  TwistElement make(const GroupoidElement& base, Witness level, int scalar, std::vector<int> u,
                    std::vector<int> v) const;
  /// scalar.(0, ..., 0) at the minimal witness.
  TwistElement canonical(const GroupoidElement& base, int scalar) const;
  /// The unit over (x, 0, x): the trivial class in T_{0,0}.
  TwistElement unit(Index x) const;
  /// Zero-label tuple from the trivialization, at the minimal witness.
  TwistElement section(const GroupoidElement& base) const;

  TwistElement act(int z, const TwistElement& a) const;
  /// Presentation at (k+1, l+1) obtained by appending the same label p twice.
  TwistElement lift(const TwistElement& a, int p) const;
  /// (u_1..u_{k+1}, conj v_{l+1}..conj v_1) -> u_{k+1} conj v_{l+1} (u_1..u_k, conj v_l..conj v_1).
  TwistElement restrict(const TwistElement& a) const;
  /// Presentation at the minimal witness, by repeated restriction.
  TwistElement reduce(const TwistElement& a) const;

  TwistElement multiply(const TwistElement& a, const TwistElement& b) const;
  TwistElement inverse(const TwistElement& a) const;

  /// The z with a = z.b when both sit at the same level over the same base.
  int same_level_difference(const TwistElement& a, const TwistElement& b) const;
  /// The z with a = z.b for any presentations over the same base.
  int difference(const TwistElement& a, const TwistElement& b) const;
  bool equivalent(const TwistElement& a, const TwistElement& b) const;

 private:
  Index slot_point(const TwistElement& a, bool conj, std::size_t i) const;

  const FiniteSystem* sys_;
  FiberBundle bundle_;
};

/// Runs the twist checks on the truncation: multiplication well defined on
/// classes, associativity, units and inverses, restriction compatibility,
/// recovery of the bundle along x -> (x, 1, sigma x), and the section built
/// from the trivialization being multiplicative.  Representatives are drawn
/// from a generator seeded with `seed`.
VerificationReport verify_twist(const Twist& twist, const Truncation& t, std::uint64_t seed);

}  // namespace gcoh
