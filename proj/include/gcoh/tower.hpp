#pragma once

// Towers G_0 <- G_1 <- ... <- G_N of finitely generated abelian groups:
// inverse limits, Mittag-Leffler certificates for lim^1, and the short exact
// sequence 0 -> lim^1 H^{n-1} -> H^n -> lim H^n -> 0.

#include <gcoh/abelian_group.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gcoh {

enum class TailPolicy {
  /// Beyond N the tower repeats: if f_{N-1} is an endomorphism of G_N (or
  /// N = 0, read as the identity) the pair (G_N, f_{N-1}) repeats forever.
  /// Otherwise only its shape repeats: later stages are finite iff G_N is,
  /// later maps are onto iff f_{N-1} is.
  Stabilized,
  /// Nothing is known beyond N.
  Truncated,
};

std::string to_string(TailPolicy p);

class Tower {
 public:
  /// maps[k] : stages[k+1] -> stages[k].  Throws ValidationError on a broken chain.
  Tower(std::vector<FgAbGroup> stages, std::vector<AbHom> maps, TailPolicy tail);

  Index length() const { return static_cast<Index>(stages_.size()) - 1; }  // N
  const std::vector<FgAbGroup>& stages() const { return stages_; }
  const std::vector<AbHom>& maps() const { return maps_; }
  TailPolicy tail() const { return tail_; }
  /// The repeating endomorphism of G_N when the tail is exactly known.
  std::optional<AbHom> tail_endomorphism() const;

 private:
  std::vector<FgAbGroup> stages_;
  std::vector<AbHom> maps_;
  TailPolicy tail_;
};

/// Image chain Im(G_{k+m} -> G_k), m = 0, 1, ...
struct StageChain {
  Index stage = 0;
  std::vector<std::string> indices;  // [G_k : image] per m, "inf" when infinite
  bool certified = false;            // chain provably constant from `stable_from` on
  Index stable_from = -1;
  std::string certificate;           // how stabilization was proved, empty if not
};

struct LimitResult {
  bool conclusive = false;
  FgAbGroup group;  // meaningful when conclusive
  bool profinite = false;  // finite stages with surjective maps: the limit is a profinite group
  std::string reason;      // why the result is inconclusive
  /// When conclusive: image of the limit in G_0 (a lattice in G_0 coordinates
  /// including the relations of G_0).
  IntMatrix projection_to_stage0;
  std::vector<StageChain> stages;
};

struct LimOneResult {
  bool zero = false;
  std::string certificate;  // Mittag-Leffler proof when zero
  Index first_uncertified_stage = -1;
  std::string reason;
  std::vector<StageChain> stages;
};

LimitResult inverse_limit(const Tower& t);
LimOneResult lim_one(const Tower& t);

struct TowerCohomology {
  Index degree = 0;
  LimOneResult sub;         // lim^1 of degree n-1 (zero for n = 0)
  LimitResult quotient;     // lim of degree n
  bool group_determined = false;
  std::optional<FgAbGroup> group;
};

/// towers[m] is the tower H^m(X_k); degrees n-1 and n must be present.
TowerCohomology tower_groupoid_cohomology(const std::vector<Tower>& towers, Index n);

}  // namespace gcoh
