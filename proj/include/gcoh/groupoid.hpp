#pragma once

// Finite discrete systems (X, sigma) and explicit truncations of the groupoid
// of triples (x, m, y) with sigma^k(x) = sigma^l(y), m = k - l.

#include <gcoh/abelian_group.hpp>
#include <gcoh/report.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gcoh {

/// A finite set with a self-map.  Points are indices 0..size()-1 carrying
/// string labels; every self-map of a finite discrete space is allowed.
class FiniteSystem {
 public:
  FiniteSystem(std::vector<std::string> labels, std::vector<Index> sigma);
  /// Points labelled "0", "1", ...
  static FiniteSystem from_map(std::vector<Index> sigma);
  /// Throws ValidationError on duplicates, missing or unknown labels.
  static FiniteSystem from_labels(const std::vector<std::string>& points,
                                  const std::map<std::string, std::string>& sigma);

  Index size() const { return static_cast<Index>(sigma_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index x) const { return labels_[static_cast<std::size_t>(x)]; }
  Index index_of(const std::string& label) const;
  Index sigma(Index x) const { return sigma_[static_cast<std::size_t>(x)]; }
  const std::vector<Index>& map() const { return sigma_; }
  /// sigma^k(x), O(1) for any k >= 0.
  Index iterate(Index x, long k) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Index> sigma_;
  std::vector<std::vector<Index>> powers_;  // powers_[x][k] for k < 2|X|
  std::vector<long> period_;                // cycle length eventually reached from x
};

struct Witness {
  long k = 0;
  long l = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// (x, m, y) together with its minimal witness.  Identity is (x, m, y) only.
struct GroupoidElement {
  Index x = 0;
  long m = 0;
  Index y = 0;
  Witness witness;

  Index range() const { return x; }
  Index source() const { return y; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.x == b.x && a.m == b.m && a.y == b.y;
  }
  friend std::strong_ordering operator<=>(const GroupoidElement& a, const GroupoidElement& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.y <=> b.y;
  }
};

bool is_witness(const FiniteSystem& sys, Index x, Index y, long k, long l);
/// Smallest (k, l) with k - l = m and sigma^k(x) = sigma^l(y), if any.
std::optional<Witness> minimal_witness(const FiniteSystem& sys, Index x, long m, Index y);
/// Throws ValidationError when (x, m, y) is not in the groupoid.
GroupoidElement make_element(const FiniteSystem& sys, Index x, long m, Index y);
GroupoidElement unit(Index x);
/// (x, 1, sigma(x)): the generators j(x).
GroupoidElement generator(const FiniteSystem& sys, Index x);

/// Sorted list of (x, m, y) with |m| <= max_abs_m admitting a witness with
/// k, l <= max_witness.
std::vector<GroupoidElement> enumerate(const FiniteSystem& sys, long max_abs_m, long max_witness);

bool composable(const GroupoidElement& g, const GroupoidElement& h);
/// g h; the witness of the product is recomputed from scratch.
GroupoidElement compose(const FiniteSystem& sys, const GroupoidElement& g, const GroupoidElement& h);
GroupoidElement inverse(const GroupoidElement& g);

std::string describe(const FiniteSystem& sys, const GroupoidElement& g);

/// An enumerated truncation with lookup.
class Truncation {
 public:
  Truncation(const FiniteSystem& sys, long max_abs_m, long max_witness);

  const FiniteSystem& system() const { return *sys_; }
  long max_abs_m() const { return max_abs_m_; }
  long max_witness() const { return max_witness_; }
  const std::vector<GroupoidElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Position of (x, m, y) in elements(), if present.
  std::optional<std::size_t> find(Index x, long m, Index y) const;
  std::optional<std::size_t> find(const GroupoidElement& g) const { return find(g.x, g.m, g.y); }
  /// Indices of elements with range x.
  const std::vector<std::size_t>& with_range(Index x) const { return by_range_[static_cast<std::size_t>(x)]; }

 private:
  const FiniteSystem* sys_;
  long max_abs_m_, max_witness_;
  std::vector<GroupoidElement> elements_;
  std::vector<std::vector<std::size_t>> by_range_;
};

/// Witness validity and minimality, range/source, unit, inverse and
/// associativity laws over every composable pair and triple of the truncation.
VerificationReport verify_groupoid_laws(const Truncation& t);

/// A cocycle extended from g : X -> A by the sum formula along witnesses.
struct CocycleExtension {
  FgAbGroup coefficients;
  std::vector<IntVector> generator_values;  // g
  std::vector<IntVector> values;            // f on the truncation, aligned with elements()
  VerificationReport report;
};

/// sum_{i<k} g(sigma^i x) - sum_{j<l} g(sigma^j y) for the given witness.
IntVector cocycle_value(const FiniteSystem& sys, const FgAbGroup& a, const std::vector<IntVector>& g, Index x,
                        Index y, const Witness& w);

/// Extends g over the truncation and checks witness independence, additivity,
/// the restriction round trip and (for bounds >= 1) uniqueness by paired
/// perturbation.
CocycleExtension extend_cocycle(const Truncation& t, const FgAbGroup& a, const std::vector<IntVector>& g);

}  // namespace gcoh
