#pragma once

// Small finite groups given by a multiplication table on 0..order-1.

#include <cstddef>
#include <string>
#include <vector>

namespace gcoh {

class FiniteGroup {
 public:
  /// Validates closure, associativity, a two-sided identity and inverses.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein();
  /// S3 as permutations of {0,1,2}; element 0 is the identity.
  static FiniteGroup symmetric3();

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long e) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Every group of order <= 6 up to isomorphism.
std::vector<FiniteGroup> small_groups();

}  // namespace gcoh
