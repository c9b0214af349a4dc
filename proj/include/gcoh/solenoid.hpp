#pragma once

// Rank-one localized modules Z[1/P] with rational endomorphisms, and the
// cohomology table of the (p, q)-solenoid groupoid built from them.

#include <gcoh/cochain.hpp>
#include <gcoh/torus.hpp>

#include <string>
#include <vector>

namespace gcoh {

/// The subring of Q with denominators supported on a finite set of primes.
class LocalizedModule {
 public:
  LocalizedModule() = default;  // Z
  /// Throws ValidationError if an entry is not a positive prime.
  explicit LocalizedModule(std::vector<BigInt> primes);
  /// Z[1/n]: invert every prime dividing n (n != 0).
  static LocalizedModule inverting(const BigInt& n);

  const std::vector<BigInt>& primes() const { return primes_; }
  bool is_integers() const { return primes_.empty(); }
  bool is_unit(const BigInt& n) const;
  /// |n| with every inverted prime removed.
  BigInt strip(const BigInt& n) const;
  /// "Z", "Z[1/2]", "Z[1/6]", ...
  std::string to_string() const;

  bool operator==(const LocalizedModule&) const = default;

 private:
  std::vector<BigInt> primes_;  // sorted, distinct
};

/// numerator / denominator in lowest terms, denominator > 0.
class RationalHom {
 public:
  /// Throws ValidationError if the denominator is not a unit of `module`.
  RationalHom(const LocalizedModule& module, BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_identity() const { return num_ == den_; }
  std::string to_string() const;

 private:
  BigInt num_, den_;
};

/// A kernel or cokernel of 1 - r: either a finitely generated group or the
/// whole module (when r = 1), which need not be finitely generated.
struct LocalizedResult {
  bool whole_module = false;
  FgAbGroup group;
  std::string to_string(const LocalizedModule& m) const { return whole_module ? m.to_string() : group.to_string(); }
};

LocalizedResult localized_kernel(const LocalizedModule& m, const RationalHom& r);
LocalizedResult localized_cokernel(const LocalizedModule& m, const RationalHom& r);

struct SolenoidTable {
  BigInt p, q;
  LocalizedModule module;               // H^1(X) = Z[1/p]
  RationalHom sigma1;                   // sigma* on H^1 = q/p
  std::vector<std::string> hx;          // H^n(X) for n = 0..3
  std::vector<std::string> sigma_star;  // sigma*_n for n = 0..3
  GroupoidTable gamma;                  // n = 0..3, Br = degree 3
};

/// Throws ValidationError naming the violated assumption unless |p|, |q| >= 2
/// and gcd(p, q) = 1.
SolenoidTable solenoid_table(const BigInt& p, const BigInt& q);

}  // namespace gcoh
