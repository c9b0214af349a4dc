#include <gcoh/solenoid.hpp>

#include <gcoh/errors.hpp>

#include <algorithm>

namespace gcoh {

namespace {

std::vector<BigInt> prime_factors(BigInt n) {
  n = scalar::abs(n);
  std::vector<BigInt> out;
  for (BigInt d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

LocalizedModule::LocalizedModule(std::vector<BigInt> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_)
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      throw ValidationError("localized module: " + p.get_str() + " is not a prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

LocalizedModule LocalizedModule::inverting(const BigInt& n) {
  if (n == 0) throw ValidationError("localized module: cannot invert 0");
  return LocalizedModule(prime_factors(n));
}

bool LocalizedModule::is_unit(const BigInt& n) const { return n != 0 && strip(n) == 1; }

BigInt LocalizedModule::strip(const BigInt& n) const {
  BigInt out = scalar::abs(n);
  if (out == 0) return out;
  for (const auto& p : primes_)
    while (out % p == 0) out /= p;
  return out;
}

std::string LocalizedModule::to_string() const {
  if (primes_.empty()) return "Z";
  BigInt prod = 1;
  for (const auto& p : primes_) prod *= p;
  return "Z[1/" + prod.get_str() + "]";
}

RationalHom::RationalHom(const LocalizedModule& module, BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw ValidationError("rational endomorphism: zero denominator");
  const BigInt g = scalar::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (!module.is_unit(den_))
    throw ValidationError("rational endomorphism: denominator " + den_.get_str() + " is not invertible in " +
                          module.to_string());
}

std::string RationalHom::to_string() const {
  return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
}

LocalizedResult localized_kernel(const LocalizedModule&, const RationalHom& r) {
  // a rank-one torsion-free module: 1 - r is injective unless it vanishes
  LocalizedResult out;
  out.whole_module = r.is_identity();
  return out;
}

LocalizedResult localized_cokernel(const LocalizedModule& m, const RationalHom& r) {
  LocalizedResult out;
  if (r.is_identity()) {
    out.whole_module = true;
    return out;
  }
  // 1 - r = (den - num) / den; den is a unit, and so is every inverted prime
  out.group = FgAbGroup::cyclic(m.strip(r.denominator() - r.numerator()));
  return out;
}

SolenoidTable solenoid_table(const BigInt& p, const BigInt& q) {
  if (scalar::abs(p) < 2) throw ValidationError("solenoid: |p| >= 2 is required (got p = " + p.get_str() + ")");
  if (scalar::abs(q) < 2) throw ValidationError("solenoid: |q| >= 2 is required (got q = " + q.get_str() + ")");
  if (scalar::gcd(p, q) != 1)
    throw ValidationError("solenoid: gcd(p, q) = 1 is required (got gcd " + scalar::gcd(p, q).get_str() + ")");
  const LocalizedModule module = LocalizedModule::inverting(p);
  const RationalHom sigma1(module, q, p);
  SolenoidTable t{p, q, module, sigma1, {}, {}, {}};
  t.hx = {"Z", module.to_string(), "0", "0"};
  t.sigma_star = {"1", sigma1.to_string(), "0", "0"};

  const LocalizedResult ker1 = localized_kernel(module, sigma1);
  const LocalizedResult coker1 = localized_cokernel(module, sigma1);
  if (ker1.whole_module || coker1.whole_module) throw InternalError("solenoid: q/p = 1 for valid input");

  // H^0 row: sigma* = id on Z, so ker = Z and coker = Z
  const FgAbGroup z = FgAbGroup::free(1);
  std::vector<std::pair<FgAbGroup, FgAbGroup>> parts = {
      {z, FgAbGroup()},          // n = 0: ker(1 - id on Z)
      {ker1.group, z},           // n = 1: ker(1 - q/p), coker(1 - id on Z)
      {FgAbGroup(), coker1.group},  // n = 2: ker on 0, coker(1 - q/p)
      {FgAbGroup(), FgAbGroup()},  // n = 3
  };
  for (std::size_t n = 0; n < parts.size(); ++n) {
    GammaCohomology h;
    h.degree = static_cast<Index>(n);
    h.kernel_part = parts[n].first;
    h.cokernel_part = parts[n].second;
    h.split_certified = h.kernel_part.is_free() || h.cokernel_part.is_trivial();
    if (h.split_certified) h.split_sum = direct_sum(h.kernel_part, h.cokernel_part);
    t.gamma.degrees.push_back(std::move(h));
  }
  t.gamma.brauer = t.gamma.degrees[3];
  return t;
}

}  // namespace gcoh
