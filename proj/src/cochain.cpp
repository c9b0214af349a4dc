#include <gcoh/cochain.hpp>

#include <gcoh/errors.hpp>

#include <sstream>
#include <string>

namespace gcoh {

namespace {

std::string shape(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

CochainComplex::CochainComplex(std::vector<Index> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  for (Index r : ranks_)
    if (r < 0) throw ValidationError("cochain complex: negative rank");
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (differentials_.size() != expected)
    throw ValidationError("cochain complex: expected " + std::to_string(expected) + " differentials, got " +
                          std::to_string(differentials_.size()));
  for (std::size_t n = 0; n < differentials_.size(); ++n) {
    const IntMatrix& d = differentials_[n];
    if (d.rows() != ranks_[n + 1] || d.cols() != ranks_[n])
      throw ValidationError("cochain complex: d^" + std::to_string(n) + " has shape " + shape(d) + ", expected " +
                            std::to_string(ranks_[n + 1]) + "x" + std::to_string(ranks_[n]));
  }
  for (std::size_t n = 0; n + 1 < differentials_.size(); ++n)
    if (!(differentials_[n + 1] * differentials_[n]).isZero())
      throw ValidationError("cochain complex: d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0");
}

Index CochainComplex::rank(Index n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix CochainComplex::differential(Index n) const {
  if (n >= 0 && n < static_cast<Index>(differentials_.size())) return differentials_[static_cast<std::size_t>(n)];
  return IntMatrix::Zero(rank(n + 1), rank(n));
}

IntVector Cohomology::coordinates(const IntVector& cocycle) const {
  auto x = hermite_solve(cycles, cocycle);
  if (!x) throw InternalError("H^" + std::to_string(degree) + ": vector is not a cocycle");
  const IntVector y = to_smith * *x;
  IntVector out(static_cast<Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) out(static_cast<Index>(i)) = y(kept[i]);
  return group.reduce(out);
}

Cohomology cohomology(const CochainComplex& c, Index n) {
  if (n < 0) throw ValidationError("cohomology: negative degree");
  Cohomology out;
  out.degree = n;
  out.cycles = kernel_basis(c.differential(n));
  const IntMatrix boundaries = c.differential(n - 1);
  const Index z = out.cycles.cols();
  IntMatrix q(z, boundaries.cols());
  for (Index j = 0; j < boundaries.cols(); ++j) {
    auto x = hermite_solve(out.cycles, boundaries.col(j));
    if (!x) throw InternalError("cohomology: coboundary is not a cocycle");
    q.col(j) = *x;
  }
  const auto snf = smith_normal_form(q);
  out.to_smith = snf.U;
  std::vector<BigInt> orders;
  for (Index i = 0; i < snf.rank; ++i)
    if (snf.diagonal[static_cast<std::size_t>(i)] > 1) {
      out.kept.push_back(i);
      orders.push_back(snf.diagonal[static_cast<std::size_t>(i)]);
    }
  for (Index i = snf.rank; i < z; ++i) out.kept.push_back(i);
  out.group = FgAbGroup::from_factors(z - snf.rank, orders);
  if (out.group.torsion() != orders) throw InternalError("cohomology: Smith diagonal is not a divisibility chain");
  out.lifts = IntMatrix(c.rank(n), static_cast<Index>(out.kept.size()));
  const IntMatrix basis = out.cycles * snf.U_inv;
  for (std::size_t i = 0; i < out.kept.size(); ++i) out.lifts.col(static_cast<Index>(i)) = basis.col(out.kept[i]);
  return out;
}

CochainMap::CochainMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const Index top = std::max(source_.top_degree(), target_.top_degree());
  if (static_cast<Index>(components_.size()) > top + 1)
    throw ValidationError("cochain map: more components than degrees");
  for (Index n = 0; n <= top; ++n) {
    if (n < static_cast<Index>(components_.size())) {
      const IntMatrix& f = components_[static_cast<std::size_t>(n)];
      if (f.rows() != target_.rank(n) || f.cols() != source_.rank(n))
        throw ValidationError("cochain map: f^" + std::to_string(n) + " has shape " + shape(f) + ", expected " +
                              std::to_string(target_.rank(n)) + "x" + std::to_string(source_.rank(n)));
    }
  }
  for (Index n = 0; n <= top; ++n)
    if (target_.differential(n) * component(n) != component(n + 1) * source_.differential(n))
      throw ValidationError("cochain map does not commute with the differential in degree " + std::to_string(n));
}

IntMatrix CochainMap::component(Index n) const {
  if (n >= 0 && n < static_cast<Index>(components_.size())) return components_[static_cast<std::size_t>(n)];
  return IntMatrix::Zero(target_.rank(n), source_.rank(n));
}

CochainMap CochainMap::identity(const CochainComplex& c) {
  std::vector<IntMatrix> comps;
  for (Index r : c.ranks()) comps.push_back(IntMatrix::Identity(r, r));
  return CochainMap(c, c, std::move(comps));
}

CochainMap CochainMap::zero(const CochainComplex& source, const CochainComplex& target) {
  return CochainMap(source, target, {});
}

CochainMap compose(const CochainMap& g, const CochainMap& f) {
  if (f.target().ranks() != g.source().ranks() || f.target().differentials() != g.source().differentials())
    throw ValidationError("compose: target of f differs from source of g");
  const Index top = std::max(f.source().top_degree(), g.target().top_degree());
  std::vector<IntMatrix> comps;
  for (Index n = 0; n <= top; ++n) comps.push_back(g.component(n) * f.component(n));
  return CochainMap(f.source(), g.target(), std::move(comps));
}

AbHom induced_map(const CochainMap& f, const Cohomology& source, const Cohomology& target) {
  if (source.degree != target.degree) throw ValidationError("induced_map: degree mismatch");
  const Index n = source.degree;
  const IntMatrix fn = f.component(n);
  if (fn.cols() != source.lifts.rows() || fn.rows() != target.lifts.rows())
    throw ValidationError("induced_map: cohomology data does not belong to this map");
  IntMatrix m(target.group.generator_count(), source.group.generator_count());
  for (Index j = 0; j < source.lifts.cols(); ++j) m.col(j) = target.coordinates(IntVector(fn * source.lifts.col(j)));
  return AbHom(source.group, target.group, std::move(m));
}

AbHom induced_map(const CochainMap& f, Index n) {
  return induced_map(f, cohomology(f.source(), n), cohomology(f.target(), n));
}

std::vector<AbHom> pad_sigma_star(std::vector<AbHom> sigma_star, Index top) {
  while (static_cast<Index>(sigma_star.size()) <= top) sigma_star.push_back(AbHom::identity(FgAbGroup::trivial()));
  return sigma_star;
}

std::vector<AbHom> induced_on_cohomology(const CochainMap& f, Index min_top) {
  if (f.source().ranks() != f.target().ranks() || f.source().differentials() != f.target().differentials())
    throw ValidationError("sigma* needs an endomorphism of a cochain complex");
  std::vector<AbHom> out;
  for (Index n = 0; n <= f.source().top_degree(); ++n) {
    const Cohomology h = cohomology(f.source(), n);
    out.push_back(induced_map(f, h, h));
  }
  return pad_sigma_star(std::move(out), min_top);
}

std::string GammaCohomology::to_string() const {
  if (split_sum) return split_sum->to_string();
  return "ext(coker=" + cokernel_part.to_string() + ", ker=" + kernel_part.to_string() + ")";
}

GammaCohomology groupoid_cohomology(const std::vector<AbHom>& sigma_star, Index n) {
  if (n < 0) throw ValidationError("groupoid_cohomology: negative degree");
  if (static_cast<Index>(sigma_star.size()) <= n)
    throw ValidationError("groupoid_cohomology: sigma* missing in degree " + std::to_string(n));
  for (Index m = std::max<Index>(0, n - 1); m <= n; ++m)
    if (!sigma_star[static_cast<std::size_t>(m)].is_endomorphism())
      throw ValidationError("groupoid_cohomology: sigma*_" + std::to_string(m) + " is not an endomorphism");
  GammaCohomology out;
  out.degree = n;
  out.kernel_part = kernel(identity_minus(sigma_star[static_cast<std::size_t>(n)]));
  if (n > 0) out.cokernel_part = cokernel(identity_minus(sigma_star[static_cast<std::size_t>(n - 1)]));
  // Ext(free, -) = 0, and a trivial end leaves nothing to extend
  out.split_certified = out.kernel_part.is_free() || out.cokernel_part.is_trivial();
  if (out.split_certified) out.split_sum = direct_sum(out.kernel_part, out.cokernel_part);
  return out;
}

BrauerEnds brauer_ends(const std::vector<AbHom>& sigma_star) {
  if (sigma_star.size() < 4) throw ValidationError("brauer_ends: sigma* needed in degrees 0..3");
  BrauerEnds out;
  out.h3 = groupoid_cohomology(sigma_star, 3);
  out.cokernel_part = out.h3.cokernel_part;
  out.kernel_part = out.h3.kernel_part;
  return out;
}

}  // namespace gcoh
