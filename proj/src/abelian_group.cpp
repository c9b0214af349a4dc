#include <gcoh/abelian_group.hpp>

#include <gcoh/errors.hpp>

#include <ostream>
#include <sstream>

namespace gcoh {

FgAbGroup FgAbGroup::free(Index rank) {
  FgAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const BigInt& order) { return from_factors(0, {order}); }

FgAbGroup FgAbGroup::from_factors(Index free_rank, const std::vector<BigInt>& orders) {
  FgAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<BigInt> finite;
  for (const auto& d : orders) {
    if (d == 0)
      ++g.free_rank_;
    else if (scalar::abs(d) != 1)
      finite.push_back(scalar::abs(d));
  }
  if (finite.empty()) return g;
  const Index n = static_cast<Index>(finite.size());
  IntMatrix diag = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) diag(i, i) = finite[static_cast<std::size_t>(i)];
  for (const auto& d : smith_normal_form(diag).diagonal)
    if (d > 1) g.torsion_.push_back(d);
  return g;
}

BigInt FgAbGroup::torsion_order() const {
  BigInt order = 1;
  for (const auto& d : torsion_) order *= d;
  return order;
}

BigInt FgAbGroup::generator_order(Index i) const {
  if (i < 0 || i >= generator_count()) throw ValidationError("generator index out of range");
  return i < torsion_count() ? torsion_[static_cast<std::size_t>(i)] : BigInt(0);
}

IntMatrix FgAbGroup::relations() const {
  const Index g = generator_count(), t = torsion_count();
  IntMatrix rel = IntMatrix::Zero(g, t);
  for (Index i = 0; i < t; ++i) rel(i, i) = torsion_[static_cast<std::size_t>(i)];
  return rel;
}

IntVector FgAbGroup::reduce(const IntVector& coords) const {
  if (coords.size() != generator_count()) throw ValidationError("element has wrong number of coordinates");
  IntVector out = coords;
  for (Index i = 0; i < torsion_count(); ++i) out(i) = scalar::mod(out(i), torsion_[static_cast<std::size_t>(i)]);
  return out;
}

bool FgAbGroup::is_zero_element(const IntVector& coords) const {
  const IntVector r = reduce(coords);
  for (Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return false;
  return true;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) { return os << g.to_string(); }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbGroup::from_factors(a.free_rank() + b.free_rank(), orders);
}

FgAbGroup cokernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<BigInt> orders;
  for (Index i = 0; i < snf.rank; ++i) orders.push_back(snf.diagonal[static_cast<std::size_t>(i)]);
  return FgAbGroup::from_factors(m.rows() - snf.rank, orders);
}

namespace {

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// Coordinates of each column of `vectors` in the basis `basis`.
IntMatrix coordinates_in(const IntMatrix& basis, const IntMatrix& vectors) {
  IntMatrix out(basis.cols(), vectors.cols());
  for (Index j = 0; j < vectors.cols(); ++j) {
    auto x = hermite_solve(basis, vectors.col(j));
    if (!x) throw InternalError("vector is not in the lattice it was assumed to lie in");
    out.col(j) = *x;
  }
  return out;
}

}  // namespace

IntMatrix lattice_basis(const IntMatrix& generators) { return image_basis(generators); }

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const IntMatrix ba = lattice_basis(a), bb = lattice_basis(b);
  return ba.cols() == bb.cols() && ba == bb;
}

bool lattice_contains(const IntMatrix& super, const IntMatrix& sub) {
  for (Index j = 0; j < sub.cols(); ++j)
    if (!hermite_solve(super, sub.col(j))) return false;
  return true;
}

FgAbGroup subquotient(const IntMatrix& numerator, const IntMatrix& denominator) {
  if (numerator.rows() != denominator.rows()) throw ValidationError("subquotient: ambient dimension mismatch");
  const IntMatrix basis = lattice_basis(hstack(numerator, denominator));
  return cokernel(coordinates_in(basis, denominator));
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw ValidationError("homomorphism matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + ", expected " +
                          std::to_string(target_.generator_count()) + "x" +
                          std::to_string(source_.generator_count()));
  for (Index j = 0; j < source_.torsion_count(); ++j) {
    const BigInt& d = source_.torsion()[static_cast<std::size_t>(j)];
    IntVector img = d * matrix_.col(j);
    if (!target_.is_zero_element(img))
      throw ValidationError("homomorphism is not well defined: generator " + std::to_string(j) + " has order " +
                            d.get_str() + " but its image does not");
  }
  for (Index j = 0; j < matrix_.cols(); ++j) matrix_.col(j) = target_.reduce(matrix_.col(j));
}

AbHom AbHom::identity(const FgAbGroup& g) {
  return AbHom(g, g, IntMatrix::Identity(g.generator_count(), g.generator_count()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return AbHom(source, target, IntMatrix::Zero(target.generator_count(), source.generator_count()));
}

IntVector AbHom::apply(const IntVector& coords) const { return target_.reduce(matrix_ * source_.reduce(coords)); }

bool operator==(const AbHom& a, const AbHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.target() == g.source())) throw ValidationError("compose: target of f differs from source of g");
  return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbHom identity_minus(const AbHom& f) {
  if (!f.is_endomorphism()) throw ValidationError("1 - f needs an endomorphism");
  const Index n = f.source().generator_count();
  return AbHom(f.source(), f.target(), IntMatrix(IntMatrix::Identity(n, n) - f.matrix()));
}

IntMatrix image_lattice(const AbHom& f) { return lattice_basis(hstack(f.matrix(), f.target().relations())); }

FgAbGroup kernel(const AbHom& f) {
  const Index a = f.source().generator_count();
  // x is in the kernel iff M x + R_B y = 0 for some y
  const IntMatrix joint = hstack(f.matrix(), f.target().relations());
  const IntMatrix k = kernel_basis(joint);
  const IntMatrix preimage = k.topRows(a);
  return subquotient(preimage, f.source().relations());
}

FgAbGroup cokernel(const AbHom& f) { return cokernel(hstack(f.matrix(), f.target().relations())); }

FgAbGroup image(const AbHom& f) { return subquotient(f.matrix(), f.target().relations()); }

}  // namespace gcoh
