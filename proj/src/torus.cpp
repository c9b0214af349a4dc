#include <gcoh/torus.hpp>

#include <gcoh/errors.hpp>

namespace gcoh {

TorusEndo::TorusEndo(IntMatrix r) : r_(std::move(r)) {
  if (r_.rows() == 0 || r_.rows() != r_.cols()) throw ValidationError("torus: R must be a nonempty square matrix");
  degree_ = scalar::abs(determinant(r_));
  if (degree_ == 0) throw ValidationError("torus: det R = 0, so R does not define a covering map");
}

namespace {

Index torus_top(const TorusEndo& e) { return std::max<Index>(e.k() + 1, 3); }

}  // namespace

std::vector<AbHom> torus_cohomology_data(const TorusEndo& e) {
  std::vector<AbHom> out;
  for (Index n = 0; n <= e.k(); ++n) {
    IntMatrix w = exterior_power(e.matrix(), n);
    const auto g = FgAbGroup::free(w.rows());
    out.emplace_back(g, g, std::move(w));
  }
  return pad_sigma_star(std::move(out), torus_top(e));
}

GroupoidTable torus_groupoid_cohomology(const TorusEndo& e) {
  const Index top = torus_top(e);
  std::vector<IntMatrix> one_minus;
  for (Index n = 0; n <= top; ++n) {
    if (n > e.k()) {
      one_minus.emplace_back(0, 0);
      continue;
    }
    const IntMatrix w = exterior_power(e.matrix(), n);
    one_minus.emplace_back(IntMatrix::Identity(w.rows(), w.cols()) - w);
  }
  GroupoidTable table;
  for (Index n = 0; n <= top; ++n) {
    const IntMatrix& a = one_minus[static_cast<std::size_t>(n)];
    GammaCohomology h;
    h.degree = n;
    h.kernel_part = FgAbGroup::free(a.cols() - matrix_rank(a));
    if (n > 0) h.cokernel_part = cokernel(one_minus[static_cast<std::size_t>(n - 1)]);
    // kernels of maps between free groups are free
    h.split_certified = true;
    h.split_sum = direct_sum(h.kernel_part, h.cokernel_part);
    table.degrees.push_back(std::move(h));
  }
  table.brauer = table.degrees[3];
  return table;
}

GroupoidTable groupoid_table(const std::vector<AbHom>& sigma_star, Index top) {
  top = std::max<Index>(top, 3);
  const auto padded = pad_sigma_star(sigma_star, top);
  GroupoidTable table;
  for (Index n = 0; n <= top; ++n) table.degrees.push_back(groupoid_cohomology(padded, n));
  table.brauer = table.degrees[3];
  return table;
}

}  // namespace gcoh
