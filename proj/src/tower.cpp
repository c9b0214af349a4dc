#include <gcoh/tower.hpp>

#include <gcoh/errors.hpp>
#include <gcoh/polynomial.hpp>

namespace gcoh {

std::string to_string(TailPolicy p) { return p == TailPolicy::Stabilized ? "stabilized" : "truncated"; }

Tower::Tower(std::vector<FgAbGroup> stages, std::vector<AbHom> maps, TailPolicy tail)
    : stages_(std::move(stages)), maps_(std::move(maps)), tail_(tail) {
  if (stages_.empty()) throw ValidationError("tower: at least one stage is required");
  if (maps_.size() + 1 != stages_.size())
    throw ValidationError("tower: " + std::to_string(stages_.size()) + " stages need " +
                          std::to_string(stages_.size() - 1) + " maps, got " + std::to_string(maps_.size()));
  for (std::size_t k = 0; k < maps_.size(); ++k)
    if (!(maps_[k].source() == stages_[k + 1]) || !(maps_[k].target() == stages_[k]))
      throw ValidationError("tower: map " + std::to_string(k) + " must go from stage " + std::to_string(k + 1) +
                            " to stage " + std::to_string(k));
}

std::optional<AbHom> Tower::tail_endomorphism() const {
  if (tail_ != TailPolicy::Stabilized) return std::nullopt;
  if (maps_.empty()) return AbHom::identity(stages_.back());
  if (maps_.back().is_endomorphism()) return maps_.back();
  return std::nullopt;
}

namespace {

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// Subgroup of g generated by the columns, as a canonical lattice containing the relations.
IntMatrix lattice_in(const FgAbGroup& g, const IntMatrix& gens) { return lattice_basis(hstack(gens, g.relations())); }

// Canonical bases compare entrywise once the shapes agree.
bool same(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

IntMatrix whole(const FgAbGroup& g) {
  return lattice_in(g, IntMatrix::Identity(g.generator_count(), g.generator_count()));
}

IntMatrix push(const AbHom& f, const IntMatrix& lattice) { return lattice_in(f.target(), f.matrix() * lattice); }

std::string index_string(const IntMatrix& lattice) {
  const FgAbGroup q = cokernel(lattice);
  return q.is_finite() ? q.torsion_order().get_str() : "inf";
}

// Push a lattice of stage j down to stage k <= j.
IntMatrix push_down(const Tower& t, IntMatrix lattice, Index j, Index k) {
  for (Index i = j; i > k; --i) lattice = push(t.maps()[static_cast<std::size_t>(i - 1)], lattice);
  return lattice;
}

bool all_finite(const Tower& t) {
  for (const auto& g : t.stages())
    if (!g.is_finite()) return false;
  return true;
}

bool all_onto(const Tower& t) {
  for (const auto& f : t.maps())
    if (!cokernel(f).is_trivial()) return false;
  return true;
}

// Everything known about the repeating endomorphism (G, f).
struct TailAnalysis {
  std::vector<IntMatrix> images;  // f^m(G), m = 0..
  bool stable = false;            // the image chain stabilizes
  Index stable_index = -1;        // first M with f^M(G) = f^{M+1}(G)
  std::optional<IntMatrix> limit_image;  // the subgroup of G isomorphic to the limit
  std::string note;
};

TailAnalysis analyze_tail(const AbHom& f) {
  const FgAbGroup& g = f.source();
  const Index t = g.torsion_count(), s = g.free_rank(), n = g.generator_count();
  TailAnalysis out;
  out.images.push_back(whole(g));

  // free quotient: f induces A on Z^s; L = A^s Z^s carries an injective restriction
  const IntMatrix a = f.matrix().bottomRightCorner(s, s);
  IntMatrix l = IntMatrix::Identity(s, s);
  for (Index i = 0; i < s; ++i) l = lattice_basis(IntMatrix(a * l));
  const Index rho = l.cols();
  IntMatrix a_l(rho, rho);
  for (Index j = 0; j < rho; ++j) {
    auto x = hermite_solve(l, IntVector(a * l.col(j)));
    if (!x) throw InternalError("tower: eventual image is not invariant");
    a_l.col(j) = *x;
  }
  out.stable = rho == 0 || scalar::abs(determinant(a_l)) == 1;

  auto iterate_from = [&](IntMatrix start) {
    std::vector<IntMatrix> chain{start};
    while (true) {
      IntMatrix next = push(f, chain.back());
      if (same(next, chain.back())) return chain;
      chain.push_back(std::move(next));
    }
  };

  if (out.stable) {
    out.images = iterate_from(out.images.front());
    out.stable_index = static_cast<Index>(out.images.size()) - 1;
    out.images.push_back(out.images.back());
    out.limit_image = out.images.back();
    return out;
  }

  for (int m = 0; m < 8; ++m) out.images.push_back(push(f, out.images.back()));
  const auto chi_u = unit_part(characteristic_polynomial(a_l));
  if (!chi_u) {
    out.note = "factor search for the unit part of the characteristic polynomial exceeded its budget";
    return out;
  }
  // limit of the free quotient: L meets ker chi_u(A)
  const IntMatrix w = l * kernel_basis(evaluate(*chi_u, a_l));
  IntMatrix h(n, t + w.cols());
  h.setZero();
  for (Index i = 0; i < t; ++i) h(i, i) = 1;
  h.bottomRightCorner(s, w.cols()) = w;
  const auto chain = iterate_from(lattice_in(g, h));
  out.limit_image = chain.back();
  return out;
}

// Chains for the stages 0..N; horizon counts steps beyond the data.
std::vector<StageChain> chains_within_data(const Tower& t) {
  std::vector<StageChain> out;
  const Index n = t.length();
  for (Index k = 0; k <= n; ++k) {
    StageChain c;
    c.stage = k;
    for (Index j = k; j <= n; ++j)
      c.indices.push_back(index_string(push_down(t, whole(t.stages()[static_cast<std::size_t>(j)]), j, k)));
    out.push_back(std::move(c));
  }
  return out;
}

struct Analysis {
  std::vector<StageChain> stages;
  std::optional<TailAnalysis> tail;
};

Analysis analyze(const Tower& t) {
  Analysis out;
  const Index n = t.length();
  const auto endo = t.tail_endomorphism();
  if (!endo) {
    out.stages = chains_within_data(t);
    const bool finite = all_finite(t), onto = all_onto(t);
    for (auto& c : out.stages) {
      const bool stage_finite = t.stages()[static_cast<std::size_t>(c.stage)].is_finite();
      if (t.tail() == TailPolicy::Stabilized && onto) {
        c.certified = true;
        c.stable_from = 0;
        c.certificate = "every map is onto";
      } else if (t.tail() == TailPolicy::Stabilized && finite) {
        c.certified = true;
        c.certificate = "every stage is finite";
      } else if (t.tail() == TailPolicy::Truncated && stage_finite) {
        c.certified = true;
        c.certificate = "stage is finite";
      }
    }
    return out;
  }

  TailAnalysis tail = analyze_tail(*endo);
  for (Index k = 0; k <= n; ++k) {
    StageChain c;
    c.stage = k;
    std::vector<IntMatrix> chain;
    for (Index j = k; j < n; ++j) chain.push_back(push_down(t, whole(t.stages()[static_cast<std::size_t>(j)]), j, k));
    for (const auto& img : tail.images) chain.push_back(push_down(t, img, n, k));
    for (const auto& lat : chain) c.indices.push_back(index_string(lat));
    if (tail.stable) {
      Index from = static_cast<Index>(chain.size()) - 1;
      while (from > 0 && same(chain[static_cast<std::size_t>(from - 1)], chain.back())) --from;
      c.certified = true;
      c.stable_from = from;
      c.certificate = "tail images stabilize: f^" + std::to_string(tail.stable_index) + "(G_N) = f^" +
                      std::to_string(tail.stable_index + 1) + "(G_N)";
    } else if (tail.limit_image) {
      const IntMatrix target = push_down(t, *tail.limit_image, n, k);
      for (std::size_t m = 0; m < chain.size(); ++m)
        if (same(chain[m], target)) {
          c.certified = true;
          c.stable_from = static_cast<Index>(m);
          c.certificate = "image chain reaches the image of the limit";
          break;
        }
    }
    out.stages.push_back(std::move(c));
  }
  out.tail = std::move(tail);
  return out;
}

}  // namespace

LimitResult inverse_limit(const Tower& t) {
  Analysis a = analyze(t);
  LimitResult out;
  out.stages = a.stages;
  if (t.tail() == TailPolicy::Truncated) {
    out.reason = "truncated tower: the limit depends on the unknown tail";
    return out;
  }
  if (!a.tail) {
    out.profinite = all_finite(t) && all_onto(t);
    out.reason = "stabilized tower whose last map is not an endomorphism: the limit is not determined at finite rank";
    if (out.profinite) out.reason += "; finite stages with surjective maps give a profinite limit";
    return out;
  }
  if (!a.tail->limit_image) {
    out.reason = a.tail->note;
    return out;
  }
  const FgAbGroup& gn = t.stages().back();
  out.conclusive = true;
  out.group = subquotient(*a.tail->limit_image, gn.relations());
  out.projection_to_stage0 = push_down(t, *a.tail->limit_image, t.length(), 0);
  return out;
}

LimOneResult lim_one(const Tower& t) {
  Analysis a = analyze(t);
  LimOneResult out;
  out.stages = a.stages;
  if (t.tail() == TailPolicy::Truncated) {
    out.reason = "truncated tower: stages beyond the data are unknown";
    out.first_uncertified_stage = t.length() + 1;
    for (const auto& c : out.stages)
      if (!c.certified) {
        out.first_uncertified_stage = c.stage;
        break;
      }
    return out;
  }
  for (const auto& c : out.stages)
    if (!c.certified) {
      out.first_uncertified_stage = c.stage;
      out.reason = "image chain at stage " + std::to_string(c.stage) + " has no stabilization certificate";
      return out;
    }
  out.zero = true;
  out.certificate = "Mittag-Leffler: " + out.stages.front().certificate;
  return out;
}

TowerCohomology tower_groupoid_cohomology(const std::vector<Tower>& towers, Index n) {
  if (n < 0) throw ValidationError("tower cohomology: negative degree");
  if (static_cast<Index>(towers.size()) <= n)
    throw ValidationError("tower cohomology: tower for degree " + std::to_string(n) + " is missing");
  TowerCohomology out;
  out.degree = n;
  if (n == 0) {
    out.sub.zero = true;
    out.sub.certificate = "degree -1 is zero";
  } else {
    out.sub = lim_one(towers[static_cast<std::size_t>(n - 1)]);
  }
  out.quotient = inverse_limit(towers[static_cast<std::size_t>(n)]);
  out.group_determined = out.sub.zero && out.quotient.conclusive;
  if (out.group_determined) out.group = out.quotient.group;
  return out;
}

}  // namespace gcoh
