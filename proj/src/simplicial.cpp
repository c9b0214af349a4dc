#include <gcoh/simplicial.hpp>

#include <gcoh/errors.hpp>

#include <algorithm>
#include <set>

namespace gcoh {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<std::vector<std::string>>& simplices)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!label_index_.emplace(vertices_[i], static_cast<Index>(i)).second)
      throw ValidationError("simplicial complex: repeated vertex '" + vertices_[i] + "'");
  std::vector<Simplex> facets;
  for (Index v = 0; v < vertex_count(); ++v) facets.push_back({v});
  for (const auto& s : simplices) {
    Simplex idx;
    for (const auto& label : s) idx.push_back(vertex_index(label));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw ValidationError("simplicial complex: simplex with a repeated vertex");
    if (idx.empty()) throw ValidationError("simplicial complex: empty simplex");
    facets.push_back(std::move(idx));
  }
  close(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(Index vertex_count, const std::vector<Simplex>& facets) {
  std::vector<std::string> labels;
  for (Index v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  std::vector<std::vector<std::string>> simplices;
  for (const auto& f : facets) {
    std::vector<std::string> s;
    for (Index v : f) {
      if (v < 0 || v >= vertex_count) throw ValidationError("simplicial complex: vertex index out of range");
      s.push_back(labels[static_cast<std::size_t>(v)]);
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(labels), simplices);
}

Index SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw ValidationError("simplicial complex: unknown vertex '" + label + "'");
  return it->second;
}

void SimplicialComplex::close(std::vector<Simplex> facets) {
  std::set<Simplex> all;
  for (const auto& f : facets) {
    // every nonempty subset of f
    const std::size_t n = f.size();
    if (n > 20) throw ValidationError("simplicial complex: simplex dimension too large");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  for (const auto& s : all) {
    const std::size_t q = s.size() - 1;
    if (simplices_.size() <= q) simplices_.resize(q + 1);
    simplices_[q].push_back(s);
  }
  // std::set order is lexicographic, so each dimension is already sorted
  for (auto& level : simplices_)
    for (std::size_t i = 0; i < level.size(); ++i) position_[level[i]] = static_cast<Index>(i);
}

const std::vector<Simplex>& SimplicialComplex::simplices(Index q) const {
  static const std::vector<Simplex> none;
  if (q < 0 || q > dimension()) return none;
  return simplices_[static_cast<std::size_t>(q)];
}

Index SimplicialComplex::index_of(const Simplex& s) const {
  auto it = position_.find(s);
  return it == position_.end() ? -1 : it->second;
}

CochainComplex cochain_complex(const SimplicialComplex& k) {
  std::vector<Index> ranks;
  std::vector<IntMatrix> ds;
  for (Index q = 0; q <= k.dimension(); ++q) ranks.push_back(static_cast<Index>(k.simplices(q).size()));
  for (Index q = 0; q < k.dimension(); ++q) {
    IntMatrix d = IntMatrix::Zero(ranks[static_cast<std::size_t>(q + 1)], ranks[static_cast<std::size_t>(q)]);
    const auto& upper = k.simplices(q + 1);
    for (std::size_t t = 0; t < upper.size(); ++t) {
      const Simplex& tau = upper[t];
      for (std::size_t i = 0; i < tau.size(); ++i) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        d(static_cast<Index>(t), k.index_of(face)) += (i % 2 == 0) ? 1 : -1;
      }
    }
    ds.push_back(std::move(d));
  }
  return CochainComplex(std::move(ranks), std::move(ds));
}

namespace {

// Image of a simplex with orientation sign; sign 0 when degenerate.
std::pair<Simplex, int> oriented_image(const std::vector<Index>& map, const Simplex& s) {
  Simplex img;
  for (Index v : s) img.push_back(map[static_cast<std::size_t>(v)]);
  int sign = 1;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = 0; b + 1 < img.size() - a; ++b)
      if (img[b] > img[b + 1]) {
        std::swap(img[b], img[b + 1]);
        sign = -sign;
      }
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) sign = 0;
  return {img, sign};
}

}  // namespace

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<Index> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  if (static_cast<Index>(vertex_map_.size()) != source_.vertex_count())
    throw ValidationError("simplicial map: vertex map must cover every source vertex");
  for (Index v : vertex_map_)
    if (v < 0 || v >= target_.vertex_count()) throw ValidationError("simplicial map: image vertex out of range");
  for (Index q = 0; q <= source_.dimension(); ++q)
    for (const auto& s : source_.simplices(q)) {
      Simplex img;
      for (Index v : s) img.push_back(vertex_map_[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!target_.contains(img)) {
        std::string text;
        for (Index v : s) text += (text.empty() ? "" : ",") + source_.vertices()[static_cast<std::size_t>(v)];
        throw ValidationError("simplicial map: image of simplex {" + text + "} is not a simplex");
      }
    }
}

SimplicialMap SimplicialMap::from_labels(const SimplicialComplex& source, const SimplicialComplex& target,
                                         const std::map<std::string, std::string>& vertex_map) {
  std::vector<Index> map;
  for (const auto& v : source.vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw ValidationError("simplicial map: no image for vertex '" + v + "'");
    map.push_back(target.vertex_index(it->second));
  }
  for (const auto& [from, to] : vertex_map) source.vertex_index(from);
  return SimplicialMap(source, target, std::move(map));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
  std::vector<Index> map;
  for (Index v = 0; v < k.vertex_count(); ++v) map.push_back(v);
  return SimplicialMap(k, k, std::move(map));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (g.source().vertices() != f.target().vertices()) throw ValidationError("compose: incompatible simplicial maps");
  std::vector<Index> map;
  for (Index v : f.vertex_map()) map.push_back(g.vertex_map()[static_cast<std::size_t>(v)]);
  return SimplicialMap(f.source(), g.target(), std::move(map));
}

IntMatrix chain_matrix(const SimplicialMap& f, Index q) {
  const auto& src = f.source().simplices(q);
  IntMatrix m = IntMatrix::Zero(static_cast<Index>(f.target().simplices(q).size()), static_cast<Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto [img, sign] = oriented_image(f.vertex_map(), src[j]);
    if (sign != 0) m(f.target().index_of(img), static_cast<Index>(j)) = sign;
  }
  return m;
}

CochainMap induced_cochain_map(const SimplicialMap& f) {
  std::vector<IntMatrix> comps;
  const Index top = std::max(f.source().dimension(), f.target().dimension());
  for (Index q = 0; q <= top; ++q) comps.push_back(chain_matrix(f, q).transpose());
  return CochainMap(cochain_complex(f.target()), cochain_complex(f.source()), std::move(comps));
}

SimplicialComplex circle(Index n) {
  if (n < 3) throw ValidationError("circle: need at least 3 vertices");
  std::vector<Simplex> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return SimplicialComplex::from_facets(n, edges);
}

namespace {

// Signed cyclic edge j -> j+1 of the m-gon as a chain in the lexicographic basis.
void add_cyclic_edge(IntMatrix& chain, const SimplicialComplex& k, Index m, Index j, Index col, int coeff) {
  const Index a = j % m, b = (j + 1) % m;
  const int sign = a < b ? 1 : -1;
  chain(k.index_of({std::min(a, b), std::max(a, b)}), col) += sign * coeff;
}

}  // namespace

CircleMap circle_map(Index n, Index degree) {
  const SimplicialComplex base = circle(n);
  const Index m = degree < 0 ? -degree : degree;
  if (degree == 0) {
    SimplicialMap constant(base, base, std::vector<Index>(static_cast<std::size_t>(n), 0));
    return {0, base, base, constant, induced_cochain_map(constant)};
  }
  const SimplicialComplex fine = circle(n * m);
  std::vector<Index> map;
  for (Index i = 0; i < n * m; ++i) map.push_back(scalar::mod<Index>(degree < 0 ? -i : i, n));
  SimplicialMap approx(fine, base, std::move(map));

  // subdivision chain map base -> fine
  IntMatrix sd0 = IntMatrix::Zero(n * m, n);
  for (Index j = 0; j < n; ++j) sd0(j * m, j) = 1;
  IntMatrix sd1 = IntMatrix::Zero(n * m, n);
  for (Index j = 0; j < n; ++j) {
    // base edge j -> j+1 in cyclic orientation, expressed in base's lex basis sign
    const int base_sign = j < (j + 1) % n ? 1 : -1;
    const Index col = base.index_of({std::min(j, (j + 1) % n), std::max(j, (j + 1) % n)});
    for (Index t = 0; t < m; ++t) add_cyclic_edge(sd1, fine, n * m, j * m + t, col, base_sign);
  }
  const CochainComplex cb = cochain_complex(base), cf = cochain_complex(fine);
  CochainMap sd_sharp(cf, cb, {IntMatrix(sd0.transpose()), IntMatrix(sd1.transpose())});
  CochainMap self = compose(sd_sharp, induced_cochain_map(approx));
  return {degree, base, fine, approx, self};
}

Index winding_number(const std::vector<Index>& walk, Index n) {
  Index steps = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Index a = walk[i], b = walk[(i + 1) % walk.size()];
    const Index diff = scalar::mod<Index>(b - a, n);
    if (diff == 1)
      ++steps;
    else if (diff == n - 1)
      --steps;
    else if (diff != 0)
      throw ValidationError("winding_number: walk jumps more than one edge");
  }
  if (steps % n != 0) throw ValidationError("winding_number: walk is not closed");
  return steps / n;
}

}  // namespace gcoh
