#pragma once

// Finite simplicial complexes and simplicial maps as sources of cochain
// complexes and cochain maps, plus a generator for degree-d circle maps.

#include <gcoh/cochain.hpp>

#include <map>
#include <string>
#include <vector>

namespace gcoh {

using Simplex = std::vector<Index>;  // sorted vertex indices

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Vertex order is the order of `vertices`; every face of every listed
  /// simplex is added.  Throws ValidationError on unknown or repeated vertices.
  SimplicialComplex(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& simplices);

  static SimplicialComplex from_facets(Index vertex_count, const std::vector<Simplex>& facets);

  Index vertex_count() const { return static_cast<Index>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  Index vertex_index(const std::string& label) const;
  /// -1 for the empty complex.
  Index dimension() const { return static_cast<Index>(simplices_.size()) - 1; }
  /// Simplices of dimension q in lexicographic order.
  const std::vector<Simplex>& simplices(Index q) const;
  /// Position of s within simplices(s.size() - 1), or -1.
  Index index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

 private:
  void close(std::vector<Simplex> facets);

  std::vector<std::string> vertices_;
  std::map<std::string, Index> label_index_;
  std::vector<std::vector<Simplex>> simplices_;
  std::map<Simplex, Index> position_;
};

/// Cochains with Z coefficients: (d phi)(tau) = sum_i (-1)^i phi(tau minus v_i).
CochainComplex cochain_complex(const SimplicialComplex& k);

/// Vertex map between complexes; each simplex must map onto a simplex.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<Index> vertex_map);
  /// vertexMap given by labels; a missing vertex is an error.
  static SimplicialMap from_labels(const SimplicialComplex& source, const SimplicialComplex& target,
                                   const std::map<std::string, std::string>& vertex_map);
  static SimplicialMap identity(const SimplicialComplex& k);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<Index>& vertex_map() const { return vertex_map_; }

 private:
  SimplicialComplex source_, target_;
  std::vector<Index> vertex_map_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Matrix of the chain map in degree q: column sigma holds +-f(sigma), or 0
/// when the image is degenerate.
IntMatrix chain_matrix(const SimplicialMap& f, Index q);

/// f^# : C*(target) -> C*(source), the transpose of the chain map.
CochainMap induced_cochain_map(const SimplicialMap& f);

/// Boundary of an n-gon: vertices 0..n-1, edges {i, i+1 mod n}.  n >= 3.
SimplicialComplex circle(Index n);

/**
 * The map z -> z^d on the circle with n vertices, realized simplicially.
 *
 * The source is the |d|-fold subdivision of the n-gon (|d| n vertices, small
 * vertex i sitting at position i / |d| of the big circle), and the vertex map
 * i -> sign(d) i mod n wraps it d times around the n-gon.  The self-map on
 * cochains of the n-gon is sd^# f^#, where sd sends the edge j -> j+1 of the
 * n-gon (cyclic orientation) to the sum of its |d| small edges.  For d = 0 the
 * map is constant at vertex 0 and no subdivision is used.
 */
struct CircleMap {
  Index degree = 0;
  SimplicialComplex base;        // the n-gon
  SimplicialComplex subdivided;  // the source of `approximation`
  SimplicialMap approximation;   // subdivided -> base
  CochainMap self;               // endomorphism of cochain_complex(base)
};

CircleMap circle_map(Index n, Index degree);

/// Signed winding number of a closed vertex walk on the n-gon.
Index winding_number(const std::vector<Index>& walk, Index n);

}  // namespace gcoh
