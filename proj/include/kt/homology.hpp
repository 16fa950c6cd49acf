#pragma once
#include <vector>

#include "kt/grid.hpp"
#include "kt/smith.hpp"

namespace kt {

struct HomologyProfile {
  std::vector<long long> betti;                 // b0..b_dim
  std::vector<std::vector<long long>> torsion;  // torsion of H_k, divisibility order

  bool torsion_free() const {
    for (auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
  bool operator==(const HomologyProfile& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  std::string str() const;
};

HomologyProfile make_profile(std::initializer_list<long long> betti);

// A simplicial complex given by its top-dimensional simplices (lower
// faces are generated). Vertices are dense ints.
struct SimpComplex {
  int dim = 0;
  std::vector<std::vector<int>> top;  // each sorted, distinct entries
};

// Cone-from-least-vertex triangulation of a combinatorial cube with
// corners in axis-bit order; repeated corners collapse. The simplex set
// depends only on the corner labeling, so shared faces triangulate
// identically from both sides.
void triangulate_cube(const std::vector<VKey>& corners, int dim,
                      std::vector<std::vector<VKey>>& out);

// Triangulation of a cell region. Returns the top simplices on dense
// vertex ids along with the vertex key table.
struct Triangulated {
  SimpComplex cx;
  std::vector<VKey> verts;  // dense id -> key, sorted
};
Triangulated triangulate_region(const Region& r);

HomologyProfile homology(const SimpComplex& cx);
HomologyProfile homology_of_region(const Region& r);

// Boundary subcomplex: codimension-1 simplices incident to exactly one
// top simplex, as a standalone complex.
SimpComplex boundary_complex(const SimpComplex& cx);
HomologyProfile boundary_homology(const Region& r);

long long euler_of_complex(const SimpComplex& cx);   // alternating simplex counts
long long cellular_euler(const Region& r);           // face-lattice count, identifications applied

// Abstract 2-complex (used for trisected-surface spines): faces are
// closed edge walks; edges are vertex pairs.
struct Complex2 {
  int nverts = 0;
  std::vector<std::pair<int, int>> edges;
  // each face: sequence of (edge index, +1/-1) traversed around the face
  std::vector<std::vector<std::pair<int, int>>> faces;
};
HomologyProfile homology_of_complex2(const Complex2& c);

// Multigraph homology (spine graphs): vertices + parallel edges allowed.
HomologyProfile homology_of_multigraph(int nverts,
                                       const std::vector<std::pair<int, int>>& edges);

}  // namespace kt
