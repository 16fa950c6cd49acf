#include "kt/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "kt/errors.hpp"

namespace kt {

std::string HomologyProfile::str() const {
  std::ostringstream ss;
  ss << "(";
  for (size_t i = 0; i < betti.size(); ++i) ss << (i ? "," : "") << betti[i];
  ss << ")";
  if (!torsion_free()) {
    ss << " torsion";
    for (size_t k = 0; k < torsion.size(); ++k)
      for (long long d : torsion[k]) ss << " H" << k << ":Z/" << d;
  }
  return ss.str();
}

HomologyProfile make_profile(std::initializer_list<long long> betti) {
  HomologyProfile p;
  p.betti = betti;
  p.torsion.assign(p.betti.size(), {});
  return p;
}

// ---------- triangulation ----------

namespace {

// fan triangulation of a possibly-degenerate quad given in cyclic order
void tri_quad_cyclic(const std::array<VKey, 4>& cyc, std::vector<std::array<VKey, 3>>& out) {
  std::vector<VKey> poly;
  for (auto& v : cyc)
    if (poly.empty() || !(v == poly.back())) poly.push_back(v);
  while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
  if (poly.size() < 3) return;
  size_t m = 0;
  for (size_t i = 1; i < poly.size(); ++i)
    if (poly[i] < poly[m]) m = i;
  std::rotate(poly.begin(), poly.begin() + m, poly.end());
  for (size_t i = 1; i + 1 < poly.size(); ++i) {
    std::array<VKey, 3> tri = {poly[0], poly[i], poly[i + 1]};
    if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2]) continue;
    out.push_back(tri);
  }
}

// corners of the sub-cube with axis `ax` fixed to `side`, in axis-bit
// order of the remaining axes
std::vector<VKey> facet_corners(const std::vector<VKey>& corners, int dim, int ax, int side) {
  std::vector<VKey> out;
  for (int bit = 0; bit < (1 << (dim - 1)); ++bit) {
    int full = 0, rb = 0;
    for (int a = 0; a < dim; ++a) {
      if (a == ax) {
        full |= side << a;
      } else {
        full |= ((bit >> rb) & 1) << a;
        ++rb;
      }
    }
    out.push_back(corners[full]);
  }
  return out;
}

void tri_cube3(const std::vector<VKey>& c, std::vector<std::vector<VKey>>& out) {
  VKey apex = *std::min_element(c.begin(), c.end());
  for (int ax = 0; ax < 3; ++ax)
    for (int side = 0; side < 2; ++side) {
      auto f = facet_corners(c, 3, ax, side);  // axis-bit order b0,b1
      std::array<VKey, 4> cyc = {f[0], f[1], f[3], f[2]};
      std::vector<std::array<VKey, 3>> tris;
      tri_quad_cyclic(cyc, tris);
      for (auto& t : tris) {
        if (t[0] == apex || t[1] == apex || t[2] == apex) continue;
        std::vector<VKey> tet = {apex, t[0], t[1], t[2]};
        std::sort(tet.begin(), tet.end());
        bool degen = false;
        for (int i = 0; i + 1 < 4; ++i)
          if (tet[i] == tet[i + 1]) degen = true;
        if (!degen) out.push_back(std::move(tet));
      }
    }
}

void tri_cube4(const std::vector<VKey>& c, std::vector<std::vector<VKey>>& out) {
  VKey apex = *std::min_element(c.begin(), c.end());
  for (int ax = 0; ax < 4; ++ax)
    for (int side = 0; side < 2; ++side) {
      auto f = facet_corners(c, 4, ax, side);
      std::vector<std::vector<VKey>> tets;
      tri_cube3(f, tets);
      for (auto& t : tets) {
        if (std::find(t.begin(), t.end(), apex) != t.end()) continue;
        std::vector<VKey> s = t;
        s.push_back(apex);
        std::sort(s.begin(), s.end());
        bool degen = false;
        for (size_t i = 0; i + 1 < s.size(); ++i)
          if (s[i] == s[i + 1]) degen = true;
        if (!degen) out.push_back(std::move(s));
      }
    }
}

}  // namespace

void triangulate_cube(const std::vector<VKey>& corners, int dim,
                      std::vector<std::vector<VKey>>& out) {
  if (dim == 3) {
    tri_cube3(corners, out);
  } else if (dim == 4) {
    tri_cube4(corners, out);
  } else if (dim == 2) {
    std::array<VKey, 4> cyc = {corners[0], corners[1], corners[3], corners[2]};
    std::vector<std::array<VKey, 3>> tris;
    tri_quad_cyclic(cyc, tris);
    for (auto& t : tris) {
      std::vector<VKey> s(t.begin(), t.end());
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  } else {
    throw Error("triangulate_cube: unsupported dimension");
  }
}

Triangulated triangulate_region(const Region& r) {
  std::vector<std::vector<VKey>> simps;
  int dim;
  if (std::holds_alternative<Grid3>(r.grid)) {
    dim = 3;
    auto& g = std::get<Grid3>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      triangulate_cube(std::vector<VKey>(cs.begin(), cs.end()), 3, simps);
    }
  } else if (std::holds_alternative<Grid4>(r.grid)) {
    dim = 4;
    auto& g = std::get<Grid4>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      triangulate_cube(std::vector<VKey>(cs.begin(), cs.end()), 4, simps);
    }
  } else {
    dim = 3;
    auto& g = std::get<GridPage>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      triangulate_cube(std::vector<VKey>(cs.begin(), cs.end()), 3, simps);
    }
  }

  // dense vertex ids in key order
  std::vector<VKey> verts;
  for (auto& s : simps)
    for (auto& v : s) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::unordered_map<VKey, int, VKeyHash> vid;
  vid.reserve(verts.size() * 2);
  for (size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = (int)i;

  Triangulated out;
  out.verts = std::move(verts);
  out.cx.dim = dim;
  out.cx.top.reserve(simps.size());
  for (auto& s : simps) {
    std::vector<int> t(s.size());
    for (size_t i = 0; i < s.size(); ++i) t[i] = vid[s[i]];
    std::sort(t.begin(), t.end());
    out.cx.top.push_back(std::move(t));
  }
  std::sort(out.cx.top.begin(), out.cx.top.end());
  out.cx.top.erase(std::unique(out.cx.top.begin(), out.cx.top.end()), out.cx.top.end());
  return out;
}

// ---------- homology ----------

namespace {

struct TupleHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= (size_t)(uint32_t)x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// faces[k] = sorted list of k-simplices
std::vector<std::vector<std::vector<int>>> generate_faces(const SimpComplex& cx) {
  std::vector<std::vector<std::vector<int>>> faces(cx.dim + 1);
  faces[cx.dim] = cx.top;
  for (int k = cx.dim; k > 0; --k) {
    std::unordered_map<std::vector<int>, char, TupleHash> seen;
    for (auto& s : faces[k]) {
      std::vector<int> f(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) f[w++] = s[i];
        seen.emplace(f, 0);
      }
    }
    faces[k - 1].reserve(seen.size());
    for (auto& [f, _] : seen) faces[k - 1].push_back(f);
    std::sort(faces[k - 1].begin(), faces[k - 1].end());
  }
  return faces;
}

}  // namespace

HomologyProfile homology(const SimpComplex& cx) {
  auto faces = generate_faces(cx);
  int dim = cx.dim;
  std::vector<long long> nk(dim + 1);
  for (int k = 0; k <= dim; ++k) nk[k] = (long long)faces[k].size();

  // rank of each boundary map and torsion of its cokernel piece
  std::vector<long long> rank(dim + 2, 0);
  std::vector<std::vector<long long>> tors(dim + 1);
  for (int k = 1; k <= dim; ++k) {
    std::unordered_map<std::vector<int>, int, TupleHash> idx;
    idx.reserve(faces[k - 1].size() * 2);
    for (size_t i = 0; i < faces[k - 1].size(); ++i) idx[faces[k - 1][i]] = (int)i;
    SparseMat m((int)faces[k - 1].size(), (int)faces[k].size());
    for (size_t j = 0; j < faces[k].size(); ++j) {
      auto& s = faces[k][j];
      std::vector<int> f(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) f[w++] = s[i];
        m.add(idx.at(f), (int)j, (drop % 2) ? -1 : 1);
      }
    }
    auto sm = smith(std::move(m));
    rank[k] = sm.rank;
    tors[k - 1] = sm.torsion;  // torsion of H_{k-1} comes from d_k
  }

  HomologyProfile p;
  p.betti.resize(dim + 1);
  p.torsion.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    p.betti[k] = nk[k] - rank[k] - rank[k + 1];
    p.torsion[k] = tors[k];
  }
  return p;
}

HomologyProfile homology_of_region(const Region& r) {
  if (r.cells.empty()) throw InvariantError("homology: empty region");
  return homology(triangulate_region(r).cx);
}

SimpComplex boundary_complex(const SimpComplex& cx) {
  std::unordered_map<std::vector<int>, int, TupleHash> count;
  for (auto& s : cx.top) {
    std::vector<int> f(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) f[w++] = s[i];
      count[f] += 1;
    }
  }
  SimpComplex b;
  b.dim = cx.dim - 1;
  for (auto& [f, c] : count)
    if (c == 1) b.top.push_back(f);
  std::sort(b.top.begin(), b.top.end());
  return b;
}

HomologyProfile boundary_homology(const Region& r) {
  auto tri = triangulate_region(r);
  return homology(boundary_complex(tri.cx));
}

long long euler_of_complex(const SimpComplex& cx) {
  auto faces = generate_faces(cx);
  long long chi = 0;
  for (int k = 0; k <= cx.dim; ++k)
    chi += (k % 2 ? -1 : 1) * (long long)faces[k].size();
  return chi;
}

// ---------- cellular Euler characteristic ----------

namespace {

// all faces of a combinatorial d-cube as canonical (sorted unique) corner
// key sets, paired with the number of axes along which the keys vary
void cell_faces(const std::vector<VKey>& corners, int dim,
                std::map<std::vector<VKey>, int>& acc) {
  int nfaces = 1;
  for (int i = 0; i < dim; ++i) nfaces *= 3;  // per axis: low, high, interval
  for (int code = 0; code < nfaces; ++code) {
    int c = code;
    std::vector<int> spec(dim);  // 0 low, 1 high, 2 interval
    for (int a = 0; a < dim; ++a) {
      spec[a] = c % 3;
      c /= 3;
    }
    std::vector<VKey> fc;
    for (int bit = 0; bit < (1 << dim); ++bit) {
      bool ok = true;
      for (int a = 0; a < dim; ++a) {
        int b = (bit >> a) & 1;
        if (spec[a] != 2 && b != spec[a]) ok = false;
      }
      if (ok) fc.push_back(corners[bit]);
    }
    // varying-axis count = true dimension once collapses are accounted for
    int vdim = 0;
    for (int a = 0; a < dim; ++a) {
      if (spec[a] != 2) continue;
      bool varies = false;
      for (int bit = 0; bit < (1 << dim); ++bit) {
        bool in_face = true;
        for (int ax = 0; ax < dim; ++ax) {
          int b = (bit >> ax) & 1;
          if (spec[ax] != 2 && b != spec[ax]) in_face = false;
        }
        if (!in_face || ((bit >> a) & 1)) continue;
        if (!(corners[bit] == corners[bit | (1 << a)])) varies = true;
      }
      if (varies) ++vdim;
    }
    std::sort(fc.begin(), fc.end());
    fc.erase(std::unique(fc.begin(), fc.end()), fc.end());
    auto it = acc.find(fc);
    if (it == acc.end())
      acc.emplace(std::move(fc), vdim);
    else if (it->second != vdim)
      throw Error("cellular_euler: inconsistent face dimension");
  }
}

}  // namespace

long long cellular_euler(const Region& r) {
  std::map<std::vector<VKey>, int> acc;
  if (std::holds_alternative<Grid3>(r.grid)) {
    auto& g = std::get<Grid3>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      cell_faces(std::vector<VKey>(cs.begin(), cs.end()), 3, acc);
    }
  } else if (std::holds_alternative<Grid4>(r.grid)) {
    auto& g = std::get<Grid4>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      cell_faces(std::vector<VKey>(cs.begin(), cs.end()), 4, acc);
    }
  } else {
    auto& g = std::get<GridPage>(r.grid);
    for (long long c : r.cells) {
      auto cs = g.corners(c);
      cell_faces(std::vector<VKey>(cs.begin(), cs.end()), 3, acc);
    }
  }
  long long chi = 0;
  for (auto& [f, d] : acc) chi += (d % 2 ? -1 : 1);
  return chi;
}

// ---------- abstract complexes ----------

HomologyProfile homology_of_complex2(const Complex2& c) {
  SparseMat d1(c.nverts, (int)c.edges.size());
  for (size_t j = 0; j < c.edges.size(); ++j) {
    d1.add(c.edges[j].first, (int)j, -1);
    d1.add(c.edges[j].second, (int)j, 1);
  }
  SparseMat d2((int)c.edges.size(), (int)c.faces.size());
  for (size_t j = 0; j < c.faces.size(); ++j)
    for (auto& [e, sgn] : c.faces[j]) d2.add(e, (int)j, sgn);
  auto s1 = smith(std::move(d1));
  auto s2 = smith(std::move(d2));
  HomologyProfile p;
  p.betti = {(long long)c.nverts - s1.rank,
             (long long)c.edges.size() - s1.rank - s2.rank,
             (long long)c.faces.size() - s2.rank};
  p.torsion = {s1.torsion, s2.torsion, {}};
  return p;
}

HomologyProfile homology_of_multigraph(int nverts,
                                       const std::vector<std::pair<int, int>>& edges) {
  Complex2 c;
  c.nverts = nverts;
  c.edges = edges;
  auto p = homology_of_complex2(c);
  p.betti.pop_back();
  p.torsion.pop_back();
  return p;
}

}  // namespace kt
