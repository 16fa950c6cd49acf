#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kt/json_util.hpp"

namespace kt {

// Canonical vertex key. v[0] tags the grid family, the rest is
// family-specific; identifications (cylinder axis, open-book binding and
// pages) are already applied, so equal keys mean the same vertex.
struct VKey {
  std::array<int, 7> v{};
  bool operator==(const VKey& o) const { return v == o.v; }
  bool operator<(const VKey& o) const { return v < o.v; }
};

struct VKeyHash {
  size_t operator()(const VKey& k) const {
    size_t h = 1469598103934665603ull;
    for (int x : k.v) {
      h ^= (size_t)(uint32_t)x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Solid cylinder of A angular sectors, R radial rings, H height layers.
// Ring-0 cells are triangular prisms sharing the axis vertices; the rest
// are cubes. Angular direction wraps mod A.
struct Grid3 {
  int A = 0, R = 0, H = 0;
  long long ncells() const { return (long long)A * R * H; }
  long long id(int a, int r, int h) const { return ((long long)h * R + r) * A + a; }
  void unpack(long long id, int& a, int& r, int& h) const {
    a = (int)(id % A);
    r = (int)((id / A) % R);
    h = (int)(id / ((long long)A * R));
  }
  // 8 corners in axis-bit order (a, r, h); ring-0 inner corners collapse
  // onto the axis vertex.
  std::array<VKey, 8> corners(long long id) const;
  std::vector<long long> neighbors(long long id) const;
  long long rotated(long long id, int sectors) const;
};

// Open-book decomposition grid for the 4-ball: W wedges around a binding,
// each wedge a (z,t) x (e,u) box with e in [-E..E-1], u in [0..U-1].
// u = 0, e >= 0 cells share their bottom face with wedge w+1's mirrored
// west cells; identifications are realized through canonical vertex keys.
struct Grid4 {
  int W = 0, AS = 0, BS = 0, E = 0, U = 0;
  long long ncells() const { return (long long)W * AS * BS * 2 * E * U; }
  long long id(int w, int z, int t, int e, int u) const {
    return ((((long long)w * AS + z) * BS + t) * (2 * E) + (e + E)) * U + u;
  }
  void unpack(long long id, int& w, int& z, int& t, int& e, int& u) const {
    u = (int)(id % U);
    id /= U;
    e = (int)(id % (2 * E)) - E;
    id /= 2 * E;
    t = (int)(id % BS);
    id /= BS;
    z = (int)(id % AS);
    w = (int)(id / AS);
  }
  // 16 corners in axis-bit order (z, t, e, u).
  std::array<VKey, 16> corners(long long id) const;
  VKey vertex(int w, int zv, int tv, int ev, int uv) const;
  std::vector<long long> neighbors(long long id) const;
  long long rotated(long long id, int wedges) const;
  // page-identified partner of a u=0 cell, or -1
  long long page_partner(long long id) const;
};

// Plain box grid for a single glued double page: z rows, t depth layers,
// e in [-E..E-1] across the binding.
struct GridPage {
  int AS = 0, BS = 0, E = 0;
  long long ncells() const { return (long long)AS * BS * 2 * E; }
  long long id(int z, int t, int e) const {
    return ((long long)z * BS + t) * (2 * E) + (e + E);
  }
  void unpack(long long id, int& z, int& t, int& e) const {
    e = (int)(id % (2 * E)) - E;
    id /= 2 * E;
    t = (int)(id % BS);
    z = (int)(id / BS);
  }
  std::array<VKey, 8> corners(long long id) const;
  std::vector<long long> neighbors(long long id) const;
};

Grid3 make_cylinder_grid(int A, int R, int H);   // SizeError below minimums
Grid4 make_openbook_grid(int W, int AS, int BS, int E, int U);

using GridVariant = std::variant<Grid3, Grid4, GridPage>;

bool same_grid(const GridVariant& a, const GridVariant& b);
ojson grid_to_json(const GridVariant& g);
GridVariant grid_from_json(const ojson& j);

// A labeled set of cells of one tile (or one disk, one domain, ...).
struct Region {
  GridVariant grid;
  int color = 0;
  std::vector<long long> cells;          // sorted, unique
  std::vector<int> label;                // per cell, index into elements; may be empty
  std::vector<std::string> elements;

  void sort_cells();                     // sorts cells, permuting labels alongside
  const std::string& element_of(size_t i) const { return elements[label[i]]; }
};

ojson region_to_json(const Region& r);
Region region_from_json(const ojson& j);

std::vector<long long> grid_neighbors(const GridVariant& g, long long id);

// Connected components of a cell set under shared-codimension-1-face
// adjacency (page identifications included for Grid4).
std::vector<std::vector<long long>> connected_components(const GridVariant& g,
                                                         const std::vector<long long>& cells);

Region apply_rotation(const Region& r, int steps);  // Grid3 sectors / Grid4 wedges

}  // namespace kt
