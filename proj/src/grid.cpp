#include "kt/grid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "kt/errors.hpp"

namespace kt {

// ---------- Grid3 ----------

std::array<VKey, 8> Grid3::corners(long long id) const {
  int a, r, h;
  unpack(id, a, r, h);
  std::array<VKey, 8> out;
  for (int bit = 0; bit < 8; ++bit) {
    int ba = bit & 1, br = (bit >> 1) & 1, bh = (bit >> 2) & 1;
    int rr = r + br, hh = h + bh, aa = (a + ba) % A;
    VKey k;
    if (rr == 0)
      k.v = {3, 0, hh, 0, 0, 0, 0};
    else
      k.v = {3, 1, aa, rr, hh, 0, 0};
    out[bit] = k;
  }
  return out;
}

std::vector<long long> Grid3::neighbors(long long id) const {
  int a, r, h;
  unpack(id, a, r, h);
  std::vector<long long> out;
  out.push_back(this->id((a + 1) % A, r, h));
  out.push_back(this->id((a + A - 1) % A, r, h));
  if (r + 1 < R) out.push_back(this->id(a, r + 1, h));
  if (r > 0) out.push_back(this->id(a, r - 1, h));  // at r=0 the inner face is an axis edge
  if (h + 1 < H) out.push_back(this->id(a, r, h + 1));
  if (h > 0) out.push_back(this->id(a, r, h - 1));
  return out;
}

long long Grid3::rotated(long long id, int sectors) const {
  int a, r, h;
  unpack(id, a, r, h);
  return this->id((a + sectors % A + A) % A, r, h);
}

// ---------- Grid4 ----------

VKey Grid4::vertex(int w, int zv, int tv, int ev, int uv) const {
  VKey k;
  if (uv == 0 && ev == 0)
    k.v = {4, 0, zv, tv, 0, 0, 0};
  else if (uv == 0 && ev > 0)
    k.v = {4, 1, w, zv, tv, ev, 0};
  else if (uv == 0 && ev < 0)
    k.v = {4, 1, (w + W - 1) % W, zv, tv, -ev, 0};
  else
    k.v = {4, 2, w, zv, tv, ev, uv};
  return k;
}

std::array<VKey, 16> Grid4::corners(long long id) const {
  int w, z, t, e, u;
  unpack(id, w, z, t, e, u);
  std::array<VKey, 16> out;
  for (int bit = 0; bit < 16; ++bit) {
    int bz = bit & 1, bt = (bit >> 1) & 1, be = (bit >> 2) & 1, bu = (bit >> 3) & 1;
    out[bit] = vertex(w, z + bz, t + bt, e + be, u + bu);
  }
  return out;
}

long long Grid4::page_partner(long long id) const {
  int w, z, t, e, u;
  unpack(id, w, z, t, e, u);
  if (u != 0) return -1;
  if (e >= 0) return this->id((w + 1) % W, z, t, -1 - e, 0);
  return this->id((w + W - 1) % W, z, t, -1 - e, 0);
}

std::vector<long long> Grid4::neighbors(long long id) const {
  int w, z, t, e, u;
  unpack(id, w, z, t, e, u);
  std::vector<long long> out;
  if (z + 1 < AS) out.push_back(this->id(w, z + 1, t, e, u));
  if (z > 0) out.push_back(this->id(w, z - 1, t, e, u));
  if (t + 1 < BS) out.push_back(this->id(w, z, t + 1, e, u));
  if (t > 0) out.push_back(this->id(w, z, t - 1, e, u));
  if (e + 1 < E) out.push_back(this->id(w, z, t, e + 1, u));
  if (e > -E) out.push_back(this->id(w, z, t, e - 1, u));
  if (u + 1 < U) out.push_back(this->id(w, z, t, e, u + 1));
  if (u > 0) out.push_back(this->id(w, z, t, e, u - 1));
  long long p = page_partner(id);
  if (p >= 0) out.push_back(p);
  return out;
}

long long Grid4::rotated(long long id, int wedges) const {
  int w, z, t, e, u;
  unpack(id, w, z, t, e, u);
  return this->id((w + wedges % W + W) % W, z, t, e, u);
}

// ---------- GridPage ----------

std::array<VKey, 8> GridPage::corners(long long id) const {
  int z, t, e;
  unpack(id, z, t, e);
  std::array<VKey, 8> out;
  for (int bit = 0; bit < 8; ++bit) {
    int bz = bit & 1, bt = (bit >> 1) & 1, be = (bit >> 2) & 1;
    VKey k;
    k.v = {5, z + bz, t + bt, e + be, 0, 0, 0};
    out[bit] = k;
  }
  return out;
}

std::vector<long long> GridPage::neighbors(long long id) const {
  int z, t, e;
  unpack(id, z, t, e);
  std::vector<long long> out;
  if (z + 1 < AS) out.push_back(this->id(z + 1, t, e));
  if (z > 0) out.push_back(this->id(z - 1, t, e));
  if (t + 1 < BS) out.push_back(this->id(z, t + 1, e));
  if (t > 0) out.push_back(this->id(z, t - 1, e));
  if (e + 1 < E) out.push_back(this->id(z, t, e + 1));
  if (e > -E) out.push_back(this->id(z, t, e - 1));
  return out;
}

// ---------- constructors ----------

Grid3 make_cylinder_grid(int A, int R, int H) {
  if (A < 3) throw SizeError("cylinder grid needs at least 3 sectors");
  if (R < 1 || H < 1) throw SizeError("cylinder grid needs R >= 1 and H >= 1");
  return Grid3{A, R, H};
}

Grid4 make_openbook_grid(int W, int AS, int BS, int E, int U) {
  if (W < 3) throw SizeError("A minimum of three distinct tiles is needed");
  if (AS < 1 || BS < 1 || E < 1 || U < 1)
    throw SizeError("open-book grid needs positive page dimensions");
  return Grid4{W, AS, BS, E, U};
}

// ---------- variant helpers ----------

bool same_grid(const GridVariant& a, const GridVariant& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Grid3>(a)) {
    auto& x = std::get<Grid3>(a);
    auto& y = std::get<Grid3>(b);
    return x.A == y.A && x.R == y.R && x.H == y.H;
  }
  if (std::holds_alternative<Grid4>(a)) {
    auto& x = std::get<Grid4>(a);
    auto& y = std::get<Grid4>(b);
    return x.W == y.W && x.AS == y.AS && x.BS == y.BS && x.E == y.E && x.U == y.U;
  }
  auto& x = std::get<GridPage>(a);
  auto& y = std::get<GridPage>(b);
  return x.AS == y.AS && x.BS == y.BS && x.E == y.E;
}

ojson grid_to_json(const GridVariant& g) {
  ojson j;
  if (std::holds_alternative<Grid3>(g)) {
    auto& x = std::get<Grid3>(g);
    j["type"] = "cylinder";
    j["sectors"] = x.A;
    j["rings"] = x.R;
    j["heights"] = x.H;
  } else if (std::holds_alternative<Grid4>(g)) {
    auto& x = std::get<Grid4>(g);
    j["type"] = "openbook";
    j["wedges"] = x.W;
    j["rows"] = x.AS;
    j["depth"] = x.BS;
    j["reach"] = x.E;
    j["lift"] = x.U;
  } else {
    auto& x = std::get<GridPage>(g);
    j["type"] = "page";
    j["rows"] = x.AS;
    j["depth"] = x.BS;
    j["reach"] = x.E;
  }
  return j;
}

GridVariant grid_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw SchemaError("grid: missing type");
  std::string t = j["type"];
  auto geti = [&](const char* k) {
    if (!j.contains(k) || !j[k].is_number_integer())
      throw SchemaError(std::string("grid: missing field ") + k);
    return (int)j[k];
  };
  if (t == "cylinder")
    return make_cylinder_grid(geti("sectors"), geti("rings"), geti("heights"));
  if (t == "openbook")
    return make_openbook_grid(geti("wedges"), geti("rows"), geti("depth"), geti("reach"),
                              geti("lift"));
  if (t == "page") {
    GridPage g{geti("rows"), geti("depth"), geti("reach")};
    if (g.AS < 1 || g.BS < 1 || g.E < 1) throw SizeError("page grid needs positive dimensions");
    return g;
  }
  throw SchemaError("grid: unknown type " + t);
}

std::vector<long long> grid_neighbors(const GridVariant& g, long long id) {
  return std::visit([&](auto& gg) { return gg.neighbors(id); }, g);
}

// ---------- Region ----------

void Region::sort_cells() {
  if (label.empty()) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return;
  }
  std::vector<size_t> idx(cells.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t i, size_t j) { return cells[i] < cells[j]; });
  std::vector<long long> nc(cells.size());
  std::vector<int> nl(cells.size());
  for (size_t k = 0; k < idx.size(); ++k) {
    nc[k] = cells[idx[k]];
    nl[k] = label[idx[k]];
  }
  cells = std::move(nc);
  label = std::move(nl);
}

static ojson cell_coords(const GridVariant& g, long long id) {
  ojson a = ojson::array();
  if (std::holds_alternative<Grid3>(g)) {
    int x, r, h;
    std::get<Grid3>(g).unpack(id, x, r, h);
    a = {x, r, h};
  } else if (std::holds_alternative<Grid4>(g)) {
    int w, z, t, e, u;
    std::get<Grid4>(g).unpack(id, w, z, t, e, u);
    a = {w, z, t, e, u};
  } else {
    int z, t, e;
    std::get<GridPage>(g).unpack(id, z, t, e);
    a = {z, t, e};
  }
  return a;
}

static long long cell_from_coords(const GridVariant& g, const ojson& a) {
  if (!a.is_array()) throw SchemaError("region: cell is not an array");
  auto geti = [&](size_t i) {
    if (i >= a.size() || !a[i].is_number_integer())
      throw SchemaError("region: bad cell coordinate");
    return (int)a[i];
  };
  if (std::holds_alternative<Grid3>(g)) {
    if (a.size() != 3) throw SchemaError("region: cylinder cell needs 3 coordinates");
    auto& gg = std::get<Grid3>(g);
    int x = geti(0), r = geti(1), h = geti(2);
    if (x < 0 || x >= gg.A || r < 0 || r >= gg.R || h < 0 || h >= gg.H)
      throw InvariantError("region: cell out of range");
    return gg.id(x, r, h);
  }
  if (std::holds_alternative<Grid4>(g)) {
    if (a.size() != 5) throw SchemaError("region: openbook cell needs 5 coordinates");
    auto& gg = std::get<Grid4>(g);
    int w = geti(0), z = geti(1), t = geti(2), e = geti(3), u = geti(4);
    if (w < 0 || w >= gg.W || z < 0 || z >= gg.AS || t < 0 || t >= gg.BS || e < -gg.E ||
        e >= gg.E || u < 0 || u >= gg.U)
      throw InvariantError("region: cell out of range");
    return gg.id(w, z, t, e, u);
  }
  if (a.size() != 3) throw SchemaError("region: page cell needs 3 coordinates");
  auto& gg = std::get<GridPage>(g);
  int z = geti(0), t = geti(1), e = geti(2);
  if (z < 0 || z >= gg.AS || t < 0 || t >= gg.BS || e < -gg.E || e >= gg.E)
    throw InvariantError("region: cell out of range");
  return gg.id(z, t, e);
}

ojson region_to_json(const Region& r) {
  ojson j;
  j["kind"] = "region.v1";
  j["grid"] = grid_to_json(r.grid);
  j["color"] = r.color;
  ojson cs = ojson::array();
  for (long long c : r.cells) cs.push_back(cell_coords(r.grid, c));
  j["cells"] = cs;
  if (!r.label.empty()) {
    j["elements"] = r.elements;
    j["labels"] = r.label;
  }
  return j;
}

Region region_from_json(const ojson& j) {
  if (!j.is_object() || j.value("kind", "") != std::string("region.v1"))
    throw SchemaError("region: missing kind region.v1");
  if (!j.contains("grid") || !j.contains("color") || !j.contains("cells"))
    throw SchemaError("region: missing field");
  Region r;
  r.grid = grid_from_json(j["grid"]);
  if (!j["color"].is_number_integer()) throw SchemaError("region: color must be an integer");
  r.color = (int)j["color"];
  if (!j["cells"].is_array()) throw SchemaError("region: cells must be an array");
  for (auto& c : j["cells"]) r.cells.push_back(cell_from_coords(r.grid, c));
  if (j.contains("labels")) {
    if (!j.contains("elements") || !j["elements"].is_array() || !j["labels"].is_array())
      throw SchemaError("region: labels require an elements table");
    for (auto& e : j["elements"]) {
      if (!e.is_string()) throw SchemaError("region: element names must be strings");
      r.elements.push_back(e);
    }
    for (auto& l : j["labels"]) {
      if (!l.is_number_integer()) throw SchemaError("region: labels must be integers");
      int v = (int)l;
      if (v < 0 || v >= (int)r.elements.size())
        throw InvariantError("region: label index out of range");
      r.label.push_back(v);
    }
    if (r.label.size() != r.cells.size())
      throw InvariantError("region: labels must match cells");
  }
  // canonical order, rejecting duplicates
  size_t n = r.cells.size();
  if (r.label.empty()) {
    std::sort(r.cells.begin(), r.cells.end());
  } else {
    r.sort_cells();
  }
  for (size_t i = 1; i < n; ++i)
    if (r.cells[i] == r.cells[i - 1]) throw InvariantError("region: duplicate cell");
  return r;
}

std::vector<std::vector<long long>> connected_components(
    const GridVariant& g, const std::vector<long long>& cells) {
  std::unordered_set<long long> inset(cells.begin(), cells.end());
  std::unordered_set<long long> seen;
  std::vector<std::vector<long long>> comps;
  for (long long start : cells) {
    if (seen.count(start)) continue;
    std::vector<long long> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      long long c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      for (long long nb : grid_neighbors(g, c))
        if (inset.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Region apply_rotation(const Region& r, int steps) {
  Region out = r;
  if (std::holds_alternative<Grid3>(r.grid)) {
    auto& g = std::get<Grid3>(r.grid);
    for (auto& c : out.cells) c = g.rotated(c, steps);
  } else if (std::holds_alternative<Grid4>(r.grid)) {
    auto& g = std::get<Grid4>(r.grid);
    for (auto& c : out.cells) c = g.rotated(c, steps);
  } else {
    throw Error("apply_rotation: page grids have no rotation");
  }
  out.sort_cells();
  return out;
}

}  // namespace kt
