#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "kt/errors.hpp"
#include "kt/grid.hpp"
#include "kt/homology.hpp"
#include "kt/json_util.hpp"
#include "kt/laurent.hpp"
#include "kt/smith.hpp"

using namespace kt;

TEST_CASE("laurent arithmetic") {
  Laurent t = Laurent::term(1, 1);
  Laurent p = t * t - t + Laurent(1);  // t^2 - t + 1
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(0) == 1);
  CHECK(eval_ll(p, 1) == 1);
  CHECK(eval_ll(p, 2) == 3);

  Laurent q = divide_exact(p * t, t);
  CHECK(q == p);
  CHECK_THROWS_AS(divide_exact(p, t + Laurent(1)), Error);

  Laurent shifted = p * Laurent::term(-1, -3);
  CHECK(unit_equal(p, shifted));
  CHECK(normalize_alexander(shifted) == p);
  CHECK_FALSE(unit_equal(p, p + Laurent(1)));

  Laurent z;
  CHECK(z.is_zero());
  CHECK((p - p).is_zero());
  CHECK((z * p).is_zero());
}

TEST_CASE("dense smith diagonal") {
  // classical example with torsion
  std::vector<std::vector<long long>> m = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  auto d = dense_snf_diagonal(m);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
  CHECK(d[2] == 156);
  for (size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
}

TEST_CASE("smith agrees with minor gcds") {
  // invariant factors are quotients of gcds of k-by-k minors
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + (int)(rng() % 2);
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (auto& row : m)
      for (auto& v : row) v = (long long)(rng() % 7) - 3;

    auto det_of = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
      int k = (int)rows.size();
      std::vector<std::vector<double>> dummy;  // exact cofactor expansion instead
      std::function<long long(std::vector<int>, std::vector<int>)> go =
          [&](std::vector<int> rs, std::vector<int> cs) -> long long {
        if (rs.size() == 1) return m[rs[0]][cs[0]];
        long long acc = 0;
        for (size_t i = 0; i < rs.size(); ++i) {
          std::vector<int> rr;
          for (size_t t = 0; t < rs.size(); ++t)
            if (t != i) rr.push_back(rs[t]);
          std::vector<int> cc(cs.begin() + 1, cs.end());
          long long sub = go(rr, cc);
          acc += ((i % 2) ? -1 : 1) * m[rs[i]][cs[0]] * sub;
        }
        return acc;
      };
      (void)k;
      (void)dummy;
      return go(rows, cols);
    };

    std::vector<long long> d(n + 1, 0);
    d[0] = 1;
    for (int k = 1; k <= n; ++k) {
      long long g = 0;
      std::vector<int> rows(k), cols(k);
      std::function<void(int, int)> pick_rows = [&](int start, int got) {
        if (got == k) {
          std::function<void(int, int)> pick_cols = [&](int cs, int cg) {
            if (cg == k) {
              g = std::gcd(g, det_of(rows, cols));
              return;
            }
            for (int c = cs; c < n; ++c) {
              cols[cg] = c;
              pick_cols(c + 1, cg + 1);
            }
          };
          pick_cols(0, 0);
          return;
        }
        for (int r = start; r < n; ++r) {
          rows[got] = r;
          pick_rows(r + 1, got + 1);
        }
      };
      pick_rows(0, 0);
      d[k] = g < 0 ? -g : g;
    }
    std::vector<long long> expect;
    for (int k = 1; k <= n && d[k] != 0; ++k) expect.push_back(d[k] / d[k - 1]);
    CHECK(dense_snf_diagonal(m) == expect);
  }
}

TEST_CASE("smith invariant under permutations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    int nr = 4 + (int)(rng() % 5), nc = 4 + (int)(rng() % 5);
    std::vector<std::vector<long long>> m(nr, std::vector<long long>(nc));
    for (auto& row : m)
      for (auto& v : row) v = (long long)(rng() % 9) - 4;
    auto base = dense_snf_diagonal(m);

    std::vector<int> pr(nr), pc(nc);
    for (int i = 0; i < nr; ++i) pr[i] = i;
    for (int j = 0; j < nc; ++j) pc[j] = j;
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    std::vector<std::vector<long long>> pm(nr, std::vector<long long>(nc));
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) pm[i][j] = m[pr[i]][pc[j]];
    CHECK(dense_snf_diagonal(pm) == base);

    // sparse path agrees on rank and torsion
    SparseMat sm(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) sm.add(i, j, m[i][j]);
    auto sr = smith(std::move(sm));
    CHECK(sr.rank == (long long)base.size());
    std::vector<long long> tors;
    for (auto v : base)
      if (v > 1) tors.push_back(v);
    CHECK(sr.torsion == tors);
  }
}

TEST_CASE("grid constructors enforce minimums") {
  CHECK_THROWS_AS(make_cylinder_grid(2, 1, 1), SizeError);
  CHECK_THROWS_AS(make_openbook_grid(2, 4, 3, 6, 4), SizeError);
  try {
    make_openbook_grid(2, 4, 3, 6, 4);
  } catch (const SizeError& e) {
    CHECK(std::string(e.what()) == "A minimum of three distinct tiles is needed");
  }
  auto g = make_cylinder_grid(3, 1, 1);
  CHECK(g.ncells() == 3);
}

static Region box_region(const Grid3& g, int a0, int a1, int r0, int r1, int h0, int h1) {
  Region reg;
  reg.grid = g;
  for (int a = a0; a < a1; ++a)
    for (int r = r0; r < r1; ++r)
      for (int h = h0; h < h1; ++h) reg.cells.push_back(g.id(a, r, h));
  reg.sort_cells();
  return reg;
}

TEST_CASE("triangulation counts and euler characteristic") {
  auto g = make_cylinder_grid(6, 3, 3);

  Region cube = box_region(g, 1, 2, 1, 2, 0, 1);
  auto tc = triangulate_region(cube);
  CHECK(tc.cx.top.size() == 6);
  CHECK(euler_of_complex(tc.cx) == 1);
  CHECK(cellular_euler(cube) == 1);

  Region prism = box_region(g, 0, 1, 0, 1, 0, 1);  // axis cell
  auto tp = triangulate_region(prism);
  CHECK(tp.cx.top.size() == 3);
  CHECK(euler_of_complex(tp.cx) == 1);
  CHECK(cellular_euler(prism) == 1);

  auto g4 = make_openbook_grid(3, 2, 2, 2, 2);
  Region one4;
  one4.grid = g4;
  one4.cells = {g4.id(0, 0, 0, 1, 1)};
  auto t4 = triangulate_region(one4);
  CHECK(t4.cx.top.size() == 24);
  CHECK(euler_of_complex(t4.cx) == 1);
  CHECK(cellular_euler(one4) == 1);

  // full solid cylinder: chi of a ball is 1, triangulated or cellular
  Region full = box_region(g, 0, 6, 0, 3, 0, 3);
  auto tf = triangulate_region(full);
  CHECK(euler_of_complex(tf.cx) == 1);
  CHECK(cellular_euler(full) == 1);
}

TEST_CASE("homology oracles in the cylinder") {
  auto g = make_cylinder_grid(8, 4, 4);

  Region box = box_region(g, 1, 3, 1, 3, 0, 2);
  CHECK(homology_of_region(box) == make_profile({1, 0, 0, 0}));

  Region full = box_region(g, 0, 8, 0, 4, 0, 4);
  CHECK(homology_of_region(full) == make_profile({1, 0, 0, 0}));

  // full annular ring: all sectors, one ring away from the axis, one height
  Region ring = box_region(g, 0, 8, 1, 2, 0, 1);
  CHECK(homology_of_region(ring) == make_profile({1, 1, 0, 0}));

  // boundary shell of a 3x3x3 block away from the axis
  Region shell = box_region(g, 0, 3, 1, 4, 0, 3);
  {
    std::vector<long long> keep;
    for (long long c : shell.cells)
      if (c != g.id(1, 2, 1)) keep.push_back(c);
    shell.cells = keep;
  }
  CHECK(homology_of_region(shell) == make_profile({1, 0, 1, 0}));
}

// brute-force integer rank via fraction-free elimination on a dense copy
static long long brute_rank(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<__int128>> a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
  size_t rank = 0;
  size_t nc = a.empty() ? 0 : a[0].size();
  for (size_t c = 0; c < nc && rank < a.size(); ++c) {
    size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      __int128 f = a[i][c], p0 = a[rank][c];
      for (size_t j = 0; j < nc; ++j) a[i][j] = a[i][j] * p0 - f * a[rank][j];
    }
    ++rank;
  }
  return (long long)rank;
}

TEST_CASE("shell betti against brute-force ranks") {
  auto g = make_cylinder_grid(8, 4, 4);
  Region shell = box_region(g, 0, 3, 1, 4, 0, 3);
  std::vector<long long> keep;
  for (long long c : shell.cells)
    if (c != g.id(1, 2, 1)) keep.push_back(c);
  shell.cells = keep;

  auto tri = triangulate_region(shell);
  // rebuild the boundary matrices densely and take brute-force ranks
  std::vector<std::vector<std::vector<int>>> faces(4);
  faces[3] = tri.cx.top;
  for (int k = 3; k > 0; --k) {
    std::set<std::vector<int>> s;
    for (auto& f : faces[k])
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        s.insert(sub);
      }
    faces[k - 1].assign(s.begin(), s.end());
  }
  std::vector<long long> rank(5, 0);
  for (int k = 1; k <= 3; ++k) {
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < faces[k - 1].size(); ++i) idx[faces[k - 1][i]] = (int)i;
    std::vector<std::vector<long long>> m(faces[k - 1].size(),
                                          std::vector<long long>(faces[k].size(), 0));
    for (size_t j = 0; j < faces[k].size(); ++j)
      for (size_t drop = 0; drop < faces[k][j].size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < faces[k][j].size(); ++i)
          if (i != drop) sub.push_back(faces[k][j][i]);
        m[idx[sub]][j] = (drop % 2) ? -1 : 1;
      }
    rank[k] = brute_rank(m);
  }
  std::vector<long long> betti(4);
  for (int k = 0; k <= 3; ++k)
    betti[k] = (long long)faces[k].size() - rank[k] - rank[k + 1];
  auto p = homology_of_region(shell);
  CHECK(p.betti == betti);
  CHECK(betti == std::vector<long long>({1, 0, 1, 0}));
}

TEST_CASE("open-book grid homology") {
  auto g = make_openbook_grid(3, 4, 3, 6, 4);
  Region full;
  full.grid = g;
  for (long long c = 0; c < g.ncells(); ++c) full.cells.push_back(c);
  CHECK((long long)full.cells.size() == 1728);

  auto p = homology_of_region(full);
  CHECK(p == make_profile({1, 0, 0, 0, 0}));

  auto b = boundary_homology(full);
  CHECK(b == make_profile({1, 0, 0, 1}));

  CHECK(cellular_euler(full) == 1);
  CHECK(euler_of_complex(triangulate_region(full).cx) == 1);
}

TEST_CASE("page grid homology") {
  GridPage g{6, 3, 4};
  Region slab;
  slab.grid = g;
  for (int z = 0; z < 6; ++z)
    for (int e = -4; e < 4; ++e) slab.cells.push_back(g.id(z, 1, e));
  slab.sort_cells();
  CHECK(homology_of_region(slab) == make_profile({1, 0, 0, 0}));
}

TEST_CASE("components and rotation") {
  auto g = make_cylinder_grid(6, 2, 2);

  // the axis is not an adjacency: two wedge cells meeting only at the axis
  Region two;
  two.grid = g;
  two.cells = {g.id(0, 0, 0), g.id(3, 0, 0)};
  auto comps = connected_components(two.grid, two.cells);
  CHECK(comps.size() == 2);

  Region arc;
  arc.grid = g;
  arc.cells = {g.id(5, 1, 0), g.id(0, 1, 0), g.id(1, 1, 0)};  // wraps a = 5 -> 0
  arc.sort_cells();
  CHECK(connected_components(arc.grid, arc.cells).size() == 1);

  auto rot = apply_rotation(arc, 2);
  Region expect;
  expect.grid = g;
  expect.cells = {g.id(1, 1, 0), g.id(2, 1, 0), g.id(3, 1, 0)};
  expect.sort_cells();
  CHECK(rot.cells == expect.cells);

  // rotating by A is the identity; rotations compose additively
  auto ra = apply_rotation(arc, 6);
  CHECK(ra.cells == arc.cells);
  auto r1 = apply_rotation(apply_rotation(arc, 1), 1);
  CHECK(r1.cells == apply_rotation(arc, 2).cells);

  auto g4 = make_openbook_grid(4, 2, 2, 2, 2);
  Region w;
  w.grid = g4;
  w.cells = {g4.id(3, 0, 0, 0, 0)};
  auto rw = apply_rotation(w, 1);
  CHECK(rw.cells == std::vector<long long>{g4.id(0, 0, 0, 0, 0)});
}

TEST_CASE("grid4 page identification shows up in adjacency and homology") {
  auto g = make_openbook_grid(3, 2, 2, 3, 3);
  // east page cell of wedge 0 and its mirrored partner in wedge 1
  long long east = g.id(0, 0, 0, 1, 0);
  long long west = g.id(1, 0, 0, -2, 0);
  CHECK(g.page_partner(east) == west);
  CHECK(g.page_partner(west) == east);
  auto nb = g.neighbors(east);
  CHECK(std::find(nb.begin(), nb.end(), west) != nb.end());

  Region pair;
  pair.grid = g;
  pair.cells = {east, west};
  CHECK(connected_components(pair.grid, pair.cells).size() == 1);
  CHECK(homology_of_region(pair) == make_profile({1, 0, 0, 0, 0}));
}

TEST_CASE("region json round trip is byte exact") {
  auto g = make_cylinder_grid(4, 2, 2);
  Region r;
  r.grid = g;
  r.color = 2;
  r.cells = {g.id(0, 0, 0), g.id(1, 1, 1), g.id(3, 0, 1)};
  r.elements = {"arc:0", "canopy"};
  r.label = {0, 1, 0};
  r.sort_cells();

  std::string text = canonical_dump(region_to_json(r));
  Region back = region_from_json(parse_json(text));
  std::string again = canonical_dump(region_to_json(back));
  CHECK(text == again);
  CHECK(back.cells == r.cells);
  CHECK(back.color == 2);
  CHECK(back.element_of(0) == r.element_of(0));

  CHECK_THROWS_AS(region_from_json(parse_json("{\"kind\":\"region.v1\"}")), SchemaError);
  CHECK_THROWS_AS(region_from_json(parse_json("[1,2]")), SchemaError);

  ojson dup = region_to_json(r);
  dup["cells"].push_back(dup["cells"][0]);
  dup["labels"].push_back(0);
  CHECK_THROWS_AS(region_from_json(dup), InvariantError);
}

TEST_CASE("abstract complexes") {
  // graph: two vertices, three parallel edges -> betti (1,2)
  auto p = homology_of_multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(p == make_profile({1, 2}));

  // sphere from two digons glued along their boundary circle
  Complex2 sph;
  sph.nverts = 2;
  sph.edges = {{0, 1}, {0, 1}};
  sph.faces = {{{0, 1}, {1, -1}}, {{1, 1}, {0, -1}}};
  auto s2 = homology_of_complex2(sph);
  CHECK(s2.betti == std::vector<long long>({1, 0, 1}));

  // torus: one vertex, two loops, face word a b a' b'
  Complex2 tor;
  tor.nverts = 1;
  tor.edges = {{0, 0}, {0, 0}};
  tor.faces = {{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
  CHECK(homology_of_complex2(tor).betti == std::vector<long long>({1, 2, 1}));

  // projective plane: one vertex, one loop, face word a a
  Complex2 proj;
  proj.nverts = 1;
  proj.edges = {{0, 0}};
  proj.faces = {{{0, 1}, {0, 1}}};
  auto sp = homology_of_complex2(proj);
  CHECK(sp.betti == std::vector<long long>({1, 0, 0}));
  REQUIRE(sp.torsion.size() == 3);
  CHECK(sp.torsion[1] == std::vector<long long>({2}));
}
