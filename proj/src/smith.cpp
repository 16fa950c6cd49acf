#include "kt/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "kt/errors.hpp"

namespace kt {

void SparseMat::add(int r, int c, long long v) {
  if (!v) return;
  auto& m = row[r];
  auto it = m.find(c);
  if (it == m.end()) {
    m.emplace(c, v);
    colrows[c].insert(r);
  } else {
    it->second += v;
    if (it->second == 0) {
      m.erase(it);
      colrows[c].erase(r);
    }
  }
}

namespace {

using bigint = boost::multiprecision::cpp_int;

// rank over Q and one nonzero maximal minor, by fraction-free elimination;
// entry growth stays within the Hadamard bound
std::pair<int, bigint> bareiss_rank_minor(std::vector<std::vector<bigint>> a) {
  int nr = (int)a.size();
  int nc = nr ? (int)a[0].size() : 0;
  bigint prev = 1, last = 1;
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int p = rank;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[rank], a[p]);
    for (int i = rank + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        bigint num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        a[i][j] = num / prev;  // divides exactly
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    last = prev;
    ++rank;
  }
  return {rank, last};
}

bigint balanced_mod(bigint x, const bigint& R) {
  x %= R;
  if (x < 0) x += R;
  if (2 * x > R) x -= R;
  return x;
}

// extended gcd: returns g, sets (x, y) with a*x + b*y = g
bigint egcd(bigint a, bigint b, bigint& x, bigint& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs(a);
  }
  bigint x1, y1;
  bigint g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// unit u of Z_R with u * p = gcd(|p|, R) (mod R)
bigint unit_for(const bigint& p, const bigint& R) {
  bigint ap = abs(p);
  bigint g = boost::multiprecision::gcd(ap, R);
  bigint base = ap / g, step = R / g;
  bigint v = base;
  for (bigint t = 0;; ++t) {  // some t below the radical of R works
    v = base + t * step;
    if (boost::multiprecision::gcd(v, R) == 1) break;
  }
  bigint x, y;
  egcd(v, R, x, y);
  bigint u = balanced_mod(x, R);
  if (p < 0) u = -u;
  return u;
}

// Exact SNF diagonal (nonnegative, in divisibility order, zeros dropped).
// Rank comes from fraction-free elimination; invariant factors are computed
// modulo R = |nonzero maximal minor|, which every factor divides, so entries
// stay bounded by R throughout.
std::vector<long long> snf_dense(std::vector<std::vector<bigint>> a) {
  int nr = (int)a.size();
  int nc = nr ? (int)a[0].size() : 0;
  auto [rank, minor] = bareiss_rank_minor(a);
  if (rank == 0) return {};
  bigint R = abs(minor);
  auto to_ll = [](const bigint& v) {
    if (v > std::numeric_limits<long long>::max())
      throw Error("smith: invariant factor exceeds 64 bits");
    return v.convert_to<long long>();
  };
  if (R == 1) return std::vector<long long>((size_t)rank, 1);

  for (auto& row : a)
    for (auto& v : row) v = balanced_mod(v, R);

  std::vector<long long> diag;
  int pos = 0;
  while (pos < rank) {
    int pi = -1, pj = -1;
    bigint best = 0;
    for (int i = pos; i < nr; ++i)
      for (int j = pos; j < nc; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < best)) {
          pi = i;
          pj = j;
          best = abs(a[i][j]);
        }
    if (pi < 0) break;  // submatrix vanished mod R; remaining factors are R
    std::swap(a[pos], a[pi]);
    for (int i = pos; i < nr; ++i) std::swap(a[i][pos], a[i][pj]);

    bool settled = false;
    while (!settled) {
      // normalize the pivot to a positive divisor of R by a unit row scale
      bigint g = boost::multiprecision::gcd(abs(a[pos][pos]), R);
      if (a[pos][pos] != g) {
        bigint u = unit_for(a[pos][pos], R);
        for (int j = pos; j < nc; ++j) a[pos][j] = balanced_mod(a[pos][j] * u, R);
      }
      settled = true;
      for (int i = pos + 1; i < nr && settled; ++i) {
        if (a[i][pos] == 0) continue;
        bigint q = a[i][pos] / a[pos][pos];
        for (int j = pos; j < nc; ++j)
          a[i][j] = balanced_mod(a[i][j] - q * a[pos][j], R);
        if (a[i][pos] != 0) {  // remainder is strictly smaller: make it the pivot
          std::swap(a[pos], a[i]);
          settled = false;
        }
      }
      for (int j = pos + 1; j < nc && settled; ++j) {
        if (a[pos][j] == 0) continue;
        bigint q = a[pos][j] / a[pos][pos];
        for (int i = pos; i < nr; ++i)
          a[i][j] = balanced_mod(a[i][j] - q * a[i][pos], R);
        if (a[pos][j] != 0) {
          for (int i = pos; i < nr; ++i) std::swap(a[i][pos], a[i][j]);
          settled = false;
        }
      }
      if (!settled) continue;
      // pivot must divide every remaining entry; else merge the row and redo
      for (int i = pos + 1; i < nr && settled; ++i)
        for (int j = pos + 1; j < nc && settled; ++j)
          if (a[i][j] % a[pos][pos] != 0) {
            for (int c = pos; c < nc; ++c)
              a[pos][c] = balanced_mod(a[pos][c] + a[i][c], R);
            settled = false;
          }
    }
    diag.push_back(to_ll(boost::multiprecision::gcd(abs(a[pos][pos]), R)));
    ++pos;
  }
  while (pos < rank) {
    diag.push_back(to_ll(R));
    ++pos;
  }
  return diag;
}

}  // namespace

std::vector<long long> dense_snf_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<std::vector<bigint>> a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
  return snf_dense(std::move(a));
}

SmithResult smith(SparseMat m) {
  SmithResult res;
  std::vector<bool> row_done(m.nrows, false), col_done(m.ncols, false);

  auto checked_fma = [](long long acc, long long f, long long v) {
    long long prod, sum;
    if (__builtin_mul_overflow(f, v, &prod) || __builtin_add_overflow(acc, prod, &sum))
      throw Error("smith: sparse intermediate overflow");
    return sum;
  };

  // min-heap of (row nnz, row); entries are lazily revalidated
  using QE = std::pair<size_t, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> q;
  for (int r = 0; r < m.nrows; ++r)
    if (!m.row[r].empty()) q.push({m.row[r].size(), r});

  std::vector<int> stash;  // rows with no unit entry right now
  while (!q.empty()) {
    auto [sz, r] = q.top();
    q.pop();
    if (row_done[r] || m.row[r].empty() || m.row[r].size() != sz) {
      if (!row_done[r] && !m.row[r].empty() && m.row[r].size() != sz)
        q.push({m.row[r].size(), r});
      continue;
    }
    // choose the unit entry whose column is sparsest
    int pc = -1;
    size_t best = 0;
    for (auto& [c, v] : m.row[r])
      if (v == 1 || v == -1)
        if (pc < 0 || m.colrows[c].size() < best) {
          pc = c;
          best = m.colrows[c].size();
        }
    if (pc < 0) {
      stash.push_back(r);
      continue;
    }
    long long pv = m.row[r].at(pc);
    std::vector<int> victims(m.colrows[pc].begin(), m.colrows[pc].end());
    for (int r2 : victims) {
      if (r2 == r) continue;
      long long f = m.row[r2].at(pc) / pv;  // pv = +-1
      for (auto& [c, v] : m.row[r]) {
        auto& tm = m.row[r2];
        auto it = tm.find(c);
        long long nv = checked_fma(it == tm.end() ? 0 : it->second, -f, v);
        if (it == tm.end()) {
          if (nv) {
            tm.emplace(c, nv);
            m.colrows[c].insert(r2);
          }
        } else if (nv) {
          it->second = nv;
        } else {
          tm.erase(it);
          m.colrows[c].erase(r2);
        }
      }
      if (!m.row[r2].empty()) q.push({m.row[r2].size(), r2});
    }
    // retire pivot row and column
    for (auto& [c, v] : m.row[r]) m.colrows[c].erase(r);
    m.row[r].clear();
    row_done[r] = true;
    col_done[pc] = true;
    res.rank += 1;
  }

  // collect the residue (stashed rows may have been emptied or re-stashed)
  std::vector<int> live_rows;
  std::vector<bool> seen(m.nrows, false);
  for (int r = 0; r < m.nrows; ++r)
    if (!row_done[r] && !m.row[r].empty() && !seen[r]) {
      seen[r] = true;
      live_rows.push_back(r);
    }
  if (live_rows.empty()) return res;

  std::unordered_map<int, int> colidx;
  for (int r : live_rows)
    for (auto& [c, v] : m.row[r])
      if (!colidx.count(c)) {
        int k = (int)colidx.size();
        colidx[c] = k;
      }
  std::vector<std::vector<bigint>> dense(live_rows.size(),
                                         std::vector<bigint>(colidx.size(), 0));
  for (size_t i = 0; i < live_rows.size(); ++i)
    for (auto& [c, v] : m.row[live_rows[i]]) dense[i][colidx[c]] = v;
  auto diag = snf_dense(std::move(dense));
  for (long long d : diag) {
    res.rank += 1;
    if (d > 1) res.torsion.push_back(d);
  }
  return res;
}

}  // namespace kt
