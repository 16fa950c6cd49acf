#pragma once
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kt {

// Sparse integer matrix for exact rank / Smith normal form computations.
struct SparseMat {
  int nrows = 0, ncols = 0;
  std::vector<std::unordered_map<int, long long>> row;
  std::vector<std::unordered_set<int>> colrows;

  SparseMat() = default;
  SparseMat(int r, int c) : nrows(r), ncols(c), row(r), colrows(c) {}
  void add(int r, int c, long long v);  // accumulates; drops zeros
};

struct SmithResult {
  long long rank = 0;
  // Invariant factors > 1, in divisibility order d1 | d2 | ...
  std::vector<long long> torsion;
};

// Destroys its argument. Unit-pivot sparse elimination first, then exact
// Smith normal form on the dense residue (128-bit intermediates).
SmithResult smith(SparseMat m);

// Full SNF diagonal of a small dense matrix (nonnegative, divisibility
// order, zeros trimmed). For tests and small abstract complexes.
std::vector<long long> dense_snf_diagonal(std::vector<std::vector<long long>> m);

}  // namespace kt
