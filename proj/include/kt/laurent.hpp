#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace kt {

// Laurent polynomial over the integers. Always kept trimmed: either empty
// (zero) or c.front() != 0 and c.back() != 0, with c[k] the coefficient of
// t^(lo+k).
struct Laurent {
  int lo = 0;
  std::vector<long long> c;

  Laurent() = default;
  Laurent(long long k) {
    if (k) c.push_back(k);
  }
  static Laurent term(long long coeff, int exp);

  bool is_zero() const { return c.empty(); }
  int lo_exp() const { return lo; }
  int hi_exp() const { return lo + (int)c.size() - 1; }
  long long coeff(int exp) const;

  // trim() canonicalizes zero to {lo=0, c={}}, so memberwise compare works.
  bool operator==(const Laurent& o) const { return lo == o.lo && c == o.c; }

  void trim();
  std::string str() const;  // e.g. "t^-1 - 3 + t"
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);

// Exact division; throws Error if the division leaves a remainder.
Laurent divide_exact(const Laurent& num, const Laurent& den);

// True when a == +- t^k * b for some k.
bool unit_equal(const Laurent& a, const Laurent& b);

// Lowest exponent shifted to 0 and leading (highest-degree) coefficient
// made positive. Zero stays zero.
Laurent normalize_alexander(const Laurent& p);

long long eval_ll(const Laurent& p, long long t);  // needs lo >= 0 unless t = +-1

}  // namespace kt
