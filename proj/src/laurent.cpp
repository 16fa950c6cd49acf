#include "kt/laurent.hpp"

#include <cstdlib>
#include <sstream>

#include "kt/errors.hpp"

namespace kt {

Laurent Laurent::term(long long coeff, int exp) {
  Laurent p;
  if (coeff) {
    p.lo = exp;
    p.c.push_back(coeff);
  }
  return p;
}

long long Laurent::coeff(int exp) const {
  int k = exp - lo;
  if (k < 0 || k >= (int)c.size()) return 0;
  return c[k];
}

void Laurent::trim() {
  size_t b = 0, e = c.size();
  while (e > b && c[e - 1] == 0) --e;
  while (b < e && c[b] == 0) ++b;
  if (b == e) {
    c.clear();
    lo = 0;
    return;
  }
  if (b > 0 || e < c.size()) {
    c = std::vector<long long>(c.begin() + b, c.begin() + e);
    lo += (int)b;
  }
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi_exp(), b.hi_exp());
  Laurent r;
  r.lo = lo;
  r.c.assign(hi - lo + 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - lo + i] += b.c[i];
  r.trim();
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  Laurent r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) {
      long long prod;
      if (__builtin_mul_overflow(a.c[i], b.c[j], &prod))
        throw Error("laurent coefficient overflow");
      if (__builtin_add_overflow(r.c[i + j], prod, &r.c[i + j]))
        throw Error("laurent coefficient overflow");
    }
  r.trim();
  return r;
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw Error("laurent division by zero");
  if (num.is_zero()) return Laurent();
  Laurent rem = num, q;
  q.lo = num.lo - den.lo;
  if ((int)num.c.size() < (int)den.c.size()) throw Error("laurent division not exact");
  q.c.assign(num.c.size() - den.c.size() + 1, 0);
  long long dlead = den.c.back();
  // eliminate from the top degree down
  for (int k = (int)q.c.size() - 1; k >= 0; --k) {
    long long nlead = rem.coeff(den.hi_exp() + q.lo + k);
    if (nlead == 0) continue;
    if (nlead % dlead != 0) throw Error("laurent division not exact");
    long long f = nlead / dlead;
    q.c[k] = f;
    rem = rem - Laurent::term(f, q.lo + k) * den;
  }
  if (!rem.is_zero()) throw Error("laurent division not exact");
  q.trim();
  return q;
}

bool unit_equal(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.c.size() != b.c.size()) return false;
  bool plus = true, minus = true;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != b.c[i]) plus = false;
    if (a.c[i] != -b.c[i]) minus = false;
  }
  return plus || minus;
}

Laurent normalize_alexander(const Laurent& p) {
  Laurent r = p;
  r.trim();
  if (r.is_zero()) return r;
  r.lo = 0;
  if (r.c.back() < 0)
    for (auto& x : r.c) x = -x;
  return r;
}

long long eval_ll(const Laurent& p, long long t) {
  if (p.is_zero()) return 0;
  if (p.lo < 0 && t != 1 && t != -1) throw Error("cannot evaluate negative powers");
  long long acc = 0;
  for (int i = (int)p.c.size() - 1; i >= 0; --i) {
    if (__builtin_mul_overflow(acc, t, &acc)) throw Error("eval overflow");
    if (__builtin_add_overflow(acc, p.c[i], &acc)) throw Error("eval overflow");
  }
  // multiply by t^lo (lo may be negative only when |t| == 1)
  if (p.lo > 0) {
    for (int k = 0; k < p.lo; ++k)
      if (__builtin_mul_overflow(acc, t, &acc)) throw Error("eval overflow");
  } else if (p.lo < 0) {
    if (t == -1 && (p.lo & 1)) acc = -acc;
  }
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    long long k = c[i];
    if (!k) continue;
    int e = lo + (int)i;
    if (first) {
      if (k < 0) ss << "-";
    } else {
      ss << (k < 0 ? " - " : " + ");
    }
    long long ak = std::llabs(k);
    if (ak != 1 || e == 0) ss << ak;
    if (e != 0) {
      if (ak != 1) ss << "*";
      ss << "t";
      if (e != 1) ss << "^" << e;
    }
    first = false;
  }
  return ss.str();
}

}  // namespace kt
