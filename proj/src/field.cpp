#include "unitals/field.hpp"

#include <cassert>
#include <stdexcept>

#include "unitals/errors.hpp"

namespace unitals {

namespace {

// Polynomials over GF(p), coefficient vectors with the constant term first.
using Poly = std::vector<int>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// Remainder of f modulo a monic divisor g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j)
      f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
  }
  f.resize(dg > 0 ? dg : 1);
  return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of m, most significant digit = highest coefficient.
Poly monic_from_index(long long m, int d, int p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<int>(m % p);
    m /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, int p) {
  int d = degree(f);
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
      Poly g = monic_from_index(m, dd, p);
      if (degree(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree e over GF(p),
// coefficient tuples compared from the highest degree down.
Poly smallest_irreducible(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long hi = 0; hi < count; ++hi) {
    // decode big-endian so that the scan order matches the tuple order
    Poly g(e + 1, 0);
    g[e] = 1;
    long long m = hi;
    for (int i = 0; i < e; ++i) {
      g[i] = static_cast<int>(m % p);
      m /= p;
    }
    if (is_irreducible(g, p)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// Arithmetic for the base field GF(q), q = p^e, as dense index tables.
struct BaseField {
  int q, p, e;
  Poly modulus;  // empty when e == 1
  std::vector<int> add, mul, neg;

  int a(int x, int y) const { return add[x * q + y]; }
  int m(int x, int y) const { return mul[x * q + y]; }
};

BaseField build_base(int p, int e) {
  BaseField f;
  f.p = p;
  f.e = e;
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  f.q = q;
  f.add.assign(static_cast<std::size_t>(q) * q, 0);
  f.mul.assign(static_cast<std::size_t>(q) * q, 0);
  f.neg.assign(q, 0);
  if (e == 1) {
    for (int x = 0; x < q; ++x) {
      f.neg[x] = (p - x) % p;
      for (int y = 0; y < q; ++y) {
        f.add[x * q + y] = (x + y) % p;
        f.mul[x * q + y] = (x * y) % p;
      }
    }
    return f;
  }
  f.modulus = smallest_irreducible(p, e);
  auto decode = [&](int x) {
    Poly c(e, 0);
    for (int i = 0; i < e; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    int x = 0;
    for (int i = e - 1; i >= 0; --i) x = x * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return x;
  };
  for (int x = 0; x < q; ++x) {
    Poly cx = decode(x);
    Poly nx(e, 0);
    for (int i = 0; i < e; ++i) nx[i] = (p - cx[i]) % p;
    f.neg[x] = encode(nx);
    for (int y = 0; y < q; ++y) {
      Poly cy = decode(y);
      Poly s(e, 0);
      for (int i = 0; i < e; ++i) s[i] = (cx[i] + cy[i]) % p;
      f.add[x * q + y] = encode(s);
      f.mul[x * q + y] = encode(poly_rem(poly_mul(cx, cy, p), f.modulus, p));
    }
  }
  return f;
}

std::string poly_to_string(const Poly& f, const std::string& var) {
  std::string s;
  for (int i = degree(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(f[i]);
    } else {
      if (f[i] != 1) s += std::to_string(f[i]) + " ";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

bool is_prime_power(long long q, int* prime, int* exponent) {
  if (q < 2) return false;
  long long p = q;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  long long m = q;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (prime) *prime = static_cast<int>(p);
  if (exponent) *exponent = e;
  return true;
}

FieldTables FieldTables::build(int q) {
  int p = 0, e = 0;
  if (!is_prime_power(q, &p, &e)) throw NotPrimePower(q);

  FieldTables t;
  t.q_ = q;
  t.n_ = q * q;
  t.p_ = p;
  t.e_ = e;

  BaseField base = build_base(p, e);
  t.base_poly_ = base.modulus;

  // smallest monic irreducible quadratic t^2 + c1 t + c0 over GF(q)
  int c1 = -1, c0 = -1;
  for (int a = 0; a < q && c1 < 0; ++a)
    for (int b = 0; b < q; ++b) {
      bool has_root = false;
      for (int x = 0; x < q; ++x) {
        int v = base.a(base.a(base.m(x, x), base.m(a, x)), b);
        if (v == 0) {
          has_root = true;
          break;
        }
      }
      if (!has_root) {
        c1 = a;
        c0 = b;
        break;
      }
    }
  assert(c1 >= 0);
  t.ext_c1_ = c1;
  t.ext_c0_ = c0;

  const int n = t.n_;
  t.add_.assign(static_cast<std::size_t>(n) * n, 0);
  t.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  t.neg_.assign(n, 0);
  t.inv_.assign(n, 0);
  t.conj_.assign(n, 0);

  // element index = a + b*q for a + b*t with a, b in GF(q); t^2 = -c1 t - c0
  auto idx = [q](int a, int b) { return a + b * q; };
  int nc1 = base.neg[c1], nc0 = base.neg[c0];
  for (int a1 = 0; a1 < q; ++a1)
    for (int b1 = 0; b1 < q; ++b1) {
      int x = idx(a1, b1);
      t.neg_[x] = idx(base.neg[a1], base.neg[b1]);
      for (int a2 = 0; a2 < q; ++a2)
        for (int b2 = 0; b2 < q; ++b2) {
          int y = idx(a2, b2);
          t.add_[x * n + y] = idx(base.a(a1, a2), base.a(b1, b2));
          int bb = base.m(b1, b2);
          int cc = base.a(base.m(a1, a2), base.m(bb, nc0));
          int tc = base.a(base.a(base.m(a1, b2), base.m(a2, b1)), base.m(bb, nc1));
          t.mul_[x * n + y] = idx(cc, tc);
        }
    }

  for (int x = 0; x < n; ++x) t.conj_[x] = t.pow(x, q);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (t.mul(x, y) == 1) {
        t.inv_[x] = y;
        break;
      }

  // construction sanity: conj is an involution fixing exactly GF(q)
  for (int x = 0; x < n; ++x) {
    assert(t.conj(t.conj(x)) == x);
    assert((t.conj(x) == x) == (x < q));
  }
  return t;
}

int FieldTables::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return inv_[a];
}

int FieldTables::pow(int a, long long e) const {
  int r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::string FieldTables::extension_poly() const {
  Poly f = {ext_c0_, ext_c1_, 1};
  return poly_to_string(f, "t");
}

std::string FieldTables::base_poly() const {
  if (e_ == 1) return {};
  return poly_to_string(base_poly_, "u");
}

}  // namespace unitals
