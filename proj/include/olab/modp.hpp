#pragma once

// Exact arithmetic over small prime fields: scalars, dense matrices, and
// univariate polynomials (enough to split commuting integer matrices into
// common eigenspaces and to find roots of totally split polynomials).

#include <cstdint>
#include <vector>

#include "olab/config.hpp"

namespace olab::modp {

using i64 = std::int64_t;

inline i64 norm(i64 x, i64 p) {
  x %= p;
  return x < 0 ? x + p : x;
}
inline i64 addm(i64 a, i64 b, i64 p) {
  a += b;
  return a >= p ? a - p : a;
}
inline i64 subm(i64 a, i64 b, i64 p) {
  a -= b;
  return a < 0 ? a + p : a;
}
inline i64 mulm(i64 a, i64 b, i64 p) { return a * b % p; } // p < 2^31
inline i64 powm(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a = norm(a, p);
  for (; e > 0; e >>= 1) {
    if (e & 1)
      r = mulm(r, a, p);
    a = mulm(a, a, p);
  }
  return r;
}
inline i64 invm(i64 a, i64 p) { return powm(a, p - 2, p); }

inline bool is_prime(i64 n) {
  if (n < 2)
    return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Smallest prime p > lower with p == 1 (mod m).  Fields built on such p
// contain all m-th roots of unity.
inline i64 prime_congruent_one(i64 m, i64 lower) {
  i64 p = ((lower / m) + 1) * m + 1;
  while (!is_prime(p) || p <= lower)
    p += m;
  if (p >= (i64(1) << 31))
    throw capacity_error("modulus out of the supported range");
  return p;
}

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

inline i64 primitive_root(i64 p) {
  auto qs = prime_factors(p - 1);
  for (i64 z = 2; z < p; ++z) {
    bool ok = true;
    for (i64 q : qs)
      if (powm(z, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return z;
  }
  throw config_error("no primitive root found (modulus not prime?)");
}

// --------------------------------------------------------------------------
// Dense matrices (row major).

struct matrix {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  matrix() = default;
  matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  i64 &at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  i64 at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static matrix identity(int n) {
    matrix m(n, n);
    for (int i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }
};

inline matrix mat_mul(const matrix &x, const matrix &y, i64 p) {
  if (x.cols != y.rows)
    throw config_error("matrix shape mismatch");
  matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 v = x.at(i, k);
      if (v == 0)
        continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
    }
  return r;
}

inline std::vector<i64> mat_vec(const matrix &m, const std::vector<i64> &v,
                                i64 p) {
  std::vector<i64> r(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i) {
    i64 acc = 0;
    for (int j = 0; j < m.cols; ++j)
      acc = (acc + m.at(i, j) * v[static_cast<std::size_t>(j)]) % p;
    r[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row (row count of the result = rank).
inline std::vector<int> rref(matrix &m, i64 p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0)
      continue;
    for (int j = 0; j < m.cols; ++j)
      std::swap(m.at(sel, j), m.at(r, j));
    i64 inv = invm(m.at(r, c), p);
    for (int j = c; j < m.cols; ++j)
      m.at(r, j) = mulm(m.at(r, j), inv, p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0)
        continue;
      i64 f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = subm(m.at(i, j), mulm(f, m.at(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.a.resize(static_cast<std::size_t>(r) * m.cols);
  return pivots;
}

// Rows spanning the kernel {x : m x = 0}.
inline matrix kernel_basis(matrix m, i64 p) {
  auto pivots = rref(m, p);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int c : pivots)
    is_pivot[static_cast<std::size_t>(c)] = 1;
  matrix k(0, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)])
      continue;
    std::vector<i64> row(static_cast<std::size_t>(m.cols), 0);
    row[static_cast<std::size_t>(c)] = 1;
    for (int r = 0; r < m.rows; ++r)
      row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] =
          norm(-m.at(r, c), p);
    k.a.insert(k.a.end(), row.begin(), row.end());
    ++k.rows;
  }
  return k;
}

// Solve A x = b for one x (A need not be square); throws if inconsistent.
inline std::vector<i64> solve(const matrix &a, const std::vector<i64> &b,
                              i64 p) {
  matrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j)
      aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[static_cast<std::size_t>(i)];
  }
  auto pivots = rref(aug, p);
  std::vector<i64> x(static_cast<std::size_t>(a.cols), 0);
  for (int r = 0; r < aug.rows; ++r) {
    int c = pivots[static_cast<std::size_t>(r)];
    if (c == a.cols)
      throw config_error("inconsistent linear system");
    x[static_cast<std::size_t>(c)] = aug.at(r, a.cols);
  }
  return x;
}

// --------------------------------------------------------------------------
// Polynomials: coefficient vectors, lowest degree first, normalized so the
// leading coefficient is nonzero (the zero polynomial is the empty vector).

using poly = std::vector<i64>;

inline poly poly_trim(poly f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

inline int poly_deg(const poly &f) { return static_cast<int>(f.size()) - 1; }

inline poly poly_mul(const poly &a, const poly &b, i64 p) {
  if (a.empty() || b.empty())
    return {};
  poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_trim(std::move(r));
}

// Remainder of a modulo monic f.
inline poly poly_rem(poly a, const poly &f, i64 p) {
  int df = poly_deg(f);
  if (df < 0)
    throw config_error("division by the zero polynomial");
  i64 lead_inv = invm(f.back(), p);
  while (poly_deg(a) >= df) {
    i64 c = mulm(a.back(), lead_inv, p);
    int shift = poly_deg(a) - df;
    for (int i = 0; i <= df; ++i)
      a[static_cast<std::size_t>(i + shift)] =
          subm(a[static_cast<std::size_t>(i + shift)],
               mulm(c, f[static_cast<std::size_t>(i)], p), p);
    a = poly_trim(std::move(a));
  }
  return a;
}

inline poly poly_divide_exact(poly a, const poly &f, i64 p) {
  int df = poly_deg(f);
  poly q(a.size() > f.size() ? a.size() - f.size() + 1 : 1, 0);
  i64 lead_inv = invm(f.back(), p);
  while (poly_deg(a) >= df) {
    i64 c = mulm(a.back(), lead_inv, p);
    int shift = poly_deg(a) - df;
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= df; ++i)
      a[static_cast<std::size_t>(i + shift)] =
          subm(a[static_cast<std::size_t>(i + shift)],
               mulm(c, f[static_cast<std::size_t>(i)], p), p);
    a = poly_trim(std::move(a));
  }
  if (!a.empty())
    throw config_error("polynomial division left a remainder");
  return poly_trim(std::move(q));
}

inline poly poly_gcd(poly a, poly b, i64 p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    i64 inv = invm(a.back(), p);
    for (i64 &c : a)
      c = mulm(c, inv, p);
  }
  return a;
}

inline poly poly_powmod(poly base, i64 e, const poly &f, i64 p) {
  poly r{1};
  base = poly_rem(std::move(base), f, p);
  for (; e > 0; e >>= 1) {
    if (e & 1)
      r = poly_rem(poly_mul(r, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
  }
  return r;
}

// All roots of a squarefree monic polynomial that splits into distinct
// linear factors over F_p (Cantor-Zassenhaus splitting; the caller
// guarantees the splitting hypothesis, which holds for minimal polynomials
// of diagonalizable matrices with eigenvalues in F_p).
inline void split_roots(const poly &f, i64 p, rng_t &rng,
                        std::vector<i64> &out) {
  int d = poly_deg(f);
  if (d <= 0)
    return;
  if (d == 1) {
    out.push_back(mulm(norm(-f[0], p), invm(f[1], p), p));
    return;
  }
  for (;;) {
    i64 shift = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
    poly g = poly_powmod(poly{shift, 1}, (p - 1) / 2, f, p);
    if (g.empty())
      g = poly{0};
    g[0] = subm(g[0], 1, p);
    poly h = poly_gcd(g, f, p);
    if (poly_deg(h) > 0 && poly_deg(h) < d) {
      split_roots(h, p, rng, out);
      split_roots(poly_divide_exact(f, h, p), p, rng, out);
      return;
    }
  }
}

inline std::vector<i64> roots_of_split_poly(const poly &f, i64 p, rng_t &rng) {
  std::vector<i64> out;
  split_roots(poly_trim(f), p, rng, out);
  return out;
}

} // namespace olab::modp
