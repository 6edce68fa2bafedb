#pragma once

// Exact arithmetic in Z[zeta_e]: values are integer coordinate vectors in
// the power basis {1, zeta, ..., zeta^(phi(e)-1)} modulo the e-th cyclotomic
// polynomial.  The representation is canonical, so equality of values is
// equality of vectors.

#include <string>
#include <vector>

#include "olab/config.hpp"

namespace olab {

// Integer coefficients of the e-th cyclotomic polynomial, lowest first,
// via exact division of x^e - 1 by the proper-divisor factors.
inline std::vector<long long> cyclotomic_poly(int e) {
  // x^d - 1 helper.
  auto xn_minus_1 = [](int d) {
    std::vector<long long> f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    return f;
  };
  // Exact division of integer polynomials (divisor monic).
  auto divide = [](std::vector<long long> a,
                   const std::vector<long long> &b) {
    std::vector<long long> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      long long c = a[i + b.size() - 1];
      q[i] = c;
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        a[i + j] -= c * b[j];
    }
    for (long long c : a)
      if (c != 0)
        throw config_error("cyclotomic division left a remainder");
    return q;
  };
  std::vector<long long> f = xn_minus_1(e);
  for (int d = 1; d < e; ++d)
    if (e % d == 0)
      f = divide(std::move(f), cyclotomic_poly(d));
  return f;
}

// Values in Z[zeta_e]; fixed-length integer vectors.
using cyc = std::vector<long long>;

struct cyc_context {
  int e = 1;
  int phi = 1;
  // power[k] = coordinates of zeta^k for k in [0, 2*phi) u [0, e).
  std::vector<cyc> power;

  cyc_context() : cyc_context(1) {}

  explicit cyc_context(int exponent) : e(exponent) {
    std::vector<long long> f = cyclotomic_poly(e);
    phi = static_cast<int>(f.size()) - 1;
    // zeta^phi = -(lower coefficients of the minimal polynomial).
    cyc step(static_cast<std::size_t>(phi), 0);
    for (int i = 0; i < phi; ++i)
      step[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(i)];
    int count = std::max(e, 2 * phi);
    power.reserve(static_cast<std::size_t>(count));
    cyc cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    for (int k = 0; k < count; ++k) {
      power.push_back(cur);
      // Multiply by zeta: shift up, fold the overflow through `step`.
      long long top = cur[static_cast<std::size_t>(phi) - 1];
      for (int i = phi - 1; i > 0; --i)
        cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < phi; ++i)
          cur[static_cast<std::size_t>(i)] +=
              top * step[static_cast<std::size_t>(i)];
    }
  }

  cyc zero() const { return cyc(static_cast<std::size_t>(phi), 0); }
  cyc from_int(long long n) const {
    cyc v = zero();
    v[0] = n;
    return v;
  }
  // zeta^k for any k (reduced mod e).
  cyc root_power(long long k) const {
    return power[static_cast<std::size_t>(((k % e) + e) % e)];
  }

  cyc add(cyc a, const cyc &b) const {
    for (int i = 0; i < phi; ++i)
      a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
    return a;
  }
  cyc sub(cyc a, const cyc &b) const {
    for (int i = 0; i < phi; ++i)
      a[static_cast<std::size_t>(i)] -= b[static_cast<std::size_t>(i)];
    return a;
  }
  cyc scale(cyc a, long long n) const {
    for (long long &x : a)
      x *= n;
    return a;
  }
  cyc mul(const cyc &a, const cyc &b) const {
    std::vector<long long> conv(2 * static_cast<std::size_t>(phi), 0);
    for (int i = 0; i < phi; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0)
        continue;
      for (int j = 0; j < phi; ++j)
        conv[static_cast<std::size_t>(i + j)] +=
            a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    cyc r = zero();
    for (std::size_t k = 0; k < conv.size(); ++k) {
      if (conv[k] == 0)
        continue;
      const cyc &pw = power[k];
      for (int i = 0; i < phi; ++i)
        r[static_cast<std::size_t>(i)] +=
            conv[k] * pw[static_cast<std::size_t>(i)];
    }
    return r;
  }
  // Complex conjugation: zeta^k -> zeta^(e-k).
  cyc conj(const cyc &a) const {
    cyc r = zero();
    for (int i = 0; i < phi; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0)
        continue;
      const cyc &pw = root_power(e - i);
      for (int j = 0; j < phi; ++j)
        r[static_cast<std::size_t>(j)] +=
            a[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(j)];
    }
    return r;
  }

  bool is_zero(const cyc &a) const {
    for (long long x : a)
      if (x != 0)
        return false;
    return true;
  }
  bool is_int(const cyc &a) const {
    for (int i = 1; i < phi; ++i)
      if (a[static_cast<std::size_t>(i)] != 0)
        return false;
    return true;
  }
  long long int_value(const cyc &a) const {
    if (!is_int(a))
      throw config_error("cyclotomic value is not a rational integer");
    return a[0];
  }
  // Exact division by an integer; throws if any coordinate resists.
  cyc divide_int(cyc a, long long n) const {
    for (long long &x : a) {
      if (x % n != 0)
        throw config_error("cyclotomic value not divisible as required");
      x /= n;
    }
    return a;
  }

  std::string to_string(const cyc &a) const {
    std::string s;
    bool any = false;
    for (int i = 0; i < phi; ++i) {
      long long c = a[static_cast<std::size_t>(i)];
      if (c == 0)
        continue;
      if (any)
        s += c > 0 ? "+" : "-";
      else if (c < 0)
        s += "-";
      long long m = c > 0 ? c : -c;
      if (m != 1 || i == 0)
        s += std::to_string(m);
      if (i >= 1) {
        s += "z";
        if (i > 1)
          s += "^" + std::to_string(i);
      }
      any = true;
    }
    return any ? s : "0";
  }
};

} // namespace olab
