#pragma once

// Test-side reference computations. Nothing here calls into the library:
// small finite fields are plain integer tables, polynomials are coefficient
// vectors of ints mod p, and lattices are reduced with checked int64 math.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using IntPoly = std::vector<long>;  // low degree first, entries in [0, p)

inline long mod(long a, long p) { return ((a % p) + p) % p; }

inline long inv_mod(long a, long p) {
  long r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long pow_mod(long a, long e, long p) {
  if (e < 0) return pow_mod(inv_mod(a, p), -e, p);
  long r = 1, b = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline IntPoly poly_rem(IntPoly a, const IntPoly& m, long p) {
  trim(a);
  long lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    long c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t k = 0; k < m.size(); ++k) a[shift + k] = mod(a[shift + k] - c * m[k], p);
    trim(a);
  }
  return a;
}

inline long poly_eval(const IntPoly& f, long x, long p) {
  long r = 0;
  for (std::size_t k = f.size(); k-- > 0;) r = (r * x + f[k]) % p;
  return r;
}

/// Monic of degree d over F_p, irreducible by trial division by every monic
/// polynomial of degree 1..d/2.
inline bool brute_irreducible(const IntPoly& f, long p) {
  int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; e <= d / 2; ++e) {
    long count = 1;
    for (int k = 0; k < e; ++k) count *= p;
    for (long code = 0; code < count; ++code) {
      IntPoly g(e + 1, 0);
      long c = code;
      for (int k = 0; k < e; ++k) {
        g[k] = c % p;
        c /= p;
      }
      g[e] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Number of monic irreducibles of degree d over F_p: (1/d) sum mu(d/e) p^e.
inline long gauss_count(long p, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int q = 2; q * q <= n; ++q)
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  long total = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      long pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      total += mobius(d / e) * pe;
    }
  return total / d;
}

/// F_q as multiplication and addition tables on codes 0..q-1 (base-p digits
/// of the coefficient vector), modulo the first monic irreducible found.
struct TinyField {
  long p = 0, q = 0;
  int d = 1;
  std::vector<std::vector<long>> add, mul;

  TinyField(long p_, int d_) : p(p_), d(d_) {
    q = 1;
    for (int k = 0; k < d; ++k) q *= p;
    IntPoly m;
    for (long code = 0; code < q; ++code) {
      IntPoly f(d + 1, 0);
      long c = code;
      for (int k = 0; k < d; ++k) {
        f[k] = c % p;
        c /= p;
      }
      f[d] = 1;
      if (brute_irreducible(f, p)) {
        m = f;
        break;
      }
    }
    add.assign(q, std::vector<long>(q));
    mul.assign(q, std::vector<long>(q));
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        IntPoly x = decode(a), y = decode(b), s(d, 0);
        for (int k = 0; k < d; ++k) s[k] = (x[k] + y[k]) % p;
        add[a][b] = encode(s);
        mul[a][b] = encode(poly_rem(poly_mul(x, y, p), m, p));
      }
  }

  IntPoly decode(long code) const {
    IntPoly f(d, 0);
    for (int k = 0; k < d; ++k) {
      f[k] = code % p;
      code /= p;
    }
    return f;
  }
  long encode(IntPoly f) const {
    f.resize(d, 0);
    long code = 0;
    for (int k = d; k-- > 0;) code = code * p + f[k];
    return code;
  }
  long one() const { return 1; }
  long neg(long a) const {
    for (long b = 0; b < q; ++b)
      if (add[a][b] == 0) return b;
    throw std::logic_error("no negative");
  }
  long sub(long a, long b) const { return add[a][neg(b)]; }
};

/// Order of Z^cols / (row span), or 0 when the quotient is infinite.
/// Rows are folded into an echelon basis by gcd steps; the index is the
/// product of the pivots. A nonzero `killed` asserts killed * Z^cols lies in
/// the span, which lets entries be reduced mod killed.
inline long lattice_index(const std::vector<std::vector<long>>& rows, std::size_t cols, long killed = 0) {
  auto checked = [](long a, long b, long c, long d) {
    long x, y, z;
    if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) || __builtin_add_overflow(x, y, &z))
      throw std::overflow_error("lattice entry overflow");
    return z;
  };
  std::vector<std::vector<long>> pivot(cols);
  auto reduce = [&](std::vector<long>& v) {
    if (killed > 0)
      for (auto& x : v) x %= killed;
  };
  if (killed > 0)
    for (std::size_t c = 0; c < cols; ++c) {
      pivot[c].assign(cols, 0);
      pivot[c][c] = killed;
    }
  for (std::vector<long> v : rows) {
    reduce(v);
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      if (pivot[c].empty()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        pivot[c] = v;
        break;
      }
      std::vector<long>& w = pivot[c];
      // Extended gcd of (w[c], v[c]).
      long a = w[c], b = v[c], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (b != 0) {
        long qt = a / b, r = a - qt * b;
        a = b;
        b = r;
        long s2 = s0 - qt * s1, t2 = t0 - qt * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
      }
      long g = a, wc = w[c] / g, vc = v[c] / g;
      std::vector<long> nw(cols), nv(cols);
      for (std::size_t k = 0; k < cols; ++k) {
        nw[k] = checked(s0, w[k], t0, v[k]);
        nv[k] = checked(wc, v[k], -vc, w[k]);
      }
      if (nw[c] < 0)
        for (auto& x : nw) x = -x;
      reduce(nv);
      reduce(nw);
      w = nw;
      v = nv;
    }
  }
  long index = 1;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot[c].empty()) return 0;
    index *= pivot[c][c];
  }
  return index;
}

/// |K2(F_q)| from the full presentation: generators {a, b} for a, b in F_q^*,
/// bilinearity in each slot and the Steinberg relations {a, 1 - a}.
/// Bilinearity gives (q - 1){a, b} = {a^(q-1), b} = {1, b} = 0.
inline long k2_order_brute(long p, int d) {
  TinyField F(p, d);
  long n = F.q - 1;
  auto gen = [&](long a, long b) { return static_cast<std::size_t>((a - 1) * n + (b - 1)); };
  std::size_t cols = static_cast<std::size_t>(n * n);
  std::vector<std::vector<long>> rows;
  for (long a = 1; a < F.q; ++a)
    for (long b = 1; b < F.q; ++b)
      for (long c = 1; c < F.q; ++c) {
        std::vector<long> r1(cols, 0), r2(cols, 0);
        r1[gen(F.mul[a][b], c)] += 1;
        r1[gen(a, c)] -= 1;
        r1[gen(b, c)] -= 1;
        r2[gen(a, F.mul[b][c])] += 1;
        r2[gen(a, b)] -= 1;
        r2[gen(a, c)] -= 1;
        rows.push_back(r1);
        rows.push_back(r2);
      }
  for (long a = 2; a < F.q; ++a) {
    std::vector<long> r(cols, 0);
    r[gen(a, F.sub(1, a))] += 1;
    rows.push_back(r);
  }
  return lattice_index(rows, cols, n);
}

/// Valuation at t = a and the value of the unit part there.
struct LocalData {
  long ord = 0;
  long unit = 0;
};

inline LocalData local_at(IntPoly f, long a, long p) {
  trim(f);
  LocalData out;
  for (;;) {
    if (poly_eval(f, a, p) != 0) break;
    // Synthetic division by (t - a).
    IntPoly q(f.size() - 1, 0);
    long carry = 0;
    for (std::size_t k = f.size(); k-- > 1;) {
      carry = (f[k] + carry * a) % p;
      q[k - 1] = carry;
    }
    f = q;
    ++out.ord;
  }
  out.unit = poly_eval(f, a, p);
  return out;
}

/// Tame symbol of {f, g} at t = a for f = fn/fd, g = gn/gd over F_p:
/// (-1)^(v(f) v(g)) f^v(g) / g^v(f), evaluated at a.
inline long classic_tame(const IntPoly& fn, const IntPoly& fd, const IntPoly& gn, const IntPoly& gd, long a,
                         long p) {
  LocalData f1 = local_at(fn, a, p), f2 = local_at(fd, a, p), g1 = local_at(gn, a, p), g2 = local_at(gd, a, p);
  long vf = f1.ord - f2.ord, vg = g1.ord - g2.ord;
  long uf = f1.unit * inv_mod(f2.unit, p) % p, ug = g1.unit * inv_mod(g2.unit, p) % p;
  long sign = (vf * vg) % 2 == 0 ? 1 : p - 1;
  return sign * pow_mod(uf, vg, p) % p * pow_mod(ug, -vf, p) % p;
}

/// Same at infinity, uniformizer 1/t: v(f) = deg fd - deg fn and the unit
/// part takes the value lc(fn)/lc(fd).
inline long classic_tame_infinity(IntPoly fn, IntPoly fd, IntPoly gn, IntPoly gd, long p) {
  trim(fn);
  trim(fd);
  trim(gn);
  trim(gd);
  long vf = static_cast<long>(fd.size()) - static_cast<long>(fn.size());
  long vg = static_cast<long>(gd.size()) - static_cast<long>(gn.size());
  long uf = fn.back() * inv_mod(fd.back(), p) % p, ug = gn.back() * inv_mod(gd.back(), p) % p;
  long sign = (vf * vg) % 2 == 0 ? 1 : p - 1;
  return sign * pow_mod(uf, vg, p) % p * pow_mod(ug, -vf, p) % p;
}

}  // namespace oracle
