#pragma once
// Test-only oracles. Nothing here calls into the code paths being checked
// beyond the plain value types (Rational, IntVector, RatMatrix storage).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hypermet/matrix.hpp"
#include "hypermet/rational.hpp"

namespace oracle {

using hypermet::Integer;
using hypermet::IntVector;
using hypermet::RatMatrix;
using hypermet::Rational;
using hypermet::RatVector;

using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const RatMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

/// Plain Gauss–Jordan inverse; assumes nonsingular.
inline Dense gauss_jordan_inverse(Dense a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational f = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational g = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

/// Leading-minor (Sylvester) positive definiteness via cofactor-free elimination.
inline Rational det(Dense a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

inline bool sylvester_pd(const Dense& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    Dense m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = g[i][j];
    if (det(m) <= 0) return false;
  }
  return true;
}

inline Rational form(const Dense& g, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += y[i] * g[i][j] * y[j];
  return s;
}

/// Characteristic polynomial coefficients c_0..c_n of det(xI - G)
/// (Faddeev–LeVerrier), c_n = 1.
inline std::vector<Rational> charpoly(const Dense& g) {
  const std::size_t n = g.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Dense m(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = G·M_{k-1} + c_{n-k+1} I
    Dense next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += g[i][t] * m[t][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    m = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += g[i][t] * m[t][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

struct Signature {
  std::size_t plus = 0, minus = 0, zero = 0;
};

/// Exact signature of a symmetric matrix by Descartes' rule applied to its
/// characteristic polynomial (all roots real, so the rule is exact).
inline Signature descartes_signature(const Dense& g) {
  auto c = charpoly(g);
  Signature s;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  s.zero = low;
  auto changes = [&](bool negate) {
    std::size_t count = 0;
    int prev = 0;
    for (std::size_t k = low; k < c.size(); ++k) {
      int sg = sgn(c[k]);
      if (negate && (k % 2 == 1)) sg = -sg;
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  s.plus = changes(false);
  s.minus = changes(true);
  return s;
}

struct BoxCVP {
  std::vector<IntVector> inside;  // strictly inside
  std::vector<IntVector> exact;   // on the sphere
};

/// Per-coordinate ellipsoid bound: |w_i - x_i| ≤ sqrt(r2·(G⁻¹)_ii).
inline std::vector<std::pair<long, long>> ellipsoid_box(const Dense& g, const RatVector& x, const Rational& r2) {
  Dense inv = gauss_jordan_inverse(g);
  std::vector<std::pair<long, long>> box;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational t = r2 * inv[i][i];
    long s = 0;
    while (Rational((s + 1) * (s + 1)) <= t) ++s;
    long c = static_cast<long>(std::floor(x[i].get_d()));
    box.emplace_back(c - s - 1, c + s + 2);
  }
  return box;
}

inline BoxCVP brute_cvp(const Dense& g, const RatVector& x, const Rational& r2) {
  auto box = ellipsoid_box(g, x, r2);
  const std::size_t n = g.size();
  BoxCVP out;
  std::vector<long> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = box[i].first;
  for (;;) {
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rational(w[i]) - x[i];
    Rational v = form(g, y);
    IntVector wi(w.begin(), w.end());
    if (v < r2) out.inside.push_back(wi);
    if (v == r2) out.exact.push_back(wi);
    std::size_t k = n;
    while (k > 0 && w[k - 1] == box[k - 1].second) {
      w[k - 1] = box[k - 1].first;
      --k;
    }
    if (k == 0) break;
    ++w[k - 1];
  }
  std::sort(out.inside.begin(), out.inside.end());
  std::sort(out.exact.begin(), out.exact.end());
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, long num_lo, long num_hi, long max_den) {
  std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random symmetric positive definite matrix with |entries| ≤ bound.
inline RatMatrix random_pd(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> off(-bound, bound), diag(1, bound);
  for (;;) {
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        long v = off(rng);
        g(i, j) = v;
        g(j, i) = v;
      }
    }
    if (sylvester_pd(to_dense(g))) return g;
  }
}

}  // namespace oracle
