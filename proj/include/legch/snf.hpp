#pragma once

#include <optional>
#include <vector>

#include "legch/error.hpp"
#include "legch/ints.hpp"

namespace legch {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
  Int& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
  const Int& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  IntMat transpose() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw Error(Errc::BadInput, "matrix shape mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k) == 0) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  bool is_zero() const {
    for (const Int& v : a)
      if (v != 0) return false;
    return true;
  }
};

inline std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v) {
  std::vector<Int> r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

// Invariant factors with optional unimodular transforms U*A*V = D.
struct SnfResult {
  std::vector<Int> factors;  // d1 | d2 | ..., all positive
  int rank = 0;
  IntMat U, V;  // filled when with_transforms
};

// Pivoting by least absolute value to contain entry growth; exactness is the
// contract, speed secondary.
inline SnfResult smith_normal_form(IntMat D, bool with_transforms = false) {
  const int m = D.rows, n = D.cols;
  SnfResult res;
  IntMat U, V;
  if (with_transforms) {
    U = IntMat::identity(m);
    V = IntMat::identity(n);
  }
  auto row_sub = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < n; ++j) D.at(dst, j) -= q * D.at(src, j);
    if (with_transforms)
      for (int j = 0; j < m; ++j) U.at(dst, j) -= q * U.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < m; ++i) D.at(i, dst) -= q * D.at(i, src);
    if (with_transforms)
      for (int i = 0; i < n; ++i) V.at(i, dst) -= q * V.at(i, src);
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < n; ++j) std::swap(D.at(x, j), D.at(y, j));
    if (with_transforms)
      for (int j = 0; j < m; ++j) std::swap(U.at(x, j), U.at(y, j));
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < m; ++i) std::swap(D.at(i, x), D.at(i, y));
    if (with_transforms)
      for (int i = 0; i < n; ++i) std::swap(V.at(i, x), V.at(i, y));
  };
  auto row_neg = [&](int x) {
    for (int j = 0; j < n; ++j) D.at(x, j) = -D.at(x, j);
    if (with_transforms)
      for (int j = 0; j < m; ++j) U.at(x, j) = -U.at(x, j);
  };

  int t = 0;
  while (t < m && t < n) {
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D.at(i, j) != 0 &&
            (pi < 0 || int_abs(D.at(i, j)) < int_abs(D.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        row_sub(i, t, q);
        if (D.at(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        col_sub(j, t, q);
        if (D.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            row_sub(t, i, Int(-1));  // pulls row i into row t
            divides = false;
          }
      if (divides) break;
    }
    if (D.at(t, t) < 0) row_neg(t);
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.factors.push_back(D.at(i, i));
  if (with_transforms) {
    res.U = std::move(U);
    res.V = std::move(V);
  }
  return res;
}

// Integral solution of A x = b, if one exists.
inline std::optional<std::vector<Int>> solve_integer(const IntMat& A,
                                                     const std::vector<Int>& b) {
  SnfResult s = smith_normal_form(A, true);
  std::vector<Int> c = mat_vec(s.U, b);
  std::vector<Int> y(A.cols, 0);
  for (int i = 0; i < (int)c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.factors[i] != 0) return std::nullopt;
      y[i] = c[i] / s.factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(s.V, y);
}

// Basis of the integer kernel (columns of V past the rank).
inline std::vector<std::vector<Int>> kernel_basis(const IntMat& A) {
  SnfResult s = smith_normal_form(A, true);
  std::vector<std::vector<Int>> out;
  for (int j = s.rank; j < A.cols; ++j) {
    std::vector<Int> v(A.cols);
    for (int i = 0; i < A.cols; ++i) v[i] = s.V.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

inline int rank_mod_p(const IntMat& A, long p) {
  int m = A.rows, n = A.cols;
  std::vector<std::vector<long>> M(m, std::vector<long>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = A.at(i, j) % p;
      if (v < 0) v += p;
      M[i][j] = (long)v;
    }
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[r]);
    long inv = 1, base = M[r][c] % p, e = p - 2;  // p prime
    long acc = 1, bb = base;
    while (e) {
      if (e & 1) acc = (acc * bb) % p;
      bb = (bb * bb) % p;
      e >>= 1;
    }
    inv = acc;
    for (int j = c; j < n; ++j) M[r][j] = (M[r][j] * inv) % p;
    for (int i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      long f = M[i][c];
      for (int j = c; j < n; ++j) M[i][j] = ((M[i][j] - f * M[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace legch
