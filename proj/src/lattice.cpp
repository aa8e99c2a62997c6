#include "liecontract/lattice.hpp"

#include <utility>

namespace liecontract {

namespace {

int rows_of(const IntMat& a) { return static_cast<int>(a.size()); }
int cols_of(const IntMat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

// row_i -= q * row_j
void row_sub(IntMat& m, int i, int j, const Integer& q) {
  if (q == 0) return;
  for (size_t k = 0; k < m[i].size(); ++k) m[i][k] -= q * m[j][k];
}

void col_sub(IntMat& m, int i, int j, const Integer& q) {
  if (q == 0) return;
  for (auto& row : m) row[i] -= q * row[j];
}

void col_swap(IntMat& m, int i, int j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

void row_negate(IntMat& m, int i) {
  for (auto& x : m[i]) x = -x;
}

void col_negate(IntMat& m, int i) {
  for (auto& row : m) row[i] = -row[i];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, Integer(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  int n = rows_of(a), k = cols_of(a), m = cols_of(b);
  IntMat r(n, IntVec(m, Integer(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IntVec int_vec_mat(const IntVec& v, const IntMat& m) {
  IntVec r(cols_of(m), Integer(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

Hermite hermite(const IntMat& a) {
  Hermite h;
  h.H = a;
  const int m = rows_of(a), n = cols_of(a);
  h.U = int_identity(m);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (h.H[i][c] != 0 && (best < 0 || abs(h.H[i][c]) < abs(h.H[best][c]))) best = i;
      if (best < 0) break;
      std::swap(h.H[r], h.H[best]);
      std::swap(h.U[r], h.U[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (h.H[i][c] == 0) continue;
        Integer q = floor_div(h.H[i][c], h.H[r][c]);
        row_sub(h.H, i, r, q);
        row_sub(h.U, i, r, q);
        if (h.H[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h.H[r][c] == 0) continue;
    if (h.H[r][c] < 0) {
      row_negate(h.H, r);
      row_negate(h.U, r);
    }
    for (int i = 0; i < r; ++i) {
      Integer q = floor_div(h.H[i][c], h.H[r][c]);
      row_sub(h.H, i, r, q);
      row_sub(h.U, i, r, q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

Smith smith(const IntMat& a) {
  Smith s;
  IntMat d = a;
  const int m = rows_of(a), n = cols_of(a);
  s.U = int_identity(m);
  s.V = int_identity(n);
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d[i][j] != 0 && (bi < 0 || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) goto finished;
      std::swap(d[t], d[bi]);
      std::swap(s.U[t], s.U[bi]);
      col_swap(d, t, bj);
      col_swap(s.V, t, bj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Integer q = floor_div(d[i][t], d[t][t]);
        row_sub(d, i, t, q);
        row_sub(s.U, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Integer q = floor_div(d[t][j], d[t][t]);
        col_sub(d, j, t, q);
        col_sub(s.V, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold a violating row into row t and retry
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_sub(d, t, bad, Integer(-1));
      row_sub(s.U, t, bad, Integer(-1));
    }
    if (d[t][t] < 0) {
      col_negate(d, t);
      col_negate(s.V, t);
    }
  }
finished:
  s.rank = t;
  for (int i = 0; i < t; ++i) s.diag.push_back(d[i][i]);
  return s;
}

IntMat left_kernel(const IntMat& a) {
  Hermite h = hermite(a);
  return IntMat(h.U.begin() + h.rank, h.U.end());
}

bool in_row_lattice(const IntMat& basis, const IntVec& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  Hermite h = hermite(basis);
  IntVec w = v;
  const int n = cols_of(basis);
  int r = 0;
  for (int c = 0; c < n && r < h.rank; ++c) {
    if (h.H[r][c] == 0) {
      // no remaining row can change column c
      if (w[c] != 0) return false;
      continue;
    }
    if (w[c] % h.H[r][c] != 0) return false;
    Integer q = w[c] / h.H[r][c];
    for (int k = 0; k < n; ++k) w[k] -= q * h.H[r][k];
    ++r;
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

int int_rank(const IntMat& a) { return hermite(a).rank; }

}  // namespace liecontract
