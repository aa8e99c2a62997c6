#include "liecontract/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace liecontract {

Vec zero_vec(int n, int order) { return Vec(n, CycloNumber(order)); }

Vec unit_vec(int n, int i, int order) {
  Vec v = zero_vec(n, order);
  v[i] = CycloNumber(order, 1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloNumber& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const CycloNumber& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const CycloNumber& s, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
  if (s.is_zero()) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix::Matrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order),
      a_(static_cast<size_t>(rows) * cols, CycloNumber(order)) {}

Matrix Matrix::identity(int n, int order) {
  Matrix m(n, n, order);
  for (int i = 0; i < n; ++i) m(i, i) = CycloNumber(order, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, int order) {
  Matrix m(static_cast<int>(rows.size()), cols, order);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw ShapeMismatch("row length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows, int order) {
  return from_rows(cols, rows, order).transpose();
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, order_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, order_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycloNumber& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  Vec r = zero_vec(rows_, order_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::scaled(const CycloNumber& s) const {
  Matrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

CycloNumber Matrix::trace() const {
  CycloNumber t(order_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const CycloNumber& x) { return x.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Rref rref(Matrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    CycloNumber inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      CycloNumber f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

namespace {

std::vector<Vec> nullspace_from_rref(const Matrix& R, const std::vector<int>& pivots, int n,
                                     int order) {
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n, order);
    v[f] = CycloNumber(order, 1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vec> nullspace(const Matrix& m) {
  Rref r = rref(m);
  return nullspace_from_rref(r.reduced, r.pivots, m.cols(), m.order());
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1, a.order());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.cols(), a.order());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.reduced(static_cast<int>(i), a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n, m.order());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycloNumber(m.order(), 1);
  }
  Rref r = rref(aug);
  if (static_cast<int>(r.pivots.size()) < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

CycloNumber determinant(Matrix m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  int n = m.rows();
  CycloNumber det(m.order(), 1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return CycloNumber(m.order());
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    CycloNumber inv = m(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      CycloNumber f = m(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Subspace Subspace::span(int ambient, int order, const std::vector<Vec>& vectors) {
  Subspace s(ambient, order);
  if (vectors.empty()) return s;
  Rref r = rref(Matrix::from_rows(vectors, ambient, order));
  for (size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.reduced.row(static_cast<int>(i)));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::whole(int ambient, int order) {
  Subspace s(ambient, order);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(ambient, i, order));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw ShapeMismatch("vector not in ambient space");
  Vec r(v);
  for (size_t i = 0; i < basis_.size(); ++i) {
    CycloNumber f = r[pivots_[i]];
    if (!f.is_zero()) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c;
  c.reserve(basis_.size());
  for (int p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, order_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_, order_);
  // sum x_i u_i - sum y_j w_j = 0
  std::vector<Vec> cols = basis_;
  for (const auto& w : o.basis_) cols.push_back(scale(CycloNumber(order_, -1), w));
  Matrix m = Matrix::from_columns(cols, ambient_, order_);
  std::vector<Vec> out;
  for (const auto& k : nullspace(m)) {
    Vec v = zero_vec(ambient_, order_);
    for (int i = 0; i < dim(); ++i) axpy(v, k[i], basis_[i]);
    out.push_back(std::move(v));
  }
  return span(ambient_, order_, out);
}

std::vector<Vec> Subspace::complement_basis() const {
  std::vector<bool> used(ambient_, false);
  for (int p : pivots_) used[p] = true;
  std::vector<Vec> out;
  for (int i = 0; i < ambient_; ++i)
    if (!used[i]) out.push_back(unit_vec(ambient_, i, order_));
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

namespace {

constexpr uint64_t kPrime = 2147482951ULL;  // prime, 1 mod 30

uint64_t mulmod(uint64_t a, uint64_t b) { return (a * b) % kPrime; }

uint64_t powmod(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

// image of zeta_n in F_p
uint64_t root_of_unity(int n) {
  for (uint64_t g = 2;; ++g) {
    uint64_t r = powmod(g, (kPrime - 1) / n);
    if (r != 1) return r;
  }
}

uint64_t rational_mod(const Rational& q, bool& ok) {
  mpz_class num = q.get_num() % static_cast<unsigned long>(kPrime);
  if (num < 0) num += static_cast<unsigned long>(kPrime);
  mpz_class den = q.get_den() % static_cast<unsigned long>(kPrime);
  if (den == 0) {
    ok = false;
    return 0;
  }
  return mulmod(num.get_ui(), invmod(den.get_ui()));
}

uint64_t cyclo_mod(const CycloNumber& x, uint64_t root, bool& ok) {
  uint64_t acc = 0, pw = 1;
  for (int k = 0; k < x.degree(); ++k) {
    if (x.coeff(k) != 0) acc = (acc + mulmod(rational_mod(x.coeff(k), ok), pw)) % kPrime;
    pw = mulmod(pw, root);
  }
  return acc;
}

using SparseRow = std::map<int, CycloNumber>;

// exact elimination of the given rows, returning a nullspace basis
std::vector<Vec> exact_nullspace(const std::vector<const SparseSystem::Row*>& rows, int n,
                                 int order) {
  std::map<int, SparseRow> piv;  // pivot column -> row normalized to 1 at the pivot
  for (const auto* src : rows) {
    SparseRow w;
    for (const auto& [c, v] : *src) {
      auto [it, fresh] = w.emplace(c, v);
      if (!fresh) it->second += v;
    }
    for (auto it = w.begin(); it != w.end();) {
      if (it->second.is_zero()) {
        it = w.erase(it);
        continue;
      }
      auto p = piv.find(it->first);
      if (p == piv.end()) {
        ++it;
        continue;
      }
      CycloNumber f = it->second;
      for (const auto& [c, v] : p->second) {
        auto [jt, fresh] = w.emplace(c, CycloNumber(order));
        jt->second -= f * v;
      }
      it = w.find(p->first);
    }
    for (auto it = w.begin(); it != w.end();)
      it = it->second.is_zero() ? w.erase(it) : std::next(it);
    if (w.empty()) continue;
    CycloNumber inv = w.begin()->second.inverse();
    for (auto& [c, v] : w) v *= inv;
    piv.emplace(w.begin()->first, std::move(w));
  }
  // back substitution: eliminate pivot columns from earlier rows, highest pivot first
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const int pc = it->first;
    for (auto& [qc, q] : piv) {
      if (qc >= pc) break;
      auto e = q.find(pc);
      if (e == q.end()) continue;
      CycloNumber f = e->second;
      for (const auto& [c, v] : it->second) {
        auto [jt, fresh] = q.emplace(c, CycloNumber(order));
        jt->second -= f * v;
      }
      for (auto jt = q.begin(); jt != q.end();)
        jt = jt->second.is_zero() ? q.erase(jt) : std::next(jt);
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (const auto& [c, r] : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n, order);
    v[f] = CycloNumber(order, 1);
    for (const auto& [c, r] : piv) {
      auto e = r.find(f);
      if (e != r.end()) v[c] = -e->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

void SparseSystem::add_row(Row row) {
  for (const auto& [c, v] : row)
    if (c < 0 || c >= n_) throw ShapeMismatch("column out of range in sparse row");
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second.is_zero(); }),
            row.end());
  if (!row.empty()) rows_.push_back(std::move(row));
}

bool SparseSystem::satisfied_by(const Vec& x) const {
  for (const auto& r : rows_) {
    CycloNumber acc(order_);
    for (const auto& [c, v] : r)
      if (!x[c].is_zero()) acc += v * x[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<Vec> SparseSystem::nullspace() const {
  const uint64_t root = root_of_unity(order_);
  std::vector<const Row*> selected;
  // modular reduced echelon form: each pivot row is zero in every other pivot column, so a
  // new row is reduced by one pass over its pivot-column entries
  std::vector<int> pivot_row(n_, -1);
  std::vector<std::vector<uint64_t>> prows;
  std::vector<uint64_t> w(n_);
  for (const auto& r : rows_) {
    if (static_cast<int>(prows.size()) == n_) break;
    bool ok = true;
    std::fill(w.begin(), w.end(), 0);
    for (const auto& [c, v] : r) w[c] = (w[c] + cyclo_mod(v, root, ok)) % kPrime;
    if (!ok) {
      selected.push_back(&r);
      continue;
    }
    std::vector<std::pair<int, uint64_t>> hits;
    for (const auto& [c, v] : r)
      if (pivot_row[c] >= 0 && w[c]) hits.emplace_back(c, w[c]);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (const auto& [pc, f] : hits) {
      const auto& prow = prows[pivot_row[pc]];
      for (int j = 0; j < n_; ++j)
        if (prow[j]) w[j] = (w[j] + kPrime - mulmod(f, prow[j])) % kPrime;
    }
    int lead = -1;
    for (int j = 0; j < n_; ++j)
      if (w[j]) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    uint64_t inv = invmod(w[lead]);
    for (int j = 0; j < n_; ++j)
      if (w[j]) w[j] = mulmod(w[j], inv);
    for (auto& prow : prows) {
      uint64_t f = prow[lead];
      if (!f) continue;
      for (int j = 0; j < n_; ++j)
        if (w[j]) prow[j] = (prow[j] + kPrime - mulmod(f, w[j])) % kPrime;
    }
    pivot_row[lead] = static_cast<int>(prows.size());
    prows.push_back(w);
    selected.push_back(&r);
  }
  while (true) {
    std::vector<Vec> basis = exact_nullspace(selected, n_, order_);
    std::vector<const Row*> extra;
    for (const auto& r : rows_) {
      for (const auto& x : basis) {
        CycloNumber acc(order_);
        for (const auto& [c, v] : r)
          if (!x[c].is_zero()) acc += v * x[c];
        if (!acc.is_zero()) {
          extra.push_back(&r);
          break;
        }
      }
    }
    if (extra.empty()) return basis;
    selected.insert(selected.end(), extra.begin(), extra.end());
  }
}

}  // namespace liecontract
