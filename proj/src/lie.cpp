#include "liecontract/lie.hpp"

#include <sstream>
#include <tuple>

#include "liecontract/errors.hpp"

namespace liecontract {

std::string grading_str(GradingIndex g) {
  return "(" + std::to_string(g.r) + std::to_string(g.s) + ")";
}

std::vector<GradingIndex> grading_indices(int n) {
  if (n < 2 || !is_prime(n)) throw UnsupportedOrder("unsupported grading order " + std::to_string(n));
  if (n == 3) return {{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}};
  std::vector<GradingIndex> out;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (r || s) out.push_back({r, s});
  return out;
}

int grading_position(int n, GradingIndex g) {
  auto idx = grading_indices(n);
  for (size_t i = 0; i < idx.size(); ++i)
    if (idx[i] == g) return static_cast<int>(i);
  throw Error("grading index " + grading_str(g) + " is not a nonzero index mod " + std::to_string(n));
}

void StructureConstants::set(int i, int j, const Vec& v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i == j)
    throw ShapeMismatch("bracket index out of range");
  if (static_cast<int>(v.size()) != dim_) throw ShapeMismatch("bracket vector has wrong length");
  if (i > j) {
    set(j, i, scale(CycloNumber(order_, -1), v));
    return;
  }
  if (is_zero(v))
    table_.erase({i, j});
  else
    table_[{i, j}] = v;
}

const Vec* StructureConstants::find(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

Vec StructureConstants::bracket_basis(int i, int j) const {
  if (i == j) return zero_vec(dim_, order_);
  if (i < j) {
    const Vec* v = find(i, j);
    return v ? *v : zero_vec(dim_, order_);
  }
  const Vec* v = find(j, i);
  return v ? scale(CycloNumber(order_, -1), *v) : zero_vec(dim_, order_);
}

std::vector<StructureConstants::Entry> StructureConstants::entries() const {
  std::vector<Entry> out;
  for (const auto& [ij, v] : table_)
    for (int k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) out.push_back({ij.first, ij.second, k, v[k]});
  return out;
}

LieAlgebra::LieAlgebra(int dim, int order) : sc_(dim, order) {}

LieAlgebra::LieAlgebra(StructureConstants sc, std::optional<std::vector<GradingIndex>> grading)
    : sc_(std::move(sc)), grading_(std::move(grading)) {
  if (grading_ && static_cast<int>(grading_->size()) != sc_.dim())
    throw ShapeMismatch("grading labels do not match the dimension");
  entries_ = sc_.entries();
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw ShapeMismatch("bracket arguments have wrong length");
  Vec out = zero();
  for (const auto& e : entries_) {
    // [x,y] picks up c_ij^k (x_i y_j - x_j y_i)
    CycloNumber w = x[e.i] * y[e.j] - x[e.j] * y[e.i];
    if (w.is_zero()) continue;
    out[e.k] += w * e.c;
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n) throw ShapeMismatch("ad argument has wrong length");
  Matrix m(n, n, order());
  for (const auto& e : entries_) {
    // [x, e_j] gains x_i c_ij^k; [x, e_i] gains -x_j c_ij^k
    if (!x[e.i].is_zero()) m(e.k, e.j) += x[e.i] * e.c;
    if (!x[e.j].is_zero()) m(e.k, e.i) -= x[e.j] * e.c;
  }
  return m;
}

Matrix LieAlgebra::ad_basis(int i) const { return ad(unit(i)); }

std::string LieAlgebra::dump() const {
  std::ostringstream os;
  for (const auto& [ij, v] : sc_.table()) {
    os << "[e" << ij.first + 1 << ",e" << ij.second + 1 << "] = ";
    bool first = true;
    for (int k = 0; k < dim(); ++k) {
      const CycloNumber& c = v[k];
      if (c.is_zero()) continue;
      std::string term;
      bool neg = false;
      if (c.is_one()) {
        term = "e" + std::to_string(k + 1);
      } else if ((-c).is_one()) {
        neg = true;
        term = "e" + std::to_string(k + 1);
      } else {
        term = "(" + c.str() + ")*e" + std::to_string(k + 1);
      }
      if (first)
        os << (neg ? "-" : "") << term;
      else
        os << (neg ? " - " : " + ") << term;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

LieAlgebra pauli_algebra(int n) {
  auto idx = grading_indices(n);
  const int dim = static_cast<int>(idx.size());
  StructureConstants sc(dim, n);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      auto [r, s] = idx[a];
      auto [r2, s2] = idx[b];
      CycloNumber c = CycloNumber::root_power(n, s * r2) - CycloNumber::root_power(n, r * s2);
      if (c.is_zero()) continue;
      int k = grading_position(n, {(r + r2) % n, (s + s2) % n});
      Vec v = zero_vec(dim, n);
      v[k] = c;
      sc.set(a, b, v);
    }
  return LieAlgebra(std::move(sc), idx);
}

LieAlgebra abelian_algebra(int dim, int order) { return LieAlgebra(dim, order); }

LieAlgebra algebra_from_brackets(int dim, int order,
                                 const std::vector<std::tuple<int, int, Vec>>& brackets) {
  StructureConstants sc(dim, order);
  for (const auto& [i, j, v] : brackets) sc.set(i, j, v);
  return LieAlgebra(std::move(sc));
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<Matrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(alg.ad_basis(i));
  std::vector<JacobiDefect> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec ij = alg.basis_bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        Vec d = ads[i] * alg.basis_bracket(j, k);
        d = add(d, ads[j] * alg.basis_bracket(k, i));
        d = add(d, ads[k] * ij);
        if (!is_zero(d)) out.push_back({i, j, k, d});
      }
    }
  return out;
}

LieAlgebra apply_contraction(const LieAlgebra& alg, const Matrix& eps) {
  if (eps.rows() != alg.dim() || eps.cols() != alg.dim())
    throw ShapeMismatch("contraction matrix is " + std::to_string(eps.rows()) + "x" +
                        std::to_string(eps.cols()) + ", algebra has dimension " +
                        std::to_string(alg.dim()));
  StructureConstants sc(alg.dim(), alg.order());
  for (const auto& [ij, v] : alg.constants().table()) {
    const CycloNumber& e = eps(ij.first, ij.second);
    if (e.is_zero()) continue;
    sc.set(ij.first, ij.second, scale(e, v));
  }
  return LieAlgebra(std::move(sc), alg.grading());
}

Matrix trace_form(const LieAlgebra& alg, const std::optional<Subspace>& restrict_to) {
  const int n = alg.dim();
  std::vector<Vec> cols;
  if (restrict_to) {
    cols = restrict_to->basis();
  } else {
    for (int i = 0; i < n; ++i) cols.push_back(alg.unit(i));
  }
  std::vector<Matrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(alg.ad_basis(i));
  Matrix k(n, static_cast<int>(cols.size()), alg.order());
  for (size_t b = 0; b < cols.size(); ++b) {
    Matrix adb = alg.ad(cols[b]);
    for (int i = 0; i < n; ++i) {
      // Tr(XY) = sum_pq X_pq Y_qp
      CycloNumber t(alg.order());
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const CycloNumber& x = ads[i](p, q);
          if (x.is_zero()) continue;
          const CycloNumber& y = adb(q, p);
          if (!y.is_zero()) t += x * y;
        }
      k(i, static_cast<int>(b)) = t;
    }
  }
  return k;
}

CoordinateMap::CoordinateMap(const std::vector<Vec>& basis, int ambient, int order)
    : basis_(basis), ambient_(ambient), order_(order) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) return;
  // independent rows of the ambient x m matrix B come from pivots of B^T's echelon form
  Matrix bt = Matrix::from_rows(basis, ambient, order);
  Rref rr = rref(bt);
  if (static_cast<int>(rr.pivots.size()) != m) throw Error("coordinate family is dependent");
  rows_ = rr.pivots;
  Matrix sq(m, m, order);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sq(a, b) = basis[b][rows_[a]];
  inv_ = *inverse(sq);
}

std::optional<Vec> CoordinateMap::coordinates(const Vec& v) const {
  const int m = size();
  Vec sel(m, CycloNumber(order_));
  for (int a = 0; a < m; ++a) sel[a] = v[rows_[a]];
  Vec c = m ? inv_ * sel : Vec{};
  if (combine(c) != v) return std::nullopt;
  return c;
}

Vec CoordinateMap::combine(const Vec& coords) const {
  Vec out = zero_vec(ambient_, order_);
  for (size_t a = 0; a < basis_.size(); ++a)
    if (!coords[a].is_zero()) axpy(out, coords[a], basis_[a]);
  return out;
}

LieAlgebra restrict_to(const LieAlgebra& alg, const std::vector<Vec>& basis) {
  const int m = static_cast<int>(basis.size());
  CoordinateMap cm(basis, alg.dim(), alg.order());
  StructureConstants sc(m, alg.order());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vec br = alg.bracket(basis[a], basis[b]);
      if (is_zero(br)) continue;
      auto c = cm.coordinates(br);
      if (!c) throw Error("vectors do not span a subalgebra");
      sc.set(a, b, *c);
    }
  return LieAlgebra(std::move(sc));
}

LieAlgebra change_basis(const LieAlgebra& alg, const Matrix& T) {
  if (T.rows() != alg.dim() || T.cols() != alg.dim()) throw ShapeMismatch("basis change has wrong shape");
  std::vector<Vec> cols;
  for (int j = 0; j < T.cols(); ++j) cols.push_back(T.col(j));
  return restrict_to(alg, cols);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.order() != b.order()) throw OrderMismatch("direct sum of algebras over different fields");
  const int n = a.dim() + b.dim();
  StructureConstants sc(n, a.order());
  for (const auto& [ij, v] : a.constants().table()) {
    Vec w = zero_vec(n, a.order());
    for (int k = 0; k < a.dim(); ++k) w[k] = v[k];
    sc.set(ij.first, ij.second, w);
  }
  for (const auto& [ij, v] : b.constants().table()) {
    Vec w = zero_vec(n, a.order());
    for (int k = 0; k < b.dim(); ++k) w[a.dim() + k] = v[k];
    sc.set(a.dim() + ij.first, a.dim() + ij.second, w);
  }
  return LieAlgebra(std::move(sc));
}

}  // namespace liecontract
