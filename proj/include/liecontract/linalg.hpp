#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liecontract/cyclo.hpp"

namespace liecontract {

using Vec = std::vector<CycloNumber>;

Vec zero_vec(int n, int order);
Vec unit_vec(int n, int i, int order);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const CycloNumber& s, const Vec& v);
// a += s*b
void axpy(Vec& a, const CycloNumber& s, const Vec& b);
std::string vec_str(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int order);
  static Matrix identity(int n, int order);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols, int order);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows, int order);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int order() const { return order_; }
  CycloNumber& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycloNumber& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  Vec row(int i) const;
  Vec col(int j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const CycloNumber& s) const;
  CycloNumber trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0, order_ = 3;
  std::vector<CycloNumber> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m);
int rank(const Matrix& m);
// basis of {x : m x = 0}; each basis vector has a 1 at one free column and 0 at the others
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
CycloNumber determinant(Matrix m);

// Linear subspace of K^n kept as the nonzero rows of a reduced echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, int order) : ambient_(ambient), order_(order) {}
  static Subspace span(int ambient, int order, const std::vector<Vec>& vectors);
  static Subspace whole(int ambient, int order);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient() const { return ambient_; }
  int order() const { return order_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // coordinates with respect to basis(); v must lie in the subspace
  Vec coordinates(const Vec& v) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // standard unit vectors completing basis() to the whole space
  std::vector<Vec> complement_basis() const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_ = 0, order_ = 3;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

// Homogeneous linear system with sparse rows over Q(zeta_n). The nullspace is found by
// selecting independent rows modulo a word-sized prime, eliminating those rows exactly,
// and checking every candidate against all equations; unlucky selections are repaired by
// adding the violated equations.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<int, CycloNumber>>;

  SparseSystem(int unknowns, int order) : n_(unknowns), order_(order) {}
  // entries may repeat a column; they are summed
  void add_row(Row row);
  int unknowns() const { return n_; }
  size_t equations() const { return rows_.size(); }
  std::vector<Vec> nullspace() const;
  bool satisfied_by(const Vec& x) const;

 private:
  int n_, order_;
  std::vector<Row> rows_;
};

}  // namespace liecontract
