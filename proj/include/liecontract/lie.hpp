#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecontract/linalg.hpp"

namespace liecontract {

struct GradingIndex {
  int r = 0;
  int s = 0;
  friend bool operator==(GradingIndex a, GradingIndex b) { return a.r == b.r && a.s == b.s; }
  friend bool operator!=(GradingIndex a, GradingIndex b) { return !(a == b); }
};

std::string grading_str(GradingIndex g);  // "(01)"

// Nonzero indices of Z_n x Z_n. For n = 3 the order is (01),(02),(10),(20),(11),(22),(12),(21);
// other n use lexicographic order.
std::vector<GradingIndex> grading_indices(int n);
int grading_position(int n, GradingIndex g);

// c_ij^k for i < j, stored sparsely; [e_j, e_i] = -[e_i, e_j] by convention
class StructureConstants {
 public:
  struct Entry {
    int i, j, k;
    CycloNumber c;
  };

  StructureConstants(int dim, int order) : dim_(dim), order_(order) {}
  int dim() const { return dim_; }
  int order() const { return order_; }
  // sets [e_i, e_j] = v for i != j (i > j stores -v at (j, i)); zero vectors erase
  void set(int i, int j, const Vec& v);
  // nullptr when the bracket vanishes; requires i < j
  const Vec* find(int i, int j) const;
  Vec bracket_basis(int i, int j) const;
  const std::map<std::pair<int, int>, Vec>& table() const { return table_; }
  std::vector<Entry> entries() const;
  bool operator==(const StructureConstants& o) const {
    return dim_ == o.dim_ && order_ == o.order_ && table_ == o.table_;
  }

 private:
  int dim_, order_;
  std::map<std::pair<int, int>, Vec> table_;
};

class LieAlgebra {
 public:
  LieAlgebra(int dim, int order);
  explicit LieAlgebra(StructureConstants sc,
                      std::optional<std::vector<GradingIndex>> grading = std::nullopt);

  int dim() const { return sc_.dim(); }
  int order() const { return sc_.order(); }
  const StructureConstants& constants() const { return sc_; }
  const std::optional<std::vector<GradingIndex>>& grading() const { return grading_; }
  const std::vector<StructureConstants::Entry>& entries() const { return entries_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_bracket(int i, int j) const { return sc_.bracket_basis(i, j); }
  // column j holds [x, e_j]
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(int i) const;
  bool is_abelian() const { return entries_.empty(); }
  Vec zero() const { return zero_vec(dim(), order()); }
  Vec unit(int i) const { return unit_vec(dim(), i, order()); }
  // "[e1,e3] = (-1+w)*e5", one line per nonzero bracket
  std::string dump() const;

  bool operator==(const LieAlgebra& o) const { return sc_ == o.sc_; }

 private:
  StructureConstants sc_;
  std::optional<std::vector<GradingIndex>> grading_;
  std::vector<StructureConstants::Entry> entries_;
};

LieAlgebra pauli_algebra(int n);
LieAlgebra abelian_algebra(int dim, int order = 3);
// brackets given as (i, j, [e_i, e_j]) with 0-based indices
LieAlgebra algebra_from_brackets(int dim, int order,
                                 const std::vector<std::tuple<int, int, Vec>>& brackets);

struct JacobiDefect {
  int i, j, k;
  Vec defect;
};
std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& alg);

// multiply c_ij^k by eps(i, j); eps is a symmetric dim x dim matrix
LieAlgebra apply_contraction(const LieAlgebra& alg, const Matrix& eps);

// K(i, b) = Tr(ad e_i ad b) for the basis b of restrict_to (all e_j when absent)
Matrix trace_form(const LieAlgebra& alg, const std::optional<Subspace>& restrict_to = std::nullopt);

// Coordinates of vectors with respect to a fixed independent family.
class CoordinateMap {
 public:
  CoordinateMap(const std::vector<Vec>& basis, int ambient, int order);
  // nullopt when v is outside the span
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec combine(const Vec& coords) const;
  int size() const { return static_cast<int>(basis_.size()); }

 private:
  std::vector<Vec> basis_;
  std::vector<int> rows_;
  Matrix inv_;
  int ambient_, order_;
};

// algebra on the given independent vectors; throws if they do not span a subalgebra
LieAlgebra restrict_to(const LieAlgebra& alg, const std::vector<Vec>& basis);
// new basis f_j = sum_i T(i, j) e_i; T must be invertible
LieAlgebra change_basis(const LieAlgebra& alg, const Matrix& T);
// direct sum with the second summand's basis placed after the first
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecontract
