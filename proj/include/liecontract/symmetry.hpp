#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liecontract/lie.hpp"

namespace liecontract {

// 2x2 matrix over Z_n acting on row vectors (i j) -> (i j) A
struct SymmetryElement {
  int a = 1, b = 0, c = 0, d = 1;
  int n = 3;

  int det() const { return ((a * d - b * c) % n + n) % n; }
  SymmetryElement operator*(const SymmetryElement& o) const;
  bool operator==(const SymmetryElement& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d && n == o.n;
  }
  bool operator<(const SymmetryElement& o) const;
  std::string str() const;  // "[[a,b],[c,d]]"
};

// all matrices with det = +-1 (or +1 only), lexicographic in (a,b,c,d)
std::vector<SymmetryElement> enumerate_group(int n, bool det_plus_only);

// Bijection on basis positions of the grading (canonical index order).
class IndexPermutation {
 public:
  IndexPermutation() = default;
  IndexPermutation(int n, std::vector<int> map);
  static IndexPermutation identity(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }
  bool is_identity() const;
  IndexPermutation inverse() const;
  bool operator==(const IndexPermutation& o) const { return n_ == o.n_ && map_ == o.map_; }
  bool operator<(const IndexPermutation& o) const { return map_ < o.map_; }

 private:
  int n_ = 3;
  std::vector<int> map_;
};

IndexPermutation permutation_of(const SymmetryElement& A);
// apply `first`, then `second`; permutation_of(A*B) == compose(permutation_of(A), permutation_of(B))
IndexPermutation compose(const IndexPermutation& first, const IndexPermutation& second);

// unordered tuple of basis positions, stored sorted; repeated entries allowed
using IndexTuple = std::vector<int>;
IndexTuple canonical_tuple(IndexTuple t);
IndexTuple permute(const IndexPermutation& p, const IndexTuple& t);
std::set<IndexTuple> orbit_of_tuple(const IndexTuple& t, const std::vector<SymmetryElement>& group);

// unordered pair of basis positions with first < second
using IndexPair = std::pair<int, int>;
IndexPair make_pair_sorted(int i, int j);
IndexPair permute(const IndexPermutation& p, const IndexPair& k);
std::string pair_str(int n, const IndexPair& k);  // "(01)(10)"

bool is_relevant(int n, int i, int j);
// relevant pairs sorted lexicographically by positions
std::vector<IndexPair> relevant_pairs(int n);

// partition of the relevant pairs other than k; classes sorted by size (desc) then first member
std::vector<std::vector<IndexPair>> pair_classes(int n, const IndexPair& k,
                                                 const std::vector<SymmetryElement>& group);

// (eps^pi)(i, j) = eps(pi(i), pi(j))
Matrix act_on_contraction(const Matrix& eps, const IndexPermutation& p);

}  // namespace liecontract
