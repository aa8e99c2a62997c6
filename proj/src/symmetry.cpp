#include "liecontract/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

SymmetryElement SymmetryElement::operator*(const SymmetryElement& o) const {
  if (n != o.n) throw OrderMismatch("symmetry elements over different moduli");
  return {mod(a * o.a + b * o.c, n), mod(a * o.b + b * o.d, n), mod(c * o.a + d * o.c, n),
          mod(c * o.b + d * o.d, n), n};
}

bool SymmetryElement::operator<(const SymmetryElement& o) const {
  return std::tie(n, a, b, c, d) < std::tie(o.n, o.a, o.b, o.c, o.d);
}

std::string SymmetryElement::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

std::vector<SymmetryElement> enumerate_group(int n, bool det_plus_only) {
  if (n < 2 || !is_prime(n)) throw UnsupportedOrder("unsupported modulus " + std::to_string(n));
  std::vector<SymmetryElement> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          SymmetryElement g{a, b, c, d, n};
          int det = g.det();
          // over Z_2, +1 and -1 coincide
          if (det == 1 || (!det_plus_only && det == n - 1)) out.push_back(g);
        }
  return out;
}

IndexPermutation::IndexPermutation(int n, std::vector<int> map) : n_(n), map_(std::move(map)) {
  std::vector<int> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]++)
      throw Error("index map is not a bijection");
  }
}

IndexPermutation IndexPermutation::identity(int n) {
  std::vector<int> m(n * n - 1);
  std::iota(m.begin(), m.end(), 0);
  return IndexPermutation(n, m);
}

bool IndexPermutation::is_identity() const {
  for (size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

IndexPermutation IndexPermutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
  return IndexPermutation(n_, inv);
}

IndexPermutation permutation_of(const SymmetryElement& A) {
  const int n = A.n;
  auto idx = grading_indices(n);
  std::vector<int> m(idx.size());
  for (size_t p = 0; p < idx.size(); ++p) {
    auto [i, j] = idx[p];
    m[p] = grading_position(n, {mod(i * A.a + j * A.c, n), mod(i * A.b + j * A.d, n)});
  }
  return IndexPermutation(n, m);
}

IndexPermutation compose(const IndexPermutation& first, const IndexPermutation& second) {
  if (first.size() != second.size()) throw ShapeMismatch("permutations of different sizes");
  std::vector<int> m(first.size());
  for (int i = 0; i < first.size(); ++i) m[i] = second(first(i));
  return IndexPermutation(first.n(), m);
}

IndexTuple canonical_tuple(IndexTuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

IndexTuple permute(const IndexPermutation& p, const IndexTuple& t) {
  IndexTuple out;
  out.reserve(t.size());
  for (int i : t) out.push_back(p(i));
  return canonical_tuple(std::move(out));
}

std::set<IndexTuple> orbit_of_tuple(const IndexTuple& t, const std::vector<SymmetryElement>& group) {
  if (t.empty()) throw Error("orbit of an empty tuple");
  std::set<IndexTuple> out;
  for (const auto& g : group) out.insert(permute(permutation_of(g), t));
  return out;
}

IndexPair make_pair_sorted(int i, int j) { return i < j ? IndexPair{i, j} : IndexPair{j, i}; }

IndexPair permute(const IndexPermutation& p, const IndexPair& k) {
  return make_pair_sorted(p(k.first), p(k.second));
}

std::string pair_str(int n, const IndexPair& k) {
  auto idx = grading_indices(n);
  return grading_str(idx[k.first]) + grading_str(idx[k.second]);
}

bool is_relevant(int n, int i, int j) {
  auto idx = grading_indices(n);
  auto [a, b] = idx[i];
  auto [c, d] = idx[j];
  return mod(b * c - a * d, n) != 0;
}

std::vector<IndexPair> relevant_pairs(int n) {
  const int m = n * n - 1;
  std::vector<IndexPair> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (is_relevant(n, i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::vector<IndexPair>> pair_classes(int n, const IndexPair& k,
                                                 const std::vector<SymmetryElement>& group) {
  auto pairs = relevant_pairs(n);
  if (std::find(pairs.begin(), pairs.end(), k) == pairs.end())
    throw Error("pair " + pair_str(n, k) + " is not relevant");
  std::map<IndexPair, int> pos;
  std::vector<IndexPair> rest;
  for (const auto& p : pairs)
    if (p != k) {
      pos[p] = static_cast<int>(rest.size());
      rest.push_back(p);
    }
  std::vector<int> parent(rest.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group) {
    auto perm = permutation_of(g);
    IndexPair pk = permute(perm, k);
    for (const auto& i : rest) {
      IndexPair pi = permute(perm, i);
      // pi maps the unordered pair {i, k} onto {j, k}
      IndexPair j;
      if (pk == k)
        j = pi;
      else if (pi == k)
        j = pk;
      else
        continue;
      if (j == k) continue;
      int x = find(pos[i]), y = find(pos[j]);
      if (x != y) parent[x] = y;
    }
  }
  std::map<int, std::vector<IndexPair>> groups;
  for (size_t i = 0; i < rest.size(); ++i) groups[find(static_cast<int>(i))].push_back(rest[i]);
  std::vector<std::vector<IndexPair>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });
  return out;
}

Matrix act_on_contraction(const Matrix& eps, const IndexPermutation& p) {
  if (eps.rows() != p.size() || eps.cols() != p.size())
    throw ShapeMismatch("contraction matrix does not match the permutation size");
  Matrix out(eps.rows(), eps.cols(), eps.order());
  for (int i = 0; i < eps.rows(); ++i)
    for (int j = 0; j < eps.cols(); ++j) out(i, j) = eps(p(i), p(j));
  return out;
}

}  // namespace liecontract
