#include "testkit.hpp"

#include <algorithm>
#include <cmath>

namespace testkit {

const std::string& data_dir() {
  static const std::string dir = default_data_dir();
  return dir;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog(data_dir());
  return entries;
}

const CatalogContext& context() {
  static const CatalogContext ctx = CatalogContext::build();
  return ctx;
}

const SolutionRecord& solution(const std::string& id) {
  const CatalogEntry* e = find_entry(catalog(), id);
  if (!e) throw Error("no catalog entry " + id);
  return e->record;
}

Matrix concrete(const std::string& id, const Bindings& overrides) {
  const auto& eps = solution(id).matrix;
  Bindings b = default_bindings(eps.params);
  for (const auto& [k, v] : overrides) b[k] = v;
  return instantiate_any(eps, b, context().system);
}

LieAlgebra contracted(const std::string& id, const Bindings& overrides) {
  return apply_contraction(context().pauli, concrete(id, overrides));
}

int idx(int r, int s, int n) { return grading_position(n, {r, s}); }

IndexPair pair(int r1, int s1, int r2, int s2, int n) {
  return make_pair_sorted(idx(r1, s1, n), idx(r2, s2, n));
}

Matrix ones_except(const std::vector<std::pair<IndexPair, long>>& changes) {
  Matrix x = instantiate(all_ones_matrix(3), {});
  for (const auto& [p, v] : changes) {
    x(p.first, p.second) = CycloNumber(3, v);
    x(p.second, p.first) = CycloNumber(3, v);
  }
  return x;
}

std::complex<double> embed(const CycloNumber& x) {
  const double pi = std::acos(-1.0);
  std::complex<double> w = std::polar(1.0, 2 * pi / x.order()), acc = 0, p = 1;
  for (int k = 0; k < x.degree(); ++k, p *= w) acc += x.coeff(k).get_d() * p;
  return acc;
}

Rational Rng::rational(long range) {
  Rational q(integer(-range, range), integer(1, range));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(long range) {
  Rational q;
  do q = rational(range);
  while (q == 0);
  return q;
}

CycloNumber Rng::cyclo(int order, long range) {
  std::vector<Rational> c;
  for (int k = 0; k < order - 1; ++k) c.push_back(Rational(integer(-range, range)));
  return CycloNumber(order, c);
}

CycloNumber Rng::nonzero_cyclo(int order, long range) {
  CycloNumber x(order);
  do x = cyclo(order, range);
  while (x.is_zero());
  return x;
}

Matrix Rng::invertible(int dim, int order, long range) {
  for (;;) {
    Matrix t(dim, dim, order);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) t(i, j) = CycloNumber(order, integer(-range, range));
    if (!determinant(t).is_zero()) return t;
  }
}

Matrix Rng::structured_invertible(int dim, int order, int shears) {
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  Matrix t(dim, dim, order);
  for (int i = 0; i < dim; ++i) t(perm[i], i) = nonzero_cyclo(order, 2);
  for (int s = 0; s < shears; ++s) {
    int i = static_cast<int>(integer(0, dim - 1)), j = static_cast<int>(integer(0, dim - 2));
    if (j >= i) ++j;
    CycloNumber f = CycloNumber::root_power(order, integer(0, order - 1)) * CycloNumber(order, integer(1, 2) == 1 ? 1L : -1L);
    for (int r = 0; r < dim; ++r) t(r, j) += f * t(r, i);  // column j += f * column i
  }
  return t;
}

}  // namespace testkit
