#include <complex>

#include "doctest.h"
#include "testkit.hpp"

using namespace liecontract;
using testkit::embed;
using testkit::idx;

namespace {

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat cmul(const CMat& a, const CMat& b) {
  size_t n = a.size();
  CMat c(n, std::vector<std::complex<double>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CMat cpow(const CMat& a, int e) {
  CMat r(a.size(), std::vector<std::complex<double>>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i][i] = 1;
  while (e-- > 0) r = cmul(r, a);
  return r;
}

double cdist(const CMat& a, const CMat& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) d += std::abs(a[i][j] - b[i][j]);
  return d;
}

// X_rs = Q^r P^s with Q = diag(w^k) and P the shift with P Q = w Q P
std::vector<CMat> pauli_matrices(int n) {
  const double pi = std::acos(-1.0);
  std::complex<double> w = std::polar(1.0, 2 * pi / n);
  CMat Q(n, std::vector<std::complex<double>>(n)), P = Q, P2 = Q;
  for (int k = 0; k < n; ++k) {
    Q[k][k] = std::pow(w, k);
    P[k][(k + 1) % n] = 1;
    P2[(k + 1) % n][k] = 1;
  }
  CMat lhs = cmul(P, Q), rhs = cmul(Q, P);
  for (auto& row : rhs)
    for (auto& v : row) v *= w;
  if (cdist(lhs, rhs) > 1e-9) P = P2;
  std::vector<CMat> out;
  for (auto g : grading_indices(n)) out.push_back(cmul(cpow(Q, g.r), cpow(P, g.s)));
  return out;
}

}  // namespace

TEST_CASE("pauli structure constants agree with matrix commutators") {
  for (int n : {3, 5}) {
    LieAlgebra L = pauli_algebra(n);
    CHECK(L.dim() == n * n - 1);
    auto X = pauli_matrices(n);
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j) {
        CMat c = cmul(X[i], X[j]), d = cmul(X[j], X[i]);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) c[a][b] -= d[a][b];
        CMat e(n, std::vector<std::complex<double>>(n));
        Vec v = L.basis_bracket(i, j);
        for (int k = 0; k < L.dim(); ++k)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) e[a][b] += embed(v[k]) * X[k][a][b];
        CHECK(cdist(c, e) < 1e-9);
      }
  }
}

TEST_CASE("pauli examples") {
  LieAlgebra L = pauli_algebra(3);
  CycloNumber w = CycloNumber::root_power(3, 1), one(3, 1L);
  Vec v = L.basis_bracket(idx(0, 1), idx(1, 0));
  CHECK(v[idx(1, 1)] == w - one);
  CHECK(is_zero(L.basis_bracket(idx(0, 1), idx(0, 2))));
  CHECK(is_zero(L.bracket(L.unit(0), L.unit(0))));
  CHECK(L.bracket(L.unit(0), L.unit(2)) == scale(w - one, L.unit(4)));
  LieAlgebra L5 = pauli_algebra(5);
  CHECK(L5.basis_bracket(idx(0, 1, 5), idx(1, 0, 5))[idx(1, 1, 5)] ==
        CycloNumber::root_power(5, 1) - CycloNumber(5, 1L));
  CHECK_THROWS(pauli_algebra(4));
}

TEST_CASE("grading and relevance") {
  for (int n : {3, 5}) {
    LieAlgebra L = pauli_algebra(n);
    auto g = grading_indices(n);
    for (const auto& e : L.entries()) {
      GradingIndex s{(g[e.i].r + g[e.j].r) % n, (g[e.i].s + g[e.j].s) % n};
      CHECK(g[e.k] == s);
    }
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j)
        if (i != j) CHECK(is_zero(L.basis_bracket(i, j)) == !is_relevant(n, i, j));
  }
}

TEST_CASE("jacobi") {
  CHECK(jacobi_defect(pauli_algebra(3)).empty());
  CHECK(jacobi_defect(pauli_algebra(5)).empty());
  CHECK(jacobi_defect(abelian_algebra(8)).empty());
  Matrix x = testkit::ones_except({{testkit::pair(0, 1, 1, 0), 0}});
  CHECK_FALSE(jacobi_defect(apply_contraction(pauli_algebra(3), x)).empty());
}

TEST_CASE("apply_contraction") {
  LieAlgebra L = pauli_algebra(3);
  CHECK(apply_contraction(L, instantiate(all_ones_matrix(3), {})) == L);
  CHECK(apply_contraction(L, testkit::concrete("eps_24_1")).is_abelian());
  LieAlgebra H = testkit::contracted("eps_23_1");
  REQUIRE(H.entries().size() == 1);
  const auto& e = H.entries().front();
  CHECK(e.i == 0);
  CHECK(e.j == 2);
  CHECK(e.k == 4);
  CHECK(e.c == CycloNumber::root_power(3, 1) - CycloNumber(3, 1L));
  CHECK_THROWS_AS(apply_contraction(L, Matrix(3, 3, 3)), ShapeMismatch);
}

TEST_CASE("killing form") {
  LieAlgebra L = pauli_algebra(3);
  Matrix K = trace_form(L);
  CHECK(K(idx(0, 1), idx(0, 2)) == CycloNumber(3, 18L));
  CHECK(K(idx(0, 1), idx(0, 1)).is_zero());
  CHECK_FALSE(determinant(K).is_zero());
  CHECK(trace_form(abelian_algebra(4)).is_zero());
  // K(x, y) = 2n tr(xy) on sl(n)
  auto X = pauli_matrices(3);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      std::complex<double> tr = 0;
      CMat p = cmul(X[i], X[j]);
      for (int a = 0; a < 3; ++a) tr += p[a][a];
      CHECK(std::abs(embed(K(i, j)) - 6.0 * tr) < 1e-9);
    }
}

TEST_CASE("change of basis and direct sums") {
  LieAlgebra H = testkit::contracted("eps_23_1");
  testkit::Rng rng(2);
  Matrix T = rng.invertible(8, 3, 2);
  LieAlgebra M = change_basis(H, T);
  CHECK(jacobi_defect(M).empty());
  CHECK(verify_isomorphism(T, M, H));
  LieAlgebra S = direct_sum(H, abelian_algebra(2));
  CHECK(S.dim() == 10);
  CHECK(S.entries().size() == 1);
  CHECK(S.dump() == H.dump());
}
