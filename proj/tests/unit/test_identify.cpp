#include "doctest.h"
#include "testkit.hpp"

using namespace liecontract;

namespace {

LieAlgebra from_text(const std::string& text, int dim) { return algebra_from_text(text, dim, {}); }
LieAlgebra heisenberg() { return from_text("[2,3]=e1", 3); }
LieAlgebra l22_1() { return from_text("[1,4]=e2;[3,4]=e1", 4); }
LieAlgebra l21_9() { return from_text("[1,4]=e2;[2,4]=e3;[3,4]=e1", 4); }

bool nilpotent_matrix(Matrix m) {
  Matrix p = m;
  for (int k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

}  // namespace

TEST_CASE("center and derived algebra") {
  LieAlgebra sl3 = pauli_algebra(3);
  CHECK(center(sl3).dim() == 0);
  CHECK(derived_algebra(sl3).dim() == 8);
  LieAlgebra h = heisenberg();
  Subspace e1 = Subspace::span(3, 3, {unit_vec(3, 0, 3)});
  CHECK(center(h) == e1);
  CHECK(derived_algebra(h) == e1);
  CHECK(center(abelian_algebra(5)).dim() == 5);
  CHECK(derived_algebra(abelian_algebra(5)).dim() == 0);
}

TEST_CASE("central splitting") {
  auto a = split_central(abelian_algebra(8));
  CHECK(a.core.dim() == 0);
  CHECK(a.abelian_dim == 8);
  auto l = split_central(testkit::contracted("eps_21_16"));
  CHECK(l.abelian_dim == 2);
  CHECK(l.core.dim() == 6);
  Fingerprint fp = fingerprint(l.core);
  CHECK(fp.derived_dims == std::vector<int>{6, 3, 0});
  CHECK(fp.lower_central_dims == std::vector<int>{6, 3, 0});
  CHECK(fp.upper_central_dims == std::vector<int>{3, 6});
  CHECK(fp.dim_der == 18);
  CHECK(fp.nilpotent);
  auto s = split_central(pauli_algebra(3));
  CHECK(s.abelian_dim == 0);
  CHECK(s.core == pauli_algebra(3));
  Subspace z = center(l.core);
  CHECK(derived_algebra(l.core).contains(z));
}

TEST_CASE("decomposition") {
  auto d = decompose(split_central(testkit::contracted("eps_18_32")).core);
  REQUIRE(d.parts.size() == 2);
  CHECK_FALSE(d.undetermined);
  Fingerprint want = fingerprint(l21_9());
  for (const auto& p : d.parts) {
    CHECK(p.dim() == 4);
    CHECK(fingerprint(p) == want);
  }
  auto h = decompose(heisenberg());
  CHECK(h.parts.size() == 1);
  CHECK(decompose(abelian_algebra(2)).parts.size() == 2);
}

TEST_CASE("decomposition parts are commuting ideals") {
  for (const char* id : {"eps_18_32", "eps_21_4", "eps_22_2", "eps_20_5", "eps_9_1"}) {
    LieAlgebra L = split_central(testkit::contracted(id)).core;
    auto d = decompose(L);
    int total = 0;
    for (size_t a = 0; a < d.bases.size(); ++a) {
      total += static_cast<int>(d.bases[a].size());
      Subspace sa = Subspace::span(L.dim(), 3, d.bases[a]);
      CHECK(is_ideal(L, sa));
      for (size_t b = a + 1; b < d.bases.size(); ++b)
        for (const auto& x : d.bases[a])
          for (const auto& y : d.bases[b]) CHECK(is_zero(L.bracket(x, y)));
    }
    CHECK(total == L.dim());
  }
}

TEST_CASE("radical and semisimplicity") {
  CHECK(radical(pauli_algebra(3)).dim() == 0);
  CHECK(is_semisimple(pauli_algebra(3)));
  CHECK(radical(heisenberg()).dim() == 3);
  CHECK(radical(l21_9()).dim() == 4);
  CHECK_FALSE(is_semisimple(l21_9()));
}

TEST_CASE("nilradical") {
  auto n = nilradical(l21_9());
  CHECK(n.verified);
  CHECK(n.space.dim() == 3);
  CHECK(restrict_to(l21_9(), n.space.basis()).is_abelian());
  CHECK(nilradical(heisenberg()).space.dim() == 3);
  LieAlgebra l9 = testkit::contracted("eps_9_1");
  auto m = nilradical(l9);
  CHECK(m.verified);
  REQUIRE(m.space.dim() == 6);
  LieAlgebra core = split_central(testkit::contracted("eps_21_16")).core;
  CHECK(fingerprint(restrict_to(l9, m.space.basis())) == fingerprint(core));
}

TEST_CASE("nilradical elements have nilpotent adjoints") {
  for (const auto& e : testkit::catalog()) {
    if (e.source != Source::AppendixA || e.record.nu.value_or(0) % 3 != 0) continue;
    LieAlgebra L = testkit::contracted(e.id());
    auto n = nilradical(L);
    CHECK(n.verified);
    for (const auto& x : n.space.basis()) CHECK(nilpotent_matrix(L.ad(x)));
  }
}

TEST_CASE("series") {
  LieAlgebra l = l22_1();
  CHECK(derived_series(l).dims == std::vector<int>{4, 2, 0});
  CHECK(lower_central_series(l).dims == std::vector<int>{4, 2, 1, 0});
  CHECK(upper_central_series(l).dims == std::vector<int>{1, 2, 4});
  LieAlgebra a = abelian_algebra(5);
  CHECK(derived_series(a).dims == std::vector<int>{5, 0});
  CHECK(lower_central_series(a).dims == std::vector<int>{5, 0});
  CHECK(upper_central_series(a).dims == std::vector<int>{5});
  LieAlgebra s = pauli_algebra(3);
  CHECK(derived_series(s).dims == std::vector<int>{8, 8});
  CHECK(lower_central_series(s).dims == std::vector<int>{8, 8});
  CHECK(upper_central_series(s).dims == std::vector<int>{0});
}

TEST_CASE("series members are ideals and nest") {
  for (const char* id : {"eps_9_1", "eps_12_1", "eps_15_4", "eps_19_27"}) {
    LieAlgebra L = testkit::contracted(id);
    auto ds = derived_series(L), lcs = lower_central_series(L), ucs = upper_central_series(L);
    for (auto* s : {&ds, &lcs, &ucs})
      for (const auto& sub : s->chain) CHECK(is_ideal(L, sub));
    CHECK(ds.dims.front() == L.dim());
    for (size_t k = 0; k + 1 < ds.dims.size() && k + 1 < lcs.dims.size(); ++k) {
      CHECK(ds.dims[k + 1] <= lcs.dims[k + 1]);
      CHECK(lcs.dims[k + 1] <= lcs.dims[k]);
    }
  }
}

TEST_CASE("derivations") {
  auto d = derivation_algebra(heisenberg());
  CHECK(d.basis.size() == 6);
  CHECK(jacobi_defect(d.as_lie).empty());
  // each basis matrix satisfies D[x, y] = [Dx, y] + [x, Dy]
  LieAlgebra h = heisenberg();
  for (const auto& D : d.basis)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(D * h.basis_bracket(i, j) == add(h.bracket(D * h.unit(i), h.unit(j)), h.bracket(h.unit(i), D * h.unit(j))));
  CHECK(derivation_algebra(abelian_algebra(8)).basis.size() == 64);
  CHECK(derivation_algebra(pauli_algebra(3)).basis.size() == 8);
}

TEST_CASE("formal invariants") {
  CHECK(formal_invariant_count(abelian_algebra(6)).tau == 6);
  CHECK(formal_invariant_count(abelian_algebra(6)).generic_rank == 0);
  CHECK(formal_invariant_count(heisenberg()).tau == 1);
  CHECK(formal_invariant_count(l21_9()).tau == 2);
  auto s = formal_invariant_count(pauli_algebra(3));
  CHECK(s.generic_rank == 6);
  CHECK(s.tau == 2);
}

TEST_CASE("casimir verification") {
  CHECK(verify_casimir(heisenberg(), Polynomial::parse("x1", 3)).ok);
  CHECK(verify_casimir(l22_1(), Polynomial::parse("x1^2-2x2x3", 4)).ok);
  CHECK(verify_casimir(l22_1(), Polynomial::parse("x2", 4)).ok);
  auto bad = verify_casimir(heisenberg(), Polynomial::parse("x2", 3));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing == 2);
}

TEST_CASE("isomorphism verification") {
  LieAlgebra a = testkit::contracted("eps_15_6", {{'a', CycloNumber(3, 0L)}});
  LieAlgebra b = testkit::contracted("eps_16_6");
  CHECK(verify_isomorphism(Matrix::identity(8, 3), a, b));
  CHECK_FALSE(verify_isomorphism(Matrix::identity(8, 3), testkit::contracted("eps_17_9"), testkit::contracted("eps_17_12")));
  CHECK_FALSE(verify_isomorphism(Matrix(8, 8, 3), b, b));
}

TEST_CASE("fingerprints") {
  Fingerprint f = fingerprint(l21_9());
  CHECK(f.dim == 4);
  CHECK(f.derived_dims == std::vector<int>{4, 3, 0});
  CHECK(f.lower_central_dims == std::vector<int>{4, 3});
  CHECK(f.upper_central_dims == std::vector<int>{0});
  CHECK(f.tau == 2);
  CHECK(f.dim_der == 6);
  CHECK(f.solvable);
  CHECK_FALSE(f.nilpotent);
  Fingerprint a = fingerprint(abelian_algebra(8));
  CHECK(a.dim_der == 64);
  CHECK(a.tau == 8);
  CHECK(a.center_dim == 8);
  CHECK(a.str() == "dim=8 ds=8,0 lcs=8,0 ucs=8 der=64 tau=8 center=8 solvable=yes nilpotent=yes semisimple=no tower=64");
  CHECK(fingerprint(pauli_algebra(3)).semisimple);
}

TEST_CASE("dense changes of basis keep the fingerprint") {
  testkit::Rng rng(99);
  for (const char* id : {"eps_21_9", "eps_20_16", "eps_23_1"}) {
    LieAlgebra L = split_central(testkit::contracted(id)).core;
    LieAlgebra M = change_basis(L, rng.invertible(L.dim(), 3, 2));
    CHECK(fingerprint(L) == fingerprint(M));
  }
}
