#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecontract/lie.hpp"
#include "liecontract/polynomial.hpp"

namespace liecontract {

Subspace center(const LieAlgebra& alg);
Subspace derived_algebra(const LieAlgebra& alg);
// span of [a, b] over a in A, b in B
Subspace bracket_space(const LieAlgebra& alg, const Subspace& A, const Subspace& B);
bool is_ideal(const LieAlgebra& alg, const Subspace& S);

struct CentralSplit {
  LieAlgebra core;
  int abelian_dim = 0;
  std::vector<Vec> core_basis;  // in the coordinates of the input
};
CentralSplit split_central(const LieAlgebra& alg);

struct Decomposition {
  std::vector<LieAlgebra> parts;
  std::vector<std::vector<Vec>> bases;  // basis of each part in the input coordinates
  bool undetermined = false;
};
Decomposition decompose(const LieAlgebra& alg);

Subspace radical(const LieAlgebra& alg);
bool is_semisimple(const LieAlgebra& alg);

struct NilradicalResult {
  Subspace space;
  bool verified = true;  // false raises the "unverified-maximality" flag
};
NilradicalResult nilradical(const LieAlgebra& alg);

struct Series {
  std::vector<int> dims;       // trimmed profile
  std::vector<Subspace> chain;  // one subspace per listed dimension
};
Series derived_series(const LieAlgebra& alg);
Series lower_central_series(const LieAlgebra& alg);
Series upper_central_series(const LieAlgebra& alg);

struct DerivationAlgebra {
  std::vector<Matrix> basis;
  LieAlgebra as_lie;
};
DerivationAlgebra derivation_algebra(const LieAlgebra& alg);
// dim Der, dim Der(Der), ... until a dimension repeats or depth_cap entries are listed
std::vector<int> der_tower(const LieAlgebra& alg, int depth_cap = 4);

struct FormalInvariants {
  int tau = 0;
  int generic_rank = 0;
};
FormalInvariants formal_invariant_count(const LieAlgebra& alg, uint64_t seed = 1);

struct CasimirCheck {
  bool ok = true;
  std::optional<int> failing;  // 0-based generator index
};
CasimirCheck verify_casimir(const LieAlgebra& alg, const Polynomial& F);

// A maps L1 onto L2: [A e_i, A e_j]_2 = A [e_i, e_j]_1 and A invertible
bool verify_isomorphism(const Matrix& A, const LieAlgebra& L1, const LieAlgebra& L2);

struct Fingerprint {
  int dim = 0;
  std::vector<int> derived_dims, lower_central_dims, upper_central_dims;
  int dim_der = 0;
  int tau = 0;
  int center_dim = 0;
  bool solvable = false, nilpotent = false, semisimple = false;
  std::vector<int> der_tower;

  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string str() const;
};

struct FingerprintOptions {
  int tower_depth = 1;
  uint64_t seed = 1;
};
Fingerprint fingerprint(const LieAlgebra& alg, const FingerprintOptions& opt = {});

std::string dims_str(const std::vector<int>& dims);  // "8,6,3,0"

}  // namespace liecontract
