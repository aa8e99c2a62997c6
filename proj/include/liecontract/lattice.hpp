#pragma once

#include <vector>

#include "liecontract/cyclo.hpp"

namespace liecontract {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;  // row-major, rectangular

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntVec int_vec_mat(const IntVec& v, const IntMat& m);

// Row-style Hermite form: U * A = H with U unimodular; the first `rank` rows of H
// are nonzero, the remaining rows of U span the integer left kernel of A.
struct Hermite {
  IntMat H;
  IntMat U;
  int rank = 0;
};
Hermite hermite(const IntMat& a);

// Smith form: U * A * V = D with U, V unimodular and D diagonal,
// d_0 | d_1 | ... | d_{rank-1} positive.
struct Smith {
  IntMat U;
  IntMat V;
  IntVec diag;
  int rank = 0;
};
Smith smith(const IntMat& a);

// Z-basis of {u : u A = 0}
IntMat left_kernel(const IntMat& a);
// whether v is an integer combination of the rows of basis
bool in_row_lattice(const IntMat& basis, const IntVec& v);
int int_rank(const IntMat& a);

}  // namespace liecontract
