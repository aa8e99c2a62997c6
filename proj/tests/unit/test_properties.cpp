#include "doctest.h"
#include "properties.hpp"

using namespace testkit;

namespace {

constexpr uint64_t kSeed = 20240611;
constexpr int kCases = 500;

void check(const PropertyResult& r) {
  INFO(r.name << ": " << r.failures << "/" << r.cases << " failed, first: " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("field axioms over Q(zeta_3) and Q(zeta_5)") { check(prop_field_axioms(kSeed, 2 * kCases)); }
TEST_CASE("permutation_of is a homomorphism on all of H3 x H3") { check(prop_group_homomorphism()); }
TEST_CASE("catalog solutions stay solutions under the symmetry action") { check(prop_action_stability(kSeed, kCases)); }
TEST_CASE("normalized solutions stay solutions and stay equivalent") { check(prop_scaling_stability(kSeed, kCases)); }
TEST_CASE("fingerprints ignore the choice of basis") { check(prop_basis_invariance(kSeed, kCases)); }
TEST_CASE("dim - tau is even") { check(prop_tau_parity(kSeed, kCases)); }
TEST_CASE("inner derivations inject into Der") { check(prop_der_bound(kSeed, kCases)); }
