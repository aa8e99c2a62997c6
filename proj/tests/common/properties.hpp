#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace testkit {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

PropertyResult prop_field_axioms(uint64_t seed, int cases);
PropertyResult prop_group_homomorphism();
PropertyResult prop_action_stability(uint64_t seed, int cases);
PropertyResult prop_scaling_stability(uint64_t seed, int cases);
PropertyResult prop_basis_invariance(uint64_t seed, int cases);
PropertyResult prop_tau_parity(uint64_t seed, int cases);
PropertyResult prop_der_bound(uint64_t seed, int cases);

std::vector<PropertyResult> all_properties(uint64_t seed, int cases);

}  // namespace testkit
