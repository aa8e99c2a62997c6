#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liecontract/lattice.hpp"
#include "liecontract/symmetry.hpp"

namespace liecontract {

using Bindings = std::map<char, CycloNumber>;

// generic default values a=2, b=3, c=5, ... (distinct small primes)
Bindings default_bindings(const std::set<char>& params, int order = 3);
// "a=2/3" style; the value may be any CycloNumber text
std::pair<char, CycloNumber> parse_binding(std::string_view text, int order = 3);

// sign * coeff * product of parameter letters; coeff 0 is the zero entry
struct SymbolicMonomial {
  int sign = 1;
  Integer coeff = 0;
  std::string params;  // sorted letters, repeated for powers

  static SymbolicMonomial parse(std::string_view text);
  static SymbolicMonomial one() { return {1, 1, ""}; }
  bool is_zero() const { return coeff == 0; }
  std::string str() const;
  CycloNumber evaluate(const Bindings& b, int order) const;
  bool operator==(const SymbolicMonomial& o) const;
  bool operator!=(const SymbolicMonomial& o) const { return !(*this == o); }
};

struct ContractionMatrix {
  int n = 3;
  std::vector<std::vector<SymbolicMonomial>> entries;
  std::set<char> params;
  std::optional<std::string> side_conditions;

  int dim() const { return static_cast<int>(entries.size()); }
  const SymbolicMonomial& at(const IndexPair& p) const { return entries[p.first][p.second]; }
  // number of relevant positions holding zero
  int zero_count() const;
  std::string str() const;
};

// 8 rows of 8 entries ("." | ["-"][integer]{a-f}); checks symmetry and zeros off the
// relevant positions. When `declared` is given every letter used must be declared.
ContractionMatrix parse_matrix(std::string_view body, int n = 3,
                               const std::optional<std::set<char>>& declared = std::nullopt);

// entries with only the given relevant pairs set to 1
ContractionMatrix ones_matrix(int n, const std::vector<IndexPair>& pairs);
ContractionMatrix all_ones_matrix(int n);

Matrix instantiate(const ContractionMatrix& eps, const Bindings& b);

struct ContractionEquation {
  struct Term {
    CycloNumber coeff;
    IndexPair p1, p2;
  };
  std::vector<Term> terms;
  IndexTuple source_triple;
  int orbit = 0;

  CycloNumber evaluate(const Matrix& x) const;
  std::string str(int n) const;
};

// Jacobi-derived quadratic system. Equations are grouped by the SL(2, Z_n) orbit of the
// source triple; orbits are numbered by their smallest triple.
std::vector<ContractionEquation> generate_system(int n);

struct SolutionCheck {
  bool ok = true;
  std::optional<size_t> violated;  // index into the system
};
SolutionCheck check_solution(const Matrix& x, const std::vector<ContractionEquation>& system);

// Zero parameters are allowed here only; the result is re-checked against the system.
Matrix instantiate_boundary(const ContractionMatrix& eps, const Bindings& b,
                            const std::vector<ContractionEquation>& system);

struct IdentityRelation {
  IntVec exponent;  // over relevant_pairs(3); first nonzero entry positive
  int order = 0;
  int orbit = 0;

  bool holds(const Matrix& x) const;
  std::string str() const;
};

// Orbits of the five representative second and third order identities.
std::vector<IdentityRelation> generate_identities();

struct ExponentLattice {
  int n = 3;
  std::vector<IndexPair> pairs;
  IntMat B;            // row per relevant pair
  IntMat left_kernel;  // Z-basis of {u : u B = 0}
};
ExponentLattice build_exponent_lattice(int n = 3);

struct NormalizationCertificate {
  bool ok = false;
  IntVec violated;                // kernel vector over all relevant pairs when !ok
  std::optional<Vec> scalings;    // a_k with a_i a_j / a_{i+j} x_p = y_p, when integral
  std::vector<IntVec> relations;  // kernel vectors that were checked
};

// Decides whether some normalization maps x onto y (exact kernel criterion).
NormalizationCertificate normalization_between(const Matrix& x, const Matrix& y,
                                               const ExponentLattice& lattice);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<SymmetryElement> element;
  std::optional<IndexPermutation> permutation;
  NormalizationCertificate certificate;
};

// Tries every element of `group`; both inputs must solve `system`.
EquivalenceResult equivalent(const Matrix& x, const Matrix& y,
                             const std::vector<ContractionEquation>& system,
                             const ExponentLattice& lattice,
                             const std::vector<SymmetryElement>& group);
// same search without the solution check
EquivalenceResult equivalent_unchecked(const Matrix& x, const Matrix& y,
                                       const ExponentLattice& lattice,
                                       const std::vector<SymmetryElement>& group);

// alpha(i, j) = a_i a_j / a_{i+j} on relevant positions, zero elsewhere
Matrix normalization_matrix(int n, const Vec& a);
// entrywise product
Matrix hadamard(const Matrix& x, const Matrix& y);

enum class Continuity { Continuous, Discrete, Unknown };
std::string continuity_str(Continuity c);

struct ContinuityVerdict {
  Continuity kind = Continuity::Unknown;
  IntVec weights;                        // n_1..n_8 for Continuous
  std::optional<size_t> identity;        // violated identity for Discrete
  std::optional<IntVec> kernel_witness;  // violated support relation for Discrete
  std::string detail;
};

ContinuityVerdict classify_continuity(const Matrix& x,
                                      const std::vector<ContractionEquation>& system,
                                      const std::vector<IdentityRelation>& identities,
                                      const ExponentLattice& lattice);

// rational feasibility of {B_S n = 0, B_Z n >= 1}, scaled to an integer point
std::optional<IntVec> inonu_wigner_weights(const std::vector<bool>& support,
                                           const ExponentLattice& lattice);

// product constraints prod_{k in P} eps_{pi(k)} = 0 over the group, deduplicated
using ProductConstraint = std::vector<IndexPair>;
std::vector<ProductConstraint> build_nonequivalence_system(const std::vector<IndexPair>& P,
                                                           const std::vector<SymmetryElement>& group);
bool satisfies(const Matrix& x, const std::vector<ProductConstraint>& constraints);

struct RedundancyReport {
  int orbit_size = 0;
  int rank = 0;
  int redundant = 0;      // orbit_size - rank
  int cosets = 0;         // cosets of {1, X, X^2}
  int dependent_cosets = 0;
  int other_orbit_rank = 0;
};
// Linear dependencies inside the orbit of the triple (01)(02)(10), n = 3.
RedundancyReport coset_redundancy(const std::vector<ContractionEquation>& system);

// Solution data file: blocks of header lines followed by the matrix rows.
struct SolutionRecord {
  std::string id;
  std::optional<int> nu;
  std::string tag;  // C, D, mixed or empty
  std::vector<std::pair<std::string, std::string>> conditions;  // binding pattern -> tag
  std::optional<int> step;
  std::vector<std::string> notes;
  ContractionMatrix matrix;
  int line = 0;
};
std::vector<SolutionRecord> parse_solution_file(std::string_view text, const std::string& source,
                                                int n = 3);
// "a=1,b=1" or "*"; true when every listed parameter equals the listed value
bool pattern_matches(const std::string& pattern, const Bindings& b, int order = 3);
Bindings pattern_bindings(const std::string& pattern, int order = 3);

}  // namespace liecontract
