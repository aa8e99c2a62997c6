#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecontract/contraction.hpp"
#include "liecontract/identify.hpp"

namespace liecontract {

// LIECONTRACT_DATA if set, else the directory configured at build time
std::string default_data_dir();
std::string read_file(const std::string& path);

enum class Source { AppendixA, Section6 };
std::string source_str(Source s);

struct CatalogEntry {
  SolutionRecord record;
  Source source = Source::AppendixA;
  const std::string& id() const { return record.id; }
};

// appendix_a.txt then section6.txt from <dir>/solutions
std::vector<CatalogEntry> load_catalog(const std::string& dir);
std::map<int, int> nu_histogram(const std::vector<CatalogEntry>& entries);
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& id);

// Shared, read-only inputs for verification.
struct CatalogContext {
  std::vector<ContractionEquation> system;
  std::vector<IdentityRelation> identities;
  ExponentLattice lattice;
  std::vector<SymmetryElement> group;  // det +-1, 48 elements
  LieAlgebra pauli;

  static CatalogContext build();
};

// non-equivalence systems accumulated up to a construction step (empty for step 0)
std::vector<ProductConstraint> step_constraints(int step, const std::vector<SymmetryElement>& group);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct EntryReport {
  std::string id;
  std::string kind;  // appendixA | section6 | expected
  std::vector<CheckResult> checks;
  std::optional<Fingerprint> fp;
  double seconds = 0;
  bool ok() const;
};

// seeded nonzero rational values for every parameter
Bindings random_bindings(const std::set<char>& params, uint64_t seed, int order = 3);
// defaults overridden by the pattern; zero values allowed
Bindings bindings_for_pattern(const std::set<char>& params, const std::string& pattern, int order = 3);
Matrix instantiate_any(const ContractionMatrix& eps, const Bindings& b,
                       const std::vector<ContractionEquation>& system);

EntryReport verify_entry(const CatalogEntry& entry, const CatalogContext& ctx, uint64_t seed);

struct InequivalenceResult {
  size_t pairs = 0;
  std::vector<std::pair<std::string, std::string>> equivalent_pairs;
};
// equivalent_unchecked over all same-nu pairs of appendixA entries at default bindings
InequivalenceResult pairwise_inequivalence(const std::vector<CatalogEntry>& entries,
                                           const CatalogContext& ctx, int jobs = 1);

struct ExpectedRecord {
  enum class Kind { Algebra, Derivations, Decomposition, Isomorphic };
  Kind kind = Kind::Algebra;
  std::string algebra;  // "L'_21,9"
  std::string at;       // binding pattern; empty for generic values
  std::set<char> params;
  std::vector<int> ds, lcs, ucs, tower;
  std::optional<int> tau, der;
  std::vector<std::string> casimirs;
  std::string tag, nilradical, brackets;
  std::vector<std::string> members;  // decomposition parts or isomorphic algebras
  int line = 0;

  std::string label() const;
};

std::vector<ExpectedRecord> load_expected(const std::string& path);

struct AlgebraRef {
  std::string id;       // "L'_21,9"
  bool core = false;    // primed: central abelian part split off
  std::string solution; // "eps_21_9"
  std::string pattern;  // "a=0" from "L_15,6(a=0)"
};
AlgebraRef parse_algebra_ref(const std::string& text);

// field-by-field comparison; empty result means a match
std::vector<std::string> match_fingerprint(const Fingerprint& fp, const ExpectedRecord& rec);

// contracted algebra named by ref (split_central core for primed ids)
LieAlgebra build_algebra(const AlgebraRef& ref, const std::set<char>& extra_params, const std::string& at,
                         const std::vector<CatalogEntry>& entries, const CatalogContext& ctx);
// algebra given by a "[i,j]=poly;..." bracket list, 1-based indices
LieAlgebra algebra_from_text(const std::string& brackets, int dim, const Bindings& b, int order = 3);

EntryReport verify_expected(const ExpectedRecord& rec, const std::vector<ExpectedRecord>& all,
                            const std::vector<CatalogEntry>& entries, const CatalogContext& ctx,
                            uint64_t seed);

// "<hex>  <relative path>" lines in <dir>/MANIFEST.sha256; returns the problems found
std::string sha256_file(const std::string& path);
std::vector<std::string> verify_manifest(const std::string& dir);

struct CatalogSummary {
  std::vector<EntryReport> reports;  // sorted by id within each kind
  std::map<int, int> histogram;
  int appendix_total = 0, appendix_pass = 0;
  int section6_total = 0, section6_pass = 0;
  int expected_total = 0, expected_pass = 0;
  std::vector<std::string> manifest_problems;
  bool ok() const;
};

struct CatalogOptions {
  uint64_t seed = 1;
  int jobs = 1;
  bool expected = true;  // include the identification records
  bool timing = false;   // timings make reports non-reproducible
};
CatalogSummary verify_catalog(const std::string& dir, const CatalogOptions& opt);
std::string render_report(const CatalogSummary& s, const CatalogOptions& opt);

}  // namespace liecontract
