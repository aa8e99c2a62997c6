// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "properties.hpp"
#include "testkit.hpp"

using namespace liecontract;
using namespace testkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit;  // seconds
  std::function<Outcome()> run;
};

std::string join(const std::vector<int>& v) { return dims_str(v); }

// each pair-product of an equation scaled by the coefficient of the first listed product
using Product = std::pair<IndexPair, IndexPair>;
Product product(IndexPair a, IndexPair b) { return a < b ? Product{a, b} : Product{b, a}; }

const ContractionEquation* by_triple(const std::vector<ContractionEquation>& sys, IndexTuple t) {
  t = canonical_tuple(t);
  for (const auto& e : sys)
    if (e.source_triple == t) return &e;
  return nullptr;
}

// true when the equation is a nonzero multiple of sum_k want[k] * products[k]
bool proportional(const ContractionEquation& e, const std::vector<Product>& products, const Vec& want) {
  if (e.terms.size() != products.size()) return false;
  std::optional<CycloNumber> factor;
  for (const auto& t : e.terms) {
    auto it = std::find(products.begin(), products.end(), product(t.p1, t.p2));
    if (it == products.end()) return false;
    CycloNumber f = t.coeff / want[it - products.begin()];
    if (factor && *factor != f) return false;
    factor = f;
  }
  return factor && !factor->is_zero();
}

Outcome system_shape() {
  auto sys = generate_system(3);
  auto sl = enumerate_group(3, true);
  std::map<int, std::set<IndexTuple>> orbits;
  for (const auto& e : sys) orbits[e.orbit].insert(e.source_triple);
  bool ok = sys.size() == 48 && orbits.size() == 2;
  for (const auto& [o, triples] : orbits)
    ok = ok && triples.size() == 24 && orbit_of_tuple(*triples.begin(), sl) == triples;
  const auto* fff = by_triple(sys, {idx(0, 1), idx(0, 2), idx(1, 0)});
  CycloNumber one(3, 1L);
  bool rep = fff && proportional(*fff,
                                 {product(pair(0, 2, 1, 0), pair(0, 1, 1, 2)), product(pair(0, 1, 1, 0), pair(0, 2, 1, 1))},
                                 {one, -one});
  std::ostringstream os;
  os << sys.size() << " equations, " << orbits.size() << " orbits of sizes";
  for (const auto& [o, t] : orbits) os << " " << t.size();
  os << ", (01)(02)(10) representative " << (rep ? "matches" : "differs");
  return {ok && rep, os.str()};
}

Outcome redundancy() {
  auto r = coset_redundancy(generate_system(3));
  std::ostringstream os;
  os << "orbit " << r.orbit_size << ", rank " << r.rank << ", redundant " << r.redundant << ", dependent cosets "
     << r.dependent_cosets << " of " << r.cosets;
  return {r.redundant == 8 && r.dependent_cosets == 8 && r.cosets == 8, os.str()};
}

Outcome identities() {
  auto ids = generate_identities();
  auto lat = build_exponent_lattice(3);
  std::map<int, int> sizes;
  bool kernel = true;
  for (const auto& r : ids) {
    ++sizes[r.orbit];
    kernel = kernel && in_row_lattice(lat.left_kernel, r.exponent) && int_vec_mat(r.exponent, lat.B) == IntVec(8, 0);
  }
  std::vector<int> got;
  for (const auto& [o, s] : sizes) got.push_back(s);
  std::ostringstream os;
  os << ids.size() << " identities, orbit sizes " << join(got) << ", all in the left kernel: " << (kernel ? "yes" : "no");
  return {ids.size() == 104 && got == std::vector<int>{24, 8, 24, 24, 24} && kernel, os.str()};
}

Outcome classes() {
  std::vector<std::vector<IndexPair>> table = {
      {pair(1, 1, 1, 2), pair(1, 1, 2, 1), pair(2, 2, 1, 2), pair(2, 2, 2, 1)},
      {pair(0, 1, 1, 1), pair(1, 0, 1, 1), pair(0, 1, 1, 2), pair(1, 0, 2, 1)},
      {pair(0, 2, 2, 2), pair(2, 0, 2, 2), pair(0, 2, 2, 1), pair(2, 0, 1, 2)},
      {pair(0, 1, 2, 0), pair(0, 2, 1, 0)},
      {pair(0, 1, 2, 2), pair(1, 0, 2, 2)},
      {pair(0, 1, 2, 1), pair(1, 0, 1, 2)},
      {pair(0, 2, 1, 1), pair(2, 0, 1, 1)},
      {pair(0, 2, 1, 2), pair(2, 0, 2, 1)},
      {pair(0, 2, 2, 0)},
  };
  std::set<std::set<IndexPair>> want, got;
  for (const auto& c : table) want.insert({c.begin(), c.end()});
  for (const auto& c : pair_classes(3, pair(0, 1, 1, 0), enumerate_group(3, false))) got.insert({c.begin(), c.end()});
  std::ostringstream os;
  os << got.size() << " classes, " << (got == want ? "identical to" : "different from") << " the reference table";
  return {got == want, os.str()};
}

Outcome soundness() {
  const auto& ctx = context();
  int total = 0, pass = 0;
  for (const auto& e : catalog()) {
    if (e.source != Source::AppendixA) continue;
    ++total;
    bool ok = true;
    for (int t = 0; t < 3; ++t) {
      Matrix x = instantiate(e.record.matrix, random_bindings(e.record.matrix.params, 1000 + 17 * total + t));
      ok = ok && check_solution(x, ctx.system).ok;
    }
    pass += ok;
  }
  auto h = nu_histogram(catalog());
  std::vector<int> counts;
  for (const auto& [nu, c] : h) counts.push_back(c);
  std::vector<int> want = {1, 1, 2, 7, 7, 17, 36, 45, 42, 21, 7, 1, 1};
  std::ostringstream os;
  os << pass << "/" << total << " solutions pass at 3 instantiations, histogram " << join(counts);
  return {total == 188 && pass == 188 && counts == want, os.str()};
}

Outcome continuity() {
  const auto& ctx = context();
  int fixed = 0, fixed_ok = 0, unknown = 0;
  std::string first_bad;
  for (const auto& e : catalog()) {
    if (e.source != Source::AppendixA || !e.record.matrix.params.empty()) continue;
    ++fixed;
    auto v = classify_continuity(concrete(e.id()), ctx.system, ctx.identities, ctx.lattice);
    unknown += v.kind == Continuity::Unknown;
    std::string tag = v.kind == Continuity::Continuous ? "C" : v.kind == Continuity::Discrete ? "D" : "?";
    if (tag == e.record.tag)
      ++fixed_ok;
    else if (first_bad.empty())
      first_bad = e.id();
  }
  struct Footnote {
    std::string id, pattern;
    Continuity want;
  };
  std::vector<Footnote> notes = {{"eps_12_2", "a=1,b=1", Continuity::Continuous},
                                 {"eps_12_2", "a=1,b=2", Continuity::Discrete},
                                 {"eps_15_5", "a=1,b=1", Continuity::Continuous},
                                 {"eps_16_1", "a=1", Continuity::Continuous},
                                 {"eps_16_1", "a=2", Continuity::Discrete}};
  int notes_ok = 0;
  for (const auto& n : notes) {
    const auto& eps = solution(n.id).matrix;
    Matrix x = instantiate_any(eps, bindings_for_pattern(eps.params, n.pattern), ctx.system);
    auto v = classify_continuity(x, ctx.system, ctx.identities, ctx.lattice);
    unknown += v.kind == Continuity::Unknown;
    if (v.kind == n.want)
      ++notes_ok;
    else if (first_bad.empty())
      first_bad = n.id + "(" + n.pattern + ")";
  }
  std::ostringstream os;
  os << fixed_ok << "/" << fixed << " non-parametric tags, " << notes_ok << "/" << notes.size()
     << " footnoted bindings, " << unknown << " unknown";
  if (!first_bad.empty()) os << ", first mismatch " << first_bad;
  return {fixed == 175 && fixed_ok == fixed && notes_ok == static_cast<int>(notes.size()) && unknown == 0, os.str()};
}

Outcome inequivalence() {
  const auto& ctx = context();
  auto r = pairwise_inequivalence(catalog(), ctx, 1);
  Rng rng(77);
  int planted = 0, found = 0;
  for (const auto& e : catalog()) {
    if (e.source != Source::AppendixA) continue;
    Matrix x = concrete(e.id());
    Vec a;
    for (int k = 0; k < 8; ++k) a.push_back(rng.nonzero_cyclo(3, 5));
    Matrix y = hadamard(normalization_matrix(3, a), act_on_contraction(x, permutation_of(rng.pick(ctx.group))));
    ++planted;
    found += equivalent(x, y, ctx.system, ctx.lattice, ctx.group).equivalent;
  }
  std::ostringstream os;
  os << r.pairs << " same-nu pairs, " << r.equivalent_pairs.size() << " equivalent; planted controls " << found << "/"
     << planted << " recognized";
  return {r.pairs > 2800 && r.equivalent_pairs.empty() && found == planted, os.str()};
}

Outcome families() {
  const auto& ctx = context();
  int total = 0, pass = 0;
  std::string first_bad;
  for (const auto& e : catalog()) {
    if (e.source != Source::Section6) continue;
    ++total;
    auto rep = verify_entry(e, ctx, 5);
    bool ok = true;
    for (const auto& c : rep.checks)
      if ((c.name.rfind("solution", 0) == 0 || c.name.rfind("step", 0) == 0) && !c.ok) ok = false;
    pass += ok;
    if (!ok && first_bad.empty()) first_bad = e.id();
  }
  const auto& f02 = solution("fam_0_2").matrix;
  Bindings ones;
  for (char p : f02.params) ones[p] = CycloNumber(3, 1L);
  bool trivial = equivalent(instantiate(f02, ones), instantiate(all_ones_matrix(3), {}), ctx.system, ctx.lattice,
                            ctx.group)
                     .equivalent;
  std::ostringstream os;
  os << pass << "/" << total << " families satisfy their systems at 3 instantiations; eps0_2 at ones "
     << (trivial ? "is" : "is not") << " equivalent to all-ones";
  if (!first_bad.empty()) os << ", first failure " << first_bad;
  return {total == 20 && pass == total && trivial, os.str()};
}

Outcome goldens() {
  const auto& ctx = context();
  std::vector<std::string> bad;
  {
    auto cs = split_central(contracted("eps_23_1"));
    Fingerprint f = fingerprint(cs.core);
    // the Casimir is the linear form along the center of the core, e1 in the table basis
    Subspace z = center(cs.core);
    bool casimir = z.dim() == 1;
    if (casimir) {
      Polynomial F(3, 3);
      for (int i = 0; i < 3; ++i) F = F + Polynomial::variable(3, i, 3).scaled(z.basis()[0][i]);
      casimir = verify_casimir(cs.core, F).ok;
    }
    if (!(cs.core.dim() == 3 && f.derived_dims == std::vector<int>{3, 1, 0} &&
          f.lower_central_dims == std::vector<int>{3, 1, 0} && f.upper_central_dims == std::vector<int>{1, 3} &&
          f.dim_der == 6 && f.tau == 1 && casimir))
      bad.push_back("eps_23_1: " + f.str());
  }
  {
    Matrix x = concrete("eps_9_1");
    Fingerprint f = fingerprint(apply_contraction(ctx.pauli, x));
    auto v = classify_continuity(x, ctx.system, ctx.identities, ctx.lattice);
    if (!(f.dim == 8 && f.solvable && f.derived_dims == std::vector<int>{8, 6, 3, 0} &&
          f.lower_central_dims == std::vector<int>{8, 6} && f.upper_central_dims == std::vector<int>{0} && f.tau == 2 &&
          f.dim_der == 9 && v.kind == Continuity::Continuous))
      bad.push_back("eps_9_1: " + f.str());
  }
  {
    LieAlgebra L = contracted("eps_24_1");
    Fingerprint f = fingerprint(L);
    if (!(L.is_abelian() && f.dim_der == 64 && f.tau == 8)) bad.push_back("eps_24_1: " + f.str());
  }
  {
    LieAlgebra L = contracted("eps_0_1");
    auto inv = formal_invariant_count(L);
    bool killing = !determinant(trace_form(L)).is_zero();
    if (!(is_semisimple(L) && killing && inv.tau == 2 && inv.generic_rank == 6))
      bad.push_back("eps_0_1 tau=" + std::to_string(inv.tau));
  }
  std::ostringstream os;
  if (bad.empty())
    os << "eps23_1, eps9_1, eps24_1, eps0_1 match";
  else
    for (const auto& b : bad) os << b << "; ";
  return {bad.empty(), os.str()};
}

Outcome decompositions() {
  std::vector<std::string> bad;
  Fingerprint l21_9 = fingerprint(split_central(contracted("eps_21_9")).core);
  auto d = decompose(split_central(contracted("eps_18_32")).core);
  bool split_ok = d.parts.size() == 2 && !d.undetermined;
  for (const auto& p : d.parts) split_ok = split_ok && p.dim() == 4 && fingerprint(p) == l21_9;
  if (!split_ok) bad.push_back("L18,32 gave " + std::to_string(d.parts.size()) + " parts");
  auto cs = split_central(contracted("eps_21_16"));
  Fingerprint f = fingerprint(cs.core);
  if (!(cs.abelian_dim == 2 && cs.core.dim() == 6 && f.nilpotent && f.derived_dims == std::vector<int>{6, 3, 0} &&
        f.lower_central_dims == std::vector<int>{6, 3, 0} && f.upper_central_dims == std::vector<int>{3, 6} &&
        f.dim_der == 18))
    bad.push_back("L21,16 core " + f.str());
  std::ostringstream os;
  if (bad.empty())
    os << "L18,32 = two copies of L'21,9 by fingerprint; L21,16 = 6-dim nilpotent core + 2A1";
  else
    for (const auto& b : bad) os << b << "; ";
  return {bad.empty(), os.str()};
}

Outcome towers() {
  LieAlgebra a = contracted("eps_17_2"), b = contracted("eps_19_22");
  auto ta = der_tower(a, 4), tb = der_tower(b, 4);
  auto da = derived_series(derivation_algebra(a).as_lie).dims;
  auto db = derived_series(derivation_algebra(b).as_lie).dims;
  std::ostringstream os;
  os << "towers (" << join(ta) << ") and (" << join(tb) << "), Der derived series (" << join(da) << ") vs (" << join(db)
     << ")";
  bool ok = ta == std::vector<int>{17, 19} && tb == std::vector<int>{17, 19} && da == std::vector<int>{17, 15} &&
            db == std::vector<int>{17, 14, 8, 0};
  return {ok, os.str()};
}

Outcome casimirs() {
  auto recs = load_expected(data_dir() + "/expected/expected.txt");
  std::vector<std::string> chosen = {"L'_23,1",  "L'_22,1",  "L'_21,2", "L'_22,3", "L'_21,16",
                                     "L'_20,39", "L'_19,19", "L'_18,9", "L_19,41", "L_20,32"};
  int polys = 0, polys_ok = 0, mutants_caught = 0, algebras = 0;
  std::string first_bad;
  for (const auto& id : chosen) {
    const ExpectedRecord* rec = nullptr;
    for (const auto& r : recs)
      if (r.algebra == id && r.kind == ExpectedRecord::Kind::Algebra && r.at.empty() && !r.casimirs.empty()) rec = &r;
    if (!rec || rec->brackets.empty()) {
      if (first_bad.empty()) first_bad = id + " has no record";
      continue;
    }
    ++algebras;
    int dim = rec->ds.front();
    Bindings b = bindings_for_pattern(rec->params, "");
    LieAlgebra L = algebra_from_text(rec->brackets, dim, b);
    std::optional<Polynomial> last;
    for (const auto& text : rec->casimirs) {
      Polynomial F = Polynomial::parse(text, dim, b);
      ++polys;
      if (verify_casimir(L, F).ok)
        ++polys_ok;
      else if (first_bad.empty())
        first_bad = id + " " + text;
      last = F;
    }
    // mutate the last polynomial: flip the sign of its last term, or add a non-central generator
    Polynomial M = *last;
    if (last->terms().size() > 1) {
      auto it = std::prev(last->terms().end());
      Polynomial t(dim, 3);
      t.add_term(it->first, it->second * CycloNumber(3, 2L));
      M = *last - t;
    } else {
      Subspace z = center(L);
      for (int k = 0; k < dim; ++k)
        if (!z.contains(L.unit(k))) {
          M = *last + Polynomial::variable(dim, k, 3);
          break;
        }
    }
    if (!verify_casimir(L, M).ok)
      ++mutants_caught;
    else if (first_bad.empty())
      first_bad = id + " mutant passed";
  }
  std::ostringstream os;
  os << polys_ok << "/" << polys << " Casimirs verified over " << algebras << " algebras, " << mutants_caught
     << " mutants rejected";
  if (!first_bad.empty()) os << ", first problem: " << first_bad;
  return {algebras == 10 && polys_ok == polys && mutants_caught == algebras, os.str()};
}

Outcome three_term() {
  auto sys = generate_system(5);
  auto w = [](long k) { return CycloNumber::root_power(5, k); };
  CycloNumber one(5, 1L);
  auto p5 = [](int r1, int s1, int r2, int s2) { return pair(r1, s1, r2, s2, 5); };
  std::vector<Product> products = {product(p5(0, 1, 1, 0), p5(1, 1, 3, 1)), product(p5(1, 0, 3, 1), p5(4, 1, 0, 1)),
                                   product(p5(3, 1, 0, 1), p5(3, 2, 1, 0))};
  Vec want = {(w(1) - one) * (w(3) - w(1)), (one - w(1)) * (one - w(4)), (one - w(3)) * (w(2) - one)};
  IndexTuple t = {idx(0, 1, 5), idx(1, 0, 5), idx(3, 1, 5)};
  const auto* e = by_triple(sys, t);
  bool ok = e && e->terms.size() == 3 && proportional(*e, products, want);
  return {ok, e ? e->str(5) : "no equation for the triple"};
}

Outcome property_suites() {
  auto results = all_properties(20240611, 500);
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : results) {
    ok = ok && r.ok() && r.cases >= 500;
    os << r.name << " " << r.cases - r.failures << "/" << r.cases;
    if (!r.first_failure.empty()) os << " (first failure " << r.first_failure << ")";
    os << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "system shape", 1, system_shape},
      {2, "coset redundancy", 1, redundancy},
      {3, "higher-order identities", 1, identities},
      {4, "pair classes", 1, classes},
      {5, "catalog soundness", 30, soundness},
      {6, "continuity tags", 120, continuity},
      {7, "pairwise inequivalence", 600, inequivalence},
      {8, "intermediate families", 30, families},
      {9, "identification goldens", 60, goldens},
      {10, "decomposition goldens", 60, decompositions},
      {11, "derivation towers", 120, towers},
      {12, "Casimir suite", 30, casimirs},
      {13, "three-term equation", 5, three_term},
      {14, "property suites", 120, property_suites},
  };
  // shared inputs are built once, outside the timed sections
  catalog();
  context();
  int failed = 0;
  for (const auto& c : criteria) {
    Stopwatch sw;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double t = sw.seconds();
    bool ok = o.ok && t < c.limit;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", t, c.limit);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << ", " << timing
              << "): " << o.detail << (o.ok && !ok ? " [too slow]" : "") << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 14 criteria passed") << std::endl;
  return failed ? 1 : 0;
}
