#include "liecontract/catalog.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "liecontract/errors.hpp"

#ifndef LIECONTRACT_DEFAULT_DATA
#define LIECONTRACT_DEFAULT_DATA "data"
#endif

namespace liecontract {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& p : split(s, ',')) out.push_back(std::stoi(p));
  return out;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex m;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

CheckResult check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok, std::move(detail)};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

const ExpectedRecord* find_record(const std::vector<ExpectedRecord>& all, const std::string& algebra) {
  for (const auto& r : all)
    if (r.kind == ExpectedRecord::Kind::Algebra && r.algebra == algebra && r.at.empty()) return &r;
  return nullptr;
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("LIECONTRACT_DATA"); env && *env) return env;
  return LIECONTRACT_DEFAULT_DATA;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string source_str(Source s) { return s == Source::AppendixA ? "appendixA" : "section6"; }

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (auto [file, src] : {std::pair{"appendix_a.txt", Source::AppendixA}, std::pair{"section6.txt", Source::Section6}}) {
    std::string path = dir + "/solutions/" + file;
    for (auto& rec : parse_solution_file(read_file(path), path)) {
      if (!ids.insert(rec.id).second) throw ParseError(path + ": duplicate entry id " + rec.id);
      if (src == Source::AppendixA && !rec.nu) throw ParseError(path + ": entry " + rec.id + " lacks nu");
      out.push_back({std::move(rec), src});
    }
  }
  return out;
}

std::map<int, int> nu_histogram(const std::vector<CatalogEntry>& entries) {
  std::map<int, int> h;
  for (const auto& e : entries)
    if (e.source == Source::AppendixA) ++h[e.record.matrix.zero_count()];
  return h;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  for (const auto& e : entries)
    if (e.id() == id) return &e;
  return nullptr;
}

CatalogContext CatalogContext::build() {
  return {generate_system(3), generate_identities(), build_exponent_lattice(3), enumerate_group(3, false),
          pauli_algebra(3)};
}

std::vector<ProductConstraint> step_constraints(int step, const std::vector<SymmetryElement>& group) {
  auto pos = [](int r, int s) { return grading_position(3, {r, s}); };
  auto pr = [&](GradingIndex a, GradingIndex b) {
    return make_pair_sorted(pos(a.r, a.s), pos(b.r, b.s));
  };
  const IndexPair k0110 = pr({0, 1}, {1, 0});
  std::vector<std::vector<IndexPair>> sets = {
      {k0110, pr({2, 2}, {2, 1})},
      {k0110, pr({1, 0}, {1, 1}), pr({0, 1}, {2, 2})},
      {k0110, pr({1, 0}, {1, 1})},
      {k0110, pr({0, 2}, {2, 2})},
  };
  std::vector<int> use;
  switch (step) {
    case 0: break;
    case 1: use = {0}; break;
    case 2: use = {0, 1}; break;
    case 3: use = {0, 1, 2}; break;
    case 4: use = {0, 2, 3}; break;
    default: throw Error("unknown construction step " + std::to_string(step));
  }
  std::vector<ProductConstraint> out;
  for (int u : use) {
    auto part = build_nonequivalence_system(sets[u], group);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool EntryReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

Bindings random_bindings(const std::set<char>& params, uint64_t seed, int order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 60), den(1, 17), sign(0, 1);
  Bindings b;
  for (char p : params) {
    Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    q.canonicalize();
    b[p] = CycloNumber(order, q);
  }
  return b;
}

Bindings bindings_for_pattern(const std::set<char>& params, const std::string& pattern, int order) {
  Bindings b = default_bindings(params, order);
  if (pattern.empty()) return b;
  // "a=b=1" binds both names
  std::vector<std::string> flat;
  for (const auto& part : split(pattern, ',')) {
    auto names = split(part, '=');
    if (names.size() < 2) throw ParseError("bad binding pattern '" + pattern + "'");
    for (size_t i = 0; i + 1 < names.size(); ++i) flat.push_back(names[i] + "=" + names.back());
  }
  for (const auto& [k, v] : pattern_bindings(join(flat, ","), order)) b[k] = v;
  return b;
}

Matrix instantiate_any(const ContractionMatrix& eps, const Bindings& b,
                       const std::vector<ContractionEquation>& system) {
  for (const auto& [k, v] : b)
    if (eps.params.count(k) && v.is_zero()) return instantiate_boundary(eps, b, system);
  return instantiate(eps, b);
}

EntryReport verify_entry(const CatalogEntry& entry, const CatalogContext& ctx, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.id = entry.id();
  rep.kind = source_str(entry.source);
  const auto& eps = entry.record.matrix;
  const uint64_t base = seed ^ fnv1a(entry.id());

  std::vector<Matrix> insts;
  std::string fails;
  for (int t = 0; t < 3; ++t) {
    Bindings b = random_bindings(eps.params, base + static_cast<uint64_t>(t) * 7919);
    Matrix x = instantiate(eps, b);
    auto sc = check_solution(x, ctx.system);
    if (!sc.ok) fails += (fails.empty() ? "" : "; ") + ("equation " + std::to_string(*sc.violated + 1));
    insts.push_back(std::move(x));
  }
  rep.checks.push_back(check("solution", fails.empty(), fails.empty() ? "3 instantiations" : fails));

  if (entry.source == Source::Section6) {
    int step = entry.record.step.value_or(0);
    auto cons = step_constraints(step, ctx.group);
    bool ok = true;
    for (const auto& x : insts) ok = ok && satisfies(x, cons);
    rep.checks.push_back(check("nonequivalence", ok,
                               "step " + std::to_string(step) + ", " + std::to_string(cons.size()) + " products"));
  } else {
    std::vector<std::pair<std::string, std::string>> cases;
    if (entry.record.tag == "mixed")
      cases = entry.record.conditions;
    else if (!entry.record.tag.empty())
      cases = {{"", entry.record.tag}};
    for (const auto& [pattern, tag] : cases) {
      Bindings b = bindings_for_pattern(eps.params, pattern == "*" ? "" : pattern);
      Matrix x = instantiate_any(eps, b, ctx.system);
      auto v = classify_continuity(x, ctx.system, ctx.identities, ctx.lattice);
      std::string got = v.kind == Continuity::Continuous ? "C" : v.kind == Continuity::Discrete ? "D" : "unknown";
      std::string name = pattern.empty() ? "continuity" : "continuity[" + pattern + "]";
      std::string detail = got + ", expected " + tag;
      if (v.kind == Continuity::Continuous) {
        std::vector<std::string> w;
        for (const auto& n : v.weights) w.push_back(n.get_str());
        detail += ", weights " + join(w, ",");
      } else if (v.identity) {
        detail += ", identity " + ctx.identities[*v.identity].str();
      }
      rep.checks.push_back(check(name, got == tag, detail));
    }
    if (eps.side_conditions) rep.checks.push_back(check("side-conditions", true, "not evaluated: " + *eps.side_conditions));
    Matrix x = instantiate(eps, default_bindings(eps.params));
    rep.fp = fingerprint(apply_contraction(ctx.pauli, x), {1, seed});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

InequivalenceResult pairwise_inequivalence(const std::vector<CatalogEntry>& entries, const CatalogContext& ctx,
                                           int jobs) {
  std::vector<const CatalogEntry*> a;
  std::vector<Matrix> xs;
  for (const auto& e : entries)
    if (e.source == Source::AppendixA) {
      a.push_back(&e);
      xs.push_back(instantiate(e.record.matrix, default_bindings(e.record.matrix.params)));
    }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i]->record.matrix.zero_count() == a[j]->record.matrix.zero_count()) pairs.push_back({i, j});
  std::vector<char> eq(pairs.size(), 0);
  parallel_for(pairs.size(), jobs, [&](size_t p) {
    eq[p] = equivalent_unchecked(xs[pairs[p].first], xs[pairs[p].second], ctx.lattice, ctx.group).equivalent;
  });
  InequivalenceResult res;
  res.pairs = pairs.size();
  for (size_t p = 0; p < pairs.size(); ++p)
    if (eq[p]) res.equivalent_pairs.push_back({a[pairs[p].first]->id(), a[pairs[p].second]->id()});
  return res;
}

std::string ExpectedRecord::label() const {
  static const char* names[] = {"algebra", "derivations", "decomposition", "isomorphic"};
  std::string s = std::string(names[static_cast<int>(kind)]) + "=";
  if (kind == Kind::Isomorphic) return s + join(members, "|");
  s += algebra;
  if (!at.empty()) s += " at " + at;
  return s;
}

std::vector<ExpectedRecord> load_expected(const std::string& path) {
  std::vector<ExpectedRecord> out;
  std::istringstream is(read_file(path));
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    ExpectedRecord r;
    r.line = ln;
    auto where = [&] { return path + ":" + std::to_string(ln) + ": "; };
    std::istringstream ls(line);
    std::string tok;
    bool first = true;
    while (ls >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(where() + "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      try {
        if (first) {
          if (key == "algebra") r.kind = ExpectedRecord::Kind::Algebra;
          else if (key == "derivations") r.kind = ExpectedRecord::Kind::Derivations;
          else if (key == "decomposition") r.kind = ExpectedRecord::Kind::Decomposition;
          else if (key == "isomorphic") r.kind = ExpectedRecord::Kind::Isomorphic;
          else throw ParseError("unknown record kind '" + key + "'");
          if (r.kind == ExpectedRecord::Kind::Isomorphic) {
            r.members = split(val, '|');
            if (r.members.size() < 2) throw ParseError("isomorphism needs two algebras");
            for (const auto& m : r.members) parse_algebra_ref(m);
          } else {
            parse_algebra_ref(val);
            r.algebra = val;
          }
          first = false;
          continue;
        }
        if (key == "at") r.at = val;
        else if (key == "params") {
          for (const auto& p : split(val, ','))
            if (p.size() == 1) r.params.insert(p[0]);
            else throw ParseError("bad parameter list");
        } else if (key == "ds") r.ds = parse_ints(val);
        else if (key == "lcs") r.lcs = parse_ints(val);
        else if (key == "ucs") r.ucs = parse_ints(val);
        else if (key == "tower") r.tower = parse_ints(val);
        else if (key == "tau") r.tau = std::stoi(val);
        else if (key == "der") r.der = std::stoi(val);
        else if (key == "casimirs") r.casimirs = split(val, ';');
        else if (key == "tag") {
          if (val != "C" && val != "D") throw ParseError("tag must be C or D");
          r.tag = val;
        } else if (key == "nilradical") r.nilradical = val;
        else if (key == "brackets") r.brackets = val;
        else if (key == "parts") r.members = split(val, '+');
        else throw ParseError("unknown key '" + key + "'");
      } catch (const std::invalid_argument&) {
        throw ParseError(where() + "bad integer list in '" + tok + "'");
      } catch (const Error& e) {
        throw ParseError(where() + e.what());
      }
    }
    if (r.kind == ExpectedRecord::Kind::Algebra && (r.ds.empty() || r.lcs.empty() || r.ucs.empty()))
      throw ParseError(where() + "series lists are required");
    if (r.kind == ExpectedRecord::Kind::Decomposition && r.members.size() < 2)
      throw ParseError(where() + "decomposition needs parts");
    // casimirs are parsed up front so malformed text fails at load time
    for (const auto& c : r.casimirs) {
      std::set<char> ps = r.params;
      for (char ch : c)
        if (ch >= 'a' && ch <= 'd') ps.insert(ch);
      Polynomial::parse(c, 16, default_bindings(ps));
    }
    out.push_back(std::move(r));
  }
  return out;
}

AlgebraRef parse_algebra_ref(const std::string& text) {
  AlgebraRef ref;
  std::string s = text;
  auto paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') throw ParseError("bad algebra reference '" + text + "'");
    ref.pattern = s.substr(paren + 1, s.size() - paren - 2);
    s = s.substr(0, paren);
  }
  ref.id = s;
  size_t p = 0;
  if (s.rfind("L'_", 0) == 0) {
    ref.core = true;
    p = 3;
  } else if (s.rfind("L_", 0) == 0) {
    p = 2;
  } else {
    throw ParseError("bad algebra reference '" + text + "'");
  }
  auto comma = s.find(',', p);
  if (comma == std::string::npos) throw ParseError("bad algebra reference '" + text + "'");
  std::string nu = s.substr(p, comma - p), idx = s.substr(comma + 1);
  auto digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(nu) || !digits(idx)) throw ParseError("bad algebra reference '" + text + "'");
  ref.solution = "eps_" + nu + "_" + idx;
  return ref;
}

std::vector<std::string> match_fingerprint(const Fingerprint& fp, const ExpectedRecord& rec) {
  std::vector<std::string> diffs;
  auto cmp = [&](const char* name, const std::vector<int>& want, const std::vector<int>& got) {
    if (!want.empty() && want != got)
      diffs.push_back(std::string(name) + " expected " + dims_str(want) + " got " + dims_str(got));
  };
  cmp("ds", rec.ds, fp.derived_dims);
  cmp("lcs", rec.lcs, fp.lower_central_dims);
  cmp("ucs", rec.ucs, fp.upper_central_dims);
  cmp("tower", rec.tower, fp.der_tower);
  if (rec.der && *rec.der != fp.dim_der)
    diffs.push_back("der expected " + std::to_string(*rec.der) + " got " + std::to_string(fp.dim_der));
  if (rec.tau && *rec.tau != fp.tau)
    diffs.push_back("tau expected " + std::to_string(*rec.tau) + " got " + std::to_string(fp.tau));
  return diffs;
}

LieAlgebra build_algebra(const AlgebraRef& ref, const std::set<char>& extra_params, const std::string& at,
                         const std::vector<CatalogEntry>& entries, const CatalogContext& ctx) {
  const CatalogEntry* e = find_entry(entries, ref.solution);
  if (!e) throw Error("no catalog entry " + ref.solution + " for " + ref.id);
  const auto& eps = e->record.matrix;
  std::set<char> params = eps.params;
  params.insert(extra_params.begin(), extra_params.end());
  std::string pattern = at;
  if (!ref.pattern.empty()) pattern = pattern.empty() ? ref.pattern : pattern + "," + ref.pattern;
  Matrix x = instantiate_any(eps, bindings_for_pattern(params, pattern), ctx.system);
  LieAlgebra L = apply_contraction(ctx.pauli, x);
  if (!ref.core) return L;
  return split_central(L).core;
}

LieAlgebra algebra_from_text(const std::string& brackets, int dim, const Bindings& b, int order) {
  std::vector<std::tuple<int, int, Vec>> list;
  for (const auto& item : split(brackets, ';')) {
    auto eq = item.find('=');
    if (item.size() < 5 || item[0] != '[' || eq == std::string::npos || item[eq - 1] != ']')
      throw ParseError("bad bracket '" + item + "'");
    auto idx = parse_ints(item.substr(1, eq - 2));
    if (idx.size() != 2 || idx[0] < 1 || idx[1] < 1 || idx[0] > dim || idx[1] > dim || idx[0] == idx[1])
      throw ParseError("bad bracket indices in '" + item + "'");
    auto lin = Polynomial::parse(item.substr(eq + 1), dim, b, order).as_linear();
    if (!lin) throw ParseError("bracket value is not linear in '" + item + "'");
    list.emplace_back(idx[0] - 1, idx[1] - 1, *lin);
  }
  return algebra_from_brackets(dim, order, list);
}

EntryReport verify_expected(const ExpectedRecord& rec, const std::vector<ExpectedRecord>& all,
                            const std::vector<CatalogEntry>& entries, const CatalogContext& ctx, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.id = rec.label();
  rep.kind = "expected";
  using K = ExpectedRecord::Kind;
  try {
    if (rec.kind == K::Algebra) {
      AlgebraRef ref = parse_algebra_ref(rec.algebra);
      LieAlgebra L = build_algebra(ref, rec.params, rec.at, entries, ctx);
      Fingerprint fp = fingerprint(L, {1, seed});
      rep.fp = fp;
      auto diffs = match_fingerprint(fp, rec);
      rep.checks.push_back(check("fingerprint", diffs.empty(), diffs.empty() ? fp.str() : join(diffs, "; ")));
      const CatalogEntry* e = find_entry(entries, ref.solution);
      std::set<char> params = e->record.matrix.params;
      params.insert(rec.params.begin(), rec.params.end());
      Bindings b = bindings_for_pattern(params, rec.at);
      if (!rec.tag.empty()) {
        Matrix x = instantiate_any(e->record.matrix, b, ctx.system);
        auto v = classify_continuity(x, ctx.system, ctx.identities, ctx.lattice);
        std::string got = v.kind == Continuity::Continuous ? "C" : v.kind == Continuity::Discrete ? "D" : "unknown";
        rep.checks.push_back(check("continuity", got == rec.tag, got + ", expected " + rec.tag));
      }
      std::string brackets = rec.brackets;
      if (brackets.empty())
        if (const auto* base = find_record(all, rec.algebra)) brackets = base->brackets;
      std::optional<LieAlgebra> table;
      if (!brackets.empty()) {
        table = algebra_from_text(brackets, fp.dim, b);
        bool jac = jacobi_defect(*table).empty();
        Fingerprint tfp = fingerprint(*table, {1, seed});
        rep.checks.push_back(check("bracket-table", jac && tfp == fp,
                                   !jac ? "Jacobi identity fails" : tfp == fp ? "fingerprint equal" : tfp.str()));
      }
      if (!rec.casimirs.empty()) {
        if (!table) {
          rep.checks.push_back(check("casimirs", false, "no bracket table to evaluate on"));
        } else {
          std::vector<std::string> bad;
          for (const auto& c : rec.casimirs) {
            auto r = verify_casimir(*table, Polynomial::parse(c, fp.dim, b));
            if (!r.ok) bad.push_back(c + " (generator e" + std::to_string(*r.failing + 1) + ")");
          }
          if (static_cast<int>(rec.casimirs.size()) != fp.tau)
            bad.push_back(std::to_string(rec.casimirs.size()) + " listed but tau is " + std::to_string(fp.tau));
          rep.checks.push_back(check("casimirs", bad.empty(),
                                     bad.empty() ? std::to_string(rec.casimirs.size()) + " verified" : join(bad, "; ")));
        }
      }
      if (!rec.nilradical.empty()) {
        auto nr = nilradical(L);
        LieAlgebra N = nr.space.dim() == 0 ? LieAlgebra(0, L.order()) : restrict_to(L, nr.space.basis());
        std::vector<std::string> problems;
        if (!nr.verified) problems.push_back("unverified-maximality");
        const std::string& lab = rec.nilradical;
        if (lab == "self") {
          if (N.dim() != L.dim()) problems.push_back("dim " + std::to_string(N.dim()));
        } else if (lab[0] == '(') {
          std::vector<std::vector<int>> want;
          for (const auto& grp : split(lab.substr(1, lab.size() - 2), ')')) {
            std::string g = grp[0] == '(' ? grp.substr(1) : grp;
            std::vector<int> d;
            for (char ch : g) d.push_back(ch - '0');
            want.push_back(d);
          }
          Fingerprint nfp = fingerprint(N, {1, seed});
          std::vector<std::vector<int>> got = {nfp.derived_dims, nfp.lower_central_dims, nfp.upper_central_dims};
          if (want != got) problems.push_back("series " + nfp.str());
        } else {
          int abel = 0;
          std::vector<std::string> ids;
          for (const auto& part : split(lab, '+')) {
            if (part.size() >= 3 && part.substr(part.size() - 2) == "A1")
              abel += std::stoi(part.substr(0, part.size() - 2));
            else
              ids.push_back(part);
          }
          auto cs = split_central(N);
          if (cs.abelian_dim != abel) problems.push_back("abelian part " + std::to_string(cs.abelian_dim));
          if (ids.size() > 1) problems.push_back("composite label not supported");
          if (ids.empty() && cs.core.dim() != 0) problems.push_back("non-abelian core dim " + std::to_string(cs.core.dim()));
          if (ids.size() == 1) {
            const auto* nr_rec = find_record(all, ids[0]);
            if (!nr_rec) {
              problems.push_back("no record for " + ids[0]);
            } else {
              auto d = match_fingerprint(fingerprint(cs.core, {1, seed}), *nr_rec);
              if (!d.empty()) problems.push_back(ids[0] + ": " + join(d, "; "));
            }
          }
        }
        rep.checks.push_back(check("nilradical", problems.empty(),
                                   problems.empty() ? "dim " + std::to_string(N.dim()) : join(problems, "; ")));
      }
    } else if (rec.kind == K::Derivations) {
      LieAlgebra L = build_algebra(parse_algebra_ref(rec.algebra), rec.params, rec.at, entries, ctx);
      DerivationAlgebra D = derivation_algebra(L);
      Fingerprint fp = fingerprint(D.as_lie, {3, seed});
      std::vector<int> tower = {static_cast<int>(D.basis.size())};
      for (int d : fp.der_tower) {
        if (d == tower.back()) break;
        tower.push_back(d);
      }
      fp.der_tower = tower;
      rep.fp = fp;
      auto diffs = match_fingerprint(fp, rec);
      rep.checks.push_back(check("derivation-fingerprint", diffs.empty(), diffs.empty() ? fp.str() : join(diffs, "; ")));
    } else if (rec.kind == K::Decomposition) {
      AlgebraRef ref = parse_algebra_ref(rec.algebra);
      AlgebraRef full = ref;
      full.core = false;
      LieAlgebra L = build_algebra(full, rec.params, rec.at, entries, ctx);
      auto cs = split_central(L);
      auto dec = decompose(cs.core);
      std::vector<std::string> problems;
      if (!ref.core && cs.abelian_dim != 0) problems.push_back("central part of dim " + std::to_string(cs.abelian_dim));
      if (dec.undetermined) problems.push_back("undetermined");
      if (dec.parts.size() != rec.members.size()) {
        problems.push_back(std::to_string(dec.parts.size()) + " parts");
      } else {
        std::vector<Fingerprint> fps;
        for (const auto& p : dec.parts) fps.push_back(fingerprint(p, {1, seed}));
        std::vector<const ExpectedRecord*> recs;
        for (const auto& m : rec.members) {
          recs.push_back(find_record(all, m));
          if (!recs.back()) problems.push_back("no record for " + m);
        }
        if (problems.empty()) {
          std::vector<size_t> perm(fps.size());
          std::iota(perm.begin(), perm.end(), 0);
          bool found = false;
          do {
            bool all_ok = true;
            for (size_t i = 0; i < perm.size() && all_ok; ++i)
              all_ok = match_fingerprint(fps[perm[i]], *recs[i]).empty();
            found = all_ok;
          } while (!found && std::next_permutation(perm.begin(), perm.end()));
          if (!found) problems.push_back("parts do not match the listed algebras");
        }
      }
      std::vector<std::string> dims;
      for (const auto& p : dec.parts) dims.push_back(std::to_string(p.dim()));
      rep.checks.push_back(check("decomposition", problems.empty(),
                                 problems.empty() ? "parts of dim " + join(dims, "+") : join(problems, "; ")));
    } else {
      std::vector<Fingerprint> fps;
      for (const auto& m : rec.members)
        fps.push_back(fingerprint(build_algebra(parse_algebra_ref(m), rec.params, rec.at, entries, ctx), {1, seed}));
      bool same = std::all_of(fps.begin(), fps.end(), [&](const Fingerprint& f) { return f == fps.front(); });
      rep.fp = fps.front();
      rep.checks.push_back(check("isomorphic-fingerprints", same, same ? fps.front().str() : "fingerprints differ"));
    }
  } catch (const Error& e) {
    rep.checks.push_back(check("error", false, e.what()));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string sha256_file(const std::string& path) {
  std::string data = read_file(path);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::vector<std::string> verify_manifest(const std::string& dir) {
  std::vector<std::string> problems;
  std::string text;
  try {
    text = read_file(dir + "/MANIFEST.sha256");
  } catch (const Error&) {
    return {"missing MANIFEST.sha256"};
  }
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto sp = line.find(' ');
    if (sp == std::string::npos) {
      problems.push_back("malformed manifest line: " + line);
      continue;
    }
    std::string want = line.substr(0, sp), rel = trim(line.substr(sp));
    try {
      if (sha256_file(dir + "/" + rel) != want) problems.push_back("checksum mismatch: " + rel);
    } catch (const Error&) {
      problems.push_back("missing file: " + rel);
    }
  }
  return problems;
}

bool CatalogSummary::ok() const {
  return manifest_problems.empty() && appendix_pass == appendix_total && section6_pass == section6_total &&
         expected_pass == expected_total;
}

CatalogSummary verify_catalog(const std::string& dir, const CatalogOptions& opt) {
  CatalogSummary s;
  s.manifest_problems = verify_manifest(dir);
  auto entries = load_catalog(dir);
  auto ctx = CatalogContext::build();
  s.histogram = nu_histogram(entries);
  std::vector<ExpectedRecord> expected;
  if (opt.expected) expected = load_expected(dir + "/expected/expected.txt");
  s.reports.resize(entries.size() + expected.size());
  parallel_for(s.reports.size(), opt.jobs, [&](size_t i) {
    if (i < entries.size())
      s.reports[i] = verify_entry(entries[i], ctx, opt.seed);
    else
      s.reports[i] = verify_expected(expected[i - entries.size()], expected, entries, ctx, opt.seed);
  });
  for (size_t i = 0; i < s.reports.size(); ++i) {
    bool ok = s.reports[i].ok();
    if (i >= entries.size()) {
      ++s.expected_total;
      s.expected_pass += ok;
    } else if (entries[i].source == Source::AppendixA) {
      ++s.appendix_total;
      s.appendix_pass += ok;
    } else {
      ++s.section6_total;
      s.section6_pass += ok;
    }
  }
  // entries sorted by id within each kind; expected records keep file order
  auto mid = s.reports.begin() + static_cast<long>(entries.size());
  std::stable_sort(s.reports.begin(), mid, [](const EntryReport& a, const EntryReport& b) {
    return std::tie(a.kind, a.id) < std::tie(b.kind, b.id);
  });
  return s;
}

std::string render_report(const CatalogSummary& s, const CatalogOptions& opt) {
  std::ostringstream os;
  auto pf = [](bool ok) { return ok ? "pass" : "FAIL"; };
  os << "catalog\n";
  os << "  seed: " << opt.seed << "\n";
  os << "  manifest: " << (s.manifest_problems.empty() ? "ok" : join(s.manifest_problems, "; ")) << "\n";
  os << "  appendixA: " << s.appendix_pass << "/" << s.appendix_total << " pass\n";
  os << "  section6: " << s.section6_pass << "/" << s.section6_total << " pass\n";
  if (opt.expected) os << "  expected: " << s.expected_pass << "/" << s.expected_total << " pass\n";
  os << "  nu histogram:";
  for (const auto& [nu, c] : s.histogram) os << " " << nu << ":" << c;
  os << "\n";
  os << "  result: " << pf(s.ok()) << "\n";
  os << "records\n";
  for (const auto& r : s.reports) {
    os << "  " << r.id << " [" << r.kind << "]: " << pf(r.ok()) << "\n";
    for (const auto& c : r.checks) {
      os << "    " << c.name << ": " << pf(c.ok);
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
    }
    if (r.fp && r.kind != "expected") os << "    fingerprint: " << r.fp->str() << "\n";
    if (opt.timing) os << "    seconds: " << r.seconds << "\n";
  }
  return os.str();
}

}  // namespace liecontract
