#include "liecontract/contraction.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

// [X_u, X_v] = c X_{u+v}; returns c (zero when u+v = 0)
CycloNumber bracket_coeff(int n, GradingIndex u, GradingIndex v) {
  if (mod(u.r + v.r, n) == 0 && mod(u.s + v.s, n) == 0) return CycloNumber(n);
  return CycloNumber::root_power(n, u.s * v.r) - CycloNumber::root_power(n, u.r * v.s);
}

GradingIndex plus(int n, GradingIndex u, GradingIndex v) {
  return {mod(u.r + v.r, n), mod(u.s + v.s, n)};
}

const CycloNumber& value_at(const Matrix& x, const IndexPair& p) { return x(p.first, p.second); }

int pair_index(const std::vector<IndexPair>& pairs, const IndexPair& p) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) throw Error("pair is not relevant");
  return static_cast<int>(it - pairs.begin());
}

// x^e for integer e (x nonzero when e < 0)
CycloNumber power(const CycloNumber& x, const Integer& e) { return x.pow(e.get_si()); }

std::string eps_name(int n, const IndexPair& p) { return "eps" + pair_str(n, p); }

}  // namespace

Bindings default_bindings(const std::set<char>& params, int order) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  Bindings b;
  for (char c : params) b[c] = CycloNumber(order, primes[c - 'a']);
  return b;
}

std::pair<char, CycloNumber> parse_binding(std::string_view text, int order) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("binding '" + std::string(text) + "' lacks '='");
  std::string key = trim(text.substr(0, eq));
  if (key.size() != 1 || key[0] < 'a' || key[0] > 'f')
    throw ParseError("parameter name must be one of a..f, got '" + key + "'");
  return {key[0], CycloNumber::parse(trim(text.substr(eq + 1)), order)};
}

SymbolicMonomial SymbolicMonomial::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == ".") return {};
  SymbolicMonomial m;
  size_t i = 0;
  if (i < t.size() && t[i] == '-') {
    m.sign = -1;
    ++i;
  }
  size_t digits = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  m.coeff = digits == i ? Integer(1) : Integer(t.substr(digits, i - digits));
  size_t letters = i;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (c < 'a' || c > 'f') throw ParseError("malformed entry '" + t + "'");
    m.params.push_back(c);
  }
  if (digits == letters && letters == t.size()) throw ParseError("malformed entry '" + t + "'");
  std::sort(m.params.begin(), m.params.end());
  if (m.coeff == 0) return {};
  return m;
}

std::string SymbolicMonomial::str() const {
  if (is_zero()) return ".";
  std::string s = sign < 0 ? "-" : "";
  if (coeff != 1 || params.empty()) s += coeff.get_str();
  return s + params;
}

CycloNumber SymbolicMonomial::evaluate(const Bindings& b, int order) const {
  if (is_zero()) return CycloNumber(order);
  CycloNumber v(order, Rational(coeff * sign));
  for (char c : params) {
    auto it = b.find(c);
    if (it == b.end()) throw BindingError(std::string("missing binding for parameter ") + c);
    v *= it->second;
  }
  return v;
}

bool SymbolicMonomial::operator==(const SymbolicMonomial& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return sign == o.sign && coeff == o.coeff && params == o.params;
}

int ContractionMatrix::zero_count() const {
  int z = 0;
  for (const auto& p : relevant_pairs(n))
    if (at(p).is_zero()) ++z;
  return z;
}

std::string ContractionMatrix::str() const {
  size_t w = 1;
  for (const auto& row : entries)
    for (const auto& e : row) w = std::max(w, e.str().size());
  std::ostringstream os;
  for (const auto& row : entries) {
    for (size_t j = 0; j < row.size(); ++j) {
      std::string s = row[j].str();
      if (j) os << ' ';
      os << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

ContractionMatrix parse_matrix(std::string_view body, int n,
                               const std::optional<std::set<char>>& declared) {
  const int dim = n * n - 1;
  ContractionMatrix m;
  m.n = n;
  std::vector<std::string> lines;
  for (const auto& line : split(body, '\n'))
    if (!line.empty()) lines.push_back(line);
  if (static_cast<int>(lines.size()) != dim)
    throw ParseError("expected " + std::to_string(dim) + " matrix rows, found " +
                     std::to_string(lines.size()));
  for (int i = 0; i < dim; ++i) {
    auto toks = split_ws(lines[i]);
    if (static_cast<int>(toks.size()) != dim)
      throw ParseError("expected " + std::to_string(dim) + " entries, found " +
                           std::to_string(toks.size()),
                       i + 1);
    std::vector<SymbolicMonomial> row;
    for (int j = 0; j < dim; ++j) {
      try {
        row.push_back(SymbolicMonomial::parse(toks[j]));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1, j + 1);
      }
    }
    m.entries.push_back(std::move(row));
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const auto& e = m.entries[i][j];
      if (!e.is_zero() && !is_relevant(n, i, j))
        throw ParseError("nonzero entry '" + e.str() + "' at irrelevant position " +
                             pair_str(n, {i, j}),
                         i + 1, j + 1);
      if (e != m.entries[j][i])
        throw ParseError("matrix is not symmetric ('" + e.str() + "' vs '" +
                             m.entries[j][i].str() + "')",
                         i + 1, j + 1);
      for (char c : e.params) {
        if (declared && !declared->count(c))
          throw ParseError(std::string("undeclared parameter ") + c, i + 1, j + 1);
        m.params.insert(c);
      }
    }
  if (declared)
    for (char c : *declared) m.params.insert(c);
  return m;
}

ContractionMatrix ones_matrix(int n, const std::vector<IndexPair>& pairs) {
  const int dim = n * n - 1;
  ContractionMatrix m;
  m.n = n;
  m.entries.assign(dim, std::vector<SymbolicMonomial>(dim));
  for (const auto& p : pairs) {
    if (!is_relevant(n, p.first, p.second)) throw Error("pair " + pair_str(n, p) + " is not relevant");
    m.entries[p.first][p.second] = SymbolicMonomial::one();
    m.entries[p.second][p.first] = SymbolicMonomial::one();
  }
  return m;
}

ContractionMatrix all_ones_matrix(int n) { return ones_matrix(n, relevant_pairs(n)); }

Matrix instantiate(const ContractionMatrix& eps, const Bindings& b) {
  for (char c : eps.params) {
    auto it = b.find(c);
    if (it == b.end()) throw BindingError(std::string("missing binding for parameter ") + c);
    if (it->second.is_zero())
      throw BindingError(std::string("parameter ") + c +
                         " bound to zero; zero values need the boundary path");
  }
  const int dim = eps.dim();
  Matrix x(dim, dim, eps.n);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x(i, j) = eps.entries[i][j].evaluate(b, eps.n);
  return x;
}

Matrix instantiate_boundary(const ContractionMatrix& eps, const Bindings& b,
                            const std::vector<ContractionEquation>& system) {
  const int dim = eps.dim();
  Matrix x(dim, dim, eps.n);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) x(i, j) = eps.entries[i][j].evaluate(b, eps.n);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!x(i, j).is_zero() && !is_relevant(eps.n, i, j))
        throw NotASolution("boundary value has a nonzero irrelevant entry");
  auto check = check_solution(x, system);
  if (!check.ok)
    throw NotASolution("boundary value violates " + system[*check.violated].str(eps.n));
  return x;
}

CycloNumber ContractionEquation::evaluate(const Matrix& x) const {
  CycloNumber s(x.order());
  for (const auto& t : terms) {
    const CycloNumber& u = value_at(x, t.p1);
    if (u.is_zero()) continue;
    const CycloNumber& v = value_at(x, t.p2);
    if (v.is_zero()) continue;
    s += t.coeff * u * v;
  }
  return s;
}

std::string ContractionEquation::str(int n) const {
  std::string out;
  if (terms.empty()) return "0 = 0";
  CycloNumber lead = terms.front().coeff;
  for (size_t i = 0; i < terms.size(); ++i) {
    CycloNumber c = terms[i].coeff / lead;
    std::string prod = eps_name(n, terms[i].p1) + "*" + eps_name(n, terms[i].p2);
    if (c.is_one())
      out += (i ? " + " : "") + prod;
    else if ((-c).is_one())
      out += (i ? " - " : "-") + prod;
    else
      out += (i ? " + (" : "(") + c.str() + ")*" + prod;
  }
  return out + " = 0";
}

std::vector<ContractionEquation> generate_system(int n) {
  auto idx = grading_indices(n);
  const int dim = static_cast<int>(idx.size());
  auto group = enumerate_group(n, true);
  std::vector<IndexPermutation> perms;
  for (const auto& g : group) perms.push_back(permutation_of(g));

  std::vector<ContractionEquation> out;
  std::map<IndexTuple, int> orbit_of;
  int orbits = 0;
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int z = y + 1; z < dim; ++z) {
        ContractionEquation eq;
        eq.source_triple = {x, y, z};
        const int rot[3][3] = {{x, y, z}, {z, x, y}, {y, z, x}};
        for (const auto& r : rot) {
          // [p, [q, s]] contributes eps_{qs} eps_{p, q+s}
          int p = r[0], q = r[1], s = r[2];
          CycloNumber c1 = bracket_coeff(n, idx[q], idx[s]);
          if (c1.is_zero()) continue;
          GradingIndex qs = plus(n, idx[q], idx[s]);
          CycloNumber c2 = bracket_coeff(n, idx[p], qs);
          if (c2.is_zero()) continue;
          IndexPair a = make_pair_sorted(q, s);
          IndexPair b = make_pair_sorted(p, grading_position(n, qs));
          if (b < a) std::swap(a, b);
          CycloNumber c = c1 * c2;
          bool merged = false;
          for (auto& t : eq.terms)
            if (t.p1 == a && t.p2 == b) {
              t.coeff += c;
              merged = true;
            }
          if (!merged) eq.terms.push_back({c, a, b});
        }
        eq.terms.erase(std::remove_if(eq.terms.begin(), eq.terms.end(),
                                      [](const auto& t) { return t.coeff.is_zero(); }),
                       eq.terms.end());
        if (eq.terms.empty()) continue;
        auto it = orbit_of.find(eq.source_triple);
        if (it == orbit_of.end()) {
          for (const auto& p : perms) orbit_of[permute(p, eq.source_triple)] = orbits;
          ++orbits;
          it = orbit_of.find(eq.source_triple);
        }
        eq.orbit = it->second;
        out.push_back(std::move(eq));
      }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.orbit < b.orbit; });
  return out;
}

SolutionCheck check_solution(const Matrix& x, const std::vector<ContractionEquation>& system) {
  for (size_t i = 0; i < system.size(); ++i)
    if (!system[i].evaluate(x).is_zero()) return {false, i};
  return {true, std::nullopt};
}

bool IdentityRelation::holds(const Matrix& x) const {
  auto pairs = relevant_pairs(3);
  CycloNumber lhs(x.order(), 1), rhs(x.order(), 1);
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (exponent[p] == 0) continue;
    const CycloNumber& v = value_at(x, pairs[p]);
    if (exponent[p] > 0)
      lhs *= power(v, exponent[p]);
    else
      rhs *= power(v, -exponent[p]);
  }
  return lhs == rhs;
}

std::string IdentityRelation::str() const {
  auto pairs = relevant_pairs(3);
  std::string lhs, rhs;
  for (size_t p = 0; p < pairs.size(); ++p) {
    Integer e = exponent[p];
    std::string& side = e > 0 ? lhs : rhs;
    for (Integer k = 0; k < abs(e); ++k) side += (side.empty() ? "" : "*") + eps_name(3, pairs[p]);
  }
  return lhs + " = " + rhs;
}

std::vector<IdentityRelation> generate_identities() {
  const int n = 3;
  auto pairs = relevant_pairs(n);
  auto P = [&](GradingIndex a, GradingIndex b) {
    return make_pair_sorted(grading_position(n, a), grading_position(n, b));
  };
  using Side = std::vector<IndexPair>;
  const GradingIndex i01{0, 1}, i02{0, 2}, i10{1, 0}, i20{2, 0}, i11{1, 1}, i22{2, 2}, i12{1, 2},
      i21{2, 1};
  const std::vector<std::pair<Side, Side>> reps = {
      {{P(i01, i10), P(i02, i11)}, {P(i01, i20), P(i02, i21)}},
      {{P(i01, i10), P(i01, i11), P(i01, i12)}, {P(i01, i20), P(i01, i22), P(i01, i21)}},
      {{P(i01, i10), P(i01, i12), P(i02, i21)}, {P(i01, i22), P(i01, i21), P(i02, i12)}},
      {{P(i01, i10), P(i01, i11), P(i02, i21)}, {P(i01, i22), P(i01, i21), P(i02, i10)}},
      {{P(i01, i10), P(i01, i11), P(i02, i22)}, {P(i01, i20), P(i01, i22), P(i02, i10)}},
  };
  auto group = enumerate_group(n, true);
  std::vector<IdentityRelation> out;
  std::set<IntVec> seen;
  for (size_t r = 0; r < reps.size(); ++r) {
    for (const auto& g : group) {
      auto perm = permutation_of(g);
      IntVec e(pairs.size(), Integer(0));
      for (const auto& k : reps[r].first) e[pair_index(pairs, permute(perm, k))] += 1;
      for (const auto& k : reps[r].second) e[pair_index(pairs, permute(perm, k))] -= 1;
      for (const auto& v : e)
        if (v != 0) {
          if (v < 0)
            for (auto& w : e) w = -w;
          break;
        }
      if (!seen.insert(e).second) continue;
      out.push_back({e, static_cast<int>(reps[r].first.size()), static_cast<int>(r)});
    }
  }
  return out;
}

ExponentLattice build_exponent_lattice(int n) {
  ExponentLattice L;
  L.n = n;
  L.pairs = relevant_pairs(n);
  auto idx = grading_indices(n);
  const int dim = static_cast<int>(idx.size());
  for (const auto& [i, j] : L.pairs) {
    IntVec row(dim, Integer(0));
    row[i] += 1;
    row[j] += 1;
    row[grading_position(n, plus(n, idx[i], idx[j]))] -= 1;
    L.B.push_back(row);
  }
  L.left_kernel = left_kernel(L.B);
  return L;
}

Matrix normalization_matrix(int n, const Vec& a) {
  auto idx = grading_indices(n);
  const int dim = static_cast<int>(idx.size());
  Matrix m(dim, dim, n);
  for (const auto& [i, j] : relevant_pairs(n)) {
    int k = grading_position(n, plus(n, idx[i], idx[j]));
    m(i, j) = m(j, i) = a[i] * a[j] / a[k];
  }
  return m;
}

Matrix hadamard(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeMismatch("hadamard shape mismatch");
  Matrix m(x.rows(), x.cols(), x.order());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j) * y(i, j);
  return m;
}

NormalizationCertificate normalization_between(const Matrix& x, const Matrix& y,
                                               const ExponentLattice& lattice) {
  const auto& pairs = lattice.pairs;
  std::vector<int> support;
  for (size_t p = 0; p < pairs.size(); ++p) {
    bool zx = value_at(x, pairs[p]).is_zero(), zy = value_at(y, pairs[p]).is_zero();
    if (zx != zy) throw NotComparable("zero patterns differ at " + pair_str(lattice.n, pairs[p]));
    if (!zx) support.push_back(static_cast<int>(p));
  }
  NormalizationCertificate cert;
  const int dim = lattice.n * lattice.n - 1;
  if (support.empty()) {
    cert.ok = true;
    cert.scalings = Vec(dim, CycloNumber(x.order(), 1));
    return cert;
  }
  IntMat bs;
  Vec ratio;
  for (int p : support) {
    bs.push_back(lattice.B[p]);
    ratio.push_back(value_at(y, pairs[p]) / value_at(x, pairs[p]));
  }
  auto expand = [&](const IntVec& u) {
    IntVec full(pairs.size(), Integer(0));
    for (size_t t = 0; t < support.size(); ++t) full[support[t]] = u[t];
    return full;
  };
  auto product = [&](const IntVec& u) {
    CycloNumber v(x.order(), 1);
    for (size_t t = 0; t < u.size(); ++t)
      if (u[t] != 0) v *= power(ratio[t], u[t]);
    return v;
  };
  for (const auto& u : left_kernel(bs)) {
    cert.relations.push_back(expand(u));
    if (!product(u).is_one()) {
      cert.ok = false;
      cert.violated = expand(u);
      return cert;
    }
  }
  cert.ok = true;
  Smith s = smith(bs);
  for (const auto& d : s.diag)
    if (d != 1) return cert;  // roots would be needed; the certificate alone stands
  Vec b(dim, CycloNumber(x.order(), 1));
  for (int i = 0; i < s.rank; ++i) b[i] = product(s.U[i]);
  Vec a(dim, CycloNumber(x.order(), 1));
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      if (s.V[k][i] != 0) a[k] *= power(b[i], s.V[k][i]);
  Matrix scaled = hadamard(normalization_matrix(lattice.n, a), x);
  for (int p : support)
    if (value_at(scaled, pairs[p]) != value_at(y, pairs[p]))
      throw Error("internal: normalization scalings failed verification");
  cert.scalings = a;
  return cert;
}

EquivalenceResult equivalent_unchecked(const Matrix& x, const Matrix& y,
                                       const ExponentLattice& lattice,
                                       const std::vector<SymmetryElement>& group) {
  const auto& pairs = lattice.pairs;
  std::vector<bool> ypattern;
  int yz = 0, xz = 0;
  for (const auto& p : pairs) {
    ypattern.push_back(value_at(y, p).is_zero());
    yz += ypattern.back();
    xz += value_at(x, p).is_zero();
  }
  EquivalenceResult res;
  if (xz != yz) return res;
  // the identity goes first so that equal inputs report the trivial witness
  std::vector<const SymmetryElement*> order;
  for (const auto& g : group)
    if (permutation_of(g).is_identity()) order.insert(order.begin(), &g);
    else order.push_back(&g);
  for (const auto* gp : order) {
    const auto& g = *gp;
    auto perm = permutation_of(g);
    bool match = true;
    for (size_t t = 0; t < pairs.size() && match; ++t)
      match = x(perm(pairs[t].first), perm(pairs[t].second)).is_zero() == ypattern[t];
    if (!match) continue;
    Matrix xp = act_on_contraction(x, perm);
    auto cert = normalization_between(xp, y, lattice);
    if (cert.ok) {
      res.equivalent = true;
      res.element = g;
      res.permutation = perm;
      res.certificate = std::move(cert);
      return res;
    }
  }
  return res;
}

EquivalenceResult equivalent(const Matrix& x, const Matrix& y,
                             const std::vector<ContractionEquation>& system,
                             const ExponentLattice& lattice,
                             const std::vector<SymmetryElement>& group) {
  if (!check_solution(x, system).ok) throw NotASolution("first matrix is not a solution");
  if (!check_solution(y, system).ok) throw NotASolution("second matrix is not a solution");
  return equivalent_unchecked(x, y, lattice, group);
}

std::string continuity_str(Continuity c) {
  switch (c) {
    case Continuity::Continuous:
      return "continuous";
    case Continuity::Discrete:
      return "discrete";
    default:
      return "unknown";
  }
}

namespace {

struct Ineq {
  std::vector<Rational> a;  // a . f >= b
  Rational b;
};

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
}

// scale so the first nonzero coefficient has absolute value 1, then keep the tightest bound
std::vector<Ineq> normalize_rows(std::vector<Ineq> rows) {
  std::map<std::vector<Rational>, Rational> best;
  for (auto& r : rows) {
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return v != 0; });
    if (it != r.a.end()) {
      Rational s = abs(*it);
      for (auto& v : r.a) v /= s;
      r.b /= s;
    }
    auto [pos, inserted] = best.emplace(r.a, r.b);
    if (!inserted && r.b > pos->second) pos->second = r.b;
  }
  std::vector<Ineq> out;
  for (auto& [a, b] : best) out.push_back({a, b});
  return out;
}

// Fourier-Motzkin with a greedy elimination order; returns a rational point or nothing
std::optional<std::vector<Rational>> fourier_motzkin(std::vector<Ineq> rows, int vars) {
  struct Stage {
    int var;
    std::vector<Ineq> rows;
  };
  std::vector<Stage> stages;
  std::vector<bool> alive(vars, true);
  rows = normalize_rows(std::move(rows));
  for (int round = 0; round < vars; ++round) {
    std::vector<Ineq> kept;
    for (auto& r : rows) {
      if (all_zero(r.a)) {
        if (r.b > 0) return std::nullopt;
        continue;
      }
      kept.push_back(std::move(r));
    }
    rows = std::move(kept);
    int best = -1;
    long best_cost = 0;
    for (int v = 0; v < vars; ++v) {
      if (!alive[v]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    const int v = best;
    alive[v] = false;
    stages.push_back({v, rows});
    std::vector<Ineq> next, P, N;
    for (auto& r : rows) {
      if (r.a[v] > 0)
        P.push_back(r);
      else if (r.a[v] < 0)
        N.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : P)
      for (const auto& q : N) {
        Rational sp = -q.a[v], sq = p.a[v];
        Ineq c{std::vector<Rational>(vars), sp * p.b + sq * q.b};
        for (int w = 0; w < vars; ++w) c.a[w] = sp * p.a[w] + sq * q.a[w];
        c.a[v] = 0;
        next.push_back(std::move(c));
      }
    rows = normalize_rows(std::move(next));
  }
  for (const auto& r : rows)
    if (r.b > 0) return std::nullopt;
  std::vector<Rational> f(vars, Rational(0));
  for (auto st = stages.rbegin(); st != stages.rend(); ++st) {
    const int v = st->var;
    std::optional<Rational> lo, hi;
    for (const auto& r : st->rows) {
      if (r.a[v] == 0) continue;
      Rational rest = r.b;
      for (int w = 0; w < vars; ++w)
        if (w != v) rest -= r.a[w] * f[w];
      Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    Rational val = 0;
    if (lo) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      val = (!hi || Rational(c) <= *hi) ? Rational(c) : *lo;
    } else if (hi) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      val = std::min(Rational(0), Rational(fl));
    }
    f[v] = val;
  }
  return f;
}

}  // namespace

std::optional<IntVec> inonu_wigner_weights(const std::vector<bool>& support,
                                           const ExponentLattice& lattice) {
  const int dim = lattice.n * lattice.n - 1;
  const int order = lattice.n;
  std::vector<Vec> eq_rows;
  std::vector<int> zeros;
  for (size_t p = 0; p < lattice.pairs.size(); ++p) {
    if (support[p]) {
      Vec row;
      for (const auto& v : lattice.B[p]) row.push_back(CycloNumber(order, Rational(v)));
      eq_rows.push_back(row);
    } else {
      zeros.push_back(static_cast<int>(p));
    }
  }
  auto to_int = [&](const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    IntVec out;
    for (const auto& r : v) out.push_back(Integer(r * l));
    return out;
  };
  auto verify = [&](const IntVec& w) {
    for (size_t p = 0; p < lattice.pairs.size(); ++p) {
      Integer s = 0;
      for (int k = 0; k < dim; ++k) s += lattice.B[p][k] * w[k];
      if (support[p] ? s != 0 : s < 1) return false;
    }
    return true;
  };
  if (zeros.empty()) return IntVec(dim, Integer(0));
  std::vector<Vec> basis;
  if (eq_rows.empty()) {
    for (int k = 0; k < dim; ++k) basis.push_back(unit_vec(dim, k, order));
  } else {
    basis = nullspace(Matrix::from_rows(eq_rows, dim, order));
  }
  const int m = static_cast<int>(basis.size());
  if (m == 0) return std::nullopt;
  std::vector<Ineq> rows;
  for (int p : zeros) {
    Ineq r{std::vector<Rational>(m), Rational(1)};
    for (int t = 0; t < m; ++t)
      for (int k = 0; k < dim; ++k) r.a[t] += Rational(lattice.B[p][k]) * basis[t][k].coeff(0);
    rows.push_back(std::move(r));
  }
  auto f = fourier_motzkin(std::move(rows), m);
  if (!f) return std::nullopt;
  std::vector<Rational> nvec(dim, Rational(0));
  for (int t = 0; t < m; ++t)
    for (int k = 0; k < dim; ++k) nvec[k] += (*f)[t] * basis[t][k].coeff(0);
  IntVec w = to_int(nvec);
  if (!verify(w)) throw Error("internal: weights failed verification");
  return w;
}

ContinuityVerdict classify_continuity(const Matrix& x,
                                      const std::vector<ContractionEquation>& system,
                                      const std::vector<IdentityRelation>& identities,
                                      const ExponentLattice& lattice) {
  auto check = check_solution(x, system);
  if (!check.ok) throw NotASolution("matrix violates " + system[*check.violated].str(lattice.n));
  ContinuityVerdict v;
  for (size_t i = 0; i < identities.size(); ++i)
    if (!identities[i].holds(x)) {
      v.kind = Continuity::Discrete;
      v.identity = i;
      v.detail = "violates identity " + identities[i].str();
      return v;
    }
  // every continuous solution is a limit of normalizations, so on its support it is
  // normalization-equivalent to the 0/1 matrix with the same pattern
  const int dim = x.rows();
  Matrix ones(dim, dim, x.order());
  std::vector<bool> support;
  for (const auto& p : lattice.pairs) {
    bool nz = !value_at(x, p).is_zero();
    support.push_back(nz);
    if (nz) ones(p.first, p.second) = ones(p.second, p.first) = CycloNumber(x.order(), 1);
  }
  auto cert = normalization_between(x, ones, lattice);
  if (!cert.ok) {
    v.kind = Continuity::Discrete;
    v.kernel_witness = cert.violated;
    std::string rel;
    for (size_t p = 0; p < cert.violated.size(); ++p)
      if (cert.violated[p] != 0)
        rel += (rel.empty() ? "" : " ") + eps_name(lattice.n, lattice.pairs[p]) + "^" +
               cert.violated[p].get_str();
    v.detail = "support relation violated: " + rel;
    return v;
  }
  if (auto w = inonu_wigner_weights(support, lattice)) {
    v.kind = Continuity::Continuous;
    v.weights = *w;
    std::string s;
    for (const auto& k : *w) s += (s.empty() ? "" : ",") + k.get_str();
    v.detail = "weights n = (" + s + ")";
    return v;
  }
  v.kind = Continuity::Unknown;
  v.detail = "no violated identity and no integer weights";
  return v;
}

std::vector<ProductConstraint> build_nonequivalence_system(const std::vector<IndexPair>& P,
                                                           const std::vector<SymmetryElement>& group) {
  if (P.empty()) throw Error("empty pair set");
  std::set<ProductConstraint> seen;
  std::vector<ProductConstraint> out;
  for (const auto& g : group) {
    auto perm = permutation_of(g);
    ProductConstraint c;
    for (const auto& k : P) c.push_back(permute(perm, k));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

bool satisfies(const Matrix& x, const std::vector<ProductConstraint>& constraints) {
  for (const auto& c : constraints) {
    bool zero = false;
    for (const auto& p : c)
      if (value_at(x, p).is_zero()) {
        zero = true;
        break;
      }
    if (!zero) return false;
  }
  return true;
}

RedundancyReport coset_redundancy(const std::vector<ContractionEquation>& system) {
  const int n = 3;
  const IndexTuple seed = {grading_position(n, {0, 1}), grading_position(n, {0, 2}),
                           grading_position(n, {1, 0})};
  int orbit_a = -1;
  for (const auto& e : system)
    if (e.source_triple == seed) orbit_a = e.orbit;
  if (orbit_a < 0) throw Error("system lacks the triple (01)(02)(10)");

  // equations as vectors over the monomials eps_p eps_q
  std::map<std::pair<IndexPair, IndexPair>, int> column;
  for (const auto& e : system)
    for (const auto& t : e.terms) column.emplace(std::make_pair(t.p1, t.p2), 0);
  int c = 0;
  for (auto& [k, v] : column) v = c++;
  auto as_vec = [&](const ContractionEquation& e) {
    Vec v = zero_vec(c, n);
    for (const auto& t : e.terms) v[column[{t.p1, t.p2}]] += t.coeff;
    return v;
  };
  std::map<IndexTuple, Vec> by_triple;
  std::vector<Vec> in_a, others;
  for (const auto& e : system) {
    Vec v = as_vec(e);
    if (e.orbit == orbit_a) {
      by_triple[e.source_triple] = v;
      in_a.push_back(v);
    } else {
      others.push_back(v);
    }
  }
  RedundancyReport rep;
  rep.orbit_size = static_cast<int>(in_a.size());
  rep.rank = rank(Matrix::from_rows(in_a, c, n));
  rep.redundant = rep.orbit_size - rep.rank;
  if (!others.empty()) rep.other_orbit_rank = rank(Matrix::from_rows(others, c, n));

  const SymmetryElement X{1, 2, 0, 1, 3};
  std::set<std::set<IndexTuple>> cosets;
  for (const auto& A : enumerate_group(n, true)) {
    std::set<IndexTuple> coset;
    SymmetryElement g = A;
    for (int k = 0; k < 3; ++k) {
      coset.insert(permute(permutation_of(g), seed));
      g = X * g;
    }
    cosets.insert(coset);
  }
  rep.cosets = static_cast<int>(cosets.size());
  for (const auto& coset : cosets) {
    std::vector<Vec> rows;
    for (const auto& t : coset) {
      auto it = by_triple.find(t);
      if (it == by_triple.end()) throw Error("coset triple outside the orbit");
      rows.push_back(it->second);
    }
    if (rows.size() == 3 && rank(Matrix::from_rows(rows, c, n)) < 3) ++rep.dependent_cosets;
  }
  return rep;
}

bool pattern_matches(const std::string& pattern, const Bindings& b, int order) {
  for (const auto& [k, v] : pattern_bindings(pattern, order)) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) return false;
  }
  return true;
}

Bindings pattern_bindings(const std::string& pattern, int order) {
  Bindings out;
  if (trim(pattern) == "*") return out;
  for (const auto& part : split(pattern, ',')) {
    auto [k, v] = parse_binding(part, order);
    out[k] = v;
  }
  return out;
}

std::vector<SolutionRecord> parse_solution_file(std::string_view text, const std::string& source,
                                                int n) {
  std::vector<SolutionRecord> out;
  std::set<std::string> ids;
  std::vector<std::string> lines = split(text, '\n');
  size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].empty() || lines[i][0] == '#') {
      ++i;
      continue;
    }
    SolutionRecord rec;
    rec.line = static_cast<int>(i + 1);
    std::optional<std::set<char>> declared;
    std::string body;
    int body_line = 0;
    for (; i < lines.size() && !lines[i].empty(); ++i) {
      const std::string& l = lines[i];
      if (l[0] == '#') continue;
      auto eq = l.find('=');
      bool header = eq != std::string::npos && std::all_of(l.begin(), l.begin() + eq, [](char ch) {
                      return std::isalpha(static_cast<unsigned char>(ch));
                    });
      auto fail = [&](const std::string& msg) {
        throw ParseError(source + ":" + std::to_string(i + 1) + ": " + msg);
      };
      if (!header) {
        if (!body_line) body_line = static_cast<int>(i + 1);
        body += l + "\n";
        continue;
      }
      std::string key = l.substr(0, eq), val = trim(l.substr(eq + 1));
      if (key == "id") {
        rec.id = val;
      } else if (key == "nu") {
        try {
          rec.nu = std::stoi(val);
        } catch (const std::exception&) {
          fail("bad nu value '" + val + "'");
        }
      } else if (key == "tag") {
        if (val != "C" && val != "D" && val != "mixed") fail("bad tag '" + val + "'");
        rec.tag = val;
      } else if (key == "cond") {
        auto colon = val.rfind(':');
        if (colon == std::string::npos) fail("condition lacks ':'");
        std::string t = trim(val.substr(colon + 1));
        if (t != "C" && t != "D") fail("bad condition tag '" + t + "'");
        rec.conditions.push_back({trim(val.substr(0, colon)), t});
      } else if (key == "note") {
        rec.notes.push_back(val);
      } else if (key == "params") {
        declared = std::set<char>();
        for (const auto& p : split(val, ','))
          if (!p.empty()) {
            if (p.size() != 1 || p[0] < 'a' || p[0] > 'f') fail("bad parameter name '" + p + "'");
            declared->insert(p[0]);
          }
      } else if (key == "step") {
        try {
          rec.step = std::stoi(val);
        } catch (const std::exception&) {
          fail("bad step value '" + val + "'");
        }
      } else {
        fail("unknown header '" + key + "'");
      }
    }
    std::string where = source + ":" + std::to_string(rec.line);
    if (rec.id.empty()) throw ParseError(where + ": entry without id");
    if (!ids.insert(rec.id).second) throw ParseError(where + ": duplicate id " + rec.id);
    try {
      rec.matrix = parse_matrix(body, n, declared);
    } catch (const ParseError& e) {
      throw ParseError(source + ": entry " + rec.id + " (matrix from line " +
                       std::to_string(body_line) + "): " + e.what());
    }
    if (rec.tag == "mixed" && rec.conditions.empty())
      throw ParseError(where + ": entry " + rec.id + " is mixed without conditions");
    for (const auto& [pat, t] : rec.conditions) {
      try {
        for (const auto& [k, v] : pattern_bindings(pat, n))
          if (!rec.matrix.params.count(k))
            throw ParseError(std::string("condition names undeclared parameter ") + k);
      } catch (const Error& e) {
        throw ParseError(where + ": entry " + rec.id + ": " + e.what());
      }
    }
    if (rec.nu && *rec.nu != rec.matrix.zero_count())
      throw ParseError(where + ": entry " + rec.id + " declares nu=" + std::to_string(*rec.nu) +
                       " but has " + std::to_string(rec.matrix.zero_count()) + " zeros");
    if (!rec.notes.empty()) {
      std::string s;
      for (const auto& note : rec.notes) s += (s.empty() ? "" : "; ") + note;
      rec.matrix.side_conditions = s;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace liecontract
