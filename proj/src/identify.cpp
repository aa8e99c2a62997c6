#include "liecontract/identify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

// rows of all ad(e_j) stacked: x in the kernel iff [e_j, x] = 0 for every j
Matrix stacked_ad(const LieAlgebra& alg) {
  const int n = alg.dim();
  Matrix m(n * n, n, alg.order());
  for (int j = 0; j < n; ++j) {
    Matrix a = alg.ad_basis(j);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(j * n + r, c) = a(r, c);
  }
  return m;
}

Subspace kernel_span(const Matrix& m, int ambient, int order) {
  return Subspace::span(ambient, order, nullspace(m));
}

// Incremental echelon basis; rows are reduced in insertion order.
class Echelon {
 public:
  Echelon(int ambient, int order) : ambient_(ambient), order_(order) {}
  // true when v was independent and got added
  bool insert(Vec v) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const CycloNumber& f = v[piv_[i]];
      if (!f.is_zero()) axpy(v, -f, rows_[i]);
    }
    int p = -1;
    for (int i = 0; i < ambient_; ++i)
      if (!v[i].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return false;
    v = scale(v[p].inverse(), v);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  int ambient_, order_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Vec& v, int n, int order) {
  Matrix m(n, n, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<size_t>(i) * n + j];
  return m;
}

bool is_nilpotent_matrix(const Matrix& m) {
  Matrix p = m;
  for (int k = 1; k < m.rows() && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

Matrix power(const Matrix& m, int e) {
  Matrix r = Matrix::identity(m.rows(), m.order());
  for (int k = 0; k < e; ++k) r = r * m;
  return r;
}

std::vector<Vec> column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.rows(), m.order(), cols).basis();
}

// linear maps commuting with every ad e_i
std::vector<Matrix> centroid(const LieAlgebra& alg) {
  const int n = alg.dim();
  SparseSystem sys(n * n, alg.order());
  for (int i = 0; i < n; ++i) {
    Matrix a = alg.ad_basis(i);
    if (a.is_zero()) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        SparseSystem::Row row;
        for (int m = 0; m < n; ++m) {
          if (!a(m, c).is_zero()) row.push_back({r * n + m, a(m, c)});
          if (!a(r, m).is_zero()) row.push_back({m * n + c, -a(r, m)});
        }
        sys.add_row(std::move(row));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : sys.nullspace()) out.push_back(unflatten(v, n, alg.order()));
  return out;
}

// connected classes of basis indices under "bracket involves both"
std::vector<std::vector<int>> bracket_components(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [key, v] : alg.constants().table()) {
    unite(key.first, key.second);
    for (int k = 0; k < n; ++k)
      if (!v[k].is_zero()) unite(key.first, k);
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

std::optional<std::pair<std::vector<Vec>, std::vector<Vec>>> fitting_split(const LieAlgebra& alg,
                                                                           const std::vector<Matrix>& cent) {
  const int n = alg.dim();
  const int ord = alg.order();
  std::vector<CycloNumber> lambdas;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      lambdas.push_back(CycloNumber(ord, static_cast<long>(a)) +
                        CycloNumber(ord, static_cast<long>(b)) * CycloNumber::root_power(ord, 1));
  std::vector<Matrix> candidates = cent;
  for (size_t i = 0; i + 1 < cent.size(); ++i) candidates.push_back(cent[i] + cent[i + 1]);
  for (const auto& T : candidates) {
    for (const auto& lam : lambdas) {
      Matrix shifted = T - Matrix::identity(n, ord).scaled(lam);
      if (!determinant(shifted).is_zero()) continue;
      Matrix p = power(shifted, n);
      auto ker = nullspace(p);
      if (ker.empty() || static_cast<int>(ker.size()) == n) continue;
      return std::make_pair(Subspace::span(n, ord, ker).basis(), column_space(p));
    }
  }
  return std::nullopt;
}

void split_rec(const LieAlgebra& alg, const std::vector<Vec>& basis, Decomposition& out) {
  const int n = alg.dim();
  if (n == 0) return;
  auto to_input = [&](const Vec& local) {
    Vec v = zero_vec(static_cast<int>(basis.front().size()), alg.order());
    for (int i = 0; i < n; ++i)
      if (!local[i].is_zero()) axpy(v, local[i], basis[i]);
    return v;
  };
  auto comps = bracket_components(alg);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      std::vector<Vec> local, global;
      for (int i : comp) {
        local.push_back(alg.unit(i));
        global.push_back(basis[i]);
      }
      split_rec(restrict_to(alg, local), global, out);
    }
    return;
  }
  auto cent = centroid(alg);
  bool local_algebra = true;
  if (cent.size() > 1) {
    for (size_t i = 0; i < cent.size() && local_algebra; ++i)
      for (size_t j = i + 1; j < cent.size() && local_algebra; ++j)
        if (cent[i] * cent[j] != cent[j] * cent[i]) local_algebra = false;
    for (size_t i = 0; i < cent.size() && local_algebra; ++i) {
      CycloNumber lam = cent[i].trace() / CycloNumber(alg.order(), static_cast<long>(n));
      if (!is_nilpotent_matrix(cent[i] - Matrix::identity(n, alg.order()).scaled(lam))) local_algebra = false;
    }
  }
  if (local_algebra) {
    out.parts.push_back(alg);
    out.bases.push_back(basis);
    return;
  }
  auto split = fitting_split(alg, cent);
  if (!split) {
    out.parts.push_back(alg);
    out.bases.push_back(basis);
    out.undetermined = true;
    return;
  }
  for (const auto* half : {&split->first, &split->second}) {
    std::vector<Vec> global;
    for (const auto& v : *half) global.push_back(to_input(v));
    split_rec(restrict_to(alg, *half), global, out);
  }
}

}  // namespace

Subspace center(const LieAlgebra& alg) {
  if (alg.dim() == 0) return Subspace(0, alg.order());
  return kernel_span(stacked_ad(alg), alg.dim(), alg.order());
}

Subspace derived_algebra(const LieAlgebra& alg) {
  std::vector<Vec> vs;
  for (const auto& [key, v] : alg.constants().table()) vs.push_back(v);
  return Subspace::span(alg.dim(), alg.order(), vs);
}

Subspace bracket_space(const LieAlgebra& alg, const Subspace& A, const Subspace& B) {
  std::vector<Vec> vs;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) {
      Vec v = alg.bracket(a, b);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(alg.dim(), alg.order(), vs);
}

bool is_ideal(const LieAlgebra& alg, const Subspace& S) {
  for (int i = 0; i < alg.dim(); ++i)
    for (const auto& s : S.basis())
      if (!S.contains(alg.bracket(alg.unit(i), s))) return false;
  return true;
}

CentralSplit split_central(const LieAlgebra& alg) {
  const int n = alg.dim(), ord = alg.order();
  Subspace C = center(alg), D = derived_algebra(alg);
  Subspace acc = C.intersect(D);
  std::vector<Vec> central;
  for (const auto& c : C.basis()) {
    if (acc.contains(c)) continue;
    central.push_back(c);
    acc = acc + Subspace::span(n, ord, {c});
  }
  Subspace with_central = D + Subspace::span(n, ord, central);
  std::vector<Vec> core_basis = D.basis();
  for (auto& v : with_central.complement_basis()) core_basis.push_back(std::move(v));
  CentralSplit out{core_basis.empty() ? LieAlgebra(0, ord) : restrict_to(alg, core_basis),
                   static_cast<int>(central.size()), core_basis};
  return out;
}

Decomposition decompose(const LieAlgebra& alg) {
  Decomposition out;
  std::vector<Vec> basis;
  for (int i = 0; i < alg.dim(); ++i) basis.push_back(alg.unit(i));
  split_rec(alg, basis, out);
  return out;
}

Subspace radical(const LieAlgebra& alg) {
  Subspace D = derived_algebra(alg);
  if (D.dim() == 0) return Subspace::whole(alg.dim(), alg.order());
  return kernel_span(trace_form(alg, D).transpose(), alg.dim(), alg.order());
}

bool is_semisimple(const LieAlgebra& alg) { return alg.dim() > 0 && radical(alg).dim() == 0; }

NilradicalResult nilradical(const LieAlgebra& alg) {
  const int n = alg.dim(), ord = alg.order();
  Subspace R = radical(alg);
  NilradicalResult res{Subspace(n, ord), true};
  if (R.dim() == 0) return res;
  // unital associative algebra generated by ad(R)
  std::vector<Matrix> gens;
  for (const auto& r : R.basis()) gens.push_back(alg.ad(r));
  Echelon ech(n * n, ord);
  std::vector<Matrix> span, frontier;
  auto add = [&](const Matrix& m) {
    if (ech.insert(flatten(m))) {
      span.push_back(m);
      frontier.push_back(m);
    }
  };
  add(Matrix::identity(n, ord));
  for (const auto& g : gens) add(g);
  while (!frontier.empty()) {
    std::vector<Matrix> cur;
    cur.swap(frontier);
    for (const auto& m : cur)
      for (const auto& g : gens) add(g * m);
  }
  // x = sum y_r R_r with Tr(ad x * M) = 0 for every M in the span
  Matrix sys(static_cast<int>(span.size()), R.dim(), ord);
  for (size_t a = 0; a < span.size(); ++a)
    for (int r = 0; r < R.dim(); ++r) sys(static_cast<int>(a), r) = (gens[r] * span[a]).trace();
  std::vector<Vec> nil;
  for (const auto& y : nullspace(sys)) {
    Vec x = zero_vec(n, ord);
    for (int r = 0; r < R.dim(); ++r)
      if (!y[r].is_zero()) axpy(x, y[r], R.basis()[r]);
    nil.push_back(std::move(x));
  }
  res.space = Subspace::span(n, ord, nil);
  if (!is_ideal(alg, res.space)) res.verified = false;
  for (const auto& b : res.space.basis())
    if (!is_nilpotent_matrix(alg.ad(b))) res.verified = false;
  return res;
}

Series derived_series(const LieAlgebra& alg) {
  Series s;
  Subspace cur = Subspace::whole(alg.dim(), alg.order());
  s.dims.push_back(cur.dim());
  s.chain.push_back(cur);
  Subspace nxt = bracket_space(alg, cur, cur);
  s.dims.push_back(nxt.dim());
  s.chain.push_back(nxt);
  while (true) {
    cur = nxt;
    nxt = bracket_space(alg, cur, cur);
    if (nxt.dim() == cur.dim()) break;
    s.dims.push_back(nxt.dim());
    s.chain.push_back(nxt);
  }
  return s;
}

Series lower_central_series(const LieAlgebra& alg) {
  Series s;
  Subspace whole = Subspace::whole(alg.dim(), alg.order());
  s.dims.push_back(whole.dim());
  s.chain.push_back(whole);
  Subspace cur = bracket_space(alg, whole, whole);
  s.dims.push_back(cur.dim());
  s.chain.push_back(cur);
  while (true) {
    Subspace nxt = bracket_space(alg, whole, cur);
    if (nxt.dim() == cur.dim()) break;
    s.dims.push_back(nxt.dim());
    s.chain.push_back(nxt);
    cur = nxt;
  }
  return s;
}

Series upper_central_series(const LieAlgebra& alg) {
  const int n = alg.dim(), ord = alg.order();
  Series s;
  Subspace cur = center(alg);
  s.dims.push_back(cur.dim());
  s.chain.push_back(cur);
  if (n == 0) return s;
  std::vector<Matrix> ads;
  for (int j = 0; j < n; ++j) ads.push_back(alg.ad_basis(j));
  while (cur.dim() < n) {
    // x with [e_j, x] in cur for every j
    Matrix m(n * n, n, ord);
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c) {
        Vec col = cur.reduce(ads[j].col(c));
        for (int r = 0; r < n; ++r) m(j * n + r, c) = col[r];
      }
    Subspace nxt = kernel_span(m, n, ord);
    if (nxt.dim() == cur.dim()) break;
    s.dims.push_back(nxt.dim());
    s.chain.push_back(nxt);
    cur = nxt;
  }
  return s;
}

DerivationAlgebra derivation_algebra(const LieAlgebra& alg) {
  const int n = alg.dim(), ord = alg.order();
  if (n == 0) return {{}, LieAlgebra(0, ord)};
  // by_jk[j][k]: (m, c_mj^k)
  std::vector<std::vector<std::vector<std::pair<int, CycloNumber>>>> by_jk(
      n, std::vector<std::vector<std::pair<int, CycloNumber>>>(n));
  for (const auto& e : alg.entries()) {
    by_jk[e.j][e.k].push_back({e.i, e.c});
    by_jk[e.i][e.k].push_back({e.j, -e.c});
  }
  auto var = [n](int a, int b) { return a * n + b; };
  SparseSystem sys(n * n, ord);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec* bij = alg.constants().find(i, j);
      for (int k = 0; k < n; ++k) {
        SparseSystem::Row row;
        if (bij)
          for (int m = 0; m < n; ++m)
            if (!(*bij)[m].is_zero()) row.push_back({var(k, m), (*bij)[m]});
        for (const auto& [m, c] : by_jk[j][k]) row.push_back({var(m, i), -c});
        // c_im^k = -c_mi^k
        for (const auto& [m, c] : by_jk[i][k]) row.push_back({var(m, j), c});
        sys.add_row(std::move(row));
      }
    }
  auto null = sys.nullspace();
  DerivationAlgebra out{{}, LieAlgebra(static_cast<int>(null.size()), ord)};
  for (const auto& v : null) out.basis.push_back(unflatten(v, n, ord));
  const int r = static_cast<int>(null.size());
  if (r == 0) return out;
  CoordinateMap cm(null, n * n, ord);
  StructureConstants sc(r, ord);
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) {
      Matrix comm = out.basis[p] * out.basis[q] - out.basis[q] * out.basis[p];
      if (comm.is_zero()) continue;
      auto c = cm.coordinates(flatten(comm));
      if (!c) throw Error("commutator of derivations left the derivation space");
      sc.set(p, q, *c);
    }
  out.as_lie = LieAlgebra(std::move(sc));
  return out;
}

std::vector<int> der_tower(const LieAlgebra& alg, int depth_cap) {
  if (depth_cap < 1) throw Error("depth cap must be at least 1");
  std::vector<int> tower;
  LieAlgebra cur = alg;
  while (static_cast<int>(tower.size()) < depth_cap) {
    DerivationAlgebra d = derivation_algebra(cur);
    int dim = static_cast<int>(d.basis.size());
    if (!tower.empty() && dim == tower.back()) break;
    tower.push_back(dim);
    cur = std::move(d.as_lie);
  }
  return tower;
}

FormalInvariants formal_invariant_count(const LieAlgebra& alg, uint64_t seed) {
  const int n = alg.dim(), ord = alg.order();
  FormalInvariants res{n, 0};
  if (n == 0 || alg.is_abelian()) return res;
  auto batch_max = [&](uint64_t s) {
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    int best = 0;
    for (int t = 0; t < 3; ++t) {
      std::vector<CycloNumber> x;
      for (int k = 0; k < n; ++k) x.push_back(CycloNumber(ord, dist(rng)));
      Matrix m(n, n, ord);
      for (const auto& e : alg.entries()) {
        CycloNumber v = e.c * x[e.k];
        m(e.i, e.j) += v;
        m(e.j, e.i) -= v;
      }
      best = std::max(best, rank(m));
    }
    return best;
  };
  int a = batch_max(seed), b = batch_max(seed ^ 0x9e3779b97f4a7c15ULL);
  uint64_t extra = seed + 1;
  while (a != b) {
    a = std::max(a, b);
    b = batch_max(extra++ * 0x2545f4914f6cdd1dULL);
  }
  res.generic_rank = a;
  res.tau = n - a;
  return res;
}

CasimirCheck verify_casimir(const LieAlgebra& alg, const Polynomial& F) {
  const int n = alg.dim();
  if (F.nvars() != n) throw ShapeMismatch("polynomial arity does not match the algebra");
  std::vector<Polynomial> partial;
  for (int j = 0; j < n; ++j) partial.push_back(F.derivative(j));
  for (int i = 0; i < n; ++i) {
    Polynomial acc(n, alg.order());
    for (int j = 0; j < n; ++j) {
      if (i == j || partial[j].is_zero()) continue;
      Vec b = alg.basis_bracket(i, j);
      Polynomial lin(n, alg.order());
      for (int k = 0; k < n; ++k)
        if (!b[k].is_zero()) lin = lin + Polynomial::variable(n, k, alg.order()).scaled(b[k]);
      if (!lin.is_zero()) acc = acc + lin * partial[j];
    }
    if (!acc.is_zero()) return {false, i};
  }
  return {true, std::nullopt};
}

bool verify_isomorphism(const Matrix& A, const LieAlgebra& L1, const LieAlgebra& L2) {
  const int n = L1.dim();
  if (L2.dim() != n || A.rows() != n || A.cols() != n) return false;
  if (determinant(A).is_zero()) return false;
  std::vector<Vec> cols;
  for (int j = 0; j < n; ++j) cols.push_back(A.col(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L2.bracket(cols[i], cols[j]) != A * L1.basis_bracket(i, j)) return false;
  return true;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return dim == o.dim && derived_dims == o.derived_dims && lower_central_dims == o.lower_central_dims &&
         upper_central_dims == o.upper_central_dims && dim_der == o.dim_der && tau == o.tau &&
         center_dim == o.center_dim && solvable == o.solvable && nilpotent == o.nilpotent &&
         semisimple == o.semisimple && der_tower == o.der_tower;
}

std::string dims_str(const std::vector<int>& dims) {
  std::string s;
  for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "dim=" << dim << " ds=" << dims_str(derived_dims) << " lcs=" << dims_str(lower_central_dims)
     << " ucs=" << dims_str(upper_central_dims) << " der=" << dim_der << " tau=" << tau
     << " center=" << center_dim << " solvable=" << yn(solvable) << " nilpotent=" << yn(nilpotent)
     << " semisimple=" << yn(semisimple) << " tower=" << dims_str(der_tower);
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& alg, const FingerprintOptions& opt) {
  Fingerprint fp;
  fp.dim = alg.dim();
  fp.derived_dims = derived_series(alg).dims;
  fp.lower_central_dims = lower_central_series(alg).dims;
  fp.upper_central_dims = upper_central_series(alg).dims;
  fp.der_tower = der_tower(alg, std::max(1, opt.tower_depth));
  fp.dim_der = fp.der_tower.front();
  fp.tau = formal_invariant_count(alg, opt.seed).tau;
  fp.center_dim = fp.upper_central_dims.front();
  fp.solvable = fp.derived_dims.back() == 0;
  fp.nilpotent = fp.lower_central_dims.back() == 0;
  fp.semisimple = is_semisimple(alg);
  return fp;
}

}  // namespace liecontract
