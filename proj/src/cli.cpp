#include "liecontract/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liecontract/catalog.hpp"
#include "liecontract/errors.hpp"

namespace liecontract {

namespace {

struct Config {
  int n = 3;
  std::string data;
  std::string solution;
  std::string file;
  std::vector<std::string> bindings;
  std::vector<std::string> ids;
  std::string brackets;
  int dim = 0;
  uint64_t seed = 1;
  int jobs = 1;
  int tower_depth = 1;
  bool allow_zero = false;
  bool no_expected = false;
  bool pairwise = false;
  bool timing = false;
  std::string output;
  int verbosity = 0;
};

// user input problems map to exit code 2
struct UsageError : Error {
  using Error::Error;
};

std::string data_dir(const Config& c) { return c.data.empty() ? default_data_dir() : c.data; }

struct Loaded {
  std::vector<CatalogEntry> entries;
  const SolutionRecord* record = nullptr;
};

Loaded load_solution(const Config& c, const std::string& id_in) {
  Loaded l;
  if (!c.file.empty()) {
    auto recs = parse_solution_file(read_file(c.file), c.file);
    for (auto& r : recs) l.entries.push_back({std::move(r), Source::AppendixA});
  } else {
    l.entries = load_catalog(data_dir(c));
  }
  std::string id = id_in;
  if (id.empty()) {
    if (!c.file.empty() && l.entries.size() == 1) {
      l.record = &l.entries.front().record;
      return l;
    }
    throw UsageError("--solution is required");
  }
  const CatalogEntry* e = find_entry(l.entries, id);
  if (!e) e = find_entry(l.entries, "eps_" + id);
  if (!e) throw UsageError("unknown solution '" + id + "'");
  l.record = &e->record;
  return l;
}

Bindings cli_bindings(const Config& c, const ContractionMatrix& eps) {
  Bindings b = default_bindings(eps.params);
  for (const auto& text : c.bindings) {
    auto [k, v] = parse_binding(text);
    if (!eps.params.count(k)) throw UsageError(std::string("solution has no parameter ") + k);
    if (v.is_zero() && !c.allow_zero) throw UsageError(std::string("zero binding for ") + k + " needs --allow-zero");
    b[k] = v;
  }
  return b;
}

Matrix cli_instance(const Config& c, const ContractionMatrix& eps, const std::vector<ContractionEquation>& system) {
  return instantiate_any(eps, cli_bindings(c, eps), system);
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

int cmd_gen_system(const Config& c, std::ostream& out) {
  auto sys = generate_system(c.n);
  std::ostringstream os;
  int orbit = -1;
  for (const auto& eq : sys) {
    if (eq.orbit != orbit) {
      orbit = eq.orbit;
      int size = static_cast<int>(std::count_if(sys.begin(), sys.end(), [&](const auto& e) { return e.orbit == orbit; }));
      os << "# orbit " << orbit + 1 << ": " << size << " equations\n";
    }
    os << eq.str(c.n) << "\n";
  }
  os << sys.size() << " equations\n";
  emit(c, out, os.str());
  return 0;
}

int cmd_gen_identities(const Config& c, std::ostream& out) {
  auto ids = generate_identities();
  std::ostringstream os;
  int orbit = -1;
  for (const auto& r : ids) {
    if (r.orbit != orbit) {
      orbit = r.orbit;
      int size = static_cast<int>(std::count_if(ids.begin(), ids.end(), [&](const auto& e) { return e.orbit == orbit; }));
      os << "# orbit " << orbit + 1 << ": order " << r.order << ", " << size << " relations\n";
    }
    os << r.str() << "\n";
  }
  os << ids.size() << " identities\n";
  emit(c, out, os.str());
  return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
  auto l = load_solution(c, c.solution);
  auto sys = generate_system(3);
  Matrix x = cli_instance(c, l.record->matrix, sys);
  auto r = check_solution(x, sys);
  std::ostringstream os;
  os << l.record->id << ": ";
  if (r.ok)
    os << "solution ok (" << sys.size() << " equations)\n";
  else
    os << "not a solution, equation " << *r.violated + 1 << " fails: " << sys[*r.violated].str(3) << "\n";
  emit(c, out, os.str());
  return r.ok ? 0 : 1;
}

int cmd_equiv(const Config& c, std::ostream& out) {
  if (c.ids.size() != 2) throw UsageError("equiv needs two solution ids");
  auto a = load_solution(c, c.ids[0]);
  auto b = load_solution(c, c.ids[1]);
  auto sys = generate_system(3);
  Matrix x = cli_instance(c, a.record->matrix, sys), y = cli_instance(c, b.record->matrix, sys);
  auto res = equivalent(x, y, sys, build_exponent_lattice(3), enumerate_group(3, false));
  std::ostringstream os;
  if (res.equivalent) {
    os << "equivalent via " << res.element->str();
    if (res.certificate.scalings) os << ", scalings " << vec_str(*res.certificate.scalings);
    os << "\n";
  } else {
    os << "not equivalent\n";
  }
  emit(c, out, os.str());
  return 0;
}

int cmd_classify(const Config& c, std::ostream& out) {
  auto l = load_solution(c, c.solution);
  auto sys = generate_system(3);
  auto ids = generate_identities();
  Matrix x = cli_instance(c, l.record->matrix, sys);
  auto v = classify_continuity(x, sys, ids, build_exponent_lattice(3));
  std::ostringstream os;
  os << l.record->id << ": " << continuity_str(v.kind) << "\n";
  if (v.kind == Continuity::Continuous) {
    os << "weights:";
    for (const auto& w : v.weights) os << " " << w.get_str();
    os << "\n";
  } else if (v.identity) {
    os << "violated identity: " << ids[*v.identity].str() << "\n";
  } else if (v.kernel_witness) {
    os << "violated support relation:";
    for (const auto& w : *v.kernel_witness) os << " " << w.get_str();
    os << "\n";
  }
  if (!v.detail.empty() && c.verbosity > 0) os << "detail: " << v.detail << "\n";
  emit(c, out, os.str());
  return v.kind == Continuity::Unknown ? 1 : 0;
}

int cmd_contract(const Config& c, std::ostream& out) {
  auto l = load_solution(c, c.solution);
  auto sys = generate_system(3);
  Matrix x = cli_instance(c, l.record->matrix, sys);
  LieAlgebra L = apply_contraction(pauli_algebra(3), x);
  emit(c, out, L.dump());
  return 0;
}

std::string describe(const LieAlgebra& L, const Config& c) {
  std::ostringstream os;
  Fingerprint fp = fingerprint(L, {c.tower_depth, c.seed});
  os << "fingerprint: " << fp.str() << "\n";
  auto cs = split_central(L);
  os << "central split: core dim " << cs.core.dim() << ", abelian " << cs.abelian_dim << "\n";
  auto dec = decompose(cs.core);
  os << "decomposition: " << dec.parts.size() << " part(s)" << (dec.undetermined ? " undetermined" : "") << "\n";
  for (size_t i = 0; i < dec.parts.size(); ++i)
    os << "  part " << i + 1 << ": " << fingerprint(dec.parts[i], {1, c.seed}).str() << "\n";
  auto nr = nilradical(L);
  os << "radical dim: " << radical(L).dim() << "\n";
  os << "nilradical dim: " << nr.space.dim() << (nr.verified ? "" : " unverified-maximality") << "\n";
  return os.str();
}

int cmd_identify(const Config& c, std::ostream& out) {
  if (!c.brackets.empty()) {
    if (c.dim <= 0) throw UsageError("--brackets needs --dim");
    Bindings b;
    for (const auto& text : c.bindings) {
      auto [k, v] = parse_binding(text);
      b[k] = v;
    }
    LieAlgebra L = algebra_from_text(c.brackets, c.dim, b);
    if (!jacobi_defect(L).empty()) throw UsageError("brackets violate the Jacobi identity");
    emit(c, out, describe(L, c));
    return 0;
  }
  auto l = load_solution(c, c.solution);
  auto sys = generate_system(3);
  Matrix x = cli_instance(c, l.record->matrix, sys);
  emit(c, out, l.record->id + "\n" + describe(apply_contraction(pauli_algebra(3), x), c));
  return 0;
}

std::string summary_lines(const CatalogSummary& s, const CatalogOptions& opt) {
  std::string full = render_report(s, opt);
  return full.substr(0, full.find("records\n"));
}

int cmd_catalog(const Config& c, std::ostream& out, bool full) {
  CatalogOptions opt;
  opt.seed = c.seed;
  opt.jobs = c.jobs;
  opt.expected = !c.no_expected;
  opt.timing = c.timing;
  auto s = verify_catalog(data_dir(c), opt);
  std::string text = full ? render_report(s, opt) : summary_lines(s, opt);
  bool ok = s.ok();
  if (c.pairwise) {
    auto entries = load_catalog(data_dir(c));
    auto ctx = CatalogContext::build();
    auto pr = pairwise_inequivalence(entries, ctx, c.jobs);
    std::ostringstream os;
    os << "pairwise\n  pairs: " << pr.pairs << "\n  equivalent: " << pr.equivalent_pairs.size() << "\n";
    for (const auto& [a, b] : pr.equivalent_pairs) os << "    " << a << " ~ " << b << "\n";
    text += os.str();
    ok = ok && pr.equivalent_pairs.empty();
  }
  if (full || c.output.empty()) {
    emit(c, out, text);
  } else {
    // summary on stdout, full report in the file
    out << text;
    emit(c, out, render_report(s, opt));
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Graded contractions of Pauli-graded sl(3): generation, verification and identification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data", c.data, "data directory (default: $LIECONTRACT_DATA or the bundled data)");
  app.add_option("-o,--output", c.output, "write the result to a file");
  app.add_flag("-v,--verbose", c.verbosity, "more detail");

  auto solution_opts = [&](CLI::App* sub) {
    sub->add_option("--solution", c.solution, "catalog id such as eps_15_7 (the eps_ prefix may be omitted)");
    sub->add_option("--file", c.file, "read solutions from this file instead of the catalog");
    sub->add_option("-p,--param", c.bindings, "parameter binding such as a=2/3");
    sub->add_flag("--allow-zero", c.allow_zero, "accept zero parameter values (boundary solutions)");
  };

  auto* gen_system = app.add_subcommand("gen-system", "print the quadratic contraction system");
  gen_system->add_option("--n", c.n, "order of the grading (3 or 5)")->check(CLI::IsMember({2, 3, 5}));
  auto* gen_identities = app.add_subcommand("gen-identities", "print the higher-order identities");
  auto* verify = app.add_subcommand("verify", "check that a solution satisfies the system");
  solution_opts(verify);
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two solutions");
  equiv->add_option("ids", c.ids, "two solution ids")->expected(2);
  equiv->add_option("--file", c.file, "read solutions from this file instead of the catalog");
  equiv->add_option("-p,--param", c.bindings, "parameter binding applied to both");
  equiv->add_flag("--allow-zero", c.allow_zero, "accept zero parameter values");
  auto* classify = app.add_subcommand("classify", "continuous or discrete contraction");
  solution_opts(classify);
  auto* contract = app.add_subcommand("contract", "print the brackets of the contracted algebra");
  solution_opts(contract);
  auto* identify = app.add_subcommand("identify", "invariants of a contracted or given algebra");
  solution_opts(identify);
  identify->add_option("--brackets", c.brackets, "bracket list such as [2,3]=e1;[1,4]=we2");
  identify->add_option("--dim", c.dim, "dimension for --brackets");
  identify->add_option("--tower-depth", c.tower_depth, "length cap of the derivation tower")->check(CLI::Range(1, 4));
  identify->add_option("--seed", c.seed, "seed for the generic rank");
  auto catalog_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "seed for the random instantiations");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--no-expected", c.no_expected, "skip the identification records");
    sub->add_flag("--pairwise", c.pairwise, "also run the pairwise inequivalence sweep");
    sub->add_flag("--timing", c.timing, "include timings (the report is then not reproducible)");
  };
  auto* catalog_verify = app.add_subcommand("catalog-verify", "verify the whole catalog, print a summary");
  catalog_opts(catalog_verify);
  auto* report = app.add_subcommand("report", "verify the whole catalog, print the full report");
  catalog_opts(report);

  std::vector<const char*> argv = {"liecontract"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (c.n != 3 && !gen_system->parsed()) {
    err << "error: only n = 3 is supported here\n";
    return 2;
  }
  try {
    if (gen_system->parsed()) return cmd_gen_system(c, out);
    if (gen_identities->parsed()) return cmd_gen_identities(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (equiv->parsed()) return cmd_equiv(c, out);
    if (classify->parsed()) return cmd_classify(c, out);
    if (contract->parsed()) return cmd_contract(c, out);
    if (identify->parsed()) return cmd_identify(c, out);
    if (catalog_verify->parsed()) return cmd_catalog(c, out, false);
    if (report->parsed()) return cmd_catalog(c, out, true);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BindingError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotASolution& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace liecontract
