#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liecontract/catalog.hpp"

namespace testkit {

using namespace liecontract;

const std::string& data_dir();
const std::vector<CatalogEntry>& catalog();
const CatalogContext& context();
const SolutionRecord& solution(const std::string& id);

// default bindings overridden by `overrides`; zeros go through the boundary path
Matrix concrete(const std::string& id, const Bindings& overrides = {});
LieAlgebra contracted(const std::string& id, const Bindings& overrides = {});

int idx(int r, int s, int n = 3);
IndexPair pair(int r1, int s1, int r2, int s2, int n = 3);
Matrix ones_except(const std::vector<std::pair<IndexPair, long>>& changes);

// floating embedding w -> exp(2 pi i / n); for oracles only
std::complex<double> embed(const CycloNumber& x);

struct Rng {
  explicit Rng(uint64_t seed) : gen(seed) {}
  std::mt19937_64 gen;
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long range = 9);
  Rational nonzero_rational(long range = 9);
  CycloNumber cyclo(int order, long range = 9);
  CycloNumber nonzero_cyclo(int order, long range = 9);
  Matrix invertible(int dim, int order, long range = 2);
  // permutation * diagonal * `shears` elementary shears; invertible by construction
  Matrix structured_invertible(int dim, int order, int shears = 3);
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<size_t>(integer(0, static_cast<long>(v.size()) - 1))]; }
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace testkit
