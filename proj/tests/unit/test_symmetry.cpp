#include <set>

#include "doctest.h"
#include "testkit.hpp"

using namespace liecontract;
using testkit::idx;
using testkit::pair;

TEST_CASE("group sizes") {
  CHECK(enumerate_group(3, false).size() == 48);
  CHECK(enumerate_group(3, true).size() == 24);
  // brute force over all 16 matrices mod 2: det = 1 exactly for 6 of them
  int count = 0;
  for (int m = 0; m < 16; ++m) count += ((m & 1) * ((m >> 3) & 1) + ((m >> 1) & 1) * ((m >> 2) & 1)) % 2 == 1;
  CHECK(enumerate_group(2, false).size() == static_cast<size_t>(count));
  auto g = enumerate_group(3, false);
  CHECK(std::is_sorted(g.begin(), g.end()));
  for (const auto& A : g) CHECK((A.det() == 1 || A.det() == 2));
}

TEST_CASE("permutation_of") {
  CHECK(permutation_of(SymmetryElement{}).is_identity());
  SymmetryElement X{1, 2, 0, 1, 3};
  auto p = permutation_of(X);
  CHECK(p(idx(0, 1)) == idx(0, 1));
  CHECK(p(idx(1, 0)) == idx(1, 2));
  for (const auto& A : enumerate_group(3, false)) {
    auto q = permutation_of(A);
    std::set<int> image;
    for (int i = 0; i < 8; ++i) image.insert(q(i));
    CHECK(image.size() == 8);
    CHECK(compose(q, q.inverse()).is_identity());
  }
}

TEST_CASE("orbits") {
  auto sl = enumerate_group(3, true), h3 = enumerate_group(3, false);
  auto a = orbit_of_tuple({idx(0, 1), idx(0, 2), idx(1, 0)}, sl);
  auto b = orbit_of_tuple({idx(0, 1), idx(1, 0), idx(1, 1)}, sl);
  CHECK(a.size() == 24);
  CHECK(b.size() == 24);
  for (const auto& t : a) CHECK(b.count(t) == 0);
  auto pairs = orbit_of_tuple({idx(0, 1), idx(1, 0)}, h3);
  CHECK(pairs.size() == 24);
  for (const auto& t : pairs) CHECK(is_relevant(3, t[0], t[1]));
}

TEST_CASE("act_on_contraction") {
  Matrix x = testkit::concrete("eps_23_1");
  CHECK(act_on_contraction(x, IndexPermutation::identity(3)) == x);
  auto p = permutation_of(SymmetryElement{1, 2, 0, 1, 3});
  // (eps^pi)(i, j) = eps(pi(i), pi(j)); the single 1 lands where pi maps onto (01)(10)
  Matrix y = act_on_contraction(x, p);
  auto q = p.inverse();
  IndexPair moved = make_pair_sorted(q(idx(0, 1)), q(idx(1, 0)));
  int ones = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) ones += !y(i, j).is_zero();
  CHECK(ones == 1);
  CHECK(y(moved.first, moved.second).is_one());
  CHECK(permute(p, moved) == pair(0, 1, 1, 0));
  // transporting the entry forward along pi_X puts it at (01)(12)
  Matrix fwd = act_on_contraction(x, q);
  CHECK(fwd(idx(0, 1), idx(1, 2)).is_one());
  CHECK(check_solution(fwd, generate_system(3)).ok);
  for (const auto& A : enumerate_group(3, false)) {
    Matrix z = act_on_contraction(testkit::concrete("eps_9_1"), permutation_of(A));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (!is_relevant(3, i, j)) CHECK(z(i, j).is_zero());
  }
}

TEST_CASE("pair classes of (01)(10)") {
  auto classes = pair_classes(3, pair(0, 1, 1, 0), enumerate_group(3, false));
  std::vector<size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  CHECK(sizes == std::vector<size_t>{4, 4, 4, 2, 2, 2, 2, 2, 1});
  std::vector<IndexPair> i1 = {pair(1, 1, 1, 2), pair(1, 1, 2, 1), pair(2, 2, 1, 2), pair(2, 2, 2, 1)};
  std::sort(i1.begin(), i1.end());
  bool found = false;
  for (auto c : classes) {
    std::sort(c.begin(), c.end());
    found = found || c == i1;
  }
  CHECK(found);
  CHECK(classes.back() == std::vector<IndexPair>{pair(0, 2, 2, 0)});
  CHECK_THROWS(pair_classes(3, pair(0, 1, 0, 2), enumerate_group(3, false)));
}
