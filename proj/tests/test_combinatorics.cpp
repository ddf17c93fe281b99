// Enumerations checked against frozen small cases, closed-form counts, and
// independent brute-force odometers written directly in this file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "mlv/combinatorics.hpp"

using namespace mlv;

namespace {

// Independent oracle: all depth-n vectors with entries in 1..k, filtered by
// the index-set predicate, collected in lexicographic order.
std::vector<std::vector<int>> brute_index_set(int k, int n, int r, bool prime) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  for (;;) {
    int w = 0;
    for (int x : v) w += x;
    if (w == k && v.back() >= 2) {
      bool ok = true;
      for (int j = 0; j < r - 1; ++j)
        if (v[static_cast<std::size_t>(j)] != 1) ok = false;
      if (prime && r <= n && v[static_cast<std::size_t>(r - 1)] < 2) ok = false;
      if (ok) out.push_back(v);
    }
    // odometer
    int pos = n - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == k) {
      v[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> parts_of(const std::vector<Index>& xs) {
  std::vector<std::vector<int>> out;
  for (const Index& x : xs) out.push_back(x.parts);
  return out;
}

// Independent oracle for chain vectors via the membership predicate over the
// full box [1, m]^(n-1).
std::vector<std::vector<int>> brute_chains(int m, int n, int l) {
  std::vector<std::vector<int>> out;
  const int len = n - 1;
  std::vector<int> q(static_cast<std::size_t>(len), 1);
  if (len == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    bool ok = true;
    // decreasing prefix below m
    for (int j = 0; j < l - 1 && ok; ++j) {
      const int cur = q[static_cast<std::size_t>(j)];
      const int prev = (j == 0) ? m : q[static_cast<std::size_t>(j - 1)];
      if (!(cur < prev)) ok = false;
    }
    // nondecreasing suffix bounded by m
    for (int j = l - 1; j < len && ok; ++j) {
      const int cur = q[static_cast<std::size_t>(j)];
      if (cur < 1 || cur > m) ok = false;
      if (j > l - 1 && q[static_cast<std::size_t>(j - 1)] > cur) ok = false;
    }
    if (ok) out.push_back(q);
    int pos = len - 1;
    while (pos >= 0 && q[static_cast<std::size_t>(pos)] == m) {
      q[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++q[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("binomial coefficients: frozen values, edges, overflow") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(34, 5) == 278256);
  CHECK(binomial(52, 26) == 495918532948104ULL);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(100, 50), std::overflow_error);
}

TEST_CASE("index vectors: frozen sets") {
  CHECK(parts_of(enumerate_index_set(4, 2, 1)) ==
        std::vector<std::vector<int>>{{1, 3}, {2, 2}});
  CHECK(parts_of(enumerate_index_set(5, 3, 1)) ==
        std::vector<std::vector<int>>{{1, 1, 3}, {1, 2, 2}, {2, 1, 2}});
  CHECK(parts_of(enumerate_index_set(6, 3, 2)) ==
        std::vector<std::vector<int>>{{1, 1, 4}, {1, 2, 3}, {1, 3, 2}});
  CHECK(parts_of(enumerate_index_set_prime(6, 3, 2)) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}});
  CHECK(enumerate_index_set_prime(3, 2, 1).empty());
  CHECK(enumerate_index_set(5, 2, 3).empty());  // r = n+1 names the empty set
}

TEST_CASE("index vectors match the brute-force oracle and the closed count") {
  for (int k = 2; k <= 7; ++k)
    for (int n = 1; n < k; ++n)
      for (int r = 1; r <= n; ++r) {
        const auto got = parts_of(enumerate_index_set(k, n, r));
        CHECK(got == brute_index_set(k, n, r, false));
        CHECK(parts_of(enumerate_index_set_prime(k, n, r)) ==
              brute_index_set(k, n, r, true));
      }
  for (int k = 2; k <= 10; ++k)
    for (int n = 1; n < k; ++n)
      for (int r = 1; r <= n; ++r)
        CHECK(enumerate_index_set(k, n, r).size() == binomial(k - r - 1, n - r));
}

TEST_CASE("prime index sets partition the admissible set") {
  for (int k = 3; k <= 9; ++k)
    for (int n = 1; n < k; ++n) {
      std::vector<std::vector<int>> merged;
      for (int r = 1; r <= n; ++r)
        for (const auto& v : parts_of(enumerate_index_set_prime(k, n, r)))
          merged.push_back(v);
      std::sort(merged.begin(), merged.end());
      CHECK(merged == parts_of(enumerate_index_set(k, n, 1)));
      const std::set<std::vector<int>> uniq(merged.begin(), merged.end());
      CHECK(uniq.size() == merged.size());
    }
}

TEST_CASE("index helper predicates") {
  const Index v({1, 1, 2, 3});
  CHECK(v.depth() == 4);
  CHECK(v.weight() == 7);
  CHECK(v.admissible());
  CHECK(v.in_index_set(1));
  CHECK(v.in_index_set(3));
  CHECK(!v.in_index_set(4));
  CHECK(!Index({2, 1}).admissible());
  CHECK_THROWS(Index(std::vector<int>{}));
  CHECK_THROWS(Index({1, 0}));
}

TEST_CASE("subsets: frozen listings, counts, and membership") {
  {
    std::vector<std::vector<int>> got;
    for (const SubsetJ& J : enumerate_subsets(3, 2, 3)) got.push_back(J.members);
    CHECK(got == std::vector<std::vector<int>>{{1, 3}, {2, 3}});
  }
  {
    std::vector<std::vector<int>> got;
    for (const SubsetJ& J : enumerate_nonempty_subsets(3)) got.push_back(J.members);
    CHECK(got == std::vector<std::vector<int>>{
                     {1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {3}});
  }
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_nonempty_subsets(n).size() == (std::size_t{1} << n) - 1);
    for (int r = 1; r <= n; ++r)
      for (int l = 1; l <= r; ++l) {
        const auto subs = enumerate_subsets(n, l, r);
        CHECK(subs.size() == binomial(r - 1, l - 1));
        for (const SubsetJ& J : subs) {
          CHECK(J.cardinality() == l);
          CHECK(J.maximum() == r);
          CHECK(J.contains(r));
          CHECK(!J.contains(0));
        }
      }
  }
  CHECK_THROWS(SubsetJ({2, 2}, 3));
  CHECK_THROWS(SubsetJ({4}, 3));
  CHECK_THROWS(SubsetJ({}, 3));
}

TEST_CASE("shuffles: frozen set, validity, count, bijection onto subsets") {
  {
    std::vector<std::vector<int>> got;
    for (const Shuffle& s : enumerate_shuffles(2, 3)) got.push_back(s.mapping);
    CHECK(got == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  }
  for (int r = 1; r <= 8; ++r)
    for (int l = 1; l <= r; ++l) {
      const auto shs = enumerate_shuffles(l, r);
      CHECK(shs.size() == binomial(r - 1, l - 1));
      std::set<std::vector<int>> seen;
      std::set<std::vector<int>> images;
      for (const Shuffle& s : shs) {
        CHECK(s.l == l);
        CHECK(s.r == r);
        // constructor validated monotonicity; also check both blocks here
        for (int i = 1; i + 1 < l; ++i)
          CHECK(s.mapping[static_cast<std::size_t>(i - 1)] <
                s.mapping[static_cast<std::size_t>(i)]);
        for (int i = l; i + 1 <= r - 1; ++i)
          CHECK(s.mapping[static_cast<std::size_t>(i - 1)] <
                s.mapping[static_cast<std::size_t>(i)]);
        seen.insert(s.mapping);
        const SubsetJ J = shuffle_to_subset(s, r);
        CHECK(J.cardinality() == l);
        CHECK(J.maximum() == r);
        images.insert(J.members);
      }
      CHECK(seen.size() == shs.size());    // duplicate-free
      CHECK(images.size() == shs.size());  // bijection onto {J : |J|=l, max=r}
    }
  CHECK_THROWS(Shuffle({2, 1}, 1, 3));  // must increase on the second block
}

TEST_CASE("chain vectors: frozen sets and brute-force agreement") {
  {
    std::vector<std::vector<int>> got;
    for (const ChainVector& c : enumerate_chain_set(2, 2, 1)) got.push_back(c.entries);
    CHECK(got == std::vector<std::vector<int>>{{1}, {2}});
  }
  {
    std::vector<std::vector<int>> got;
    for (const ChainVector& c : enumerate_chain_set(2, 2, 2)) got.push_back(c.entries);
    CHECK(got == std::vector<std::vector<int>>{{1}});
  }
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int l = 1; l <= n; ++l) {
        std::vector<std::vector<int>> got;
        for (const ChainVector& c : enumerate_chain_set(m, n, l)) {
          CHECK(chain_in_set(c.entries, m, n, l));
          got.push_back(c.entries);
        }
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == brute_chains(m, n, l));
        CHECK(got.size() ==
              binomial(m - 1, l - 1) * binomial(m + n - l - 1, n - l));
        // visitor form agrees with the materialized list, in order
        std::vector<std::vector<int>> visited;
        for_each_chain(m, n, l, [&](const std::vector<int>& q) { visited.push_back(q); });
        CHECK(visited == got);
      }
}

TEST_CASE("chain membership cross-set facts on a sample box") {
  // Every chain for l > 1 also satisfies the predicate for l-1 or l+1 in the
  // exclusive way the inclusion-exclusion argument needs.
  const int m = 4, n = 3;
  for (int l = 1; l <= n; ++l)
    for (const ChainVector& c : enumerate_chain_set(m, n, l)) {
      const bool in_prev = l > 1 && chain_in_set(c.entries, m, n, l - 1);
      const bool in_next = l < n && chain_in_set(c.entries, m, n, l + 1);
      if (l > 1) CHECK((in_prev != in_next));
    }
}

TEST_CASE("constrained tuples: frozen sets, cap semantics, infeasibility") {
  {
    const SubsetJ J({2}, 2);
    const auto got = enumerate_constrained_tuples(3, J, 4);
    std::vector<std::vector<int>> expect{{1, 3}, {2, 3}, {3, 3}, {4, 3}};
    CHECK(got == expect);
  }
  {
    const SubsetJ J({1, 2}, 2);
    const auto got = enumerate_constrained_tuples(3, J, 10);
    std::vector<std::vector<int>> expect{{1, 2}, {2, 1}};
    CHECK(got == expect);
  }
  {
    // free coordinates capped; constrained coordinates can exceed the cap
    const SubsetJ J({1}, 2);
    const auto got = enumerate_constrained_tuples(9, J, 2);
    std::vector<std::vector<int>> expect{{9, 1}, {9, 2}};
    CHECK(got == expect);
  }
  CHECK_THROWS(enumerate_constrained_tuples(1, SubsetJ({1, 2}, 2), 5));
  // visitor agrees with the list
  const SubsetJ J({1, 3}, 3);
  const auto list = enumerate_constrained_tuples(4, J, 3);
  std::vector<std::vector<int>> visited;
  for_each_constrained_tuple(4, J, 3, [&](const std::vector<int>& t) {
    visited.push_back(t);
  });
  CHECK(visited == list);
  for (const auto& t : list) {
    CHECK(t[0] + t[2] == 4);
    CHECK(t[1] >= 1);
    CHECK(t[1] <= 3);
  }
}
