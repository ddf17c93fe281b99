// Exact rational identities: frozen oracle values computed by hand, suite
// drivers over small parameter boxes, and brute-force cross-checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "mlv/combinatorics.hpp"
#include "mlv/exact.hpp"
#include "mlv/prng.hpp"
#include "mlv/rational.hpp"

using namespace mlv;

namespace {

void check_all_pass(const std::vector<IdentityCheckResult>& rs) {
  REQUIRE(!rs.empty());
  for (const IdentityCheckResult& r : rs) {
    INFO(r.identity, " lhs=", r.lhs.str(), " rhs=", r.rhs.str());
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);  // exact means exactly equal, never just close
  }
}

}  // namespace

TEST_CASE("prefix weights: frozen values and the two forms") {
  // l = 1 is the empty composition: weight 1 regardless of m.
  CHECK(prefix_weight(1, 1).str() == "1");
  CHECK(prefix_weight(1, 7).str() == "1");
  // l = 2, m = 3: compositions (p_1) with p_1 < 3 -> 1/1 + 1/2 = 3/2.
  CHECK(prefix_weight(2, 3).str() == "3/2");
  CHECK(prefix_weight_by_chains(2, 3).str() == "3/2");
  // l = 3, m = 3: (p_1,p_2) with p_1+p_2 < 3 -> only (1,1): 1/(1*2) = 1/2.
  CHECK(prefix_weight(3, 3).str() == "1/2");
  // m too small to fit the composition: empty sum.
  CHECK(prefix_weight(3, 2).str() == "0");
  for (int l = 1; l <= 6; ++l)
    for (int m = 1; m <= 12; ++m)
      CHECK(prefix_weight(l, m) == prefix_weight_by_chains(l, m));
  check_all_pass(run_prefix_weight_suite(5, 10));
}

TEST_CASE("span reciprocals and shifted tail products: frozen values") {
  // p = (3, 4) at absolute positions 1, 2.
  const PVector p({3, 4}, 1);
  CHECK(span_reciprocal(1, 1, p).str() == "1");         // empty window
  CHECK(span_reciprocal(1, 2, p).str() == "1/3");       // 1/p_1
  CHECK(span_reciprocal(1, 3, p).str() == "1/21");      // 1/(3 * 7)
  CHECK(span_reciprocal(2, 3, p).str() == "1/4");       // window starting at 2
  // kvec = (1,2), m = 2, l = 1: product over j=r..n of (m + p_1+..+p_{j-1})^-k_j.
  const Index kvec({1, 2});
  // r = 3 = n+1: empty product.
  CHECK(shifted_tail_product(1, 3, p, kvec, 2).str() == "1");
  // r = 2: j = 2 only: (2 + 3)^-2 = 1/25.
  CHECK(shifted_tail_product(1, 2, p, kvec, 2).str() == "1/25");
  // r = 1: j = 1: (2)^-1, j = 2: (2+3)^-2 -> 1/50.
  CHECK(shifted_tail_product(1, 1, p, kvec, 2).str() == "1/50");
}

TEST_CASE("block sums: frozen values and definition vs closed form") {
  // l = n = 2 routes to the definition: single term, empty p window.
  CHECK(block_sum_definition(2, PVector({}, 2), 3, 2, 1).str() == "1");
  CHECK(block_sum_closed(2, PVector({}, 2), 3, 2, 1) ==
        block_sum_definition(2, PVector({}, 2), 3, 2, 1));
  // Hand-checked small cases.
  CHECK(block_sum_closed(2, PVector({1}, 2), 4, 3, 1).str() == "1/2");
  CHECK(block_sum_closed(1, PVector({3}, 1), 3, 2, 2).str() == "1/30");
  SplitMix64 g(99);
  for (int n = 1; n <= 4; ++n)
    for (int l = 1; l <= n; ++l)
      for (int kx = 1; kx <= 3; ++kx)
        for (int rep = 0; rep < 3; ++rep) {
          std::vector<int> entries(static_cast<std::size_t>(n - l));
          for (int& e : entries) e = static_cast<int>(g.uniform(1, 6));
          const int m = static_cast<int>(g.uniform(1, 5));
          const IdentityCheckResult r =
              check_block_sum(l, PVector(entries, l), n + kx, n, m);
          INFO("n=", n, " l=", l, " kx=", kx, " m=", m);
          CHECK(r.pass);
        }
  check_all_pass(run_block_sum_suite(4, 3, 5, 2, 17));
}

TEST_CASE("telescoping lemma: hand-derived point and sampled box") {
  // n=3, k=5, l=1, t=2, p=(1,2), m=2: both sides equal 7/500.
  const IdentityCheckResult r =
      check_telescoping(1, 2, PVector({1, 2}, 1), 5, 3, 2);
  CHECK(r.pass);
  CHECK(r.lhs.str() == "7/500");
  CHECK(r.rhs.str() == "7/500");
  check_all_pass(run_telescoping_suite(4, 3, 5, 2, 23));
}

TEST_CASE("partial fraction identity: frozen point and suite") {
  const IdentityCheckResult r =
      check_partial_fraction(Rational(1, 2), Rational(-1, 3), 3);
  CHECK(r.pass);
  CHECK(r.lhs.str() == "8");
  check_all_pass(run_partial_fraction_suite(8, 20, 7));
}

TEST_CASE("shuffle identity: frozen point, empty blocks, suite") {
  {
    // xs = (1,1), ys = (2): lhs sums over 3 shuffles, rhs = (1*2)^-1 * 2^-1.
    const IdentityCheckResult r = check_shuffle_identity(
        {Rational(1), Rational(1)}, {Rational(2)});
    CHECK(r.pass);
    CHECK(r.rhs.str() == "1/4");
  }
  {
    // one empty block: single shuffle, both sides the same product
    const IdentityCheckResult r = check_shuffle_identity({}, {Rational(5, 3)});
    CHECK(r.pass);
    CHECK(r.rhs.str() == "3/5");
  }
  check_all_pass(run_shuffle_suite(5, 25, 42));
}

TEST_CASE("subset sums: frozen closed values") {
  CHECK(subset_sum_closed(3, 2, 2, 1).str() == "3/8");
  CHECK(subset_sum_closed(3, 2, 2, 2).str() == "1/4");
  // depth 1: single subset size, chain vectors are empty, value m^-k.
  CHECK(subset_sum_closed(4, 1, 3, 1).str() == "1/81");
}

TEST_CASE("fixed-m alternating identity: frozen points and suites") {
  {
    const IdentityCheckResult r = check_fixed_m_closed(3, 2, 2);
    CHECK(r.pass);
    CHECK(r.lhs.str() == "1/8");
  }
  {
    const IdentityCheckResult r = check_fixed_m_closed(5, 3, 4);
    CHECK(r.pass);
    CHECK(r.lhs.str() == "1/1024");
  }
  check_all_pass(run_fixed_m_suite(1, 4, 1, 4, 1, 12));
}

TEST_CASE("inclusion-exclusion over chain sets with partition facts") {
  {
    const IdentityCheckResult r = check_inclusion_exclusion(2, 3);
    CHECK(r.pass);
    CHECK(r.rhs.str() == "1/3");
    bool saw_partitions = false;
    for (const auto& [key, value] : r.params)
      if (key == "partitions") {
        saw_partitions = true;
        CHECK(value == "ok");
      }
    CHECK(saw_partitions);
  }
  CHECK(check_inclusion_exclusion(3, 2).rhs.str() == "1/4");
  CHECK(check_inclusion_exclusion(1, 5).rhs.str() == "1");
  check_all_pass(run_inclusion_exclusion_suite(4, 12));
}

TEST_CASE("numerator polynomial identity: frozen point, brute subsets, suite") {
  {
    // t = 1/2, ms = (1,2): subsets {1}:t, {2}:t^2, {1,2}:-t^3
    // lhs = 1/2 + 1/4 - 1/8 = 5/8 = 1 - (1-t)(1-t^2).
    const IdentityCheckResult r = check_numerator_identity(Rational(1, 2), {1, 2}, 2);
    CHECK(r.pass);
    CHECK(r.lhs.str() == "5/8");
  }
  {
    // t = 1 collapses the product side to 1 for any ms.
    const IdentityCheckResult r = check_numerator_identity(Rational(1), {3, 1, 4}, 3);
    CHECK(r.pass);
    CHECK(r.rhs.str() == "1");
  }
  check_all_pass(run_numerator_suite(6, 30, 5));
}

TEST_CASE("sigma parameterization equals direct constrained enumeration") {
  for (int n = 1; n <= 3; ++n)
    for (int kx = 1; kx <= 2; ++kx)
      for (int m = 2; m <= 4; ++m)
        for (const SubsetJ& J : enumerate_nonempty_subsets(n)) {
          if (m < J.cardinality()) continue;
          const IdentityCheckResult r =
              check_sigma_parameterization(n + kx, n, m, J, 9);
          INFO("n=", n, " k=", n + kx, " m=", m);
          CHECK(r.pass);
        }
  // J = {1..n}: no free coordinates, and the sigma route must equal the
  // fully finite constrained sum regardless of cap.
  const SubsetJ full({1, 2}, 2);
  CHECK(subset_series_sigma(4, 2, 3, full, 1) ==
        subset_series_sigma(4, 2, 3, full, 50));
}

TEST_CASE("subset series sigma is monotone in cap for positive terms") {
  const SubsetJ J({1}, 2);
  Rational prev;
  for (int cap : {2, 5, 9, 14}) {
    const Rational cur = subset_series_sigma(3, 2, 2, J, cap);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("identity results carry the parameters needed to reproduce them") {
  const IdentityCheckResult r = check_fixed_m_closed(4, 2, 3);
  REQUIRE(r.params.size() >= 3);
  CHECK(r.params[0].first == "k");
  CHECK(r.params[0].second == "4");
  CHECK(r.identity == "fixed_m_closed");
}
