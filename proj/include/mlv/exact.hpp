#pragma once

// Exact verification of the finite identities behind the series theorems.
// Everything in this module is computed in arbitrary-precision rational
// arithmetic; a check passes only when both sides are literally equal.
//
// Notation used in the formula comments below:
//   * p = (p_l, ..., p_{n-1}) is a vector of positive integers indexed by
//     absolute positions l..n-1 (PVector.start records l).
//   * Partial sums always mean p_l + p_{l+1} + ... + p_j for increasing j.
//   * kvec = (k_1, ..., k_n) is an index vector of weight k.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlv/combinatorics.hpp"
#include "mlv/rational.hpp"

namespace mlv {

// Positive integer vector with absolute indexing: entry(i) is defined for
// start <= i < start + size.
struct PVector {
  std::vector<int> entries;
  int start = 1;

  PVector() = default;
  PVector(std::vector<int> e, int start_) : entries(std::move(e)), start(start_) {
    for (int v : entries)
      if (v < 1) throw std::invalid_argument("PVector: entries must be positive");
  }

  int size() const { return static_cast<int>(entries.size()); }
  int entry(int absolute) const {
    const int off = absolute - start;
    if (off < 0 || off >= size())
      throw std::invalid_argument("PVector: index out of range");
    return entries[off];
  }
  // Sum of entries at absolute positions [from, to); empty when from >= to.
  long partial_sum(int from, int to) const {
    long s = 0;
    for (int i = from; i < to; ++i) s += entry(i);
    return s;
  }
};

struct IdentityCheckResult {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

// --- Building blocks ---

// Sum over all positive (p_1, ..., p_{l-1}) with p_1 + ... + p_{l-1} < m of
//   1 / (p_1 (p_1+p_2) ... (p_1+...+p_{l-1})).
// The empty composition (l = 1) contributes 1.  Requires l >= 1, m >= 1.
Rational prefix_weight(int l, int m);

// The same quantity summed in its decreasing-chain form:
//   sum over m > q_1 > ... > q_{l-1} >= 1 of 1 / (q_1 q_2 ... q_{l-1}).
// Equal to prefix_weight(l, m) via q_j = p_1 + ... + p_{l-j}; both forms are
// kept so the equality can be asserted as a regression test.
Rational prefix_weight_by_chains(int l, int m);

// Product of reciprocals of the running sums of p over the window [l, r):
//   1 / (p_l (p_l+p_{l+1}) ... (p_l+...+p_{r-1})),  with value 1 when r = l.
// Requires l <= r and p defined on [l, r).
Rational span_reciprocal(int l, int r, const PVector& p);

// Product over j = r..n of (m + p_l + ... + p_{j-1})^{-k_j}, where kvec has
// depth n; the sum is empty when j <= l.  Requires l <= r <= n+1 and p
// defined on [l, n).  (r = n+1 gives the empty product 1.)
Rational shifted_tail_product(int l, int r, const PVector& p, const Index& kvec, int m);

// Sum over r = l..n of span_reciprocal(l, r, p) * shifted_tail_product,
// aggregated over kvec in index_set(k, n, r) — evaluated directly from that
// definition.  Requires p defined on [l, n) and k > n >= l >= 1.
Rational block_sum_definition(int l, const PVector& p, int k, int n, int m);

// The telescoped closed form of the same block sum:
//   span_reciprocal(l, n-1, p) * m^{-(k-n+1)}
//     * (1/(p_l+...+p_{n-1}) - 1/(m+p_l+...+p_{n-1})),
// valid for l < n; l = n falls back to the definition (a single term).
Rational block_sum_closed(int l, const PVector& p, int k, int n, int m);

// Sum over chain vectors q for (m, n, l) of 1/(q_1 ... q_{n-1}), times
// m^{-(k-n+1)}: the closed form of the sum of the subset series over all
// J with |J| = l.  Requires k > n >= l >= 1, m >= 1.
Rational subset_sum_closed(int k, int n, int m, int l);

// Truncated subset series evaluated through the shuffle parameterization:
// for J with |J| = l and max J = r, the series equals
//   sum over kvec in index_set(k, n, r), over constrained p, of
//     (shuffle denominator) * shifted_tail_product(l', r, p, kvec, m)
// where the shuffle is the one mapped to J by the subset bijection.  Free
// coordinates p_l..p_{n-1} are capped at `cap`; the p_1..p_{l-1} block is
// constrained by p_1 + ... + p_{l-1} < m... (see implementation comment).
// With J = {1..n} the result is exact (no free coordinates).
Rational subset_series_sigma(int k, int n, int m, const SubsetJ& J, int cap);

// --- Identity checks ---

// For nonzero x, y with x + y != 0 and K >= 1:
//   sum_{i=1..K} x^{-i} y (x+y)^{-(K+1-i)} + (x+y)^{-K} = x^{-K}.
IdentityCheckResult check_partial_fraction(const Rational& x, const Rational& y, int K);

// For positive rationals xs = (x_1..x_s), ys = (y_1..y_t):
//   sum over shuffles z of xs and ys of prod_i (z_1+...+z_i)^{-1}
//     = prod_i (x_1+...+x_i)^{-1} * prod_i (y_1+...+y_i)^{-1}.
// Nonzero partial sums are required (guaranteed for positive entries).
IdentityCheckResult check_shuffle_identity(const std::vector<Rational>& xs,
                                           const std::vector<Rational>& ys);

// Telescoping step for l <= t <= n-1:
//   sum_{r=l..t} span_reciprocal(l,r,p) * sum_{index_set(k,n,r)} tail(r)
//     = span_reciprocal(l,t,p) * sum_{index_set(k,n,t)} m^{-k_t} tail(t+1).
IdentityCheckResult check_telescoping(int l, int t, const PVector& p, int k, int n, int m);

// block_sum_definition == block_sum_closed at one parameter point.
IdentityCheckResult check_block_sum(int l, const PVector& p, int k, int n, int m);

// prefix_weight == prefix_weight_by_chains at one parameter point.
IdentityCheckResult check_prefix_weight_forms(int l, int m);

// Alternating sum over subset sizes of subset_sum_closed equals m^{-k}:
//   sum_{l=1..n} (-1)^{l-1} subset_sum_closed(k, n, m, l) = 1/m^k.
IdentityCheckResult check_fixed_m_closed(int k, int n, int m);

// Alternating chain-count identity:
//   sum_{l=1..n} (-1)^{l-1} sum_{chains for (m,n,l)} 1/(q_1...q_{n-1})
//     = 1/m^{n-1},
// plus the supporting partition facts: the chain sets for consecutive l
// overlap so that each chain for l lies in exactly one of the sets for
// l-1 / l+1, and the l = 1 set splits off exactly the constant chain
// (m, ..., m).  pass reflects the numeric identity and the partitions.
IdentityCheckResult check_inclusion_exclusion(int n, int m);

// Numerator expansion: for |ms| >= r >= 1 and any rational t,
//   sum over nonempty T subset of {1..r} of (-1)^{|T|-1} t^{sum_{j in T} ms_j}
//     = 1 - prod_{j=1..r} (1 - t^{ms_j}).
IdentityCheckResult check_numerator_identity(const Rational& t,
                                             const std::vector<int>& ms, int r);

// Exact equality of the shuffle-parameterized subset series against direct
// enumeration of constrained tuples at a matched truncation.
IdentityCheckResult check_sigma_parameterization(int k, int n, int m, const SubsetJ& J,
                                                 int cap);

// --- Seeded suite drivers ---
//
// Each driver sweeps a parameter box, drawing any free parameters from a
// splitmix64 stream so runs are reproducible; the seed is recorded in every
// result's parameter list.

std::vector<IdentityCheckResult> run_partial_fraction_suite(int k_max, int samples,
                                                            std::uint64_t seed);
std::vector<IdentityCheckResult> run_shuffle_suite(int max_blocks, int samples,
                                                   std::uint64_t seed);
std::vector<IdentityCheckResult> run_telescoping_suite(int n_max, int k_extra_max,
                                                       int m_max, int samples,
                                                       std::uint64_t seed);
std::vector<IdentityCheckResult> run_block_sum_suite(int n_max, int k_extra_max,
                                                     int m_max, int samples,
                                                     std::uint64_t seed);
std::vector<IdentityCheckResult> run_fixed_m_suite(int n_min, int n_max, int k_extra_min,
                                                   int k_extra_max, int m_min, int m_max);
std::vector<IdentityCheckResult> run_inclusion_exclusion_suite(int n_max, int m_max);
std::vector<IdentityCheckResult> run_numerator_suite(int r_max, int samples,
                                                     std::uint64_t seed);
std::vector<IdentityCheckResult> run_prefix_weight_suite(int l_max, int m_max);

}  // namespace mlv
