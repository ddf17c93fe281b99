#pragma once

// Index vectors, summand subsets, order-preserving shuffles, and the
// decreasing/nondecreasing chain vectors that parameterize the exact
// identities.  All enumerations are lexicographic and duplicate-free, so
// downstream reports are deterministic by construction.
//
// Conventions used throughout:
//   * An index vector (k_1, ..., k_n) is a composition: every part >= 1.
//     It is "admissible" when the last part is >= 2.
//   * index_set(k, n, r) is the set of admissible depth-n weight-k index
//     vectors whose first r-1 parts all equal 1; it is empty for r = n+1.
//   * A subset J of {1..n} selects which summands feed the weight argument.
//   * A shuffle of type (l, r) is a permutation of {1..r-1} increasing on
//     {1..l-1} and on {l..r-1}.
//   * A chain vector for (m, n, l) is (q_1, ..., q_{n-1}) with
//     m > q_1 > ... > q_{l-1} >= 1 and 1 <= q_l <= ... <= q_{n-1} <= m.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mlv {

struct Index {
  std::vector<int> parts;

  Index() = default;
  explicit Index(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("Index: empty composition");
    for (int v : parts)
      if (v < 1) throw std::invalid_argument("Index: parts must be positive");
  }

  int depth() const { return static_cast<int>(parts.size()); }
  int weight() const {
    int w = 0;
    for (int v : parts) w += v;
    return w;
  }
  bool admissible() const { return parts.back() >= 2; }

  // Membership in index_set(weight(), depth(), r): first r-1 parts equal 1
  // and the last part is >= 2.  r = depth()+1 names the empty set.
  bool in_index_set(int r) const {
    const int n = depth();
    if (r < 1 || r > n + 1) throw std::invalid_argument("Index: r out of range");
    if (r == n + 1) return false;
    if (!admissible()) return false;
    for (int j = 0; j < r - 1; ++j)
      if (parts[j] != 1) return false;
    return true;
  }

  bool operator==(const Index& o) const { return parts == o.parts; }
};

struct SubsetJ {
  std::vector<int> members;  // strictly increasing, within 1..ambient_depth
  int ambient_depth = 0;

  SubsetJ() = default;
  SubsetJ(std::vector<int> mem, int n) : members(std::move(mem)), ambient_depth(n) {
    if (n < 1) throw std::invalid_argument("SubsetJ: ambient depth must be >= 1");
    if (members.empty()) throw std::invalid_argument("SubsetJ: empty subset");
    int prev = 0;
    for (int v : members) {
      if (v <= prev || v > n)
        throw std::invalid_argument("SubsetJ: members must be strictly increasing in 1..n");
      prev = v;
    }
  }

  int cardinality() const { return static_cast<int>(members.size()); }
  int maximum() const { return members.back(); }
  bool contains(int j) const {
    for (int v : members)
      if (v == j) return true;
    return false;
  }

  bool operator==(const SubsetJ& o) const {
    return members == o.members && ambient_depth == o.ambient_depth;
  }
};

struct Shuffle {
  // mapping[i-1] = image of i under a permutation of {1..r-1} that is
  // increasing on {1..l-1} and on {l..r-1}.
  std::vector<int> mapping;
  int l = 1;
  int r = 1;

  Shuffle() = default;
  Shuffle(std::vector<int> map, int l_, int r_) : mapping(std::move(map)), l(l_), r(r_) {
    if (l < 1 || r < l) throw std::invalid_argument("Shuffle: need 1 <= l <= r");
    const int len = r - 1;
    if (static_cast<int>(mapping.size()) != len)
      throw std::invalid_argument("Shuffle: mapping must have length r-1");
    std::vector<bool> seen(len, false);
    for (int v : mapping) {
      if (v < 1 || v > len || seen[v - 1])
        throw std::invalid_argument("Shuffle: mapping is not a permutation of 1..r-1");
      seen[v - 1] = true;
    }
    for (int i = 1; i < l - 1; ++i)
      if (mapping[i - 1] > mapping[i])
        throw std::invalid_argument("Shuffle: not increasing on the first block");
    for (int i = l; i < len; ++i)
      if (mapping[i - 1] > mapping[i])
        throw std::invalid_argument("Shuffle: not increasing on the second block");
  }

  bool operator==(const Shuffle& o) const {
    return mapping == o.mapping && l == o.l && r == o.r;
  }
};

struct ChainVector {
  std::vector<int> entries;  // length n-1
  int split = 1;             // the l parameter: entries before it decrease

  ChainVector() = default;
  ChainVector(std::vector<int> e, int l) : entries(std::move(e)), split(l) {}

  bool operator==(const ChainVector& o) const {
    return entries == o.entries && split == o.split;
  }
};

// Exact binomial coefficient (0 when k < 0 or k > n); throws on overflow.
std::uint64_t binomial(int n, int k);

// --- Enumerations (lexicographic, duplicate-free) ---

// Admissible depth-n weight-k index vectors with the first r-1 parts equal
// to 1.  Requires k >= 2, 1 <= n < k, 1 <= r <= n+1; r = n+1 yields {}.
std::vector<Index> enumerate_index_set(int k, int n, int r);

// index_set(k,n,r) minus index_set(k,n,r+1): additionally requires the r-th
// part to exceed 1.  Partitions index_set(k,n,1) as r runs over 1..n.
std::vector<Index> enumerate_index_set_prime(int k, int n, int r);

// Subsets of {1..n} with cardinality l and maximum r.
std::vector<SubsetJ> enumerate_subsets(int n, int l, int r);

// Every nonempty subset of {1..n}, ordered lexicographically by member list.
std::vector<SubsetJ> enumerate_nonempty_subsets(int n);

// Shuffles of type (l, r), ordered by the image of the first block.
std::vector<Shuffle> enumerate_shuffles(int l, int r);

// The bijection from shuffles of type (l, r) onto subsets with |J| = l and
// max J = r: J = sigma({1..l-1}) union {r}, viewed inside {1..n}.
SubsetJ shuffle_to_subset(const Shuffle& s, int ambient_depth);

// Chain vectors for (m, n, l).  Requires m >= 1, n >= 1, 1 <= l <= n.
// For n = 1 the single empty chain is returned (unless the decreasing run
// cannot fit, which for n = 1 never happens).
std::vector<ChainVector> enumerate_chain_set(int m, int n, int l);

// Membership test used by the chain partition checks.
bool chain_in_set(const std::vector<int>& entries, int m, int n, int l);

// Depth-n tuples (m_1, ..., m_n) with sum_{j in J} m_j = m and every
// coordinate not constrained by that equation capped at `cap`.
// Requires m >= |J|; throws otherwise (the constraint is infeasible).
std::vector<std::vector<int>> enumerate_constrained_tuples(int m, const SubsetJ& J,
                                                           int cap);

// --- Visitor forms ---
//
// The list-returning operations above materialize their results; the
// drivers that walk tens of millions of chains use these instead.  Visit
// order is identical to the list order.  The buffer passed to the visitor
// is reused between calls.

template <typename Fn>
void for_each_chain(int m, int n, int l, Fn&& fn) {
  if (m < 1 || n < 1 || l < 1 || l > n)
    throw std::invalid_argument("for_each_chain: need m >= 1 and 1 <= l <= n");
  const int len = n - 1;
  // The decreasing run q_1 > ... > q_{l-1} needs l-1 distinct values below m.
  if (l - 1 > 0 && m - 1 < l - 1) return;
  std::vector<int> q(len, 0);
  // Recursive descent over positions; strict decrease before the split,
  // nondecrease (bounded by m) from the split on.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      fn(const_cast<const std::vector<int>&>(q));
      return;
    }
    if (pos < l - 1) {
      // Strictly decreasing segment, below m, leaving room for the rest of
      // the decreasing run: q_pos can go down to (l-1-pos) at the lowest.
      const int upper = (pos == 0) ? m - 1 : q[pos - 1] - 1;
      for (int v = l - 1 - pos; v <= upper; ++v) {
        q[pos] = v;
        self(self, pos + 1);
      }
    } else {
      const int lower = (pos == l - 1) ? 1 : q[pos - 1];
      for (int v = lower; v <= m; ++v) {
        q[pos] = v;
        self(self, pos + 1);
      }
    }
  };
  rec(rec, 0);
}

template <typename Fn>
void for_each_constrained_tuple(int m, const SubsetJ& J, int cap, Fn&& fn) {
  const int n = J.ambient_depth;
  if (m < J.cardinality())
    throw std::invalid_argument(
        "for_each_constrained_tuple: m below the subset cardinality");
  if (cap < 1) throw std::invalid_argument("for_each_constrained_tuple: cap must be >= 1");
  std::vector<int> tuple(n, 0);
  // Free coordinates range over 1..cap; constrained coordinates split m.
  auto rec = [&](auto&& self, int pos, int remaining, int left_in_J) -> void {
    if (pos == n) {
      fn(const_cast<const std::vector<int>&>(tuple));
      return;
    }
    if (J.contains(pos + 1)) {
      // Keep at least 1 for each later constrained coordinate.
      const int hi = remaining - (left_in_J - 1);
      if (left_in_J == 1) {
        tuple[pos] = remaining;
        self(self, pos + 1, 0, 0);
      } else {
        for (int v = 1; v <= hi; ++v) {
          tuple[pos] = v;
          self(self, pos + 1, remaining - v, left_in_J - 1);
        }
      }
    } else {
      for (int v = 1; v <= cap; ++v) {
        tuple[pos] = v;
        self(self, pos + 1, remaining, left_in_J);
      }
    }
  };
  rec(rec, 0, m, J.cardinality());
}

}  // namespace mlv
