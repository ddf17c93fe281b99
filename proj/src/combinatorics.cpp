#include "mlv/combinatorics.hpp"

#include <limits>

namespace mlv {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i stays integral at every step.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("binomial: result exceeds 64 bits");
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

namespace {

void validate_index_set_args(int k, int n, int r) {
  if (k < 2) throw std::invalid_argument("index_set: weight must be >= 2");
  if (n < 1 || n >= k)
    throw std::invalid_argument("index_set: depth must satisfy 1 <= n < k");
  if (r < 1 || r > n + 1)
    throw std::invalid_argument("index_set: position must satisfy 1 <= r <= n+1");
}

// Emits compositions of `total` into `slots` positive parts, last part >= 2,
// appended after `prefix`, in lexicographic order.
void emit_tail_compositions(std::vector<int>& prefix, int total, int slots,
                            std::vector<Index>& out) {
  if (slots == 1) {
    if (total >= 2) {
      prefix.push_back(total);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // Leave at least slots-2 ones plus a final part >= 2.
  for (int v = 1; v <= total - (slots - 2) - 2; ++v) {
    prefix.push_back(v);
    emit_tail_compositions(prefix, total - v, slots - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Index> enumerate_index_set(int k, int n, int r) {
  validate_index_set_args(k, n, r);
  std::vector<Index> out;
  if (r == n + 1) return out;
  std::vector<int> prefix(r - 1, 1);
  emit_tail_compositions(prefix, k - (r - 1), n - r + 1, out);
  return out;
}

std::vector<Index> enumerate_index_set_prime(int k, int n, int r) {
  validate_index_set_args(k, n, r);
  std::vector<Index> out;
  if (r == n + 1) return out;
  // Dropping membership in index_set(k,n,r+1) keeps exactly the vectors
  // whose r-th part exceeds 1 (for r = n that is already forced).
  for (Index& idx : enumerate_index_set(k, n, r))
    if (idx.parts[r - 1] >= 2) out.push_back(std::move(idx));
  return out;
}

std::vector<SubsetJ> enumerate_subsets(int n, int l, int r) {
  if (n < 1) throw std::invalid_argument("enumerate_subsets: need n >= 1");
  if (l < 1 || l > r || r > n)
    throw std::invalid_argument("enumerate_subsets: need 1 <= l <= r <= n");
  std::vector<SubsetJ> out;
  out.reserve(binomial(r - 1, l - 1));
  std::vector<int> members;
  members.reserve(l);
  // Choose l-1 members from 1..r-1 in lexicographic order, then adjoin r.
  auto rec = [&](auto&& self, int next, int needed) -> void {
    if (needed == 0) {
      members.push_back(r);
      out.emplace_back(members, n);
      members.pop_back();
      return;
    }
    for (int v = next; v <= r - needed; ++v) {
      members.push_back(v);
      self(self, v + 1, needed - 1);
      members.pop_back();
    }
  };
  rec(rec, 1, l - 1);
  return out;
}

std::vector<SubsetJ> enumerate_nonempty_subsets(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_nonempty_subsets: need n >= 1");
  std::vector<SubsetJ> out;
  std::vector<int> members;
  auto rec = [&](auto&& self, int next) -> void {
    for (int v = next; v <= n; ++v) {
      members.push_back(v);
      out.emplace_back(members, n);
      self(self, v + 1);
      members.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Shuffle> enumerate_shuffles(int l, int r) {
  if (l < 1 || r < l) throw std::invalid_argument("enumerate_shuffles: need 1 <= l <= r");
  std::vector<Shuffle> out;
  out.reserve(binomial(r - 1, l - 1));
  const int len = r - 1;
  std::vector<int> image;  // sigma({1..l-1}), chosen increasing
  image.reserve(l - 1);
  auto emit = [&]() {
    std::vector<int> mapping(len, 0);
    std::vector<bool> used(len + 1, false);
    for (int i = 0; i < l - 1; ++i) {
      mapping[i] = image[i];
      used[image[i]] = true;
    }
    int next = 1;
    for (int i = l - 1; i < len; ++i) {
      while (used[next]) ++next;
      mapping[i] = next;
      used[next] = true;
    }
    out.emplace_back(std::move(mapping), l, r);
  };
  auto rec = [&](auto&& self, int next, int needed) -> void {
    if (needed == 0) {
      emit();
      return;
    }
    for (int v = next; v <= len - needed + 1; ++v) {
      image.push_back(v);
      self(self, v + 1, needed - 1);
      image.pop_back();
    }
  };
  rec(rec, 1, l - 1);
  return out;
}

SubsetJ shuffle_to_subset(const Shuffle& s, int ambient_depth) {
  if (ambient_depth < s.r)
    throw std::invalid_argument("shuffle_to_subset: ambient depth below r");
  std::vector<int> members(s.mapping.begin(), s.mapping.begin() + (s.l - 1));
  // The first block's image is increasing by construction.
  members.push_back(s.r);
  return SubsetJ(std::move(members), ambient_depth);
}

std::vector<ChainVector> enumerate_chain_set(int m, int n, int l) {
  std::vector<ChainVector> out;
  for_each_chain(m, n, l, [&](const std::vector<int>& q) { out.emplace_back(q, l); });
  return out;
}

bool chain_in_set(const std::vector<int>& entries, int m, int n, int l) {
  if (m < 1 || n < 1 || l < 1 || l > n)
    throw std::invalid_argument("chain_in_set: need m >= 1 and 1 <= l <= n");
  if (static_cast<int>(entries.size()) != n - 1) return false;
  for (int v : entries)
    if (v < 1 || v > m) return false;
  for (int i = 0; i < l - 1; ++i) {
    const int prev = (i == 0) ? m : entries[i - 1];
    if (!(entries[i] < prev)) return false;
  }
  for (int i = l; i < n - 1; ++i)
    if (!(entries[i - 1] <= entries[i])) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_constrained_tuples(int m, const SubsetJ& J,
                                                           int cap) {
  std::vector<std::vector<int>> out;
  for_each_constrained_tuple(m, J, cap,
                             [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

}  // namespace mlv
