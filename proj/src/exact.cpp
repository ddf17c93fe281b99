#include "mlv/exact.hpp"

#include <string>

#include "mlv/prng.hpp"

namespace mlv {

namespace {

std::string int_list_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string subset_str(const SubsetJ& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J.members[i]);
  }
  return s + "}";
}

using Params = std::vector<std::pair<std::string, std::string>>;

// Reciprocal of a product of positive longs, accumulated in an mpz so no
// intermediate can overflow.
class ReciprocalProduct {
 public:
  ReciprocalProduct() { mpz_init_set_ui(den_, 1); }
  ~ReciprocalProduct() { mpz_clear(den_); }
  ReciprocalProduct(const ReciprocalProduct&) = delete;
  ReciprocalProduct& operator=(const ReciprocalProduct&) = delete;

  void reset() { mpz_set_ui(den_, 1); }
  void multiply(unsigned long factor) { mpz_mul_ui(den_, den_, factor); }

  // acc += 1/den.  den >= 1 keeps the term canonical without a gcd pass.
  void add_reciprocal_to(Rational& acc) const {
    mpq_t term;
    mpq_init(term);
    mpz_set_ui(mpq_numref(term), 1);
    mpz_set(mpq_denref(term), den_);
    mpq_add(acc.raw(), acc.raw(), term);
    mpq_clear(term);
  }

 private:
  mpz_t den_;
};

Rational random_nonzero_rational(SplitMix64& g, long max_abs_num, long max_den) {
  long num = 0;
  while (num == 0) num = g.uniform(-max_abs_num, max_abs_num);
  return Rational(num, g.uniform(1, max_den));
}

Rational random_positive_rational(SplitMix64& g, long max_num, long max_den) {
  return Rational(g.uniform(1, max_num), g.uniform(1, max_den));
}

}  // namespace

Rational prefix_weight(int l, int m) {
  if (l < 1 || m < 1) throw std::invalid_argument("prefix_weight: need l >= 1, m >= 1");
  if (l == 1) return Rational(1);  // empty composition
  Rational total;
  // Literal enumeration of compositions with sum < m; the running product of
  // partial sums is carried down the recursion as a rational.
  auto rec = [&](auto&& self, int pos, long sum_so_far, const Rational& weight) -> void {
    if (pos == l - 1) {
      total += weight;
      return;
    }
    for (int v = 1; sum_so_far + v + (l - 2 - pos) < m; ++v) {
      const long s = sum_so_far + v;
      self(self, pos + 1, s, weight * Rational(1, s));
    }
  };
  rec(rec, 0, 0, Rational(1));
  return total;
}

Rational prefix_weight_by_chains(int l, int m) {
  if (l < 1 || m < 1)
    throw std::invalid_argument("prefix_weight_by_chains: need l >= 1, m >= 1");
  Rational total;
  ReciprocalProduct prod;
  // Chains for (m, n=l, l) are exactly the strictly decreasing vectors
  // m > q_1 > ... > q_{l-1} >= 1.
  for_each_chain(m, l, l, [&](const std::vector<int>& q) {
    prod.reset();
    for (int v : q) prod.multiply(static_cast<unsigned long>(v));
    prod.add_reciprocal_to(total);
  });
  return total;
}

Rational span_reciprocal(int l, int r, const PVector& p) {
  if (l < 1 || r < l) throw std::invalid_argument("span_reciprocal: need 1 <= l <= r");
  Rational result(1);
  long running = 0;
  for (int j = l; j <= r - 1; ++j) {
    running += p.entry(j);
    result *= Rational(1, running);
  }
  return result;
}

Rational shifted_tail_product(int l, int r, const PVector& p, const Index& kvec, int m) {
  const int n = kvec.depth();
  if (l < 1 || r < l || r > n + 1)
    throw std::invalid_argument("shifted_tail_product: need 1 <= l <= r <= n+1");
  if (m < 1) throw std::invalid_argument("shifted_tail_product: need m >= 1");
  Rational result(1);
  for (int j = r; j <= n; ++j) {
    const long shift = p.partial_sum(l, j);
    result *= Rational::reciprocal_pow(static_cast<unsigned long>(m + shift),
                                       static_cast<unsigned long>(kvec.parts[j - 1]));
  }
  return result;
}

Rational block_sum_definition(int l, const PVector& p, int k, int n, int m) {
  if (l < 1 || l > n) throw std::invalid_argument("block_sum_definition: need 1 <= l <= n");
  if (k <= n) throw std::invalid_argument("block_sum_definition: need k > n");
  Rational total;
  for (int r = l; r <= n; ++r) {
    Rational inner;
    for (const Index& kvec : enumerate_index_set(k, n, r))
      inner += shifted_tail_product(l, r, p, kvec, m);
    total += span_reciprocal(l, r, p) * inner;
  }
  return total;
}

Rational block_sum_closed(int l, const PVector& p, int k, int n, int m) {
  if (l < 1 || l > n) throw std::invalid_argument("block_sum_closed: need 1 <= l <= n");
  if (k <= n) throw std::invalid_argument("block_sum_closed: need k > n");
  // At l = n the block is a single bare term; the telescoped form below
  // needs at least one free running sum, so fall back to the definition.
  if (l == n) return block_sum_definition(l, p, k, n, m);
  const long full = p.partial_sum(l, n);
  return span_reciprocal(l, n - 1, p) *
         Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                  static_cast<unsigned long>(k - n + 1)) *
         (Rational(1, full) - Rational(1, static_cast<long>(m) + full));
}

Rational subset_sum_closed(int k, int n, int m, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("subset_sum_closed: need 1 <= l <= n");
  if (k <= n) throw std::invalid_argument("subset_sum_closed: need k > n");
  if (m < 1) throw std::invalid_argument("subset_sum_closed: need m >= 1");
  Rational chain_sum;
  ReciprocalProduct prod;
  for_each_chain(m, n, l, [&](const std::vector<int>& q) {
    prod.reset();
    for (int v : q) prod.multiply(static_cast<unsigned long>(v));
    prod.add_reciprocal_to(chain_sum);
  });
  return Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                  static_cast<unsigned long>(k - n + 1)) *
         chain_sum;
}

Rational subset_series_sigma(int k, int n, int m, const SubsetJ& J, int cap) {
  if (J.ambient_depth != n)
    throw std::invalid_argument("subset_series_sigma: subset ambient depth mismatch");
  if (k <= n) throw std::invalid_argument("subset_series_sigma: need k > n");
  if (cap < 1) throw std::invalid_argument("subset_series_sigma: need cap >= 1");
  const int l = J.cardinality();
  const int r = J.maximum();
  if (m < l) throw std::invalid_argument("subset_series_sigma: need m >= |J|");

  // The shuffle matched to J: slots 1..l-1 map onto J \ {r} in order, slots
  // l..r-1 onto the complement within {1..r-1}.  sigma_inv[pos] = slot.
  std::vector<int> sigma_inv(r, 0);  // 1-based positions 1..r-1
  {
    std::vector<bool> in_j(r + 1, false);
    for (int v : J.members) in_j[v] = true;
    int slot = 1;
    for (int pos = 1; pos <= r - 1; ++pos)
      if (in_j[pos]) sigma_inv[pos] = slot++;
    for (int pos = 1; pos <= r - 1; ++pos)
      if (!in_j[pos]) sigma_inv[pos] = slot++;
  }

  const std::vector<Index> kvecs = enumerate_index_set(k, n, r);
  Rational total;
  std::vector<int> p(n - 1, 0);  // absolute slots 1..n-1
  PVector pv;  // rebuilt per leaf; cheap at the scales this runs at

  auto leaf = [&]() {
    // Denominator from the shuffled running sums over positions 1..r-1.
    Rational denom(1);
    long running = 0;
    for (int pos = 1; pos <= r - 1; ++pos) {
      running += p[sigma_inv[pos] - 1];
      denom *= Rational(1, running);
    }
    pv = PVector(p, 1);
    Rational inner;
    for (const Index& kvec : kvecs) inner += shifted_tail_product(l, r, pv, kvec, m);
    total += denom * inner;
  };

  // Constrained block: p_1..p_{l-1} positive with sum < m; free block:
  // p_l..p_{n-1} in 1..cap.
  auto free_rec = [&](auto&& self, int slot) -> void {
    if (slot > n - 1) {
      leaf();
      return;
    }
    for (int v = 1; v <= cap; ++v) {
      p[slot - 1] = v;
      self(self, slot + 1);
    }
  };
  auto constrained_rec = [&](auto&& self, int slot, int sum) -> void {
    if (slot > l - 1) {
      free_rec(free_rec, l);
      return;
    }
    for (int v = 1; sum + v + (l - 1 - slot) < m; ++v) {
      p[slot - 1] = v;
      self(self, slot + 1, sum + v);
    }
  };
  constrained_rec(constrained_rec, 1, 0);
  return total;
}

IdentityCheckResult check_partial_fraction(const Rational& x, const Rational& y, int K) {
  if (K < 1) throw std::invalid_argument("check_partial_fraction: need K >= 1");
  if (x.is_zero() || y.is_zero() || (x + y).is_zero())
    throw std::invalid_argument("check_partial_fraction: x, y, x+y must be nonzero");
  const Rational xy = x + y;
  Rational lhs;
  for (int i = 1; i <= K; ++i)
    lhs += x.pow(-i) * y * xy.pow(-(K + 1 - i));
  lhs += xy.pow(-K);
  const Rational rhs = x.pow(-K);
  IdentityCheckResult res;
  res.identity = "partial_fraction";
  res.params = {{"x", x.str()}, {"y", y.str()}, {"K", std::to_string(K)}};
  res.lhs = lhs;
  res.rhs = rhs;
  res.pass = (lhs == rhs);
  return res;
}

IdentityCheckResult check_shuffle_identity(const std::vector<Rational>& xs,
                                           const std::vector<Rational>& ys) {
  for (const Rational& v : xs)
    if (v.sign() <= 0)
      throw std::invalid_argument("check_shuffle_identity: entries must be positive");
  for (const Rational& v : ys)
    if (v.sign() <= 0)
      throw std::invalid_argument("check_shuffle_identity: entries must be positive");
  const int s = static_cast<int>(xs.size());
  const int t = static_cast<int>(ys.size());

  auto reciprocal_partial_sums = [](const std::vector<Rational>& v) {
    Rational result(1);
    Rational sum;
    for (const Rational& e : v) {
      sum += e;
      result *= sum.inverse();
    }
    return result;
  };

  Rational lhs;
  std::vector<Rational> z(s + t, Rational(0));
  for (const Shuffle& sh : enumerate_shuffles(s + 1, s + t + 1)) {
    for (int i = 1; i <= s; ++i) z[sh.mapping[i - 1] - 1] = xs[i - 1];
    for (int i = 1; i <= t; ++i) z[sh.mapping[s + i - 1] - 1] = ys[i - 1];
    lhs += reciprocal_partial_sums(z);
  }
  const Rational rhs = reciprocal_partial_sums(xs) * reciprocal_partial_sums(ys);

  IdentityCheckResult res;
  res.identity = "shuffle";
  std::string xstr = "(", ystr = "(";
  for (int i = 0; i < s; ++i) xstr += (i ? "," : "") + xs[i].str();
  for (int i = 0; i < t; ++i) ystr += (i ? "," : "") + ys[i].str();
  res.params = {{"s", std::to_string(s)},
                {"t", std::to_string(t)},
                {"xs", xstr + ")"},
                {"ys", ystr + ")"}};
  res.lhs = lhs;
  res.rhs = rhs;
  res.pass = (lhs == rhs);
  return res;
}

IdentityCheckResult check_telescoping(int l, int t, const PVector& p, int k, int n, int m) {
  if (!(1 <= l && l <= t && t <= n - 1))
    throw std::invalid_argument("check_telescoping: need 1 <= l <= t <= n-1");
  if (k <= n) throw std::invalid_argument("check_telescoping: need k > n");
  Rational lhs;
  for (int r = l; r <= t; ++r) {
    Rational inner;
    for (const Index& kvec : enumerate_index_set(k, n, r))
      inner += shifted_tail_product(l, r, p, kvec, m);
    lhs += span_reciprocal(l, r, p) * inner;
  }
  Rational rhs_inner;
  for (const Index& kvec : enumerate_index_set(k, n, t))
    rhs_inner += Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                          static_cast<unsigned long>(kvec.parts[t - 1])) *
                 shifted_tail_product(l, t + 1, p, kvec, m);
  const Rational rhs = span_reciprocal(l, t, p) * rhs_inner;

  IdentityCheckResult res;
  res.identity = "telescoping";
  res.params = {{"l", std::to_string(l)}, {"t", std::to_string(t)},
                {"p", int_list_str(p.entries)}, {"k", std::to_string(k)},
                {"n", std::to_string(n)}, {"m", std::to_string(m)}};
  res.lhs = lhs;
  res.rhs = rhs;
  res.pass = (lhs == rhs);
  return res;
}

IdentityCheckResult check_block_sum(int l, const PVector& p, int k, int n, int m) {
  IdentityCheckResult res;
  res.identity = "block_sum";
  res.params = {{"l", std::to_string(l)}, {"p", int_list_str(p.entries)},
                {"k", std::to_string(k)}, {"n", std::to_string(n)},
                {"m", std::to_string(m)}};
  res.lhs = block_sum_definition(l, p, k, n, m);
  res.rhs = block_sum_closed(l, p, k, n, m);
  res.pass = (res.lhs == res.rhs);
  return res;
}

IdentityCheckResult check_prefix_weight_forms(int l, int m) {
  IdentityCheckResult res;
  res.identity = "prefix_weight";
  res.params = {{"l", std::to_string(l)}, {"m", std::to_string(m)}};
  res.lhs = prefix_weight(l, m);
  res.rhs = prefix_weight_by_chains(l, m);
  res.pass = (res.lhs == res.rhs);
  return res;
}

IdentityCheckResult check_fixed_m_closed(int k, int n, int m) {
  IdentityCheckResult res;
  res.identity = "fixed_m_closed";
  res.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                {"m", std::to_string(m)}};
  Rational lhs;
  for (int l = 1; l <= n; ++l) {
    const Rational term = subset_sum_closed(k, n, m, l);
    if (l % 2 == 1)
      lhs += term;
    else
      lhs -= term;
  }
  res.lhs = lhs;
  res.rhs = Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                     static_cast<unsigned long>(k));
  res.pass = (res.lhs == res.rhs);
  return res;
}

IdentityCheckResult check_inclusion_exclusion(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("check_inclusion_exclusion: need n >= 1, m >= 1");
  Rational lhs;
  bool partitions_ok = true;
  ReciprocalProduct prod;
  const std::vector<int> constant_chain(static_cast<std::size_t>(n - 1), m);
  for (int l = 1; l <= n; ++l) {
    Rational level;
    for_each_chain(m, n, l, [&](const std::vector<int>& q) {
      prod.reset();
      for (int v : q) prod.multiply(static_cast<unsigned long>(v));
      prod.add_reciprocal_to(level);
      // Each chain at level l must lie in exactly one neighbouring set:
      // level 1 splits off the constant chain, other levels split between
      // levels l-1 and l+1.
      const bool in_prev = (l == 1) ? (q == constant_chain) : chain_in_set(q, m, n, l - 1);
      const bool in_next = (l + 1 <= n) && chain_in_set(q, m, n, l + 1);
      if (in_prev == in_next) partitions_ok = false;
    });
    if (l % 2 == 1)
      lhs += level;
    else
      lhs -= level;
  }
  IdentityCheckResult res;
  res.identity = "inclusion_exclusion";
  res.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)},
                {"partitions", partitions_ok ? "ok" : "violated"}};
  res.lhs = lhs;
  res.rhs = Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                     static_cast<unsigned long>(n - 1));
  res.pass = (res.lhs == res.rhs) && partitions_ok;
  return res;
}

IdentityCheckResult check_numerator_identity(const Rational& t,
                                             const std::vector<int>& ms, int r) {
  if (r < 1 || r > static_cast<int>(ms.size()))
    throw std::invalid_argument("check_numerator_identity: need 1 <= r <= |ms|");
  for (int i = 0; i < r; ++i)
    if (ms[i] < 1)
      throw std::invalid_argument("check_numerator_identity: exponents must be positive");
  Rational lhs;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    long expo = 0;
    int bits = 0;
    for (int j = 0; j < r; ++j)
      if (mask & (1u << j)) {
        expo += ms[j];
        ++bits;
      }
    const Rational term = t.pow(expo);
    if (bits % 2 == 1)
      lhs += term;
    else
      lhs -= term;
  }
  Rational product(1);
  for (int j = 0; j < r; ++j) product *= Rational(1) - t.pow(ms[j]);
  const Rational rhs = Rational(1) - product;

  IdentityCheckResult res;
  res.identity = "numerator_poly";
  res.params = {{"t", t.str()},
                {"ms", int_list_str(std::vector<int>(ms.begin(), ms.begin() + r))},
                {"r", std::to_string(r)}};
  res.lhs = lhs;
  res.rhs = rhs;
  res.pass = (lhs == rhs);
  return res;
}

IdentityCheckResult check_sigma_parameterization(int k, int n, int m, const SubsetJ& J,
                                                 int cap) {
  // Direct route: enumerate constrained tuples and their partial sums.
  Rational direct;
  for (const Index& kvec : enumerate_index_set(k, n, J.maximum())) {
    for_each_constrained_tuple(m, J, cap, [&](const std::vector<int>& tuple) {
      Rational term(1);
      long s = 0;
      for (int j = 1; j <= n; ++j) {
        s += tuple[j - 1];
        term *= Rational::reciprocal_pow(static_cast<unsigned long>(s),
                                         static_cast<unsigned long>(kvec.parts[j - 1]));
      }
      direct += term;
    });
  }
  IdentityCheckResult res;
  res.identity = "sigma_parameterization";
  res.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                {"m", std::to_string(m)}, {"J", subset_str(J)},
                {"cap", std::to_string(cap)}};
  res.lhs = subset_series_sigma(k, n, m, J, cap);
  res.rhs = direct;
  res.pass = (res.lhs == res.rhs);
  return res;
}

// --- Suite drivers ---

std::vector<IdentityCheckResult> run_partial_fraction_suite(int k_max, int samples,
                                                            std::uint64_t seed) {
  std::vector<IdentityCheckResult> out;
  for (int K = 1; K <= k_max; ++K) {
    SplitMix64 g(derive_seed(seed, static_cast<std::uint64_t>(K)));
    for (int s = 0; s < samples; ++s) {
      const Rational x = random_nonzero_rational(g, 9, 9);
      Rational y = random_nonzero_rational(g, 9, 9);
      while ((x + y).is_zero()) y = random_nonzero_rational(g, 9, 9);
      IdentityCheckResult r = check_partial_fraction(x, y, K);
      r.params.emplace_back("sample", std::to_string(s));
      r.params.emplace_back("seed", std::to_string(seed));
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<IdentityCheckResult> run_shuffle_suite(int max_blocks, int samples,
                                                   std::uint64_t seed) {
  std::vector<IdentityCheckResult> out;
  std::uint64_t point = 0;
  for (int s = 0; s <= max_blocks; ++s) {
    for (int t = 0; s + t <= max_blocks; ++t) {
      SplitMix64 g(derive_seed(seed, point++));
      for (int i = 0; i < samples; ++i) {
        std::vector<Rational> xs, ys;
        for (int j = 0; j < s; ++j) xs.push_back(random_positive_rational(g, 9, 9));
        for (int j = 0; j < t; ++j) ys.push_back(random_positive_rational(g, 9, 9));
        IdentityCheckResult r = check_shuffle_identity(xs, ys);
        r.params.emplace_back("sample", std::to_string(i));
        r.params.emplace_back("seed", std::to_string(seed));
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<IdentityCheckResult> run_telescoping_suite(int n_max, int k_extra_max,
                                                       int m_max, int samples,
                                                       std::uint64_t seed) {
  std::vector<IdentityCheckResult> out;
  std::uint64_t point = 0;
  for (int n = 2; n <= n_max; ++n)
    for (int l = 1; l <= n - 1; ++l)
      for (int t = l; t <= n - 1; ++t)
        for (int kx = 1; kx <= k_extra_max; ++kx) {
          SplitMix64 g(derive_seed(seed, point++));
          for (int i = 0; i < samples; ++i) {
            const int m = static_cast<int>(g.uniform(1, m_max));
            std::vector<int> entries(static_cast<std::size_t>(n - l));
            for (int& e : entries) e = static_cast<int>(g.uniform(1, 8));
            IdentityCheckResult r =
                check_telescoping(l, t, PVector(entries, l), n + kx, n, m);
            r.params.emplace_back("sample", std::to_string(i));
            r.params.emplace_back("seed", std::to_string(seed));
            out.push_back(std::move(r));
          }
        }
  return out;
}

std::vector<IdentityCheckResult> run_block_sum_suite(int n_max, int k_extra_max,
                                                     int m_max, int samples,
                                                     std::uint64_t seed) {
  std::vector<IdentityCheckResult> out;
  std::uint64_t point = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 1; l <= n; ++l)
      for (int kx = 1; kx <= k_extra_max; ++kx) {
        SplitMix64 g(derive_seed(seed, point++));
        for (int i = 0; i < samples; ++i) {
          const int m = static_cast<int>(g.uniform(1, m_max));
          std::vector<int> entries(static_cast<std::size_t>(n - l));
          for (int& e : entries) e = static_cast<int>(g.uniform(1, 8));
          IdentityCheckResult r = check_block_sum(l, PVector(entries, l), n + kx, n, m);
          r.params.emplace_back("sample", std::to_string(i));
          r.params.emplace_back("seed", std::to_string(seed));
          out.push_back(std::move(r));
        }
      }
  return out;
}

std::vector<IdentityCheckResult> run_fixed_m_suite(int n_min, int n_max, int k_extra_min,
                                                   int k_extra_max, int m_min, int m_max) {
  std::vector<IdentityCheckResult> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int m = m_min; m <= m_max; ++m) {
      // The chain sums do not depend on the weight; hoist them so the
      // k sweep costs one power each instead of a fresh enumeration.
      std::vector<Rational> chain_sums(static_cast<std::size_t>(n) + 1);
      ReciprocalProduct prod;
      for (int l = 1; l <= n; ++l) {
        Rational sum;
        for_each_chain(m, n, l, [&](const std::vector<int>& q) {
          prod.reset();
          for (int v : q) prod.multiply(static_cast<unsigned long>(v));
          prod.add_reciprocal_to(sum);
        });
        chain_sums[static_cast<std::size_t>(l)] = sum;
      }
      for (int kx = k_extra_min; kx <= k_extra_max; ++kx) {
        const int k = n + kx;
        Rational lhs;
        const Rational scale = Rational::reciprocal_pow(
            static_cast<unsigned long>(m), static_cast<unsigned long>(k - n + 1));
        for (int l = 1; l <= n; ++l) {
          const Rational term = scale * chain_sums[static_cast<std::size_t>(l)];
          if (l % 2 == 1)
            lhs += term;
          else
            lhs -= term;
        }
        IdentityCheckResult r;
        r.identity = "fixed_m_closed";
        r.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)},
                    {"m", std::to_string(m)}};
        r.lhs = lhs;
        r.rhs = Rational::reciprocal_pow(static_cast<unsigned long>(m),
                                         static_cast<unsigned long>(k));
        r.pass = (r.lhs == r.rhs);
        out.push_back(std::move(r));
      }
    }
  return out;
}

std::vector<IdentityCheckResult> run_inclusion_exclusion_suite(int n_max, int m_max) {
  std::vector<IdentityCheckResult> out;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) out.push_back(check_inclusion_exclusion(n, m));
  return out;
}

std::vector<IdentityCheckResult> run_numerator_suite(int r_max, int samples,
                                                     std::uint64_t seed) {
  std::vector<IdentityCheckResult> out;
  for (int r = 1; r <= r_max; ++r) {
    SplitMix64 g(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (int i = 0; i < samples; ++i) {
      std::vector<int> ms(static_cast<std::size_t>(r));
      for (int& v : ms) v = static_cast<int>(g.uniform(1, 10));
      const Rational t(g.uniform(-4, 4), g.uniform(1, 4));
      IdentityCheckResult res = check_numerator_identity(t, ms, r);
      res.params.emplace_back("sample", std::to_string(i));
      res.params.emplace_back("seed", std::to_string(seed));
      out.push_back(std::move(res));
    }
  }
  return out;
}

std::vector<IdentityCheckResult> run_prefix_weight_suite(int l_max, int m_max) {
  std::vector<IdentityCheckResult> out;
  for (int l = 1; l <= l_max; ++l)
    for (int m = 1; m <= m_max; ++m) out.push_back(check_prefix_weight_forms(l, m));
  return out;
}

}  // namespace mlv
