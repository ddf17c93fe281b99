#include "mlv/series.hpp"

#include <cmath>

#include "mlv/double_double.hpp"
#include "mlv/format.hpp"

namespace mlv {

namespace {

// C(cap, n) in double precision; a safe over-estimate of the number of
// tuples with final partial sum <= cap, used for enumeration budgets.
double simplex_count(long cap, int n) {
  double c = 1.0;
  for (int i = 0; i < n; ++i) c = c * static_cast<double>(cap - i) / (i + 1);
  return c > 0.0 ? c : 0.0;
}

constexpr double kEnumerationBudget = 2e8;

// ---- Level-by-level aggregation over prefix sums ----
//
// State g[s] after level j holds the sum, over all tuples of the first j
// summands with s_j == s, of prod_{j' <= j} w_{j'} / s_{j'}^{k_{j'}}.
// A virtual level 0 concentrates mass 1 at s = 0.  Plain levels advance by
// a running prefix sum; "carry" levels additionally weight each transition
// s' -> s by t^(s - s'), which a single register propagates in O(1) per
// step since t^(s+1-s') = t * t^(s-s').

DD nested_sum_plain(const std::vector<int>& ks, long cap) {
  const int n = static_cast<int>(ks.size());
  if (cap < n) return DD(0.0);
  std::vector<DD> g(static_cast<std::size_t>(cap) + 1);
  g[0] = DD(1.0);
  for (int j = 1; j <= n; ++j) {
    DD prefix;
    DD pending = g[0];
    for (long s = 1; s <= cap; ++s) {
      prefix = dd_add(prefix, pending);
      pending = g[static_cast<std::size_t>(s)];
      g[static_cast<std::size_t>(s)] = dd_mul(prefix, dd_reciprocal_pow(s, ks[j - 1]));
    }
    g[0] = DD(0.0);
  }
  DD total;
  for (long s = 1; s <= cap; ++s) total = dd_add(total, g[static_cast<std::size_t>(s)]);
  return total;
}

CDD nested_sum_power(const std::vector<int>& ks, long cap, unsigned carry_mask,
                     std::complex<double> t) {
  const int n = static_cast<int>(ks.size());
  if (cap < n) return CDD{};
  const CDD tc{DD(t.real()), DD(t.imag())};
  std::vector<CDD> g(static_cast<std::size_t>(cap) + 1);
  g[0] = CDD{DD(1.0), DD(0.0)};
  for (int j = 1; j <= n; ++j) {
    const bool carry = (carry_mask >> (j - 1)) & 1u;
    CDD reg;
    CDD pending = g[0];
    for (long s = 1; s <= cap; ++s) {
      if (carry)
        reg = cdd_mul(cdd_add(reg, pending), tc);
      else
        reg = cdd_add(reg, pending);
      pending = g[static_cast<std::size_t>(s)];
      g[static_cast<std::size_t>(s)] = cdd_mul(reg, dd_reciprocal_pow(s, ks[j - 1]));
    }
    g[0] = CDD{};
  }
  CDD total;
  for (long s = 1; s <= cap; ++s)
    total = cdd_add(total, g[static_cast<std::size_t>(s)]);
  return total;
}

// Periodic weights track the constrained sum modulo the period P.  State
// g[s][d] with d = (sum of J-summands so far) mod P.  Plain levels keep d;
// carry levels add (s - s') to it, which is handled by re-indexing to the
// invariant class c = (d - s) mod P.
CDD nested_sum_periodic(const std::vector<int>& ks, long cap, const SubsetJ& J,
                        const std::vector<std::complex<double>>& values) {
  const int n = static_cast<int>(ks.size());
  const long P = static_cast<long>(values.size());
  if (cap < n) return CDD{};
  std::vector<CDD> g((static_cast<std::size_t>(cap) + 1) * static_cast<std::size_t>(P));
  auto at = [&](long s, long d) -> CDD& {
    return g[static_cast<std::size_t>(s) * static_cast<std::size_t>(P) +
             static_cast<std::size_t>(d)];
  };
  at(0, 0) = CDD{DD(1.0), DD(0.0)};
  std::vector<CDD> reg(static_cast<std::size_t>(P));
  std::vector<CDD> pending(static_cast<std::size_t>(P));
  std::vector<CDD> row(static_cast<std::size_t>(P));
  for (int j = 1; j <= n; ++j) {
    const bool carry = J.contains(j);
    for (long d = 0; d < P; ++d) {
      reg[static_cast<std::size_t>(d)] = CDD{};
      pending[static_cast<std::size_t>(d)] = at(0, d);
    }
    for (long s = 1; s <= cap; ++s) {
      if (carry) {
        // pending holds the old row at s-1; its (s-1, d) state belongs to
        // class c = (d - (s-1)) mod P.
        for (long d = 0; d < P; ++d) {
          const long c = ((d - (s - 1)) % P + P) % P;
          reg[static_cast<std::size_t>(c)] =
              cdd_add(reg[static_cast<std::size_t>(c)], pending[static_cast<std::size_t>(d)]);
        }
      } else {
        for (long d = 0; d < P; ++d)
          reg[static_cast<std::size_t>(d)] =
              cdd_add(reg[static_cast<std::size_t>(d)], pending[static_cast<std::size_t>(d)]);
      }
      const DD inv = dd_reciprocal_pow(s, ks[j - 1]);
      if (carry) {
        for (long c = 0; c < P; ++c)
          row[static_cast<std::size_t>((c + s) % P)] =
              cdd_mul(reg[static_cast<std::size_t>(c)], inv);
      } else {
        for (long d = 0; d < P; ++d)
          row[static_cast<std::size_t>(d)] = cdd_mul(reg[static_cast<std::size_t>(d)], inv);
      }
      for (long d = 0; d < P; ++d) {
        pending[static_cast<std::size_t>(d)] = at(s, d);
        at(s, d) = row[static_cast<std::size_t>(d)];
      }
    }
    for (long d = 0; d < P; ++d) at(0, d) = CDD{};
  }
  // Weight each residue class: the constrained sum w satisfies w == d (mod P),
  // so f(w) = values[(d-1) mod P].
  CDD total;
  for (long d = 0; d < P; ++d) {
    CDD class_total;
    for (long s = 1; s <= cap; ++s) class_total = cdd_add(class_total, at(s, d));
    const std::complex<double> fv = values[static_cast<std::size_t>(((d - 1) % P + P) % P)];
    total = cdd_add(total, cdd_mul(class_total, CDD{DD(fv.real()), DD(fv.imag())}));
  }
  return total;
}

void validate_weighted_args(const Index& kvec, const SubsetJ& J, const TruncationSpec& t) {
  if (!kvec.admissible())
    throw std::invalid_argument("series: index vector must end in a part >= 2");
  if (J.ambient_depth != kvec.depth())
    throw std::invalid_argument("series: subset ambient depth must match index depth");
  if (t.cap < 1) throw std::invalid_argument("series: cap must be >= 1");
}

unsigned carry_mask_of(const SubsetJ& J) {
  unsigned mask = 0;
  for (int j : J.members) mask |= 1u << (j - 1);
  return mask;
}

std::complex<double> dd_ratio_rhs(long m, int k) {
  return {dd_reciprocal_pow(m, k).to_double(), 0.0};
}

}  // namespace

double WeightFunction::sup_bound() const {
  switch (kind_) {
    case Kind::one:
      return 1.0;
    case Kind::power:
      return std::abs(t_) <= 1.0 ? std::abs(t_) : 1.0;
    case Kind::periodic:
    case Kind::table: {
      double m = 0.0;
      for (const auto& v : values_) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 1.0;
}

std::string WeightFunction::describe() const {
  switch (kind_) {
    case Kind::one:
      return "one";
    case Kind::power:
      return "power(t=" + format_complex(t_) + ")";
    case Kind::periodic:
      return "periodic(P=" + std::to_string(values_.size()) + ")";
    case Kind::table:
      return "table(len=" + std::to_string(values_.size()) + ")";
  }
  return "?";
}

double tail_estimate(const Index& kvec, double growth_exponent, long cap) {
  const int n = kvec.depth();
  const int k = kvec.weight();
  if (!kvec.admissible())
    throw std::invalid_argument("tail_estimate: index vector must be admissible");
  if (cap < 1) throw std::invalid_argument("tail_estimate: cap must be >= 1");
  if (!(growth_exponent < static_cast<double>(k - n)))
    throw std::invalid_argument("tail_estimate: need growth < weight - depth");
  if (n == 1) {
    const double e = static_cast<double>(k - 1) - growth_exponent;
    return std::pow(static_cast<double>(cap), -e) / e;
  }
  const double e = std::min(static_cast<double>(kvec.parts.back() - 1),
                            static_cast<double>(k - n) - growth_exponent);
  double factorial = 1.0;
  for (int i = 2; i <= n - 1; ++i) factorial *= i;
  const double lg = std::log(static_cast<double>(cap)) + 2.0;
  double poly = 1.0;
  for (int i = 0; i < n - 1; ++i) poly *= lg;
  return 2.0 * poly / factorial * std::pow(static_cast<double>(cap), -e) / e;
}

NumericResult eval_zeta(int k, const TruncationSpec& trunc) {
  if (k < 2) throw std::invalid_argument("eval_zeta: need k >= 2");
  if (trunc.cap < 1) throw std::invalid_argument("eval_zeta: cap must be >= 1");
  DD total;
  for (long m = 1; m <= trunc.cap; ++m) total = dd_add(total, dd_reciprocal_pow(m, k));
  NumericResult res;
  res.value = {total.to_double(), 0.0};
  res.tail = tail_estimate(Index({k}), 0.0, trunc.cap);
  res.cap = trunc.cap;
  return res;
}

NumericResult eval_multiple_zeta(const Index& kvec, const TruncationSpec& trunc) {
  if (!kvec.admissible())
    throw std::invalid_argument("eval_multiple_zeta: index vector must be admissible");
  if (trunc.cap < 1) throw std::invalid_argument("eval_multiple_zeta: cap must be >= 1");
  if (kvec.depth() == 1) return eval_zeta(kvec.parts[0], trunc);
  NumericResult res;
  res.value = {nested_sum_plain(kvec.parts, trunc.cap).to_double(), 0.0};
  res.tail = tail_estimate(kvec, 0.0, trunc.cap);
  res.cap = trunc.cap;
  return res;
}

NumericResult eval_weighted_zeta(const Index& kvec, const WeightFunction& f,
                                 const SubsetJ& J, const TruncationSpec& trunc) {
  validate_weighted_args(kvec, J, trunc);
  const long cap = trunc.cap;
  NumericResult res;
  res.cap = cap;
  switch (f.kind()) {
    case WeightFunction::Kind::one:
      res.value = {nested_sum_plain(kvec.parts, cap).to_double(), 0.0};
      break;
    case WeightFunction::Kind::power:
      res.value =
          nested_sum_power(kvec.parts, cap, carry_mask_of(J), f.parameter()).to_complex();
      break;
    case WeightFunction::Kind::periodic: {
      if (static_cast<long>(f.values().size()) * (cap + 1) >
          static_cast<long>(5e7))
        throw std::invalid_argument(
            "eval_weighted_zeta: period too large for this cap");
      res.value = nested_sum_periodic(kvec.parts, cap, J, f.values()).to_complex();
      break;
    }
    case WeightFunction::Kind::table: {
      if (simplex_count(cap, kvec.depth()) > kEnumerationBudget)
        throw std::invalid_argument(
            "eval_weighted_zeta: table weights enumerate tuples directly; "
            "depth/cap combination exceeds the enumeration budget");
      CDD total;
      const long len = static_cast<long>(f.values().size());
      for_each_simplex_tuple(
          kvec.depth(), cap,
          [&](const std::vector<long>& m, const std::vector<long>& s) {
            long w = 0;
            for (int j : J.members) w += m[static_cast<std::size_t>(j - 1)];
            if (w > len) return;  // outside the table's support
            DD coeff(1.0);
            for (int j = 0; j < kvec.depth(); ++j)
              coeff = dd_mul(coeff, dd_reciprocal_pow(s[static_cast<std::size_t>(j)],
                                                      kvec.parts[static_cast<std::size_t>(j)]));
            const std::complex<double> fv = f(w);
            total = cdd_add(total, cdd_mul(CDD{DD(fv.real()), DD(fv.imag())}, coeff));
          });
      res.value = total.to_complex();
      break;
    }
  }
  res.tail = f.sup_bound() * tail_estimate(kvec, 0.0, cap);
  return res;
}

NumericResult eval_subset_series(int k, int n, int m, const SubsetJ& J,
                                 const TruncationSpec& trunc) {
  if (J.ambient_depth != n)
    throw std::invalid_argument("eval_subset_series: subset ambient depth mismatch");
  if (k <= n) throw std::invalid_argument("eval_subset_series: need k > n");
  if (m < J.cardinality())
    throw std::invalid_argument("eval_subset_series: need m >= |J|");
  if (trunc.cap < 1) throw std::invalid_argument("eval_subset_series: cap must be >= 1");
  const long cap = trunc.cap;
  const int l = J.cardinality();
  const std::vector<Index> kvecs = enumerate_index_set(k, n, J.maximum());

  {
    double per_kvec = 1.0;
    for (int i = 0; i < l - 1; ++i)
      per_kvec = per_kvec * static_cast<double>(m - 1 - i) / (i + 1);
    for (int i = 0; i < n - l; ++i) per_kvec *= static_cast<double>(cap);
    if (per_kvec * static_cast<double>(kvecs.size()) > kEnumerationBudget)
      throw std::invalid_argument("eval_subset_series: enumeration budget exceeded");
  }

  DD total;
  for (const Index& kvec : kvecs) {
    for_each_constrained_tuple(m, J, static_cast<int>(cap),
                               [&](const std::vector<int>& tuple) {
                                 DD term(1.0);
                                 long s = 0;
                                 for (int j = 0; j < n; ++j) {
                                   s += tuple[static_cast<std::size_t>(j)];
                                   term = dd_mul(term,
                                                 dd_reciprocal_pow(
                                                     s, kvec.parts[static_cast<std::size_t>(j)]));
                                 }
                                 total = dd_add(total, term);
                               });
  }

  // Tail heuristic: each free (non-constrained) coordinate j contributes a
  // one-dimensional tail with decay exponent sum_{j' >= j} k_{j'} - 1;
  // union-bound over free coordinates and over the index set.
  double tail = 0.0;
  const double lg = std::log(static_cast<double>(cap)) + 2.0;
  double factorial = 1.0;
  for (int i = 2; i <= n - 1; ++i) factorial *= i;
  double poly = 1.0;
  for (int i = 0; i < n - 1; ++i) poly *= lg;
  for (const Index& kvec : kvecs) {
    for (int j = 1; j <= n; ++j) {
      if (J.contains(j)) continue;
      int decay = 0;
      for (int j2 = j; j2 <= n; ++j2) decay += kvec.parts[static_cast<std::size_t>(j2 - 1)];
      const double e = decay - 1;
      tail += 2.0 * poly / factorial * std::pow(static_cast<double>(cap), -e) / e;
    }
  }

  NumericResult res;
  res.value = {total.to_double(), 0.0};
  res.tail = tail;
  res.cap = cap;
  return res;
}

NumericCheckResult check_sum_formula(int n, int k, const WeightFunction& f,
                                     const TruncationSpec& trunc, double tol) {
  if (n < 1) throw std::invalid_argument("check_sum_formula: need n >= 1");
  if (k <= n) throw std::invalid_argument("check_sum_formula: need k > n");
  if (trunc.cap < 1) throw std::invalid_argument("check_sum_formula: cap must be >= 1");
  const long cap = trunc.cap;

  CDD lhs;
  double allowance = 0.0;
  for (const SubsetJ& J : enumerate_nonempty_subsets(n)) {
    const int sign = (J.cardinality() % 2 == 1) ? 1 : -1;
    for (const Index& kvec : enumerate_index_set(k, n, J.maximum())) {
      const NumericResult r = eval_weighted_zeta(kvec, f, J, trunc);
      const CDD v{DD(r.value.real()), DD(r.value.imag())};
      lhs = (sign > 0) ? cdd_add(lhs, v) : cdd_sub(lhs, v);
      allowance += r.tail;
    }
  }

  CDD rhs;
  for (long m = 1; m <= cap; ++m) {
    const std::complex<double> fv = f(m);
    rhs = cdd_add(rhs, cdd_mul(CDD{DD(fv.real()), DD(fv.imag())},
                               dd_reciprocal_pow(m, k)));
  }
  const double rhs_tail =
      f.sup_bound() * std::pow(static_cast<double>(cap), -(k - 1)) / (k - 1);
  allowance += rhs_tail;

  NumericCheckResult res;
  res.identity = "sum_formula";
  res.lhs = lhs.to_complex();
  res.rhs = rhs.to_complex();
  res.residual = std::abs(res.lhs - res.rhs);
  res.tol = tol;
  res.tail_allowance = allowance;
  res.cap = cap;
  res.pass = res.residual <= tol + allowance;
  res.params = {{"n", std::to_string(n)},
                {"k", std::to_string(k)},
                {"f", f.describe()},
                {"cap", std::to_string(cap)},
                {"tol", format_double(tol)}};
  return res;
}

NumericCheckResult check_fixed_m(int n, int k, int m, const TruncationSpec& trunc,
                                 double tol) {
  if (n < 1) throw std::invalid_argument("check_fixed_m: need n >= 1");
  if (k <= n) throw std::invalid_argument("check_fixed_m: need k > n");
  if (m < 1) throw std::invalid_argument("check_fixed_m: need m >= 1");

  DD lhs;
  double allowance = 0.0;
  for (const SubsetJ& J : enumerate_nonempty_subsets(n)) {
    if (m < J.cardinality()) continue;  // the constrained set is empty
    const NumericResult r = eval_subset_series(k, n, m, J, trunc);
    const DD v(r.value.real());
    lhs = (J.cardinality() % 2 == 1) ? dd_add(lhs, v) : dd_sub(lhs, v);
    allowance += r.tail;
  }

  NumericCheckResult res;
  res.identity = "fixed_m_numeric";
  res.lhs = {lhs.to_double(), 0.0};
  res.rhs = dd_ratio_rhs(m, k);
  res.residual = std::abs(res.lhs - res.rhs);
  res.tol = tol;
  res.tail_allowance = allowance;
  res.cap = trunc.cap;
  res.pass = res.residual <= tol + allowance;
  res.params = {{"n", std::to_string(n)},
                {"k", std::to_string(k)},
                {"m", std::to_string(m)},
                {"cap", std::to_string(trunc.cap)},
                {"tol", format_double(tol)}};
  return res;
}

NumericCheckResult check_power_weight(int n, int k, std::complex<double> t,
                                      const TruncationSpec& trunc, double tol) {
  if (n < 1) throw std::invalid_argument("check_power_weight: need n >= 1");
  if (k <= n) throw std::invalid_argument("check_power_weight: need k > n");
  if (std::abs(t) > 1.0 + 1e-12)
    throw std::invalid_argument("check_power_weight: need |t| <= 1");
  if (trunc.cap < 1) throw std::invalid_argument("check_power_weight: cap must be >= 1");
  const long cap = trunc.cap;

  // Product form: numerator (1-t^{m_1})...(1-t^{m_r}) expanded over subsets
  // T of the first r levels, with carries tracking t^{sum_{j in T} m_j}.
  // The complement form reuses the same evaluations: numerator
  // 1 - prod(1-t^{m_j}) has value V_empty - (product-form inner sum).
  CDD lhs_product;
  CDD lhs_complement;
  double allowance_product = 0.0;
  double allowance_complement = 0.0;
  for (int r = 1; r <= n; ++r) {
    for (const Index& kvec : enumerate_index_set_prime(k, n, r)) {
      CDD inner;
      CDD v_empty;
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        const CDD v = nested_sum_power(kvec.parts, cap, mask, t);
        if (mask == 0) v_empty = v;
        int bits = 0;
        for (unsigned b = mask; b; b >>= 1) bits += static_cast<int>(b & 1u);
        inner = (bits % 2 == 0) ? cdd_add(inner, v) : cdd_sub(inner, v);
      }
      lhs_product = cdd_add(lhs_product, inner);
      lhs_complement = cdd_add(lhs_complement, cdd_sub(v_empty, inner));
      const double base = tail_estimate(kvec, 0.0, cap);
      allowance_product += std::ldexp(base, r);          // 2^r terms, each bounded
      allowance_complement += (1.0 + std::ldexp(1.0, r)) * base;
    }
  }

  CDD rhs_product;
  CDD rhs_complement;
  {
    const CDD tc{DD(t.real()), DD(t.imag())};
    CDD tpow{DD(1.0), DD(0.0)};
    const CDD one{DD(1.0), DD(0.0)};
    for (long m = 1; m <= cap; ++m) {
      tpow = cdd_mul(tpow, tc);
      const DD inv = dd_reciprocal_pow(m, k);
      rhs_product = cdd_add(rhs_product, cdd_mul(cdd_sub(one, tpow), inv));
      rhs_complement = cdd_add(rhs_complement, cdd_mul(tpow, inv));
    }
    const double zeta_tail = std::pow(static_cast<double>(cap), -(k - 1)) / (k - 1);
    allowance_product += 2.0 * zeta_tail;
    allowance_complement += zeta_tail;
  }

  const double residual_product = std::abs(lhs_product.to_complex() - rhs_product.to_complex());
  const double residual_complement =
      std::abs(lhs_complement.to_complex() - rhs_complement.to_complex());

  NumericCheckResult res;
  res.identity = "power_weight";
  res.lhs = lhs_product.to_complex();
  res.rhs = rhs_product.to_complex();
  res.residual = residual_product;
  res.tol = tol;
  res.tail_allowance = allowance_product;
  res.cap = cap;
  res.pass = residual_product <= tol + allowance_product &&
             residual_complement <= tol + allowance_complement;
  res.params = {{"n", std::to_string(n)},
                {"k", std::to_string(k)},
                {"t", format_complex(t)},
                {"cap", std::to_string(cap)},
                {"tol", format_double(tol)},
                {"residual_complement", format_double(residual_complement)},
                {"tail_est_complement", format_double(allowance_complement)}};
  return res;
}

}  // namespace mlv
