#include "minseq/minimality.hpp"

#include <algorithm>
#include <numeric>

namespace minseq {

void require_minimality_domain(SeqView sigma, SeqView rho) {
  require_pattern(rho);
  if (!is_inversion_sequence(sigma))
    throw PreconditionError(Errc::not_inversion_sequence,
                            format(sigma) + " is not an inversion sequence");
  if (!is_cayley_permutation(sigma))
    throw PreconditionError(Errc::not_cayley_permutation,
                            format(sigma) + " is not a Cayley permutation");
  if (!detail::contains_unchecked(sigma, rho))
    throw PreconditionError(Errc::pattern_not_contained,
                            format(sigma) + " does not contain " + format(rho));
}

MinimalityVerdict is_minimal_prop1(SeqView sigma, SeqView rho) {
  require_minimality_domain(sigma, rho);
  const int n = static_cast<int>(sigma.size());
  const int last_sat = sat(sigma).back() - 1;  // 0-based

  std::vector<int> multiplicity(static_cast<std::size_t>(max_value(sigma)) + 1, 0);
  for (int v : sigma) ++multiplicity[v];

  MinimalityVerdict verdict{true, std::nullopt};
  std::vector<char> value_used(multiplicity.size());

  detail::for_each_occurrence(sigma, rho, [&](std::span<const int> pos) {
    // Condition 1: positions last_sat..n-1 all belong to the occurrence. The
    // positions are increasing, so this means the occurrence ends with the
    // contiguous block [last_sat, n-1].
    const int tail = n - last_sat;
    const int k = static_cast<int>(pos.size());
    bool cond1 = tail <= k;
    for (int t = 0; cond1 && t < tail; ++t)
      cond1 = pos[k - 1 - t] == n - 1 - t;

    int failed = cond1 ? 0 : 1;
    if (!failed) {
      std::fill(value_used.begin(), value_used.end(), 0);
      for (int p : pos) value_used[sigma[p]] = 1;
      for (std::size_t v = 0; v < multiplicity.size(); ++v)
        if (!value_used[v] && multiplicity[v] < 2) {
          failed = 2;
          break;
        }
    }
    if (!failed) return true;
    OccurrenceWitness w;
    w.condition = failed;
    for (int p : pos) w.occurrence.positions.push_back(p + 1);
    verdict.minimal = false;
    verdict.witness = std::move(w);
    return false;
  });
  return verdict;
}

MinimalityVerdict is_minimal_oracle(SeqView sigma, SeqView rho, const OracleLimits& limits) {
  require_minimality_domain(sigma, rho);
  check_guard("max-oracle-len", limits.max_len, static_cast<long long>(sigma.size()));
  return detail::subsequence_scan(sigma, rho, is_inversion_sequence);
}

namespace detail {

MinimalityVerdict subsequence_scan(SeqView sigma, SeqView rho, bool (*admissible)(SeqView)) {
  const int n = static_cast<int>(sigma.size());
  const int k = static_cast<int>(rho.size());

  std::vector<int> deleted;
  std::vector<int> kept;
  std::vector<char> is_deleted(n);
  IntSeq sub;
  sub.reserve(n);

  for (int d = 1; d <= n - k; ++d) {
    std::optional<SubsequenceWitness> best;
    deleted.resize(d);
    std::iota(deleted.begin(), deleted.end(), 0);
    while (true) {
      std::fill(is_deleted.begin(), is_deleted.end(), 0);
      for (int i : deleted) is_deleted[i] = 1;
      sub.clear();
      for (int i = 0; i < n; ++i)
        if (!is_deleted[i]) sub.push_back(sigma[i]);
      IntSeq tau = reduce(sub);
      if (admissible(tau) && (!best || tau < best->tau) &&
          detail::contains_unchecked(tau, rho)) {
        kept.clear();
        for (int i = 0; i < n; ++i)
          if (!is_deleted[i]) kept.push_back(i + 1);
        best = SubsequenceWitness{std::move(tau), kept};
      }
      // Next d-combination of [0, n) in lexicographic order.
      int i = d - 1;
      while (i >= 0 && deleted[i] == n - d + i) --i;
      if (i < 0) break;
      ++deleted[i];
      for (int j = i + 1; j < d; ++j)
        deleted[j] = deleted[j - 1] + 1;
    }
    if (best) return MinimalityVerdict{false, Witness{std::move(*best)}};
  }
  return MinimalityVerdict{true, std::nullopt};
}

}  // namespace detail

bool check_prop_sat(SeqView sigma, SeqView rho) {
  require_minimality_domain(sigma, rho);
  const int n = static_cast<int>(sigma.size());
  const int k = static_cast<int>(rho.size());
  const std::vector<int> sat_rho = sat(rho);
  const std::vector<int> sat_sigma = sat(sigma);
  auto sigma_saturated = [&](int pos1) {
    return std::binary_search(sat_sigma.begin(), sat_sigma.end(), pos1);
  };

  bool ok = true;
  std::vector<char> in_r(n);
  detail::for_each_occurrence(sigma, rho, [&](std::span<const int> pos) {
    std::fill(in_r.begin(), in_r.end(), 0);
    for (int p : pos) in_r[p] = 1;
    for (int s1 : sat_rho) {
      const int ell = k - s1;
      const int anchor = sigma[pos[s1 - 1]];
      for (int i = 0; i < n; ++i)
        if (sigma[i] >= anchor && !in_r[i]) ok = false;
      for (int i = 0; i <= ell; ++i)
        if (pos[k - 1 - i] != n - 1 - i) ok = false;
      if (!sigma_saturated(n - ell)) ok = false;
      if (!ok) return false;
    }
    return true;
  });
  return ok;
}

}  // namespace minseq
