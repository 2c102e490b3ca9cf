#include "minseq/generate.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"

namespace minseq {

namespace {

void sort_canonical(std::vector<IntSeq>& seqs) {
  std::sort(seqs.begin(), seqs.end(), CanonicalLess{});
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
}

// Lexicographic DFS over sequences of length n with entry i (0-based) in
// [0, cap(i)], keeping only Cayley permutations. The prune keeps the number of
// values still missing below the running maximum within the slots left.
template <class Cap, class Visit>
void cayley_dfs(int n, Cap cap, Visit& visit) {
  IntSeq cur;
  cur.reserve(n);
  std::vector<int> count(n + 1, 0);
  int top = -1;
  int missing = 0;  // values in [0, top] with count 0
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (missing == 0) visit(SeqView(cur));
      return;
    }
    const int slots_after = n - i - 1;
    for (int v = 0; v <= cap(i); ++v) {
      const int old_top = top;
      const int old_missing = missing;
      if (v > top) {
        missing += v - top - 1;
        top = v;
      } else if (count[v] == 0) {
        --missing;
      }
      if (missing <= slots_after) {
        ++count[v];
        cur.push_back(v);
        self(self, i + 1);
        cur.pop_back();
        --count[v];
      }
      top = old_top;
      missing = old_missing;
    }
  };
  rec(rec, 0);
}

// Fills the prefix of one candidate family: `fillers` new entries interleaved
// with the images of rho_1..rho_{s-1}, all placed before the leftmost
// saturated image. Filler values are drawn from the low alphabet [0, low); the
// values flagged in is_new_value must each be used at least twice.
class FillerSearch {
 public:
  FillerSearch(int fillers, std::vector<char> is_new_value, IntSeq occ_prefix, IntSeq tail,
               int new_values, std::vector<IntSeq>& out)
      : fillers_(fillers),
        prefix_len_(fillers + static_cast<int>(occ_prefix.size())),
        is_new_(std::move(is_new_value)),
        occ_prefix_(std::move(occ_prefix)),
        tail_(std::move(tail)),
        new_count_(is_new_.size(), 0),
        deficit_(2 * new_values),
        out_(out) {}

  void run() {
    if (deficit_ > fillers_) return;
    current_.reserve(prefix_len_ + tail_.size());
    dfs(0, 0, 0);
  }

 private:
  void dfs(int p, std::size_t j, int placed) {
    if (p == prefix_len_) {
      if (deficit_ != 0) return;
      IntSeq seq = current_;
      seq.insert(seq.end(), tail_.begin(), tail_.end());
      out_.push_back(std::move(seq));
      return;
    }
    if (j < occ_prefix_.size() && occ_prefix_[j] <= p) {
      current_.push_back(occ_prefix_[j]);
      dfs(p + 1, j + 1, placed);
      current_.pop_back();
    }
    const int left = fillers_ - placed;
    if (left == 0) return;
    const int top = std::min<int>(p, static_cast<int>(is_new_.size()) - 1);
    for (int v = 0; v <= top; ++v) {
      const bool helps = is_new_[v] && new_count_[v] < 2;
      const int deficit = deficit_ - (helps ? 1 : 0);
      if (deficit > left - 1) continue;
      const int saved = deficit_;
      deficit_ = deficit;
      ++new_count_[v];
      current_.push_back(v);
      dfs(p + 1, j, placed + 1);
      current_.pop_back();
      --new_count_[v];
      deficit_ = saved;
    }
  }

  int fillers_;
  int prefix_len_;
  std::vector<char> is_new_;
  IntSeq occ_prefix_;
  IntSeq tail_;
  std::vector<int> new_count_;
  int deficit_;
  IntSeq current_;
  std::vector<IntSeq>& out_;
};

struct CandidateTask {
  int fillers;                 // n: entries inserted around the occurrence
  std::vector<int> new_values; // sorted subset of the low alphabet
};

std::vector<CandidateTask> candidate_tasks(int m, int low_base) {
  std::vector<CandidateTask> tasks;
  for (int n = m; n <= 2 * m; ++n) {
    const int v = n - m;
    const int low = low_base + v;
    std::vector<int> pick(v);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      tasks.push_back({n, pick});
      int i = v - 1;
      while (i >= 0 && pick[i] == low - v + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < v; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return tasks;
}

void run_candidate_task(SeqView rho, int m, int s, const CandidateTask& task,
                        std::vector<IntSeq>& out) {
  const int saturated_value = rho[s - 1];
  const int v = task.fillers - m;
  const int low = saturated_value + v;
  std::vector<char> is_new(low, 0);
  for (int x : task.new_values) is_new[x] = 1;

  // The i-th smallest old low value is the image of pattern value i.
  std::vector<int> old_image;
  for (int x = 0; x < low; ++x)
    if (!is_new[x]) old_image.push_back(x);

  auto image = [&](int value) { return value < saturated_value ? old_image[value] : value + v; };
  IntSeq occ_prefix;
  IntSeq tail;
  for (std::size_t i = 0; i < rho.size(); ++i)
    (static_cast<int>(i) < s - 1 ? occ_prefix : tail).push_back(image(rho[i]));

  FillerSearch search(task.fillers, std::move(is_new), std::move(occ_prefix), std::move(tail), v,
                      out);
  search.run();
}

}  // namespace

std::vector<IntSeq> enumerate_patterns(int k, const GenerateLimits& limits) {
  if (k < 1) throw PreconditionError(Errc::invalid_argument, "pattern length must be >= 1");
  check_guard("max-pattern-len", limits.max_pattern_len, k);
  std::vector<IntSeq> out;
  auto visit = [&](SeqView s) { out.emplace_back(s.begin(), s.end()); };
  cayley_dfs(k, [k](int) { return k - 1; }, visit);
  return out;
}

void for_each_inv(int n, const std::function<void(SeqView)>& visit) {
  if (n < 0) throw PreconditionError(Errc::invalid_argument, "length must be >= 0");
  IntSeq cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(SeqView(cur));
      return;
    }
    for (int v = 0; v <= i; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

void for_each_inv_cayley(int n, const std::function<void(SeqView)>& visit) {
  if (n < 0) throw PreconditionError(Errc::invalid_argument, "length must be >= 0");
  cayley_dfs(n, [](int i) { return i; }, visit);
}

std::vector<IntSeq> enumerate_inv(int n, const GenerateLimits& limits) {
  check_guard("max-materialized-len", limits.max_materialized_len, n);
  std::vector<IntSeq> out;
  for_each_inv(n, [&](SeqView s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

std::vector<IntSeq> enumerate_inv_cayley(int n, const GenerateLimits& limits) {
  check_guard("max-materialized-len", limits.max_materialized_len, n);
  std::vector<IntSeq> out;
  for_each_inv_cayley(n, [&](SeqView s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

MinimalSet make_minimal_set(SeqView rho, std::vector<IntSeq> sequences) {
  MinimalSet result;
  result.pattern.assign(rho.begin(), rho.end());
  result.mdd = mdd(rho);
  sort_canonical(sequences);
  result.sequences = std::move(sequences);
  const int k = static_cast<int>(rho.size());
  result.isbt.assign(result.mdd + 1, 0);
  for (const IntSeq& s : result.sequences) {
    const int idx = static_cast<int>(s.size()) - k - result.mdd;
    if (idx < 0 || idx > result.mdd)
      throw std::logic_error("minimal sequence " + format(s) + " outside the length window");
    ++result.isbt[idx];
  }
  return result;
}

MinimalSet minimal_set(SeqView rho, const GenerateLimits& limits) {
  require_pattern(rho);
  const int m = mdd(rho);
  check_guard("max-mdd", limits.max_mdd, m);
  const int s = sat(rho).front();

  const std::vector<CandidateTask> tasks = candidate_tasks(m, rho[s - 1]);
  std::vector<std::vector<IntSeq>> per_task(tasks.size());
  detail::parallel_for(tasks.size(), limits.threads, [&](std::size_t i) {
    run_candidate_task(rho, m, s, tasks[i], per_task[i]);
  });

  std::vector<IntSeq> candidates;
  for (auto& chunk : per_task)
    candidates.insert(candidates.end(), std::make_move_iterator(chunk.begin()),
                      std::make_move_iterator(chunk.end()));
  sort_canonical(candidates);

  // The construction only controls the starting occurrence; every other
  // occurrence is checked here.
  std::vector<char> keep(candidates.size(), 0);
  detail::parallel_for(candidates.size(), limits.threads, [&](std::size_t i) {
    keep[i] = is_minimal_prop1(candidates[i], rho).minimal ? 1 : 0;
  });
  std::vector<IntSeq> minimal;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(candidates[i]));
  return make_minimal_set(rho, std::move(minimal));
}

MinimalSet minimal_set_naive(SeqView rho, const GenerateLimits& limits) {
  require_pattern(rho);
  const int m = mdd(rho);
  const int k = static_cast<int>(rho.size());
  check_guard("naive-max-len", limits.naive_max_len, k + 2 * m);
  std::vector<IntSeq> found;
  for (int len = k + m; len <= k + 2 * m; ++len) {
    for_each_inv_cayley(len, [&](SeqView sigma) {
      if (!detail::contains_unchecked(sigma, rho)) return;
      if (is_minimal_oracle(sigma, rho, limits.oracle).minimal)
        found.emplace_back(sigma.begin(), sigma.end());
    });
  }
  return make_minimal_set(rho, std::move(found));
}

IsbtTable isbt_table(int max_len, const GenerateLimits& limits) {
  if (max_len < 1) throw PreconditionError(Errc::invalid_argument, "max_len must be >= 1");
  check_guard("max-table-len", limits.max_table_len, max_len);
  std::vector<IntSeq> patterns;
  for (int k = 1; k <= max_len; ++k) {
    auto layer = enumerate_patterns(k, limits);
    patterns.insert(patterns.end(), layer.begin(), layer.end());
  }
  GenerateLimits inner = limits;
  inner.threads = 1;
  std::vector<IsbtVector> types(patterns.size());
  detail::parallel_for(patterns.size(), limits.threads, [&](std::size_t i) {
    types[i] = minimal_set(patterns[i], inner).isbt;
  });
  IsbtTable table;
  for (std::size_t i = 0; i < patterns.size(); ++i) table[types[i]].push_back(patterns[i]);
  return table;
}

std::vector<IntSeq> construct_prefix_family(SeqView rho, const GenerateLimits& limits) {
  require_pattern(rho);
  std::vector<IntSeq> out;
  for (const IntSeq& alpha : enumerate_inv(mdd(rho), limits)) out.push_back(concat(alpha, rho));
  sort_canonical(out);
  return out;
}

IntSeq construct_tight_ub(SeqView rho) {
  require_pattern(rho);
  const int k = static_cast<int>(rho.size());
  bool zero_after_first = false;
  bool zero_after_second = false;
  for (int i = 1; i < k; ++i) {
    if (rho[i] == 0) {
      zero_after_first = true;
      if (i >= 2) zero_after_second = true;
    }
  }
  if (k < 2 || !zero_after_first)
    throw PreconditionError(Errc::invalid_argument,
                            "construct_tight_ub needs a zero of the pattern at position >= 2");
  const int m = mdd(rho);
  IntSeq out;
  if (rho[0] != 0 || zero_after_second) {
    for (int v = 0; v < m; ++v) {
      out.push_back(v);
      out.push_back(v);
    }
    IntSeq body = shift(rho, m);
    out.insert(out.end(), body.begin(), body.end());
    return out;
  }
  // rho starts with 00 and has no other zero.
  if (k == 2) return IntSeq{0, 0};
  for (int v = 0; v <= m; ++v) out.push_back(v);
  for (int v = m; v >= 0; --v) out.push_back(v);
  for (int i = 2; i < k; ++i) out.push_back(rho[i] + m);
  return out;
}

IntSeq construct_near_max(SeqView rho) {
  require_pattern(rho);
  const int k = static_cast<int>(rho.size());
  const int m = mdd(rho);
  if (m <= 2) return concat(IntSeq(m, 0), rho);
  for (int i = 1; i < k; ++i)
    if (rho[i] == 0) return construct_tight_ub(rho);

  // Here rho_1 = 0 is the only zero, so rho_2 >= 1.
  IntSeq out;
  if (rho[1] >= 2) {
    for (int v = 0; v < m; ++v) {
      out.push_back(v);
      out.push_back(v);
    }
    for (int i = 1; i < k; ++i) out.push_back(rho[i] + m - 1);
    return out;
  }

  // rho_2 = 1. ell is the length of the longest inversion-sequence prefix.
  int ell = 0;
  while (ell < k && rho[ell] <= ell) ++ell;
  out = {0, 0};
  for (int i = 0; i < ell - 1; ++i) out.push_back(rho[i]);
  for (int v = ell + 1; v <= ell + m - 2; ++v) {
    out.push_back(v);
    out.push_back(v);
  }
  for (int i = ell - 1; i < k; ++i) out.push_back(rho[i] <= ell ? rho[i] : rho[i] + m - 2);
  return out;
}

}  // namespace minseq
