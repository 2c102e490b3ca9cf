#include "minseq/extensions.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"

namespace minseq {

RecordProfile record_profile(SeqView s) {
  RecordProfile p;
  int top = -1;
  for (int v : s)
    if (v > top) {
      p.rec_values.push_back(v);
      top = v;
    }
  p.asc_count = ascents(s);
  return p;
}

int ascents(SeqView s) {
  int count = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] < s[i]) ++count;
  return count;
}

bool is_rgf(SeqView s) {
  // Records are [0, max] exactly when each entry is at most one above the
  // running maximum; that also makes s an inversion sequence.
  int top = -1;
  for (int v : s) {
    if (v < 0 || v > top + 1) return false;
    top = std::max(top, v);
  }
  return true;
}

bool is_ascent_sequence(SeqView s) {
  // Counting the ascent that ends at s_i as well is the same as allowing
  // s_i <= 1 + asc(s_1 .. s_{i-1}) for i >= 2 with s_1 = 0.
  int asc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] > asc) return false;
    if (i + 1 < s.size() && s[i] < s[i + 1]) ++asc;
  }
  return true;
}

SeqClassFlags classify(SeqView s) {
  return {is_inversion_sequence(s), is_cayley_permutation(s), is_rgf(s), is_ascent_sequence(s)};
}

std::vector<IntSeq> rgf_minimal_set(SeqView rho) {
  require_pattern(rho);
  const RecordProfile profile = record_profile(rho);
  std::vector<int> missing;
  for (int v = 0, r = 0; v <= max_value(rho); ++v) {
    if (r < static_cast<int>(profile.rec_values.size()) && profile.rec_values[r] == v)
      ++r;
    else
      missing.push_back(v);
  }
  std::set<IntSeq, CanonicalLess> found;
  IntSeq cur(rho.begin(), rho.end());
  auto insert = [&](auto&& self, std::size_t j) -> void {
    if (j == missing.size()) {
      if (is_rgf(cur)) found.insert(cur);
      return;
    }
    for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos), missing[j]);
      self(self, j + 1);
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  };
  insert(insert, 0);
  return {found.begin(), found.end()};
}

namespace {

// Depth-first generation of Cayley ascent sequences of one length. Prefixes
// that already contain rho are cut: their reduction would be a shorter
// element of the poset lying below every extension.
class AscentSearch {
 public:
  AscentSearch(SeqView rho, int len, const std::vector<IntSeq>& basis, std::vector<IntSeq>& out)
      : rho_(rho), len_(len), basis_(basis), out_(out), count_(len + 1, 0) {}

  void run_from(SeqView prefix) {
    cur_.clear();
    std::fill(count_.begin(), count_.end(), 0);
    top_ = -1;
    missing_ = 0;
    asc_ = 0;
    for (int v : prefix) {
      if (!feasible_push(v)) return;
      if (static_cast<int>(cur_.size()) < len_ && detail::contains_unchecked(cur_, rho_)) return;
    }
    dfs();
  }

  // All ascent-sequence prefixes of length d that can still become Cayley at
  // length len, in lexicographic order.
  static std::vector<IntSeq> prefixes(int d, int len) {
    std::vector<IntSeq> out;
    IntSeq cur;
    auto rec = [&](auto&& self, int asc, int top, int distinct) -> void {
      const int p = static_cast<int>(cur.size());
      if (top + 1 - distinct > len - p) return;
      if (p == d) {
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= (p == 0 ? 0 : asc + 1); ++v) {
        const bool fresh = std::find(cur.begin(), cur.end(), v) == cur.end();
        const int next_asc = asc + (p > 0 && cur.back() < v ? 1 : 0);
        cur.push_back(v);
        self(self, next_asc, std::max(top, v), distinct + (fresh ? 1 : 0));
        cur.pop_back();
      }
    };
    rec(rec, 0, -1, 0);
    return out;
  }

 private:
  bool feasible_push(int v) {
    const int p = static_cast<int>(cur_.size());
    if (v > (p == 0 ? 0 : asc_ + 1)) return false;
    if (v > top_) {
      missing_ += v - top_ - 1;
      top_ = v;
    } else if (count_[v] == 0) {
      --missing_;
    }
    if (p > 0 && cur_.back() < v) ++asc_;
    ++count_[v];
    cur_.push_back(v);
    return missing_ <= len_ - p - 1;
  }

  void dfs() {
    const int p = static_cast<int>(cur_.size());
    if (p == len_) {
      if (missing_ != 0 || !detail::contains_unchecked(cur_, rho_)) return;
      for (const IntSeq& b : basis_)
        if (detail::contains_unchecked(cur_, b)) return;
      out_.push_back(cur_);
      return;
    }
    const int slots_after = len_ - p - 1;
    const int asc_before = asc_;
    for (int v = 0; v <= (p == 0 ? 0 : asc_before + 1); ++v) {
      const int old_top = top_;
      const int old_missing = missing_;
      int new_missing = missing_;
      if (v > top_)
        new_missing += v - top_ - 1;
      else if (count_[v] == 0)
        --new_missing;
      if (new_missing <= slots_after) {
        if (v > top_) top_ = v;
        missing_ = new_missing;
        if (p > 0 && cur_.back() < v) ++asc_;
        ++count_[v];
        cur_.push_back(v);
        if (p + 1 == len_ || !detail::contains_unchecked(cur_, rho_)) dfs();
        cur_.pop_back();
        --count_[v];
        asc_ = asc_before;
      }
      top_ = old_top;
      missing_ = old_missing;
    }
  }

  SeqView rho_;
  int len_;
  const std::vector<IntSeq>& basis_;
  std::vector<IntSeq>& out_;
  IntSeq cur_;
  std::vector<int> count_;
  int top_ = -1;
  int missing_ = 0;
  int asc_ = 0;
};

}  // namespace

AscentMinimalResult ascent_minimal_set(SeqView rho, int max_len, const AscentLimits& limits) {
  require_pattern(rho);
  if (max_len < 0) throw PreconditionError(Errc::invalid_argument, "max_len must be >= 0");
  check_guard("max-ascent-len", limits.max_len, max_len);
  AscentMinimalResult result;
  result.pattern.assign(rho.begin(), rho.end());
  result.max_len = max_len;
  result.by_length.assign(max_len + 1, 0);
  for (int len = static_cast<int>(rho.size()); len <= max_len; ++len) {
    const std::vector<IntSeq> tasks = AscentSearch::prefixes(std::min(len, 4), len);
    std::vector<std::vector<IntSeq>> found(tasks.size());
    detail::parallel_for(tasks.size(), limits.threads, [&](std::size_t t) {
      AscentSearch search(rho, len, result.sequences, found[t]);
      search.run_from(tasks[t]);
    });
    // Tasks are disjoint and in lexicographic order, so the merge is sorted.
    std::vector<IntSeq> level;
    for (auto& f : found) level.insert(level.end(), f.begin(), f.end());
    result.by_length[len] = level.size();
    result.sequences.insert(result.sequences.end(), level.begin(), level.end());
  }
  return result;
}

MinimalityVerdict is_minimal_ascent_oracle(SeqView sigma, SeqView rho, const AscentLimits& limits) {
  require_pattern(rho);
  if (!is_ascent_sequence(sigma))
    throw PreconditionError(Errc::invalid_argument, "sequence is not an ascent sequence");
  if (!is_cayley_permutation(sigma))
    throw PreconditionError(Errc::not_cayley_permutation, "sequence is not a Cayley permutation");
  if (!detail::contains_unchecked(sigma, rho))
    throw PreconditionError(Errc::pattern_not_contained, "sequence does not contain the pattern");
  check_guard("max-ascent-oracle-len", limits.oracle_max_len, static_cast<long long>(sigma.size()));
  return detail::subsequence_scan(sigma, rho, is_ascent_sequence);
}

IntSeq construct_decreasing_ascent(int k) {
  if (k < 3) throw PreconditionError(Errc::invalid_argument, "k must be >= 3");
  IntSeq out;
  for (int j = 1; j < k; ++j) {
    const int a = (j * j + j - 2) / 2;
    const int b = a + j;
    IntSeq x, y;
    for (int v = b - 1; v > a; --v) x.push_back(v);
    x.insert(x.end(), {a, a});
    y.insert(y.end(), {b, b});
    for (int v = b - 1; v > a; --v) y.push_back(v);
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.push_back(x[i]);
      out.push_back(y[i]);
    }
  }
  for (int v = (k * k + 3 * k - 4) / 2; v >= (k * k + k - 2) / 2; --v) out.push_back(v);
  return out;
}

std::optional<IntSeq> ascent_extension_witness(const AscentMinimalResult& known,
                                               const AscentLimits& limits) {
  require_pattern(known.pattern);
  const int len = known.max_len + 1;
  check_guard("max-ascent-len", limits.max_len + 1, len);
  const std::vector<IntSeq> tasks = AscentSearch::prefixes(std::min(len, 4), len);
  std::vector<std::vector<IntSeq>> found(tasks.size());
  detail::parallel_for(tasks.size(), limits.threads, [&](std::size_t t) {
    AscentSearch search(known.pattern, len, known.sequences, found[t]);
    search.run_from(tasks[t]);
  });
  for (const auto& f : found)
    if (!f.empty()) return f.front();
  return std::nullopt;
}

}  // namespace minseq
