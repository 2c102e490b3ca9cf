#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "minseq/errors.hpp"

namespace minseq {

// Finite sequence of nonnegative integers. Carrier for patterns, inversion
// sequences, RGFs and ascent sequences alike.
using IntSeq = std::vector<int>;
using SeqView = std::span<const int>;

struct SeqClassFlags {
  bool is_inversion_sequence = false;
  bool is_cayley_permutation = false;
  bool is_rgf = false;
  bool is_ascent_sequence = false;
};

// Positions (1-based, strictly increasing) of a subsequence of a host that
// reduces to a given pattern.
struct Occurrence {
  std::vector<int> positions;
  auto operator<=>(const Occurrence&) const = default;
};

// (length, lexicographic) order used for every emitted list.
template <class A, class B>
bool canonical_less(const A& a, const B& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct CanonicalLess {
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return canonical_less(a, b);
  }
};

bool is_inversion_sequence(SeqView s);
bool is_cayley_permutation(SeqView s);

// Largest entry, or -1 for the empty sequence.
int max_value(SeqView s);

IntSeq reduce(SeqView s);
int dist(SeqView s);

// Maximum diagonal difference max(s_i - i + 1) over 1-based i. Throws on ε.
int mdd(SeqView s);

// 1-based positions of the entries achieving mdd(s). Throws on ε.
std::vector<int> sat(SeqView s);

IntSeq concat(SeqView a, SeqView b);
IntSeq shift(SeqView s, int c);

// Throws PreconditionError unless pattern is a nonempty Cayley permutation.
void require_pattern(SeqView pattern);

bool contains(SeqView host, SeqView pattern);
std::vector<Occurrence> occurrences(SeqView host, SeqView pattern);

// Compact form uses 0-9 then A-Z for 10..35; comma form is decimal.
IntSeq parse(std::string_view text);
std::string format(SeqView s);

namespace detail {

// Backtracking matcher over a pattern assumed to be a nonempty Cayley
// permutation. `visit` receives 0-based positions and returns false to stop.
// Occurrences are produced in lexicographic order of their position lists.
template <class Visit>
class OccurrenceSearch {
 public:
  OccurrenceSearch(SeqView host, SeqView pattern, Visit& visit)
      : host_(host), pattern_(pattern), visit_(visit),
        image_(static_cast<std::size_t>(max_value(pattern)) + 1, -1),
        positions_(pattern.size()) {}

  // Returns false if the visitor requested a stop.
  bool run() { return host_.size() >= pattern_.size() && step(0, 0); }

 private:
  bool step(std::size_t j, std::size_t start) {
    const std::size_t k = pattern_.size();
    if (j == k) return visit_(std::span<const int>(positions_));
    const int pv = pattern_[j];
    const std::size_t last = host_.size() - (k - j);
    int& img = image_[static_cast<std::size_t>(pv)];
    if (img >= 0) {
      for (std::size_t p = start; p <= last; ++p) {
        if (host_[p] != img) continue;
        positions_[j] = static_cast<int>(p);
        if (!step(j + 1, p + 1)) return false;
      }
      return true;
    }
    // Open interval the new image must fall in, from the nearest mapped
    // pattern values below and above pv.
    int lo = -1;
    for (int w = pv - 1; w >= 0; --w)
      if (image_[static_cast<std::size_t>(w)] >= 0) {
        lo = image_[static_cast<std::size_t>(w)];
        break;
      }
    int hi = -1;
    for (std::size_t w = static_cast<std::size_t>(pv) + 1; w < image_.size(); ++w)
      if (image_[w] >= 0) {
        hi = image_[w];
        break;
      }
    for (std::size_t p = start; p <= last; ++p) {
      const int h = host_[p];
      if (h <= lo || (hi >= 0 && h >= hi)) continue;
      img = h;
      positions_[j] = static_cast<int>(p);
      const bool go_on = step(j + 1, p + 1);
      img = -1;
      if (!go_on) return false;
    }
    return true;
  }

  SeqView host_;
  SeqView pattern_;
  Visit& visit_;
  std::vector<int> image_;
  std::vector<int> positions_;
};

template <class Visit>
bool for_each_occurrence(SeqView host, SeqView pattern, Visit&& visit) {
  OccurrenceSearch<std::remove_reference_t<Visit>> search(host, pattern, visit);
  return search.run();
}

// contains() without the pattern validation, for inner loops.
bool contains_unchecked(SeqView host, SeqView pattern);

}  // namespace detail

}  // namespace minseq
