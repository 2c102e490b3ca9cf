#include "minseq/seq.hpp"

#include <algorithm>
#include <charconv>

namespace minseq {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::empty_sequence: return "empty_sequence";
    case Errc::empty_pattern: return "empty_pattern";
    case Errc::pattern_not_reduced: return "pattern_not_reduced";
    case Errc::not_inversion_sequence: return "not_inversion_sequence";
    case Errc::not_cayley_permutation: return "not_cayley_permutation";
    case Errc::pattern_not_contained: return "pattern_not_contained";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::malformed_tree: return "malformed_tree";
    case Errc::not_coloured_member: return "not_coloured_member";
    case Errc::series_domain: return "series_domain";
    case Errc::non_integer_count: return "non_integer_count";
  }
  return "unknown";
}

bool is_inversion_sequence(SeqView s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0 || s[i] > static_cast<int>(i)) return false;
  return true;
}

int max_value(SeqView s) {
  return s.empty() ? -1 : *std::max_element(s.begin(), s.end());
}

bool is_cayley_permutation(SeqView s) {
  const int top = max_value(s);
  if (top < 0) return true;
  if (top >= static_cast<int>(s.size())) return false;
  std::vector<char> seen(top + 1, 0);
  for (int v : s) {
    if (v < 0) return false;
    seen[v] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

IntSeq reduce(SeqView s) {
  IntSeq values(s.begin(), s.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  IntSeq out;
  out.reserve(s.size());
  for (int v : s)
    out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) -
                                   values.begin()));
  return out;
}

int dist(SeqView s) {
  IntSeq values(s.begin(), s.end());
  std::sort(values.begin(), values.end());
  return static_cast<int>(std::unique(values.begin(), values.end()) - values.begin());
}

int mdd(SeqView s) {
  if (s.empty()) throw PreconditionError(Errc::empty_sequence, "mdd of the empty sequence");
  int best = s[0];
  for (std::size_t i = 1; i < s.size(); ++i)
    best = std::max(best, s[i] - static_cast<int>(i));
  return best;
}

std::vector<int> sat(SeqView s) {
  const int m = mdd(s);
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] - static_cast<int>(i) == m) out.push_back(static_cast<int>(i) + 1);
  return out;
}

IntSeq concat(SeqView a, SeqView b) {
  IntSeq out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

IntSeq shift(SeqView s, int c) {
  if (c < 0) throw PreconditionError(Errc::invalid_argument, "shift amount must be nonnegative");
  IntSeq out(s.begin(), s.end());
  for (int& v : out) v += c;
  return out;
}

void require_pattern(SeqView pattern) {
  if (pattern.empty()) throw PreconditionError(Errc::empty_pattern, "pattern is empty");
  if (!is_cayley_permutation(pattern))
    throw PreconditionError(Errc::pattern_not_reduced,
                            "pattern " + format(pattern) + " is not a Cayley permutation");
}

namespace detail {

bool contains_unchecked(SeqView host, SeqView pattern) {
  bool found = false;
  for_each_occurrence(host, pattern, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace detail

bool contains(SeqView host, SeqView pattern) {
  require_pattern(pattern);
  return detail::contains_unchecked(host, pattern);
}

std::vector<Occurrence> occurrences(SeqView host, SeqView pattern) {
  require_pattern(pattern);
  std::vector<Occurrence> out;
  detail::for_each_occurrence(host, pattern, [&](std::span<const int> pos) {
    Occurrence occ;
    occ.positions.reserve(pos.size());
    for (int p : pos) occ.positions.push_back(p + 1);
    out.push_back(std::move(occ));
    return true;
  });
  return out;
}

IntSeq parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\n'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n'))
    text.remove_suffix(1);
  IntSeq out;
  if (text.empty()) return out;

  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(start, end - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      if (!field.empty() && field.front() == '-')
        throw PreconditionError(Errc::parse_error,
                                "negative value '" + std::string(field) + "'");
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw PreconditionError(Errc::parse_error,
                                "invalid entry '" + std::string(field) + "'");
      out.push_back(value);
      start = end + 1;
    }
    return out;
  }

  for (char c : text) {
    if (c >= '0' && c <= '9') {
      out.push_back(c - '0');
    } else if (c >= 'A' && c <= 'Z') {
      out.push_back(c - 'A' + 10);
    } else {
      throw PreconditionError(Errc::parse_error,
                              std::string("invalid character '") + c + "' in sequence");
    }
  }
  return out;
}

std::string format(SeqView s) {
  std::string out;
  if (max_value(s) <= 35) {
    out.reserve(s.size());
    for (int v : s) out.push_back(v < 10 ? static_cast<char>('0' + v)
                                         : static_cast<char>('A' + v - 10));
    return out;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace minseq
