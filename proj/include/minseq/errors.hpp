#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minseq {

enum class Errc {
  parse_error,
  empty_sequence,
  empty_pattern,
  pattern_not_reduced,
  not_inversion_sequence,
  not_cayley_permutation,
  pattern_not_contained,
  invalid_argument,
  malformed_tree,
  not_coloured_member,
  series_domain,
  non_integer_count,
};

std::string_view errc_name(Errc code);

// Raised when an input violates an operation's precondition. The CLI maps it
// to exit code 1.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Errc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when a request exceeds a configured resource limit. The CLI maps it
// to exit code 2.
class GuardExceeded : public std::length_error {
 public:
  GuardExceeded(std::string guard, long long limit, long long requested)
      : std::length_error("guard '" + guard + "' exceeded: requested " +
                          std::to_string(requested) + ", limit " +
                          std::to_string(limit)),
        guard_(std::move(guard)),
        limit_(limit),
        requested_(requested) {}

  const std::string& guard() const noexcept { return guard_; }
  long long limit() const noexcept { return limit_; }
  long long requested() const noexcept { return requested_; }

 private:
  std::string guard_;
  long long limit_;
  long long requested_;
};

inline void check_guard(const char* guard, long long limit, long long requested) {
  if (requested > limit) throw GuardExceeded(guard, limit, requested);
}

}  // namespace minseq
