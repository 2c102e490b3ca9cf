#pragma once

#include <optional>
#include <variant>

#include "minseq/seq.hpp"

namespace minseq {

// An occurrence of the pattern that breaks one of the two occurrence
// conditions: (1) every position from the last saturated entry to the end
// lies in the occurrence, (2) every value outside the occurrence repeats.
struct OccurrenceWitness {
  Occurrence occurrence;
  int condition = 0;
  bool operator==(const OccurrenceWitness&) const = default;
};

// A strictly shorter inversion sequence (a reduced subsequence of sigma)
// that still contains the pattern. `kept` lists the 1-based positions of
// sigma it was taken from.
struct SubsequenceWitness {
  IntSeq tau;
  std::vector<int> kept;
  bool operator==(const SubsequenceWitness&) const = default;
};

using Witness = std::variant<OccurrenceWitness, SubsequenceWitness>;

struct MinimalityVerdict {
  bool minimal = false;
  std::optional<Witness> witness;
};

struct OracleLimits {
  int max_len = 20;
};

// Throws PreconditionError (not_inversion_sequence, not_cayley_permutation,
// pattern_not_contained, or a pattern error) when sigma/rho are outside the
// domain of the minimality question.
void require_minimality_domain(SeqView sigma, SeqView rho);

// Decides rho-minimality from the occurrences of rho in sigma. Occurrences
// are examined in lexicographic order and the first violation is returned.
MinimalityVerdict is_minimal_prop1(SeqView sigma, SeqView rho);

// Brute force over proper subsequences of sigma. Deletion sets are tried by
// increasing size; the witness is the lexicographically smallest reduced
// subsequence among those with the fewest deletions.
MinimalityVerdict is_minimal_oracle(SeqView sigma, SeqView rho, const OracleLimits& limits = {});

// Necessary conditions satisfied by minimal sequences: for every saturated
// position of rho and every occurrence, the entries at or above the image of
// that position are all in the occurrence, the occurrence ends with a
// contiguous block from that position on, and the image is saturated.
bool check_prop_sat(SeqView sigma, SeqView rho);

namespace detail {

// Deletion sets by increasing size; a reduced subsequence is a witness when
// `admissible` accepts it and it contains rho. No validation or guard.
MinimalityVerdict subsequence_scan(SeqView sigma, SeqView rho, bool (*admissible)(SeqView));

}  // namespace detail

}  // namespace minseq
