#pragma once

#include <optional>

#include "minseq/minimality.hpp"
#include "minseq/seq.hpp"

namespace minseq {

struct RecordProfile {
  std::vector<int> rec_values;  // increasing
  int asc_count = 0;
};

RecordProfile record_profile(SeqView s);
int ascents(SeqView s);

// Inversion sequence whose record values are exactly [0, max].
bool is_rgf(SeqView s);
// s_1 = 0 and s_i <= 1 + asc(s_1 .. s_{i-1}) for i >= 2.
bool is_ascent_sequence(SeqView s);

SeqClassFlags classify(SeqView s);

// Insert one copy of every non-record value of rho in all ways and keep the
// RGFs. Canonical order.
std::vector<IntSeq> rgf_minimal_set(SeqView rho);

struct AscentLimits {
  int max_len = 12;         // ascent_minimal_set
  int oracle_max_len = 22;  // is_minimal_ascent_oracle scans 2^n subsets
  unsigned threads = 1;
};

struct AscentMinimalResult {
  IntSeq pattern;
  int max_len = 0;                  // nothing is claimed about longer sequences
  std::vector<IntSeq> sequences;    // canonical order
  std::vector<std::size_t> by_length;  // by_length[L] for L in [0, max_len]
};

// Minimal elements of the Cayley ascent sequences containing rho, up to
// length max_len. Lengths are processed in increasing order: a candidate of
// length L is kept when it contains rho, no proper prefix contains rho, and it
// avoids every minimal element found at a shorter length.
AscentMinimalResult ascent_minimal_set(SeqView rho, int max_len, const AscentLimits& limits = {});

// Subset scan: sigma is minimal unless some proper subsequence reduces to an
// ascent sequence containing rho. The witness is the lexicographically
// smallest such reduction with the fewest deletions.
MinimalityVerdict is_minimal_ascent_oracle(SeqView sigma, SeqView rho,
                                           const AscentLimits& limits = {});

// Factors over the value blocks [0,1], [2,4], [5,8], ... followed by a
// decreasing run of length k. Length k^2 + 2k - 2. Requires k >= 3.
IntSeq construct_decreasing_ascent(int k);

// Smallest minimal ascent sequence of length known.max_len + 1, found by one
// more level of the same search. `known` must come from ascent_minimal_set, so
// that it is complete below that length. The guard allows max_len + 1.
std::optional<IntSeq> ascent_extension_witness(const AscentMinimalResult& known,
                                               const AscentLimits& limits = {});

}  // namespace minseq
