#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "minseq/minimality.hpp"
#include "minseq/seq.hpp"

namespace minseq {

using IsbtVector = std::vector<std::size_t>;

// The complete set of rho-minimal inversion sequences of one pattern.
struct MinimalSet {
  IntSeq pattern;
  int mdd = 0;
  std::vector<IntSeq> sequences;  // canonical (length, lex) order
  IsbtVector isbt;                // counts for lengths |rho|+mdd .. |rho|+2 mdd
};

// Resource limits. Every generator checks the relevant entry and throws
// GuardExceeded rather than starting an infeasible computation.
struct GenerateLimits {
  int max_pattern_len = 8;        // enumerate_patterns
  int max_materialized_len = 11;  // enumerate_inv, enumerate_inv_cayley
  int max_mdd = 6;                // minimal_set
  int naive_max_len = 10;         // minimal_set_naive: |rho| + 2 mdd(rho)
  int max_table_len = 5;          // isbt_table
  OracleLimits oracle;
  unsigned threads = 1;
};

using IsbtTable = std::map<IsbtVector, std::vector<IntSeq>, CanonicalLess>;

std::vector<IntSeq> enumerate_patterns(int k, const GenerateLimits& limits = {});

// Streaming enumeration in lexicographic order; no materialization guard.
void for_each_inv(int n, const std::function<void(SeqView)>& visit);
void for_each_inv_cayley(int n, const std::function<void(SeqView)>& visit);

std::vector<IntSeq> enumerate_inv(int n, const GenerateLimits& limits = {});
std::vector<IntSeq> enumerate_inv_cayley(int n, const GenerateLimits& limits = {});

// Sorts and deduplicates `sequences` and tabulates the ISBT vector.
MinimalSet make_minimal_set(SeqView rho, std::vector<IntSeq> sequences);

// Builds every candidate around a starting occurrence of rho (fillers to the
// left of and below its leftmost saturated entry, each new value inserted at
// least twice), then keeps the candidates that pass is_minimal_prop1.
MinimalSet minimal_set(SeqView rho, const GenerateLimits& limits = {});

// Filters all of I ∩ P in the admissible length window through the
// brute-force subsequence oracle.
MinimalSet minimal_set_naive(SeqView rho, const GenerateLimits& limits = {});

// Groups every pattern of length 1..max_len by its ISBT vector.
IsbtTable isbt_table(int max_len, const GenerateLimits& limits = {});

// { alpha . rho : alpha in I_mdd(rho) }, in canonical order.
std::vector<IntSeq> construct_prefix_family(SeqView rho, const GenerateLimits& limits = {});

// Minimal sequence of length |rho| + 2 mdd(rho); requires a zero of rho at
// some position i >= 2.
IntSeq construct_tight_ub(SeqView rho);

// Minimal sequence of length at least |rho| + 2 mdd(rho) - 2.
IntSeq construct_near_max(SeqView rho);

}  // namespace minseq
