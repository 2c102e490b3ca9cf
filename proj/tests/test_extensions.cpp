#include <doctest.h>

#include "minseq/extensions.hpp"
#include "oracles.hpp"

using namespace minseq;

TEST_CASE("record profile and classification") {
  const RecordProfile p = record_profile(parse("0102312"));
  CHECK(p.rec_values == std::vector<int>{0, 1, 2, 3});
  CHECK(p.asc_count == 4);
  CHECK(is_rgf(parse("010")));
  CHECK_FALSE(is_rgf(parse("0021")));
  CHECK(is_ascent_sequence(parse("0102")));
  CHECK_FALSE(is_ascent_sequence(parse("0013")));
  CHECK_FALSE(is_ascent_sequence(parse("1")));
  const SeqClassFlags f = classify(parse("0021"));
  CHECK(f.is_inversion_sequence);
  CHECK(f.is_cayley_permutation);
  CHECK_FALSE(f.is_rgf);
  CHECK_FALSE(f.is_ascent_sequence);
}

TEST_CASE("family predicates agree with independent definitions") {
  for (int n = 0; n <= 6; ++n)
    for (const IntSeq& s : oracle::all_patterns(n)) {
      CHECK(is_rgf(s) == oracle::is_rgf(s));
      CHECK(is_ascent_sequence(s) == oracle::is_ascent(s));
    }
}

TEST_CASE("restricted growth minimal sets") {
  CHECK(rgf_minimal_set(parse("10")) == std::vector<IntSeq>{parse("010")});
  CHECK(rgf_minimal_set(parse("021")) == std::vector<IntSeq>{parse("0121")});
  for (int k = 1; k <= 4; ++k)
    for (const IntSeq& rho : oracle::all_patterns(k)) {
      int missing = 0, top = -1;
      for (int v : rho)
        if (v > top) top = v, ++missing;
      missing = top + 1 - missing;
      CAPTURE(format(rho));
      CHECK(rgf_minimal_set(rho) ==
            oracle::minimal_in_family(rho, k + missing, [](const IntSeq& s) { return oracle::is_rgf(s); }));
    }
}

TEST_CASE("ascent minimal sets on short patterns") {
  CHECK(ascent_minimal_set(parse("10"), 8).sequences == std::vector<IntSeq>{parse("010")});
  CHECK(ascent_minimal_set(parse("00"), 8).sequences == std::vector<IntSeq>{parse("00")});
  for (int k = 1; k <= 3; ++k)
    for (const IntSeq& rho : oracle::all_patterns(k)) {
      CAPTURE(format(rho));
      const auto result = ascent_minimal_set(rho, 7);
      CHECK(result.sequences ==
            oracle::minimal_in_family(rho, 7, [](const IntSeq& s) { return oracle::is_ascent(s); }));
      std::size_t total = 0;
      for (std::size_t c : result.by_length) total += c;
      CHECK(total == result.sequences.size());
    }
}

TEST_CASE("ascent minimal set of 210 is an antichain") {
  AscentLimits limits;
  limits.threads = 2;
  const auto result = ascent_minimal_set(parse("210"), 11, limits);
  const std::size_t expected[] = {0, 0, 0, 0, 0, 1, 0, 2, 4, 2, 5, 4};
  REQUIRE(result.by_length.size() == 12);
  for (int len = 0; len <= 11; ++len) CHECK(result.by_length[len] == expected[len]);
  for (const IntSeq& a : result.sequences) {
    CHECK(is_ascent_sequence(a));
    CHECK(is_minimal_ascent_oracle(a, parse("210")).minimal);
    for (const IntSeq& b : result.sequences)
      if (a.size() < b.size()) CHECK_FALSE(contains(b, a));
  }
  CHECK(ascent_minimal_set(parse("210"), 11).sequences == result.sequences);
}

TEST_CASE("decreasing run construction") {
  const IntSeq s3 = construct_decreasing_ascent(3);
  CHECK(s3 == parse("0101342423765"));
  CHECK(is_ascent_sequence(s3));
  CHECK(is_minimal_ascent_oracle(s3, parse("210")).minimal);
  const IntSeq s4 = construct_decreasing_ascent(4);
  CHECK(s4.size() == 22);
  CHECK(is_ascent_sequence(s4));
  CHECK(is_cayley_permutation(s4));
  CHECK(contains(s4, parse("3210")));
  CHECK_THROWS_AS(construct_decreasing_ascent(2), PreconditionError);
}

TEST_CASE("ascent oracle witness and guards") {
  const MinimalityVerdict v = is_minimal_ascent_oracle(parse("0100"), parse("00"));
  CHECK_FALSE(v.minimal);
  const auto& w = std::get<SubsequenceWitness>(*v.witness);
  CHECK(w.tau == parse("000"));
  AscentLimits limits;
  limits.max_len = 6;
  CHECK_THROWS_AS(ascent_minimal_set(parse("10"), 7, limits), GuardExceeded);
  limits.oracle_max_len = 5;
  CHECK_THROWS_AS(is_minimal_ascent_oracle(parse("010101"), parse("10"), limits), GuardExceeded);
}

TEST_CASE("extension witness above the search limit") {
  const auto known = ascent_minimal_set(parse("10"), 5);
  CHECK_FALSE(ascent_extension_witness(known).has_value());
}
