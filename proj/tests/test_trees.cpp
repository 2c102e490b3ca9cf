#include <doctest.h>

#include "golden.hpp"
#include "minseq/trees.hpp"
#include "oracles.hpp"

using namespace minseq;

namespace {

ColouredInvSeq coloured(const char* seq, const char* colours) {
  ColouredInvSeq a;
  a.seq = parse(seq);
  for (const char* c = colours; *c; ++c) a.colour.push_back(*c == 'r' ? Colour::red : Colour::blue);
  return a;
}

}  // namespace

TEST_CASE("phi on small sequences") {
  CHECK(phi(parse("")).parent == std::vector<int>{-1});
  CHECK(phi(parse("000")).parent == std::vector<int>{-1, 0, 0, 0});
  CHECK(phi(parse("01")).parent == std::vector<int>{-1, 0, 1});
  CHECK(phi_inverse(phi(parse("01"))) == parse("01"));
  const auto ch = children(phi(parse("0021")));
  CHECK(ch[0] == std::vector<int>{1, 2});
  CHECK(ch[2] == std::vector<int>{3});
  CHECK(ch[1] == std::vector<int>{4});
}

TEST_CASE("coloured tree of a worked example") {
  const ColouredInvSeq alpha = coloured("01131535", "brbrbbbb");
  CHECK_NOTHROW(validate_coloured(alpha));
  CHECK(red_values(alpha) == std::vector<int>{1, 3});
  CHECK(blue_count(alpha) == 6);
  const IncTree t = phi(alpha);
  CHECK(t.size() == 9);
  CHECK(t.colour[8] == Colour::blue);
  CHECK(t.colour[1] == Colour::red);
  CHECK(in_B(t));
  CHECK(phi_inverse_coloured(t) == alpha);
  CHECK(to_newick(phi(parse("01131535"))) == "((2,(4,7)3,(6,8)5)1)0;");
}

TEST_CASE("coloured validation") {
  CHECK_NOTHROW(validate_coloured(coloured("001", "rbb")));
  CHECK_THROWS_AS(validate_coloured(coloured("001", "bb")), PreconditionError);
  CHECK_THROWS_AS(validate_coloured(coloured("001", "brb")), PreconditionError);
  CHECK_THROWS_AS(validate_coloured(coloured("02", "bb")), PreconditionError);
}

TEST_CASE("tree validation") {
  IncTree bad;
  bad.parent = {-1, 2, 0};
  CHECK_THROWS_AS(validate_tree(bad), PreconditionError);
  bad.parent = {0, 0};
  CHECK_THROWS_AS(validate_tree(bad), PreconditionError);
  IncTree red_leaf = phi(coloured("0", "b"));
  red_leaf.colour.back() = Colour::red;
  CHECK_FALSE(in_B(red_leaf));
  CHECK_THROWS_AS(phi_inverse_coloured(red_leaf), PreconditionError);
}

TEST_CASE("phi is a bijection onto increasing trees") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    for (const IntSeq& s : oracle::all_inv(n)) {
      const IncTree t = phi(s);
      CHECK_NOTHROW(validate_tree(t));
      CHECK(phi_inverse(t) == s);
      seen.insert(t.parent);
    }
    CHECK(seen.size() == oracle::all_increasing_trees(n + 1).size());
  }
}

TEST_CASE("coloured sequences enumerate and count") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto all = enumerate_A(n, m);
      const long long expected = oracle::count_A(n, m);
      CHECK(static_cast<long long>(all.size()) == expected);
      CHECK(expected == oracle::count_B(n + 1, m + 1));
      CHECK(count_A(n, m, CountEngine::enumerate) == expected);
      CHECK(count_A(n, m, CountEngine::series) == expected);
      for (const auto& a : all) {
        CHECK(blue_count(a) == m);
        CHECK(phi_inverse_coloured(phi(a)) == a);
      }
    }
}

TEST_CASE("coloured counts match the stored table") {
  const auto table = golden::matrix("table1.txt");
  REQUIRE(table.size() == 8);
  const CountMatrix series = count_matrix(CountKind::A, 7, CountEngine::series);
  const CountMatrix enumerated = count_matrix(CountKind::A, 7, CountEngine::enumerate);
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 7; ++m) {
      CHECK(series[n][m] == table[n][m]);
      CHECK(enumerated[n][m] == table[n][m]);
    }
}

TEST_CASE("coloured prefix bijection on a worked example") {
  const ColouredInvSeq alpha = coloured("002303", "rbbrbb");
  const IntSeq rho = parse("4540312");
  const IntSeq sigma = coloured_to_minimal(alpha, rho);
  CHECK(sigma == parse("0023036761524"));
  CHECK(is_minimal_prop1(sigma, rho).minimal);
  CHECK(minimal_to_coloured(sigma, rho) == alpha);
  CHECK(coloured_to_minimal(ColouredInvSeq{}, parse("0120")) == parse("0120"));
  CHECK_THROWS_AS(coloured_to_minimal(ColouredInvSeq{}, rho), PreconditionError);
}

TEST_CASE("coloured prefix bijection covers the minimal set") {
  for (const char* p : {"10", "0", "201", "3012", "2010", "1100"}) {
    const IntSeq rho = parse(p);
    const int m = mdd(rho);
    const MinimalSet set = minimal_set(rho);
    std::vector<IntSeq> image;
    for (int n = 0; n <= 2 * m; ++n)
      for (const auto& a : enumerate_A(n, m)) image.push_back(coloured_to_minimal(a, rho));
    std::sort(image.begin(), image.end(), CanonicalLess{});
    CAPTURE(p);
    CHECK(image == set.sequences);
    for (const IntSeq& sigma : set.sequences)
      CHECK(coloured_to_minimal(minimal_to_coloured(sigma, rho), rho) == sigma);
  }
}

TEST_CASE("leaf-labelled trees") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; n + k <= 8; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const long long expected = oracle::count_T(n, k);
      CHECK(static_cast<long long>(enumerate_T(n, k).size()) == expected);
      CHECK(count_T(n, k, CountEngine::enumerate) == expected);
      CHECK(count_T(n, k, CountEngine::series) == expected);
    }
  for (const IncTree& t : enumerate_T(3, 2)) {
    const auto ch = children(t);
    for (int v = 0; v < 5; ++v) CHECK((v < 3) == !ch[v].empty());
  }
}

TEST_CASE("leaf-labelled counts match the stored table and are symmetric") {
  const auto table = golden::matrix("table4.txt");
  const CountMatrix t = count_matrix(CountKind::T, 7, CountEngine::series);
  for (int n = 0; n < 7; ++n)
    for (int k = 0; k < 7; ++k) {
      CHECK(t[n][k] == table[n][k]);
      CHECK(t[n][k] == t[k][n]);
    }
}

TEST_CASE("Cayley inversion sequences by antidiagonals") {
  for (int n = 1; n <= 9; ++n) {
    BigInt sum = 0;
    for (int k = 0; k < n; ++k) sum += count_T(k + 1, n - k, CountEngine::enumerate);
    CHECK(count_IP(n, CountEngine::series) == sum);
    if (n <= 8) CHECK(count_IP(n, CountEngine::enumerate) == sum);
  }
  CHECK(count_IP(7) == 1585);
}

TEST_CASE("count guards") {
  TreeLimits limits;
  limits.max_enum_A = 4;
  CHECK_THROWS_AS(count_A(5, 3, CountEngine::enumerate, limits), GuardExceeded);
  limits.series_order = 6;
  CHECK_THROWS_AS(count_T(5, 5, CountEngine::series, limits), GuardExceeded);
}

TEST_CASE("newick with colours") {
  const IncTree t = phi(coloured("00", "rb"));
  CHECK(to_newick(t) == "(1[b],2[b])0[r];");
}
