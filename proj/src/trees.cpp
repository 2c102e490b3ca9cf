#include "minseq/trees.hpp"

#include <algorithm>

#include "minseq/minimality.hpp"

namespace minseq {

std::vector<int> red_values(const ColouredInvSeq& alpha) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(alpha.colour.size()); ++v)
    if (alpha.colour[v] == Colour::red) out.push_back(v);
  return out;
}

int blue_count(const ColouredInvSeq& alpha) {
  return static_cast<int>(std::count(alpha.colour.begin(), alpha.colour.end(), Colour::blue));
}

IntSeq uncolour(const ColouredInvSeq& alpha) { return alpha.seq; }

void validate_coloured(const ColouredInvSeq& alpha) {
  const int n = static_cast<int>(alpha.seq.size());
  if (!is_inversion_sequence(alpha.seq))
    throw PreconditionError(Errc::not_inversion_sequence, "coloured sequence is not an inversion sequence");
  if (static_cast<int>(alpha.colour.size()) != n)
    throw PreconditionError(Errc::not_coloured_member, "need one colour per value in [0, n-1]");
  std::vector<int> mult(n, 0);
  for (int v : alpha.seq) ++mult[v];
  for (int v = 0; v < n; ++v)
    if (alpha.colour[v] == Colour::red && mult[v] < 2)
      throw PreconditionError(Errc::not_coloured_member,
                              "red value " + std::to_string(v) + " occurs fewer than twice");
}

void validate_tree(const IncTree& t) {
  if (t.parent.empty() || t.parent[0] != -1)
    throw PreconditionError(Errc::malformed_tree, "tree needs a root labelled 0");
  for (int v = 1; v < t.size(); ++v)
    if (t.parent[v] < 0 || t.parent[v] >= v)
      throw PreconditionError(Errc::malformed_tree,
                              "node " + std::to_string(v) + " does not have a smaller parent");
  if (!t.colour.empty() && t.colour.size() != t.parent.size())
    throw PreconditionError(Errc::malformed_tree, "colour list length differs from node count");
}

std::vector<std::vector<int>> children(const IncTree& t) {
  std::vector<std::vector<int>> out(t.parent.size());
  for (int v = 1; v < t.size(); ++v) out[t.parent[v]].push_back(v);
  return out;
}

bool in_B(const IncTree& t) {
  validate_tree(t);
  if (t.colour.empty()) return false;
  const auto kids = children(t);
  for (int v = 0; v < t.size(); ++v)
    if (t.colour[v] == Colour::red && kids[v].size() < 2) return false;
  return true;
}

IncTree phi(SeqView s) {
  if (!is_inversion_sequence(s))
    throw PreconditionError(Errc::not_inversion_sequence, "phi needs an inversion sequence");
  IncTree t;
  t.parent.push_back(-1);
  t.parent.insert(t.parent.end(), s.begin(), s.end());
  return t;
}

IncTree phi(const ColouredInvSeq& alpha) {
  validate_coloured(alpha);
  IncTree t = phi(alpha.seq);
  t.colour = alpha.colour;
  t.colour.push_back(Colour::blue);
  return t;
}

IntSeq phi_inverse(const IncTree& t) {
  validate_tree(t);
  return IntSeq(t.parent.begin() + 1, t.parent.end());
}

ColouredInvSeq phi_inverse_coloured(const IncTree& t) {
  validate_tree(t);
  if (t.colour.empty()) throw PreconditionError(Errc::malformed_tree, "tree has no colours");
  if (t.colour.back() != Colour::blue)
    throw PreconditionError(Errc::malformed_tree, "the largest label must be blue");
  ColouredInvSeq alpha{phi_inverse(t), std::vector<Colour>(t.colour.begin(), t.colour.end() - 1)};
  validate_coloured(alpha);
  return alpha;
}

namespace {

void require_nm(int n, int m) {
  if (n < 0 || m < 0) throw PreconditionError(Errc::invalid_argument, "n and m must be >= 0");
}

class ColouredSearch {
 public:
  ColouredSearch(int n, const std::function<void(const ColouredInvSeq&)>& visit)
      : n_(n), visit_(visit), mult_(n, 0) {
    alpha_.seq.resize(n);
    alpha_.colour.assign(n, Colour::blue);
  }

  void run_for(const std::vector<int>& red) {
    std::fill(alpha_.colour.begin(), alpha_.colour.end(), Colour::blue);
    for (int r : red) alpha_.colour[r] = Colour::red;
    deficit_ = 2 * static_cast<int>(red.size());
    step(0);
  }

 private:
  void step(int p) {
    if (p == n_) {
      visit_(alpha_);
      return;
    }
    for (int v = 0; v <= p; ++v) {
      const bool red = alpha_.colour[v] == Colour::red;
      const int gain = red && mult_[v] < 2 ? 1 : 0;
      if (deficit_ - gain > n_ - p - 1) continue;
      alpha_.seq[p] = v;
      ++mult_[v];
      deficit_ -= gain;
      step(p + 1);
      deficit_ += gain;
      --mult_[v];
    }
  }

  int n_;
  const std::function<void(const ColouredInvSeq&)>& visit_;
  ColouredInvSeq alpha_;
  std::vector<int> mult_;
  int deficit_ = 0;
};

// Calls visit on every r-subset of [0, n) in lexicographic order.
template <class Visit>
void for_each_subset(int n, int r, Visit&& visit) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool colour_less(const ColouredInvSeq& a, const ColouredInvSeq& b) {
  if (a.seq != b.seq) return canonical_less(a.seq, b.seq);
  return a.colour < b.colour;
}

}  // namespace

void for_each_A(int n, int m, const std::function<void(const ColouredInvSeq&)>& visit) {
  require_nm(n, m);
  if (m > n || n > 2 * m) return;
  ColouredSearch search(n, visit);
  for_each_subset(n, n - m, [&](const std::vector<int>& red) { search.run_for(red); });
}

std::vector<ColouredInvSeq> enumerate_A(int n, int m, const TreeLimits& limits) {
  require_nm(n, m);
  check_guard("max-enum-A", limits.max_enum_A, n);
  std::vector<ColouredInvSeq> out;
  for_each_A(n, m, [&](const ColouredInvSeq& a) { out.push_back(a); });
  std::sort(out.begin(), out.end(), colour_less);
  return out;
}

BigInt count_A(int n, int m, CountEngine engine, const TreeLimits& limits) {
  require_nm(n, m);
  if (engine == CountEngine::automatic)
    engine = n <= limits.max_enum_A ? CountEngine::enumerate : CountEngine::series;
  if (engine == CountEngine::enumerate) {
    check_guard("max-enum-A", limits.max_enum_A, n);
    long long count = 0;
    for_each_A(n, m, [&](const ColouredInvSeq&) { ++count; });
    return count;
  }
  check_guard("series-order", limits.series_order, n + m + 2);
  return count_A_series(solve_B(limits.series_order), n, m);
}

namespace {

// rho_1 = mdd(rho); returns m.
int require_coloured_prefix_pattern(SeqView rho) {
  require_pattern(rho);
  const int m = mdd(rho);
  if (rho[0] != m)
    throw PreconditionError(Errc::invalid_argument, "pattern must satisfy rho_1 = mdd(rho)");
  return m;
}

}  // namespace

IntSeq coloured_to_minimal(const ColouredInvSeq& alpha, SeqView rho) {
  const int m = require_coloured_prefix_pattern(rho);
  validate_coloured(alpha);
  const int n = static_cast<int>(alpha.seq.size());
  if (blue_count(alpha) != m)
    throw PreconditionError(Errc::not_coloured_member,
                            "coloured sequence must have exactly mdd(rho) blue values");
  // Values of the copy of rho: [0, max(rho) + n - m] without the red values.
  std::vector<int> values;
  for (int v = 0; v <= max_value(rho) + n - m; ++v)
    if (v >= n || alpha.colour[v] == Colour::blue) values.push_back(v);
  IntSeq sigma = alpha.seq;
  for (int r : rho) sigma.push_back(values[r]);
  return sigma;
}

ColouredInvSeq minimal_to_coloured(SeqView sigma, SeqView rho) {
  require_coloured_prefix_pattern(rho);
  const MinimalityVerdict verdict = is_minimal_prop1(sigma, rho);
  if (!verdict.minimal)
    throw PreconditionError(Errc::invalid_argument, "sequence is not rho-minimal");
  const int n = static_cast<int>(sigma.size() - rho.size());
  ColouredInvSeq alpha;
  alpha.seq.assign(sigma.begin(), sigma.begin() + n);
  alpha.colour.assign(n, Colour::red);
  for (int i = n; i < static_cast<int>(sigma.size()); ++i)
    if (sigma[i] < n) alpha.colour[sigma[i]] = Colour::blue;
  std::vector<bool> present(n, false);
  for (int v : alpha.seq) present[v] = true;
  for (int v = 0; v < n; ++v)
    if (!present[v]) alpha.colour[v] = Colour::blue;
  validate_coloured(alpha);
  return alpha;
}

namespace {

class TreeSearch {
 public:
  TreeSearch(int n, int k, const std::function<void(const IncTree&)>& visit)
      : n_(n), total_(n + k), visit_(visit), kids_(n, 0) {
    tree_.parent.assign(total_, -1);
  }

  void run() {
    if (total_ == 1) return;
    step(1);
  }

 private:
  void step(int v) {
    if (v == total_) {
      visit_(tree_);
      return;
    }
    const int top = std::min(v - 1, n_ - 1);
    for (int p = 0; p <= top; ++p) {
      const int gain = kids_[p] == 0 ? 1 : 0;
      // Every internal node still without children needs one of the nodes after v.
      if (childless_ - gain > total_ - v - 1) continue;
      tree_.parent[v] = p;
      ++kids_[p];
      childless_ -= gain;
      step(v + 1);
      childless_ += gain;
      --kids_[p];
    }
  }

  int n_;
  int total_;
  const std::function<void(const IncTree&)>& visit_;
  IncTree tree_;
  std::vector<int> kids_;
  int childless_ = n_;
};

void require_nk(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError(Errc::invalid_argument, "n and k must be >= 1");
}

}  // namespace

void for_each_T(int n, int k, const std::function<void(const IncTree&)>& visit) {
  require_nk(n, k);
  TreeSearch(n, k, visit).run();
}

std::vector<IncTree> enumerate_T(int n, int k, const TreeLimits& limits) {
  require_nk(n, k);
  check_guard("max-materialized-T", limits.max_materialized_T, n + k);
  std::vector<IncTree> out;
  for_each_T(n, k, [&](const IncTree& t) { out.push_back(t); });
  return out;
}

BigInt count_T(int n, int k, CountEngine engine, const TreeLimits& limits) {
  require_nk(n, k);
  if (engine == CountEngine::automatic)
    engine = n + k <= limits.max_enum_T ? CountEngine::enumerate : CountEngine::series;
  if (engine == CountEngine::enumerate) {
    check_guard("max-enum-T", limits.max_enum_T, n + k);
    long long count = 0;
    for_each_T(n, k, [&](const IncTree&) { ++count; });
    return count;
  }
  check_guard("series-order", limits.series_order, n + k);
  return count_T_series(closed_T(limits.series_order), n, k);
}

BigInt count_IP(int n, CountEngine engine, const TreeLimits& limits) {
  if (n < 0) throw PreconditionError(Errc::invalid_argument, "n must be >= 0");
  if (engine == CountEngine::automatic)
    engine = n <= limits.max_enum_IP ? CountEngine::enumerate : CountEngine::series;
  if (engine == CountEngine::enumerate) {
    check_guard("max-enum-IP", limits.max_enum_IP, n);
    long long count = 0;
    for_each_inv_cayley(n, [&](SeqView) { ++count; });
    return count;
  }
  check_guard("series-order", limits.series_order, n + 1);
  return count_IP_series(closed_T(limits.series_order), n);
}

CountMatrix count_matrix(CountKind kind, int limit, CountEngine engine, const TreeLimits& limits) {
  if (engine != CountEngine::enumerate) return count_table(kind, limit, limits.series_order);
  if (limit < 0) throw PreconditionError(Errc::invalid_argument, "limit must be >= 0");
  CountMatrix out;
  switch (kind) {
    case CountKind::A:
      for (int n = 0; n <= limit; ++n) {
        out.emplace_back();
        for (int m = 0; m <= limit; ++m) out.back().push_back(count_A(n, m, engine, limits));
      }
      break;
    case CountKind::T:
      for (int n = 1; n <= limit; ++n) {
        out.emplace_back();
        for (int k = 1; k <= limit; ++k) out.back().push_back(count_T(n, k, engine, limits));
      }
      break;
    case CountKind::IP:
      out.emplace_back();
      for (int n = 1; n <= limit; ++n) out.back().push_back(count_IP(n, engine, limits));
      break;
  }
  return out;
}

namespace {

void newick_node(const IncTree& t, const std::vector<std::vector<int>>& kids, int v,
                 std::string& out) {
  if (!kids[v].empty()) {
    out += '(';
    for (std::size_t i = 0; i < kids[v].size(); ++i) {
      if (i) out += ',';
      newick_node(t, kids, kids[v][i], out);
    }
    out += ')';
  }
  out += std::to_string(v);
  if (!t.colour.empty()) out += t.colour[v] == Colour::red ? "[r]" : "[b]";
}

}  // namespace

std::string to_newick(const IncTree& t) {
  validate_tree(t);
  std::string out;
  newick_node(t, children(t), 0, out);
  out += ';';
  return out;
}

}  // namespace minseq
