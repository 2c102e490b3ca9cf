#pragma once

#include <functional>
#include <string>

#include "minseq/generate.hpp"
#include "minseq/series.hpp"

namespace minseq {

enum class Colour : unsigned char { blue, red };

// An inversion sequence of length n with a colour for every value in
// [0, n-1]. Values absent from seq are blue; red values occur at least twice.
struct ColouredInvSeq {
  IntSeq seq;
  std::vector<Colour> colour;
  bool operator==(const ColouredInvSeq&) const = default;
};

// Rooted labelled tree on [0, N-1] given by parent pointers; parent[0] is -1.
// `colour` is either empty or has one entry per node.
struct IncTree {
  std::vector<int> parent;
  std::vector<Colour> colour;
  bool operator==(const IncTree&) const = default;

  int size() const { return static_cast<int>(parent.size()); }
};

enum class CountEngine { automatic, enumerate, series };

struct TreeLimits {
  int max_enum_A = 9;        // largest n for enumerating A_{n,m}
  int max_materialized_T = 12;  // largest n + k for enumerate_T
  int max_enum_T = 12;       // largest n + k for counting T by enumeration
  int max_enum_IP = 11;      // largest n for counting I ∩ P by enumeration
  int series_order = 16;
};

// Red values of alpha; number of blue values in [0, n-1].
std::vector<int> red_values(const ColouredInvSeq& alpha);
int blue_count(const ColouredInvSeq& alpha);
IntSeq uncolour(const ColouredInvSeq& alpha);

// Throws PreconditionError(not_coloured_member) unless alpha lies in some A_{n,m}.
void validate_coloured(const ColouredInvSeq& alpha);

// Throws PreconditionError(malformed_tree) unless t is increasing with root 0.
void validate_tree(const IncTree& t);

std::vector<std::vector<int>> children(const IncTree& t);

// True if t is coloured and every red node has at least two children.
bool in_B(const IncTree& t);

// Children of v are the 1-based positions holding the value v.
IncTree phi(SeqView s);
// Same tree, coloured; the node labelled |alpha| is blue.
IncTree phi(const ColouredInvSeq& alpha);

IntSeq phi_inverse(const IncTree& t);
ColouredInvSeq phi_inverse_coloured(const IncTree& t);

void for_each_A(int n, int m, const std::function<void(const ColouredInvSeq&)>& visit);
// Sorted by sequence, then colours (blue before red).
std::vector<ColouredInvSeq> enumerate_A(int n, int m, const TreeLimits& limits = {});
BigInt count_A(int n, int m, CountEngine engine = CountEngine::automatic,
               const TreeLimits& limits = {});

// alpha in A_{n,m}, rho_1 = mdd(rho) = m. Returns uncolour(alpha) followed by
// the copy of rho that avoids the red values of alpha.
IntSeq coloured_to_minimal(const ColouredInvSeq& alpha, SeqView rho);
// Inverse of coloured_to_minimal for a rho-minimal sigma.
ColouredInvSeq minimal_to_coloured(SeqView sigma, SeqView rho);

// Bi-labelled increasing trees: internal nodes [0, n-1], leaves [n, n+k-1].
void for_each_T(int n, int k, const std::function<void(const IncTree&)>& visit);
std::vector<IncTree> enumerate_T(int n, int k, const TreeLimits& limits = {});
BigInt count_T(int n, int k, CountEngine engine = CountEngine::automatic,
               const TreeLimits& limits = {});

// |I_n ∩ P_n|.
BigInt count_IP(int n, CountEngine engine = CountEngine::automatic,
                const TreeLimits& limits = {});

// Same layout as count_table. Only the enumerate engine counts cell by cell;
// the other engines read every cell off one series.
CountMatrix count_matrix(CountKind kind, int limit, CountEngine engine,
                         const TreeLimits& limits = {});

// Newick text; colours, when present, follow each label as [b] or [r].
std::string to_newick(const IncTree& t);

}  // namespace minseq
