#pragma once

#include <json.hpp>
#include <string>

#include "minseq/extensions.hpp"
#include "minseq/generate.hpp"
#include "minseq/trees.hpp"

namespace minseq {

using Json = nlohmann::ordered_json;

// Sequences are written in the compact/comma text form accepted by parse().
Json to_json(const MinimalSet& set);
MinimalSet minimal_set_from_json(const Json& j);

Json to_json(const MinimalityVerdict& verdict);
Json to_json(const AscentMinimalResult& result);
Json rgf_json(SeqView rho, const std::vector<IntSeq>& sequences);

// {"parent": [null, 0, ...], "colour": ["b", "r", ...]}; colour omitted when empty.
Json to_json(const IncTree& t);
IncTree tree_from_json(const Json& j);

// "SEQ:COLOURS" with one b/r letter per value in [0, n-1], e.g. "002303:rrbrbb".
ColouredInvSeq parse_coloured(std::string_view text);
std::string format_coloured(const ColouredInvSeq& alpha);
Json to_json(const ColouredInvSeq& alpha);

// "(6,5,0)".
std::string format_isbt(const IsbtVector& v);

// One line per basis type, "(6,5,0): 0312 0321 ...", then a summary line.
std::string isbt_table_text(const IsbtTable& table);
Json to_json(const IsbtTable& table);

// Rows n (from row_start), columns m or k (from col_start).
struct MatrixLayout {
  std::string row_label;
  std::string col_label;
  int row_start = 0;
  int col_start = 0;
};
MatrixLayout matrix_layout(CountKind kind);

std::string matrix_text(const CountMatrix& m, const MatrixLayout& layout);
std::string matrix_csv(const CountMatrix& m, const MatrixLayout& layout);
Json matrix_json(const CountMatrix& m, const MatrixLayout& layout);

}  // namespace minseq
