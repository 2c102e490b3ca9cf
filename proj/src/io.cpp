#include "minseq/io.hpp"

#include <algorithm>
#include <limits>

namespace minseq {

namespace {

Json seq_list(const std::vector<IntSeq>& seqs) {
  Json arr = Json::array();
  for (const IntSeq& s : seqs) arr.push_back(format(s));
  return arr;
}

// Counts that fit are plain JSON numbers, larger ones are decimal strings.
Json count_value(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return v.convert_to<long long>();
  return v.str();
}

char colour_char(Colour c) { return c == Colour::red ? 'r' : 'b'; }

Colour colour_from(char c) {
  if (c == 'b' || c == 'B') return Colour::blue;
  if (c == 'r' || c == 'R') return Colour::red;
  throw PreconditionError(Errc::parse_error, std::string("colour must be b or r, got '") + c + "'");
}

}  // namespace

Json to_json(const MinimalSet& set) {
  Json j;
  j["pattern"] = format(set.pattern);
  j["mdd"] = set.mdd;
  j["isbt"] = set.isbt;
  j["sequences"] = seq_list(set.sequences);
  return j;
}

MinimalSet minimal_set_from_json(const Json& j) {
  try {
    MinimalSet set;
    set.pattern = parse(j.at("pattern").get<std::string>());
    set.mdd = j.at("mdd").get<int>();
    set.isbt = j.at("isbt").get<IsbtVector>();
    for (const auto& s : j.at("sequences")) set.sequences.push_back(parse(s.get<std::string>()));
    return set;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(Errc::parse_error, e.what());
  }
}

Json to_json(const MinimalityVerdict& verdict) {
  Json j;
  j["minimal"] = verdict.minimal;
  if (!verdict.witness) {
    j["witness"] = nullptr;
    return j;
  }
  Json w;
  if (const auto* occ = std::get_if<OccurrenceWitness>(&*verdict.witness)) {
    w["kind"] = "occurrence";
    w["positions"] = occ->occurrence.positions;
    w["condition"] = occ->condition;
  } else {
    const auto& sub = std::get<SubsequenceWitness>(*verdict.witness);
    w["kind"] = "subsequence";
    w["tau"] = format(sub.tau);
    w["kept"] = sub.kept;
  }
  j["witness"] = w;
  return j;
}

Json to_json(const AscentMinimalResult& result) {
  Json j;
  j["family"] = "ascent";
  j["pattern"] = format(result.pattern);
  j["max_len"] = result.max_len;
  j["truncated_at_max_len"] = true;
  Json counts = Json::object();
  for (std::size_t len = 0; len < result.by_length.size(); ++len)
    if (result.by_length[len]) counts[std::to_string(len)] = result.by_length[len];
  j["by_length"] = counts;
  j["sequences"] = seq_list(result.sequences);
  return j;
}

Json rgf_json(SeqView rho, const std::vector<IntSeq>& sequences) {
  Json j;
  j["family"] = "rgf";
  j["pattern"] = format(rho);
  j["sequences"] = seq_list(sequences);
  return j;
}

Json to_json(const IncTree& t) {
  Json j;
  Json parent = Json::array();
  for (int p : t.parent) p < 0 ? parent.push_back(nullptr) : parent.push_back(p);
  j["parent"] = parent;
  if (!t.colour.empty()) {
    Json colour = Json::array();
    for (Colour c : t.colour) colour.push_back(std::string(1, colour_char(c)));
    j["colour"] = colour;
  }
  return j;
}

IncTree tree_from_json(const Json& j) {
  IncTree t;
  try {
    for (const auto& p : j.at("parent")) t.parent.push_back(p.is_null() ? -1 : p.get<int>());
    if (j.contains("colour"))
      for (const auto& c : j.at("colour")) {
        const std::string s = c.get<std::string>();
        if (s.size() != 1) throw PreconditionError(Errc::malformed_tree, "colour entries are single letters");
        t.colour.push_back(colour_from(s[0]));
      }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(Errc::malformed_tree, e.what());
  }
  validate_tree(t);
  return t;
}

ColouredInvSeq parse_coloured(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw PreconditionError(Errc::parse_error, "coloured sequence must look like SEQ:COLOURS");
  ColouredInvSeq alpha;
  alpha.seq = parse(text.substr(0, colon));
  for (char c : text.substr(colon + 1))
    if (c != ' ') alpha.colour.push_back(colour_from(c));
  validate_coloured(alpha);
  return alpha;
}

std::string format_coloured(const ColouredInvSeq& alpha) {
  std::string out = format(alpha.seq) + ":";
  for (Colour c : alpha.colour) out += colour_char(c);
  return out;
}

Json to_json(const ColouredInvSeq& alpha) {
  Json j;
  j["seq"] = format(alpha.seq);
  j["colours"] = format_coloured(alpha).substr(format(alpha.seq).size() + 1);
  j["red"] = red_values(alpha);
  j["blue_count"] = blue_count(alpha);
  return j;
}

std::string format_isbt(const IsbtVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string isbt_table_text(const IsbtTable& table) {
  std::string out;
  std::size_t patterns = 0;
  for (const auto& [isbt, pats] : table) {
    out += format_isbt(isbt) + ":";
    for (const IntSeq& p : pats) out += " " + format(p);
    out += '\n';
    patterns += pats.size();
  }
  out += "# " + std::to_string(table.size()) + " types, " + std::to_string(patterns) + " patterns\n";
  return out;
}

Json to_json(const IsbtTable& table) {
  Json rows = Json::array();
  for (const auto& [isbt, pats] : table) {
    Json row;
    row["isbt"] = isbt;
    row["patterns"] = seq_list(pats);
    rows.push_back(row);
  }
  return rows;
}

MatrixLayout matrix_layout(CountKind kind) {
  switch (kind) {
    case CountKind::A: return {"n", "m", 0, 0};
    case CountKind::T: return {"n", "k", 1, 1};
    case CountKind::IP: return {"", "n", 0, 1};
  }
  return {};
}

std::string matrix_text(const CountMatrix& m, const MatrixLayout& layout) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{layout.row_label.empty() ? "" : layout.row_label + "\\" + layout.col_label};
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols; ++c)
    header.push_back(layout.row_label.empty() ? layout.col_label + "=" + std::to_string(layout.col_start + c)
                                              : std::to_string(layout.col_start + c));
  cells.push_back(header);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::vector<std::string> row{layout.row_label.empty() ? "" : std::to_string(layout.row_start + r)};
    for (const BigInt& v : m[r]) row.push_back(v.str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0 && width[0] == 0) continue;
      if (!line.empty()) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += line + '\n';
  }
  return out;
}

std::string matrix_csv(const CountMatrix& m, const MatrixLayout& layout) {
  std::string out = layout.row_label.empty() ? layout.col_label : layout.row_label + "\\" + layout.col_label;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols; ++c) out += "," + std::to_string(layout.col_start + c);
  out += '\n';
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += layout.row_label.empty() ? std::string("count") : std::to_string(layout.row_start + r);
    for (const BigInt& v : m[r]) out += "," + v.str();
    out += '\n';
  }
  return out;
}

Json matrix_json(const CountMatrix& m, const MatrixLayout& layout) {
  Json j;
  if (!layout.row_label.empty()) {
    j["rows"] = layout.row_label;
    j["row_start"] = layout.row_start;
  }
  j["cols"] = layout.col_label;
  j["col_start"] = layout.col_start;
  Json values = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const BigInt& v : row) r.push_back(count_value(v));
    values.push_back(r);
  }
  j["values"] = values;
  return j;
}

}  // namespace minseq
