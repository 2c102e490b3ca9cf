#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minseq/generate.hpp"
#include "minseq/seq.hpp"

namespace golden {

inline std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(std::string(MINSEQ_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

// Rows of a numeric table, without the leading row label.
inline std::vector<std::vector<long long>> matrix(const std::string& name) {
  std::vector<std::vector<long long>> out;
  for (const std::string& line : data_lines(name)) {
    std::istringstream ss(line);
    long long label = 0;
    ss >> label;
    out.emplace_back();
    for (long long v; ss >> v;) out.back().push_back(v);
  }
  return out;
}

inline minseq::IsbtVector parse_isbt(const std::string& text) {
  minseq::IsbtVector v;
  std::string inner = text.substr(1, text.size() - 2);
  std::istringstream ss(inner);
  for (std::string field; std::getline(ss, field, ',');) v.push_back(std::stoul(field));
  return v;
}

// Table 3 with rule rows expanded over all patterns of length <= max_len.
inline minseq::IsbtTable table3(int max_len = 5) {
  minseq::IsbtTable out;
  std::vector<minseq::IntSeq> all;
  for (int k = 1; k <= max_len; ++k)
    for (auto& p : minseq::enumerate_patterns(k)) all.push_back(p);
  for (const std::string& line : data_lines("table3.txt")) {
    const auto colon = line.find(':');
    const minseq::IsbtVector key = parse_isbt(line.substr(0, colon));
    std::istringstream ss(line.substr(colon + 1));
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    auto& row = out[key];
    if (words.size() == 2 && words[0] == "rule") {
      const int m = std::stoi(words[1]);
      for (const auto& p : all)
        if (p[0] == m && minseq::mdd(p) == m) row.push_back(p);
    } else {
      for (const auto& w : words) row.push_back(minseq::parse(w));
    }
    std::sort(row.begin(), row.end(), minseq::CanonicalLess{});
  }
  return out;
}

}  // namespace golden
