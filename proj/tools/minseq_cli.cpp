#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minseq/extensions.hpp"
#include "minseq/generate.hpp"
#include "minseq/io.hpp"
#include "minseq/minimality.hpp"
#include "minseq/series.hpp"
#include "minseq/trees.hpp"

using namespace minseq;

namespace {

enum class Format { automatic, text, json, csv };

struct Options {
  Format format = Format::automatic;
  unsigned threads = 1;
  bool auto_reduce = false;
  GenerateLimits gen;
  TreeLimits trees;
  AscentLimits ascent;
};

// Resolves --format for a command whose natural output is `fallback`.
Format resolve(const Options& opt, Format fallback) {
  return opt.format == Format::automatic ? fallback : opt.format;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_lines(const std::vector<IntSeq>& seqs) {
  for (const IntSeq& s : seqs) std::cout << format(s) << '\n';
}

IntSeq read_pattern(const std::string& text, const Options& opt) {
  IntSeq p = parse(text);
  if (opt.auto_reduce && !p.empty()) p = reduce(p);
  return p;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError(Errc::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(Errc::parse_error, e.what());
  }
}

CountKind count_kind(const std::string& s) {
  if (s == "A") return CountKind::A;
  if (s == "T") return CountKind::T;
  return CountKind::IP;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal inversion sequences, coloured trees and their counting series"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  std::string format_name = "auto";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"auto", "text", "json", "csv"}));
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-oracle-len", opt.gen.oracle.max_len, "Longest sequence for the subsequence oracle");
  app.add_option("--max-mdd", opt.gen.max_mdd, "Largest mdd accepted by the generator");
  app.add_option("--naive-max-len", opt.gen.naive_max_len, "Longest window for the naive generator");
  app.add_option("--max-pattern-len", opt.gen.max_pattern_len, "Longest pattern enumerated");
  app.add_option("--series-order", opt.trees.series_order, "Truncation order of the series");
  app.add_option("--max-ascent-len", opt.ascent.max_len, "Longest ascent sequence enumerated");
  app.add_flag("--auto-reduce", opt.auto_reduce, "Reduce patterns instead of rejecting them");

  std::string seq_arg, pattern_arg, kind_arg, engine_arg, colours_arg, file_arg, coloured_arg, minimal_arg;
  bool show_occurrences = false;
  bool witness = false;
  bool check = false;
  int max_len = 0, limit = 0, k_arg = 0;

  auto* stats = app.add_subcommand("stats", "Statistics of a sequence");
  stats->add_option("SEQ", seq_arg)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduction of a sequence");
  reduce_cmd->add_option("SEQ", seq_arg)->required();

  auto* contains_cmd = app.add_subcommand("contains", "Pattern containment");
  contains_cmd->add_option("PATTERN", pattern_arg)->required();
  contains_cmd->add_option("SEQ", seq_arg)->required();
  contains_cmd->add_flag("--occurrences", show_occurrences, "List every occurrence");

  auto* minimal = app.add_subcommand("minimal", "All rho-minimal inversion sequences");
  minimal->add_option("PATTERN", pattern_arg)->required();
  engine_arg = "pruned";
  minimal->add_option("--engine", engine_arg)->check(CLI::IsMember({"pruned", "naive"}));

  auto* check_cmd = app.add_subcommand("minimal-check", "Decide rho-minimality of one sequence");
  check_cmd->add_option("PATTERN", pattern_arg)->required();
  check_cmd->add_option("SEQ", seq_arg)->required();
  check_cmd->add_option("--engine", engine_arg)->check(CLI::IsMember({"prop1", "oracle"}));

  auto* isbt = app.add_subcommand("isbt", "Basis type of a pattern");
  isbt->add_option("PATTERN", pattern_arg)->required();

  auto* isbt_table_cmd = app.add_subcommand("isbt-table", "Patterns grouped by basis type");
  isbt_table_cmd->add_option("--max-len", max_len)->required();

  auto* construct = app.add_subcommand("construct", "Explicit minimal sequences");
  construct->add_option("PATTERN", pattern_arg)->required();
  construct->add_option("--kind", kind_arg)->required()->check(CLI::IsMember({"prefix", "tight-ub", "near-max"}));

  auto* count = app.add_subcommand("count", "Count tables for A, T and I ∩ P");
  count->add_option("--kind", kind_arg)->required()->check(CLI::IsMember({"A", "T", "IP"}));
  count->add_option("--limit", limit)->required();
  std::string count_engine = "series";
  count->add_option("--engine", count_engine)->check(CLI::IsMember({"enum", "series"}));

  auto* phi_cmd = app.add_subcommand("phi", "Increasing tree of an inversion sequence");
  phi_cmd->add_option("SEQ", seq_arg)->required();
  phi_cmd->add_option("--colours", colours_arg, "One b/r letter per value in [0, n-1]");

  auto* phi_inv = app.add_subcommand("phi-inverse", "Inversion sequence of a tree (JSON file or -)");
  phi_inv->add_option("TREEFILE", file_arg)->required();

  auto* bijection = app.add_subcommand("bijection", "Coloured prefix bijection for rho_1 = mdd(rho)");
  bijection->add_option("PATTERN", pattern_arg)->required();
  auto* fwd = bijection->add_option("--coloured", coloured_arg, "SEQ:COLOURS, mapped to a minimal sequence");
  auto* bwd = bijection->add_option("--minimal", minimal_arg, "Minimal sequence, mapped to its coloured prefix");
  fwd->excludes(bwd);

  auto* rgf = app.add_subcommand("rgf-minimal", "All rho-minimal RGFs");
  rgf->add_option("PATTERN", pattern_arg)->required();

  auto* ascent = app.add_subcommand("ascent-minimal", "rho-minimal ascent sequences up to a length");
  ascent->add_option("PATTERN", pattern_arg)->required();
  ascent->add_option("--max-len", max_len)->required();
  ascent->add_flag("--witness", witness, "Also search one length further");

  auto* ascent_construct = app.add_subcommand("ascent-construct", "Long minimal ascent sequence for the decreasing pattern");
  ascent_construct->add_option("K", k_arg)->required();
  ascent_construct->add_flag("--check", check, "Confirm minimality with the subset oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (format_name == "text") opt.format = Format::text;
  if (format_name == "json") opt.format = Format::json;
  if (format_name == "csv") opt.format = Format::csv;
  opt.gen.threads = opt.threads;
  opt.ascent.threads = opt.threads;

  try {
    if (*stats) {
      const IntSeq s = parse(seq_arg);
      Json j;
      j["sequence"] = format(s);
      j["length"] = s.size();
      j["reduced"] = format(reduce(s));
      j["dist"] = dist(s);
      if (s.empty()) {
        j["mdd"] = nullptr;
        j["sat"] = Json::array();
      } else {
        j["mdd"] = mdd(s);
        j["sat"] = sat(s);
      }
      const RecordProfile profile = record_profile(s);
      j["records"] = profile.rec_values;
      j["ascents"] = profile.asc_count;
      const SeqClassFlags flags = classify(s);
      j["inversion_sequence"] = flags.is_inversion_sequence;
      j["cayley_permutation"] = flags.is_cayley_permutation;
      j["rgf"] = flags.is_rgf;
      j["ascent_sequence"] = flags.is_ascent_sequence;
      print_json(j);
    } else if (*reduce_cmd) {
      const IntSeq r = reduce(parse(seq_arg));
      if (resolve(opt, Format::text) == Format::json)
        print_json(Json{{"reduced", format(r)}});
      else
        std::cout << format(r) << '\n';
    } else if (*contains_cmd) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const IntSeq s = parse(seq_arg);
      Json j;
      j["contains"] = contains(s, p);
      if (show_occurrences) {
        Json occ = Json::array();
        for (const Occurrence& o : occurrences(s, p)) occ.push_back(o.positions);
        j["occurrences"] = occ;
      }
      print_json(j);
    } else if (*minimal) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const MinimalSet set =
          engine_arg == "naive" ? minimal_set_naive(p, opt.gen) : minimal_set(p, opt.gen);
      if (resolve(opt, Format::json) == Format::text)
        print_lines(set.sequences);
      else
        print_json(to_json(set));
    } else if (*check_cmd) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const IntSeq s = parse(seq_arg);
      const MinimalityVerdict v =
          engine_arg == "oracle" ? is_minimal_oracle(s, p, opt.gen.oracle) : is_minimal_prop1(s, p);
      if (resolve(opt, Format::json) == Format::text)
        std::cout << (v.minimal ? "minimal" : "not minimal") << '\n';
      else
        print_json(to_json(v));
    } else if (*isbt) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const MinimalSet set = minimal_set(p, opt.gen);
      if (resolve(opt, Format::json) == Format::text) {
        std::cout << format_isbt(set.isbt) << '\n';
      } else {
        Json j;
        j["pattern"] = format(set.pattern);
        j["mdd"] = set.mdd;
        j["isbt"] = set.isbt;
        print_json(j);
      }
    } else if (*isbt_table_cmd) {
      const IsbtTable table = isbt_table(max_len, opt.gen);
      if (resolve(opt, Format::text) == Format::json)
        print_json(to_json(table));
      else
        std::cout << isbt_table_text(table);
    } else if (*construct) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      std::vector<IntSeq> seqs;
      if (kind_arg == "prefix") seqs = construct_prefix_family(p, opt.gen);
      if (kind_arg == "tight-ub") seqs = {construct_tight_ub(p)};
      if (kind_arg == "near-max") seqs = {construct_near_max(p)};
      if (resolve(opt, Format::json) == Format::text) {
        print_lines(seqs);
      } else {
        Json j;
        j["pattern"] = format(p);
        j["kind"] = kind_arg;
        Json arr = Json::array();
        for (const IntSeq& s : seqs) arr.push_back(format(s));
        j["sequences"] = arr;
        print_json(j);
      }
    } else if (*count) {
      const CountKind kind = count_kind(kind_arg);
      const CountEngine engine = count_engine == "enum" ? CountEngine::enumerate : CountEngine::series;
      const CountMatrix m = count_matrix(kind, limit, engine, opt.trees);
      const MatrixLayout layout = matrix_layout(kind);
      switch (resolve(opt, Format::text)) {
        case Format::json: print_json(matrix_json(m, layout)); break;
        case Format::csv: std::cout << matrix_csv(m, layout); break;
        default:
          if (kind == CountKind::IP) {
            for (std::size_t i = 0; i < m[0].size(); ++i) std::cout << (i ? " " : "") << m[0][i];
            std::cout << '\n';
          } else {
            std::cout << matrix_text(m, layout);
          }
      }
    } else if (*phi_cmd) {
      const IntSeq s = parse(seq_arg);
      IncTree t;
      if (colours_arg.empty())
        t = phi(s);
      else
        t = phi(parse_coloured(seq_arg + ":" + colours_arg));
      if (resolve(opt, Format::json) == Format::text) {
        std::cout << to_newick(t) << '\n';
      } else {
        Json j = to_json(t);
        j["newick"] = to_newick(t);
        print_json(j);
      }
    } else if (*phi_inv) {
      const IncTree t = tree_from_json(parse_json_text(read_file(file_arg)));
      const bool text = resolve(opt, Format::json) == Format::text;
      if (t.colour.empty()) {
        const IntSeq s = phi_inverse(t);
        if (text)
          std::cout << format(s) << '\n';
        else
          print_json(Json{{"seq", format(s)}});
      } else {
        const ColouredInvSeq a = phi_inverse_coloured(t);
        if (text)
          std::cout << format_coloured(a) << '\n';
        else
          print_json(to_json(a));
      }
    } else if (*bijection) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      Json j;
      j["pattern"] = format(p);
      if (!coloured_arg.empty()) {
        const ColouredInvSeq a = parse_coloured(coloured_arg);
        j["coloured"] = to_json(a);
        j["minimal"] = format(coloured_to_minimal(a, p));
      } else if (!minimal_arg.empty()) {
        const IntSeq s = parse(minimal_arg);
        j["minimal"] = format(s);
        j["coloured"] = to_json(minimal_to_coloured(s, p));
      } else {
        throw PreconditionError(Errc::invalid_argument, "give --coloured or --minimal");
      }
      print_json(j);
    } else if (*rgf) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const std::vector<IntSeq> seqs = rgf_minimal_set(p);
      if (resolve(opt, Format::json) == Format::text)
        print_lines(seqs);
      else
        print_json(rgf_json(p, seqs));
    } else if (*ascent) {
      const IntSeq p = read_pattern(pattern_arg, opt);
      const AscentMinimalResult r = ascent_minimal_set(p, max_len, opt.ascent);
      Json j = to_json(r);
      if (witness) {
        const auto w = ascent_extension_witness(r, opt.ascent);
        j["next_length"] = max_len + 1;
        j["witness"] = w ? Json(format(*w)) : Json(nullptr);
      }
      if (resolve(opt, Format::json) == Format::text)
        print_lines(r.sequences);
      else
        print_json(j);
    } else if (*ascent_construct) {
      const IntSeq s = construct_decreasing_ascent(k_arg);
      Json j;
      j["k"] = k_arg;
      j["sequence"] = format(s);
      j["length"] = s.size();
      if (check) {
        IntSeq rho(k_arg);
        for (int i = 0; i < k_arg; ++i) rho[i] = k_arg - 1 - i;
        j["oracle_minimal"] = is_minimal_ascent_oracle(s, rho, opt.ascent).minimal;
      }
      if (resolve(opt, Format::json) == Format::text)
        std::cout << format(s) << '\n';
      else
        print_json(j);
    }
  } catch (const PreconditionError& e) {
    std::cerr << Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << Json{{"error", "guard_exceeded"},
                      {"guard", e.guard()},
                      {"limit", e.limit()},
                      {"requested", e.requested()},
                      {"message", e.what()}}
                     .dump()
              << '\n';
    return 2;
  }
  return 0;
}
