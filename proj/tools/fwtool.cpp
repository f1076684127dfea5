// fwtool: formation width, alternation length, appendix enumerations,
// coverage checks and timing from the command line.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fwidth.hpp"
#include "json.hpp"

namespace {

using namespace fwidth;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::size_t default_threads() {
  if (const char* env = std::getenv("FWIDTH_THREADS")) {
    try {
      return std::max<std::size_t>(1, std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring FWIDTH_THREADS='" << env << "'\n";
    }
  }
  return 1;
}

/// Writes to the named file, or stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

/// Compares produced lines with an expected fixture; prints a unified
/// summary and returns true on an exact match.
bool compare_with_fixture(const std::vector<std::string>& produced, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read fixture '" + path + "'");
  const auto expected = read_lines(in);
  bool ok = produced == expected;
  for (const auto& line : expected) {
    if (std::ranges::find(produced, line) == produced.end()) std::cerr << "missing:    " << line << '\n';
  }
  for (const auto& line : produced) {
    if (std::ranges::find(expected, line) == expected.end()) std::cerr << "unexpected: " << line << '\n';
  }
  std::cerr << (ok ? "MATCH " : "MISMATCH ") << path << " (" << produced.size() << " produced, " << expected.size()
            << " expected)\n";
  return ok;
}

struct FwArgs {
  std::string sequence;
  std::string algo = "pv";
  bool crosscheck = false;
  bool witness = false;
  bool no_normalize = false;
  bool json = false;
};

int cmd_fw(const FwArgs& a) {
  const Sequence u = parse_sequence(a.sequence, !a.no_normalize);
  const auto start = std::chrono::steady_clock::now();
  const FwResult res = fw(u, parse_algorithm(a.algo), a.crosscheck);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.json) {
    nlohmann::json rec{{"sequence", format_sequence(u)}, {"fw", res.s}, {"algorithm", to_string(res.algorithm)},
                       {"elapsed_s", elapsed}};
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << res.s << '\n';
  }
  if (a.witness && res.s > 0) {
    if (res.witness) {
      const std::string blocks = res.witness->blocks() == 0 ? "(empty formation)" : format_formation(*res.witness);
      std::cout << "witness: " << blocks << '\n';
    } else {
      std::cout << "witness: (not tracked)\n";
    }
  }
  return 0;
}

int cmd_altlen(const std::string& text, bool no_normalize) {
  std::cout << alternation_length(parse_sequence(text, !no_normalize)) << '\n';
  return 0;
}

struct EnumerateArgs {
  std::size_t fw = 0;
  std::size_t letters = 3;
  std::size_t max_len = 0;
  std::string out;
  std::string format = "lines";
  std::size_t threads = 1;
  bool allow_fewer_letters = false;
  std::string expect;
};

int cmd_enumerate(const EnumerateArgs& a) {
  EnumerationQuery q;
  q.x = a.fw;
  q.r = a.letters;
  if (a.max_len > 0) q.max_len = a.max_len;
  q.require_exact_alphabet = !a.allow_fewer_letters;
  const auto found = enumerate_fw_alt(q, a.threads);

  std::vector<std::string> lines;
  for (const auto& u : found) {
    if (a.format == "json") {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t width = fw_pv(u).s;
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      nlohmann::json rec{{"sequence", format_sequence(u)}, {"fw", width}, {"algorithm", "pv"}, {"elapsed_s", elapsed}};
      lines.push_back(rec.dump());
    } else {
      lines.push_back(format_sequence(u));
    }
  }
  Output out(a.out);
  for (const auto& line : lines) out.stream() << line << '\n';
  if (!a.expect.empty()) {
    std::vector<std::string> plain;
    for (const auto& u : found) plain.push_back(format_sequence(u));
    return compare_with_fixture(plain, a.expect) ? 0 : kExitFailure;
  }
  return 0;
}

int cmd_abc_enum(std::size_t blocks, bool all, const std::string& out_path, const std::string& expect) {
  std::vector<std::string> lines;
  for (const auto& rec : enumerate_abc_acb(blocks, !all)) lines.push_back(format_abc_record(rec));
  Output out(out_path);
  for (const auto& line : lines) out.stream() << line << '\n';
  if (!expect.empty()) return compare_with_fixture(lines, expect) ? 0 : kExitFailure;
  return 0;
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

int cmd_verify_prop(const std::string& which) {
  auto specs = builtin_case_specs();
  if (which != "all") {
    int id = 0;
    try {
      id = std::stoi(which);
    } catch (const std::exception&) {
      id = 0;
    }
    std::erase_if(specs, [id](const CaseSpec& s) { return s.id != id; });
    if (specs.empty()) {
      std::cerr << "error: unknown case '" << which << "' (expected 1-5 or all)\n";
      return kExitUsage;
    }
  }
  bool all_pass = true;
  std::cout << "case  family                   computed exceptions          claimed exceptions           result\n";
  for (const auto& spec : specs) {
    const CaseReport rep = verify_case(spec);
    all_pass = all_pass && rep.pass;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-5d %-24s %-28s %-28s %s", spec.id, spec.family.c_str(),
                  join(rep.computed_exceptions).c_str(), join(rep.claimed_exceptions).c_str(),
                  rep.pass ? "PASS" : "FAIL");
    std::cout << buf << '\n';
    std::cout << "      witnesses: " << join(spec.witnesses) << '\n';
  }
  return all_pass ? 0 : kExitFailure;
}

struct BenchArgs {
  std::string family = "abc";
  std::size_t t_min = 1;
  std::size_t t_max = 10;
  std::size_t trials = 20;
  double min_trial_seconds = 1e-3;
  std::string out;
  std::vector<std::string> algos{"tree", "pv"};
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig config;
  config.sequences = power_family(a.family, a.t_min, a.t_max);
  config.trials = a.trials;
  config.min_trial_seconds = a.min_trial_seconds;
  config.algorithms.clear();
  for (const auto& name : a.algos) config.algorithms.push_back(parse_algorithm(name));
  const BenchReport report = run_bench(config);
  if (!a.out.empty()) {
    Output out(a.out);
    write_bench_csv(report, out.stream());
  }
  write_bench_table(report, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formation width of sequences and related enumerations"};
  app.require_subcommand(1);

  FwArgs fw_args;
  auto* fw_cmd = app.add_subcommand("fw", "Print fw(u)");
  fw_cmd->add_option("sequence", fw_args.sequence, "Digit string, letters, or integer list")->required();
  fw_cmd->add_option("--algo", fw_args.algo, "pv, tree or binary")->check(CLI::IsMember({"pv", "tree", "binary"}));
  fw_cmd->add_flag("--crosscheck", fw_args.crosscheck, "Run the other algorithms and compare");
  fw_cmd->add_flag("--witness", fw_args.witness, "Print an avoiding formation with fw-1 blocks");
  fw_cmd->add_flag("--no-normalize", fw_args.no_normalize, "Reject input that is not already normalized");
  fw_cmd->add_flag("--json", fw_args.json, "Print one JSON record");

  std::string alt_seq;
  bool alt_no_normalize = false;
  auto* alt_cmd = app.add_subcommand("altlen", "Print the alternation length of u");
  alt_cmd->add_option("sequence", alt_seq)->required();
  alt_cmd->add_flag("--no-normalize", alt_no_normalize);

  EnumerateArgs en;
  en.threads = default_threads();
  auto* en_cmd = app.add_subcommand("enumerate", "All sequences with fw = X and alternation length X+1");
  en_cmd->add_option("--fw", en.fw, "Target formation width X")->required()->check(CLI::PositiveNumber);
  en_cmd->add_option("--letters", en.letters, "Number of distinct letters")->required();
  en_cmd->add_option("--max-len", en.max_len, "Length cap (default letters * X)");
  en_cmd->add_option("--out", en.out, "Output file (default stdout)");
  en_cmd->add_option("--format", en.format, "lines or json")->check(CLI::IsMember({"lines", "json"}));
  en_cmd->add_option("--threads", en.threads, "Worker threads (default $FWIDTH_THREADS or 1)");
  en_cmd->add_flag("--allow-fewer-letters", en.allow_fewer_letters, "Also emit sequences on fewer letters");
  en_cmd->add_option("--expect", en.expect, "Fixture to compare against; exit 1 on mismatch");

  std::size_t abc_blocks = 0;
  bool abc_all = false;
  std::string abc_out;
  std::string abc_expect;
  auto* abc_cmd = app.add_subcommand("abc-enum", "abc/acb concatenations with fw = 2t-1");
  abc_cmd->add_option("--blocks", abc_blocks, "Number of blocks t")->required()->check(CLI::PositiveNumber);
  abc_cmd->add_flag("--all", abc_all, "List every concatenation, not only fw = 2t-1");
  abc_cmd->add_option("--out", abc_out);
  abc_cmd->add_option("--expect", abc_expect, "Fixture to compare against; exit 1 on mismatch");

  std::string which_case = "all";
  auto* prop_cmd = app.add_subcommand("verify-prop", "Check the (3,4)-formation coverage cases");
  prop_cmd->add_option("--case", which_case, "1-5 or all");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time tree vs pv on (abc)^t or (abcd)^t");
  bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"abc", "abcd"}));
  bench_cmd->add_option("--t-min", bench.t_min);
  bench_cmd->add_option("--t-max", bench.t_max);
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--min-trial-seconds", bench.min_trial_seconds,
                       "Repeat short calls within a trial up to this long; 0 for one call per trial");
  bench_cmd->add_option("--out", bench.out, "CSV output file");
  bench_cmd->add_option("--algos", bench.algos, "Algorithms to time")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fw_cmd) return cmd_fw(fw_args);
    if (*alt_cmd) return cmd_altlen(alt_seq, alt_no_normalize);
    if (*en_cmd) return cmd_enumerate(en);
    if (*abc_cmd) return cmd_abc_enum(abc_blocks, abc_all, abc_out, abc_expect);
    if (*prop_cmd) return cmd_verify_prop(which_case);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::crosscheck_mismatch ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}
