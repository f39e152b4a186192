#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "gcdperm/classification.hpp"
#include "gcdperm/csv.hpp"
#include "gcdperm/cycles.hpp"
#include "gcdperm/errors.hpp"
#include "gcdperm/primorial.hpp"
#include "gcdperm/records.hpp"
#include "gcdperm/sequence.hpp"
#include "verify_suites.hpp"

namespace gcdperm::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cache;
  std::uint64_t max_n = kDefaultMaxTerms;
  unsigned threads = 0;
};

void check_cap(std::uint64_t n, const Config& cfg, const std::string& what) {
  if (n > cfg.max_n) {
    throw ResourceLimitError(what + " = " + std::to_string(n) + " exceeds the cap " +
                             std::to_string(cfg.max_n) + " (--max-n / GCDPERM_MAX_N)");
  }
}

// Runs body against `path`, or against `out` when path is empty or "-".
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

// f_3 records covering [1, limit]; reads and refreshes the cache when one is set.
RecordSet load_records(std::uint64_t limit, const Config& cfg) {
  limit = std::max<std::uint64_t>(limit, 5);
  check_cap(limit, cfg, "record limit");
  if (!cfg.cache.empty()) {
    std::ifstream in(cfg.cache);
    if (in) {
      RecordSet cached = read_record_cache(in);
      if (cached.covered_upto() >= limit) return cached;
    }
  }
  // consecutive records are less than 53 apart; one record past the limit
  // lets a reloaded cache prove its coverage
  RecordSet fresh = record_stream_upto(limit + 53);
  if (!cfg.cache.empty()) {
    with_output(cfg.cache, std::cout, [&](std::ostream& o) { write_record_cache(o, fresh); });
  }
  return fresh;
}

// ---------------------------------------------------------------------------
// b-file comparison

struct BfileLine {
  std::uint64_t n = 0;
  std::uint64_t value = 0;
};

std::vector<BfileLine> read_bfile(std::istream& in) {
  std::vector<BfileLine> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string tok_n, tok_v, extra;
    fields >> tok_n >> tok_v;
    if (tok_v.empty() || (fields >> extra)) {
      throw ParseError(line_no, "expected two integers 'n a(n)', got '" + line + "'");
    }
    BfileLine row;
    for (auto [tok, dst] : {std::pair{&tok_n, &row.n}, std::pair{&tok_v, &row.value}}) {
      const char* end = tok->data() + tok->size();
      auto [ptr, ec] = std::from_chars(tok->data(), end, *dst);
      if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, "not a non-negative integer: '" + *tok + "'");
      }
    }
    out.push_back(row);
  }
  return out;
}

int cmd_diff_bfile(const std::string& path, std::uint64_t a, std::int64_t offset, std::uint64_t from,
                   const Config& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<BfileLine> rows = read_bfile(in);

  std::erase_if(rows, [&](const BfileLine& r) { return r.n < from; });
  std::uint64_t top = 2;
  for (const BfileLine& r : rows) {
    const std::int64_t local = static_cast<std::int64_t>(r.n) + offset;
    if (local < 1) throw std::invalid_argument("index " + std::to_string(r.n) + " maps below 1 under the offset");
    top = std::max<std::uint64_t>(top, static_cast<std::uint64_t>(local));
  }
  if (rows.empty()) {
    err << "warning: no terms to compare in '" << path << "'\n";
    out << "agreement over 0 terms\n";
    return kExitOk;
  }
  check_cap(top, cfg, "b-file index");
  const SequenceBuffer f = generate_prefix(a, top, cfg.max_n);
  for (const BfileLine& r : rows) {
    const std::uint64_t local = f.at(static_cast<std::size_t>(static_cast<std::int64_t>(r.n) + offset));
    if (local != r.value) {
      out << "mismatch at n=" << r.n << ": b-file " << r.value << ", local " << local << '\n';
      return kExitVerificationFailed;
    }
  }
  out << "agreement over " << rows.size() << " terms (a=" << a << ", offset " << offset << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figures

constexpr std::size_t kFigure2Terms = 12'000;
constexpr std::size_t kFigure3Records = 1'000;

void export_figure(const std::string& which, const fs::path& dir, std::uint64_t twin_limit,
                   const Config& cfg, std::ostream& out) {
  auto write = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
    const fs::path file = dir / name;
    with_output(file.string(), out, body);
    out << "wrote " << file.string() << '\n';
  };
  if (which == "fig1") {
    check_cap(twin_limit, cfg, "twin limit");
    const auto rows = twin_cycle_gaps(twin_limit);
    write("fig1_twin_cycle_gaps.csv", [&](std::ostream& o) { write_twin_gaps_csv(o, rows); });
  } else if (which == "fig2") {
    const SequenceBuffer f = generate_prefix(3, kFigure2Terms + 1);
    write("fig2_derivative.csv", [&](std::ostream& o) { write_derivative_csv(o, f, kFigure2Terms); });
  } else if (which == "fig3" || which == "fig4") {
    RecordStream stream;
    std::uint64_t last = 0;
    for (std::size_t i = 0; i < kFigure3Records; ++i) last = stream.next().value;
    const auto points = prime_ratio_series(last, 1, load_records(last, cfg));
    if (which == "fig3") {
      write("fig3_prime_ratio.csv", [&](std::ostream& o) { write_prime_ratio_csv(o, points); });
    } else {
      write("fig4_prime_count.csv", [&](std::ostream& o) { write_prime_count_csv(o, points); });
    }
  } else {
    throw std::invalid_argument("unknown figure '" + which + "'");
  }
}

// ---------------------------------------------------------------------------

int cmd_explore(const std::string& kind, std::uint64_t p, std::uint64_t limit, const Config& cfg,
                std::ostream& out) {
  const RecordSet records = load_records(limit, cfg);
  if (kind == "multiples") {
    const MultipleRecords m = prime_multiple_records(p, limit, records);
    out << "records <= " << limit << " divisible by " << p << ": " << m.values.size() << '\n';
    for (std::size_t i = 0; i < m.values.size(); ++i) {
      out << m.values[i];
      if (i < m.gaps.size()) out << " +" << m.gaps[i];
      out << '\n';
    }
  } else if (kind == "twins") {
    const auto twins = twin_records(limit, records);
    out << "twin records <= " << limit << ": " << twins.size() << '\n';
    for (const auto& [lo, hi] : twins) out << lo << ' ' << hi << '\n';
  } else if (kind == "h-range") {
    const auto rows = twin_cycle_gaps(limit);
    std::vector<std::int64_t> values;
    for (const auto& r : rows) values.push_back(r.gap_b);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    out << "C(M_{j+1}) - C(m_j) over " << rows.size() << " twin pairs <= " << limit << ":";
    for (auto v : values) out << ' ' << v;
    out << '\n';
  } else {
    throw std::invalid_argument("unknown explore kind '" + kind + "'");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GCD-recursive permutations f_a: generation, analysis and verification", "gcdperm"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--cache", cfg.cache, "f_3 record cache file")->envname("GCDPERM_CACHE");
  app.add_option("--max-n", cfg.max_n, "cap on terms or values any command may generate")
      ->envname("GCDPERM_MAX_N")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads for scans (0 = all cores)");

  std::function<int()> action;

  // generate
  auto* gen = app.add_subcommand("generate", "write f_a(1..n)");
  std::uint64_t gen_a = 3;
  std::uint64_t gen_n = 24;
  std::string gen_out;
  std::string gen_format = "csv";
  bool gen_with_g = false;
  gen->add_option("--a", gen_a, "seed f(2) = a")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  gen->add_option("--n", gen_n, "number of terms")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "csv or plain")->check(CLI::IsMember({"csv", "plain"}));
  gen->add_flag("--with-g", gen_with_g, "add the forward difference g(n) = f(n+1) - f(n)");
  gen->callback([&] {
    action = [&] {
      check_cap(gen_n, cfg, "n");
      const SequenceBuffer f = generate_prefix(gen_a, gen_n + (gen_with_g ? 1 : 0), cfg.max_n);
      with_output(gen_out, out, [&](std::ostream& o) {
        if (gen_format == "plain") {
          write_sequence_plain(o, f, gen_n);
        } else {
          write_sequence_csv(o, f, gen_n, gen_with_g);
        }
      });
      return int(kExitOk);
    };
  });

  // records
  auto* rec = app.add_subcommand("records", "list f_3 records up to a limit");
  std::uint64_t rec_limit = 211;
  std::string rec_out;
  std::string rec_format = "csv";
  rec->add_option("--limit", rec_limit, "largest record value")->check(CLI::Range(std::uint64_t{5}, UINT64_MAX));
  rec->add_option("--out", rec_out, "output file (default stdout)");
  rec->add_option("--format", rec_format, "csv or cache")->check(CLI::IsMember({"csv", "cache"}));
  rec->callback([&] {
    action = [&] {
      check_cap(rec_limit, cfg, "limit");
      const RecordSet records = record_stream_upto(rec_limit);
      with_output(rec_out, out, [&](std::ostream& o) {
        if (rec_format == "cache") {
          write_record_cache(o, records);
        } else {
          write_records_csv(o, records);
        }
      });
      return int(kExitOk);
    };
  });

  // cycles
  auto* cyc = app.add_subcommand("cycles", "cycle decomposition of f_a");
  std::uint64_t cyc_a = 3;
  std::uint64_t cyc_bound = 25;
  std::optional<std::uint64_t> cyc_index;
  cyc->add_option("--a", cyc_a, "seed")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  cyc->add_option("--bound", cyc_bound, "cycles whose least element is <= bound");
  cyc->add_option("--index-of", cyc_index, "print the cycle number C(v) of this value");
  cyc->callback([&] {
    action = [&] {
      check_cap(cyc_bound, cfg, "bound");
      SequenceBuffer buf{Params{cyc_a}};
      std::uint64_t reach = cyc_bound;
      if (cyc_index) reach = std::max(reach, *cyc_index);
      const CycleDecomposition d = decompose(buf, reach, cfg.max_n);
      if (cyc_index) {
        out << "C(" << *cyc_index << ") = " << cycle_index(CycleIndexMap(d), *cyc_index) << '\n';
      } else {
        out << d.to_string() << '\n';
      }
      return int(kExitOk);
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "decide whether f_a is eventually the identity or merges with f_3");
  std::uint64_t cls_a = 36;
  std::uint64_t cls_budget = 0;
  cls->add_option("--a", cls_a, "seed")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  cls->add_option("--budget", cls_budget, "terms to simulate (default: grow up to --max-n)");
  cls->callback([&] {
    action = [&] {
      ClassLabel label;
      if (cls_budget) {
        check_cap(cls_budget, cfg, "budget");
        label = classify(cls_a, cls_budget, load_records(cls_budget, cfg));
      } else {
        const std::uint64_t cap = std::min<std::uint64_t>(cfg.max_n, std::max<std::uint64_t>(64 * cls_a, 1'000'000));
        label = classify_auto(cls_a, load_records(cap, cfg), cap);
      }
      out << "a=" << label.a << ' ' << to_string(label.verdict) << ' '
          << (label.verdict == Verdict::Identity ? "M_a=" : "merges from n=") << label.witness
          << " (" << label.simulated_terms << " terms)\n";
      return int(kExitOk);
    };
  });

  // scan-a
  auto* scan = app.add_subcommand("scan-a", "classify 2, 4 and every multiple of 6 up to a bound");
  std::uint64_t scan_bound = 5000;
  std::string scan_out;
  scan->add_option("--bound", scan_bound, "largest seed");
  scan->add_option("--out", scan_out, "output file (default stdout)");
  scan->callback([&] {
    action = [&] {
      check_cap(std::max<std::uint64_t>(64 * scan_bound, 1'000'000), cfg, "scan simulation cap");
      const auto rows = scan_identity_set(scan_bound, cfg.threads);
      with_output(scan_out, out, [&](std::ostream& o) { write_scan_csv(o, rows); });
      const bool all = std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.agree(); });
      return int(all ? kExitOk : kExitVerificationFailed);
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite ('list' shows them)");
  std::string suite;
  SuiteParams params;
  ver->add_option("suite", suite, "suite name")->required();
  ver->add_option("--a", params.a, "seed (suites that take one)");
  ver->add_option("--limit", params.limit, "range limit");
  ver->add_option("--n", params.n, "primorial index");
  ver->add_option("--bound", params.bound, "seed bound");
  ver->callback([&] {
    action = [&] {
      if (suite == "list") {
        for (const auto& s : suites()) out << s.name << "  " << s.summary << '\n';
        return int(kExitOk);
      }
      if (!is_suite(suite)) {
        err << "unknown suite '" << suite << "'; try 'verify list'\n";
        return int(kExitUsage);
      }
      params.max_terms = cfg.max_n;
      params.threads = cfg.threads;
      const auto lines = run_suite(suite, params);
      print_table(out, suite, lines);
      const bool all = !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
      return int(all ? kExitOk : kExitVerificationFailed);
    };
  });

  // diff-bfile
  auto* diff = app.add_subcommand("diff-bfile", "compare a local OEIS b-file with f_a");
  std::string diff_path;
  std::uint64_t diff_a = 3;
  std::int64_t diff_offset = 0;
  std::uint64_t diff_from = 0;
  diff->add_option("path", diff_path, "b-file")->required();
  diff->add_option("--a", diff_a, "seed")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  diff->add_option("--offset", diff_offset, "compare b-file line n with local f(n + offset)");
  diff->add_option("--from", diff_from, "ignore b-file lines with n below this");
  diff->callback([&] {
    action = [&] { return cmd_diff_bfile(diff_path, diff_a, diff_offset, diff_from, cfg, out, err); };
  });

  // export-figures
  auto* fig = app.add_subcommand("export-figures", "write the CSV series behind the figures");
  std::string fig_which;
  std::string fig_dir = ".";
  std::uint64_t fig_twin_limit = 100'000;
  fig->add_option("which", fig_which, "fig1, fig2, fig3, fig4 or all")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "all"}));
  fig->add_option("--out-dir", fig_dir, "output directory");
  fig->add_option("--twin-limit", fig_twin_limit, "largest twin prime for fig1");
  fig->callback([&] {
    action = [&] {
      std::error_code ec;
      fs::create_directories(fig_dir, ec);
      if (ec) throw IoError("cannot create '" + fig_dir + "': " + ec.message());
      const std::vector<std::string> all{"fig1", "fig2", "fig3", "fig4"};
      for (const auto& w : fig_which == "all" ? all : std::vector<std::string>{fig_which}) {
        export_figure(w, fig_dir, fig_twin_limit, cfg, out);
      }
      return int(kExitOk);
    };
  });

  // explore
  auto* exp = app.add_subcommand("explore", "record structure: multiples of a prime, twin records, twin cycle gaps");
  std::string exp_kind = "twins";
  std::uint64_t exp_p = 5;
  std::uint64_t exp_limit = 1000;
  exp->add_option("--kind", exp_kind, "multiples, twins or h-range")
      ->check(CLI::IsMember({"multiples", "twins", "h-range"}));
  exp->add_option("--p", exp_p, "prime for --kind multiples");
  exp->add_option("--limit", exp_limit, "largest value");
  exp->callback([&] { action = [&] { return cmd_explore(exp_kind, exp_p, exp_limit, cfg, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kExitOk) : int(kExitUsage);
  }

  try {
    return action ? action() : int(kExitUsage);
  } catch (const BudgetExhaustedError& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace gcdperm::cli
