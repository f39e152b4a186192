// Acceptance gate: one PASS/FAIL line per criterion; exits nonzero on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli_app.hpp"
#include "gcdperm/arith.hpp"
#include "gcdperm/classification.hpp"
#include "gcdperm/cycles.hpp"
#include "gcdperm/primorial.hpp"
#include "gcdperm/records.hpp"
#include "gcdperm/sequence.hpp"
#include "oracles.hpp"

using namespace gcdperm;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

// Runs body; a time limit of 0 means untimed.
void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.passed) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(4);
  line << (o.passed ? "PASS " : "FAIL ") << id << "  " << title << "  [" << secs << " s]";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
}

std::vector<std::uint64_t> terms(const SequenceBuffer& b) { return {b.terms().begin(), b.terms().end()}; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main() {
  // the record list shared by several criteria is built outside any timed body
  const RecordSet records = record_stream_upto(1'000'100);

  criterion("AC1", "golden prefixes of f_3, f_7, f_36", 0.001, [](Outcome& o) {
    const std::vector<std::uint64_t> f3{1, 3, 2, 5, 4, 7, 6, 11, 8, 9, 10, 13, 12, 17, 14, 15, 16, 19, 18, 23, 20, 21, 22, 25};
    const std::vector<std::uint64_t> f7{1, 7, 2, 3, 4, 5, 6, 11, 8, 9, 10, 13};
    const std::vector<std::uint64_t> f36{1,  36, 5,  2,  3,  4,  7,  6,  11, 8,  9,  10, 13, 12, 17, 14, 15, 16, 19,
                                         18, 23, 20, 21, 22, 25, 24, 29, 26, 27, 28, 31, 30, 37, 32, 33, 34, 35, 38};
    o.require(terms(generate_prefix(3, 24)) == f3, "f_3(1..24)");
    o.require(terms(generate_prefix(7, 12)) == f7, "f_7(1..12)");
    o.require(terms(generate_prefix(36, 38)) == f36, "f_36(1..38)");
  });

  criterion("AC2", "reconstruct_f3 equals simulation for n <= 10^6", 10.0, [](Outcome& o) {
    const std::uint64_t N = 1'000'000;
    const RecordSet recs = record_stream_upto(N + 53);
    const SequenceBuffer f = generate_prefix(3, N);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= N; ++n) bad += reconstruct_f3(n, recs) != f.at(n);
    o.require(bad == 0, std::to_string(bad) + " mismatches");
  });

  criterion("AC3", "records in [7,211] and composite records below 100", 0, [&](Outcome& o) {
    const std::vector<std::uint64_t> table{
        7,   11,  13,  17,  19,  23,  25,  29,  31,  37,  41,  43,  47,  49,  53,  55,
        59,  61,  67,  71,  73,  77,  79,  83,  85,  89,  91,  97,  101, 103, 107, 109,
        113, 115, 119, 121, 127, 131, 133, 137, 139, 143, 145, 149, 151, 157, 161, 163,
        167, 169, 173, 175, 179, 181, 187, 191, 193, 197, 199, 203, 205, 209, 211};
    std::vector<std::uint64_t> got;
    for (const Record& r : record_stream_upto(211).range(7, 211)) got.push_back(r.value);
    o.require(table.size() == 63 && got == table, "table has " + std::to_string(got.size()) + " entries");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> composite;
    for (const Record& r : records.range(0, 99)) {
      if (r.is_composite) composite.emplace_back(r.value, r.jump);
    }
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{{25, 1}, {49, 1}, {55, 1},
                                                                        {77, 3}, {85, 1}, {91, 1}};
    o.require(composite == expected, "composite records/jumps");

    // the same list from a naive prefix
    const auto f = oracle::naive_prefix(3, 400);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t r : oracle::naive_records(f)) {
      if (r >= 7 && r <= 211) naive.push_back(r);
    }
    o.require(naive == table, "naive records differ");
  });

  criterion("AC4", "every prime in [5, 10^6] is a record", 0, [&](Outcome& o) {
    std::uint64_t missing = 0, primes = 0;
    for (std::uint64_t q = 5; q <= 1'000'000; q += 2) {
      if (!oracle::trial_prime(q)) continue;
      ++primes;
      missing += !records.contains(q);
    }
    o.require(missing == 0, std::to_string(missing) + " of " + std::to_string(primes) + " primes missing");
    o.require(primes == 78'496, "prime count " + std::to_string(primes));
  });

  criterion("AC5", "s_n, w_n and the w recurrence", 0, [&](Outcome& o) {
    const std::vector<std::pair<std::size_t, std::uint64_t>> s{{1, 0}, {2, 1}, {3, 1}, {9, 2}, {10, 1}, {16, 2}};
    for (auto [n, v] : s) o.require(s_count(n, records) == v, "s_" + std::to_string(n));
    o.require(w_count(2, records) == 2, "w_2");
    o.require(w_count(3, records) == 9, "w_3");
    o.require(w_count(4, records) == 62, "w_4");
    const DensityLedger ledger = build_density_ledger(5, records);
    for (std::size_t n = 1; n <= 4; ++n) o.require(ledger.recurrence_holds(n), "recurrence at n=" + std::to_string(n));
  });

  criterion("AC6", "record density and its bounds", 0, [&](Outcome& o) {
    const double kappa = kappa_empirical(1'000'000, records);
    const Interval published{0.26067, 0.296};
    o.require(published.contains(kappa), "kappa_emp " + std::to_string(kappa) + " outside [0.26067, 0.296]");
    o.require(std::abs(kappa - 0.294) <= 0.005, "kappa_emp far from 0.294");

    // naive count of records <= 10^6 from the definition of a turning point
    const auto f = oracle::naive_prefix(3, 1'000'100);
    std::uint64_t naive = 0;
    for (std::uint64_t r : oracle::naive_records(f)) naive += r <= 1'000'000;
    o.require(naive == records.count_in(0, 1'000'000), "naive record count differs");

    const Interval coarse = coarse_kappa_bounds(kPublishedPrimorialSeriesEnclosure);
    o.require(std::abs(coarse.upper - 0.296) < 5e-5, "upper bound " + std::to_string(coarse.upper));
    o.require(std::abs(coarse.lower - 0.26067) < 5e-5, "lower bound " + std::to_string(coarse.lower));
    const SeriesValue series = reciprocal_primorial_sum(20);
    o.require(kPublishedPrimorialSeriesEnclosure.contains(series.partial), "series outside [0.704, 0.706]");
  });

  criterion("AC7", "translation by 30 on [7,181] and by 210 on [9,2101]", 5.0, [](Outcome& o) {
    const auto r3 = verify_translation(3, 7, 181);
    const auto r4 = verify_translation(4, 9, 2101);
    o.require(r3.passed(), std::to_string(r3.failures.size()) + " failures for n=3");
    o.require(r4.passed(), std::to_string(r4.failures.size()) + " failures for n=4");
  });

  criterion("AC8", "r p_n# +- 1 are records for n = 2, 3, 4", 0, [&](Outcome& o) {
    for (std::size_t n : {2u, 3u, 4u}) {
      const auto rep = verify_primorial_records(n, records);
      o.require(rep.passed(), "n=" + std::to_string(n) + " missing " + std::to_string(rep.missing.size()));
      // r ranges over 1..p_{n+1}-1
      o.require(rep.r_max == first_primes(n + 1)[n] - 1, "r range for n=" + std::to_string(n));
    }
  });

  criterion("AC9", "classification of seeds", 60.0, [](Outcome& o) {
    const auto rows = scan_identity_set(5000);
    std::size_t disagree = 0;
    for (const ScanRow& row : rows) disagree += !row.agree();
    o.require(rows.size() == 2 + 5000 / 6, "scan size");
    o.require(disagree == 0, std::to_string(disagree) + " seeds disagree");

    const RecordSet recs = record_stream_upto(1'000'000);
    const auto l36 = classify(36, default_budget(36), recs);
    o.require(l36.verdict == Verdict::Identity && l36.witness == 38, "M_36");
    o.require(classify(216, default_budget(216), recs).verdict == Verdict::C3, "a=216");

    std::size_t odd_bad = 0;
    for (std::uint64_t a = 3; a <= 999; a += 2) {
      const auto l = classify_auto(a, recs, 1'000'000);
      bool ok = l.verdict == Verdict::C3;
      for (const TurningPoint& tp : find_turning_points(generate_prefix(a, l.simulated_terms))) {
        if (tp.is_etp && tp.t % 2 != 0) ok = false;
      }
      odd_bad += !ok;
    }
    o.require(odd_bad == 0, std::to_string(odd_bad) + " odd seeds fail");
  });

  criterion("AC10", "g(q) >= 2n+1 at the first prime q = k p_n# + 1 > 5", 0, [](Outcome& o) {
    const auto f = oracle::naive_prefix(3, 1000);
    for (std::size_t n : {2u, 3u, 4u}) {
      std::uint64_t shift = 1;
      for (std::uint64_t p : first_primes(n)) shift *= p;
      std::uint64_t q = 0;
      for (std::uint64_t k = 1; q == 0; ++k) {
        if (k * shift + 1 > 5 && oracle::trial_prime(k * shift + 1)) q = k * shift + 1;
      }
      const auto g = static_cast<std::int64_t>(f[q + 1]) - static_cast<std::int64_t>(f[q]);
      o.require(g >= static_cast<std::int64_t>(2 * n + 1), "n=" + std::to_string(n) + " g=" + std::to_string(g));

      const auto rep = derivative_bound_check(n, 20);
      o.require(rep.passed() && rep.tested() > 0, "library check for n=" + std::to_string(n));
    }
  });

  criterion("AC11", "property suite", 0, [](Outcome& o) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> seed(2, 3000);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t a = seed(rng);
      const std::size_t n = 3000;
      const SequenceBuffer f = generate_prefix(a, n);
      std::vector<bool> used(4 * n + a, false);
      bool injective = true, minimal = true;
      std::uint64_t lowest_free = 2;
      for (std::size_t i = 1; i <= n; ++i) {
        const std::uint64_t v = f.at(i);
        if (used[v]) injective = false;
        if (i >= 3) {
          if (std::gcd(v, f.at(i - 1)) != 1) minimal = false;
          while (used[lowest_free]) ++lowest_free;
          for (std::uint64_t w = lowest_free; w < v && minimal; ++w) {
            if (!used[w] && std::gcd(w, f.at(i - 1)) == 1) minimal = false;
          }
        }
        used[v] = true;
      }
      o.require(injective, "injectivity, a=" + std::to_string(a));
      o.require(minimal, "minimality, a=" + std::to_string(a));
    }

    const SequenceBuffer f3 = generate_prefix(3, 300'001);
    bool prop1 = true, prop2 = true;
    for (std::uint64_t k = 1; k <= 100'000; ++k) prop1 = prop1 && f3.at(2 * k + 1) == 2 * k;
    for (std::uint64_t k = 2; k <= 100'000; ++k) prop2 = prop2 && f3.at(3 * k + 1) == 3 * k;
    o.require(prop1, "f_3(2k+1) = 2k");
    o.require(prop2, "f_3(3k+1) = 3k");

    for (std::uint64_t a : {3, 7, 36, 216}) {
      SequenceBuffer buf{Params{a}};
      const CycleDecomposition d = decompose(buf, 5000);
      bool round_trip = true;
      std::size_t covered = d.fixed_points;
      for (const Cycle& c : d.cycles) {
        for (std::size_t i = 0; i < c.elements.size(); ++i) {
          round_trip = round_trip && buf.at(c.elements[i]) == c.elements[(i + 1) % c.elements.size()];
          covered += c.elements[i] <= 5000;
        }
      }
      o.require(round_trip && covered == 5000, "cycle round trip, a=" + std::to_string(a));
    }
    const CycleIndexMap map(decompose(3, 30));
    o.require(map.at(23) == 8, "C(23)");
    o.require(map.at(25) == 9, "C(25)");
  });

  criterion("AC12", "repeated exports are byte-identical", 0, [](Outcome& o) {
    const fs::path root = fs::temp_directory_path() / ("gcdperm_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    auto export_all = [&](const fs::path& dir) {
      std::ostringstream out, err;
      int rc = gcdperm::cli::run_cli({"export-figures", "all", "--out-dir", dir.string()}, out, err);
      rc |= gcdperm::cli::run_cli({"generate", "--a", "3", "--n", "10000", "--with-g", "--out", (dir / "f3.csv").string()}, out, err);
      rc |= gcdperm::cli::run_cli({"records", "--limit", "100000", "--out", (dir / "records.csv").string()}, out, err);
      rc |= gcdperm::cli::run_cli({"scan-a", "--bound", "1200", "--out", (dir / "scan.csv").string()}, out, err);
      return rc;
    };
    o.require(export_all(root / "first") == 0, "first export failed");
    o.require(export_all(root / "second") == 0, "second export failed");
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(root / "first")) {
      ++files;
      const fs::path twin = root / "second" / entry.path().filename();
      o.require(fs::exists(twin) && slurp(entry.path()) == slurp(twin), entry.path().filename().string() + " differs");
    }
    o.require(files == 7, std::to_string(files) + " files exported");
    fs::remove_all(root);
  });

  std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
