#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gcdperm/arith.hpp"
#include "gcdperm/classification.hpp"
#include "gcdperm/errors.hpp"
#include "gcdperm/primorial.hpp"
#include "gcdperm/records.hpp"
#include "gcdperm/sequence.hpp"

namespace gcdperm::cli {

namespace {

using Lines = std::vector<CheckLine>;

std::uint64_t or_default(std::uint64_t v, std::uint64_t fallback) { return v ? v : fallback; }

void require_cap(std::uint64_t need, const SuiteParams& p, const char* what) {
  if (need > p.max_terms) {
    throw ResourceLimitError(std::string(what) + " needs " + std::to_string(need) +
                             " terms, cap is " + std::to_string(p.max_terms));
  }
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

std::string list_head(const std::vector<std::uint64_t>& v, std::size_t k = 5) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size() && i < k; ++i) s << (i ? " " : "") << v[i];
  if (v.size() > k) s << " ...";
  return s.str();
}

// n values to visit: the given one, or a default span.
std::vector<std::size_t> n_values(const SuiteParams& p, std::size_t lo, std::size_t hi) {
  if (p.n) return {static_cast<std::size_t>(p.n)};
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> etps_of(const SequenceBuffer& buf) {
  std::vector<std::uint64_t> out;
  for (const TurningPoint& tp : find_turning_points(buf)) {
    if (tp.is_etp) out.push_back(tp.t);
  }
  return out;
}

// ---------------------------------------------------------------------------

Lines suite_thm1(const SuiteParams& p) {
  const std::uint64_t length = or_default(p.limit, 100'000);
  require_cap(length, p, "thm1");
  std::vector<std::uint64_t> seeds{3, 5, 7, 12, 25, 36, 216};
  if (p.a) seeds = {p.a};

  Lines out;
  for (std::uint64_t a : seeds) {
    const SequenceBuffer buf = generate_prefix(a, length, p.max_terms);
    const auto tps = find_turning_points(buf);
    std::vector<std::uint64_t> bad;
    std::size_t etps = 0;
    for (std::size_t i = 0; i < tps.size(); ++i) {
      if (!tps[i].is_etp) continue;
      ++etps;
      const std::uint64_t T = next_etp(tps[i].t, tps[i].record_value);
      if (T > buf.size()) break;
      // the next turning point must be T, and T must be essential
      const bool ok = i + 1 < tps.size() && tps[i + 1].t == T && tps[i + 1].is_etp;
      if (!ok) bad.push_back(tps[i].t);
    }
    out.push_back({cat("a=", a, " ETP t -> f(t)+1, no turning point between"), bad.empty(),
                   cat(etps, " ETPs in ", length, " terms", bad.empty() ? "" : "; fails at t=" + list_head(bad))});
  }
  return out;
}

Lines suite_cor1(const SuiteParams& p) {
  const std::uint64_t limit = or_default(p.limit, 1'000'000);
  const RecordSet records = record_stream_upto(std::max<std::uint64_t>(limit, 5));
  PrimeSieve sieve(limit);
  std::vector<std::uint64_t> missing;
  std::size_t primes = 0;
  for (std::uint64_t q : sieve.primes_in(5, limit)) {
    ++primes;
    if (!records.contains(q)) missing.push_back(q);
  }
  Lines out;
  out.push_back({cat("every prime in [5,", limit, "] is a record"), missing.empty(),
                 cat(primes, " primes, ", missing.size(), " missing ", list_head(missing))});

  // the record recurrence against a direct simulation
  const std::uint64_t sim = std::min<std::uint64_t>(limit, 200'000);
  require_cap(sim, p, "cor1");
  const SequenceBuffer buf = generate_prefix(3, sim, p.max_terms);
  std::vector<std::uint64_t> simulated;
  for (const TurningPoint& tp : find_turning_points(buf)) {
    // a record is certain once its block has closed inside the prefix
    if (tp.record_value < sim) simulated.push_back(tp.record_value);
  }
  std::vector<std::uint64_t> streamed;
  for (const Record& r : records.range(0, sim - 1)) streamed.push_back(r.value);
  out.push_back({cat("record recurrence matches simulation below ", sim), simulated == streamed,
                 cat(simulated.size(), " simulated, ", streamed.size(), " from recurrence")});

  std::vector<std::uint64_t> odd_etp;
  for (std::uint64_t t : etps_of(buf)) {
    if (t % 2 != 0) odd_etp.push_back(t);
  }
  out.push_back({"every ETP of f_3 is even", odd_etp.empty(), list_head(odd_etp)});
  return out;
}

Lines identity_suite(const SuiteParams& p, std::uint64_t step, std::uint64_t first, const char* label) {
  const std::uint64_t limit = or_default(p.limit, 100'000);
  const std::uint64_t length = step * limit + 1;
  require_cap(length, p, label);
  const SequenceBuffer buf = generate_prefix(3, length, p.max_terms);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t k = first; k <= limit; ++k) {
    if (buf.at(step * k + 1) != step * k) bad.push_back(k);
  }
  return {{cat("f_3(", step, "k+1) = ", step, "k for ", first, " <= k <= ", limit), bad.empty(),
           bad.empty() ? "" : cat("fails at k=", list_head(bad))}};
}

Lines suite_prop3(const SuiteParams& p) {
  const std::uint64_t k_max = or_default(p.limit, 50);
  Lines out;
  for (std::size_t n : n_values(p, 1, 4)) {
    const std::uint64_t shift = PrimorialTable(n).primorial_u64(n);
    require_cap(k_max * shift + 64, p, "prop3");
    const DerivativeBoundReport rep = derivative_bound_check(n, k_max);
    std::vector<std::uint64_t> bad;
    for (const auto& row : rep.rows) {
      if (!row.ok) bad.push_back(row.q);
    }
    out.push_back({cat("n=", n, " g(k p_n#+1) >= ", rep.bound, " at primes, k <= ", k_max),
                   rep.passed() && rep.tested() > 0,
                   cat(rep.tested(), " primes tested", bad.empty() ? "" : "; fails at q=" + list_head(bad))});
  }
  return out;
}

// Classifies a and collects odd ETPs seen before the certificate.
struct ClassifiedSeed {
  std::optional<ClassLabel> label;
  std::vector<std::uint64_t> odd_etps;
};

ClassifiedSeed classify_with_etps(std::uint64_t a, const RecordSet& records, std::size_t cap) {
  ClassifiedSeed out;
  try {
    out.label = classify_auto(a, records, cap);
  } catch (const BudgetExhaustedError&) {
    return out;
  }
  const SequenceBuffer buf = generate_prefix(a, std::max<std::size_t>(out.label->simulated_terms, 2));
  for (std::uint64_t t : etps_of(buf)) {
    if (t % 2 != 0) out.odd_etps.push_back(t);
  }
  return out;
}

Lines suite_thm2(const SuiteParams& p) {
  const std::uint64_t bound = or_default(p.bound, 999);
  const std::size_t cap = std::min<std::size_t>(p.max_terms, std::max<std::uint64_t>(64 * bound, 1'000'000));
  const RecordSet records = record_stream_upto(cap);
  std::vector<std::uint64_t> not_c3, odd;
  std::size_t seeds = 0;
  for (std::uint64_t a = 3; a <= bound; a += 2) {
    ++seeds;
    const ClassifiedSeed s = classify_with_etps(a, records, cap);
    if (!s.label || s.label->verdict != Verdict::C3) not_c3.push_back(a);
    if (!s.odd_etps.empty()) odd.push_back(a);
  }
  return {{cat("odd a in [3,", bound, "] merge with f_3"), not_c3.empty(),
           cat(seeds, " seeds", not_c3.empty() ? "" : "; not C3: " + list_head(not_c3))},
          {"every ETP is even (odd a)", odd.empty(), odd.empty() ? "" : "odd ETP for a=" + list_head(odd)}};
}

Lines suite_thm3(const SuiteParams& p) {
  const std::uint64_t bound = or_default(p.bound, 5000);
  const std::size_t cap = std::min<std::size_t>(p.max_terms, std::max<std::uint64_t>(64 * bound, 1'000'000));
  const RecordSet records = record_stream_upto(cap);
  std::vector<std::uint64_t> undecided, odd;
  std::size_t identity = 0, c3 = 0;
  for (std::uint64_t a = 6; a <= bound; a += 6) {
    const ClassifiedSeed s = classify_with_etps(a, records, cap);
    if (!s.label) {
      undecided.push_back(a);
      continue;
    }
    if (s.label->verdict == Verdict::Identity) {
      ++identity;
    } else {
      ++c3;
      if (!s.odd_etps.empty()) odd.push_back(a);
    }
  }
  return {{cat("6 | a <= ", bound, ": identity or C3"), undecided.empty(),
           cat(identity, " identity, ", c3, " C3", undecided.empty() ? "" : "; undecided " + list_head(undecided))},
          {"every ETP is even in the C3 case", odd.empty(), odd.empty() ? "" : "odd ETP for a=" + list_head(odd)}};
}

Lines scan_suite(const SuiteParams& p, bool with_primorials) {
  const std::uint64_t bound = or_default(p.bound, 5000);
  require_cap(std::max<std::uint64_t>(64 * bound, 1'000'000), p, "scan");
  const auto rows = scan_identity_set(bound, p.threads);
  std::vector<std::uint64_t> undecided, sim_vs_records, records_vs_primorials;
  std::size_t members = 0;
  for (const ScanRow& row : rows) {
    if (!row.label) {
      undecided.push_back(row.a);
      continue;
    }
    const bool sim = row.label->verdict == Verdict::Identity;
    members += sim;
    if (sim != row.by_records) sim_vs_records.push_back(row.a);
    if (row.by_records != row.by_primorials) records_vs_primorials.push_back(row.a);
  }
  Lines out;
  out.push_back({cat("all ", rows.size(), " seeds decided by simulation"), undecided.empty(), list_head(undecided)});
  out.push_back({"simulation agrees with the record description", sim_vs_records.empty(),
                 cat(members, " identity seeds", sim_vs_records.empty() ? "" : "; differ at " + list_head(sim_vs_records))});
  if (with_primorials) {
    out.push_back({"record description agrees with the primorial description",
                   records_vs_primorials.empty(), list_head(records_vs_primorials)});
  }
  return out;
}

Lines suite_thm5(const SuiteParams& p) {
  Lines out;
  for (std::size_t n : n_values(p, 2, 6)) {
    if (n < 2) throw std::invalid_argument("thm5 needs n >= 2");
    const std::uint64_t shift = PrimorialTable(n).primorial_u64(n);
    require_cap(2 * shift + 1, p, "thm5");
    const RecordSet records = record_stream_upto(2 * shift + 1);
    const PrimorialRecordReport rep = verify_primorial_records(n, records, 2, p.max_terms);
    out.push_back({cat("n=", n, " p_n#+-1 and 2p_n#+-1 are records"), rep.passed(),
                   cat("p_n#=", shift, rep.missing.empty() ? "" : "; missing " + list_head(rep.missing))});
  }
  return out;
}

// Maximal translation intervals quoted for n = 3 and n = 4.
std::optional<std::pair<std::uint64_t, std::uint64_t>> quoted_interval(std::size_t n) {
  if (n == 3) return std::pair<std::uint64_t, std::uint64_t>{7, 181};
  if (n == 4) return std::pair<std::uint64_t, std::uint64_t>{9, 2101};
  return std::nullopt;
}

void translation_lines(Lines& out, std::size_t n, std::uint64_t lo, std::uint64_t hi, const SuiteParams& p) {
  const TranslationReport rep = verify_translation(n, lo, hi, p.max_terms);
  out.push_back({cat("n=", n, " f(", rep.shift, "+k) = f(k)+", rep.shift, " on [", rep.lo, ",", rep.hi, "]"),
                 rep.passed(),
                 rep.passed() ? cat("holds on [", rep.holds_lo, ",", rep.holds_hi, rep.hi_saturated ? "+" : "", "]")
                              : cat(rep.failures.size(), " failures at k=", list_head(rep.failures))});
  if (auto q = quoted_interval(n)) {
    const TranslationReport ex = verify_translation(n, q->first, q->second, p.max_terms);
    out.push_back({cat("n=", n, " translation on [", q->first, ",", q->second, "]"), ex.passed(),
                   ex.passed() ? cat("maximal interval [", ex.holds_lo, ",", ex.holds_hi, "]")
                               : cat("fails at k=", list_head(ex.failures))});
  }
}

Lines suite_thm6(const SuiteParams& p) {
  Lines out;
  for (std::size_t n : n_values(p, 2, 5)) {
    PrimorialTable table(n);
    const std::uint64_t shift = table.primorial_u64(n);
    translation_lines(out, n, table.prime(n + 1), 2 * shift, p);
  }
  return out;
}

Lines suite_thm7(const SuiteParams& p) {
  Lines out;
  for (std::size_t n : n_values(p, 2, 5)) {
    if (n < 2) throw std::invalid_argument("thm7 needs n >= 2");
    PrimorialTable table(n);
    const std::uint64_t shift = table.primorial_u64(n);
    const std::uint64_t r_max = table.prime(n + 1) - 1;
    require_cap(r_max * shift + 1, p, "thm7");
    const RecordSet records = record_stream_upto(r_max * shift + 1);
    const PrimorialRecordReport rep = verify_primorial_records(n, records, 0, p.max_terms);
    out.push_back({cat("n=", n, " r p_n# +- 1 are records for r <= ", r_max), rep.passed(),
                   cat(rep.checked, " values", rep.missing.empty() ? "" : "; missing " + list_head(rep.missing))});
    translation_lines(out, n, 0, 0, p);
  }
  return out;
}

Lines suite_thm8(const SuiteParams& p) {
  const std::size_t n_top = or_default(p.n, 5);
  const std::size_t n_max = n_top + 1;
  PrimorialTable table(n_max);
  const std::uint64_t need = table.primorial_u64(n_max) + 1;
  const std::uint64_t N = or_default(p.limit, 1'000'000);
  require_cap(std::max(need, N), p, "thm8-recurrence");
  const RecordSet records = record_stream_upto(std::max(need, N));
  const DensityLedger ledger = build_density_ledger(n_max, records);

  Lines out;
  for (std::size_t n = 1; n < n_max; ++n) {
    const bool ok = ledger.recurrence_holds(n);
    out.push_back({cat("w_", n + 1, " = w_", n, " p_", n + 1, " - s_", n + 1), ok,
                   cat(ledger.w[n], " = ", ledger.w[n - 1], "*", ledger.primes[n], " - ", ledger.s[n])});
  }
  std::ostringstream ratios;
  for (double r : ledger.w_ratio) ratios << std::setprecision(6) << r << ' ';
  out.push_back({"w_n / p_n# non-increasing", ledger.ratio_non_increasing(), ratios.str()});

  const double kappa = kappa_empirical(N, records);
  const Interval coarse = coarse_kappa_bounds(kPublishedPrimorialSeriesEnclosure);
  out.push_back({cat("records <= ", N, " over N in [", coarse.lower, ",", coarse.upper, "]"), coarse.contains(kappa),
                 cat("kappa_emp=", std::setprecision(6), kappa)});
  return out;
}

Lines suite_cor2(const SuiteParams& p) {
  const std::uint64_t X = or_default(p.bound, 1'000'000);
  std::uint64_t not_nice = 0;
  for (std::uint64_t a = 6; a <= X; a += 6) not_nice += !is_nice(a);

  // residue classes in play: those with p_n# <= X
  const auto primes = first_primes(17);
  std::uint64_t primorial = 1;
  std::size_t K = 3;
  for (std::size_t n = 1; n <= 15; ++n) {
    primorial *= primes[n - 1];
    if (primorial > X) break;
    K = n;
  }
  Lines out;
  const double density = K >= 4 ? not_nice_density(K).value : 0.0;
  const std::uint64_t classes = K >= 4 ? (primes[K] - 2) / 6 : 0;
  // each class is off by at most one from X/p_n#, plus its excluded m = 0 term
  const double slack = 2.0 * static_cast<double>(classes);
  const double expected = density * static_cast<double>(X);
  out.push_back({cat("not-nice count up to ", X, " matches the density series"),
                 std::abs(static_cast<double>(not_nice) - expected) <= slack,
                 cat(not_nice, " counted, ", std::setprecision(8), expected, " predicted, slack ", slack)});

  const auto first = not_nice_density(4);
  out.push_back({"leading term is 1/210", first.exact == boost::multiprecision::cpp_rational(1, 210),
                 cat("density(K=20)=", std::setprecision(10), not_nice_density(20).value)});
  return out;
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<Lines(const SuiteParams&)> run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"thm1", "consecutive ETPs satisfy T = f(t)+1 with no turning point between"}, suite_thm1},
      {{"cor1", "every prime >= 5 is a record of f_3"}, suite_cor1},
      {{"prop1", "f_3(2k+1) = 2k"}, [](const SuiteParams& p) { return identity_suite(p, 2, 1, "prop1"); }},
      {{"prop2", "f_3(3k+1) = 3k for k > 1"}, [](const SuiteParams& p) { return identity_suite(p, 3, 2, "prop2"); }},
      {{"prop3", "g(k p_n#+1) >= 2n+1 when k p_n#+1 is prime"}, suite_prop3},
      {{"thm2", "odd seeds fall into the f_3 class with even ETPs"}, suite_thm2},
      {{"thm3", "seeds divisible by 6 are identity or f_3 class"}, suite_thm3},
      {{"thm4", "identity set via records next to a"}, [](const SuiteParams& p) { return scan_suite(p, false); }},
      {{"thm5", "p_n# +- 1 and 2p_n# +- 1 are records"}, suite_thm5},
      {{"thm6", "f(p_n#+k) = f(k)+p_n# on [p_{n+1}, 2p_n#]"}, suite_thm6},
      {{"thm7", "r p_n# +- 1 records and the long translation range"}, suite_thm7},
      {{"thm8-recurrence", "w_{n+1} = w_n p_{n+1} - s_{n+1} and record density"}, suite_thm8},
      {{"thm10", "identity set via nice numbers"}, [](const SuiteParams& p) { return scan_suite(p, true); }},
      {{"cor2", "density of not-nice numbers"}, suite_cor2},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_suite(const std::string& name) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const SuiteEntry& e) { return e.info.name == name; });
}

std::vector<CheckLine> run_suite(const std::string& name, const SuiteParams& params) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e.run(params);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

void print_table(std::ostream& out, const std::string& suite, const std::vector<CheckLine>& lines) {
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.name.size());
  bool all = !lines.empty();
  for (const auto& l : lines) {
    out << (l.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << l.name;
    if (!l.detail.empty()) out << "  " << l.detail;
    out << '\n';
    all = all && l.passed;
  }
  out << suite << ": " << (all ? "PASS" : "FAIL") << '\n';
}

}  // namespace gcdperm::cli
