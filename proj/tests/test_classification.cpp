#include "doctest.h"

#include <sstream>

#include "gcdperm/classification.hpp"
#include "gcdperm/errors.hpp"
#include "gcdperm/sequence.hpp"
#include "oracles.hpp"

using namespace gcdperm;

namespace {

const RecordSet& records() {
  static const RecordSet r = record_stream_upto(2'000'000);
  return r;
}

}  // namespace

TEST_CASE("identity seeds and their M_a") {
  const auto l2 = classify(2, 10'000, records());
  CHECK(l2.verdict == Verdict::Identity);
  CHECK(l2.witness == 1);
  const auto l36 = classify(36, 10'000, records());
  CHECK(l36.verdict == Verdict::Identity);
  CHECK(l36.witness == 38);
  const auto l6 = classify(6, 10'000, records());
  CHECK(l6.verdict == Verdict::Identity);
  CHECK(l6.witness == 7);
  CHECK(classify(4, 10'000, records()).verdict == Verdict::Identity);
}

TEST_CASE("f_216 merges with f_3") {
  const auto l = classify(216, 10'000, records());
  CHECK(l.verdict == Verdict::C3);
  // the last step of the construction reaches q = 221
  CHECK(l.witness == 222);
}

TEST_CASE("a C3 certificate means pointwise agreement with f_3") {
  const SequenceBuffer f3 = generate_prefix(3, 40'000);
  for (std::uint64_t a : {5, 7, 9, 25, 216, 1000, 2001, 4996}) {
    INFO("a = " << a);
    const auto l = classify(a, 20'000, records());
    REQUIRE(l.verdict == Verdict::C3);
    const SequenceBuffer fa = generate_prefix(a, 40'000);
    for (std::size_t n = l.witness; n <= 40'000; ++n) REQUIRE(fa.at(n) == f3.at(n));
  }
}

TEST_CASE("an identity certificate means f(n) = n from M_a on") {
  for (std::uint64_t a : {6, 12, 18, 24, 36, 60, 4}) {
    const auto l = classify(a, 10'000, records());
    REQUIRE(l.verdict == Verdict::Identity);
    const SequenceBuffer f = generate_prefix(a, 5000);
    for (std::size_t n = l.witness; n <= 5000; ++n) REQUIRE(f.at(n) == n);
    if (l.witness > 1) CHECK(f.at(l.witness - 1) != l.witness - 1);
  }
}

TEST_CASE("budget and coverage errors") {
  CHECK_THROWS_AS(classify(216, 100, records()), BudgetExhaustedError);
  CHECK_THROWS_AS(classify(5, 10'000, record_stream_upto(100)), std::invalid_argument);
  CHECK(default_budget(5) == 10'000);
  CHECK(default_budget(5000) == 50'000);
}

TEST_CASE("odd seeds merge with f_3 with even ETPs") {
  for (std::uint64_t a = 3; a <= 999; a += 2) {
    const auto l = classify_auto(a, records(), 1'000'000);
    REQUIRE(l.verdict == Verdict::C3);
    const SequenceBuffer f = generate_prefix(a, l.simulated_terms);
    for (const TurningPoint& tp : find_turning_points(f)) {
      if (tp.is_etp) REQUIRE(tp.t % 2 == 0);
    }
  }
}

TEST_CASE("the two descriptions of the identity set agree up to 5000") {
  const auto rows = scan_identity_set(5000, 0);
  CHECK(rows.size() == 2 + 5000 / 6);
  std::size_t identity = 0;
  for (const ScanRow& row : rows) {
    INFO("a = " << row.a);
    REQUIRE(row.label.has_value());
    CHECK(row.agree());
    identity += row.label->verdict == Verdict::Identity;
  }
  CHECK(identity > 100);
}

TEST_CASE("not-nice numbers up to 5000") {
  std::vector<std::uint64_t> not_nice;
  for (std::uint64_t a = 6; a <= 5000; a += 6) {
    if (!is_nice(a)) not_nice.push_back(a);
  }
  std::vector<std::uint64_t> expected;
  for (std::uint64_t a = 216; a <= 5000; a += 210) expected.push_back(a);
  CHECK(not_nice == expected);
  CHECK_FALSE(is_nice(7));
  CHECK(in_identity_set_by_primorials(2));
  CHECK(in_identity_set_by_primorials(4));
  CHECK_FALSE(in_identity_set_by_primorials(8));
}

TEST_CASE("is_nice against brute-force enumeration") {
  const std::uint64_t X = 2'000'000;
  std::uint64_t count = 0;
  for (std::uint64_t a = 6; a <= X; a += 6) count += !is_nice(a);
  CHECK(count == oracle::brute_not_nice_count(X));
}

TEST_CASE("not-nice density series") {
  using boost::multiprecision::cpp_rational;
  CHECK(not_nice_density(3).exact == 0);
  CHECK(not_nice_density(4).exact == cpp_rational(1, 210));
  CHECK(not_nice_density(5).exact == cpp_rational(1, 210));
  CHECK(not_nice_density(6).exact == cpp_rational(1, 210) + cpp_rational(1, 30030));

  // finite counts track the series: each residue class m p_n# + 6t (m >= 1)
  // differs from X / p_n# by at most one
  for (std::uint64_t X : {100'000ULL, 1'000'000ULL, 10'000'000ULL}) {
    const double predicted = not_nice_density(30).value * static_cast<double>(X);
    const double counted = static_cast<double>(oracle::brute_not_nice_count(X));
    INFO("X = " << X);
    CHECK(std::abs(counted - predicted) <= 6.0);
  }
}

TEST_CASE("scan csv") {
  std::ostringstream out;
  write_scan_csv(out, scan_identity_set(36, 1));
  const std::string csv = out.str();
  CHECK(csv.rfind("a,simulation_verdict,M_a_or_merge,by_records,by_primorials,agree\n", 0) == 0);
  CHECK(csv.find("\n36,Identity,38,1,1,1\n") != std::string::npos);
  CHECK(csv.find("\n2,Identity,1,1,1,1\n") != std::string::npos);
}
