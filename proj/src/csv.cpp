#include "gcdperm/csv.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace gcdperm {

std::string format_shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_shortest: conversion failed");
  return std::string(buf, ptr);
}

void write_sequence_csv(std::ostream& out, const SequenceBuffer& buffer, std::size_t count,
                        bool with_derivative) {
  out << (with_derivative ? "n,f_n,g_n\n" : "n,f_n\n");
  for (std::size_t n = 1; n <= count; ++n) {
    out << n << ',' << buffer.at(n);
    if (with_derivative) out << ',' << buffer.discrete_derivative(n);
    out << '\n';
  }
}

void write_sequence_plain(std::ostream& out, const SequenceBuffer& buffer, std::size_t count) {
  for (std::size_t n = 1; n <= count; ++n) out << n << ' ' << buffer.at(n) << '\n';
}

void write_twin_gaps_csv(std::ostream& out, const std::vector<TwinCycleGap>& rows) {
  out << "j,m_j,M_j,gap_formula_A,gap_formula_B\n";
  for (const auto& r : rows) {
    out << r.j << ',' << r.m << ',' << r.M << ',' << r.gap_a << ',' << r.gap_b << '\n';
  }
}

void write_derivative_csv(std::ostream& out, const SequenceBuffer& buffer, std::size_t count) {
  out << "t,g_t\n";
  for (std::size_t t = 1; t <= count; ++t) out << t << ',' << buffer.discrete_derivative(t) << '\n';
}

void write_prime_ratio_csv(std::ostream& out, const std::vector<PrimeRatioPoint>& points) {
  out << "n,ratio_ln\n";
  for (const auto& p : points) out << p.n << ',' << format_shortest(p.ratio_ln) << '\n';
}

void write_prime_count_csv(std::ostream& out, const std::vector<PrimeRatioPoint>& points) {
  out << "n,primes_among_records\n";
  for (const auto& p : points) out << p.n << ',' << p.prime_records << '\n';
}

}  // namespace gcdperm
