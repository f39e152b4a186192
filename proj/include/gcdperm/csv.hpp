#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcdperm/cycles.hpp"
#include "gcdperm/primorial.hpp"
#include "gcdperm/sequence.hpp"

namespace gcdperm {

// Shortest decimal string that parses back to exactly x.
std::string format_shortest(double x);

// n,f_n[,g_n] rows for n = 1..count; g needs count+1 terms.
void write_sequence_csv(std::ostream& out, const SequenceBuffer& buffer, std::size_t count,
                        bool with_derivative);
// "n f(n)" lines, OEIS b-file layout.
void write_sequence_plain(std::ostream& out, const SequenceBuffer& buffer, std::size_t count);

void write_twin_gaps_csv(std::ostream& out, const std::vector<TwinCycleGap>& rows);
// t,g_t for t = 1..count
void write_derivative_csv(std::ostream& out, const SequenceBuffer& buffer, std::size_t count);
void write_prime_ratio_csv(std::ostream& out, const std::vector<PrimeRatioPoint>& points);
void write_prime_count_csv(std::ostream& out, const std::vector<PrimeRatioPoint>& points);

}  // namespace gcdperm
