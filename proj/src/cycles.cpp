#include "gcdperm/cycles.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "gcdperm/arith.hpp"
#include "gcdperm/errors.hpp"

namespace gcdperm {

std::uint64_t Cycle::min_element() const {
  return *std::min_element(elements.begin(), elements.end());
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) os << ',';
    os << elements[i];
  }
  os << ')';
  return os.str();
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const Cycle& c : cycles) out += c.to_string();
  return out;
}

CycleDecomposition decompose(std::uint64_t a, std::uint64_t bound, std::size_t max_terms) {
  SequenceBuffer buffer{Params{a}};
  return decompose(buffer, bound, max_terms);
}

CycleDecomposition decompose(SequenceBuffer& buffer, std::uint64_t bound, std::size_t max_terms) {
  CycleDecomposition out;
  out.a = buffer.a();
  out.bound = bound;
  std::vector<bool> visited(bound + 1, false);
  auto mark = [&visited](std::uint64_t v) {
    if (v >= visited.size()) visited.resize(std::max<std::size_t>(v + 1, visited.size() * 2), false);
    visited[v] = true;
  };
  auto image = [&](std::uint64_t v) {
    if (v > buffer.size()) {
      if (v > max_terms) {
        throw IncompleteCycleError("decompose: cycle through " + std::to_string(v) +
                                   " needs more than " + std::to_string(max_terms) + " terms");
      }
      buffer.extend_to(v);
    }
    return buffer.at(v);
  };

  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (visited[x]) continue;
    std::vector<std::uint64_t> elements{x};
    mark(x);
    for (std::uint64_t y = image(x); y != x; y = image(y)) {
      elements.push_back(y);
      mark(y);
    }
    if (elements.size() == 1) {
      ++out.fixed_points;
      continue;
    }
    auto top = std::max_element(elements.begin(), elements.end());
    std::rotate(elements.begin(), top, elements.end());
    Cycle cycle{std::move(elements), out.cycles.size() + 1};
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

CycleIndexMap::CycleIndexMap(const CycleDecomposition& decomposition) {
  std::uint64_t top = 0;
  for (const Cycle& c : decomposition.cycles) {
    top = std::max(top, *std::max_element(c.elements.begin(), c.elements.end()));
  }
  index_.assign(top + 1, 0);
  for (const Cycle& c : decomposition.cycles) {
    for (std::uint64_t v : c.elements) index_[v] = static_cast<std::uint32_t>(c.index);
  }
}

bool CycleIndexMap::contains(std::uint64_t v) const { return v < index_.size() && index_[v] != 0; }

std::uint64_t CycleIndexMap::at(std::uint64_t v) const {
  if (!contains(v)) throw UnknownValueError("no decomposed nontrivial cycle contains " + std::to_string(v));
  return index_[v];
}

std::uint64_t cycle_index(const CycleIndexMap& map, std::uint64_t v) { return map.at(v); }

std::vector<TwinCycleGap> twin_cycle_gaps(std::uint64_t limit) {
  std::vector<TwinCycleGap> out;
  const auto pairs = twin_primes(limit);
  if (pairs.size() < 2) return out;
  CycleIndexMap map(decompose(3, limit));
  auto C = [&map](std::uint64_t v) { return static_cast<std::int64_t>(map.at(v)); };
  for (std::size_t j = 0; j + 1 < pairs.size(); ++j) {
    const auto& [m, M] = pairs[j];
    const auto& [m_next, M_next] = pairs[j + 1];
    out.push_back({j + 1, m, M, C(m_next) - C(M), C(M_next) - C(m)});
  }
  return out;
}

}  // namespace gcdperm
