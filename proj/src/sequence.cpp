#include "gcdperm/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gcdperm/errors.hpp"

namespace gcdperm {

Params::Params(std::uint64_t a) : a_(a) {
  if (a < 2) throw std::invalid_argument("seed a must be >= 2, got " + std::to_string(a));
}

SequenceBuffer::SequenceBuffer(Params params) : a_(params.a()) {
  terms_.reserve(64);
  terms_.push_back(1);
  assign(1);
  terms_.push_back(a_);
  if (a_ == frontier_) {
    assign(a_);
  } else {
    ahead_.emplace_back(a_, 2);
  }
}

std::uint64_t SequenceBuffer::at(std::size_t n) const {
  if (n < 1 || n > terms_.size()) {
    throw std::out_of_range("index " + std::to_string(n) + " outside prefix of length " +
                            std::to_string(terms_.size()));
  }
  return terms_[n - 1];
}

bool SequenceBuffer::is_ahead(std::uint64_t v) const {
  return std::any_of(ahead_.begin(), ahead_.end(), [v](const auto& e) { return e.first == v; });
}

void SequenceBuffer::assign(std::uint64_t v) {
  const std::uint64_t index = terms_.size();
  if (v < frontier_) {
    auto it = std::lower_bound(pool_.begin(), pool_.end(), v);
    if (it == pool_.end() || *it != v) throw std::logic_error("assign: value already used");
    pool_.erase(it);
    position_[v] = index;
    return;
  }
  position_.resize(v + 1, 0);
  auto ahead_it = ahead_.begin();
  for (std::uint64_t x = frontier_; x < v; ++x) {
    if (ahead_it != ahead_.end() && ahead_it->first == x) {
      position_[x] = ahead_it->second;
      ++ahead_it;
    } else {
      pool_.push_back(x);
    }
  }
  ahead_.erase(ahead_.begin(), ahead_it);
  position_[v] = index;
  frontier_ = v + 1;
  max_pool_size_ = std::max(max_pool_size_, pool_.size());
}

std::uint64_t SequenceBuffer::extend() {
  const std::uint64_t last = terms_.back();
  std::uint64_t next = 0;
  for (std::uint64_t v : pool_) {
    if (std::gcd(v, last) == 1) {
      next = v;
      break;
    }
  }
  if (next == 0) {
    next = frontier_;
    while (is_ahead(next) || std::gcd(next, last) != 1) ++next;
  }
  terms_.push_back(next);
  assign(next);
  return next;
}

void SequenceBuffer::extend_to(std::size_t n) {
  if (n > terms_.size()) terms_.reserve(n);
  while (terms_.size() < n) extend();
}

std::optional<std::size_t> SequenceBuffer::inverse(std::uint64_t v) const {
  if (v < frontier_) {
    if (v == 0 || position_[v] == 0) return std::nullopt;
    return position_[v];
  }
  for (const auto& [value, index] : ahead_) {
    if (value == v) return index;
  }
  return std::nullopt;
}

std::int64_t SequenceBuffer::discrete_derivative(std::size_t t) const {
  if (t < 1 || t + 1 > terms_.size()) {
    throw std::out_of_range("discrete_derivative: t=" + std::to_string(t) +
                            " needs f(t+1) within prefix of length " +
                            std::to_string(terms_.size()));
  }
  return static_cast<std::int64_t>(terms_[t]) - static_cast<std::int64_t>(terms_[t - 1]);
}

namespace {

std::uint64_t smallest_unassigned(std::span<const std::uint64_t> pool, std::uint64_t frontier,
                                  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ahead) {
  std::uint64_t above = frontier;
  for (const auto& entry : ahead) {
    if (entry.first == above) ++above;
  }
  if (!pool.empty()) return std::min(pool.front(), above);
  return above;
}

}  // namespace

bool SequenceBuffer::prefix_surjective_upto(std::uint64_t n) const {
  return n < smallest_unassigned(pool_, frontier_, ahead_);
}

bool SequenceBuffer::prefix_complete() const {
  return smallest_unassigned(pool_, frontier_, ahead_) == terms_.size() + 1;
}

SequenceBuffer generate_prefix(std::uint64_t a, std::size_t n, std::size_t max_terms) {
  if (n < 2) throw std::invalid_argument("generate_prefix: n must be >= 2");
  if (n > max_terms) {
    throw ResourceLimitError("generate_prefix: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(max_terms));
  }
  SequenceBuffer buffer{Params{a}};
  buffer.extend_to(n);
  return buffer;
}

}  // namespace gcdperm
