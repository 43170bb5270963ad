#include "gseq/density.hpp"

#include <stdexcept>

namespace gseq {

LacunaryScheme::LacunaryScheme(std::vector<std::uint64_t> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw std::invalid_argument("lacunary scheme needs breakpoints");
  std::uint64_t prev = 0;
  for (const auto k : breakpoints_) {
    if (k <= prev) throw std::invalid_argument("lacunary breakpoints must be strictly increasing");
    prev = k;
  }
}

LacunaryScheme LacunaryScheme::geometric(std::uint64_t ratio, std::size_t count) {
  if (ratio < 2) throw std::invalid_argument("geometric scheme ratio must be >= 2");
  if (count == 0) throw std::invalid_argument("geometric scheme needs at least one block");
  std::vector<std::uint64_t> ks;
  ks.reserve(count);
  std::uint64_t k = 1;
  for (std::size_t r = 0; r < count; ++r) {
    k *= ratio;
    ks.push_back(k);
  }
  return LacunaryScheme(std::move(ks));
}

std::uint64_t LacunaryScheme::block_end(std::size_t r) const {
  if (r < 1 || r > breakpoints_.size()) throw std::out_of_range("lacunary block index out of range");
  return breakpoints_[r - 1];
}

std::uint64_t LacunaryScheme::block_start(std::size_t r) const {
  if (r < 1 || r > breakpoints_.size()) throw std::out_of_range("lacunary block index out of range");
  return r == 1 ? 0 : breakpoints_[r - 2];
}

std::uint64_t LacunaryScheme::block_length(std::size_t r) const {
  return block_end(r) - block_start(r);
}

namespace {

bool outside_neighborhood(const GroupElement& term, const GroupElement& center,
                          const std::optional<Rational>& radius) {
  const GroupElement diff = term - center;
  if (term.model().is_cyclic()) {
    if (radius.has_value())
      throw std::invalid_argument("cyclic groups use the discrete neighborhood {0}; omit the radius");
    return !diff.is_zero();
  }
  if (!radius.has_value()) throw std::invalid_argument("a positive radius is required on the rational line");
  if (!(*radius > Rational(0))) throw std::invalid_argument("neighborhood radius must be positive");
  return diff.rational().abs() >= *radius;  // open ball
}

}  // namespace

Rational statistical_density(std::span<const GroupElement> prefix, const GroupElement& center,
                             const std::optional<Rational>& radius) {
  if (prefix.empty()) throw std::invalid_argument("density of an empty prefix");
  long long exceptions = 0;
  for (const auto& term : prefix) {
    if (outside_neighborhood(term, center, radius)) ++exceptions;
  }
  return Rational(exceptions) / Rational(static_cast<long long>(prefix.size()));
}

Rational lacunary_density(std::span<const GroupElement> prefix, const LacunaryScheme& scheme,
                          std::size_t r, const GroupElement& center,
                          const std::optional<Rational>& radius) {
  const std::uint64_t lo = scheme.block_start(r);  // exclusive, 1-based indexing
  const std::uint64_t hi = scheme.block_end(r);    // inclusive
  if (hi > prefix.size())
    throw std::out_of_range("prefix too short: block " + std::to_string(r) + " ends at " +
                            std::to_string(hi));
  long long exceptions = 0;
  for (std::uint64_t k = lo + 1; k <= hi; ++k) {
    if (outside_neighborhood(prefix[k - 1], center, radius)) ++exceptions;
  }
  return Rational(exceptions) / Rational(static_cast<long long>(hi - lo));
}

}  // namespace gseq
