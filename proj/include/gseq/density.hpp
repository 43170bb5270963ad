#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gseq/group.hpp"

namespace gseq {

// Block structure for lacunary density: strictly increasing breakpoints
// k_1 < k_2 < ... with k_0 = 0 implied; block r is the index interval
// (k_{r-1}, k_r] of length h_r = k_r - k_{r-1}.
class LacunaryScheme {
 public:
  explicit LacunaryScheme(std::vector<std::uint64_t> breakpoints);
  static LacunaryScheme geometric(std::uint64_t ratio, std::size_t count);

  const std::vector<std::uint64_t>& breakpoints() const { return breakpoints_; }
  std::size_t block_count() const { return breakpoints_.size(); }
  std::uint64_t block_end(std::size_t r) const;    // k_r, 1-based r
  std::uint64_t block_start(std::size_t r) const;  // k_{r-1}
  std::uint64_t block_length(std::size_t r) const; // h_r

 private:
  std::vector<std::uint64_t> breakpoints_;
};

// Proportion of indices k in 1..n whose term leaves the neighborhood of
// `center`: (1/n) * |{k <= n : x_k - center not in U}|, exact. U is the open
// ball of the given radius on the rational line, or {0} on a cyclic group
// (radius omitted).
Rational statistical_density(std::span<const GroupElement> prefix, const GroupElement& center,
                             const std::optional<Rational>& radius);

// Same count restricted to block r of the scheme, scaled by 1/h_r.
Rational lacunary_density(std::span<const GroupElement> prefix, const LacunaryScheme& scheme,
                          std::size_t r, const GroupElement& center,
                          const std::optional<Rational>& radius);

}  // namespace gseq
