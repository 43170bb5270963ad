#pragma once

// Test-only oracles: blunt enumerations kept deliberately independent of the
// window-graph machinery they cross-check.

#include <cstdint>
#include <optional>
#include <vector>

#include "gseq/method.hpp"
#include "gseq/topology.hpp"
#include "gseq/verifier.hpp"

namespace testing_oracles {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

// Advance a mixed-radix counter; false once it wraps to all zeros.
inline bool next_tuple(std::vector<std::size_t>& digits, std::size_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

// Every value of the method on purely periodic sequences valued in `set`
// with period up to `max_period`.
inline gseq::PointSet brute_closure(const gseq::MethodDescriptor& method, const gseq::PointSet& set,
                                    std::size_t max_period) {
  std::vector<gseq::GroupElement> values;
  const auto& elems = set.elements();
  for (std::size_t period = 1; period <= max_period && !elems.empty(); ++period) {
    std::vector<std::size_t> digits(period, 0);
    do {
      std::vector<gseq::GroupElement> cyc;
      cyc.reserve(period);
      for (const auto d : digits) cyc.push_back(elems[d]);
      const auto value = gseq::evaluate(method, gseq::EvPerSeq(set.model(), {}, std::move(cyc)));
      if (value) values.push_back(*value);
    } while (next_tuple(digits, elems.size()));
  }
  return gseq::PointSet(set.model(), std::move(values));
}

struct BruteContinuity {
  bool continuous = true;
  std::optional<gseq::EvPerSeq> witness;
};

// Literal bounded search over eventually periodic sequences on the full
// universe: preambles up to max_preamble, periods up to max_period.
inline BruteContinuity brute_continuity(const gseq::MethodDescriptor& method,
                                        const gseq::TabulatedFunction& f, std::size_t max_period,
                                        std::size_t max_preamble) {
  const auto points = f.model().universe();
  auto apply = [&](const gseq::GroupElement& e) { return f.apply(e); };
  for (std::size_t pre_len = 0; pre_len <= max_preamble; ++pre_len) {
    std::vector<std::size_t> pre_digits(pre_len, 0);
    do {
      for (std::size_t period = 1; period <= max_period; ++period) {
        std::vector<std::size_t> cyc_digits(period, 0);
        do {
          std::vector<gseq::GroupElement> pre;
          for (const auto d : pre_digits) pre.push_back(points[d]);
          std::vector<gseq::GroupElement> cyc;
          for (const auto d : cyc_digits) cyc.push_back(points[d]);
          const gseq::EvPerSeq x(f.model(), std::move(pre), std::move(cyc));
          const auto u = gseq::evaluate(method, x);
          if (!u) continue;
          const auto v = gseq::evaluate(method, x.map(apply));
          if (!v || *v != f.apply(*u)) return {false, x};
        } while (next_tuple(cyc_digits, points.size()));
      }
    } while (next_tuple(pre_digits, points.size()));
  }
  return {};
}

inline gseq::Rational rat(long long num, long long den = 1) {
  return gseq::Rational(gseq::BigInt(num), gseq::BigInt(den));
}

inline gseq::PointSet q_set(const std::vector<gseq::Rational>& values) {
  const auto q = gseq::GroupModel::rational_line();
  std::vector<gseq::GroupElement> elems;
  for (const auto& v : values) elems.push_back(q.from_rational(v));
  return gseq::PointSet(q, std::move(elems));
}

inline gseq::PointSet z_set(const gseq::GroupModel& model, const std::vector<long long>& residues) {
  std::vector<gseq::GroupElement> elems;
  for (const auto r : residues) elems.push_back(model.from_integer(gseq::BigInt(r)));
  return gseq::PointSet(model, std::move(elems));
}

}  // namespace testing_oracles
