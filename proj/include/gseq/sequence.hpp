#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gseq/group.hpp"

namespace gseq {

// An eventually periodic sequence over a group model: a finite preamble
// followed by a cycle repeated forever. This is the computable fragment of
// the X-valued sequence group; pointwise sums, inverses and tail limits all
// stay inside it.
//
// Instances are always held in canonical form:
//   * the cycle is primitive (not a repetition of a shorter word),
//   * the preamble is maximally absorbed into the cycle (the cycle rotates
//     as terms move across the boundary, so term values never change).
// Canonical form makes structural equality coincide with pointwise equality,
// which in turn makes sequences usable as ordered-map keys.
class EvPerSeq {
 public:
  EvPerSeq(GroupModel model, std::vector<GroupElement> preamble, std::vector<GroupElement> cycle);

  static EvPerSeq constant(const GroupElement& value);

  const GroupModel& model() const { return model_; }
  const std::vector<GroupElement>& preamble() const { return preamble_; }
  const std::vector<GroupElement>& cycle() const { return cycle_; }
  std::size_t period() const { return cycle_.size(); }

  GroupElement term(std::size_t n) const;

  // The sequence shifted left by one (first term dropped).
  EvPerSeq dropped_first() const;

  // Pointwise image under f; the result is re-canonicalized.
  EvPerSeq map(const std::function<GroupElement(const GroupElement&)>& f) const;

  friend EvPerSeq operator+(const EvPerSeq& a, const EvPerSeq& b);
  EvPerSeq operator-() const;

  friend bool operator==(const EvPerSeq& a, const EvPerSeq& b);
  friend bool operator!=(const EvPerSeq& a, const EvPerSeq& b) { return !(a == b); }
  friend bool operator<(const EvPerSeq& a, const EvPerSeq& b);

  // Textual form "pre:[a,b];cyc:[c,d]".
  std::string str() const;
  static EvPerSeq parse(std::string_view text, const GroupModel& model);

 private:
  void canonicalize();

  GroupModel model_;
  std::vector<GroupElement> preamble_;
  std::vector<GroupElement> cycle_;
};

}  // namespace gseq
