#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gseq/rational.hpp"

namespace gseq {

enum class GroupKind { RationalLine, CyclicGroup };

class GroupElement;

// The ambient abelian group X, written additively. Two concrete families:
// the rationals with the usual order topology, and Z_n with the discrete
// topology.
class GroupModel {
 public:
  static GroupModel rational_line() { return GroupModel(GroupKind::RationalLine, 0); }
  static GroupModel cyclic(std::uint64_t modulus);

  GroupKind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == GroupKind::CyclicGroup; }
  std::uint64_t modulus() const;

  GroupElement zero() const;
  GroupElement from_rational(const Rational& value) const;  // RationalLine only
  GroupElement from_integer(const BigInt& value) const;     // reduced mod n on CyclicGroup

  // Every point of a cyclic universe, in residue order.
  std::vector<GroupElement> universe() const;

  GroupElement parse_element(std::string_view text) const;

  // "q" for the rational line, "z<n>" for Z_n.
  std::string str() const;
  static GroupModel parse(std::string_view text);

  friend bool operator==(const GroupModel& a, const GroupModel& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const GroupModel& a, const GroupModel& b) { return !(a == b); }

 private:
  GroupModel(GroupKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  GroupKind kind_;
  std::uint64_t modulus_;
};

// A point of X. Immutable value; arithmetic requires matching models.
class GroupElement {
 public:
  const GroupModel& model() const { return model_; }

  const Rational& rational() const;
  std::uint64_t residue() const;
  bool is_zero() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  GroupElement operator-() const;

  // coefficient * point. Over Z_n the coefficient must be an integer.
  GroupElement scaled(const Rational& coefficient) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  // Total order inside one model: numeric on the line, residue on Z_n.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::string str() const;

 private:
  friend class GroupModel;
  GroupElement(GroupModel model, Rational value) : model_(model), rational_(std::move(value)), residue_(0) {}
  GroupElement(GroupModel model, std::uint64_t residue) : model_(model), rational_(0), residue_(residue) {}

  GroupModel model_;
  Rational rational_;       // RationalLine payload
  std::uint64_t residue_;   // CyclicGroup payload, always in [0, n)
};

void require_same_model(const GroupModel& a, const GroupModel& b);

}  // namespace gseq
