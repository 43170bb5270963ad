#include "gseq/group.hpp"

#include <stdexcept>

namespace gseq {

GroupModel GroupModel::cyclic(std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("cyclic group modulus must be >= 2");
  return GroupModel(GroupKind::CyclicGroup, modulus);
}

std::uint64_t GroupModel::modulus() const {
  if (!is_cyclic()) throw std::domain_error("modulus requested from the rational line model");
  return modulus_;
}

GroupElement GroupModel::zero() const {
  if (is_cyclic()) return GroupElement(*this, std::uint64_t{0});
  return GroupElement(*this, Rational(0));
}

GroupElement GroupModel::from_rational(const Rational& value) const {
  if (is_cyclic()) {
    if (!value.is_integer()) throw std::domain_error("non-integer value over a cyclic group");
    return from_integer(value.numerator());
  }
  return GroupElement(*this, value);
}

GroupElement GroupModel::from_integer(const BigInt& value) const {
  if (is_cyclic()) {
    const BigInt n(modulus_);
    BigInt r = value % n;
    if (r < 0) r += n;
    return GroupElement(*this, static_cast<std::uint64_t>(r));
  }
  return GroupElement(*this, Rational(value));
}

std::vector<GroupElement> GroupModel::universe() const {
  if (!is_cyclic()) throw std::domain_error("the rational line cannot be enumerated");
  std::vector<GroupElement> out;
  out.reserve(modulus_);
  for (std::uint64_t r = 0; r < modulus_; ++r) out.push_back(GroupElement(*this, r));
  return out;
}

GroupElement GroupModel::parse_element(std::string_view text) const {
  const Rational value = Rational::parse(text);
  return from_rational(value);
}

std::string GroupModel::str() const {
  return is_cyclic() ? "z" + std::to_string(modulus_) : "q";
}

GroupModel GroupModel::parse(std::string_view text) {
  if (text == "q") return rational_line();
  if (text.size() >= 2 && text[0] == 'z') {
    const Rational n = Rational::parse(text.substr(1));
    if (!n.is_integer() || n.numerator() < 2)
      throw std::invalid_argument("bad cyclic modulus in universe '" + std::string(text) + "'");
    if (n.numerator() > BigInt(1) << 20)
      throw std::invalid_argument("cyclic modulus too large");
    return cyclic(static_cast<std::uint64_t>(n.numerator()));
  }
  throw std::invalid_argument("unknown universe '" + std::string(text) + "' (expected q or z<n>)");
}

const Rational& GroupElement::rational() const {
  if (model_.is_cyclic()) throw std::domain_error("rational payload requested from a Z_n point");
  return rational_;
}

std::uint64_t GroupElement::residue() const {
  if (!model_.is_cyclic()) throw std::domain_error("residue requested from a rational point");
  return residue_;
}

bool GroupElement::is_zero() const {
  return model_.is_cyclic() ? residue_ == 0 : rational_.is_zero();
}

void require_same_model(const GroupModel& a, const GroupModel& b) {
  if (a != b)
    throw std::domain_error("group model mismatch: " + a.str() + " vs " + b.str());
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_model(a.model_, b.model_);
  if (a.model_.is_cyclic()) {
    const std::uint64_t n = a.model_.modulus();
    return GroupElement(a.model_, (a.residue_ + b.residue_) % n);
  }
  return GroupElement(a.model_, a.rational_ + b.rational_);
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement GroupElement::operator-() const {
  if (model_.is_cyclic()) {
    const std::uint64_t n = model_.modulus();
    return GroupElement(model_, residue_ == 0 ? 0 : n - residue_);
  }
  return GroupElement(model_, -rational_);
}

GroupElement GroupElement::scaled(const Rational& coefficient) const {
  if (model_.is_cyclic()) {
    if (!coefficient.is_integer())
      throw std::domain_error("non-integer coefficient over a cyclic group");
    const BigInt n(model_.modulus());
    BigInt r = (coefficient.numerator() % n) * BigInt(residue_) % n;
    if (r < 0) r += n;
    return GroupElement(model_, static_cast<std::uint64_t>(r));
  }
  return GroupElement(model_, coefficient * rational_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  require_same_model(a.model_, b.model_);
  return a.model_.is_cyclic() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  require_same_model(a.model_, b.model_);
  return a.model_.is_cyclic() ? a.residue_ < b.residue_ : a.rational_ < b.rational_;
}

std::string GroupElement::str() const {
  return model_.is_cyclic() ? std::to_string(residue_) : rational_.str();
}

}  // namespace gseq
