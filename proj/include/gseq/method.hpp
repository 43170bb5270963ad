#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gseq/sequence.hpp"

namespace gseq {

// A method of sequential convergence: an additive partial function from a
// subgroup of the sequence group into X. Four shapes:
//
//   Lim     — the ordinary tail limit; defined iff the sequence is
//             eventually constant (canonical cycle length 1).
//   Kernel  — a sliding band kernel y_n = sum_j c_j * x_{n+j}, followed by
//             Lim on y. The coefficients are rational on the line and must
//             be integers over Z_n.
//   Cesaro  — the limit of running arithmetic means; rational line only.
//   Sum     — (G1+G2)(x) = G1(x)+G2(x) on the intersection of domains.
class MethodDescriptor {
 public:
  enum class Kind { Lim, Kernel, Cesaro, Sum };

  static MethodDescriptor lim() { return MethodDescriptor(Kind::Lim); }
  static MethodDescriptor cesaro() { return MethodDescriptor(Kind::Cesaro); }
  static MethodDescriptor kernel(std::vector<Rational> coefficients);
  static MethodDescriptor sum(MethodDescriptor left, MethodDescriptor right);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& coefficients() const;
  std::size_t kernel_width() const { return coefficients().size(); }
  const MethodDescriptor& left() const;
  const MethodDescriptor& right() const;

  friend bool operator==(const MethodDescriptor& a, const MethodDescriptor& b);
  friend bool operator!=(const MethodDescriptor& a, const MethodDescriptor& b) { return !(a == b); }

  // Compact textual form: "lim", "cesaro", "kernel:1/2,1/2", "sum(lim,kernel:1)".
  std::string str() const;
  static MethodDescriptor parse(std::string_view text);

 private:
  explicit MethodDescriptor(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<Rational> coefficients_;
  std::shared_ptr<const MethodDescriptor> left_, right_;
};

// G applied to x. An empty optional means x is outside the method's domain;
// that is an ordinary outcome, not an error. Model incompatibilities
// (Cesaro over Z_n, fractional kernel coefficients over Z_n) throw.
std::optional<GroupElement> evaluate(const MethodDescriptor& method, const EvPerSeq& x);

bool in_domain(const MethodDescriptor& method, const EvPerSeq& x);

// On every constant sequence (a,a,...) the method returns r*a for a fixed
// scalar r determined by the descriptor alone: 1 for Lim and Cesaro, the
// coefficient sum for a kernel, and the sum of the parts for a method sum.
// Convergent eventually periodic sequences have constant tails, so the
// method is regular exactly when r = 1. This is the Silverman-Toeplitz row
// sum condition in the band case.
Rational constant_response(const MethodDescriptor& method);

bool is_regular(const MethodDescriptor& method);

// Validates that the method can be evaluated over the model at all.
void require_compatible(const MethodDescriptor& method, const GroupModel& model);

}  // namespace gseq
