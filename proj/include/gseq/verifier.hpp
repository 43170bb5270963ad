#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gseq/topology.hpp"

namespace gseq {

// A total function X -> X on a cyclic universe, given by its value table.
class TabulatedFunction {
 public:
  TabulatedFunction(GroupModel model, std::vector<std::uint64_t> images);

  static TabulatedFunction identity(const GroupModel& model);
  static TabulatedFunction constant(const GroupModel& model, std::uint64_t value);
  static TabulatedFunction multiplication(const GroupModel& model, std::uint64_t factor);
  static TabulatedFunction translation(const GroupModel& model, std::uint64_t offset);
  static TabulatedFunction negation(const GroupModel& model);

  // Lexicographic enumeration of all n^n tables.
  static std::uint64_t table_count(const GroupModel& model);
  static TabulatedFunction from_code(const GroupModel& model, std::uint64_t code);
  std::uint64_t code() const;

  const GroupModel& model() const { return model_; }
  const std::vector<std::uint64_t>& images() const { return images_; }
  std::uint64_t operator()(std::uint64_t x) const { return images_[x]; }
  GroupElement apply(const GroupElement& x) const;

  // f(a+b) = f(a)+f(b) for all pairs; on Z_n these are exactly x -> m*x.
  bool additive() const { return additive_; }
  bool injective() const;
  bool surjective() const { return injective(); }

  TabulatedFunction composed_with(const TabulatedFunction& inner) const;  // this after inner
  TabulatedFunction plus(const TabulatedFunction& other) const;
  TabulatedFunction negated() const;

  std::string str() const;  // comma-separated images
  static TabulatedFunction parse(const GroupModel& model, std::string_view text);

  friend bool operator==(const TabulatedFunction& a, const TabulatedFunction& b) {
    return a.model_ == b.model_ && a.images_ == b.images_;
  }

 private:
  GroupModel model_;
  std::vector<std::uint64_t> images_;
  bool additive_;
};

// Outcome of a continuity decision. The analysis runs on the window graph:
// G(x) = u exactly when the window walk of x eventually stays on value-u
// nodes, and the set of nodes any such walk visits infinitely often is
// strongly connected, so f fails to be continuous at u exactly when some
// cycle of value-u nodes carries a window whose f-image value differs from
// f(u). Periodic witnesses of period at most (alphabet size)^width therefore
// decide the question for all sequences, not just periodic ones.
struct ContinuityReport {
  bool continuous = true;
  std::optional<GroupElement> witness_point;
  std::optional<EvPerSeq> witness;  // G(witness) = point, but G(f(witness)) is wrong
  std::uint64_t complete_period_bound = 0;
};

ContinuityReport check_continuity(const MethodDescriptor& method, const TabulatedFunction& f);
ContinuityReport check_continuity_at(const MethodDescriptor& method, const TabulatedFunction& f,
                                     const GroupElement& point);
// Continuity with sequence values restricted to a subset; strictly weaker
// than global continuity.
ContinuityReport check_continuity_on(const MethodDescriptor& method, const TabulatedFunction& f,
                                     const PointSet& values);

// Literal bounded search over eventually periodic sequences with the given
// period bound (preambles up to the kernel width). Refutations are
// unconditional; a clean pass is complete only up to the bound, which the
// report records. The graph decision above subsumes this; it exists for
// explicit small-budget runs and refuses bounds whose enumeration would
// explode rather than truncating silently.
ContinuityReport check_continuity_bounded(const MethodDescriptor& method,
                                          const TabulatedFunction& f, std::uint64_t period_bound);

struct MapCheckReport {
  bool holds = true;
  std::optional<PointSet> witness;  // an open (closed) set with bad image
};

MapCheckReport check_open_map(const MethodDescriptor& method, const TabulatedFunction& f,
                              const TopologyOptions& options = {});
MapCheckReport check_closed_map(const MethodDescriptor& method, const TabulatedFunction& f,
                                const TopologyOptions& options = {});

enum class CheckStatus { Verified, CounterexampleFound, Skipped };
enum class Expectation { Holds, Falsifiable, Observe };

std::string to_string(CheckStatus status);
std::string to_string(Expectation expectation);

struct VerificationReport {
  std::string check;
  std::string universe;
  std::string method;
  Expectation expectation = Expectation::Holds;
  CheckStatus status = CheckStatus::Skipped;
  std::uint64_t trials = 0;  // instances examined
  nlohmann::json witness;    // null when absent; fully replayable otherwise
  std::optional<std::uint64_t> verified_up_to_period;
  std::string note;  // skip reason or observation summary
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::uint64_t trials = 100;
  TopologyOptions topology;
};

// One named check per theorem, run against every method. Statements whose
// hypotheses include regularity are asserted only for regular methods and
// downgraded to observations otherwise. Deterministic for a fixed
// (universe, methods, trials, seed).
std::vector<VerificationReport> run_suite(const GroupModel& universe,
                                          const std::vector<MethodDescriptor>& methods,
                                          const SuiteOptions& options = {});

// Exit criterion: every expected-to-hold check verified, and every
// falsifiable check produced at least one counterexample somewhere.
bool suite_passed(const std::vector<VerificationReport>& reports);

// One JSON document per report, stable key order.
std::string report_line(const VerificationReport& report);
std::string report_stream(const std::vector<VerificationReport>& reports);

// Re-runs the single instance recorded in a counterexample witness.
bool replay_witness(const VerificationReport& report);

// All sliding kernels of width <= max_width with integer coefficients in
// [-bound, bound].
std::vector<MethodDescriptor> integer_kernel_family(std::size_t max_width = 2, long long bound = 2);

}  // namespace gseq
