// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are produced by independent counting or
// enumeration inside each criterion, never by the code path under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gseq/json_io.hpp"
#include "gseq/verifier.hpp"
#include "oracles.hpp"

using gseq::CheckStatus;
using gseq::Expectation;
using gseq::GroupElement;
using gseq::GroupModel;
using gseq::MethodDescriptor;
using gseq::PointSet;
using gseq::Rational;
using testing_oracles::brute_closure;
using testing_oracles::q_set;
using testing_oracles::rat;
using testing_oracles::Rng;

namespace {

const GroupModel q = GroupModel::rational_line();

MethodDescriptor averaging() { return MethodDescriptor::kernel({rat(1, 2), rat(1, 2)}); }

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// --- criterion bodies -------------------------------------------------------

bool averaging_closure_exact(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto steps = gseq::closure_iterate(averaging(), q_set({rat(0), rat(1)}), 2);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  bool ok = true;
  ok &= expect(steps[0].points == q_set({rat(0), rat(1, 2), rat(1)}), detail,
               "first closure is " + steps[0].points.str());
  ok &= expect(steps[1].points == q_set({rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)}), detail,
               "second closure is " + steps[1].points.str());
  ok &= expect(steps[0].complete && steps[1].complete, detail, "closure flagged incomplete");
  ok &= expect(elapsed.count() < 1.0, detail,
               "took " + std::to_string(elapsed.count()) + " s (budget 1 s)");
  return ok;
}

bool union_of_closed_counterexample(std::string& detail) {
  const auto zero = q_set({rat(0)});
  const auto one = q_set({rat(1)});
  const auto both = q_set({rat(0), rat(1)});
  bool ok = true;
  ok &= expect(gseq::is_closed(averaging(), zero), detail, "{0} not closed");
  ok &= expect(gseq::is_closed(averaging(), one), detail, "{1} not closed");
  ok &= expect(!gseq::is_closed(averaging(), both), detail, "{0,1} reported closed");
  return ok;
}

bool kernel_regularity(std::string& detail) {
  bool ok = true;
  ok &= expect(gseq::is_regular(averaging()), detail, "kernel 1/2,1/2 not regular");
  ok &= expect(gseq::is_regular(MethodDescriptor::kernel({rat(1)})), detail, "kernel 1 not regular");
  ok &= expect(!gseq::is_regular(MethodDescriptor::kernel({rat(1), rat(1)})), detail,
               "kernel 1,1 regular");
  ok &= expect(!gseq::is_regular(MethodDescriptor::kernel({rat(2), rat(2)})), detail,
               "kernel 2,2 regular");

  // every regular kernel must send 200 random convergent sequences to their
  // own limit values
  Rng rng(2024);
  for (const auto& g : {averaging(), MethodDescriptor::kernel({rat(1)})}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<GroupElement> pre;
      const std::size_t pre_len = rng.below(4);
      for (std::size_t j = 0; j < pre_len; ++j)
        pre.push_back(q.from_rational(rat(static_cast<long long>(rng.below(11)) - 5)));
      const auto limit = q.from_rational(
          rat(static_cast<long long>(rng.below(11)) - 5, 1 + static_cast<long long>(rng.below(4))));
      const gseq::EvPerSeq x(q, std::move(pre), {limit});
      const auto v = gseq::evaluate(g, x);
      if (!v || *v != limit) {
        return expect(false, detail, "regular kernel moved a convergent sequence off its limit");
      }
    }
  }
  return ok;
}

bool closure_oracle_equivalence(std::string& detail) {
  const std::vector<MethodDescriptor> kernels{
      MethodDescriptor::kernel({rat(1)}),
      MethodDescriptor::kernel({rat(1, 2), rat(1, 2)}),
      MethodDescriptor::kernel({rat(1), rat(1)}),
      MethodDescriptor::kernel({rat(2), rat(2)}),
      MethodDescriptor::kernel({rat(1), rat(0)}),
      MethodDescriptor::kernel({rat(0), rat(1)}),
      MethodDescriptor::kernel({rat(2), rat(-1)}),
      MethodDescriptor::kernel({rat(-1), rat(2)}),
      MethodDescriptor::kernel({rat(1, 3), rat(2, 3)}),
      MethodDescriptor::kernel({rat(3, 2), rat(-1, 2)}),
  };
  const std::vector<Rational> base{rat(0), rat(1, 2), rat(1)};
  std::size_t mismatches = 0, instances = 0;
  for (const auto& g : kernels) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<Rational> values;
      for (unsigned i = 0; i < 3; ++i) {
        if (mask & (1u << i)) values.push_back(base[i]);
      }
      const auto a = q_set(values);
      std::size_t bound = 1;
      for (std::size_t i = 0; i < g.kernel_width(); ++i) bound *= a.size();
      ++instances;
      if (gseq::closure(g, a).points != brute_closure(g, a, bound)) ++mismatches;
    }
  }
  return expect(mismatches == 0, detail,
                std::to_string(mismatches) + " mismatches across " + std::to_string(instances) +
                    " instances");
}

std::vector<gseq::VerificationReport> run_full_suite() {
  gseq::SuiteOptions opts;
  opts.seed = 7;
  opts.trials = 100;
  std::vector<gseq::VerificationReport> all;
  for (const std::uint64_t n : {2, 3, 4}) {
    const auto reports =
        gseq::run_suite(GroupModel::cyclic(n), gseq::integer_kernel_family(), opts);
    all.insert(all.end(), reports.begin(), reports.end());
  }
  return all;
}

bool verification_suite(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_full_suite();
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

  bool ok = true;
  for (const auto& r : reports) {
    if (r.expectation == Expectation::Holds && r.status == CheckStatus::CounterexampleFound) {
      ok = expect(false, detail,
                  "expected-to-hold check failed: " + r.check + " on " + r.universe + " with " +
                      r.method);
    }
  }
  for (const std::string falsifiable :
       {"union-of-closed", "closure-idempotence", "interior-intersection-equality"}) {
    bool witnessed = false;
    for (const auto& r : reports) {
      if (r.check != falsifiable || r.status != CheckStatus::CounterexampleFound) continue;
      witnessed = true;
      if (!gseq::replay_witness(r)) {
        ok = expect(false, detail, falsifiable + " witness did not replay");
      }
    }
    ok &= expect(witnessed, detail, "no counterexample found for " + falsifiable);
  }
  ok &= expect(gseq::suite_passed(reports), detail, "suite gate reports failure");
  ok &= expect(elapsed.count() < 60.0, detail,
               "took " + std::to_string(elapsed.count()) + " s (budget 60 s)");
  return ok;
}

bool density_formulas(std::string& detail) {
  // prefix: indicator of the perfect squares on positions 0..n-1
  const std::size_t n = 10000;
  std::vector<GroupElement> prefix(n, q.zero());
  for (std::size_t k = 0; k * k < n; ++k) prefix[k * k] = q.from_rational(rat(1));

  // independent direct counts
  std::size_t square_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    while (r * r < i) ++r;
    if (r * r == i) ++square_count;
  }
  const Rational expected_stat = rat(static_cast<long long>(square_count), 10000);

  std::size_t block_count = 0;
  for (std::size_t k = 513; k <= 1024; ++k) {
    std::size_t r = 0;
    const std::size_t position = k - 1;
    while (r * r < position) ++r;
    if (r * r == position) ++block_count;
  }
  const Rational expected_block = rat(static_cast<long long>(block_count), 512);

  bool ok = true;
  ok &= expect(expected_stat == rat(1, 100), detail, "independent count disagrees with 1/100");
  ok &= expect(expected_block == rat(9, 512), detail, "independent count disagrees with 9/512");

  const auto stat = gseq::statistical_density(prefix, q.zero(), rat(1, 2));
  ok &= expect(stat == rat(1, 100), detail, "statistical density returned " + stat.str());

  const auto scheme = gseq::LacunaryScheme::geometric(2, 10);
  const auto block = gseq::lacunary_density(std::span(prefix.data(), 1024), scheme, 10, q.zero(),
                                            rat(1, 2));
  ok &= expect(block == rat(9, 512), detail, "lacunary density returned " + block.str());
  return ok;
}

bool cesaro_consistency(std::string& detail) {
  Rng rng(512);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t len = 1 + rng.below(6);
    std::vector<GroupElement> cyc;
    Rational max_abs(0);
    for (std::size_t i = 0; i < len; ++i) {
      const Rational v = rat(static_cast<long long>(rng.below(21)) - 10,
                             1 + static_cast<long long>(rng.below(5)));
      if (v.abs() > max_abs) max_abs = v.abs();
      cyc.push_back(q.from_rational(v));
    }
    const gseq::EvPerSeq x(q, {}, std::move(cyc));
    const auto closed_form = gseq::evaluate(MethodDescriptor::cesaro(), x);
    if (!closed_form) return expect(false, detail, "cesaro undefined on a cycle");

    Rational sum(0);
    for (std::size_t i = 0; i < 1200; ++i) sum += x.term(i).rational();
    const Rational running = sum / rat(1200);
    const Rational diff = (running - closed_form->rational()).abs();
    const Rational bound = rat(static_cast<long long>(len)) * max_abs / rat(1200);
    if (!(diff <= bound)) {
      return expect(false, detail,
                    "running-mean gap " + diff.str() + " exceeds bound " + bound.str());
    }
  }
  return true;
}

bool verify_determinism(std::string& detail) {
  const auto first = gseq::report_stream(run_full_suite());
  const auto second = gseq::report_stream(run_full_suite());
  bool ok = expect(!first.empty(), detail, "empty report stream");
  ok &= expect(first == second, detail, "report streams differ between identical runs");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"closure-averaging-kernel-exact", averaging_closure_exact},
      {"union-of-closed-counterexample", union_of_closed_counterexample},
      {"kernel-regularity", kernel_regularity},
      {"closure-oracle-equivalence", closure_oracle_equivalence},
      {"verification-suite-z2-z3-z4", verification_suite},
      {"density-formulas-exact", density_formulas},
      {"cesaro-partial-mean-consistency", cesaro_consistency},
      {"verify-determinism", verify_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok) {
      std::printf("PASS %s (%.1f ms)\n", criterion.name.c_str(), ms);
    } else {
      ++failures;
      std::printf("FAIL %s: %s\n", criterion.name.c_str(),
                  detail.empty() ? "criterion not satisfied" : detail.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
