#include "gseq/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace gseq {

// ---------------------------------------------------------------------------
// TabulatedFunction

TabulatedFunction::TabulatedFunction(GroupModel model, std::vector<std::uint64_t> images)
    : model_(model), images_(std::move(images)), additive_(true) {
  if (!model_.is_cyclic()) throw std::domain_error("tabulated functions live on cyclic universes");
  const std::uint64_t n = model_.modulus();
  if (images_.size() != n) throw std::invalid_argument("function table must cover the universe");
  for (const auto v : images_) {
    if (v >= n) throw std::invalid_argument("function table value out of range");
  }
  for (std::uint64_t a = 0; a < n && additive_; ++a) {
    for (std::uint64_t b = a; b < n; ++b) {
      if (images_[(a + b) % n] != (images_[a] + images_[b]) % n) {
        additive_ = false;
        break;
      }
    }
  }
}

TabulatedFunction TabulatedFunction::identity(const GroupModel& model) {
  return multiplication(model, 1);
}

TabulatedFunction TabulatedFunction::constant(const GroupModel& model, std::uint64_t value) {
  return TabulatedFunction(model, std::vector<std::uint64_t>(model.modulus(), value % model.modulus()));
}

TabulatedFunction TabulatedFunction::multiplication(const GroupModel& model, std::uint64_t factor) {
  const std::uint64_t n = model.modulus();
  std::vector<std::uint64_t> images(n);
  for (std::uint64_t x = 0; x < n; ++x) images[x] = (x * (factor % n)) % n;
  return TabulatedFunction(model, std::move(images));
}

TabulatedFunction TabulatedFunction::translation(const GroupModel& model, std::uint64_t offset) {
  const std::uint64_t n = model.modulus();
  std::vector<std::uint64_t> images(n);
  for (std::uint64_t x = 0; x < n; ++x) images[x] = (x + offset) % n;
  return TabulatedFunction(model, std::move(images));
}

TabulatedFunction TabulatedFunction::negation(const GroupModel& model) {
  const std::uint64_t n = model.modulus();
  std::vector<std::uint64_t> images(n);
  for (std::uint64_t x = 0; x < n; ++x) images[x] = (n - x) % n;
  return TabulatedFunction(model, std::move(images));
}

std::uint64_t TabulatedFunction::table_count(const GroupModel& model) {
  const std::uint64_t n = model.modulus();
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (count > (std::uint64_t{1} << 62) / n) return std::uint64_t{1} << 62;  // saturate
    count *= n;
  }
  return count;
}

TabulatedFunction TabulatedFunction::from_code(const GroupModel& model, std::uint64_t code) {
  const std::uint64_t n = model.modulus();
  std::vector<std::uint64_t> images(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    images[x] = code % n;
    code /= n;
  }
  return TabulatedFunction(model, std::move(images));
}

std::uint64_t TabulatedFunction::code() const {
  const std::uint64_t n = model_.modulus();
  std::uint64_t code = 0;
  for (std::size_t x = images_.size(); x-- > 0;) code = code * n + images_[x];
  return code;
}

GroupElement TabulatedFunction::apply(const GroupElement& x) const {
  require_same_model(x.model(), model_);
  return model_.from_integer(BigInt(images_[x.residue()]));
}

bool TabulatedFunction::injective() const {
  std::vector<char> seen(images_.size(), 0);
  for (const auto v : images_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

TabulatedFunction TabulatedFunction::composed_with(const TabulatedFunction& inner) const {
  require_same_model(model_, inner.model_);
  std::vector<std::uint64_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = images_[inner.images_[x]];
  return TabulatedFunction(model_, std::move(images));
}

TabulatedFunction TabulatedFunction::plus(const TabulatedFunction& other) const {
  require_same_model(model_, other.model_);
  const std::uint64_t n = model_.modulus();
  std::vector<std::uint64_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = (images_[x] + other.images_[x]) % n;
  return TabulatedFunction(model_, std::move(images));
}

TabulatedFunction TabulatedFunction::negated() const {
  const std::uint64_t n = model_.modulus();
  std::vector<std::uint64_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = (n - images_[x]) % n;
  return TabulatedFunction(model_, std::move(images));
}

std::string TabulatedFunction::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(images_[i]);
  }
  return out;
}

TabulatedFunction TabulatedFunction::parse(const GroupModel& model, std::string_view text) {
  std::vector<std::uint64_t> images;
  while (true) {
    const auto comma = text.find(',');
    const Rational v = Rational::parse(text.substr(0, comma));
    if (!v.is_integer() || v.numerator() < 0)
      throw std::invalid_argument("function table entries must be residues");
    images.push_back(static_cast<std::uint64_t>(v.numerator() % BigInt(model.modulus())));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return TabulatedFunction(model, std::move(images));
}

// ---------------------------------------------------------------------------
// Continuity

namespace {

void require_continuity_method(const MethodDescriptor& method, const GroupModel& model) {
  if (!model.is_cyclic())
    throw std::domain_error("continuity checking runs on cyclic universes only");
  if (method.kind() != MethodDescriptor::Kind::Lim && method.kind() != MethodDescriptor::Kind::Kernel)
    throw std::domain_error("continuity checking supports lim and kernel methods only");
  require_compatible(method, model);
}

ContinuityReport continuity_core(const MethodDescriptor& method, const TabulatedFunction& f,
                                 const std::vector<GroupElement>& alphabet,
                                 const std::optional<GroupElement>& only_at) {
  ContinuityReport report;
  if (method.kind() == MethodDescriptor::Kind::Lim) {
    // Lim-convergent means eventually constant; f maps a constant tail to a
    // constant tail, so every function is Lim-continuous.
    report.complete_period_bound = 1;
    return report;
  }
  WindowGraph graph(f.model(), alphabet, method.coefficients());
  report.complete_period_bound = graph.node_count();
  if (graph.node_count() == 0) return report;

  // Window value after applying f pointwise.
  std::vector<GroupElement> mapped_values;
  mapped_values.reserve(graph.node_count());
  {
    std::vector<GroupElement> mapped_alphabet;
    mapped_alphabet.reserve(alphabet.size());
    for (const auto& a : alphabet) mapped_alphabet.push_back(f.apply(a));
    const auto& coeffs = method.coefficients();
    for (std::size_t node = 0; node < graph.node_count(); ++node) {
      GroupElement acc = f.model().zero();
      std::size_t rest = node;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        acc = acc + mapped_alphabet[rest % alphabet.size()].scaled(coeffs[j]);
        rest /= alphabet.size();
      }
      mapped_values.push_back(acc);
    }
  }

  for (const auto& [value, nodes] : graph.nodes_by_value()) {
    if (only_at && value != *only_at) continue;
    const GroupElement expected = f.apply(value);
    std::vector<char> member(graph.node_count(), 0);
    for (const std::size_t node : nodes) member[node] = 1;
    for (const std::size_t node : nodes) {
      if (mapped_values[node] == expected) continue;
      const auto cycle = graph.cycle_through(member, node);
      if (cycle.empty()) continue;  // the offending window lies on no realizable tail
      report.continuous = false;
      report.witness_point = value;
      report.witness = graph.walk_sequence(cycle);
      return report;
    }
  }
  return report;
}

}  // namespace

ContinuityReport check_continuity(const MethodDescriptor& method, const TabulatedFunction& f) {
  require_continuity_method(method, f.model());
  return continuity_core(method, f, f.model().universe(), std::nullopt);
}

ContinuityReport check_continuity_at(const MethodDescriptor& method, const TabulatedFunction& f,
                                     const GroupElement& point) {
  require_continuity_method(method, f.model());
  require_same_model(point.model(), f.model());
  return continuity_core(method, f, f.model().universe(), point);
}

ContinuityReport check_continuity_on(const MethodDescriptor& method, const TabulatedFunction& f,
                                     const PointSet& values) {
  require_continuity_method(method, f.model());
  require_same_model(values.model(), f.model());
  return continuity_core(method, f, values.elements(), std::nullopt);
}

ContinuityReport check_continuity_bounded(const MethodDescriptor& method,
                                          const TabulatedFunction& f, std::uint64_t period_bound) {
  require_continuity_method(method, f.model());
  if (period_bound < 1) throw std::invalid_argument("period bound must be >= 1");
  const std::uint64_t n = f.model().modulus();
  const std::uint64_t preamble_bound =
      method.kind() == MethodDescriptor::Kind::Kernel ? method.kernel_width() : 1;

  // sequence count: sum over periods p and preamble lengths q of n^(p+q)
  double budget = 0;
  for (std::uint64_t p = 1; p <= period_bound; ++p) {
    for (std::uint64_t q = 0; q <= preamble_bound; ++q) {
      budget += std::pow(static_cast<double>(n), static_cast<double>(p + q));
      if (budget > 4e6)
        throw std::domain_error("period bound " + std::to_string(period_bound) +
                                " exceeds the enumeration budget");
    }
  }

  ContinuityReport report;
  report.complete_period_bound = period_bound;
  const auto points = f.model().universe();
  auto apply = [&](const GroupElement& e) { return f.apply(e); };
  auto next_tuple = [&](std::vector<std::size_t>& digits) {
    for (auto& d : digits) {
      if (++d < points.size()) return true;
      d = 0;
    }
    return false;
  };
  for (std::uint64_t pre_len = 0; pre_len <= preamble_bound; ++pre_len) {
    std::vector<std::size_t> pre_digits(pre_len, 0);
    do {
      for (std::uint64_t period = 1; period <= period_bound; ++period) {
        std::vector<std::size_t> cyc_digits(period, 0);
        do {
          std::vector<GroupElement> pre;
          for (const auto d : pre_digits) pre.push_back(points[d]);
          std::vector<GroupElement> cyc;
          for (const auto d : cyc_digits) cyc.push_back(points[d]);
          const EvPerSeq x(f.model(), std::move(pre), std::move(cyc));
          const auto u = evaluate(method, x);
          if (!u) continue;
          const auto v = evaluate(method, x.map(apply));
          if (!v || *v != f.apply(*u)) {
            report.continuous = false;
            report.witness_point = *u;
            report.witness = x;
            return report;
          }
        } while (next_tuple(cyc_digits));
      }
    } while (next_tuple(pre_digits));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Open / closed maps

namespace {

PointSet image_set(const TabulatedFunction& f, const PointSet& set) {
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (const auto& e : set.elements()) out.push_back(f.apply(e));
  return PointSet(set.model(), std::move(out));
}

MapCheckReport map_check(const MethodDescriptor& method, const TabulatedFunction& f,
                         const TopologyOptions& options, bool open_variant) {
  const GroupModel& model = f.model();
  if (!model.is_cyclic()) throw std::domain_error("map checks need a finite universe");
  const std::uint64_t n = model.modulus();
  if (n > options.universe_cap)
    throw std::domain_error("universe too large for subset enumeration (cap " +
                            std::to_string(options.universe_cap) + ")");
  const auto points = model.universe();
  MapCheckReport report;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<GroupElement> subset;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(points[i]);
    }
    PointSet set(model, std::move(subset));
    const bool premise = open_variant ? is_open(method, set, options) : is_closed(method, set, options);
    if (!premise) continue;
    const PointSet img = image_set(f, set);
    const bool ok = open_variant ? is_open(method, img, options) : is_closed(method, img, options);
    if (!ok) {
      report.holds = false;
      report.witness = set;
      return report;
    }
  }
  return report;
}

}  // namespace

MapCheckReport check_open_map(const MethodDescriptor& method, const TabulatedFunction& f,
                              const TopologyOptions& options) {
  return map_check(method, f, options, true);
}

MapCheckReport check_closed_map(const MethodDescriptor& method, const TabulatedFunction& f,
                                const TopologyOptions& options) {
  return map_check(method, f, options, false);
}

// ---------------------------------------------------------------------------
// Suite plumbing

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::CounterexampleFound: return "counterexample";
    case CheckStatus::Skipped: return "skipped";
  }
  return {};
}

std::string to_string(Expectation expectation) {
  switch (expectation) {
    case Expectation::Holds: return "holds";
    case Expectation::Falsifiable: return "falsifiable";
    case Expectation::Observe: return "observe";
  }
  return {};
}

namespace {

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

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Per-method context over a cyclic universe with every subset's closure,
// openness, interior and boundary precomputed as bitmasks.
struct MaskContext {
  GroupModel model = GroupModel::rational_line();
  MethodDescriptor method = MethodDescriptor::lim();
  TopologyOptions topt;
  std::string universe_str, method_str;
  bool regular = false;
  bool supported = false;  // closure and continuity computable
  std::string unsupported_reason;

  std::uint64_t n = 0, full = 0;
  std::vector<GroupElement> points;
  std::vector<std::uint64_t> closure_mask, interior_mask, boundary_mask;
  std::vector<char> closed_bit, open_bit;

  PointSet to_set(std::uint64_t mask) const {
    std::vector<GroupElement> subset;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(points[i]);
    }
    return PointSet(model, std::move(subset));
  }

  std::uint64_t to_mask(const PointSet& set) const {
    std::uint64_t mask = 0;
    for (const auto& e : set.elements()) mask |= std::uint64_t{1} << e.residue();
    return mask;
  }

  std::uint64_t image_mask(const TabulatedFunction& f, std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) out |= std::uint64_t{1} << f(i);
    }
    return out;
  }

  std::uint64_t preimage_mask(const TabulatedFunction& f, std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << f(i))) out |= std::uint64_t{1} << i;
    }
    return out;
  }

  std::uint64_t sum_mask(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!(a & (std::uint64_t{1} << i))) continue;
      for (std::uint64_t j = 0; j < n; ++j) {
        if (b & (std::uint64_t{1} << j)) out |= std::uint64_t{1} << ((i + j) % n);
      }
    }
    return out;
  }

  nlohmann::json mask_json(std::uint64_t mask) const {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) arr.push_back(points[i].str());
    }
    return arr;
  }
};

bool subset_mask(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

MaskContext build_mask_context(const GroupModel& universe, const MethodDescriptor& method,
                               const TopologyOptions& topt) {
  MaskContext ctx;
  ctx.model = universe;
  ctx.method = method;
  ctx.topt = topt;
  ctx.universe_str = universe.str();
  ctx.method_str = method.str();
  ctx.regular = is_regular(method);
  ctx.n = universe.modulus();
  ctx.full = (std::uint64_t{1} << ctx.n) - 1;
  ctx.points = universe.universe();

  if (method.kind() != MethodDescriptor::Kind::Lim && method.kind() != MethodDescriptor::Kind::Kernel) {
    ctx.unsupported_reason = "closure undecidable for " + method.str() + " on " + universe.str();
    return ctx;
  }
  try {
    require_compatible(method, universe);
  } catch (const std::exception& e) {
    ctx.unsupported_reason = e.what();
    return ctx;
  }
  ctx.supported = true;

  const std::uint64_t count = ctx.full + 1;
  ctx.closure_mask.resize(count);
  ctx.closed_bit.resize(count);
  ctx.open_bit.resize(count);
  ctx.interior_mask.resize(count);
  ctx.boundary_mask.resize(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    ctx.closure_mask[m] = ctx.to_mask(closure(method, ctx.to_set(m), topt).points);
    ctx.closed_bit[m] = subset_mask(ctx.closure_mask[m], m);
  }
  for (std::uint64_t m = 0; m < count; ++m) ctx.open_bit[m] = ctx.closed_bit[ctx.full & ~m];
  for (std::uint64_t m = 0; m < count; ++m) {
    std::uint64_t inside = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      if (ctx.open_bit[s] && subset_mask(s, m)) inside |= s;
    }
    ctx.interior_mask[m] = inside;
    ctx.boundary_mask[m] = ctx.closure_mask[m] & ctx.closure_mask[ctx.full & ~m];
  }
  return ctx;
}

struct FunctionInfo {
  bool continuous = false;
  bool open_map = false;
  bool closed_map = false;
};

// Lazy per-function verdicts, keyed by table code.
class FunctionCache {
 public:
  explicit FunctionCache(const MaskContext& ctx) : ctx_(ctx) {}

  const FunctionInfo& info(const TabulatedFunction& f) {
    const auto [it, fresh] = infos_.try_emplace(f.code());
    if (fresh) {
      FunctionInfo& out = it->second;
      out.continuous =
          continuity_core(ctx_.method, f, ctx_.model.universe(), std::nullopt).continuous;
      out.open_map = true;
      out.closed_map = true;
      for (std::uint64_t m = 0; m <= ctx_.full; ++m) {
        if (ctx_.open_bit[m] && !ctx_.open_bit[ctx_.image_mask(f, m)]) out.open_map = false;
        if (ctx_.closed_bit[m] && !ctx_.closed_bit[ctx_.image_mask(f, m)]) out.closed_map = false;
        if (!out.open_map && !out.closed_map) break;
      }
    }
    return it->second;
  }

 private:
  const MaskContext& ctx_;
  std::unordered_map<std::uint64_t, FunctionInfo> infos_;
};

struct FunctionPool {
  std::vector<TabulatedFunction> fns;
  bool exhaustive = false;
};

FunctionPool build_pool(const MaskContext& ctx, Rng rng, std::uint64_t trials) {
  FunctionPool pool;
  const std::uint64_t total = TabulatedFunction::table_count(ctx.model);
  if (total <= 512) {
    pool.exhaustive = true;
    for (std::uint64_t code = 0; code < total; ++code)
      pool.fns.push_back(TabulatedFunction::from_code(ctx.model, code));
    return pool;
  }
  std::vector<std::uint64_t> codes;
  for (std::uint64_t a = 0; a < ctx.n; ++a) {
    codes.push_back(TabulatedFunction::multiplication(ctx.model, a).code());
    codes.push_back(TabulatedFunction::translation(ctx.model, a).code());
    codes.push_back(TabulatedFunction::constant(ctx.model, a).code());
  }
  codes.push_back(TabulatedFunction::negation(ctx.model).code());
  for (std::uint64_t t = 0; t < 3 * trials; ++t) codes.push_back(rng.below(total));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  for (const auto code : codes) pool.fns.push_back(TabulatedFunction::from_code(ctx.model, code));
  return pool;
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::Verified;
  nlohmann::json witness;
  std::uint64_t trials = 0;
  std::string note;
  std::optional<std::uint64_t> period;
};

struct CheckEnv {
  const MaskContext& ctx;
  FunctionCache& cache;
  const FunctionPool& pool;
  const SuiteOptions& opts;
  Rng rng;
};

// Visits every (i, j) pair when count^2 <= cap, otherwise a deterministic
// sample of cap pairs. The visitor returns true to stop early.
template <typename Fn>
std::uint64_t for_pairs(std::size_t count, Rng& rng, std::uint64_t cap, Fn&& fn) {
  std::uint64_t visited = 0;
  if (static_cast<std::uint64_t>(count) * count <= cap) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        ++visited;
        if (fn(i, j)) return visited;
      }
    }
    return visited;
  }
  for (std::uint64_t t = 0; t < cap; ++t) {
    ++visited;
    if (fn(rng.below(count), rng.below(count))) return visited;
  }
  return visited;
}

std::vector<std::uint64_t> random_family(Rng& rng, const std::vector<std::uint64_t>& from,
                                         std::uint64_t universe_full) {
  std::vector<std::uint64_t> family;
  const std::size_t size = 2 + rng.below(3);
  for (std::size_t i = 0; i < size; ++i) {
    if (!from.empty()) {
      family.push_back(from[rng.below(from.size())]);
    } else {
      family.push_back(rng.below(universe_full + 1));
    }
  }
  // keep the degenerate members in play
  if (rng.below(8) == 0) family.push_back(0);
  if (rng.below(8) == 0) family.push_back(universe_full);
  return family;
}

nlohmann::json family_json(const MaskContext& ctx, const std::vector<std::uint64_t>& family) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto m : family) arr.push_back(ctx.mask_json(m));
  return arr;
}

// ---------------------------------------------------------------------------
// Individual checks over a cyclic universe

CheckOutcome chk_regular_containment(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    ++out.trials;
    if (!subset_mask(m, ctx.closure_mask[m])) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)}, {"closure", ctx.mask_json(ctx.closure_mask[m])}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_closure_empty(CheckEnv& env) {
  CheckOutcome out;
  out.trials = 1;
  if (env.ctx.closure_mask[0] != 0) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"closure", env.ctx.mask_json(env.ctx.closure_mask[0])}};
  }
  return out;
}

CheckOutcome chk_closure_universe(CheckEnv& env) {
  CheckOutcome out;
  out.trials = 1;
  if (env.ctx.closure_mask[env.ctx.full] != env.ctx.full) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"closure", env.ctx.mask_json(env.ctx.closure_mask[env.ctx.full])}};
  }
  return out;
}

std::vector<std::uint64_t> masks_where(const MaskContext& ctx, const std::vector<char>& bit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    if (bit[m]) out.push_back(m);
  }
  return out;
}

CheckOutcome chk_intersections_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto closed = masks_where(ctx, ctx.closed_bit);
  for (const auto a : closed) {
    for (const auto b : closed) {
      ++out.trials;
      if (!ctx.closed_bit[a & b]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"family", family_json(ctx, {a, b})}};
        return out;
      }
    }
  }
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const auto family = random_family(env.rng, closed, ctx.full);
    std::uint64_t meet = ctx.full;
    for (const auto m : family) meet &= m;
    ++out.trials;
    if (!ctx.closed_bit[meet]) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"family", family_json(ctx, family)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_unions_open(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto open = masks_where(ctx, ctx.open_bit);
  for (const auto a : open) {
    for (const auto b : open) {
      ++out.trials;
      if (!ctx.open_bit[a | b]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"family", family_json(ctx, {a, b})}};
        return out;
      }
    }
  }
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const auto family = random_family(env.rng, open, ctx.full);
    std::uint64_t join = 0;
    for (const auto m : family) join |= m;
    ++out.trials;
    if (!ctx.open_bit[join]) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"family", family_json(ctx, family)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_open_iff_neighborhoods(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    ++out.trials;
    // every point of A has an open neighborhood inside A  <=>  A <= int(A)
    const bool neighborhoods = subset_mask(m, ctx.interior_mask[m]);
    if (static_cast<bool>(ctx.open_bit[m]) != neighborhoods) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)}, {"interior", ctx.mask_json(ctx.interior_mask[m])}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_interior_properties(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  auto fail = [&](std::uint64_t a, std::uint64_t b, const char* item) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"a", ctx.mask_json(a)}, {"b", ctx.mask_json(b)}, {"item", item}};
  };
  for (std::uint64_t a = 0; a <= ctx.full; ++a) {
    ++out.trials;
    const std::uint64_t ia = ctx.interior_mask[a];
    if (!ctx.open_bit[ia]) { fail(a, 0, "i"); return out; }
    if (!subset_mask(ia, a)) { fail(a, 0, "ii"); return out; }
    if (static_cast<bool>(ctx.open_bit[a]) != (a == ia)) { fail(a, 0, "iii"); return out; }
    for (std::uint64_t b = 0; b <= ctx.full; ++b) {
      const std::uint64_t ib = ctx.interior_mask[b];
      if (subset_mask(a, b) && !subset_mask(ia, ib)) { fail(a, b, "iv"); return out; }
      if (!subset_mask(ctx.interior_mask[a & b], ia & ib)) { fail(a, b, "v"); return out; }
      if (!subset_mask(ia | ib, ctx.interior_mask[a | b])) { fail(a, b, "vi"); return out; }
    }
  }
  return out;
}

CheckOutcome chk_interior_of_families(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const auto family = random_family(env.rng, {}, ctx.full);
    std::uint64_t meet = ctx.full, join = 0, meet_int = ctx.full, join_int = 0;
    for (const auto m : family) {
      meet &= m;
      join |= m;
      meet_int &= ctx.interior_mask[m];
      join_int |= ctx.interior_mask[m];
    }
    ++out.trials;
    if (!subset_mask(ctx.interior_mask[meet], meet_int) ||
        !subset_mask(join_int, ctx.interior_mask[join])) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"family", family_json(ctx, family)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_complement_interior(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    ++out.trials;
    if (!subset_mask(ctx.closure_mask[ctx.full & ~m], ctx.full & ~ctx.interior_mask[m])) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_boundary_bound(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    ++out.trials;
    if (!subset_mask(ctx.boundary_mask[m], ctx.closure_mask[m] & ~ctx.interior_mask[m])) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_closure_vs_closed_supersets(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto closed = masks_where(ctx, ctx.closed_bit);
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    std::uint64_t meet = ctx.full;
    for (const auto k : closed) {
      if (subset_mask(m, k)) meet &= k;
    }
    ++out.trials;
    if (!subset_mask(ctx.closure_mask[m], meet)) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_neighborhood_meets(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto open = masks_where(ctx, ctx.open_bit);
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    for (std::uint64_t x = 0; x < ctx.n; ++x) {
      if (!(ctx.closure_mask[m] & (std::uint64_t{1} << x))) continue;
      for (const auto u : open) {
        if (!(u & (std::uint64_t{1} << x))) continue;
        ++out.trials;
        if ((u & m) == 0) {
          out.status = CheckStatus::CounterexampleFound;
          out.witness = {{"set", ctx.mask_json(m)},
                         {"point", ctx.points[x].str()},
                         {"neighborhood", ctx.mask_json(u)}};
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome chk_dense_meets_open(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto open = masks_where(ctx, ctx.open_bit);
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    if (ctx.closure_mask[m] != ctx.full) continue;  // not dense
    for (const auto u : open) {
      if (u == 0) continue;
      ++out.trials;
      if ((u & m) == 0) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"set", ctx.mask_json(m)}, {"open", ctx.mask_json(u)}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_union_of_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto closed = masks_where(ctx, ctx.closed_bit);
  for (const auto a : closed) {
    for (const auto b : closed) {
      ++out.trials;
      if (!ctx.closed_bit[a | b]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"a", ctx.mask_json(a)},
                       {"b", ctx.mask_json(b)},
                       {"union_closure", ctx.mask_json(ctx.closure_mask[a | b])}};
        return out;
      }
    }
  }
  out.note = "no counterexample on this universe/method";
  return out;
}

CheckOutcome chk_closure_idempotence(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t m = 0; m <= ctx.full; ++m) {
    ++out.trials;
    const std::uint64_t once = ctx.closure_mask[m];
    const std::uint64_t twice = ctx.closure_mask[once];
    if (once != twice) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", ctx.mask_json(m)},
                     {"closure", ctx.mask_json(once)},
                     {"second", ctx.mask_json(twice)}};
      return out;
    }
  }
  out.note = "no counterexample on this universe/method";
  return out;
}

CheckOutcome chk_interior_intersection_equality(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t a = 0; a <= ctx.full; ++a) {
    for (std::uint64_t b = 0; b <= ctx.full; ++b) {
      ++out.trials;
      const std::uint64_t lhs = ctx.interior_mask[a & b];
      const std::uint64_t rhs = ctx.interior_mask[a] & ctx.interior_mask[b];
      if (lhs != rhs) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"family", family_json(ctx, {a, b})},
                       {"interior_of_intersection", ctx.mask_json(lhs)},
                       {"intersection_of_interiors", ctx.mask_json(rhs)}};
        return out;
      }
    }
  }
  out.note = "no counterexample on this universe/method";
  return out;
}

CheckOutcome chk_closed_map_criterion(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (const auto& f : env.pool.fns) {
    ++out.trials;
    bool premise = true;
    for (std::uint64_t m = 0; m <= ctx.full && premise; ++m) {
      premise = subset_mask(ctx.closure_mask[ctx.image_mask(f, m)],
                            ctx.image_mask(f, ctx.closure_mask[m]));
    }
    if (premise && !env.cache.info(f).closed_map) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_open_map_iff(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (const auto& f : env.pool.fns) {
    ++out.trials;
    bool rhs = true;
    for (std::uint64_t m = 0; m <= ctx.full && rhs; ++m) {
      rhs = subset_mask(ctx.image_mask(f, ctx.interior_mask[m]),
                        ctx.interior_mask[ctx.image_mask(f, m)]);
    }
    if (env.cache.info(f).open_map != rhs) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_continuous_closure_image(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (const auto& f : env.pool.fns) {
    if (!env.cache.info(f).continuous) continue;
    for (std::uint64_t m = 0; m <= ctx.full; ++m) {
      ++out.trials;
      if (!subset_mask(ctx.image_mask(f, ctx.closure_mask[m]),
                       ctx.closure_mask[ctx.image_mask(f, m)])) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"function", f.str()}, {"set", ctx.mask_json(m)}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_inverse_image(CheckEnv& env, bool closed_variant) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto& bits = closed_variant ? ctx.closed_bit : ctx.open_bit;
  for (const auto& f : env.pool.fns) {
    if (!env.cache.info(f).continuous) continue;
    for (std::uint64_t m = 0; m <= ctx.full; ++m) {
      if (!bits[m]) continue;
      ++out.trials;
      if (!bits[ctx.preimage_mask(f, m)]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"function", f.str()}, {"set", ctx.mask_json(m)}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_bijection_interior(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (const auto& f : env.pool.fns) {
    if (!f.injective() || !env.cache.info(f).continuous) continue;
    for (std::uint64_t m = 0; m <= ctx.full; ++m) {
      ++out.trials;
      if (!subset_mask(ctx.interior_mask[ctx.image_mask(f, m)],
                       ctx.image_mask(f, ctx.interior_mask[m]))) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"function", f.str()}, {"set", ctx.mask_json(m)}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_origin_continuity(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t factor = 0; factor < ctx.n; ++factor) {
    ++out.trials;
    const auto f = TabulatedFunction::multiplication(ctx.model, factor);
    const auto at_origin = check_continuity_at(ctx.method, f, ctx.model.zero());
    const auto everywhere = check_continuity(ctx.method, f);
    out.period = everywhere.complete_period_bound;
    if (at_origin.continuous != everywhere.continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()},
                     {"continuous_at_origin", at_origin.continuous},
                     {"continuous", everywhere.continuous}};
      if (!everywhere.continuous && everywhere.witness) {
        out.witness["sequence"] = everywhere.witness->str();
        out.witness["point"] = everywhere.witness_point->str();
      }
      return out;
    }
  }
  return out;
}

CheckOutcome chk_translation_maps(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t a = 0; a < ctx.n; ++a) {
    ++out.trials;
    const auto f = TabulatedFunction::translation(ctx.model, a);
    const auto& info = env.cache.info(f);
    if (!info.continuous || !info.open_map || !info.closed_map) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()},
                     {"continuous", info.continuous},
                     {"open_map", info.open_map},
                     {"closed_map", info.closed_map}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_sum_of_sets_open(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t a = 0; a <= ctx.full; ++a) {
    for (std::uint64_t b = 0; b <= ctx.full; ++b) {
      if (!ctx.open_bit[a] && !ctx.open_bit[b]) continue;
      ++out.trials;
      if (!ctx.open_bit[ctx.sum_mask(a, b)]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"a", ctx.mask_json(a)},
                       {"b", ctx.mask_json(b)},
                       {"sum", ctx.mask_json(ctx.sum_mask(a, b))}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_composition_continuity(CheckEnv& env) {
  CheckOutcome out;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    if (!env.cache.info(f).continuous || !env.cache.info(g).continuous) return false;
    if (!env.cache.info(g.composed_with(f)).continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"f", f.str()}, {"g", g.str()}};
      return true;
    }
    return false;
  });
  return out;
}

CheckOutcome chk_composition_open_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    const auto& fi = env.cache.info(f);
    const auto& gi = env.cache.info(g);
    if (!fi.open_map && !fi.closed_map) return false;
    const auto& hi = env.cache.info(g.composed_with(f));
    if (fi.open_map && gi.open_map && !hi.open_map) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"f", f.str()}, {"g", g.str()}, {"variant", "open"}};
      return true;
    }
    if (fi.closed_map && gi.closed_map && !hi.closed_map) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"f", f.str()}, {"g", g.str()}, {"variant", "closed"}};
      return true;
    }
    return false;
  });
  return out;
}

CheckOutcome chk_sum_continuity(CheckEnv& env) {
  CheckOutcome out;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    if (!env.cache.info(f).continuous || !env.cache.info(g).continuous) return false;
    if (!env.cache.info(f.plus(g)).continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"f", f.str()}, {"g", g.str()}};
      return true;
    }
    return false;
  });
  return out;
}

// The literal statement "f, g open implies f+g open". Observation only: the
// pointwise sum can collapse an open set (f=x, g=-x already does it on the
// line), so counterexamples are expected and recorded.
CheckOutcome chk_sum_open_observed(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    if (!env.cache.info(f).open_map || !env.cache.info(g).open_map) return false;
    const auto h = f.plus(g);
    if (env.cache.info(h).open_map) return false;
    for (std::uint64_t m = 0; m <= ctx.full; ++m) {
      if (ctx.open_bit[m] && !ctx.open_bit[ctx.image_mask(h, m)]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"f", f.str()}, {"g", g.str()}, {"set", ctx.mask_json(m)}};
        return true;
      }
    }
    return false;
  });
  if (out.status == CheckStatus::Verified) out.note = "statement held on every examined pair";
  return out;
}

CheckOutcome chk_composition_onto(CheckEnv& env, bool with_continuity) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    if (!f.surjective()) return false;
    if (with_continuity && !env.cache.info(f).continuous) return false;
    const auto& hi = env.cache.info(g.composed_with(f));
    const auto& gi = env.cache.info(g);
    auto report = [&](const char* variant, bool open_variant) {
      for (std::uint64_t m = 0; m <= ctx.full; ++m) {
        const auto& bits = open_variant ? ctx.open_bit : ctx.closed_bit;
        if (bits[m] && !bits[ctx.image_mask(g, m)]) {
          out.witness = {{"f", f.str()}, {"g", g.str()}, {"variant", variant},
                         {"set", ctx.mask_json(m)}};
          break;
        }
      }
      out.status = CheckStatus::CounterexampleFound;
    };
    if (hi.open_map && !gi.open_map) { report("open", true); return true; }
    if (hi.closed_map && !gi.closed_map) { report("closed", false); return true; }
    return false;
  });
  if (out.status == CheckStatus::Verified && !with_continuity)
    out.note = "statement held on every examined pair";
  return out;
}

CheckOutcome chk_composition_injective(CheckEnv& env, bool with_continuity) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  const auto& fns = env.pool.fns;
  out.trials = for_pairs(fns.size(), env.rng, 70000, [&](std::size_t i, std::size_t j) {
    const auto& f = fns[i];
    const auto& g = fns[j];
    if (!g.injective()) return false;
    if (with_continuity && !env.cache.info(g).continuous) return false;
    const auto& hi = env.cache.info(g.composed_with(f));
    const auto& fi = env.cache.info(f);
    auto report = [&](const char* variant, bool open_variant) {
      for (std::uint64_t m = 0; m <= ctx.full; ++m) {
        const auto& bits = open_variant ? ctx.open_bit : ctx.closed_bit;
        if (bits[m] && !bits[ctx.image_mask(f, m)]) {
          out.witness = {{"f", f.str()}, {"g", g.str()}, {"variant", variant},
                         {"set", ctx.mask_json(m)}};
          break;
        }
      }
      out.status = CheckStatus::CounterexampleFound;
    };
    if (hi.open_map && !fi.open_map) { report("open", true); return true; }
    if (hi.closed_map && !fi.closed_map) { report("closed", false); return true; }
    return false;
  });
  if (out.status == CheckStatus::Verified && !with_continuity)
    out.note = "statement held on every examined pair";
  return out;
}

CheckOutcome chk_standard_maps(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  auto fail = [&](const char* item, const TabulatedFunction& f) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"item", item}, {"function", f.str()}};
  };

  const auto id = TabulatedFunction::identity(ctx.model);
  const auto neg = TabulatedFunction::negation(ctx.model);
  ++out.trials;
  if (!env.cache.info(id).continuous) { fail("identity-continuous", id); return out; }
  ++out.trials;
  if (!env.cache.info(neg).continuous) { fail("negation-continuous", neg); return out; }
  ++out.trials;
  if (!env.cache.info(neg).closed_map) { fail("negation-closed-map", neg); return out; }

  // -f continuous whenever f is
  for (const auto& f : env.pool.fns) {
    if (!env.cache.info(f).continuous) continue;
    ++out.trials;
    if (!env.cache.info(f.negated()).continuous) { fail("negated-continuous", f); return out; }
  }

  // restriction to a subset keeps continuity; the inclusion map is the
  // identity restricted to the subset
  std::size_t sampled = 0;
  for (const auto& f : env.pool.fns) {
    if (!env.cache.info(f).continuous) continue;
    if (++sampled > 12) break;
    for (std::uint64_t m = 1; m <= ctx.full; ++m) {
      ++out.trials;
      if (!check_continuity_on(ctx.method, f, ctx.to_set(m)).continuous) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"item", "restriction"}, {"function", f.str()}, {"subset", ctx.mask_json(m)}};
        return out;
      }
    }
  }
  for (std::uint64_t m = 1; m <= ctx.full; ++m) {
    ++out.trials;
    if (!check_continuity_on(ctx.method, id, ctx.to_set(m)).continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"item", "inclusion"}, {"subset", ctx.mask_json(m)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_constant_maps_continuous(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t c = 0; c < ctx.n; ++c) {
    ++out.trials;
    const auto f = TabulatedFunction::constant(ctx.model, c);
    const auto result = check_continuity(ctx.method, f);
    if (!result.continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()},
                     {"sequence", result.witness->str()},
                     {"point", result.witness_point->str()}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_continuous_functions_group(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  ++out.trials;
  if (!env.cache.info(TabulatedFunction::constant(ctx.model, 0)).continuous) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"missing", "zero function not continuous"}};
    return out;
  }
  std::vector<std::size_t> cont;
  for (std::size_t i = 0; i < env.pool.fns.size(); ++i) {
    if (env.cache.info(env.pool.fns[i]).continuous) cont.push_back(i);
  }
  for (const auto i : cont) {
    ++out.trials;
    if (!env.cache.info(env.pool.fns[i].negated()).continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", env.pool.fns[i].str()}, {"missing", "inverse"}};
      return out;
    }
  }
  out.trials += for_pairs(cont.size(), env.rng, 70000, [&](std::size_t a, std::size_t b) {
    const auto& f = env.pool.fns[cont[a]];
    const auto& g = env.pool.fns[cont[b]];
    if (!env.cache.info(f.plus(g)).continuous) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"f", f.str()}, {"g", g.str()}, {"missing", "sum"}};
      return true;
    }
    return false;
  });
  return out;
}

CheckOutcome chk_kernel_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t factor = 0; factor < ctx.n; ++factor) {
    const auto f = TabulatedFunction::multiplication(ctx.model, factor);
    if (!env.cache.info(f).continuous) continue;
    std::uint64_t kernel = 0;
    for (std::uint64_t x = 0; x < ctx.n; ++x) {
      if (f(x) == 0) kernel |= std::uint64_t{1} << x;
    }
    ++out.trials;
    if (!ctx.closed_bit[kernel]) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"function", f.str()}, {"kernel", ctx.mask_json(kernel)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_equalizer_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t mf = 0; mf < ctx.n; ++mf) {
    const auto f = TabulatedFunction::multiplication(ctx.model, mf);
    if (!env.cache.info(f).continuous) continue;
    for (std::uint64_t mg = 0; mg < ctx.n; ++mg) {
      const auto g = TabulatedFunction::multiplication(ctx.model, mg);
      if (!env.cache.info(g).continuous) continue;
      std::uint64_t agree = 0;
      for (std::uint64_t x = 0; x < ctx.n; ++x) {
        if (f(x) == g(x)) agree |= std::uint64_t{1} << x;
      }
      ++out.trials;
      if (!ctx.closed_bit[agree]) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"f", f.str()}, {"g", g.str()}, {"equalizer", ctx.mask_json(agree)}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_subsequential_closures_match(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  // On a discrete universe the usual closure is the set itself, and the
  // method is subsequential exactly when no point is realizable from the
  // complementary alphabet.
  bool closures_trivial = true;
  for (std::uint64_t m = 0; m <= ctx.full && closures_trivial; ++m)
    closures_trivial = ctx.closure_mask[m] == m;
  bool subsequential = true;
  for (std::uint64_t x = 0; x < ctx.n && subsequential; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << x;
    subsequential = (ctx.closure_mask[ctx.full & ~bit] & bit) == 0;
  }
  out.trials = ctx.full + 1 + ctx.n;
  if (closures_trivial != subsequential) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"closures_trivial", closures_trivial}, {"subsequential", subsequential}};
    return out;
  }
  if (closures_trivial) {
    for (std::uint64_t m = 0; m <= ctx.full; ++m) {
      ++out.trials;
      if (ctx.interior_mask[m] != m) {
        out.status = CheckStatus::CounterexampleFound;
        out.witness = {{"set", ctx.mask_json(m)}, {"interior", ctx.mask_json(ctx.interior_mask[m])}};
        return out;
      }
    }
  }
  return out;
}

CheckOutcome chk_restricted_continuity_gap(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  std::size_t examined = 0;
  for (const auto& f : env.pool.fns) {
    if (env.cache.info(f).continuous) continue;
    if (++examined > 40) break;
    const auto global = check_continuity(ctx.method, f);
    for (std::uint64_t m = 1; m < ctx.full; ++m) {
      ++out.trials;
      if (check_continuity_on(ctx.method, f, ctx.to_set(m)).continuous) {
        out.status = CheckStatus::CounterexampleFound;  // the gap, exhibited
        out.witness = {{"function", f.str()},
                       {"subset", ctx.mask_json(m)},
                       {"sequence", global.witness->str()},
                       {"point", global.witness_point->str()}};
        out.note = "continuity on a subset is strictly weaker than continuity";
        return out;
      }
    }
  }
  out.note = "no function continuous on a proper subset but discontinuous globally";
  return out;
}

CheckOutcome chk_theorem1_closure_bounds(CheckEnv& env) {
  CheckOutcome out;
  const auto& ctx = env.ctx;
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const auto family = random_family(env.rng, {}, ctx.full);
    std::uint64_t join = 0, meet = ctx.full, join_cl = 0, meet_cl = ctx.full;
    std::uint64_t sum_sets = 1;  // {0} is the additive identity for set sums
    std::uint64_t sum_cls = 1;
    for (const auto m : family) {
      join |= m;
      meet &= m;
      join_cl |= ctx.closure_mask[m];
      meet_cl &= ctx.closure_mask[m];
      sum_sets = ctx.sum_mask(sum_sets, m);
      sum_cls = ctx.sum_mask(sum_cls, ctx.closure_mask[m]);
    }
    ++out.trials;
    if (!subset_mask(join_cl, ctx.closure_mask[join]) ||
        !subset_mask(ctx.closure_mask[meet], meet_cl) ||
        !subset_mask(sum_cls, ctx.closure_mask[sum_sets])) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"family", family_json(ctx, family)}};
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational-line checks (pinned instances; no finite complement available)

PointSet rational_set(const std::vector<Rational>& values) {
  const GroupModel q = GroupModel::rational_line();
  std::vector<GroupElement> elems;
  elems.reserve(values.size());
  for (const auto& v : values) elems.push_back(q.from_rational(v));
  return PointSet(q, std::move(elems));
}

PointSet random_rational_set(Rng& rng) {
  std::vector<Rational> values;
  const std::size_t size = 1 + rng.below(4);
  for (std::size_t i = 0; i < size; ++i) {
    const long long num = static_cast<long long>(rng.below(17)) - 8;
    const long long den = 1 + static_cast<long long>(rng.below(4));
    values.push_back(Rational(num) / Rational(den));
  }
  return rational_set(values);
}

nlohmann::json set_json(const PointSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : set.elements()) arr.push_back(e.str());
  return arr;
}

CheckOutcome chk_q_regular_containment(CheckEnv& env) {
  CheckOutcome out;
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const PointSet a = random_rational_set(env.rng);
    ++out.trials;
    if (!a.subset_of(closure(env.ctx.method, a, env.ctx.topt).points)) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", set_json(a)}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_q_theorem1(CheckEnv& env) {
  CheckOutcome out;
  const auto& method = env.ctx.method;
  const auto& topt = env.ctx.topt;
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) {
    const std::size_t size = 2 + env.rng.below(2);
    std::vector<PointSet> family;
    for (std::size_t i = 0; i < size; ++i) family.push_back(random_rational_set(env.rng));

    PointSet join = family[0], meet = family[0], sum_sets = family[0];
    PointSet join_cl = closure(method, family[0], topt).points;
    PointSet meet_cl = join_cl, sum_cls = join_cl;
    for (std::size_t i = 1; i < family.size(); ++i) {
      const PointSet cl = closure(method, family[i], topt).points;
      join = set_union(join, family[i]);
      meet = set_intersection(meet, family[i]);
      sum_sets = set_sum(sum_sets, family[i]);
      join_cl = set_union(join_cl, cl);
      meet_cl = set_intersection(meet_cl, cl);
      sum_cls = set_sum(sum_cls, cl);
    }
    ++out.trials;
    if (!join_cl.subset_of(closure(method, join, topt).points) ||
        !closure(method, meet, topt).points.subset_of(meet_cl) ||
        !sum_cls.subset_of(closure(method, sum_sets, topt).points)) {
      out.status = CheckStatus::CounterexampleFound;
      nlohmann::json fam = nlohmann::json::array();
      for (const auto& s : family) fam.push_back(set_json(s));
      out.witness = {{"family", fam}};
      return out;
    }
  }
  return out;
}

CheckOutcome chk_q_union_of_closed(CheckEnv& env) {
  CheckOutcome out;
  const auto& method = env.ctx.method;
  const auto& topt = env.ctx.topt;
  const PointSet a = rational_set({Rational(0)});
  const PointSet b = rational_set({Rational(1)});
  out.trials = 1;
  if (is_closed(method, a, topt) && is_closed(method, b, topt) &&
      !is_closed(method, set_union(a, b), topt)) {
    out.status = CheckStatus::CounterexampleFound;
    out.witness = {{"a", set_json(a)},
                   {"b", set_json(b)},
                   {"union_closure", set_json(closure(method, set_union(a, b), topt).points)}};
    return out;
  }
  out.note = "pinned pair produced no counterexample for this method";
  return out;
}

CheckOutcome chk_q_closure_idempotence(CheckEnv& env) {
  CheckOutcome out;
  const auto& method = env.ctx.method;
  const auto& topt = env.ctx.topt;
  std::vector<PointSet> candidates{rational_set({Rational(0), Rational(1)})};
  for (std::uint64_t t = 0; t < env.opts.trials; ++t) candidates.push_back(random_rational_set(env.rng));
  for (const auto& a : candidates) {
    ++out.trials;
    const PointSet once = closure(method, a, topt).points;
    const PointSet twice = closure(method, once, topt).points;
    if (once != twice) {
      out.status = CheckStatus::CounterexampleFound;
      out.witness = {{"set", set_json(a)}, {"closure", set_json(once)}, {"second", set_json(twice)}};
      return out;
    }
  }
  out.note = "no counterexample on the examined sets";
  return out;
}

// ---------------------------------------------------------------------------
// Check table and driver

struct CheckSpec {
  const char* name;
  Expectation expectation;
  bool regular_gated;
  std::function<CheckOutcome(CheckEnv&)> cyclic_fn;
  std::function<CheckOutcome(CheckEnv&)> rational_fn;  // empty: skip on q
};

const std::vector<CheckSpec>& check_table() {
  static const std::vector<CheckSpec> table = {
      {"regular-containment", Expectation::Holds, true, chk_regular_containment, chk_q_regular_containment},
      {"closure-empty", Expectation::Holds, false, chk_closure_empty, {}},
      {"closure-universe", Expectation::Holds, true, chk_closure_universe, {}},
      {"intersections-closed", Expectation::Holds, false, chk_intersections_closed, {}},
      {"unions-open", Expectation::Holds, false, chk_unions_open, {}},
      {"open-iff-neighborhoods", Expectation::Holds, false, chk_open_iff_neighborhoods, {}},
      {"interior-properties", Expectation::Holds, false, chk_interior_properties, {}},
      {"interior-of-families", Expectation::Holds, false, chk_interior_of_families, {}},
      {"complement-interior", Expectation::Holds, false, chk_complement_interior, {}},
      {"boundary-bound", Expectation::Holds, false, chk_boundary_bound, {}},
      {"closure-vs-closed-supersets", Expectation::Holds, true, chk_closure_vs_closed_supersets, {}},
      {"neighborhood-meets", Expectation::Holds, true, chk_neighborhood_meets, {}},
      {"dense-meets-open", Expectation::Holds, true, chk_dense_meets_open, {}},
      {"union-of-closed", Expectation::Falsifiable, false, chk_union_of_closed, chk_q_union_of_closed},
      {"closure-idempotence", Expectation::Falsifiable, false, chk_closure_idempotence, chk_q_closure_idempotence},
      {"interior-intersection-equality", Expectation::Falsifiable, false, chk_interior_intersection_equality, {}},
      {"closed-map-criterion", Expectation::Holds, true, chk_closed_map_criterion, {}},
      {"open-map-iff", Expectation::Holds, false, chk_open_map_iff, {}},
      {"continuous-closure-image", Expectation::Holds, true, chk_continuous_closure_image, {}},
      {"inverse-image-closed", Expectation::Holds, true,
       [](CheckEnv& env) { return chk_inverse_image(env, true); }, {}},
      {"inverse-image-open", Expectation::Holds, true,
       [](CheckEnv& env) { return chk_inverse_image(env, false); }, {}},
      {"bijection-interior", Expectation::Holds, false, chk_bijection_interior, {}},
      {"origin-continuity", Expectation::Holds, true, chk_origin_continuity, {}},
      {"translation-maps", Expectation::Holds, true, chk_translation_maps, {}},
      {"sum-of-sets-open", Expectation::Holds, true, chk_sum_of_sets_open, {}},
      {"composition-continuity", Expectation::Holds, false, chk_composition_continuity, {}},
      {"composition-open-closed", Expectation::Holds, false, chk_composition_open_closed, {}},
      {"sum-continuity", Expectation::Holds, false, chk_sum_continuity, {}},
      {"sum-open-stated", Expectation::Observe, false, chk_sum_open_observed, {}},
      {"composition-onto-stated", Expectation::Observe, false,
       [](CheckEnv& env) { return chk_composition_onto(env, false); }, {}},
      {"composition-onto-with-continuity", Expectation::Holds, false,
       [](CheckEnv& env) { return chk_composition_onto(env, true); }, {}},
      {"composition-injective-stated", Expectation::Observe, false,
       [](CheckEnv& env) { return chk_composition_injective(env, false); }, {}},
      {"composition-injective-with-continuity", Expectation::Holds, false,
       [](CheckEnv& env) { return chk_composition_injective(env, true); }, {}},
      {"standard-maps", Expectation::Holds, false, chk_standard_maps, {}},
      {"constant-maps-continuous", Expectation::Holds, true, chk_constant_maps_continuous, {}},
      {"continuous-functions-group", Expectation::Holds, true, chk_continuous_functions_group, {}},
      {"kernel-closed", Expectation::Holds, true, chk_kernel_closed, {}},
      {"equalizer-closed", Expectation::Holds, true, chk_equalizer_closed, {}},
      {"subsequential-closures-match", Expectation::Holds, true, chk_subsequential_closures_match, {}},
      {"restricted-continuity-gap", Expectation::Observe, false, chk_restricted_continuity_gap, {}},
      {"theorem1-closure-bounds", Expectation::Holds, true, chk_theorem1_closure_bounds, chk_q_theorem1},
  };
  return table;
}

Rng check_rng(const SuiteOptions& opts, const CheckSpec& spec, const std::string& universe,
              const std::string& method) {
  return Rng(opts.seed ^ fnv1a(std::string(spec.name) + "|" + universe + "|" + method));
}

}  // namespace

std::vector<MethodDescriptor> integer_kernel_family(std::size_t max_width, long long bound) {
  std::vector<MethodDescriptor> methods;
  for (std::size_t width = 1; width <= max_width; ++width) {
    std::vector<long long> digits(width, -bound);
    while (true) {
      std::vector<Rational> coeffs(digits.begin(), digits.end());
      methods.push_back(MethodDescriptor::kernel(std::move(coeffs)));
      std::size_t i = 0;
      while (i < width && digits[i] == bound) digits[i++] = -bound;
      if (i == width) break;
      ++digits[i];
    }
  }
  return methods;
}

std::vector<VerificationReport> run_suite(const GroupModel& universe,
                                          const std::vector<MethodDescriptor>& methods,
                                          const SuiteOptions& options) {
  if (universe.is_cyclic() && universe.modulus() > options.topology.universe_cap)
    throw std::invalid_argument("universe too large for the verification suite (cap " +
                                std::to_string(options.topology.universe_cap) + ")");

  std::vector<VerificationReport> reports;
  for (const auto& method : methods) {
    const std::string method_str = method.str();
    const bool rational = !universe.is_cyclic();

    MaskContext ctx;
    if (universe.is_cyclic()) {
      ctx = build_mask_context(universe, method, options.topology);
    } else {
      ctx.model = universe;
      ctx.method = method;
      ctx.topt = options.topology;
      ctx.universe_str = universe.str();
      ctx.method_str = method_str;
      ctx.regular = is_regular(method);
      ctx.supported = method.kind() == MethodDescriptor::Kind::Lim ||
                      method.kind() == MethodDescriptor::Kind::Kernel;
      if (!ctx.supported)
        ctx.unsupported_reason = "closure undecidable for " + method_str + " on q";
      else if (method.kind() == MethodDescriptor::Kind::Kernel) {
        // rational coefficients are native here
      }
    }

    FunctionCache cache(ctx);
    FunctionPool pool;
    if (universe.is_cyclic() && ctx.supported) {
      Rng pool_rng(options.seed ^ fnv1a("pool|" + ctx.universe_str + "|" + method_str));
      pool = build_pool(ctx, pool_rng, options.trials);
    }

    for (const auto& spec : check_table()) {
      VerificationReport report;
      report.check = spec.name;
      report.universe = ctx.universe_str;
      report.method = method_str;
      report.expectation = spec.expectation;
      if (spec.expectation == Expectation::Holds && spec.regular_gated && !ctx.regular)
        report.expectation = Expectation::Observe;

      const auto& fn = rational ? spec.rational_fn : spec.cyclic_fn;
      if (!fn) {
        report.status = CheckStatus::Skipped;
        report.note = "requires a finite universe";
      } else if (!ctx.supported) {
        report.status = CheckStatus::Skipped;
        report.note = ctx.unsupported_reason;
      } else {
        CheckEnv env{ctx, cache, pool, options, check_rng(options, spec, ctx.universe_str, method_str)};
        CheckOutcome outcome = fn(env);
        report.status = outcome.status;
        report.witness = std::move(outcome.witness);
        report.trials = outcome.trials;
        report.note = std::move(outcome.note);
        report.verified_up_to_period = outcome.period;
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  bool holds_ok = true;
  std::vector<std::string> falsifiable_names;
  for (const auto& r : reports) {
    if (r.expectation == Expectation::Holds && r.status == CheckStatus::CounterexampleFound)
      holds_ok = false;
    if (r.expectation == Expectation::Falsifiable) falsifiable_names.push_back(r.check);
  }
  std::sort(falsifiable_names.begin(), falsifiable_names.end());
  falsifiable_names.erase(std::unique(falsifiable_names.begin(), falsifiable_names.end()),
                          falsifiable_names.end());
  for (const auto& name : falsifiable_names) {
    const bool witnessed =
        std::any_of(reports.begin(), reports.end(), [&](const VerificationReport& r) {
          return r.check == name && r.expectation == Expectation::Falsifiable &&
                 r.status == CheckStatus::CounterexampleFound;
        });
    if (!witnessed) return false;
  }
  return holds_ok;
}

std::string report_line(const VerificationReport& report) {
  nlohmann::json doc;
  doc["check"] = report.check;
  doc["universe"] = report.universe;
  doc["method"] = report.method;
  doc["expectation"] = to_string(report.expectation);
  doc["status"] = to_string(report.status);
  doc["trials"] = report.trials;
  if (!report.witness.is_null()) doc["witness"] = report.witness;
  if (report.verified_up_to_period) doc["verified_up_to_period"] = *report.verified_up_to_period;
  if (!report.note.empty()) doc["note"] = report.note;
  return doc.dump();
}

std::string report_stream(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += report_line(r);
    out += "\n";
  }
  return out;
}

namespace {

PointSet set_from_json(const GroupModel& model, const nlohmann::json& arr) {
  std::vector<GroupElement> elems;
  for (const auto& item : arr) elems.push_back(model.parse_element(item.get<std::string>()));
  return PointSet(model, std::move(elems));
}

bool replay_continuity_failure(const MethodDescriptor& method, const GroupModel& model,
                               const nlohmann::json& witness) {
  const auto f = TabulatedFunction::parse(model, witness.at("function").get<std::string>());
  const auto x = EvPerSeq::parse(witness.at("sequence").get<std::string>(), model);
  const auto point = model.parse_element(witness.at("point").get<std::string>());
  const auto value = evaluate(method, x);
  if (!value || *value != point) return false;
  const auto mapped = evaluate(method, x.map([&](const GroupElement& e) { return f.apply(e); }));
  return !mapped || *mapped != f.apply(point);
}

}  // namespace

bool replay_witness(const VerificationReport& report) {
  if (report.witness.is_null()) return false;
  const GroupModel model = GroupModel::parse(report.universe);
  const MethodDescriptor method = MethodDescriptor::parse(report.method);
  const TopologyOptions topt;
  const auto& w = report.witness;

  if (report.check == "union-of-closed") {
    const PointSet a = set_from_json(model, w.at("a"));
    const PointSet b = set_from_json(model, w.at("b"));
    return is_closed(method, a, topt) && is_closed(method, b, topt) &&
           !is_closed(method, set_union(a, b), topt);
  }
  if (report.check == "closure-idempotence") {
    const PointSet a = set_from_json(model, w.at("set"));
    const PointSet once = closure(method, a, topt).points;
    return closure(method, once, topt).points != once;
  }
  if (report.check == "interior-intersection-equality") {
    PointSet meet = model.is_cyclic() ? PointSet(model, model.universe()) : PointSet::empty(model);
    for (const auto& arr : w.at("family")) meet = set_intersection(meet, set_from_json(model, arr));
    PointSet rhs = PointSet(model, model.universe());
    bool first = true;
    for (const auto& arr : w.at("family")) {
      const PointSet ia = interior(method, set_from_json(model, arr), topt);
      rhs = first ? ia : set_intersection(rhs, ia);
      first = false;
    }
    const PointSet lhs = interior(method, meet, topt);
    return lhs != rhs && lhs.subset_of(rhs);
  }
  if (report.check == "restricted-continuity-gap") {
    const auto f = TabulatedFunction::parse(model, w.at("function").get<std::string>());
    const PointSet subset = set_from_json(model, w.at("subset"));
    return check_continuity_on(method, f, subset).continuous &&
           replay_continuity_failure(method, model, w);
  }
  if (report.check == "sum-open-stated") {
    const auto f = TabulatedFunction::parse(model, w.at("f").get<std::string>());
    const auto g = TabulatedFunction::parse(model, w.at("g").get<std::string>());
    const PointSet set = set_from_json(model, w.at("set"));
    return check_open_map(method, f, topt).holds && check_open_map(method, g, topt).holds &&
           is_open(method, set, topt) && !is_open(method, image_set(f.plus(g), set), topt);
  }
  if (report.check == "composition-onto-stated" || report.check == "composition-injective-stated") {
    const auto f = TabulatedFunction::parse(model, w.at("f").get<std::string>());
    const auto g = TabulatedFunction::parse(model, w.at("g").get<std::string>());
    const bool open_variant = w.at("variant").get<std::string>() == "open";
    const auto h = g.composed_with(f);
    const auto premise = open_variant ? check_open_map(method, h, topt) : check_closed_map(method, h, topt);
    if (!premise.holds) return false;
    const PointSet set = set_from_json(model, w.at("set"));
    const bool set_ok = open_variant ? is_open(method, set, topt) : is_closed(method, set, topt);
    if (!set_ok) return false;
    const auto& target = report.check == "composition-onto-stated" ? g : f;
    if (report.check == "composition-onto-stated" && !f.surjective()) return false;
    if (report.check == "composition-injective-stated" && !g.injective()) return false;
    const PointSet img = image_set(target, set);
    return open_variant ? !is_open(method, img, topt) : !is_closed(method, img, topt);
  }
  if (w.contains("function") && w.contains("sequence") && w.contains("point"))
    return replay_continuity_failure(method, model, w);
  return false;
}

}  // namespace gseq
