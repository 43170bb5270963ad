#include "gseq/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gseq {

PointSet::PointSet(GroupModel model, std::vector<GroupElement> elements)
    : model_(model), elements_(std::move(elements)) {
  for (const auto& e : elements_) require_same_model(e.model(), model_);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PointSet::contains(const GroupElement& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool PointSet::subset_of(const PointSet& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const GroupElement& e) { return other.contains(e); });
}

PointSet PointSet::complement() const {
  if (!model_.is_cyclic())
    throw std::domain_error("complement needs a finite universe; the rational line has none");
  std::vector<GroupElement> rest;
  for (const auto& e : model_.universe()) {
    if (!contains(e)) rest.push_back(e);
  }
  return PointSet(model_, std::move(rest));
}

std::string PointSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += elements_[i].str();
  }
  return out + "}";
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_model(a.model(), b.model());
  std::vector<GroupElement> all = a.elements();
  all.insert(all.end(), b.elements().begin(), b.elements().end());
  return PointSet(a.model(), std::move(all));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_same_model(a.model(), b.model());
  std::vector<GroupElement> both;
  for (const auto& e : a.elements()) {
    if (b.contains(e)) both.push_back(e);
  }
  return PointSet(a.model(), std::move(both));
}

PointSet set_sum(const PointSet& a, const PointSet& b) {
  require_same_model(a.model(), b.model());
  std::vector<GroupElement> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) sums.push_back(x + y);
  }
  return PointSet(a.model(), std::move(sums));
}

WindowGraph::WindowGraph(GroupModel model, std::vector<GroupElement> alphabet,
                         std::vector<Rational> coefficients)
    : model_(model), alphabet_(std::move(alphabet)), coefficients_(std::move(coefficients)) {
  if (alphabet_.empty()) return;  // empty alphabet: no nodes, nothing realizable
  if (coefficients_.empty()) throw std::invalid_argument("window graph needs kernel coefficients");

  std::size_t count = 1;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (count > (std::size_t{1} << 22) / alphabet_.size())
      throw std::domain_error("window graph too large: |alphabet|^width exceeds the node budget");
    count *= alphabet_.size();
  }
  shift_unit_ = count / alphabet_.size();

  values_.reserve(count);
  for (std::size_t node = 0; node < count; ++node) {
    GroupElement acc = model_.zero();
    std::size_t rest = node;
    for (std::size_t j = 0; j < coefficients_.size(); ++j) {
      acc = acc + alphabet_[rest % alphabet_.size()].scaled(coefficients_[j]);
      rest /= alphabet_.size();
    }
    values_.push_back(acc);
  }
}

std::vector<std::size_t> WindowGraph::tuple(std::size_t node) const {
  std::vector<std::size_t> out(width());
  for (std::size_t j = 0; j < width(); ++j) {
    out[j] = node % alphabet_.size();
    node /= alphabet_.size();
  }
  return out;
}

std::map<GroupElement, std::vector<std::size_t>> WindowGraph::nodes_by_value() const {
  std::map<GroupElement, std::vector<std::size_t>> groups;
  for (std::size_t node = 0; node < values_.size(); ++node) groups[values_[node]].push_back(node);
  return groups;
}

bool WindowGraph::has_cycle(const std::vector<char>& member,
                            const std::vector<std::size_t>& nodes) const {
  // Three-color DFS over the induced subgraph.
  enum : char { White = 0, Grey = 1, Black = 2 };
  std::vector<char> color(node_count(), White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next symbol
  for (const std::size_t start : nodes) {
    if (!member[start] || color[start] != White) continue;
    color[start] = Grey;
    stack.clear();
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [node, symbol] = stack.back();
      if (symbol == alphabet_.size()) {
        color[node] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t next = successor(node, symbol++);
      if (!member[next]) continue;
      if (color[next] == Grey) return true;
      if (color[next] == White) {
        color[next] = Grey;
        stack.emplace_back(next, 0);
      }
    }
  }
  return false;
}

std::vector<std::size_t> WindowGraph::cycle_through(const std::vector<char>& member,
                                                    std::size_t node) const {
  if (!member[node]) return {};
  // BFS from the successors of `node` back to `node`, inside the subgraph.
  std::vector<std::size_t> parent(node_count(), node_count());
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < alphabet_.size(); ++s) {
    const std::size_t next = successor(node, s);
    if (!member[next]) continue;
    if (next == node) return {node};  // self-loop
    if (parent[next] == node_count()) {
      parent[next] = node;
      queue.push_back(next);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t s = 0; s < alphabet_.size(); ++s) {
      const std::size_t next = successor(cur, s);
      if (!member[next]) continue;
      if (next == node) {
        std::vector<std::size_t> path{cur};
        while (path.back() != node) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());  // node, ..., cur
        return path;
      }
      if (parent[next] == node_count()) {
        parent[next] = cur;
        queue.push_back(next);
      }
    }
  }
  return {};
}

EvPerSeq WindowGraph::walk_sequence(const std::vector<std::size_t>& cycle_nodes) const {
  if (cycle_nodes.empty()) throw std::invalid_argument("empty walk");
  std::vector<GroupElement> cyc;
  cyc.reserve(cycle_nodes.size());
  for (const std::size_t node : cycle_nodes) cyc.push_back(alphabet_[node % alphabet_.size()]);
  return EvPerSeq(model_, {}, std::move(cyc));
}

namespace {

ClosureResult kernel_closure(const MethodDescriptor& method, const PointSet& set,
                             const TopologyOptions& options) {
  require_compatible(method, set.model());
  WindowGraph graph(set.model(), set.elements(), method.coefficients());
  if (graph.node_count() > options.max_nodes)
    throw std::domain_error("closure alphabet too large for the window graph");

  std::vector<GroupElement> realized;
  std::vector<char> member(graph.node_count(), 0);
  for (const auto& [value, nodes] : graph.nodes_by_value()) {
    for (const std::size_t node : nodes) member[node] = 1;
    if (graph.has_cycle(member, nodes)) realized.push_back(value);
    for (const std::size_t node : nodes) member[node] = 0;
  }
  return ClosureResult{PointSet(set.model(), std::move(realized)), true};
}

// Means of nonempty multisets over the set with size <= bound. The exact
// Cesaro closure on the line is an interval-like continuum, so this stays a
// declared lower approximation.
ClosureResult cesaro_closure(const PointSet& set, const TopologyOptions& options) {
  if (set.model().is_cyclic()) throw std::domain_error("cesaro closure requires the rational line");
  std::vector<GroupElement> means;
  std::vector<std::size_t> counts(set.size(), 0);
  // Enumerate multiset compositions of each total size.
  for (std::size_t total = 1; total <= options.cesaro_cycle_bound && !set.is_empty(); ++total) {
    std::fill(counts.begin(), counts.end(), 0);
    counts[0] = total;
    while (true) {
      Rational sum(0);
      for (std::size_t i = 0; i < set.size(); ++i) {
        sum += set.elements()[i].rational() * Rational(static_cast<long long>(counts[i]));
      }
      means.push_back(set.model().from_rational(sum / Rational(static_cast<long long>(total))));
      // next composition of `total` into |set| parts
      std::size_t i = 0;
      while (i + 1 < set.size() && counts[i] == 0) ++i;
      if (i + 1 >= set.size()) break;
      const std::size_t head = counts[i];
      counts[i] = 0;
      counts[0] = head - 1;
      ++counts[i + 1];
    }
  }
  return ClosureResult{PointSet(set.model(), std::move(means)), false};
}

}  // namespace

ClosureResult closure(const MethodDescriptor& method, const PointSet& set,
                      const TopologyOptions& options) {
  switch (method.kind()) {
    case MethodDescriptor::Kind::Lim:
      // Only eventually-constant sequences converge, so exactly A is realized.
      return ClosureResult{set, true};
    case MethodDescriptor::Kind::Kernel:
      return kernel_closure(method, set, options);
    case MethodDescriptor::Kind::Cesaro:
      return cesaro_closure(set, options);
    case MethodDescriptor::Kind::Sum:
      throw std::domain_error("closure is not implemented for sum methods");
  }
  throw std::domain_error("unreachable method kind");
}

std::vector<ClosureResult> closure_iterate(const MethodDescriptor& method, const PointSet& set,
                                           std::size_t k, const TopologyOptions& options) {
  if (k < 1) throw std::invalid_argument("closure iteration count must be >= 1");
  std::vector<ClosureResult> steps;
  steps.reserve(k);
  PointSet current = set;
  for (std::size_t i = 0; i < k; ++i) {
    steps.push_back(closure(method, current, options));
    current = steps.back().points;
  }
  return steps;
}

namespace {

void require_exact_closure(const MethodDescriptor& method) {
  if (method.kind() == MethodDescriptor::Kind::Cesaro)
    throw std::domain_error("cesaro closure is only a lower approximation; closedness is undecidable here");
  if (method.kind() == MethodDescriptor::Kind::Sum)
    throw std::domain_error("closure is not implemented for sum methods");
}

void require_finite_universe(const PointSet& set, const char* what) {
  if (!set.model().is_cyclic())
    throw std::domain_error(std::string(what) + " needs a finite universe (cyclic groups only)");
}

}  // namespace

bool is_closed(const MethodDescriptor& method, const PointSet& set, const TopologyOptions& options) {
  require_exact_closure(method);
  return closure(method, set, options).points.subset_of(set);
}

bool is_open(const MethodDescriptor& method, const PointSet& set, const TopologyOptions& options) {
  require_finite_universe(set, "openness");
  return is_closed(method, set.complement(), options);
}

PointSet interior(const MethodDescriptor& method, const PointSet& set, const TopologyOptions& options) {
  require_finite_universe(set, "interior");
  require_exact_closure(method);
  const std::size_t n = set.model().modulus();
  if (n > options.universe_cap)
    throw std::domain_error("universe too large for interior enumeration (cap " +
                            std::to_string(options.universe_cap) + ")");
  const auto points = set.elements();
  std::vector<GroupElement> inside;
  // Union of all open subsets of A over the 2^|A| candidates.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points.size()); ++mask) {
    std::vector<GroupElement> subset;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(points[i]);
    }
    PointSet candidate(set.model(), std::move(subset));
    if (is_open(method, candidate, options)) {
      for (const auto& e : candidate.elements()) inside.push_back(e);
    }
  }
  return PointSet(set.model(), std::move(inside));
}

PointSet boundary(const MethodDescriptor& method, const PointSet& set, const TopologyOptions& options) {
  require_finite_universe(set, "boundary");
  require_exact_closure(method);
  return set_intersection(closure(method, set, options).points,
                          closure(method, set.complement(), options).points);
}

bool is_dense(const MethodDescriptor& method, const PointSet& set, const TopologyOptions& options) {
  require_finite_universe(set, "density in the universe");
  require_exact_closure(method);
  return closure(method, set, options).points.size() == set.model().modulus();
}

}  // namespace gseq
