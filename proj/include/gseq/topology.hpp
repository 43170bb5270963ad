#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gseq/method.hpp"

namespace gseq {

// A finite set of points of one group model, deduplicated and kept in the
// model's total order so that outputs are reproducible byte for byte.
class PointSet {
 public:
  PointSet(GroupModel model, std::vector<GroupElement> elements);
  static PointSet empty(const GroupModel& model) { return PointSet(model, {}); }

  const GroupModel& model() const { return model_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_empty() const { return elements_.empty(); }
  bool contains(const GroupElement& e) const;
  bool subset_of(const PointSet& other) const;

  PointSet complement() const;  // cyclic universes only

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.model_ == b.model_ && a.elements_ == b.elements_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

  std::string str() const;  // "{0, 1/2, 1}"

 private:
  GroupModel model_;
  std::vector<GroupElement> elements_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
// Elementwise (Minkowski) sum {a + b : a in A, b in B}.
PointSet set_sum(const PointSet& a, const PointSet& b);

// The de Bruijn style graph that decides kernel closures. Nodes are the
// w-tuples over a finite alphabet; the edge t -> t' exists when t' is t
// shifted left by one with any new last symbol. Infinite walks correspond
// exactly to sequences valued in the alphabet, and the kernel value of a
// window is a function of the node, so "G(x) = v eventually" becomes "the
// walk eventually stays on nodes of value v".
class WindowGraph {
 public:
  WindowGraph(GroupModel model, std::vector<GroupElement> alphabet, std::vector<Rational> coefficients);

  std::size_t alphabet_size() const { return alphabet_.size(); }
  std::size_t width() const { return coefficients_.size(); }
  std::size_t node_count() const { return values_.size(); }
  const std::vector<GroupElement>& alphabet() const { return alphabet_; }

  const GroupElement& value(std::size_t node) const { return values_[node]; }
  std::size_t successor(std::size_t node, std::size_t symbol) const {
    return node / alphabet_.size() + symbol * shift_unit_;
  }
  // Alphabet indices of the window, oldest symbol first.
  std::vector<std::size_t> tuple(std::size_t node) const;

  // Distinct window values with the nodes carrying each.
  std::map<GroupElement, std::vector<std::size_t>> nodes_by_value() const;

  // True when the subgraph induced on `member` nodes contains a directed
  // cycle; `nodes` lists exactly the member nodes. A cycle of value-v nodes
  // yields a periodic sequence with G-value v; conversely the nodes an
  // infinite walk visits infinitely often span a strongly connected
  // subgraph, so any realizing sequence yields a cycle of period at most
  // node_count(). That pigeonhole bound makes the search complete.
  bool has_cycle(const std::vector<char>& member, const std::vector<std::size_t>& nodes) const;

  // A closed walk through `node` inside the induced subgraph, as the list of
  // nodes visited (first == last omitted); empty if the node is on no cycle.
  std::vector<std::size_t> cycle_through(const std::vector<char>& member, std::size_t node) const;

  // The periodic sequence traced by a closed walk (first coordinates).
  EvPerSeq walk_sequence(const std::vector<std::size_t>& cycle_nodes) const;

 private:
  GroupModel model_;
  std::vector<GroupElement> alphabet_;
  std::vector<Rational> coefficients_;
  std::vector<GroupElement> values_;
  std::size_t shift_unit_ = 0;  // |alphabet|^(w-1)
};

struct TopologyOptions {
  // Cesaro closures enumerate cycle multisets up to this length.
  std::size_t cesaro_cycle_bound = 6;
  // Interior enumeration refuses universes larger than this.
  std::size_t universe_cap = 6;
  // Safety valve for |alphabet|^width node spaces.
  std::size_t max_nodes = std::size_t{1} << 22;
};

struct ClosureResult {
  PointSet points;
  // False only for Cesaro, whose exact closure is not a finite set; the
  // returned points are a lower approximation.
  bool complete = true;
};

// All G-values realizable by sequences valued in A. Exact for Lim (the set
// itself) and for kernels (window-graph cycle detection per candidate
// value); a flagged lower approximation for Cesaro.
ClosureResult closure(const MethodDescriptor& method, const PointSet& set,
                      const TopologyOptions& options = {});

// k successive closures, each feeding the next.
std::vector<ClosureResult> closure_iterate(const MethodDescriptor& method, const PointSet& set,
                                           std::size_t k, const TopologyOptions& options = {});

// closure(A) inside A. Requires a method with exact closure (Lim or Kernel).
bool is_closed(const MethodDescriptor& method, const PointSet& set,
               const TopologyOptions& options = {});

// Complement closed. The complement must be finite, so cyclic universes only.
bool is_open(const MethodDescriptor& method, const PointSet& set,
             const TopologyOptions& options = {});

// Union of all open subsets of A, by exhaustive subset enumeration.
PointSet interior(const MethodDescriptor& method, const PointSet& set,
                  const TopologyOptions& options = {});

// closure(A) intersected with closure(complement of A).
PointSet boundary(const MethodDescriptor& method, const PointSet& set,
                  const TopologyOptions& options = {});

// closure(A) = X.
bool is_dense(const MethodDescriptor& method, const PointSet& set,
              const TopologyOptions& options = {});

}  // namespace gseq
