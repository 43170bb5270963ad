#include "gseq/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gseq {

namespace {

// Length of the shortest word whose repetition equals `cycle`.
std::size_t primitive_period(const std::vector<GroupElement>& cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < len && repeats; ++i) repeats = cycle[i] == cycle[i - d];
    if (repeats) return d;
  }
  return len;
}

}  // namespace

EvPerSeq::EvPerSeq(GroupModel model, std::vector<GroupElement> preamble, std::vector<GroupElement> cycle)
    : model_(model), preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (const auto& e : preamble_) require_same_model(e.model(), model_);
  for (const auto& e : cycle_) require_same_model(e.model(), model_);
  canonicalize();
}

void EvPerSeq::canonicalize() {
  cycle_.erase(cycle_.begin() + static_cast<std::ptrdiff_t>(primitive_period(cycle_)), cycle_.end());
  // Absorb preamble terms that the (suitably rotated) cycle already produces.
  while (!preamble_.empty() && preamble_.back() == cycle_.back()) {
    preamble_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

EvPerSeq EvPerSeq::constant(const GroupElement& value) {
  return EvPerSeq(value.model(), {}, {value});
}

GroupElement EvPerSeq::term(std::size_t n) const {
  if (n < preamble_.size()) return preamble_[n];
  return cycle_[(n - preamble_.size()) % cycle_.size()];
}

EvPerSeq EvPerSeq::dropped_first() const {
  if (!preamble_.empty())
    return EvPerSeq(model_, {preamble_.begin() + 1, preamble_.end()}, cycle_);
  std::vector<GroupElement> rotated(cycle_.begin() + 1, cycle_.end());
  rotated.push_back(cycle_.front());
  return EvPerSeq(model_, {}, std::move(rotated));
}

EvPerSeq EvPerSeq::map(const std::function<GroupElement(const GroupElement&)>& f) const {
  std::vector<GroupElement> pre;
  pre.reserve(preamble_.size());
  for (const auto& e : preamble_) pre.push_back(f(e));
  std::vector<GroupElement> cyc;
  cyc.reserve(cycle_.size());
  for (const auto& e : cycle_) cyc.push_back(f(e));
  return EvPerSeq(model_, std::move(pre), std::move(cyc));
}

EvPerSeq operator+(const EvPerSeq& a, const EvPerSeq& b) {
  require_same_model(a.model_, b.model_);
  const std::size_t pre_len = std::max(a.preamble_.size(), b.preamble_.size());
  const std::size_t period = std::lcm(a.period(), b.period());
  std::vector<GroupElement> pre;
  pre.reserve(pre_len);
  for (std::size_t n = 0; n < pre_len; ++n) pre.push_back(a.term(n) + b.term(n));
  std::vector<GroupElement> cyc;
  cyc.reserve(period);
  for (std::size_t n = pre_len; n < pre_len + period; ++n) cyc.push_back(a.term(n) + b.term(n));
  return EvPerSeq(a.model_, std::move(pre), std::move(cyc));
}

EvPerSeq EvPerSeq::operator-() const {
  return map([](const GroupElement& e) { return -e; });
}

bool operator==(const EvPerSeq& a, const EvPerSeq& b) {
  return a.model_ == b.model_ && a.preamble_ == b.preamble_ && a.cycle_ == b.cycle_;
}

bool operator<(const EvPerSeq& a, const EvPerSeq& b) {
  if (a.preamble_.size() != b.preamble_.size()) return a.preamble_.size() < b.preamble_.size();
  for (std::size_t i = 0; i < a.preamble_.size(); ++i) {
    if (a.preamble_[i] != b.preamble_[i]) return a.preamble_[i] < b.preamble_[i];
  }
  if (a.period() != b.period()) return a.period() < b.period();
  for (std::size_t i = 0; i < a.cycle_.size(); ++i) {
    if (a.cycle_[i] != b.cycle_[i]) return a.cycle_[i] < b.cycle_[i];
  }
  return false;
}

std::string EvPerSeq::str() const {
  auto join = [](const std::vector<GroupElement>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ",";
      out += items[i].str();
    }
    return out;
  };
  return "pre:[" + join(preamble_) + "];cyc:[" + join(cycle_) + "]";
}

EvPerSeq EvPerSeq::parse(std::string_view text, const GroupModel& model) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("malformed sequence '" + std::string(text) +
                                "' (expected pre:[..];cyc:[..])");
  };
  auto expect = [&](std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) fail();
    text.remove_prefix(prefix.size());
  };
  auto read_list = [&]() -> std::vector<GroupElement> {
    const auto close = text.find(']');
    if (close == std::string_view::npos) fail();
    std::string_view body = text.substr(0, close);
    text.remove_prefix(close + 1);
    std::vector<GroupElement> items;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      items.push_back(model.parse_element(tok));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return items;
  };

  expect("pre:[");
  std::vector<GroupElement> pre = read_list();
  expect(";cyc:[");
  std::vector<GroupElement> cyc = read_list();
  if (!text.empty()) fail();
  if (cyc.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  return EvPerSeq(model, std::move(pre), std::move(cyc));
}

}  // namespace gseq
