#include "gseq/method.hpp"

#include <stdexcept>

namespace gseq {

MethodDescriptor MethodDescriptor::kernel(std::vector<Rational> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("kernel needs at least one coefficient");
  MethodDescriptor m(Kind::Kernel);
  m.coefficients_ = std::move(coefficients);
  return m;
}

MethodDescriptor MethodDescriptor::sum(MethodDescriptor left, MethodDescriptor right) {
  MethodDescriptor m(Kind::Sum);
  m.left_ = std::make_shared<const MethodDescriptor>(std::move(left));
  m.right_ = std::make_shared<const MethodDescriptor>(std::move(right));
  return m;
}

const std::vector<Rational>& MethodDescriptor::coefficients() const {
  if (kind_ != Kind::Kernel) throw std::domain_error("coefficients of a non-kernel method");
  return coefficients_;
}

const MethodDescriptor& MethodDescriptor::left() const {
  if (kind_ != Kind::Sum) throw std::domain_error("left part of a non-sum method");
  return *left_;
}

const MethodDescriptor& MethodDescriptor::right() const {
  if (kind_ != Kind::Sum) throw std::domain_error("right part of a non-sum method");
  return *right_;
}

bool operator==(const MethodDescriptor& a, const MethodDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case MethodDescriptor::Kind::Lim:
    case MethodDescriptor::Kind::Cesaro:
      return true;
    case MethodDescriptor::Kind::Kernel:
      return a.coefficients_ == b.coefficients_;
    case MethodDescriptor::Kind::Sum:
      return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
  return false;
}

std::string MethodDescriptor::str() const {
  switch (kind_) {
    case Kind::Lim:
      return "lim";
    case Kind::Cesaro:
      return "cesaro";
    case Kind::Kernel: {
      std::string out = "kernel:";
      for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i > 0) out += ",";
        out += coefficients_[i].str();
      }
      return out;
    }
    case Kind::Sum:
      return "sum(" + left_->str() + ";" + right_->str() + ")";
  }
  return {};
}

MethodDescriptor MethodDescriptor::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "lim") return lim();
  if (text == "cesaro") return cesaro();
  if (text.substr(0, 7) == "kernel:") {
    std::string_view body = text.substr(7);
    std::vector<Rational> coeffs;
    while (true) {
      const auto comma = body.find(',');
      coeffs.push_back(Rational::parse(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return kernel(std::move(coeffs));
  }
  if (text.substr(0, 4) == "sum(" && text.back() == ')') {
    std::string_view body = text.substr(4, text.size() - 5);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ';' && depth == 0)
        return sum(parse(body.substr(0, i)), parse(body.substr(i + 1)));
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(text) +
                              "' (expected lim | cesaro | kernel:c0,c1,... | sum(m1;m2))");
}

void require_compatible(const MethodDescriptor& method, const GroupModel& model) {
  switch (method.kind()) {
    case MethodDescriptor::Kind::Lim:
      return;
    case MethodDescriptor::Kind::Cesaro:
      if (model.is_cyclic()) throw std::domain_error("cesaro method requires the rational line");
      return;
    case MethodDescriptor::Kind::Kernel:
      if (model.is_cyclic()) {
        for (const auto& c : method.coefficients()) {
          if (!c.is_integer())
            throw std::domain_error("non-integer kernel coefficients over a cyclic group");
        }
      }
      return;
    case MethodDescriptor::Kind::Sum:
      require_compatible(method.left(), model);
      require_compatible(method.right(), model);
      return;
  }
}

namespace {

std::optional<GroupElement> lim_of(const EvPerSeq& x) {
  if (x.period() != 1) return std::nullopt;
  return x.cycle().front();
}

std::optional<GroupElement> kernel_eval(const MethodDescriptor& method, const EvPerSeq& x) {
  const auto& coeffs = method.coefficients();
  auto windowed = [&](std::size_t n) {
    GroupElement acc = x.model().zero();
    for (std::size_t j = 0; j < coeffs.size(); ++j) acc = acc + x.term(n + j).scaled(coeffs[j]);
    return acc;
  };
  const std::size_t pre_len = x.preamble().size();
  std::vector<GroupElement> pre;
  pre.reserve(pre_len);
  for (std::size_t n = 0; n < pre_len; ++n) pre.push_back(windowed(n));
  std::vector<GroupElement> cyc;
  cyc.reserve(x.period());
  for (std::size_t n = pre_len; n < pre_len + x.period(); ++n) cyc.push_back(windowed(n));
  return lim_of(EvPerSeq(x.model(), std::move(pre), std::move(cyc)));
}

GroupElement cycle_mean(const EvPerSeq& x) {
  Rational total(0);
  for (const auto& e : x.cycle()) total += e.rational();
  return x.model().from_rational(total / Rational(static_cast<long long>(x.period())));
}

}  // namespace

std::optional<GroupElement> evaluate(const MethodDescriptor& method, const EvPerSeq& x) {
  require_compatible(method, x.model());
  switch (method.kind()) {
    case MethodDescriptor::Kind::Lim:
      return lim_of(x);
    case MethodDescriptor::Kind::Kernel:
      return kernel_eval(method, x);
    case MethodDescriptor::Kind::Cesaro:
      // Running means of an eventually periodic sequence converge to the
      // mean of the cycle; the preamble and cycle phase wash out.
      return cycle_mean(x);
    case MethodDescriptor::Kind::Sum: {
      const auto a = evaluate(method.left(), x);
      if (!a) return std::nullopt;
      const auto b = evaluate(method.right(), x);
      if (!b) return std::nullopt;
      return *a + *b;
    }
  }
  return std::nullopt;
}

bool in_domain(const MethodDescriptor& method, const EvPerSeq& x) {
  return evaluate(method, x).has_value();
}

Rational constant_response(const MethodDescriptor& method) {
  switch (method.kind()) {
    case MethodDescriptor::Kind::Lim:
    case MethodDescriptor::Kind::Cesaro:
      return Rational(1);
    case MethodDescriptor::Kind::Kernel: {
      Rational total(0);
      for (const auto& c : method.coefficients()) total += c;
      return total;
    }
    case MethodDescriptor::Kind::Sum:
      return constant_response(method.left()) + constant_response(method.right());
  }
  return Rational(0);
}

bool is_regular(const MethodDescriptor& method) {
  return constant_response(method) == Rational(1);
}

}  // namespace gseq
