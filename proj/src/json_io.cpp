#include "gseq/json_io.hpp"

#include <stdexcept>

namespace gseq {

nlohmann::json method_to_json(const MethodDescriptor& method) {
  nlohmann::json doc;
  switch (method.kind()) {
    case MethodDescriptor::Kind::Lim:
      doc["kind"] = "lim";
      break;
    case MethodDescriptor::Kind::Cesaro:
      doc["kind"] = "cesaro";
      break;
    case MethodDescriptor::Kind::Kernel: {
      doc["kind"] = "kernel";
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : method.coefficients()) coeffs.push_back(c.str());
      doc["coefficients"] = std::move(coeffs);
      break;
    }
    case MethodDescriptor::Kind::Sum:
      doc["kind"] = "sum";
      doc["left"] = method_to_json(method.left());
      doc["right"] = method_to_json(method.right());
      break;
  }
  return doc;
}

MethodDescriptor method_from_json(const nlohmann::json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "lim") return MethodDescriptor::lim();
  if (kind == "cesaro") return MethodDescriptor::cesaro();
  if (kind == "kernel") {
    std::vector<Rational> coeffs;
    for (const auto& c : doc.at("coefficients")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return MethodDescriptor::kernel(std::move(coeffs));
  }
  if (kind == "sum")
    return MethodDescriptor::sum(method_from_json(doc.at("left")), method_from_json(doc.at("right")));
  throw std::invalid_argument("unknown method kind '" + kind + "'");
}

nlohmann::json set_to_json(const PointSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : set.elements()) arr.push_back(e.str());
  return arr;
}

PointSet set_from_json(const nlohmann::json& doc, const GroupModel& model) {
  std::vector<GroupElement> elems;
  for (const auto& item : doc) elems.push_back(model.parse_element(item.get<std::string>()));
  return PointSet(model, std::move(elems));
}

nlohmann::json scheme_to_json(const LacunaryScheme& scheme) {
  nlohmann::json doc;
  doc["breakpoints"] = scheme.breakpoints();
  return doc;
}

LacunaryScheme scheme_from_json(const nlohmann::json& doc) {
  if (doc.contains("breakpoints")) {
    std::vector<std::uint64_t> ks;
    for (const auto& k : doc.at("breakpoints")) ks.push_back(k.get<std::uint64_t>());
    return LacunaryScheme(std::move(ks));
  }
  if (doc.contains("geometric")) {
    const auto& g = doc.at("geometric");
    return LacunaryScheme::geometric(g.at("ratio").get<std::uint64_t>(),
                                     g.at("count").get<std::size_t>());
  }
  throw std::invalid_argument("lacunary scheme needs breakpoints or a geometric generator");
}

}  // namespace gseq
