#pragma once

#include <json.hpp>

#include "gseq/density.hpp"
#include "gseq/topology.hpp"

namespace gseq {

// JSON document shapes used on the CLI boundary.
//
//   method  {"kind":"kernel","coefficients":["1/2","1/2"]}
//           {"kind":"lim"} | {"kind":"cesaro"}
//           {"kind":"sum","left":{...},"right":{...}}
//   set     ["0","1/2","1"]
//   scheme  {"breakpoints":[2,4,8]} | {"geometric":{"ratio":2,"count":12}}

nlohmann::json method_to_json(const MethodDescriptor& method);
MethodDescriptor method_from_json(const nlohmann::json& doc);

nlohmann::json set_to_json(const PointSet& set);
PointSet set_from_json(const nlohmann::json& doc, const GroupModel& model);

nlohmann::json scheme_to_json(const LacunaryScheme& scheme);
LacunaryScheme scheme_from_json(const nlohmann::json& doc);

}  // namespace gseq
