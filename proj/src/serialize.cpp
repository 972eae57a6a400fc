#include "qf/serialize.hpp"

#include <json.hpp>

namespace qf {

using Json = nlohmann::ordered_json;

namespace {

Json profile_json(const InvariantProfile& p) {
  return Json{{"order", p.order},
              {"type", p.type},
              {"connected", p.connected},
              {"orbit_sizes", p.orbit_sizes},
              {"inner_group_order", p.inner_group_order},
              {"colorings", Json{{"R3", p.colorings_r3}, {"R5", p.colorings_r5}}}};
}

}  // namespace

std::string to_json(const InvariantProfile& p, int indent) { return profile_json(p).dump(indent); }

std::string to_json(const Certificate& c, int indent) {
  Json witness = Json::array();
  for (const auto& w : c.witnesses)
    witness.push_back(Json{{"invariant", w.invariant}, {"a", w.a}, {"b", w.b}});
  Json j{{"verdict", c.equivalent ? "equivalent" : "not_equivalent"},
         {"basis", c.basis},
         {"witness", witness},
         {"profiles", Json{{"a", profile_json(c.a)}, {"b", profile_json(c.b)}}},
         {"quandle_isomorphic", c.quandles_isomorphic},
         {"group_isomorphic", c.groups_isomorphic},
         {"caveats", c.caveats}};
  return j.dump(indent);
}

std::string to_json(const TripleReport& r, int indent) {
  Json members = Json::array();
  for (const auto& m : r.members)
    members.push_back(Json{{"label", m.label},
                           {"knot", m.knot},
                           {"n", m.n},
                           {"order", m.order},
                           {"type", m.type}});
  const char* pairs[3] = {"F1-F2", "F1-F3", "F2-F3"};
  Json groups = Json::object();
  Json quandles = Json::object();
  for (int k = 0; k < 3; ++k) {
    groups[pairs[k]] = r.groups_isomorphic[k];
    quandles[pairs[k]] = r.quandles_isomorphic[k];
  }
  Json j{{"triple", r.pqr},
         {"members", members},
         {"groups_isomorphic", groups},
         {"quandles_isomorphic", quandles}};
  return j.dump(indent);
}

std::string completion_header(const CompletionResult& r) {
  Json gens = Json::object();
  for (const auto& [name, index] : r.generator_images) gens[name] = index;
  Json j{{"order", r.quandle.order()},
         {"type", type_of(r.quandle)},
         {"generators", gens},
         {"stats", Json{{"allocated", r.stats.allocated},
                        {"merges", r.stats.merges},
                        {"passes", r.stats.passes},
                        {"relators", r.stats.relators}}}};
  return j.dump();
}

}  // namespace qf
