#include "dutycast/topology_io.hpp"

#include <json.hpp>

#include "dutycast/errors.hpp"

namespace dutycast {

using nlohmann::json;

std::string write_topology(const Network& net, const MulticastInstance* inst) {
  // One node or edge per line keeps files diffable.
  std::string out = "{\n  \"version\": " + std::to_string(kTopologyVersion) + ",\n  \"K\": " +
                    std::to_string(net.period()) + ",\n  \"nodes\": [";
  for (std::size_t u = 0; u < net.node_count(); ++u) {
    nlohmann::ordered_json node;
    node["id"] = u;
    if (net.has_positions() && u < net.positions().size()) {
      node["x"] = net.positions()[u].x;
      node["y"] = net.positions()[u].y;
    }
    node["active_slots"] = net.active(static_cast<NodeId>(u));
    out += (u == 0 ? "\n    " : ",\n    ") + node.dump();
  }
  out += net.node_count() == 0 ? "],\n  \"edges\": [" : "\n  ],\n  \"edges\": [";
  for (std::size_t i = 0; i < net.edges().size(); ++i) {
    const auto& [u, v] = net.edges()[i];
    out += (i == 0 ? "\n    " : ",\n    ") + json::array({u, v}).dump();
  }
  out += net.edges().empty() ? "]" : "\n  ]";
  if (inst != nullptr) {
    nlohmann::ordered_json m;
    m["source"] = inst->source();
    m["terminals"] = inst->terminals();
    out += ",\n  \"multicast\": " + m.dump();
  }
  return out + "\n}\n";
}

TopologyDocument read_topology(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed topology JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InvalidInput("topology document must be a JSON object");
    const int version = doc.at("version").get<int>();
    if (version != kTopologyVersion) {
      throw InvalidInput("unsupported topology version " + std::to_string(version));
    }
    const int period = doc.at("K").get<int>();
    const auto& nodes = doc.at("nodes");
    if (!nodes.is_array()) throw InvalidInput("\"nodes\" must be an array");

    std::vector<DutySchedule> schedules;
    std::vector<Position> positions;
    std::size_t with_position = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& node = nodes[i];
      if (node.at("id").get<std::size_t>() != i) {
        throw InvalidInput("node ids must be 0..n-1 in order; entry " + std::to_string(i) +
                           " has id " + node.at("id").dump());
      }
      schedules.emplace_back(node.at("active_slots").get<std::vector<Slot>>());
      const bool has_x = node.contains("x");
      if (has_x != node.contains("y")) {
        throw InvalidInput("node " + std::to_string(i) + " has only one coordinate");
      }
      if (has_x) {
        positions.push_back({node.at("x").get<double>(), node.at("y").get<double>()});
        ++with_position;
      } else {
        positions.push_back({});
      }
    }
    if (with_position != 0 && with_position != nodes.size()) {
      throw InvalidInput("positions must be given for all nodes or none");
    }
    if (with_position == 0) positions.clear();

    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a [u, v] pair");
      edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }

    TopologyDocument out{Network(period, std::move(schedules), std::move(edges), std::move(positions)),
                         std::nullopt};
    if (doc.contains("multicast")) {
      const auto& m = doc.at("multicast");
      out.instance.emplace(m.at("source").get<NodeId>(), m.at("terminals").get<std::vector<NodeId>>());
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad topology document: ") + e.what());
  }
}

}  // namespace dutycast
