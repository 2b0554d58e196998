#include "prozd/graph.hpp"

#include <algorithm>
#include <set>

namespace prozd {

AppCriticality parse_app_criticality(const std::string& text) {
  if (text == "mission_critical") return AppCriticality::mission_critical;
  if (text == "business_critical") return AppCriticality::business_critical;
  if (text == "non_critical") return AppCriticality::non_critical;
  throw ValidationError("unknown application criticality: '" + text + "'");
}

std::string format_app_criticality(AppCriticality ac) {
  switch (ac) {
    case AppCriticality::mission_critical: return "mission_critical";
    case AppCriticality::business_critical: return "business_critical";
    default: return "non_critical";
  }
}

ConnectivityGraph build_graph(std::vector<Asset> assets, const std::vector<Connection>& connections,
                              WeightConfig weights) {
  if (assets.empty()) {
    throw ValidationError("build_graph: asset list is empty");
  }
  if (weights.compliant <= 0.0 || weights.non_compliant <= 0.0) {
    throw ValidationError("build_graph: edge weights must be positive");
  }
  std::sort(assets.begin(), assets.end(),
            [](const Asset& a, const Asset& b) { return a.id < b.id; });
  const auto n = static_cast<NodeId>(assets.size());
  for (NodeId i = 0; i < n; ++i) {
    const Asset& a = assets[i];
    if (a.id != i) {
      throw ValidationError("build_graph: asset ids must be dense 0.." + std::to_string(n - 1) +
                            "; found id " + std::to_string(a.id));
    }
    if (a.criticality < 0 || a.criticality > kCriticalLevel) {
      throw ValidationError("build_graph: asset " + std::to_string(a.id) +
                            " criticality out of range");
    }
    if (!a.segment_range.contains(a.ip)) {
      throw ValidationError("build_graph: asset " + std::to_string(a.id) + " ip " +
                            format_ipv4(a.ip) + " not in segment " + format_cidr(a.segment_range));
    }
  }

  ConnectivityGraph g;
  g.weights = weights;
  g.assets = std::move(assets);

  // Collapse per (src, dst, compliance); self-loops dropped up front.
  std::map<std::tuple<NodeId, NodeId, bool>, Connection> collapsed;
  for (std::size_t i = 0; i < connections.size(); ++i) {
    const Connection& c = connections[i];
    if (c.src < 0 || c.src >= n || c.dst < 0 || c.dst >= n) {
      throw ValidationError("build_graph: connection #" + std::to_string(i) + " (" +
                            std::to_string(c.src) + " -> " + std::to_string(c.dst) +
                            ") references a non-existent asset id");
    }
    if (c.service.port_lo < 0 || c.service.port_hi > 65535 ||
        c.service.port_lo > c.service.port_hi) {
      throw ValidationError("build_graph: connection #" + std::to_string(i) +
                            " has an invalid port range");
    }
    if (c.src == c.dst) continue;
    const int ports = c.open_ports > 0 ? c.open_ports : c.service.port_count();
    auto key = std::make_tuple(c.src, c.dst, c.compliant);
    auto [it, inserted] = collapsed.try_emplace(key, c);
    if (inserted) {
      it->second.open_ports = ports;
    } else {
      it->second.open_ports += ports;  // aggregate parallel service widths
    }
  }

  g.edges.reserve(collapsed.size());
  for (auto& [key, edge] : collapsed) g.edges.push_back(edge);

  g.out_edges.assign(g.assets.size(), {});
  g.in_edges.assign(g.assets.size(), {});
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    const Connection& c = g.edges[e];
    g.out_edges[c.src].push_back(e);
    g.in_edges[c.dst].push_back(e);
    g.adjacency[{c.src, c.dst}] += g.edge_weight(c);
  }
  return g;
}

std::vector<NodeId> critical_assets(const ConnectivityGraph& graph) {
  std::vector<NodeId> out;
  for (const Asset& a : graph.assets) {
    if (a.criticality == kCriticalLevel) out.push_back(a.id);
  }
  return out;
}

std::vector<NodeId> undirected_neighbors(const ConnectivityGraph& graph, NodeId node) {
  std::set<NodeId> nbrs;
  for (EdgeId e : graph.out_edges[node]) nbrs.insert(graph.edges[e].dst);
  for (EdgeId e : graph.in_edges[node]) nbrs.insert(graph.edges[e].src);
  return {nbrs.begin(), nbrs.end()};
}

}  // namespace prozd
