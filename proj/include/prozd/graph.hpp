#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prozd/net.hpp"

namespace prozd {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr int kCriticalLevel = 7;

enum class AppCriticality : std::uint8_t {
  non_critical = 0,
  business_critical = 1,
  mission_critical = 2,
};

AppCriticality parse_app_criticality(const std::string& text);
std::string format_app_criticality(AppCriticality ac);

// A network asset. Ids are dense integers assigned at ingest; the IP is
// metadata, not identity.
struct Asset {
  NodeId id = 0;
  Ipv4 ip = 0;
  Cidr segment_range;           // micro-segment the asset lives in
  std::string tag;              // governance tag, e.g. "Web Server"
  int criticality = 0;          // 0..7, 7 = critical data
  AppCriticality app_criticality = AppCriticality::non_critical;

  friend bool operator==(const Asset&, const Asset&) = default;
};

// A directed labeled connection. `open_ports` is the number of service ports
// this edge represents; when build_graph collapses parallel duplicates the
// counts are summed, so the field survives round-trips through rebuilds.
struct Connection {
  NodeId src = 0;
  NodeId dst = 0;
  Service service;
  bool compliant = false;
  int open_ports = 0;  // 0 = derive from service on build

  friend bool operator==(const Connection&, const Connection&) = default;
};

// Edge weights used for the compliance-weighted adjacency. A compliant edge
// weighs more than a non-compliant one, so low-weight paths are the
// easily-exploitable ones.
struct WeightConfig {
  double non_compliant = 1.0;
  double compliant = 2.0;
};

struct ConnectivityGraph {
  std::vector<Asset> assets;
  std::vector<Connection> edges;  // deduped: at most one edge per (src, dst, compliant)
  WeightConfig weights;

  // adjacency[(src, dst)] = sum of retained-edge weights for the pair; > 0
  // iff at least one edge exists.
  std::map<std::pair<NodeId, NodeId>, double> adjacency;

  // Derived indices, rebuilt by build_graph.
  std::vector<std::vector<EdgeId>> out_edges;  // per node, ascending edge id
  std::vector<std::vector<EdgeId>> in_edges;

  std::size_t node_count() const { return assets.size(); }
  std::size_t edge_count() const { return edges.size(); }

  double weight_of(NodeId src, NodeId dst) const {
    auto it = adjacency.find({src, dst});
    return it == adjacency.end() ? 0.0 : it->second;
  }
  double edge_weight(const Connection& e) const {
    return e.compliant ? weights.compliant : weights.non_compliant;
  }
};

// Validates assets, drops self-loops, collapses parallel duplicates per
// (src, dst, compliance) while summing open-port counts, and computes the
// weighted adjacency. Edge order: by (src, dst, non-compliant first).
ConnectivityGraph build_graph(std::vector<Asset> assets, const std::vector<Connection>& connections,
                              WeightConfig weights = {});

// Asset ids with criticality 7, ascending.
std::vector<NodeId> critical_assets(const ConnectivityGraph& graph);

// Unique neighbor ids over the undirected skeleton, ascending.
std::vector<NodeId> undirected_neighbors(const ConnectivityGraph& graph, NodeId node);

}  // namespace prozd
