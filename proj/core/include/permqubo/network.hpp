#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permqubo/pbf.hpp"

namespace permqubo {

enum class TopologyKind { Batcher, OddEvenTransposition, Bitonic };

const char* topology_name(TopologyKind k);
TopologyKind topology_from_name(const std::string& s);

// Compare-exchange network: comparators (line1, line2) with line1 < line2
// (min to line1), listed in dependency order.  Lines are 0-based.
struct NetworkTopology {
  int n = 0;
  std::vector<std::pair<int, int>> gates;

  int gate_count() const { return static_cast<int>(gates.size()); }
};

NetworkTopology topology_oe_transposition(int n);
NetworkTopology topology_batcher(int n);
NetworkTopology topology_bitonic(int n);
NetworkTopology make_topology(TopologyKind kind, int n);

// 0-1 principle: sorts every binary input.
bool sorts_all_binary(const NetworkTopology& t);

// Runs the network over integer values.  With key_shift > 0 the comparison
// uses value >> key_shift only.  Fills controls when requested.
std::vector<std::uint64_t> run_network(const NetworkTopology& t,
                                       std::vector<std::uint64_t> values,
                                       int key_shift = 0,
                                       std::vector<int>* controls = nullptr);

struct NetworkBuild {
  QuadPoly poly;
  std::vector<Bus> inputs;
  std::vector<Bus> outputs;
  std::vector<Bit> controls;
  int n = 0;
  int k = 0;
  int m = 0;
  // Auxiliaries allocated by this build: intermediate wires plus gate
  // internals, excluding inputs, outputs and controls.
  std::vector<VarId> aux;
};

struct NetworkOptions {
  int key_width = -1;
  // Pre-determined control bits, one per gate (used when the routing is
  // known in advance); empty to allocate fresh controls.
  std::vector<Bit> fixed_controls;
  std::string label = "nw";
  Role control_role = Role::Control;
};

// Sum of CE gate polynomials along the wire structure of the topology.
// Outputs may be empty (allocated fresh) or fixed buses, possibly constant.
NetworkBuild network_poly(const NetworkTopology& t, std::vector<Bus> inputs,
                          std::vector<Bus> outputs, VariableRegistry& reg,
                          NetworkOptions opts = {});

NetworkBuild keyed_network_poly(const NetworkTopology& t,
                                std::vector<Bus> inputs,
                                std::vector<Bus> outputs, int key_width,
                                VariableRegistry& reg, NetworkOptions opts = {});

// Stable variant: ties on the x values are broken by appended line numbers.
// x and y carry k-bit values; the network runs on 2k-bit composites.
NetworkBuild stable_network_poly(const NetworkTopology& t,
                                 const std::vector<Bus>& x,
                                 const std::vector<Bus>& y,
                                 VariableRegistry& reg,
                                 NetworkOptions opts = {});

}  // namespace permqubo
