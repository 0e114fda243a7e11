#include "permqubo/network.hpp"

#include <algorithm>
#include <stdexcept>

#include "permqubo/gates.hpp"

namespace permqubo {

const char* topology_name(TopologyKind k) {
  switch (k) {
    case TopologyKind::Batcher:
      return "batcher";
    case TopologyKind::OddEvenTransposition:
      return "oet";
    case TopologyKind::Bitonic:
      return "bitonic";
  }
  return "batcher";
}

TopologyKind topology_from_name(const std::string& s) {
  if (s == "batcher") return TopologyKind::Batcher;
  if (s == "oet") return TopologyKind::OddEvenTransposition;
  if (s == "bitonic") return TopologyKind::Bitonic;
  throw std::invalid_argument("unknown topology: " + s);
}

static void check_n(int n) {
  if (n < 2) throw std::invalid_argument("network needs at least 2 lines");
}

NetworkTopology topology_oe_transposition(int n) {
  check_n(n);
  NetworkTopology t;
  t.n = n;
  for (int round = 0; round < n; ++round) {
    for (int i = round % 2; i + 1 < n; i += 2) {
      t.gates.emplace_back(i, i + 1);
    }
  }
  return t;
}

NetworkTopology topology_batcher(int n) {
  check_n(n);
  NetworkTopology t;
  t.n = n;
  for (int p = 1; p < n; p *= 2) {
    for (int k = p; k >= 1; k /= 2) {
      for (int j = k % p; j + k <= n - 1; j += 2 * k) {
        for (int i = 0; i <= std::min(k - 1, n - 1 - j - k); ++i) {
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) {
            t.gates.emplace_back(i + j, i + j + k);
          }
        }
      }
    }
  }
  return t;
}

namespace {

struct DirectedComparator {
  int i, j;
  bool ascending;  // min to i
};

void bitonic_merge(int lo, int n, bool dir,
                   std::vector<DirectedComparator>& out) {
  if (n <= 1) return;
  int m = 1;
  while (m * 2 < n) m *= 2;
  for (int i = lo; i < lo + n - m; ++i) out.push_back({i, i + m, dir});
  bitonic_merge(lo, m, dir, out);
  bitonic_merge(lo + m, n - m, dir, out);
}

void bitonic_sort(int lo, int n, bool dir,
                  std::vector<DirectedComparator>& out) {
  if (n <= 1) return;
  int m = n / 2;
  bitonic_sort(lo, m, !dir, out);
  bitonic_sort(lo + m, n - m, dir, out);
  bitonic_merge(lo, n, dir, out);
}

}  // namespace

NetworkTopology topology_bitonic(int n) {
  check_n(n);
  std::vector<DirectedComparator> directed;
  bitonic_sort(0, n, true, directed);

  // Standardize: relabel lines so every comparator sends the minimum to
  // the lower line.
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  NetworkTopology t;
  t.n = n;
  for (const auto& c : directed) {
    int mn = c.ascending ? c.i : c.j;
    int mx = c.ascending ? c.j : c.i;
    int u = label[mn];
    int v = label[mx];
    t.gates.emplace_back(std::min(u, v), std::max(u, v));
    if (u > v) std::swap(label[mn], label[mx]);
  }
  return t;
}

NetworkTopology make_topology(TopologyKind kind, int n) {
  switch (kind) {
    case TopologyKind::Batcher:
      return topology_batcher(n);
    case TopologyKind::OddEvenTransposition:
      return topology_oe_transposition(n);
    case TopologyKind::Bitonic:
      return topology_bitonic(n);
  }
  throw std::invalid_argument("unknown topology kind");
}

std::vector<std::uint64_t> run_network(const NetworkTopology& t,
                                       std::vector<std::uint64_t> values,
                                       int key_shift,
                                       std::vector<int>* controls) {
  if (static_cast<int>(values.size()) != t.n) {
    throw std::invalid_argument("value count does not match line count");
  }
  if (controls) controls->clear();
  for (const auto& [l1, l2] : t.gates) {
    bool swap = (values[l1] >> key_shift) > (values[l2] >> key_shift);
    if (controls) controls->push_back(swap ? 1 : 0);
    if (swap) std::swap(values[l1], values[l2]);
  }
  return values;
}

bool sorts_all_binary(const NetworkTopology& t) {
  for (std::uint64_t mask = 0; mask < (1ull << t.n); ++mask) {
    std::vector<std::uint64_t> v(t.n);
    for (int i = 0; i < t.n; ++i) v[i] = (mask >> i) & 1u;
    v = run_network(t, std::move(v));
    if (!std::is_sorted(v.begin(), v.end())) return false;
  }
  return true;
}

NetworkBuild network_poly(const NetworkTopology& t, std::vector<Bus> inputs,
                          std::vector<Bus> outputs, VariableRegistry& reg,
                          NetworkOptions opts) {
  if (static_cast<int>(inputs.size()) != t.n) {
    throw std::invalid_argument("input bus count does not match line count");
  }
  const int k = inputs.empty() ? 0 : inputs[0].width();
  for (const Bus& b : inputs) {
    if (b.width() != k) throw std::invalid_argument("bus width mismatch");
  }
  bool have_outputs = !outputs.empty();
  if (have_outputs) {
    if (static_cast<int>(outputs.size()) != t.n) {
      throw std::invalid_argument("output bus count does not match line count");
    }
    for (const Bus& b : outputs) {
      if (b.width() != k) throw std::invalid_argument("bus width mismatch");
    }
  }
  if (!opts.fixed_controls.empty() &&
      static_cast<int>(opts.fixed_controls.size()) != t.gate_count()) {
    throw std::invalid_argument("fixed control count does not match gates");
  }

  NetworkBuild nb;
  nb.n = t.n;
  nb.k = k;
  nb.m = t.gate_count();
  nb.inputs = inputs;

  std::vector<int> remaining(t.n, 0);
  for (const auto& [l1, l2] : t.gates) {
    ++remaining[l1];
    ++remaining[l2];
  }
  for (int j = 0; j < t.n; ++j) {
    if (remaining[j] == 0 && have_outputs) {
      throw std::invalid_argument("line without gates cannot have a fixed output");
    }
  }

  std::vector<Bus> wire = inputs;
  nb.outputs.assign(t.n, Bus{});
  for (int j = 0; j < t.n; ++j) {
    if (remaining[j] == 0) nb.outputs[j] = wire[j];
  }

  for (int i = 0; i < t.gate_count(); ++i) {
    auto [l1, l2] = t.gates[i];
    --remaining[l1];
    --remaining[l2];
    std::string glabel = opts.label + ".g" + std::to_string(i + 1);

    CeOptions ce;
    ce.key_width = opts.key_width;
    ce.label = glabel;
    if (!opts.fixed_controls.empty()) ce.control = opts.fixed_controls[i];

    // Control first: output-wire hints read it, and hints are evaluated
    // in allocation order.
    if (!ce.control) {
      Bus key1 = opts.key_width < 0 ? wire[l1] : wire[l1].high(opts.key_width);
      Bus key2 = opts.key_width < 0 ? wire[l2] : wire[l2].high(opts.key_width);
      VarId cv = reg.fresh(glabel + ".c", opts.control_role);
      reg.set_hint(cv, HintComparison{key1, key2, CmpOp::Gt});
      ce.control = Bit::of(cv);
    }

    auto pick_output = [&](int line) -> Bus {
      if (remaining[line] == 0) {
        if (have_outputs) return outputs[line];
        return reg.fresh_bus(opts.label + ".out" + std::to_string(line + 1), k,
                             Role::Output);
      }
      return reg.fresh_bus(glabel + ".w" + std::to_string(line + 1), k,
                           Role::Auxiliary);
    };
    Bus o1 = pick_output(l1);
    Bus o2 = pick_output(l2);
    bool o1_is_net_output = remaining[l1] == 0;
    bool o2_is_net_output = remaining[l2] == 0;
    ce.out1 = o1;
    ce.out2 = o2;

    GateBuild g = ce_gate(wire[l1], wire[l2], reg, ce);

    nb.poly += g.poly;
    nb.controls.push_back(*ce.control);
    for (VarId a : g.aux) nb.aux.push_back(a);
    // Intermediate wires count as auxiliaries of the network build.
    auto collect_wire = [&](const Bus& b, bool is_output) {
      if (is_output) return;
      for (const Bit& bit : b.bits) {
        if (bit.is_var()) nb.aux.push_back(bit.var);
      }
    };
    collect_wire(o1, o1_is_net_output);
    collect_wire(o2, o2_is_net_output);

    wire[l1] = o1;
    wire[l2] = o2;
    if (o1_is_net_output) nb.outputs[l1] = o1;
    if (o2_is_net_output) nb.outputs[l2] = o2;
  }
  return nb;
}

NetworkBuild keyed_network_poly(const NetworkTopology& t,
                                std::vector<Bus> inputs,
                                std::vector<Bus> outputs, int key_width,
                                VariableRegistry& reg, NetworkOptions opts) {
  opts.key_width = key_width;
  return network_poly(t, std::move(inputs), std::move(outputs), reg,
                      std::move(opts));
}

NetworkBuild stable_network_poly(const NetworkTopology& t,
                                 const std::vector<Bus>& x,
                                 const std::vector<Bus>& y,
                                 VariableRegistry& reg, NetworkOptions opts) {
  if (static_cast<int>(x.size()) != t.n) {
    throw std::invalid_argument("input bus count does not match line count");
  }
  const int k = x[0].width();
  std::vector<Bus> inputs, outputs;
  for (int i = 0; i < t.n; ++i) {
    if (x[i].width() != k || (!y.empty() && y[i].width() != k)) {
      throw std::invalid_argument("bus width mismatch");
    }
    inputs.push_back(bus_concat(x[i], Bus::constant(i + 1, k)));
  }
  for (int i = 0; i < t.n; ++i) {
    Bus yi = y.empty() ? reg.fresh_bus(opts.label + ".y" + std::to_string(i + 1),
                                       k, Role::Output)
                       : y[i];
    Bus zi = reg.fresh_bus(opts.label + ".z" + std::to_string(i + 1), k,
                           Role::Auxiliary);
    outputs.push_back(bus_concat(yi, zi));
  }
  return network_poly(t, std::move(inputs), std::move(outputs), reg,
                      std::move(opts));
}

}  // namespace permqubo
