#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "permqubo/network.hpp"
#include "permqubo/verify.hpp"

using namespace permqubo;

TEST_CASE("gate counts") {
  CHECK(topology_batcher(2).gate_count() == 1);
  CHECK(topology_batcher(4).gate_count() == 5);
  CHECK(topology_batcher(8).gate_count() == 19);
  for (int n = 2; n <= 8; ++n) {
    CHECK(topology_oe_transposition(n).gate_count() == n * (n - 1) / 2);
  }
  CHECK(make_topology(TopologyKind::Bitonic, 4).gate_count() == 6);
}

TEST_CASE("comparators are ordered and in range") {
  for (auto kind : {TopologyKind::Batcher, TopologyKind::OddEvenTransposition,
                    TopologyKind::Bitonic}) {
    for (int n = 2; n <= 9; ++n) {
      NetworkTopology t = make_topology(kind, n);
      for (auto [a, b] : t.gates) {
        CHECK(a < b);
        CHECK(a >= 0);
        CHECK(b < n);
      }
    }
  }
}

TEST_CASE("zero one principle") {
  for (auto kind : {TopologyKind::Batcher, TopologyKind::OddEvenTransposition,
                    TopologyKind::Bitonic}) {
    for (int n = 2; n <= 10; ++n) {
      CHECK(sorts_all_binary(make_topology(kind, n)));
    }
  }
}

TEST_CASE("run_network agrees with std::sort") {
  std::mt19937 rng(2);
  for (int n : {3, 5, 8}) {
    NetworkTopology t = topology_batcher(n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint64_t> v(n);
      for (auto& x : v) x = rng() % 100;
      std::vector<std::uint64_t> want = v;
      std::sort(want.begin(), want.end());
      CHECK(run_network(t, v) == want);
    }
  }
}

TEST_CASE("keyed run sorts stably by high bits") {
  NetworkTopology t = topology_batcher(4);
  // values carry a 2-bit payload below a 2-bit key
  std::vector<std::uint64_t> v = {(2u << 2) | 1, (1u << 2) | 3,
                                  (2u << 2) | 0, (0u << 2) | 2};
  std::vector<int> controls;
  auto out = run_network(t, v, 2, &controls);
  CHECK(out.size() == 4);
  CHECK(controls.size() == 4u + 1);  // one control per gate
  for (std::size_t i = 1; i < out.size(); ++i) {
    CHECK((out[i - 1] >> 2) <= (out[i] >> 2));
  }
}

TEST_CASE("auxiliary accounting matches the closed form") {
  for (auto kind : {TopologyKind::Batcher, TopologyKind::OddEvenTransposition,
                    TopologyKind::Bitonic}) {
    for (int n = 2; n <= 5; ++n) {
      for (int k : {2, 3}) {
        NetworkTopology t = make_topology(kind, n);
        VariableRegistry reg;
        std::vector<Bus> inputs;
        for (int i = 0; i < n; ++i) {
          inputs.push_back(reg.fresh_bus("x" + std::to_string(i), k, Role::Input));
        }
        NetworkBuild nb = network_poly(t, inputs, {}, reg);
        long long m = t.gate_count();
        CHECK(nb.aux.size() ==
              static_cast<std::size_t>(m * (7 * k + 1) - n * k));
        CHECK(nb.controls.size() == static_cast<std::size_t>(m));
      }
    }
  }
}

TEST_CASE("network polynomial zero at sorted witnesses") {
  std::mt19937 rng(17);
  for (auto kind : {TopologyKind::Batcher, TopologyKind::OddEvenTransposition,
                    TopologyKind::Bitonic}) {
    NetworkTopology t = make_topology(kind, 4);
    VariableRegistry reg;
    std::vector<Bus> inputs;
    for (int i = 0; i < 4; ++i) {
      inputs.push_back(reg.fresh_bus("x" + std::to_string(i), 3, Role::Input));
    }
    NetworkBuild nb = network_poly(t, inputs, {}, reg);
    WitnessEvaluator ev(reg);
    for (int trial = 0; trial < 25; ++trial) {
      Assignment asg(reg.size());
      std::vector<std::uint64_t> v(4);
      for (int i = 0; i < 4; ++i) {
        v[i] = rng() % 8;
        asg.set_bus(inputs[i], v[i]);
      }
      ev.run(asg);
      CHECK(nb.poly.eval(asg) == 0);
      std::sort(v.begin(), v.end());
      for (int i = 0; i < 4; ++i) CHECK(asg.value_of(nb.outputs[i]) == v[i]);
    }
  }
}
