#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permqubo/gates.hpp"
#include "permqubo/io.hpp"

using namespace permqubo;

TEST_CASE("instance json round trips byte for byte") {
  Encoding e = derangement(perm_encoding(3));
  json j = instance_to_json(e);
  std::string a = j.dump(2);
  std::string b = instance_to_json(build_encoding(e.meta)).dump(2);
  CHECK(a == b);

  Encoding back = encoding_from_instance(json::parse(a));
  CHECK(instance_to_json(back).dump(2) == a);
  CHECK(back.poly == e.poly);
}

TEST_CASE("meta round trip covers every constraint kind") {
  EncodingMeta m;
  m.construction = "perm";
  m.n = 5;
  m.k = 3;
  m.topo = TopologyKind::Bitonic;
  m.constraints.push_back({"value", 1, 3});
  m.constraints.push_back({"forbid", 2, 2});
  ConstraintSpec fp;
  fp.kind = "forbid_perm";
  fp.tau = {2, 1, 3, 4, 5};
  m.constraints.push_back(fp);
  ConstraintSpec par;
  par.kind = "parity";
  par.parity = ParityKind::Odd;
  m.constraints.push_back(par);
  EncodingMeta back = meta_from_json(meta_to_json(m));
  CHECK(meta_to_json(back) == meta_to_json(m));
  CHECK(back.topo == TopologyKind::Bitonic);
  CHECK(back.constraints[2].tau == fp.tau);
  CHECK(back.constraints[3].parity == ParityKind::Odd);
}

TEST_CASE("tampering is detected") {
  json j = instance_to_json(perm_encoding(3));
  j["offset"] = j["offset"].get<long long>() + 1;
  CHECK_THROWS_AS(encoding_from_instance(j), std::runtime_error);
}

TEST_CASE("qubo text round trip") {
  Encoding e = perm_encoding(3);
  std::string text = to_qubo_text(e.poly);
  CHECK(text.find("p qubo 0") != std::string::npos);
  QuadPoly back = parse_qubo_text(text);
  CHECK(back == e.poly);
  CHECK_THROWS(parse_qubo_text("no header here\n"));
}

TEST_CASE("ising transform is exact") {
  // 10-variable gadget: eq gate at width 2
  VariableRegistry reg;
  Bus x = reg.fresh_bus("x", 2, Role::Input);
  Bus y = reg.fresh_bus("y", 2, Role::Input);
  Bit c = Bit::of(reg.fresh("c", Role::Output));
  QuadPoly q = eq_gate(x, y, c, reg);
  REQUIRE(reg.size() == 10);
  IsingModel m = to_ising(q);
  Assignment asg(10);
  for (unsigned mask = 0; mask < 1024; ++mask) {
    for (int i = 0; i < 10; ++i) asg.set(i, (mask >> i) & 1);
    long long qv = q.eval(asg);
    long long iv = m.offset4;
    auto spin = [&](VarId v) { return asg.get(v) ? 1 : -1; };
    for (const auto& [v, h] : m.h4) iv += h * spin(v);
    for (const auto& [pr, j] : m.j4) iv += j * spin(pr.first) * spin(pr.second);
    CHECK(iv == 4 * qv);
  }
  std::string text = ising_to_text(m);
  CHECK(!text.empty());
}

TEST_CASE("report and stats serialization") {
  VerifyReport r;
  r.pass = true;
  r.mode = "free";
  r.solutions = 6;
  json j = report_to_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["solutions"] == 6);
  SampleStats s;
  s.total = 3;
  json js = stats_to_json(s);
  CHECK(js["total"] == 3);
}
