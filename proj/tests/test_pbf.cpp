#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permqubo/pbf.hpp"

using namespace permqubo;

TEST_CASE("bit literals") {
  Bit x = Bit::of(3);
  CHECK(x.is_var());
  CHECK(x.complement().kind == Bit::Kind::NegVar);
  CHECK(x.complement().complement() == x);
  CHECK(Bit::zero().complement() == Bit::one());
  CHECK(Bit::constant(7) == Bit::one());
}

TEST_CASE("bus constants round trip") {
  for (std::uint64_t v = 0; v < 16; ++v) {
    Bus b = Bus::constant(v, 5);
    REQUIRE(b.width() == 5);
    auto got = b.const_value();
    REQUIRE(got.has_value());
    CHECK(*got == v);
  }
  Bus mixed({Bit::of(0), Bit::one()});
  CHECK(!mixed.const_value().has_value());
}

TEST_CASE("bus concat and slices") {
  Bus lo = Bus::constant(5, 3);   // 101
  Bus hi = Bus::constant(2, 2);   // 10
  Bus c = bus_concat(hi, lo);
  REQUIRE(c.width() == 5);
  CHECK(*c.const_value() == (2u << 3 | 5u));
  CHECK(*c.high(2).const_value() == 2u);
  CHECK(*c.low(3).const_value() == 5u);
}

TEST_CASE("registry rejects duplicate names") {
  VariableRegistry reg;
  reg.fresh("x", Role::Input);
  CHECK_THROWS_AS(reg.fresh("x", Role::Input), std::invalid_argument);
  Bus b = reg.fresh_bus("y", 3, Role::Output);
  CHECK(reg.size() == 4);
  CHECK(reg.count_role(Role::Output) == 3);
  CHECK(reg.name(b.bits[0].var) == "y^1");
}

TEST_CASE("assignment bus ops") {
  VariableRegistry reg;
  Bus b = reg.fresh_bus("v", 4, Role::Input);
  Assignment asg(reg.size());
  for (std::uint64_t v = 0; v < 16; ++v) {
    asg.set_bus(b, v);
    CHECK(asg.value_of(b) == v);
  }
  asg.set_bus(b, 6);
  CHECK(asg.value_of(b.bits[1]) == 1);
  CHECK(asg.value_of(b.bits[1].complement()) == 0);
}

TEST_CASE("x^2 folds to x and zeros are dropped") {
  QuadPoly q;
  q.add_quadratic(2, 2, 5);
  CHECK(q.quadratic().empty());
  CHECK(q.linear().at(2) == 5);
  q.add_linear(2, -5);
  CHECK(q.is_zero());
  q.add_quadratic(1, 3, 2);
  q.add_quadratic(3, 1, -2);
  CHECK(q.is_zero());
}

TEST_CASE("lin_square equals squared evaluation") {
  LinExpr e;
  e.add_const(-2);
  e.add(0, 1);
  e.add(1, 2);
  e.add(2, -3);
  QuadPoly sq = lin_square(e);
  Assignment asg(3);
  for (int m = 0; m < 8; ++m) {
    for (int i = 0; i < 3; ++i) asg.set(i, (m >> i) & 1);
    long long v = e.eval(asg);
    CHECK(sq.eval(asg) == v * v);
  }
}

TEST_CASE("compiled poly eval and flip deltas") {
  std::mt19937 rng(7);
  QuadPoly q;
  const int n = 10;
  for (int t = 0; t < 40; ++t) {
    int a = rng() % n, b = rng() % n;
    int c = static_cast<int>(rng() % 9) - 4;
    if (a == b) q.add_linear(a, c);
    else q.add_quadratic(a, b, c);
  }
  q.add_const(3);
  CompiledPoly cp(q);
  Assignment asg(n);
  for (int trial = 0; trial < 200; ++trial) {
    VarId v = rng() % n;
    long long before = cp.eval(asg);
    CHECK(before == q.eval(asg));
    long long delta = cp.flip_delta(asg.data(), v);
    asg.set(v, 1 - asg.get(v));
    CHECK(cp.eval(asg) == before + delta);
  }
}

TEST_CASE("degree profile") {
  QuadPoly q;
  q.add_quadratic(0, 1, 1);
  q.add_quadratic(0, 2, 2);
  q.add_quadratic(1, 2, -1);
  q.add_linear(5, 4);
  auto deg = degree_profile(q);
  CHECK(deg.at(0) == 2);
  CHECK(deg.at(1) == 2);
  CHECK(deg.at(2) == 2);
  CHECK(deg.at(5) == 0);
  CHECK(max_degree(q) == 2);
}
