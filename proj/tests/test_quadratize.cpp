#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <random>

#include "permqubo/quadratize.hpp"

using namespace permqubo;

namespace {

Assignment mask_assignment(std::size_t n, unsigned mask) {
  Assignment asg(n);
  for (std::size_t i = 0; i < n; ++i) asg.set(static_cast<VarId>(i), (mask >> i) & 1);
  return asg;
}

}  // namespace

TEST_CASE("multipoly algebra") {
  MultiPoly p;
  p.add_term({0, 1, 2}, 2);
  p.add_term({2, 1, 0}, 1);  // merges
  p.add_term({1}, -1);
  CHECK(p.degree() == 3);
  CHECK(p.terms().at({0, 1, 2}) == 3);
  // duplicated variable collapses: x*x = x
  MultiPoly q;
  q.add_term({4, 4}, 5);
  CHECK(q.terms().at({4}) == 5);
  CHECK((p + q - q).terms() == p.terms());
}

TEST_CASE("substitute touches only cubic and higher") {
  MultiPoly p;
  p.add_term({0, 1}, 7);
  p.add_term({0, 1, 2}, 3);
  p.add_term({0, 1, 3}, -2);
  CHECK(p.pair_count(0, 1) == 2);
  p.substitute(0, 1, 9);
  CHECK(p.terms().at({0, 1}) == 7);
  CHECK(p.terms().at({2, 9}) == 3);
  CHECK(p.terms().at({3, 9}) == -2);
  CHECK(p.pair_count(0, 1) == 0);
}

TEST_CASE("alpha bound") {
  MultiPoly p;
  p.add_term({0, 1, 2}, 3);
  p.add_term({0, 1, 3}, -4);
  p.add_term({0, 2, 3}, 10);  // no pair (0,1)
  CHECK(choose_alpha(p, 0, 1) == 8);
}

TEST_CASE("product penalty zero set") {
  Substitution s{0, 1, 2, 5};
  QuadPoly q = product_penalty(s);
  for (unsigned m = 0; m < 8; ++m) {
    Assignment asg = mask_assignment(3, m);
    long long v = q.eval(asg);
    int a = asg.get(0), b = asg.get(1), z = asg.get(2);
    if (z == a * b) {
      CHECK(v == 0);
    } else {
      CHECK(v >= s.alpha);
    }
  }
}

TEST_CASE("negative monomial reduction") {
  VariableRegistry reg;
  Bus x = reg.fresh_bus("x", 4, Role::Input);
  Monomial m{-3, {x.bits[0].var, x.bits[1].var, x.bits[2].var, x.bits[3].var}};
  QuadPoly q = reduce_negative_monomial(m, reg, "nz");
  REQUIRE(reg.size() == 5);
  for (unsigned mask = 0; mask < 16; ++mask) {
    Assignment asg = mask_assignment(5, mask & 15u);
    int prod = 1;
    for (int i = 0; i < 4; ++i) prod &= asg.get(i);
    asg.set(4, 0);
    long long best = q.eval(asg);
    asg.set(4, 1);
    best = std::min(best, q.eval(asg));
    CHECK(best == -3 * prod);
  }
}

TEST_CASE("apply_substitution force flag") {
  MultiPoly p;
  p.add_term({0, 1}, 1);  // quadratic only, nothing to rewrite
  VariableRegistry reg;
  reg.fresh_bus("x", 2, Role::Input);
  QuadPoly lazy = apply_substitution(p, 0, 1, reg, "z0");
  CHECK(lazy.is_zero());
  CHECK(reg.size() == 2);
  QuadPoly forced = apply_substitution(p, 0, 1, reg, "z1", nullptr, true);
  CHECK(!forced.is_zero());
  CHECK(reg.size() == 3);
}

TEST_CASE("quadratize preserves minima over auxiliaries") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    VariableRegistry reg;
    Bus x = reg.fresh_bus("x", 4, Role::Input);
    MultiPoly p;
    for (int t = 0; t < 6; ++t) {
      std::vector<VarId> vars;
      for (int i = 0; i < 4; ++i) {
        if (rng() & 1) vars.push_back(x.bits[i].var);
      }
      p.add_term(vars, static_cast<int>(rng() % 7) - 3);
    }
    QuadratizeResult r = quadratize_poly(p, reg, "q");
    const std::size_t total = reg.size();
    const std::size_t naux = total - 4;
    REQUIRE(naux <= 10);
    for (unsigned mask = 0; mask < 16; ++mask) {
      Assignment asg = mask_assignment(total, mask);
      long long want = p.eval(asg);
      long long best = LLONG_MAX;
      for (unsigned am = 0; am < (1u << naux); ++am) {
        for (std::size_t i = 0; i < naux; ++i) {
          asg.set(static_cast<VarId>(4 + i), (am >> i) & 1);
        }
        best = std::min(best, r.poly.eval(asg));
      }
      CHECK(best == want);
    }
  }
}
