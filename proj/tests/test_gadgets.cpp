#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>

#include "permqubo/gadgets.hpp"

using namespace permqubo;

namespace {

// Minimum of q over the trailing register bits, for a fixed prefix mask.
long long min_over_register(const QuadPoly& q, Assignment& asg,
                            const IntRegister& r) {
  long long best = LLONG_MAX;
  const std::size_t w = r.bits.size();
  for (unsigned m = 0; m < (1u << w); ++m) {
    for (std::size_t i = 0; i < w; ++i) asg.set(r.bits[i], (m >> i) & 1);
    best = std::min(best, q.eval(asg));
  }
  return best;
}

}  // namespace

TEST_CASE("hamming equality") {
  VariableRegistry reg;
  Bus b = reg.fresh_bus("x", 5, Role::Input);
  QuadPoly q = hamming_eq(b.bits, 2);
  Assignment asg(reg.size());
  for (unsigned m = 0; m < 32; ++m) {
    int ones = 0;
    for (int i = 0; i < 5; ++i) {
      asg.set(b.bits[i].var, (m >> i) & 1);
      ones += (m >> i) & 1;
    }
    if (ones == 2) CHECK(q.eval(asg) == 0);
    else CHECK(q.eval(asg) > 0);
  }
}

TEST_CASE("threshold gadget") {
  for (int k = 1; k <= 4; ++k) {
    VariableRegistry reg;
    Bus b = reg.fresh_bus("x", 5, Role::Input);
    IntRegister r;
    QuadPoly q = threshold_ge(b.bits, k, reg, "thr", &r);
    Assignment asg(reg.size());
    for (unsigned m = 0; m < 32; ++m) {
      int ones = 0;
      for (int i = 0; i < 5; ++i) {
        asg.set(b.bits[i].var, (m >> i) & 1);
        ones += (m >> i) & 1;
      }
      long long best = min_over_register(q, asg, r);
      if (ones >= k) CHECK(best == 0);
      else CHECK(best > 0);
    }
  }
}

TEST_CASE("parity gadgets") {
  VariableRegistry reg;
  Bus b = reg.fresh_bus("x", 5, Role::Input);
  IntRegister re, ro;
  QuadPoly qe = parity_even(b.bits, reg, "even", &re);
  QuadPoly qo = parity_odd(b.bits, reg, "odd", &ro);
  Assignment asg(reg.size());
  for (unsigned m = 0; m < 32; ++m) {
    int ones = 0;
    for (int i = 0; i < 5; ++i) {
      asg.set(b.bits[i].var, (m >> i) & 1);
      ones += (m >> i) & 1;
    }
    CHECK((min_over_register(qe, asg, re) == 0) == (ones % 2 == 0));
    CHECK((min_over_register(qo, asg, ro) == 0) == (ones % 2 == 1));
  }
}

TEST_CASE("threshold handles negated literals") {
  VariableRegistry reg;
  Bus b = reg.fresh_bus("x", 3, Role::Input);
  std::vector<Bit> lits;
  for (const Bit& bit : b.bits) lits.push_back(bit.complement());
  IntRegister r;
  QuadPoly q = threshold_ge(lits, 1, reg, "thr", &r);
  Assignment asg(reg.size());
  // all ones -> every literal zero -> threshold 1 unreachable
  for (int i = 0; i < 3; ++i) asg.set(b.bits[i].var, 1);
  CHECK(min_over_register(q, asg, r) > 0);
  asg.set(b.bits[1].var, 0);
  CHECK(min_over_register(q, asg, r) == 0);
}
