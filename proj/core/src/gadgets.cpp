#include "permqubo/gadgets.hpp"

#include <stdexcept>

namespace permqubo {

LinExpr IntRegister::as_lin() const {
  LinExpr e;
  for (std::size_t i = 0; i < bits.size(); ++i) e.add(bits[i], coeffs[i]);
  return e;
}

QuadPoly hamming_eq(const std::vector<Bit>& bits, int k) {
  if (k < 0 || k > static_cast<int>(bits.size())) {
    throw std::invalid_argument("hamming_eq: k out of range");
  }
  LinExpr e;
  e.add_const(-k);
  for (const Bit& b : bits) e.add(b, 1);
  return lin_square(e);
}

namespace {

// Minimal binary register covering 0..max_value.
IntRegister make_register(long long max_value, VariableRegistry& reg,
                          const std::string& prefix,
                          const std::vector<Bit>& bits, long long hint_offset) {
  IntRegister r;
  long long cap = 0;
  int i = 0;
  while (cap < max_value) {
    VarId v = reg.fresh(prefix + ".y" + std::to_string(i + 1),
                        Role::Auxiliary);
    std::vector<std::pair<Bit, long long>> target;
    for (const Bit& b : bits) target.emplace_back(b, 1);
    reg.set_hint(v, HintRegisterBit{std::move(target), hint_offset, i});
    r.bits.push_back(v);
    r.coeffs.push_back(1LL << i);
    cap += 1LL << i;
    ++i;
  }
  return r;
}

// Even-valued register with coefficients 2,4,8,... covering every even
// value up to max_even.
IntRegister make_even_register(long long max_even, VariableRegistry& reg,
                               const std::string& prefix,
                               const std::vector<Bit>& bits,
                               long long hint_offset) {
  IntRegister r;
  long long cap = 0;
  int i = 0;
  while (cap < max_even) {
    VarId v = reg.fresh(prefix + ".y" + std::to_string(i + 1),
                        Role::Auxiliary);
    std::vector<std::pair<Bit, long long>> target;
    for (const Bit& b : bits) target.emplace_back(b, 1);
    reg.set_hint(v, HintRegisterBit{std::move(target), hint_offset, i + 1});
    r.bits.push_back(v);
    r.coeffs.push_back(2LL << i);
    cap += 2LL << i;
    ++i;
  }
  return r;
}

}  // namespace

QuadPoly threshold_ge(const std::vector<Bit>& bits, int k,
                      VariableRegistry& reg, const std::string& name_prefix,
                      IntRegister* reg_out) {
  int n = static_cast<int>(bits.size());
  if (k < 0 || k > n) throw std::invalid_argument("threshold_ge: k out of range");
  IntRegister y = make_register(n - k, reg, name_prefix, bits, -k);
  if (reg_out) *reg_out = y;
  LinExpr e;
  e.add_const(-k);
  for (const Bit& b : bits) e.add(b, 1);
  LinExpr yl = y.as_lin();
  yl *= -1;
  e += yl;
  return lin_square(e);
}

static QuadPoly parity_poly(const std::vector<Bit>& bits,
                            VariableRegistry& reg, const std::string& prefix,
                            int odd, IntRegister* reg_out) {
  int n = static_cast<int>(bits.size());
  long long max_even = n - odd;
  if (max_even % 2 != 0) --max_even;
  if (max_even < 0) max_even = 0;
  IntRegister e_reg = make_even_register(max_even, reg, prefix, bits, -odd);
  if (reg_out) *reg_out = e_reg;
  LinExpr e;
  e.add_const(-odd);
  for (const Bit& b : bits) e.add(b, 1);
  LinExpr el = e_reg.as_lin();
  el *= -1;
  e += el;
  return lin_square(e);
}

QuadPoly parity_even(const std::vector<Bit>& bits, VariableRegistry& reg,
                     const std::string& name_prefix, IntRegister* reg_out) {
  return parity_poly(bits, reg, name_prefix, 0, reg_out);
}

QuadPoly parity_odd(const std::vector<Bit>& bits, VariableRegistry& reg,
                    const std::string& name_prefix, IntRegister* reg_out) {
  return parity_poly(bits, reg, name_prefix, 1, reg_out);
}

}  // namespace permqubo
