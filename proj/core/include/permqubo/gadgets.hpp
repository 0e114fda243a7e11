#pragma once

#include <string>
#include <vector>

#include "permqubo/pbf.hpp"

namespace permqubo {

// Auxiliary integer register Y = sum coeff_i * y_i used by the threshold
// and parity gadgets.
struct IntRegister {
  std::vector<VarId> bits;
  std::vector<long long> coeffs;  // 1,2,4,... or 2,4,8,... for parity

  LinExpr as_lin() const;
};

// (sum bits - k)^2, zero iff exactly k bits are one.
QuadPoly hamming_eq(const std::vector<Bit>& bits, int k);

// (sum bits - k - Y)^2 with a fresh minimal-width register; min over Y is
// zero iff sum >= k.
QuadPoly threshold_ge(const std::vector<Bit>& bits, int k,
                      VariableRegistry& reg,
                      const std::string& name_prefix = "thr",
                      IntRegister* reg_out = nullptr);

// (sum bits - E)^2 with an even-valued register E; zero attainable iff the
// sum is even.
QuadPoly parity_even(const std::vector<Bit>& bits, VariableRegistry& reg,
                     const std::string& name_prefix = "even",
                     IntRegister* reg_out = nullptr);

// (sum bits - E - 1)^2; zero attainable iff the sum is odd.
QuadPoly parity_odd(const std::vector<Bit>& bits, VariableRegistry& reg,
                    const std::string& name_prefix = "odd",
                    IntRegister* reg_out = nullptr);

}  // namespace permqubo
