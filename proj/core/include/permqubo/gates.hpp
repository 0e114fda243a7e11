#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permqubo/pbf.hpp"

namespace permqubo {

enum class CmpKind { GT, GTE, LT, LTE, EQ, NEQ };

const char* cmp_name(CmpKind k);

struct GateBuild {
  QuadPoly poly;
  std::vector<Bus> outputs;
  std::optional<VarId> control;
  std::vector<VarId> aux;
};

// Controlled swap over k-bit buses: c = 0 keeps (x1, x2), c = 1 swaps.
// 2k auxiliaries for variable-only buses.
QuadPoly swap_gate(const Bus& x1, const Bus& x2, const Bus& y1, const Bus& y2,
                   const Bit& c, VariableRegistry& reg,
                   const std::string& label = "sw",
                   std::vector<VarId>* aux_out = nullptr);

// Comparison gates.  GT/GTE/LT/LTE use 3k+1 auxiliaries, EQ/NEQ 2k+1
// (variable-only buses and variable c; constants reduce the count).
QuadPoly compare_gate(CmpKind kind, const Bus& x, const Bus& y, const Bit& c,
                      VariableRegistry& reg, const std::string& label = "cmp",
                      std::vector<VarId>* aux_out = nullptr);

QuadPoly gt_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label = "gt",
                 std::vector<VarId>* aux_out = nullptr);
QuadPoly gte_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label = "gte",
                  std::vector<VarId>* aux_out = nullptr);
QuadPoly lt_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label = "lt",
                 std::vector<VarId>* aux_out = nullptr);
QuadPoly lte_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label = "lte",
                  std::vector<VarId>* aux_out = nullptr);
QuadPoly eq_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label = "eq",
                 std::vector<VarId>* aux_out = nullptr);
QuadPoly neq_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label = "neq",
                  std::vector<VarId>* aux_out = nullptr);

struct CeOptions {
  // Comparison restricted to the top key_width bits; swap covers the whole
  // bus.  -1 means compare the full width.
  int key_width = -1;
  std::optional<Bus> out1, out2;
  std::optional<Bit> control;
  std::string label = "ce";
};

// Compare-exchange: GT on the (key bits of the) inputs drives a controlled
// swap of the full strings.  5k+1 auxiliaries for a full-width comparison,
// 2k+3b+1 when only b key bits are compared.
GateBuild ce_gate(const Bus& x1, const Bus& x2, VariableRegistry& reg,
                  CeOptions opts = {});

GateBuild keyed_ce_gate(const Bus& x1, const Bus& x2, int key_width,
                        VariableRegistry& reg, CeOptions opts = {});

}  // namespace permqubo
