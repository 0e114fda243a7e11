#include "permqubo/gates.hpp"

#include <stdexcept>

#include "permqubo/quadratize.hpp"

namespace permqubo {

const char* cmp_name(CmpKind k) {
  switch (k) {
    case CmpKind::GT:
      return "gt";
    case CmpKind::GTE:
      return "gte";
    case CmpKind::LT:
      return "lt";
    case CmpKind::LTE:
      return "lte";
    case CmpKind::EQ:
      return "eq";
    case CmpKind::NEQ:
      return "neq";
  }
  return "cmp";
}

namespace {

void check_widths(const Bus& x, const Bus& y) {
  if (x.width() != y.width()) {
    throw std::invalid_argument("bus width mismatch");
  }
}

// Number of differing bits above position i (1-based), as in the prefix
// equality counter of the comparison construction.
MultiPoly differing_bits_above(const Bus& x, const Bus& y, int i) {
  MultiPoly g;
  int k = x.width();
  for (int j = i + 1; j <= k; ++j) {
    MultiPoly xb = MultiPoly::from_bit(x.bits[j - 1]);
    MultiPoly yb = MultiPoly::from_bit(y.bits[j - 1]);
    g += xb;
    g += yb;
    MultiPoly prod = xb * yb;
    prod *= -2;
    g += prod;
  }
  return g;
}

}  // namespace

QuadPoly compare_gate(CmpKind kind, const Bus& x_in, const Bus& y_in,
                      const Bit& c, VariableRegistry& reg,
                      const std::string& label, std::vector<VarId>* aux_out) {
  if (kind == CmpKind::LT) {
    return compare_gate(CmpKind::GT, y_in, x_in, c, reg, label, aux_out);
  }
  if (kind == CmpKind::LTE) {
    return compare_gate(CmpKind::GTE, y_in, x_in, c, reg, label, aux_out);
  }
  check_widths(x_in, y_in);
  const Bus& x = x_in;
  const Bus& y = y_in;
  const int k = x.width();

  // Selectors: p_0 marks x == y, p_i marks "highest differing bit is i".
  std::vector<VarId> p(k + 1);
  for (int i = 0; i <= k; ++i) {
    p[i] = reg.fresh(label + ".p" + std::to_string(i), Role::Auxiliary);
    reg.set_hint(p[i], HintSelector{x, y, i});
    if (aux_out) aux_out->push_back(p[i]);
  }

  MultiPoly m;

  // (i) exactly one selector
  {
    LinExpr e;
    e.add_const(-1);
    for (int i = 0; i <= k; ++i) e.add(p[i], 1);
    m += square(MultiPoly::from_lin(e));
  }

  // (ii) all bits above the selected one agree
  for (int i = 0; i <= k; ++i) {
    MultiPoly pi;
    pi.add_term({p[i]}, 1);
    m += pi * differing_bits_above(x, y, i);
  }

  if (kind == CmpKind::GT || kind == CmpKind::GTE) {
    // (iii) the selected bit decides the comparison:
    //       h = 1 + (1 - 2c)(x^i - y^i)
    MultiPoly mc = MultiPoly::from_bit(c);
    for (int i = 1; i <= k; ++i) {
      MultiPoly diff = MultiPoly::from_bit(x.bits[i - 1]);
      diff -= MultiPoly::from_bit(y.bits[i - 1]);
      MultiPoly h = MultiPoly::constant(1);
      h += diff;
      MultiPoly cd = mc * diff;
      cd *= -2;
      h += cd;
      MultiPoly pi;
      pi.add_term({p[i]}, 1);
      m += pi * h;
    }
    // (iv) equal numbers force the comparison bit
    MultiPoly p0;
    p0.add_term({p[0]}, 1);
    if (kind == CmpKind::GT) {
      m += mc * p0;
    } else {
      MultiPoly notc = MultiPoly::constant(1);
      notc -= mc;
      m += notc * p0;
    }
  } else {
    // EQ/NEQ: the selected bit must actually differ, and the answer is
    // tied to the equality selector.
    for (int i = 1; i <= k; ++i) {
      MultiPoly xb = MultiPoly::from_bit(x.bits[i - 1]);
      MultiPoly yb = MultiPoly::from_bit(y.bits[i - 1]);
      MultiPoly same = MultiPoly::constant(1);
      same -= xb;
      same -= yb;
      MultiPoly prod = xb * yb;
      prod *= 2;
      same += prod;
      MultiPoly pi;
      pi.add_term({p[i]}, 1);
      m += pi * same;
    }
    LinExpr couple;
    couple.add(c, 1);
    if (kind == CmpKind::EQ) {
      couple.add(p[0], -1);
    } else {
      couple.add(p[0], 1);
      couple.add_const(-1);
    }
    m += square(MultiPoly::from_lin(couple));
  }

  // Quadratize: products of matching bit pairs first, then selector-and-
  // comparison-bit products.
  QuadPoly penalties;
  for (int j = 1; j <= k; ++j) {
    const Bit& xb = x.bits[j - 1];
    const Bit& yb = y.bits[j - 1];
    if (xb.is_var() && yb.is_var()) {
      penalties += apply_substitution(m, xb.var, yb.var, reg,
                                      label + ".d" + std::to_string(j),
                                      aux_out);
    }
  }
  if ((kind == CmpKind::GT || kind == CmpKind::GTE) && !c.is_const()) {
    for (int i = 1; i <= k; ++i) {
      penalties += apply_substitution(m, p[i], c.var, reg,
                                      label + ".e" + std::to_string(i),
                                      aux_out);
    }
  }

  QuadPoly result = m.to_quad();
  result += penalties;
  return result;
}

QuadPoly gt_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label,
                 std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::GT, x, y, c, reg, label, aux_out);
}
QuadPoly gte_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label,
                  std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::GTE, x, y, c, reg, label, aux_out);
}
QuadPoly lt_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label,
                 std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::LT, x, y, c, reg, label, aux_out);
}
QuadPoly lte_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label,
                  std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::LTE, x, y, c, reg, label, aux_out);
}
QuadPoly eq_gate(const Bus& x, const Bus& y, const Bit& c,
                 VariableRegistry& reg, const std::string& label,
                 std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::EQ, x, y, c, reg, label, aux_out);
}
QuadPoly neq_gate(const Bus& x, const Bus& y, const Bit& c,
                  VariableRegistry& reg, const std::string& label,
                  std::vector<VarId>* aux_out) {
  return compare_gate(CmpKind::NEQ, x, y, c, reg, label, aux_out);
}

QuadPoly swap_gate(const Bus& x1, const Bus& x2, const Bus& y1, const Bus& y2,
                   const Bit& c, VariableRegistry& reg,
                   const std::string& label, std::vector<VarId>* aux_out) {
  check_widths(x1, x2);
  check_widths(x1, y1);
  check_widths(x1, y2);
  const int k = x1.width();

  QuadPoly result;
  MultiPoly mc = MultiPoly::from_bit(c);
  MultiPoly notc = MultiPoly::constant(1);
  notc -= mc;

  for (int b = 0; b < k; ++b) {
    MultiPoly x1b = MultiPoly::from_bit(x1.bits[b]);
    MultiPoly x2b = MultiPoly::from_bit(x2.bits[b]);

    MultiPoly sel1 = notc * x1b + mc * x2b;  // goes to y1
    MultiPoly sel2 = notc * x2b + mc * x1b;  // goes to y2

    MultiPoly m = square(MultiPoly::from_bit(y1.bits[b]) - sel1) +
                  square(MultiPoly::from_bit(y2.bits[b]) - sel2);

    QuadPoly penalties;
    if (!c.is_const()) {
      if (x1.bits[b].is_var()) {
        penalties += apply_substitution(m, c.var, x1.bits[b].var, reg,
                                        label + ".a" + std::to_string(b + 1),
                                        aux_out, true);
      }
      if (x2.bits[b].is_var()) {
        penalties += apply_substitution(m, c.var, x2.bits[b].var, reg,
                                        label + ".b" + std::to_string(b + 1),
                                        aux_out, true);
      }
    }
    result += m.to_quad();
    result += penalties;
  }
  return result;
}

namespace {

void set_select_hints(VariableRegistry& reg, const Bit& c, const Bus& x1,
                      const Bus& x2, const Bus& y1, const Bus& y2) {
  for (int b = 0; b < x1.width(); ++b) {
    const Bit& o1 = y1.bits[b];
    const Bit& o2 = y2.bits[b];
    if (o1.is_var() && reg.role(o1.var) != Role::Input &&
        !reg.hint(o1.var)) {
      reg.set_hint(o1.var, HintSelect{c, x1.bits[b], x2.bits[b]});
    }
    if (o2.is_var() && reg.role(o2.var) != Role::Input &&
        !reg.hint(o2.var)) {
      reg.set_hint(o2.var, HintSelect{c, x2.bits[b], x1.bits[b]});
    }
  }
}

}  // namespace

GateBuild ce_gate(const Bus& x1, const Bus& x2, VariableRegistry& reg,
                  CeOptions opts) {
  check_widths(x1, x2);
  const int k = x1.width();
  int b = opts.key_width < 0 ? k : opts.key_width;
  if (b < 1 || b > k) throw std::invalid_argument("key width out of range");

  GateBuild g;
  Bus key1 = b == k ? x1 : x1.high(b);
  Bus key2 = b == k ? x2 : x2.high(b);

  Bit c;
  if (opts.control) {
    c = *opts.control;
  } else {
    VarId cv = reg.fresh(opts.label + ".c", Role::Control);
    reg.set_hint(cv, HintComparison{key1, key2, CmpOp::Gt});
    c = Bit::of(cv);
  }
  if (c.is_var()) g.control = c.var;

  g.poly = compare_gate(CmpKind::GT, key1, key2, c, reg, opts.label + ".gt",
                        &g.aux);

  Bus y1 = opts.out1 ? *opts.out1
                     : reg.fresh_bus(opts.label + ".y1", k, Role::Output);
  Bus y2 = opts.out2 ? *opts.out2
                     : reg.fresh_bus(opts.label + ".y2", k, Role::Output);
  set_select_hints(reg, c, x1, x2, y1, y2);

  g.poly += swap_gate(x1, x2, y1, y2, c, reg, opts.label + ".sw", &g.aux);
  g.outputs = {y1, y2};
  return g;
}

GateBuild keyed_ce_gate(const Bus& x1, const Bus& x2, int key_width,
                        VariableRegistry& reg, CeOptions opts) {
  opts.key_width = key_width;
  return ce_gate(x1, x2, reg, opts);
}

}  // namespace permqubo
