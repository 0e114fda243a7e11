#include "permqubo/encodings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permqubo/gadgets.hpp"
#include "permqubo/gates.hpp"
#include "permqubo/quadratize.hpp"

namespace permqubo {

bool is_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return n > 0;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Permutation identity_perm(int n) {
  Permutation r(n);
  for (int i = 0; i < n; ++i) r[i] = i + 1;
  return r;
}

int bit_width_for(int n) {
  int k = 0;
  while ((1 << k) < n + 1) ++k;
  return k;
}

const DecodeGroup& Encoding::group(const std::string& name) const {
  for (const auto& g : groups) {
    if (g.name == name) return g;
  }
  throw std::out_of_range("no decode group named " + name);
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_perm_arg(const Permutation& p, int n, const std::string& what) {
  require(static_cast<int>(p.size()) == n && is_permutation(p),
          what + " must be a permutation of 1.." + std::to_string(n));
}

void note_network(Encoding& e, int key_width) {
  e.gadget_profile.insert({"gt", key_width});
  e.gadget_profile.insert({"swap", 1});
}

Bus concat_high_to_low(const std::vector<Bus>& parts) {
  Bus r = parts.back();
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) {
    r = bus_concat(parts[i], r);
  }
  return r;
}

// Literals that are 1 exactly where the bus bits differ from value j.
std::vector<Bit> differ_literals(const Bus& b, int j) {
  std::vector<Bit> lits;
  lits.reserve(b.width());
  for (int t = 0; t < b.width(); ++t) {
    Bit lit = b.bits[t];
    if ((j >> t) & 1) lit = lit.complement();
    lits.push_back(lit);
  }
  return lits;
}

void add_forbid(Encoding& e, const std::vector<Bus>& buses,
                const Permutation& tau, const std::string& label) {
  std::vector<Bit> lits;
  for (std::size_t i = 0; i < buses.size(); ++i) {
    auto part = differ_literals(buses[i], tau[i]);
    lits.insert(lits.end(), part.begin(), part.end());
  }
  e.poly += threshold_ge(lits, 1, *e.reg, label);
}

void add_involution(Encoding& e, const std::vector<Bus>& x,
                    const std::string& label) {
  const int n = e.n, k = e.k;
  std::vector<Bus> in, out;
  for (int i = 0; i < n; ++i) {
    Bus id = Bus::constant(i + 1, k);
    in.push_back(bus_concat(x[i], id));
    out.push_back(bus_concat(id, x[i]));
  }
  NetworkOptions opts;
  opts.label = label;
  e.poly += keyed_network_poly(e.topology, std::move(in), std::move(out), k,
                               *e.reg, std::move(opts))
                .poly;
  note_network(e, k);
}

// Buses carrying x^2 .. x^(r-1), hinted as repeated application of x, plus
// the keyed network forcing x^r = id.
std::vector<std::vector<Bus>> add_power(Encoding& e, const std::vector<Bus>& x,
                                        int r, const std::string& label) {
  const int n = e.n, k = e.k;
  if (r == 2) {
    add_involution(e, x, label);
    return {};
  }
  VariableRegistry& reg = *e.reg;
  std::vector<std::vector<Bus>> pw;
  const std::vector<Bus>* prev = &x;
  for (int t = 2; t <= r - 1; ++t) {
    std::vector<Bus> cur;
    for (int i = 0; i < n; ++i) {
      Bus b = reg.fresh_bus(label + ".p" + std::to_string(t) + "_" +
                                std::to_string(i + 1),
                            k, Role::Auxiliary);
      for (int bit = 0; bit < k; ++bit) {
        reg.set_hint(b.bits[bit].var, HintPermImageBit{x, (*prev)[i], bit});
      }
      cur.push_back(std::move(b));
    }
    pw.push_back(std::move(cur));
    prev = &pw.back();
  }

  std::vector<Bus> in, out;
  for (int i = 0; i < n; ++i) {
    std::vector<Bus> in_parts{x[i]};
    std::vector<Bus> out_parts{Bus::constant(i + 1, k), x[i]};
    for (const auto& level : pw) {
      in_parts.push_back(level[i]);
      out_parts.push_back(level[i]);
    }
    in_parts.push_back(Bus::constant(i + 1, k));
    in.push_back(concat_high_to_low(in_parts));
    out.push_back(concat_high_to_low(out_parts));
  }
  NetworkOptions opts;
  opts.label = label;
  e.poly += keyed_network_poly(e.topology, std::move(in), std::move(out), k,
                               *e.reg, std::move(opts))
                .poly;
  note_network(e, k);
  return pw;
}

Encoding start(const EncodingMeta& meta, int min_n) {
  require(meta.n >= min_n,
          meta.construction + " needs n >= " + std::to_string(min_n));
  Encoding e;
  e.reg = std::make_shared<VariableRegistry>();
  e.meta = meta;
  e.n = meta.n;
  e.k = meta.k > 0 ? meta.k : bit_width_for(meta.n);
  require(e.k >= bit_width_for(meta.n), "bus width too small for n");
  e.topology = make_topology(meta.topo, std::max(meta.n, 2));
  return e;
}

std::vector<Bus> input_perm_buses(Encoding& e, const std::string& prefix) {
  std::vector<Bus> r;
  for (int i = 1; i <= e.n; ++i) {
    r.push_back(e.reg->fresh_bus(prefix + std::to_string(i), e.k, Role::Input));
  }
  return r;
}

std::vector<Bus> const_perm_buses(const Permutation& p, int k) {
  std::vector<Bus> r;
  for (int v : p) r.push_back(Bus::constant(v, k));
  return r;
}

std::vector<Bus> id_buses(int n, int k) {
  return const_perm_buses(identity_perm(n), k);
}

Encoding build_perm(const EncodingMeta& meta) {
  Encoding e = start(meta, 2);
  const int n = e.n, k = e.k;
  VariableRegistry& reg = *e.reg;

  std::map<int, int> fixed;
  for (const auto& c : meta.constraints) {
    if (c.kind != "value") continue;
    require(c.i >= 1 && c.i <= n && c.j >= 1 && c.j <= n,
            "value constraint out of range");
    auto [it, inserted] = fixed.emplace(c.i, c.j);
    require(inserted || it->second == c.j,
            "conflicting values for position " + std::to_string(c.i));
    for (const auto& [i2, j2] : fixed) {
      require(i2 == c.i || j2 != c.j,
              "value " + std::to_string(c.j) + " fixed at two positions");
    }
  }

  std::vector<Bus> x;
  for (int i = 1; i <= n; ++i) {
    auto it = fixed.find(i);
    x.push_back(it != fixed.end()
                    ? Bus::constant(it->second, k)
                    : reg.fresh_bus("x" + std::to_string(i), k, Role::Input));
  }

  NetworkOptions opts;
  opts.label = "nw";
  NetworkBuild nb = network_poly(e.topology, x, id_buses(n, k), reg, opts);
  e.poly = nb.poly;
  note_network(e, k);
  e.groups.push_back({"perm", x});

  int idx = 0;
  for (const auto& c : meta.constraints) {
    ++idx;
    const std::string tag = "c" + std::to_string(idx);
    if (c.kind == "value") {
      continue;
    } else if (c.kind == "forbid") {
      require(c.i >= 1 && c.i <= n && c.j >= 1 && c.j <= n,
              "forbid constraint out of range");
      e.poly += threshold_ge(differ_literals(x[c.i - 1], c.j), 1, reg, tag);
    } else if (c.kind == "derangement") {
      for (int i = 1; i <= n; ++i) {
        require(fixed.find(i) == fixed.end() || fixed[i] != i,
                "derangement conflicts with a fixed point");
        e.poly += threshold_ge(differ_literals(x[i - 1], i), 1, reg,
                               tag + ".d" + std::to_string(i));
      }
    } else if (c.kind == "forbid_perm") {
      check_perm_arg(c.tau, n, "forbidden permutation");
      add_forbid(e, x, c.tau, tag);
    } else if (c.kind == "parity") {
      std::vector<Bit> bits(nb.controls.begin(), nb.controls.end());
      e.poly += c.parity == ParityKind::Even ? parity_even(bits, reg, tag)
                                             : parity_odd(bits, reg, tag);
    } else if (c.kind == "involution") {
      add_involution(e, x, tag);
    } else if (c.kind == "power" || c.kind == "order") {
      require(c.r >= 2, "power exponent must be at least 2");
      auto pw = add_power(e, x, c.r, tag);
      if (c.kind == "order") {
        Permutation id = identity_perm(n);
        add_forbid(e, x, id, tag + ".f1");
        for (std::size_t t = 0; t < pw.size(); ++t) {
          add_forbid(e, pw[t], id, tag + ".f" + std::to_string(t + 2));
        }
      }
    } else {
      throw std::invalid_argument("unknown constraint kind: " + c.kind);
    }
  }
  return e;
}

Encoding build_matrix(const EncodingMeta& meta) {
  require(meta.constraints.empty(), "matrix construction takes no constraints");
  Encoding e;
  e.reg = std::make_shared<VariableRegistry>();
  e.meta = meta;
  e.n = meta.n;
  e.k = 0;
  require(e.n >= 1, "matrix needs n >= 1");
  VariableRegistry& reg = *e.reg;
  const int n = e.n;

  std::vector<Bus> rows;
  for (int i = 1; i <= n; ++i) {
    rows.push_back(reg.fresh_bus("p" + std::to_string(i), n, Role::Input));
  }
  for (int i = 0; i < n; ++i) e.poly += hamming_eq(rows[i].bits, 1);
  for (int j = 0; j < n; ++j) {
    std::vector<Bit> col;
    for (int i = 0; i < n; ++i) col.push_back(rows[i].bits[j]);
    e.poly += hamming_eq(col, 1);
  }
  e.groups.push_back({"perm", rows});
  return e;
}

Encoding build_match(const EncodingMeta& meta) {
  Encoding e = start(meta, 2);
  const int n = e.n, k = e.k;
  const int ell = static_cast<int>(meta.pattern.size());
  require(ell >= 1 && ell <= n, "pattern length must be in 1..n");
  check_perm_arg(meta.pattern, ell, "pattern");
  VariableRegistry& reg = *e.reg;
  e.uniform = false;

  std::vector<Bus> x = input_perm_buses(e, "x");
  Bus p = reg.fresh_bus("p", n, Role::Input);
  for (const Bit& b : p.bits) e.selection.push_back(b.var);

  NetworkOptions opts;
  opts.label = "nw";
  e.poly = network_poly(e.topology, x, id_buses(n, k), reg, opts).poly;
  note_network(e, k);

  e.poly += hamming_eq(p.bits, n - ell);

  // Stable move of the selected positions to the front: key is the
  // selection bit over the position index, payload is the value.
  std::vector<Bus> in, out;
  std::vector<Bus> w;
  for (int i = 0; i < n; ++i) {
    Bus key = bus_concat(Bus(std::vector<Bit>{p.bits[i]}),
                         Bus::constant(i + 1, k));
    in.push_back(bus_concat(key, x[i]));
    Bus qi = reg.fresh_bus("q" + std::to_string(i + 1), k + 1, Role::Auxiliary);
    Bus wi = reg.fresh_bus("w" + std::to_string(i + 1), k, Role::Auxiliary);
    out.push_back(bus_concat(qi, wi));
    w.push_back(std::move(wi));
  }
  NetworkOptions sopts;
  sopts.label = "sel";
  e.poly += keyed_network_poly(e.topology, std::move(in), std::move(out),
                               k + 1, reg, std::move(sopts))
                .poly;
  note_network(e, k + 1);

  // Relative order against the pattern: sorting the first ell payloads with
  // the control settings that sort the pattern must succeed at every gate.
  if (ell >= 2) {
    NetworkTopology pt = make_topology(meta.topo, ell);
    std::vector<std::uint64_t> pv(meta.pattern.begin(), meta.pattern.end());
    std::vector<int> ctl;
    run_network(pt, pv, 0, &ctl);
    NetworkOptions popts;
    popts.label = "pat";
    for (int c : ctl) popts.fixed_controls.push_back(Bit::constant(c));
    std::vector<Bus> head(w.begin(), w.begin() + ell);
    e.poly += network_poly(pt, std::move(head), {}, reg, std::move(popts)).poly;
    note_network(e, k);
  }

  e.groups.push_back({"perm", x});
  return e;
}

Encoding build_compose(const EncodingMeta& meta) {
  require(meta.constraints.empty(), "compose takes no constraints");
  Encoding e = start(meta, 2);
  const int n = e.n, k = e.k;
  VariableRegistry& reg = *e.reg;

  std::vector<Bus> x = input_perm_buses(e, "x");
  std::vector<Bus> y = input_perm_buses(e, "y");
  std::vector<Bus> xp;
  for (int i = 1; i <= n; ++i) {
    xp.push_back(reg.fresh_bus("xp" + std::to_string(i), k, Role::Auxiliary));
  }

  // Sorting the keys x to id carries the payload y into xp = y after x^-1,
  // so y = xp composed with x.
  std::vector<Bus> in, out;
  for (int i = 0; i < n; ++i) {
    in.push_back(bus_concat(x[i], y[i]));
    out.push_back(bus_concat(Bus::constant(i + 1, k), xp[i]));
  }
  NetworkOptions o1;
  o1.label = "cw";
  e.poly = keyed_network_poly(e.topology, std::move(in), std::move(out), k, reg,
                              std::move(o1))
               .poly;
  NetworkOptions o2;
  o2.label = "pp";
  e.poly += network_poly(e.topology, xp, id_buses(n, k), reg, std::move(o2))
                .poly;
  note_network(e, k);

  e.groups.push_back({"pi", xp});
  e.groups.push_back({"pi_prime", x});
  e.groups.push_back({"sigma", y});
  return e;
}

Encoding build_commute(const EncodingMeta& meta) {
  require(meta.constraints.empty(), "commute takes no constraints");
  Encoding e = start(meta, 2);
  const int n = e.n, k = e.k;
  VariableRegistry& reg = *e.reg;

  std::vector<Bus> x = input_perm_buses(e, "x");
  std::vector<Bus> y = input_perm_buses(e, "y");
  std::vector<Bus> xp;
  if (meta.fixed_other.empty()) {
    for (int i = 1; i <= n; ++i) {
      xp.push_back(reg.fresh_bus("xp" + std::to_string(i), k, Role::Auxiliary));
    }
  } else {
    check_perm_arg(meta.fixed_other, n, "fixed factor");
    xp = const_perm_buses(meta.fixed_other, k);
  }

  // First network gives xp with y = xp after x; the second requires
  // y = x after xp, so the two products agree.
  std::vector<Bus> in1, out1, in2, out2;
  for (int i = 0; i < n; ++i) {
    Bus id = Bus::constant(i + 1, k);
    in1.push_back(bus_concat(x[i], y[i]));
    out1.push_back(bus_concat(id, xp[i]));
    in2.push_back(bus_concat(xp[i], y[i]));
    out2.push_back(bus_concat(id, x[i]));
  }
  NetworkOptions o1;
  o1.label = "n1";
  e.poly = keyed_network_poly(e.topology, std::move(in1), std::move(out1), k,
                              reg, std::move(o1))
               .poly;
  NetworkOptions o2;
  o2.label = "n2";
  e.poly += keyed_network_poly(e.topology, std::move(in2), std::move(out2), k,
                               reg, std::move(o2))
                .poly;
  note_network(e, k);

  e.groups.push_back({"pi", x});
  e.groups.push_back({"pi_prime", xp});
  e.groups.push_back({"sigma", y});
  return e;
}

Encoding build_conjugate(const EncodingMeta& meta) {
  require(meta.constraints.empty(), "conjugate takes no constraints");
  Encoding e = start(meta, 2);
  const int n = e.n, k = e.k;
  VariableRegistry& reg = *e.reg;

  std::vector<Bus> y = input_perm_buses(e, "y");
  std::vector<Bus> z = input_perm_buses(e, "z");
  std::vector<Bus> xp = input_perm_buses(e, "xp");
  std::vector<Bus> x;
  if (meta.fixed_other.empty()) {
    for (int i = 1; i <= n; ++i) {
      x.push_back(reg.fresh_bus("x" + std::to_string(i), k, Role::Auxiliary));
    }
  } else {
    check_perm_arg(meta.fixed_other, n, "fixed permutation");
    x = const_perm_buses(meta.fixed_other, k);
  }

  // x = z after y^-1 and y = z after xp^-1, hence x = y xp y^-1.
  std::vector<Bus> in1, out1, in2, out2;
  for (int i = 0; i < n; ++i) {
    Bus id = Bus::constant(i + 1, k);
    in1.push_back(bus_concat(y[i], z[i]));
    out1.push_back(bus_concat(id, x[i]));
    in2.push_back(bus_concat(xp[i], z[i]));
    out2.push_back(bus_concat(id, y[i]));
  }
  NetworkOptions o1;
  o1.label = "n1";
  e.poly = keyed_network_poly(e.topology, std::move(in1), std::move(out1), k,
                              reg, std::move(o1))
               .poly;
  NetworkOptions o2;
  o2.label = "n2";
  e.poly += keyed_network_poly(e.topology, std::move(in2), std::move(out2), k,
                               reg, std::move(o2))
                .poly;
  if (meta.fixed_other.empty()) {
    NetworkOptions o3;
    o3.label = "px";
    e.poly += network_poly(e.topology, x, id_buses(n, k), reg, std::move(o3))
                  .poly;
  }
  note_network(e, k);

  e.groups.push_back({"pi", x});
  e.groups.push_back({"pi_prime", xp});
  e.groups.push_back({"sigma", y});
  e.hidden.push_back({"z", z});
  return e;
}

Encoding build_matrix_compose(const EncodingMeta& meta) {
  require(meta.constraints.empty(),
          "matrix_compose construction takes no constraints");
  Encoding e;
  e.reg = std::make_shared<VariableRegistry>();
  e.meta = meta;
  e.n = meta.n;
  e.k = 0;
  require(e.n >= 1, "matrix_compose needs n >= 1");
  VariableRegistry& reg = *e.reg;
  const int n = e.n;

  auto make_matrix = [&](const std::string& prefix) {
    std::vector<Bus> rows;
    for (int i = 1; i <= n; ++i) {
      rows.push_back(reg.fresh_bus(prefix + std::to_string(i), n, Role::Input));
    }
    for (int i = 0; i < n; ++i) e.poly += hamming_eq(rows[i].bits, 1);
    for (int j = 0; j < n; ++j) {
      std::vector<Bit> col;
      for (int i = 0; i < n; ++i) col.push_back(rows[i].bits[j]);
      e.poly += hamming_eq(col, 1);
    }
    return rows;
  };
  std::vector<Bus> P = make_matrix("p");
  std::vector<Bus> Pp = make_matrix("pp");
  std::vector<Bus> S = make_matrix("s");

  // s_ij = sum_k pp_ik p_kj, quadratized per cell.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LinExpr cell;
      cell.add(S[i].bits[j], 1);
      MultiPoly m = MultiPoly::from_lin(cell);
      std::vector<std::pair<Bit, long long>> target;
      for (int t = 0; t < n; ++t) {
        m -= MultiPoly::from_bit(Pp[i].bits[t]) * MultiPoly::from_bit(P[t].bits[j]);
      }
      m = square(m);
      QuadPoly penalties;
      std::vector<VarId> zs;
      for (int t = 0; t < n; ++t) {
        std::string name = "z" + std::to_string(i + 1) + "_" +
                           std::to_string(t + 1) + "_" + std::to_string(j + 1);
        penalties += apply_substitution(m, Pp[i].bits[t].var, P[t].bits[j].var,
                                        reg, name, &zs);
      }
      for (VarId z : zs) target.emplace_back(Bit::of(z), 1);
      reg.set_hint(S[i].bits[j].var, HintRegisterBit{std::move(target), 0, 0});
      e.poly += m.to_quad();
      e.poly += penalties;
    }
  }

  e.groups.push_back({"pi", P});
  e.groups.push_back({"pi_prime", Pp});
  e.groups.push_back({"sigma", S});
  return e;
}

}  // namespace

Encoding build_encoding(const EncodingMeta& meta) {
  if (meta.construction == "perm") return build_perm(meta);
  if (meta.construction == "matrix") return build_matrix(meta);
  if (meta.construction == "match") return build_match(meta);
  if (meta.construction == "compose") return build_compose(meta);
  if (meta.construction == "commute") return build_commute(meta);
  if (meta.construction == "conjugate") return build_conjugate(meta);
  if (meta.construction == "matrix_compose") return build_matrix_compose(meta);
  throw std::invalid_argument("unknown construction: " + meta.construction);
}

Encoding perm_encoding(int n, TopologyKind topo, int width) {
  EncodingMeta m;
  m.construction = "perm";
  m.n = n;
  m.k = width;
  m.topo = topo;
  return build_encoding(m);
}

Encoding perm_matrix_encoding(int n) {
  EncodingMeta m;
  m.construction = "matrix";
  m.n = n;
  return build_encoding(m);
}

static Encoding with_constraint(const Encoding& e, ConstraintSpec c) {
  require(e.meta.construction == "perm",
          "constraints apply to the perm construction");
  EncodingMeta m = e.meta;
  m.constraints.push_back(std::move(c));
  return build_encoding(m);
}

Encoding constrain_value(const Encoding& e, int i, int j) {
  ConstraintSpec c;
  c.kind = "value";
  c.i = i;
  c.j = j;
  return with_constraint(e, std::move(c));
}

Encoding fixed_point(const Encoding& e, int i) { return constrain_value(e, i, i); }

Encoding forbid_value(const Encoding& e, int i, int j) {
  ConstraintSpec c;
  c.kind = "forbid";
  c.i = i;
  c.j = j;
  return with_constraint(e, std::move(c));
}

Encoding derangement(const Encoding& e) {
  ConstraintSpec c;
  c.kind = "derangement";
  return with_constraint(e, std::move(c));
}

Encoding forbid_perm(const Encoding& e, const Permutation& tau) {
  ConstraintSpec c;
  c.kind = "forbid_perm";
  c.tau = tau;
  return with_constraint(e, std::move(c));
}

Encoding parity_constraint(const Encoding& e, ParityKind parity) {
  ConstraintSpec c;
  c.kind = "parity";
  c.parity = parity;
  return with_constraint(e, std::move(c));
}

Encoding involution_constraint(const Encoding& e) {
  ConstraintSpec c;
  c.kind = "involution";
  return with_constraint(e, std::move(c));
}

Encoding power_identity_constraint(int n, int r, TopologyKind topo) {
  ConstraintSpec c;
  c.kind = "power";
  c.r = r;
  return with_constraint(perm_encoding(n, topo), std::move(c));
}

Encoding order_constraint(int n, int r, TopologyKind topo) {
  ConstraintSpec c;
  c.kind = "order";
  c.r = r;
  return with_constraint(perm_encoding(n, topo), std::move(c));
}

Encoding compose_constraint(int n, TopologyKind topo) {
  EncodingMeta m;
  m.construction = "compose";
  m.n = n;
  m.topo = topo;
  return build_encoding(m);
}

Encoding commute_constraint(int n, TopologyKind topo,
                            std::optional<Permutation> fixed_other) {
  EncodingMeta m;
  m.construction = "commute";
  m.n = n;
  m.topo = topo;
  if (fixed_other) m.fixed_other = *fixed_other;
  return build_encoding(m);
}

Encoding conjugate_constraint(int n, TopologyKind topo,
                              std::optional<Permutation> fixed_pi) {
  EncodingMeta m;
  m.construction = "conjugate";
  m.n = n;
  m.topo = topo;
  if (fixed_pi) m.fixed_other = *fixed_pi;
  return build_encoding(m);
}

Encoding match_encoding(int n, const Permutation& pattern, TopologyKind topo) {
  EncodingMeta m;
  m.construction = "match";
  m.n = n;
  m.topo = topo;
  m.pattern = pattern;
  return build_encoding(m);
}

Encoding matrix_compose_encoding(int n) {
  EncodingMeta m;
  m.construction = "matrix_compose";
  m.n = n;
  return build_encoding(m);
}

}  // namespace permqubo
