#include "permqubo/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "permqubo/gates.hpp"

namespace permqubo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string perm_str(const Permutation& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracles.

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> r;
  Permutation p = identity_perm(n);
  do {
    r.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

int perm_parity(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return inv & 1;
}

Permutation perm_pow(const Permutation& p, int r) {
  Permutation acc = identity_perm(static_cast<int>(p.size()));
  for (int t = 0; t < r; ++t) acc = compose(p, acc);
  return acc;
}

bool perm_matches_pattern(const Permutation& pi, const Permutation& pattern) {
  const int n = static_cast<int>(pi.size());
  const int ell = static_cast<int>(pattern.size());
  if (ell > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != ell) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(pi[i]);
    }
    bool iso = true;
    for (int a = 0; a < ell && iso; ++a) {
      for (int b = a + 1; b < ell && iso; ++b) {
        if ((sub[a] < sub[b]) != (pattern[a] < pattern[b])) iso = false;
      }
    }
    if (iso) return true;
  }
  return false;
}

long long count_derangements(int n) {
  long long a = 1, b = 0;  // D(0), D(1)
  if (n == 0) return 1;
  for (int i = 2; i <= n; ++i) {
    long long c = (i - 1) * (b + a);
    a = b;
    b = c;
  }
  return n == 1 ? 0 : b;
}

// ---------------------------------------------------------------------------
// Decoding.

std::string DecodedObject::key() const {
  std::string s;
  for (const auto& [name, p] : perms) {
    s += name + "=" + perm_str(p) + ";";
  }
  if (!selected.empty()) {
    s += "sel=";
    for (std::size_t i = 0; i < selected.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(selected[i]);
    }
    s += ";";
  }
  return s;
}

DecodedObject decode(const Encoding& e, const Assignment& asg) {
  DecodedObject d;
  auto invalid = [&](const std::string& msg) {
    if (d.valid) d.error = msg;
    d.valid = false;
  };
  const bool onehot = e.meta.construction == "matrix" ||
                      e.meta.construction == "matrix_compose";
  for (const auto& g : e.groups) {
    Permutation p;
    for (const Bus& bus : g.buses) {
      int v = 0;
      if (onehot) {
        int cnt = 0;
        for (int j = 0; j < bus.width(); ++j) {
          if (asg.value_of(bus.bits[j])) {
            v = j + 1;
            ++cnt;
          }
        }
        if (cnt != 1) invalid("row of " + g.name + " is not one-hot");
      } else {
        std::uint64_t raw = asg.value_of(bus);
        if (raw < 1 || raw > static_cast<std::uint64_t>(e.n)) {
          invalid(g.name + " holds the out-of-range value " +
                  std::to_string(raw));
        }
        v = static_cast<int>(raw);
      }
      p.push_back(v);
    }
    if (d.valid && !is_permutation(p)) {
      invalid(g.name + " does not decode to a permutation");
    }
    d.perms[g.name] = std::move(p);
  }
  for (std::size_t i = 0; i < e.selection.size(); ++i) {
    if (asg.get(e.selection[i]) == 0) d.selected.push_back(static_cast<int>(i) + 1);
  }
  if (e.meta.construction == "match" &&
      d.selected.size() != e.meta.pattern.size()) {
    invalid("wrong number of selected positions");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Witness computation.

namespace {

void hint_deps(const WitnessHint& h, std::vector<VarId>& out) {
  auto bit = [&](const Bit& b) {
    if (!b.is_const()) out.push_back(b.var);
  };
  auto bus = [&](const Bus& b) {
    for (const Bit& x : b.bits) bit(x);
  };
  std::visit(overloaded{
                 [&](const HintProduct& p) {
                   bit(p.a);
                   bit(p.b);
                 },
                 [&](const HintSelect& s) {
                   bit(s.c);
                   bit(s.a);
                   bit(s.b);
                 },
                 [&](const HintComparison& c) {
                   bus(c.x);
                   bus(c.y);
                 },
                 [&](const HintSelector& s) {
                   bus(s.x);
                   bus(s.y);
                 },
                 [&](const HintRegisterBit& r) {
                   for (const auto& [b, c] : r.target) bit(b);
                 },
                 [&](const HintPermImageBit& p) {
                   for (const Bus& b : p.perm) bus(b);
                   bus(p.arg);
                 },
             },
             h);
}

int eval_hint(const WitnessHint& h, const Assignment& asg) {
  return std::visit(
      overloaded{
          [&](const HintProduct& p) {
            return asg.value_of(p.a) & asg.value_of(p.b);
          },
          [&](const HintSelect& s) {
            return asg.value_of(s.c) ? asg.value_of(s.b) : asg.value_of(s.a);
          },
          [&](const HintComparison& c) {
            auto vx = asg.value_of(c.x), vy = asg.value_of(c.y);
            switch (c.op) {
              case CmpOp::Gt:
                return vx > vy ? 1 : 0;
              case CmpOp::Gte:
                return vx >= vy ? 1 : 0;
              case CmpOp::Eq:
                return vx == vy ? 1 : 0;
              case CmpOp::Neq:
                return vx != vy ? 1 : 0;
            }
            return 0;
          },
          [&](const HintSelector& s) {
            std::uint64_t diff = asg.value_of(s.x) ^ asg.value_of(s.y);
            if (s.index == 0) return diff == 0 ? 1 : 0;
            if (diff == 0) return 0;
            return static_cast<int>(std::bit_width(diff)) == s.index ? 1 : 0;
          },
          [&](const HintRegisterBit& r) {
            long long v = r.target_offset;
            for (const auto& [b, c] : r.target) v += c * asg.value_of(b);
            if (v < 0) v = 0;
            return static_cast<int>((v >> r.shift) & 1);
          },
          [&](const HintPermImageBit& p) {
            std::uint64_t v = asg.value_of(p.arg);
            std::uint64_t img = 0;
            if (v >= 1 && v <= p.perm.size()) {
              img = asg.value_of(p.perm[v - 1]);
            }
            return static_cast<int>((img >> p.bit) & 1);
          },
      },
      h);
}

}  // namespace

WitnessEvaluator::WitnessEvaluator(const VariableRegistry& reg) : reg_(&reg) {
  const std::size_t n = reg.size();
  std::vector<std::vector<VarId>> dependents(n);
  std::vector<int> indeg(n, 0);
  std::size_t hinted = 0;
  for (VarId v = 0; v < n; ++v) {
    if (!reg.hint(v)) continue;
    ++hinted;
    std::vector<VarId> deps;
    hint_deps(*reg.hint(v), deps);
    for (VarId d : deps) {
      if (reg.hint(d)) {
        dependents[d].push_back(v);
        ++indeg[v];
      }
    }
  }
  order_.reserve(hinted);
  std::vector<VarId> queue;
  for (VarId v = 0; v < n; ++v) {
    if (reg.hint(v) && indeg[v] == 0) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VarId v = queue[head];
    order_.push_back(v);
    for (VarId w : dependents[v]) {
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (order_.size() != hinted) {
    throw std::logic_error("cyclic witness hints");
  }
}

void WitnessEvaluator::run(Assignment& asg) const {
  for (VarId v : order_) {
    asg.set(v, eval_hint(*reg_->hint(v), asg));
  }
}

std::vector<VarId> free_variables(const Encoding& e) {
  std::vector<VarId> r;
  for (VarId v = 0; v < e.reg->size(); ++v) {
    if (e.reg->role(v) == Role::Input && !e.reg->hint(v)) r.push_back(v);
  }
  return r;
}

std::vector<VarId> unhinted_derived(const Encoding& e) {
  std::vector<VarId> r;
  for (VarId v = 0; v < e.reg->size(); ++v) {
    if (e.reg->role(v) != Role::Input && !e.reg->hint(v)) r.push_back(v);
  }
  return r;
}

void witness_extend(const Encoding& e, Assignment& asg) {
  WitnessEvaluator(*e.reg).run(asg);
}

// ---------------------------------------------------------------------------
// Oracle solutions and their free-bit realizations.

namespace {

bool perm_satisfies(const Permutation& p, const ConstraintSpec& c) {
  const int n = static_cast<int>(p.size());
  if (c.kind == "value") return p[c.i - 1] == c.j;
  if (c.kind == "forbid") return p[c.i - 1] != c.j;
  if (c.kind == "derangement") {
    for (int i = 0; i < n; ++i) {
      if (p[i] == i + 1) return false;
    }
    return true;
  }
  if (c.kind == "forbid_perm") return p != c.tau;
  if (c.kind == "parity") {
    return perm_parity(p) == (c.parity == ParityKind::Even ? 0 : 1);
  }
  if (c.kind == "involution") return perm_pow(p, 2) == identity_perm(n);
  if (c.kind == "power") return perm_pow(p, c.r) == identity_perm(n);
  if (c.kind == "order") {
    if (perm_pow(p, c.r) != identity_perm(n)) return false;
    for (int t = 1; t < c.r; ++t) {
      if (perm_pow(p, t) == identity_perm(n)) return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown constraint kind: " + c.kind);
}

DecodedObject triple(Permutation pi, Permutation pi_prime, Permutation sigma) {
  DecodedObject d;
  d.perms["pi"] = std::move(pi);
  d.perms["pi_prime"] = std::move(pi_prime);
  d.perms["sigma"] = std::move(sigma);
  return d;
}

}  // namespace

std::vector<DecodedObject> oracle_objects(const Encoding& e) {
  const std::string& c = e.meta.construction;
  const int n = e.n;
  std::vector<DecodedObject> out;

  if (c == "perm" || c == "matrix") {
    for (const auto& p : all_perms(n)) {
      bool ok = true;
      for (const auto& cs : e.meta.constraints) ok = ok && perm_satisfies(p, cs);
      if (!ok) continue;
      DecodedObject d;
      d.perms["perm"] = p;
      out.push_back(std::move(d));
    }
  } else if (c == "match") {
    const int ell = static_cast<int>(e.meta.pattern.size());
    for (const auto& p : all_perms(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != ell) continue;
        std::vector<int> sub, sel;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            sub.push_back(p[i]);
            sel.push_back(i + 1);
          }
        }
        bool iso = true;
        for (int a = 0; a < ell && iso; ++a) {
          for (int b = a + 1; b < ell && iso; ++b) {
            if ((sub[a] < sub[b]) != (e.meta.pattern[a] < e.meta.pattern[b])) {
              iso = false;
            }
          }
        }
        if (!iso) continue;
        DecodedObject d;
        d.perms["perm"] = p;
        d.selected = sel;
        out.push_back(std::move(d));
      }
    }
  } else if (c == "compose" || c == "matrix_compose") {
    for (const auto& a : all_perms(n)) {
      for (const auto& b : all_perms(n)) {
        out.push_back(triple(a, b, compose(a, b)));
      }
    }
  } else if (c == "commute") {
    auto rhs = e.meta.fixed_other.empty() ? all_perms(n)
                                          : std::vector<Permutation>{
                                                e.meta.fixed_other};
    for (const auto& a : all_perms(n)) {
      for (const auto& b : rhs) {
        if (compose(a, b) != compose(b, a)) continue;
        out.push_back(triple(a, b, compose(a, b)));
      }
    }
  } else if (c == "conjugate") {
    for (const auto& sigma : all_perms(n)) {
      if (e.meta.fixed_other.empty()) {
        for (const auto& pp : all_perms(n)) {
          out.push_back(
              triple(compose(compose(sigma, pp), inverse(sigma)), pp, sigma));
        }
      } else {
        const Permutation& pi = e.meta.fixed_other;
        out.push_back(
            triple(pi, compose(compose(inverse(sigma), pi), sigma), sigma));
      }
    }
  } else {
    throw std::invalid_argument("no oracle for construction " + c);
  }
  return out;
}

namespace {

void set_group(Assignment& asg, const std::vector<Bus>& buses,
               const Permutation& p, bool onehot) {
  for (std::size_t i = 0; i < buses.size(); ++i) {
    asg.set_bus(buses[i], onehot ? (1ull << (p[i] - 1))
                                 : static_cast<std::uint64_t>(p[i]));
  }
}

}  // namespace

Assignment free_assignment_for(const Encoding& e, const DecodedObject& obj) {
  Assignment asg(e.reg->size());
  const std::string& c = e.meta.construction;
  if (c == "perm" || c == "matrix") {
    set_group(asg, e.group("perm").buses, obj.perms.at("perm"), c == "matrix");
  } else if (c == "match") {
    set_group(asg, e.group("perm").buses, obj.perms.at("perm"), false);
    std::set<int> sel(obj.selected.begin(), obj.selected.end());
    for (std::size_t i = 0; i < e.selection.size(); ++i) {
      asg.set(e.selection[i], sel.count(static_cast<int>(i) + 1) ? 0 : 1);
    }
  } else if (c == "compose") {
    set_group(asg, e.group("pi_prime").buses, obj.perms.at("pi_prime"), false);
    set_group(asg, e.group("sigma").buses, obj.perms.at("sigma"), false);
  } else if (c == "commute") {
    set_group(asg, e.group("pi").buses, obj.perms.at("pi"), false);
    set_group(asg, e.group("sigma").buses, obj.perms.at("sigma"), false);
  } else if (c == "conjugate") {
    set_group(asg, e.group("sigma").buses, obj.perms.at("sigma"), false);
    set_group(asg, e.group("pi_prime").buses, obj.perms.at("pi_prime"), false);
    for (const auto& h : e.hidden) {
      if (h.name == "z") {
        set_group(asg, h.buses,
                  compose(obj.perms.at("sigma"), obj.perms.at("pi_prime")),
                  false);
      }
    }
  } else if (c == "matrix_compose") {
    set_group(asg, e.group("pi").buses, obj.perms.at("pi"), true);
    set_group(asg, e.group("pi_prime").buses, obj.perms.at("pi_prime"), true);
  } else {
    throw std::invalid_argument("no free assignment rule for " + c);
  }
  return asg;
}

// ---------------------------------------------------------------------------
// Brute force.

int enum_cap() {
  if (const char* s = std::getenv("PERMQUBO_ENUM_CAP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 24;
}

namespace {

// Gray-code walk over all 2^nvars assignments; calls visit(bits, value).
template <typename F>
void enumerate_poly(const QuadPoly& p, std::size_t nvars, F visit) {
  if (nvars >= 63) throw std::invalid_argument("too many variables");
  CompiledPoly cp(p);
  std::vector<std::uint8_t> bits(std::max(nvars, cp.num_vars()), 0);
  long long val = cp.eval(bits.data());
  visit(bits, val);
  for (std::uint64_t g = 1; g < (1ull << nvars); ++g) {
    const int b = std::countr_zero(g);
    if (static_cast<std::size_t>(b) < cp.num_vars()) {
      val += cp.flip_delta(bits.data(), static_cast<VarId>(b));
    }
    bits[b] ^= 1;
    visit(bits, val);
  }
}

void check_cap(std::size_t nvars) {
  if (static_cast<int>(nvars) > enum_cap()) {
    throw CapExceeded("enumeration over " + std::to_string(nvars) +
                      " variables exceeds the cap of " +
                      std::to_string(enum_cap()));
  }
}

}  // namespace

long long poly_min(const QuadPoly& p, std::size_t nvars) {
  check_cap(nvars);
  long long best = 0;
  bool first = true;
  enumerate_poly(p, nvars, [&](const std::vector<std::uint8_t>&, long long v) {
    if (first || v < best) best = v;
    first = false;
  });
  return best;
}

std::vector<Assignment> poly_zeros(const QuadPoly& p, std::size_t nvars) {
  check_cap(nvars);
  std::vector<Assignment> zs;
  enumerate_poly(p, nvars,
                 [&](const std::vector<std::uint8_t>& bits, long long v) {
                   if (v != 0) return;
                   Assignment a(nvars);
                   for (std::size_t i = 0; i < nvars; ++i) a.set(i, bits[i]);
                   zs.push_back(std::move(a));
                 });
  return zs;
}

// ---------------------------------------------------------------------------
// Gate certificates.

namespace {

GateCertificate run_certificate(const std::string& kind, int width) {
  GateCertificate cert;
  VariableRegistry reg;
  QuadPoly poly;
  std::vector<VarId> in_vars;
  std::function<bool(const Assignment&)> semantic;

  if (kind == "swap") {
    Bus x1 = reg.fresh_bus("x1", width, Role::Input);
    Bus x2 = reg.fresh_bus("x2", width, Role::Input);
    VarId cv = reg.fresh("c", Role::Input);
    Bus y1 = reg.fresh_bus("y1", width, Role::Output);
    Bus y2 = reg.fresh_bus("y2", width, Role::Output);
    poly = swap_gate(x1, x2, y1, y2, Bit::of(cv), reg);
    for (const Bit& b : x1.bits) in_vars.push_back(b.var);
    for (const Bit& b : x2.bits) in_vars.push_back(b.var);
    in_vars.push_back(cv);
    semantic = [=](const Assignment& a) {
      auto v1 = a.value_of(x1), v2 = a.value_of(x2);
      if (a.get(cv)) std::swap(v1, v2);
      return a.value_of(y1) == v1 && a.value_of(y2) == v2;
    };
  } else {
    CmpKind ck;
    if (kind == "gt") ck = CmpKind::GT;
    else if (kind == "gte") ck = CmpKind::GTE;
    else if (kind == "lt") ck = CmpKind::LT;
    else if (kind == "lte") ck = CmpKind::LTE;
    else if (kind == "eq") ck = CmpKind::EQ;
    else if (kind == "neq") ck = CmpKind::NEQ;
    else throw std::invalid_argument("unknown gate kind: " + kind);
    Bus x = reg.fresh_bus("x", width, Role::Input);
    Bus y = reg.fresh_bus("y", width, Role::Input);
    VarId cv = reg.fresh("c", Role::Output);
    poly = compare_gate(ck, x, y, Bit::of(cv), reg);
    for (const Bit& b : x.bits) in_vars.push_back(b.var);
    for (const Bit& b : y.bits) in_vars.push_back(b.var);
    semantic = [=](const Assignment& a) {
      auto vx = a.value_of(x), vy = a.value_of(y);
      bool want;
      switch (ck) {
        case CmpKind::GT: want = vx > vy; break;
        case CmpKind::GTE: want = vx >= vy; break;
        case CmpKind::LT: want = vx < vy; break;
        case CmpKind::LTE: want = vx <= vy; break;
        case CmpKind::EQ: want = vx == vy; break;
        default: want = vx != vy; break;
      }
      return a.get(cv) == (want ? 1 : 0);
    };
  }

  const std::size_t nvars = reg.size();
  if (nvars > 26) {
    cert.detail = "gate too wide to certify exhaustively";
    return cert;
  }
  std::vector<long long> per_input(1ull << in_vars.size(), 0);
  bool ok = true;
  std::string detail;
  enumerate_poly(poly, nvars,
                 [&](const std::vector<std::uint8_t>& bits, long long v) {
                   if (!ok) return;
                   if (v < 0) {
                     ok = false;
                     detail = "negative value reached";
                     return;
                   }
                   if (v != 0) return;
                   Assignment a(nvars);
                   for (std::size_t i = 0; i < nvars; ++i) a.set(i, bits[i]);
                   std::size_t key = 0;
                   for (std::size_t i = 0; i < in_vars.size(); ++i) {
                     key |= static_cast<std::size_t>(a.get(in_vars[i])) << i;
                   }
                   ++per_input[key];
                   if (!semantic(a)) {
                     ok = false;
                     detail = "zero state with wrong gate semantics";
                   }
                 });
  if (ok) {
    for (std::size_t key = 0; key < per_input.size(); ++key) {
      if (per_input[key] != 1) {
        ok = false;
        detail = "input tuple " + std::to_string(key) + " has " +
                 std::to_string(per_input[key]) + " zero completions";
        break;
      }
    }
  }
  cert.ok = ok;
  cert.detail = ok ? "certified" : detail;
  return cert;
}

}  // namespace

const GateCertificate& certify_gate(const std::string& kind, int width) {
  static std::map<std::pair<std::string, int>, GateCertificate> cache;
  auto key = std::make_pair(kind, width);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, run_certificate(kind, width)).first;
  }
  return it->second;
}

void require_certified(const Encoding& e) {
  for (const auto& [kind, width] : e.gadget_profile) {
    const GateCertificate& c = certify_gate(kind, width);
    if (!c.ok) {
      throw std::runtime_error("gate " + kind + " at width " +
                               std::to_string(width) +
                               " failed certification: " + c.detail);
    }
  }
}

// ---------------------------------------------------------------------------
// Encoding verification.

namespace {

VerifyReport verify_free(const Encoding& e) {
  VerifyReport r;
  r.mode = "free";
  auto free = free_variables(e);
  if (static_cast<int>(free.size()) > enum_cap()) {
    throw CapExceeded("free variable count " + std::to_string(free.size()) +
                      " exceeds the enumeration cap");
  }
  if (!unhinted_derived(e).empty()) {
    r.error = "encoding has derived variables without witness hints";
    return r;
  }
  require_certified(e);

  WitnessEvaluator ev(*e.reg);
  CompiledPoly cp(e.poly);
  Assignment asg(e.reg->size());
  std::map<std::string, long long> counts;
  for (std::uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      asg.set(free[i], static_cast<int>((mask >> i) & 1u));
    }
    ev.run(asg);
    if (cp.eval(asg) != 0) continue;
    ++r.zero_count;
    DecodedObject d = decode(e, asg);
    if (!d.valid) {
      r.error = "zero state fails to decode: " + d.error;
      return r;
    }
    ++counts[d.key()];
  }

  std::set<std::string> expected;
  for (const auto& obj : oracle_objects(e)) expected.insert(obj.key());
  for (const auto& [k, cnt] : counts) {
    if (!expected.count(k)) {
      r.error = "spurious solution " + k;
      return r;
    }
  }
  for (const auto& k : expected) {
    if (!counts.count(k)) {
      r.error = "missing solution " + k;
      return r;
    }
  }
  r.solutions = static_cast<long long>(counts.size());
  long long common = counts.empty() ? 0 : counts.begin()->second;
  bool same = true;
  for (const auto& [k, cnt] : counts) same = same && cnt == common;
  r.completions = same ? common : -1;
  if (e.uniform && !same) {
    r.error = "unequal zero multiplicities on a uniform encoding";
    return r;
  }
  r.pass = true;
  return r;
}

VerifyReport verify_oracle(const Encoding& e, std::uint64_t seed,
                           int negatives) {
  VerifyReport r;
  r.mode = "oracle";
  if (!unhinted_derived(e).empty()) {
    r.error = "encoding has derived variables without witness hints";
    return r;
  }
  require_certified(e);

  WitnessEvaluator ev(*e.reg);
  CompiledPoly cp(e.poly);
  auto expected = oracle_objects(e);
  std::set<std::string> keys;
  for (const auto& obj : expected) {
    Assignment asg = free_assignment_for(e, obj);
    ev.run(asg);
    long long v = cp.eval(asg);
    if (v != 0) {
      r.error = "oracle solution " + obj.key() + " has energy " +
                std::to_string(v);
      return r;
    }
    DecodedObject d = decode(e, asg);
    if (!d.valid || d.key() != obj.key()) {
      r.error = "decode mismatch for " + obj.key();
      return r;
    }
    keys.insert(obj.key());
    ++r.zero_count;
  }
  r.solutions = static_cast<long long>(keys.size());

  auto free = free_variables(e);
  std::mt19937_64 rng(seed);
  Assignment asg(e.reg->size());
  for (int t = 0; t < negatives; ++t) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      asg.set(free[i], static_cast<int>(rng() & 1u));
    }
    ev.run(asg);
    long long v = cp.eval(asg);
    if (v < 0) {
      r.error = "negative energy reached by sampling";
      return r;
    }
    if (v == 0) {
      DecodedObject d = decode(e, asg);
      if (!d.valid || !keys.count(d.key())) {
        r.error = "sampled zero state outside the oracle set";
        return r;
      }
    }
    ++r.negatives_checked;
  }
  r.pass = true;
  return r;
}

}  // namespace

VerifyReport verify_encoding(const Encoding& e, VerifyOptions opts) {
  if (opts.mode == "free") return verify_free(e);
  if (opts.mode == "oracle") return verify_oracle(e, opts.seed, opts.negatives);
  if (opts.mode != "auto") {
    VerifyReport r;
    r.error = "unknown verification mode: " + opts.mode;
    return r;
  }
  auto free = free_variables(e);
  // Full free-bit sweeps only while the work stays moderate; otherwise
  // fall back to oracle positives plus sampled negatives.
  const double work =
      std::ldexp(static_cast<double>(e.reg->size()), static_cast<int>(free.size()));
  if (static_cast<int>(free.size()) <= enum_cap() && work <= 6.0e7) {
    return verify_free(e);
  }
  return verify_oracle(e, opts.seed, opts.negatives);
}

}  // namespace permqubo
