#include "permqubo/pbf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permqubo {

const char* role_name(Role r) {
  switch (r) {
    case Role::Input:
      return "input";
    case Role::Output:
      return "output";
    case Role::Control:
      return "control";
    case Role::Auxiliary:
      return "auxiliary";
  }
  return "auxiliary";
}

Role role_from_name(const std::string& s) {
  if (s == "input") return Role::Input;
  if (s == "output") return Role::Output;
  if (s == "control") return Role::Control;
  if (s == "auxiliary") return Role::Auxiliary;
  throw std::invalid_argument("unknown role: " + s);
}

Bit Bit::complement() const {
  switch (kind) {
    case Kind::Const:
      return constant(1 - value);
    case Kind::Var:
      return negated(var);
    case Kind::NegVar:
      return of(var);
  }
  return zero();
}

Bus Bus::constant(std::uint64_t value, int width) {
  Bus b;
  b.bits.reserve(width);
  for (int i = 0; i < width; ++i) {
    b.bits.push_back(Bit::constant(static_cast<int>((value >> i) & 1u)));
  }
  return b;
}

std::optional<std::uint64_t> Bus::const_value() const {
  std::uint64_t v = 0;
  for (int i = 0; i < width(); ++i) {
    if (!bits[i].is_const()) return std::nullopt;
    v |= static_cast<std::uint64_t>(bits[i].value) << i;
  }
  return v;
}

Bus Bus::high(int w) const {
  Bus b;
  b.bits.assign(bits.end() - w, bits.end());
  return b;
}

Bus Bus::low(int w) const {
  Bus b;
  b.bits.assign(bits.begin(), bits.begin() + w);
  return b;
}

Bus bus_concat(const Bus& a, const Bus& b) {
  Bus r;
  r.bits = b.bits;
  r.bits.insert(r.bits.end(), a.bits.begin(), a.bits.end());
  return r;
}

VarId VariableRegistry::fresh(std::string name, Role role) {
  auto [it, inserted] =
      by_name_.emplace(name, static_cast<VarId>(entries_.size()));
  if (!inserted) throw std::invalid_argument("duplicate variable name: " + name);
  entries_.push_back(Entry{std::move(name), role, std::nullopt});
  return it->second;
}

Bus VariableRegistry::fresh_bus(const std::string& prefix, int width,
                                Role role) {
  Bus b;
  b.bits.reserve(width);
  for (int i = 1; i <= width; ++i) {
    b.bits.push_back(Bit::of(fresh(prefix + "^" + std::to_string(i), role)));
  }
  return b;
}

void VariableRegistry::set_hint(VarId v, WitnessHint hint) {
  entries_[v].hint = std::move(hint);
}

std::size_t VariableRegistry::count_role(Role r) const {
  std::size_t c = 0;
  for (const auto& e : entries_) {
    if (e.role == r) ++c;
  }
  return c;
}

int Assignment::get(VarId v) const {
  if (v >= bits_.size()) {
    throw std::out_of_range("assignment is missing variable " +
                            std::to_string(v));
  }
  return bits_[v];
}

int Assignment::value_of(const Bit& b) const {
  switch (b.kind) {
    case Bit::Kind::Const:
      return b.value;
    case Bit::Kind::Var:
      return get(b.var);
    case Bit::Kind::NegVar:
      return 1 - get(b.var);
  }
  return 0;
}

std::uint64_t Assignment::value_of(const Bus& b) const {
  std::uint64_t v = 0;
  for (int i = 0; i < b.width(); ++i) {
    v |= static_cast<std::uint64_t>(value_of(b.bits[i])) << i;
  }
  return v;
}

void Assignment::set_bus(const Bus& b, std::uint64_t value) {
  for (int i = 0; i < b.width(); ++i) {
    const Bit& bit = b.bits[i];
    int want = static_cast<int>((value >> i) & 1u);
    switch (bit.kind) {
      case Bit::Kind::Const:
        break;
      case Bit::Kind::Var:
        set(bit.var, want);
        break;
      case Bit::Kind::NegVar:
        set(bit.var, 1 - want);
        break;
    }
  }
}

void LinExpr::add(VarId v, long long c) {
  if (c == 0) return;
  auto it = terms.find(v);
  if (it == terms.end()) {
    terms.emplace(v, c);
  } else if ((it->second += c) == 0) {
    terms.erase(it);
  }
}

void LinExpr::add(const Bit& b, long long c) {
  switch (b.kind) {
    case Bit::Kind::Const:
      offset += c * b.value;
      break;
    case Bit::Kind::Var:
      add(b.var, c);
      break;
    case Bit::Kind::NegVar:
      offset += c;
      add(b.var, -c);
      break;
  }
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  offset += other.offset;
  for (const auto& [v, c] : other.terms) add(v, c);
  return *this;
}

LinExpr& LinExpr::operator*=(long long s) {
  if (s == 0) {
    offset = 0;
    terms.clear();
    return *this;
  }
  offset *= s;
  for (auto& [v, c] : terms) c *= s;
  return *this;
}

long long LinExpr::eval(const Assignment& asg) const {
  long long r = offset;
  for (const auto& [v, c] : terms) r += c * asg.get(v);
  return r;
}

void QuadPoly::add_linear(VarId v, long long c) {
  if (c == 0) return;
  auto it = linear_.find(v);
  if (it == linear_.end()) {
    linear_.emplace(v, c);
  } else if ((it->second += c) == 0) {
    linear_.erase(it);
  }
}

void QuadPoly::add_quadratic(VarId a, VarId b, long long c) {
  if (c == 0) return;
  if (a == b) {
    add_linear(a, c);
    return;
  }
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = quadratic_.find(key);
  if (it == quadratic_.end()) {
    quadratic_.emplace(key, c);
  } else if ((it->second += c) == 0) {
    quadratic_.erase(it);
  }
}

void QuadPoly::add(const LinExpr& e, long long scale) {
  offset_ += scale * e.offset;
  for (const auto& [v, c] : e.terms) add_linear(v, scale * c);
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& other) {
  offset_ += other.offset_;
  for (const auto& [v, c] : other.linear_) add_linear(v, c);
  for (const auto& [k, c] : other.quadratic_)
    add_quadratic(k.first, k.second, c);
  return *this;
}

QuadPoly& QuadPoly::operator*=(long long s) {
  if (s == 0) {
    offset_ = 0;
    linear_.clear();
    quadratic_.clear();
    return *this;
  }
  offset_ *= s;
  for (auto& [v, c] : linear_) c *= s;
  for (auto& [k, c] : quadratic_) c *= s;
  return *this;
}

long long QuadPoly::eval(const Assignment& asg) const {
  long long r = offset_;
  for (const auto& [v, c] : linear_) r += c * asg.get(v);
  for (const auto& [k, c] : quadratic_) {
    r += c * asg.get(k.first) * asg.get(k.second);
  }
  return r;
}

std::vector<VarId> QuadPoly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [v, c] : linear_) vs.push_back(v);
  for (const auto& [k, c] : quadratic_) {
    vs.push_back(k.first);
    vs.push_back(k.second);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VarId QuadPoly::max_var() const {
  VarId m = 0;
  if (!linear_.empty()) m = std::max(m, linear_.rbegin()->first);
  if (!quadratic_.empty()) m = std::max(m, quadratic_.rbegin()->first.second);
  return m;
}

std::map<VarId, int> degree_profile(const QuadPoly& p) {
  std::map<VarId, std::set<VarId>> adj;
  for (const auto& [v, c] : p.linear()) adj[v];
  for (const auto& [vv, c] : p.quadratic()) {
    adj[vv.first].insert(vv.second);
    adj[vv.second].insert(vv.first);
  }
  std::map<VarId, int> deg;
  for (const auto& [v, nb] : adj) deg[v] = static_cast<int>(nb.size());
  return deg;
}

int max_degree(const QuadPoly& p) {
  int best = 0;
  for (const auto& [v, d] : degree_profile(p)) best = std::max(best, d);
  return best;
}

QuadPoly poly_add(const QuadPoly& a, const QuadPoly& b) {
  QuadPoly r = a;
  r += b;
  return r;
}

QuadPoly poly_scale(const QuadPoly& a, long long s) {
  QuadPoly r = a;
  r *= s;
  return r;
}

long long poly_eval(const QuadPoly& p, const Assignment& asg) {
  return p.eval(asg);
}

QuadPoly lin_square(const LinExpr& e) {
  QuadPoly r;
  r.add_const(e.offset * e.offset);
  for (const auto& [v, c] : e.terms) {
    // c^2 x^2 + 2 c off x folds to (c^2 + 2 c off) x
    r.add_linear(v, c * c + 2 * c * e.offset);
  }
  for (auto it = e.terms.begin(); it != e.terms.end(); ++it) {
    auto jt = it;
    for (++jt; jt != e.terms.end(); ++jt) {
      r.add_quadratic(it->first, jt->first, 2 * it->second * jt->second);
    }
  }
  return r;
}

CompiledPoly::CompiledPoly(const QuadPoly& p) : offset_(p.offset()) {
  std::size_t n = p.linear().empty() && p.quadratic().empty()
                      ? 0
                      : static_cast<std::size_t>(p.max_var()) + 1;
  linear_by_var_.assign(n, 0);
  adj_.assign(n, {});
  for (const auto& [v, c] : p.linear()) {
    linear_.emplace_back(v, c);
    linear_by_var_[v] = c;
  }
  for (const auto& [k, c] : p.quadratic()) {
    quadratic_.emplace_back(k.first, k.second, c);
    adj_[k.first].push_back({k.second, c});
    adj_[k.second].push_back({k.first, c});
  }
}

long long CompiledPoly::eval(const std::uint8_t* bits) const {
  long long r = offset_;
  for (const auto& [v, c] : linear_) {
    if (bits[v]) r += c;
  }
  for (const auto& [i, j, c] : quadratic_) {
    if (bits[i] & bits[j]) r += c;
  }
  return r;
}

long long CompiledPoly::flip_delta(const std::uint8_t* bits, VarId v) const {
  long long d = linear_by_var_[v];
  for (const auto& nb : adj_[v]) {
    if (bits[nb.other]) d += nb.coeff;
  }
  return bits[v] ? -d : d;
}

}  // namespace permqubo
