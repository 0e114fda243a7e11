#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace permqubo {

using VarId = std::uint32_t;

enum class Role { Input, Output, Control, Auxiliary };

const char* role_name(Role r);
Role role_from_name(const std::string& s);

// A literal: constant, variable, or negated variable (1 - x).
struct Bit {
  enum class Kind : std::uint8_t { Const, Var, NegVar };

  Kind kind = Kind::Const;
  VarId var = 0;
  int value = 0;  // only for Const

  static Bit zero() { return Bit{Kind::Const, 0, 0}; }
  static Bit one() { return Bit{Kind::Const, 0, 1}; }
  static Bit constant(int v) { return Bit{Kind::Const, 0, v ? 1 : 0}; }
  static Bit of(VarId v) { return Bit{Kind::Var, v, 0}; }
  static Bit negated(VarId v) { return Bit{Kind::NegVar, v, 0}; }

  bool is_const() const { return kind == Kind::Const; }
  bool is_var() const { return kind == Kind::Var; }

  // Literal complement: 1 - this.
  Bit complement() const;

  friend bool operator==(const Bit& a, const Bit& b) {
    return a.kind == b.kind && a.var == b.var && a.value == b.value;
  }
};

// An ordered group of bits carrying one binary number, least significant
// bit first.
struct Bus {
  std::vector<Bit> bits;

  Bus() = default;
  explicit Bus(std::vector<Bit> b) : bits(std::move(b)) {}

  int width() const { return static_cast<int>(bits.size()); }
  bool empty() const { return bits.empty(); }

  static Bus constant(std::uint64_t value, int width);

  std::optional<std::uint64_t> const_value() const;

  // High-order slice of the given width (the key of a composite bus).
  Bus high(int w) const;
  // Low-order slice.
  Bus low(int w) const;
};

// concat(a, b): b occupies the low-order bits, a the high-order bits.
Bus bus_concat(const Bus& a, const Bus& b);

// ---------------------------------------------------------------------------
// Witness hints: how an allocated variable's value follows from variables
// determined before it.  Evaluated in allocation order by the verify module.

enum class CmpOp { Gt, Gte, Eq, Neq };

struct HintProduct {
  Bit a, b;
};

// c == 0 -> a, c == 1 -> b.
struct HintSelect {
  Bit c;
  Bit a, b;
};

struct HintComparison {
  Bus x, y;
  CmpOp op = CmpOp::Gt;
};

// Selector p_i of a comparison gate: index 0 means x == y, index i >= 1
// means the highest differing bit is bit i (1-based from the LSB).
struct HintSelector {
  Bus x, y;
  int index = 0;
};

// Bit `shift` of the clamped value of `target` (an integer expression over
// already-determined bits).
struct HintRegisterBit {
  std::vector<std::pair<Bit, long long>> target;  // sum of coeff * bit
  long long target_offset = 0;
  int shift = 0;
};

// pi(v) where v is the number on `arg` and pi is read off `perm`; yields
// bit `bit` of the image, 0 when v is out of range.
struct HintPermImageBit {
  std::vector<Bus> perm;
  Bus arg;
  int bit = 0;
};

using WitnessHint = std::variant<HintProduct, HintSelect, HintComparison,
                                 HintSelector, HintRegisterBit,
                                 HintPermImageBit>;

// ---------------------------------------------------------------------------

class VariableRegistry {
 public:
  VarId fresh(std::string name, Role role);
  Bus fresh_bus(const std::string& prefix, int width, Role role);

  void set_hint(VarId v, WitnessHint hint);

  std::size_t size() const { return entries_.size(); }
  const std::string& name(VarId v) const { return entries_[v].name; }
  Role role(VarId v) const { return entries_[v].role; }
  void set_role(VarId v, Role role) { entries_[v].role = role; }
  const std::optional<WitnessHint>& hint(VarId v) const {
    return entries_[v].hint;
  }

  std::size_t count_role(Role r) const;

 private:
  struct Entry {
    std::string name;
    Role role;
    std::optional<WitnessHint> hint;
  };
  std::vector<Entry> entries_;
  std::map<std::string, VarId> by_name_;
};

// ---------------------------------------------------------------------------

// Total 0/1 assignment over a registry's variables.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : bits_(n, 0) {}

  int get(VarId v) const;
  void set(VarId v, int value) { bits_[v] = value ? 1 : 0; }
  std::size_t size() const { return bits_.size(); }

  int value_of(const Bit& b) const;
  std::uint64_t value_of(const Bus& b) const;
  void set_bus(const Bus& b, std::uint64_t value);

  const std::uint8_t* data() const { return bits_.data(); }
  std::uint8_t* data() { return bits_.data(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// ---------------------------------------------------------------------------

struct LinExpr {
  long long offset = 0;
  std::map<VarId, long long> terms;

  void add(VarId v, long long c);
  void add(const Bit& b, long long c);
  void add_const(long long c) { offset += c; }

  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator*=(long long s);

  long long eval(const Assignment& asg) const;
};

// Sparse integer quadratic pseudo-Boolean polynomial.  x^2 terms are folded
// into linear at construction, zero coefficients are dropped.
class QuadPoly {
 public:
  void add_const(long long c) { offset_ += c; }
  void add_linear(VarId v, long long c);
  void add_quadratic(VarId a, VarId b, long long c);
  void add(const LinExpr& e, long long scale = 1);

  QuadPoly& operator+=(const QuadPoly& other);
  QuadPoly& operator*=(long long s);

  long long offset() const { return offset_; }
  const std::map<VarId, long long>& linear() const { return linear_; }
  const std::map<std::pair<VarId, VarId>, long long>& quadratic() const {
    return quadratic_;
  }

  bool is_zero() const {
    return offset_ == 0 && linear_.empty() && quadratic_.empty();
  }
  std::size_t term_count() const { return linear_.size() + quadratic_.size(); }

  long long eval(const Assignment& asg) const;

  // All variables mentioned by the polynomial.
  std::vector<VarId> variables() const;
  VarId max_var() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  long long offset_ = 0;
  std::map<VarId, long long> linear_;
  std::map<std::pair<VarId, VarId>, long long> quadratic_;
};

// Interaction-graph degree of each variable mentioned by the polynomial
// (number of distinct quadratic neighbors), keyed by variable.
std::map<VarId, int> degree_profile(const QuadPoly& p);
int max_degree(const QuadPoly& p);

QuadPoly poly_add(const QuadPoly& a, const QuadPoly& b);
QuadPoly poly_scale(const QuadPoly& a, long long s);
long long poly_eval(const QuadPoly& p, const Assignment& asg);

// Expansion of e^2 with the x^2 -> x fold.
QuadPoly lin_square(const LinExpr& e);

// Flat representation for tight evaluation loops.
class CompiledPoly {
 public:
  explicit CompiledPoly(const QuadPoly& p);

  long long eval(const std::uint8_t* bits) const;
  long long eval(const Assignment& asg) const { return eval(asg.data()); }

  // Per-variable adjacency for incremental flips.
  struct Neighbor {
    VarId other;
    long long coeff;
  };
  long long flip_delta(const std::uint8_t* bits, VarId v) const;
  std::size_t num_vars() const { return linear_by_var_.size(); }

 private:
  long long offset_;
  std::vector<std::pair<VarId, long long>> linear_;
  std::vector<std::tuple<VarId, VarId, long long>> quadratic_;
  std::vector<long long> linear_by_var_;
  std::vector<std::vector<Neighbor>> adj_;
};

}  // namespace permqubo
