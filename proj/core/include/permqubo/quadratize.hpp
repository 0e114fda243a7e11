#pragma once

#include <map>
#include <string>
#include <vector>

#include "permqubo/pbf.hpp"

namespace permqubo {

struct Monomial {
  long long coeff = 0;
  std::vector<VarId> vars;  // sorted, distinct
};

// Substitution z = a * b with penalty weight alpha (Rosenberg style).
struct Substitution {
  VarId a = 0, b = 0;
  VarId replacement = 0;
  long long alpha = 1;
};

// Multilinear polynomial with integer coefficients; keys are sorted
// variable sets, the empty set holding the constant term.
class MultiPoly {
 public:
  static MultiPoly constant(long long c);
  static MultiPoly from_bit(const Bit& b);
  static MultiPoly from_lin(const LinExpr& e);

  void add_term(std::vector<VarId> vars, long long coeff);
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(long long s);

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a += b;
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a -= b;
    return a;
  }

  int degree() const;
  bool empty() const { return terms_.empty(); }
  const std::map<std::vector<VarId>, long long>& terms() const {
    return terms_;
  }

  std::vector<Monomial> monomials() const;

  // Replaces a*b by z inside every monomial of degree >= 3 that contains
  // both variables.  Quadratic a*b terms are left alone.
  void substitute(VarId a, VarId b, VarId z);

  // Number of degree >= 3 monomials containing both a and b.
  int pair_count(VarId a, VarId b) const;

  long long eval(const Assignment& asg) const;

  // Fails if any monomial has degree > 2.
  QuadPoly to_quad() const;

 private:
  std::map<std::vector<VarId>, long long> terms_;
};

MultiPoly square(const MultiPoly& p);

// alpha = 1 + sum of |coeff| over the degree >= 3 monomials containing the
// pair; at least 1.
long long choose_alpha(const std::vector<Monomial>& monomials);
long long choose_alpha(const MultiPoly& p, VarId a, VarId b);

// Eq-style penalty  alpha * (a b - z (2a + 2b - 3)); zero iff z = a*b,
// otherwise at least alpha.
QuadPoly product_penalty(const Substitution& s);

// Replaces a negative monomial of degree >= 3 by |c| * z (2t - 1 - 2 sum x).
QuadPoly reduce_negative_monomial(const Monomial& m, VariableRegistry& reg,
                                  const std::string& name_prefix = "nz");

// Performs one named substitution: allocates the auxiliary (with a product
// witness hint), rewrites p in place and returns the penalty.  Returns a
// zero polynomial without allocating when the pair occurs in no
// degree >= 3 monomial, unless force is set (then the auxiliary and its
// penalty are emitted anyway, keeping aux counts input-independent).
QuadPoly apply_substitution(MultiPoly& p, VarId a, VarId b,
                            VariableRegistry& reg, const std::string& name,
                            std::vector<VarId>* aux_out = nullptr,
                            bool force = false);

struct QuadratizeResult {
  QuadPoly poly;
  std::vector<VarId> aux;
};

// Generic reduction: negative monomials via the single-auxiliary rule,
// positive ones by repeatedly substituting the most frequent pair
// (smallest VarId pair on ties).
QuadratizeResult quadratize_poly(MultiPoly p, VariableRegistry& reg,
                                 const std::string& name_prefix = "q");

}  // namespace permqubo
