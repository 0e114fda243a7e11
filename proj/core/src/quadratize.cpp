#include "permqubo/quadratize.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace permqubo {

MultiPoly MultiPoly::constant(long long c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::from_bit(const Bit& b) {
  MultiPoly p;
  switch (b.kind) {
    case Bit::Kind::Const:
      p.add_term({}, b.value);
      break;
    case Bit::Kind::Var:
      p.add_term({b.var}, 1);
      break;
    case Bit::Kind::NegVar:
      p.add_term({}, 1);
      p.add_term({b.var}, -1);
      break;
  }
  return p;
}

MultiPoly MultiPoly::from_lin(const LinExpr& e) {
  MultiPoly p;
  p.add_term({}, e.offset);
  for (const auto& [v, c] : e.terms) p.add_term({v}, c);
  return p;
}

void MultiPoly::add_term(std::vector<VarId> vars, long long coeff) {
  if (coeff == 0) return;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto it = terms_.find(vars);
  if (it == terms_.end()) {
    terms_.emplace(std::move(vars), coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [vars, c] : other.terms_) add_term(vars, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [vars, c] : other.terms_) add_term(vars, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(long long s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [vars, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [va, ca] : a.terms_) {
    for (const auto& [vb, cb] : b.terms_) {
      std::vector<VarId> vars = va;
      vars.insert(vars.end(), vb.begin(), vb.end());
      r.add_term(std::move(vars), ca * cb);
    }
  }
  return r;
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [vars, c] : terms_) d = std::max<int>(d, vars.size());
  return d;
}

std::vector<Monomial> MultiPoly::monomials() const {
  std::vector<Monomial> ms;
  ms.reserve(terms_.size());
  for (const auto& [vars, c] : terms_) ms.push_back(Monomial{c, vars});
  return ms;
}

static bool contains_pair(const std::vector<VarId>& vars, VarId a, VarId b) {
  return std::binary_search(vars.begin(), vars.end(), a) &&
         std::binary_search(vars.begin(), vars.end(), b);
}

void MultiPoly::substitute(VarId a, VarId b, VarId z) {
  std::vector<std::pair<std::vector<VarId>, long long>> moved;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() >= 3 && contains_pair(it->first, a, b)) {
      std::vector<VarId> vars;
      for (VarId v : it->first) {
        if (v != a && v != b) vars.push_back(v);
      }
      vars.push_back(z);
      moved.emplace_back(std::move(vars), it->second);
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  for (auto& [vars, c] : moved) add_term(std::move(vars), c);
}

int MultiPoly::pair_count(VarId a, VarId b) const {
  int n = 0;
  for (const auto& [vars, c] : terms_) {
    if (vars.size() >= 3 && contains_pair(vars, a, b)) ++n;
  }
  return n;
}

long long MultiPoly::eval(const Assignment& asg) const {
  long long r = 0;
  for (const auto& [vars, c] : terms_) {
    long long t = c;
    for (VarId v : vars) {
      if (!asg.get(v)) {
        t = 0;
        break;
      }
    }
    r += t;
  }
  return r;
}

QuadPoly MultiPoly::to_quad() const {
  QuadPoly q;
  for (const auto& [vars, c] : terms_) {
    switch (vars.size()) {
      case 0:
        q.add_const(c);
        break;
      case 1:
        q.add_linear(vars[0], c);
        break;
      case 2:
        q.add_quadratic(vars[0], vars[1], c);
        break;
      default:
        throw std::logic_error("polynomial is not quadratic");
    }
  }
  return q;
}

MultiPoly square(const MultiPoly& p) { return p * p; }

long long choose_alpha(const std::vector<Monomial>& monomials) {
  long long a = 1;
  for (const auto& m : monomials) a += std::llabs(m.coeff);
  return a;
}

long long choose_alpha(const MultiPoly& p, VarId a, VarId b) {
  long long alpha = 1;
  for (const auto& [vars, c] : p.terms()) {
    if (vars.size() >= 3 && contains_pair(vars, a, b)) alpha += std::llabs(c);
  }
  return alpha;
}

QuadPoly product_penalty(const Substitution& s) {
  QuadPoly q;
  q.add_quadratic(s.a, s.b, s.alpha);
  q.add_quadratic(s.replacement, s.a, -2 * s.alpha);
  q.add_quadratic(s.replacement, s.b, -2 * s.alpha);
  q.add_linear(s.replacement, 3 * s.alpha);
  return q;
}

QuadPoly reduce_negative_monomial(const Monomial& m, VariableRegistry& reg,
                                  const std::string& name_prefix) {
  if (m.coeff >= 0) throw std::invalid_argument("monomial is not negative");
  long long t = static_cast<long long>(m.vars.size());
  if (t < 3) throw std::invalid_argument("monomial is already quadratic");
  VarId z = reg.fresh(name_prefix + "." + std::to_string(reg.size()),
                      Role::Auxiliary);
  // z = product of the monomial's variables at zero points
  std::vector<std::pair<Bit, long long>> target;
  for (VarId v : m.vars) target.emplace_back(Bit::of(v), 1);
  reg.set_hint(z, HintRegisterBit{std::move(target), 1 - t, 0});

  QuadPoly q;
  long long c = -m.coeff;  // positive
  q.add_linear(z, c * (2 * t - 1));
  for (VarId v : m.vars) q.add_quadratic(z, v, -2 * c);
  return q;
}

QuadPoly apply_substitution(MultiPoly& p, VarId a, VarId b,
                            VariableRegistry& reg, const std::string& name,
                            std::vector<VarId>* aux_out, bool force) {
  if (p.pair_count(a, b) == 0 && !force) return QuadPoly{};
  long long alpha = choose_alpha(p, a, b);
  VarId z = reg.fresh(name, Role::Auxiliary);
  reg.set_hint(z, HintProduct{Bit::of(a), Bit::of(b)});
  if (aux_out) aux_out->push_back(z);
  p.substitute(a, b, z);
  return product_penalty(Substitution{a, b, z, alpha});
}

QuadratizeResult quadratize_poly(MultiPoly p, VariableRegistry& reg,
                                 const std::string& name_prefix) {
  QuadratizeResult result;
  QuadPoly penalties;

  // Negative monomials take the single-auxiliary form.
  for (const auto& m : p.monomials()) {
    if (m.coeff < 0 && m.vars.size() >= 3) {
      penalties += reduce_negative_monomial(m, reg, name_prefix + ".nz");
      result.aux.push_back(static_cast<VarId>(reg.size() - 1));
      p.add_term(m.vars, -m.coeff);
    }
  }

  // Positive monomials: most frequent pair first, smallest pair on ties.
  while (p.degree() > 2) {
    std::pair<VarId, VarId> best{0, 0};
    int best_count = 0;
    std::map<std::pair<VarId, VarId>, int> counts;
    for (const auto& [vars, c] : p.terms()) {
      if (vars.size() < 3) continue;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
          ++counts[{vars[i], vars[j]}];
        }
      }
    }
    for (const auto& [pair, n] : counts) {
      if (n > best_count) {
        best = pair;
        best_count = n;
      }
    }
    penalties += apply_substitution(
        p, best.first, best.second, reg,
        name_prefix + ".z" + std::to_string(reg.size()), &result.aux);
  }

  result.poly = p.to_quad();
  result.poly += penalties;
  return result;
}

}  // namespace permqubo
