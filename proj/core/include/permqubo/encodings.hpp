#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permqubo/network.hpp"
#include "permqubo/pbf.hpp"

namespace permqubo {

// Images pi(1)..pi(n), 1-based values.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a(b(i))
Permutation inverse(const Permutation& p);
Permutation identity_perm(int n);

int bit_width_for(int n);  // ceil(log2(n+1))

enum class ParityKind { Even, Odd };

struct ConstraintSpec {
  std::string kind;  // value, forbid, derangement, forbid_perm, parity,
                     // involution, power, order
  int i = 0, j = 0;
  int r = 0;
  Permutation tau;
  ParityKind parity = ParityKind::Even;
};

struct EncodingMeta {
  std::string construction;  // perm, matrix, match, compose, commute,
                             // conjugate, matrix_compose
  int n = 0;
  int k = 0;  // bus width; 0 means the minimal width for n
  TopologyKind topo = TopologyKind::Batcher;
  std::vector<ConstraintSpec> constraints;
  Permutation pattern;      // match
  Permutation fixed_other;  // commute: fixed pi', conjugate: fixed pi
};

struct DecodeGroup {
  std::string name;
  std::vector<Bus> buses;
};

struct Encoding {
  QuadPoly poly;
  std::shared_ptr<VariableRegistry> reg;
  int n = 0;
  int k = 0;
  std::vector<DecodeGroup> groups;
  // Free buses that are not part of the decoded solution but must be set
  // when constructing a witness from one (conjugate: the z payload).
  std::vector<DecodeGroup> hidden;
  std::vector<VarId> selection;  // match position bits (0 = selected)
  EncodingMeta meta;
  bool uniform = true;
  NetworkTopology topology;
  // Gadget configurations whose local uniqueness must be certified before
  // compositional uniformity claims: ("gt", key width) and ("swap", 1).
  std::set<std::pair<std::string, int>> gadget_profile;

  const DecodeGroup& group(const std::string& name) const;
};

// Central builder; all named constructors funnel through it so instances
// can be rebuilt from serialized metadata.
Encoding build_encoding(const EncodingMeta& meta);

Encoding perm_encoding(int n, TopologyKind topo = TopologyKind::Batcher,
                       int width = 0);
Encoding perm_matrix_encoding(int n);

Encoding constrain_value(const Encoding& e, int i, int j);
Encoding fixed_point(const Encoding& e, int i);
Encoding forbid_value(const Encoding& e, int i, int j);
Encoding derangement(const Encoding& e);
Encoding forbid_perm(const Encoding& e, const Permutation& tau);
Encoding parity_constraint(const Encoding& e, ParityKind parity);
Encoding involution_constraint(const Encoding& e);
Encoding power_identity_constraint(int n, int r,
                                   TopologyKind topo = TopologyKind::Batcher);
Encoding order_constraint(int n, int r,
                          TopologyKind topo = TopologyKind::Batcher);

Encoding compose_constraint(int n, TopologyKind topo = TopologyKind::Batcher);
Encoding commute_constraint(int n, TopologyKind topo = TopologyKind::Batcher,
                            std::optional<Permutation> fixed_other = {});
Encoding conjugate_constraint(int n, TopologyKind topo = TopologyKind::Batcher,
                              std::optional<Permutation> fixed_pi = {});

Encoding match_encoding(int n, const Permutation& pattern,
                        TopologyKind topo = TopologyKind::Batcher);

// Permutation-matrix baseline for the composition relation S = P' P.
Encoding matrix_compose_encoding(int n);

}  // namespace permqubo
