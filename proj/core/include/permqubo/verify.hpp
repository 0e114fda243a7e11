#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permqubo/encodings.hpp"
#include "permqubo/pbf.hpp"

namespace permqubo {

// ---------------------------------------------------------------------------
// Permutation oracles (independent reference implementations).

std::vector<Permutation> all_perms(int n);
int perm_parity(const Permutation& p);  // 0 even, 1 odd
Permutation perm_pow(const Permutation& p, int r);
bool perm_matches_pattern(const Permutation& pi, const Permutation& pattern);
long long count_derangements(int n);

// ---------------------------------------------------------------------------
// Decoding.

struct DecodedObject {
  std::map<std::string, Permutation> perms;
  std::vector<int> selected;  // match: selected positions, 1-based, ascending
  bool valid = true;
  std::string error;

  std::string key() const;
};

DecodedObject decode(const Encoding& e, const Assignment& asg);

// ---------------------------------------------------------------------------
// Witness computation.

// Evaluates witness hints in dependency order (hints may reference
// variables allocated later, so allocation order is not enough).
class WitnessEvaluator {
 public:
  explicit WitnessEvaluator(const VariableRegistry& reg);

  void run(Assignment& asg) const;
  const std::vector<VarId>& order() const { return order_; }

 private:
  const VariableRegistry* reg_;
  std::vector<VarId> order_;
};

// Input-role variables without hints; everything else is determined.
std::vector<VarId> free_variables(const Encoding& e);
// Non-input variables lacking hints (should be empty for every encoding).
std::vector<VarId> unhinted_derived(const Encoding& e);

// Sets every hinted variable from the free part of asg.
void witness_extend(const Encoding& e, Assignment& asg);

// Free-bit assignment realizing a given solution object.
Assignment free_assignment_for(const Encoding& e, const DecodedObject& obj);

// Expected solution set per the reference oracles.
std::vector<DecodedObject> oracle_objects(const Encoding& e);

// ---------------------------------------------------------------------------
// Brute force over small polynomials.

int enum_cap();  // PERMQUBO_ENUM_CAP, default 24

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long poly_min(const QuadPoly& p, std::size_t nvars);
std::vector<Assignment> poly_zeros(const QuadPoly& p, std::size_t nvars);

// ---------------------------------------------------------------------------
// Gate certificates: exhaustive proof that a gate polynomial is nonnegative
// and has exactly one zero completion per input tuple, with the control and
// outputs taking their intended values.  Results are cached per (kind,
// width).  Kinds: gt, gte, lt, lte, eq, neq, swap.

struct GateCertificate {
  bool ok = false;
  std::string detail;
};

const GateCertificate& certify_gate(const std::string& kind, int width);
// Certifies everything in the encoding's gadget profile; throws on failure.
void require_certified(const Encoding& e);

// ---------------------------------------------------------------------------
// Encoding verification.

struct VerifyOptions {
  std::string mode = "auto";  // auto, free, oracle
  std::uint64_t seed = 1;
  int negatives = 500;
};

struct VerifyReport {
  bool pass = false;
  std::string mode;
  long long zero_count = 0;   // zeros found (free mode) or positives checked
  long long solutions = 0;    // distinct decoded solutions
  long long completions = -1; // common free-assignment multiplicity, -1 mixed
  int negatives_checked = 0;
  std::string error;
};

// free mode: enumerate the free bits, extend by witness, compare the zero
// set against the oracles and check uniform multiplicities.  oracle mode:
// witness every oracle solution to zero and sample random negatives.  Both
// rest on the gate certificates for completeness of the witness.
VerifyReport verify_encoding(const Encoding& e, VerifyOptions opts = {});

}  // namespace permqubo
