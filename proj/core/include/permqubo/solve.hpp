#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permqubo/encodings.hpp"
#include "permqubo/pbf.hpp"

namespace permqubo {

struct Sample {
  Assignment asg;
  long long energy = 0;
};

// Ground state by gray-code enumeration; respects the enumeration cap.
Sample exhaustive_min(const QuadPoly& p, std::size_t nvars);

struct AnnealParams {
  int sweeps = 1000;
  int reads = 10;
  double beta_min = 0.1;
  double beta_max = 10.0;
  std::uint64_t seed = 1;
};

// Single-flip Metropolis with a geometric inverse-temperature schedule.
// Read r uses seed ^ r, so results are reproducible per read.
std::vector<Sample> sa_sample(const QuadPoly& p, std::size_t nvars,
                              const AnnealParams& params);

struct SampleStats {
  long long total = 0;
  long long ground_hits = 0;  // reads reaching energy zero
  long long best_energy = 0;
  long long invalid = 0;  // zero-energy reads that fail to decode
  std::map<std::string, long long> counts;  // decoded solution -> hits
  double chi_square = -1.0;  // across observed solutions, -1 if < 2 observed
};

SampleStats sample_stats(const Encoding& e, const std::vector<Sample>& samples);

}  // namespace permqubo
