#include "permqubo/solve.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "permqubo/verify.hpp"

namespace permqubo {

Sample exhaustive_min(const QuadPoly& p, std::size_t nvars) {
  if (static_cast<int>(nvars) > enum_cap()) {
    throw CapExceeded("exhaustive search over " + std::to_string(nvars) +
                      " variables exceeds the cap of " +
                      std::to_string(enum_cap()));
  }
  CompiledPoly cp(p);
  std::vector<std::uint8_t> bits(std::max(nvars, cp.num_vars()), 0);
  long long val = cp.eval(bits.data());
  long long best = val;
  std::uint64_t best_mask = 0, cur = 0;
  for (std::uint64_t g = 1; g < (1ull << nvars); ++g) {
    const int b = std::countr_zero(g);
    if (static_cast<std::size_t>(b) < cp.num_vars()) {
      val += cp.flip_delta(bits.data(), static_cast<VarId>(b));
    }
    bits[b] ^= 1;
    cur ^= 1ull << b;
    if (val < best) {
      best = val;
      best_mask = cur;
    }
  }
  Sample s;
  s.asg = Assignment(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    s.asg.set(i, static_cast<int>((best_mask >> i) & 1u));
  }
  s.energy = best;
  return s;
}

std::vector<Sample> sa_sample(const QuadPoly& p, std::size_t nvars,
                              const AnnealParams& params) {
  if (params.sweeps < 1 || params.reads < 1 || params.beta_min <= 0 ||
      params.beta_max < params.beta_min) {
    throw std::invalid_argument("bad annealing parameters");
  }
  CompiledPoly cp(p);
  const std::size_t n = std::max(nvars, cp.num_vars());
  const double ratio =
      params.sweeps > 1
          ? std::pow(params.beta_max / params.beta_min,
                     1.0 / static_cast<double>(params.sweeps - 1))
          : 1.0;

  std::vector<Sample> out;
  out.reserve(params.reads);
  for (int read = 0; read < params.reads; ++read) {
    std::mt19937_64 rng(params.seed ^ static_cast<std::uint64_t>(read));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < nvars; ++i) {
      bits[i] = static_cast<std::uint8_t>(rng() & 1u);
    }
    long long val = cp.eval(bits.data());
    double beta = params.beta_min;
    for (int sweep = 0; sweep < params.sweeps; ++sweep) {
      for (std::size_t i = 0; i < nvars; ++i) {
        long long delta = i < cp.num_vars()
                              ? cp.flip_delta(bits.data(), static_cast<VarId>(i))
                              : 0;
        if (delta <= 0 ||
            unit(rng) < std::exp(-beta * static_cast<double>(delta))) {
          bits[i] ^= 1;
          val += delta;
        }
      }
      beta *= ratio;
    }
    Sample s;
    s.asg = Assignment(nvars);
    for (std::size_t i = 0; i < nvars; ++i) s.asg.set(i, bits[i]);
    s.energy = val;
    out.push_back(std::move(s));
  }
  return out;
}

SampleStats sample_stats(const Encoding& e, const std::vector<Sample>& samples) {
  SampleStats st;
  st.total = static_cast<long long>(samples.size());
  bool first = true;
  for (const Sample& s : samples) {
    if (first || s.energy < st.best_energy) st.best_energy = s.energy;
    first = false;
    if (s.energy != 0) continue;
    ++st.ground_hits;
    DecodedObject d = decode(e, s.asg);
    if (!d.valid) {
      ++st.invalid;
      continue;
    }
    ++st.counts[d.key()];
  }
  if (st.counts.size() >= 2) {
    double expected = 0;
    for (const auto& [k, c] : st.counts) expected += static_cast<double>(c);
    expected /= static_cast<double>(st.counts.size());
    double chi = 0;
    for (const auto& [k, c] : st.counts) {
      const double diff = static_cast<double>(c) - expected;
      chi += diff * diff / expected;
    }
    st.chi_square = chi;
  }
  return st;
}

}  // namespace permqubo
