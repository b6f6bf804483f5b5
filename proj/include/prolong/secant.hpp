#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prolong/formspace.hpp"

namespace prolong {

// Monomial parametrization: target variable i maps to images[i], a monomial
// in the parameter variables.
struct MonomialMap {
  VarSet params;
  VarSet targets;
  std::vector<Monomial> images;

  MonomialMap(VarSet p, VarSet t, std::vector<Monomial> imgs);
};

// Generic point of X = image of the map: evaluate every image monomial.
std::vector<Rational> evaluate_map(const MonomialMap& map, const std::vector<Rational>& params);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish draw from [1, H].
  std::uint64_t draw(std::uint64_t H) { return 1 + next() % H; }
  // n/m with n, m drawn from [1, H].
  Rational rational(std::uint64_t H);

 private:
  std::uint64_t state_;
};

struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t range = 97;
};

// Stream for trial (or point) t: seeded at seed + (t+1) * 0x9E3779B97F4A7C15.
SplitMix64 trial_stream(const SampleConfig& cfg, std::uint64_t t);

std::vector<Rational> sample_variety_point(const MonomialMap& map, SplitMix64& rng, std::uint64_t range);
std::vector<Rational> sample_variety_point(const MonomialMap& map, const SampleConfig& cfg);

// t_1 v_1 + ... + t_r v_r for r sampled points and r sampled weights.
std::vector<Rational> sample_secant_point(const MonomialMap& map, unsigned r, SplitMix64& rng, std::uint64_t range);

struct SecantReport {
  std::size_t trials = 0;
  std::size_t zero = 0;
  std::size_t nonzero = 0;
  struct Witness {
    std::size_t trial;
    Rational value;
    std::vector<Rational> point;
  };
  std::optional<Witness> witness;  // from the lowest failing trial

  bool passed() const noexcept { return nonzero == 0; }
};

SecantReport secant_vanish_check(const Polynomial& f, const MonomialMap& map, unsigned r, std::size_t trials,
                                 const SampleConfig& cfg, unsigned threads = 1);

struct InterpolationResult {
  FormSpace space{VarSet{}, 0};
  std::size_t points = 0;      // total sampled points
  std::size_t batch_size = 0;
  std::size_t batches = 0;
  bool stable = false;         // dimension unchanged over the last batch
  std::size_t largest_fibre = 0;
  std::vector<std::string> warnings;
  std::string status;          // "generically verified" when stable
};

// Degree-m forms vanishing on sampled points of the r-th secant variety.
// Monomials are grouped by their multidegree under the torus action (the
// image exponent vector); the vanishing ideal is homogeneous for that grading,
// so each group is interpolated on its own. Batches of `num_points` points
// (0 = largest group + 2) are added until a batch leaves the dimension
// unchanged, or max_batches is reached.
InterpolationResult interpolate_vanishing_piece(const MonomialMap& map, unsigned r, unsigned m,
                                                const SampleConfig& cfg, std::size_t num_points = 0,
                                                std::size_t max_batches = 8);

// No nonzero form of degree deg vanishes on X (checked by interpolation).
bool no_forms_vanish_below(const MonomialMap& map, unsigned deg, const SampleConfig& cfg);

}  // namespace prolong
