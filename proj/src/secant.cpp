#include "prolong/secant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace prolong {

MonomialMap::MonomialMap(VarSet p, VarSet t, std::vector<Monomial> imgs)
    : params(std::move(p)), targets(std::move(t)), images(std::move(imgs)) {
  if (images.size() != targets.size()) throw std::invalid_argument("monomial map: one image per target required");
  for (const auto& m : images)
    if (m.size() != params.size()) throw std::invalid_argument("monomial map: image over wrong parameter set");
}

std::vector<Rational> evaluate_map(const MonomialMap& map, const std::vector<Rational>& params) {
  if (params.size() != map.params.size()) throw std::invalid_argument("evaluate_map: parameter count mismatch");
  std::vector<Rational> out;
  out.reserve(map.images.size());
  for (const auto& m : map.images) {
    Rational v = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Monomial::Exponent k = 0; k < m[i]; ++k) v *= params[i];
    out.push_back(v);
  }
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational SplitMix64::rational(std::uint64_t H) {
  Integer num(std::to_string(draw(H)));
  Integer den(std::to_string(draw(H)));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

SplitMix64 trial_stream(const SampleConfig& cfg, std::uint64_t t) {
  return SplitMix64(cfg.seed + (t + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<Rational> sample_variety_point(const MonomialMap& map, SplitMix64& rng, std::uint64_t range) {
  std::vector<Rational> params;
  params.reserve(map.params.size());
  for (std::size_t i = 0; i < map.params.size(); ++i) params.push_back(rng.rational(range));
  return evaluate_map(map, params);
}

std::vector<Rational> sample_variety_point(const MonomialMap& map, const SampleConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  return sample_variety_point(map, rng, cfg.range);
}

std::vector<Rational> sample_secant_point(const MonomialMap& map, unsigned r, SplitMix64& rng, std::uint64_t range) {
  std::vector<std::vector<Rational>> points;
  for (unsigned i = 0; i < r; ++i) points.push_back(sample_variety_point(map, rng, range));
  std::vector<Rational> out(map.targets.size(), Rational(0));
  for (unsigned i = 0; i < r; ++i) {
    Rational t = rng.rational(range);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += t * points[i][j];
  }
  return out;
}

SecantReport secant_vanish_check(const Polynomial& f, const MonomialMap& map, unsigned r, std::size_t trials,
                                 const SampleConfig& cfg, unsigned threads) {
  if (!(f.vars() == map.targets)) throw std::invalid_argument("secant_vanish_check: polynomial not over the map's targets");
  if (r < 1) throw std::invalid_argument("secant_vanish_check: r must be positive");
  struct Outcome {
    Rational value;
    std::vector<Rational> point;
  };
  std::vector<Outcome> outcomes(trials);
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < trials; t += step) {
      auto rng = trial_stream(cfg, t);
      outcomes[t].point = sample_secant_point(map, r, rng, cfg.range);
      outcomes[t].value = evaluate(f, outcomes[t].point);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(run, k, threads);
    for (auto& th : pool) th.join();
  }
  SecantReport rep;
  rep.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    if (outcomes[t].value == 0) {
      ++rep.zero;
    } else {
      ++rep.nonzero;
      if (!rep.witness) rep.witness = SecantReport::Witness{t, outcomes[t].value, outcomes[t].point};
    }
  }
  return rep;
}

namespace {

// Projective rescaling of a rational point to integer coordinates.
std::vector<Integer> clear_denominators(const std::vector<Rational>& p) {
  Integer l = 1;
  for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(Integer(x.get_num() * (l / x.get_den())));
  return out;
}

struct Fibre {
  std::vector<Monomial> monomials;
  std::vector<RationalVector> kernel;  // coefficient vectors over `monomials`
};

Integer monomial_value(const Monomial& m, const std::vector<Integer>& point) {
  Integer v = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), m[i]);
      v *= p;
    }
  return v;
}

// Cut the fibre's kernel down to vectors vanishing at the point.
void restrict_kernel(Fibre& fb, const std::vector<Integer>& point) {
  if (fb.kernel.empty()) return;
  std::vector<Rational> values(fb.monomials.size());
  for (std::size_t i = 0; i < fb.monomials.size(); ++i) values[i] = Rational(monomial_value(fb.monomials[i], point));
  std::vector<Rational> ev(fb.kernel.size(), Rational(0));
  std::size_t piv = fb.kernel.size();
  for (std::size_t k = 0; k < fb.kernel.size(); ++k) {
    for (const auto& e : fb.kernel[k]) ev[k] += e.value * values[e.index];
    if (piv == fb.kernel.size() && ev[k] != 0) piv = k;
  }
  if (piv == fb.kernel.size()) return;
  std::vector<RationalVector> next;
  next.reserve(fb.kernel.size() - 1);
  for (std::size_t k = 0; k < fb.kernel.size(); ++k) {
    if (k == piv) continue;
    if (ev[k] == 0) {
      next.push_back(std::move(fb.kernel[k]));
    } else {
      Rational c = -ev[k] / ev[piv];
      next.push_back(linalg::axpy(fb.kernel[k], c, fb.kernel[piv]));
    }
  }
  fb.kernel = std::move(next);
}

}  // namespace

InterpolationResult interpolate_vanishing_piece(const MonomialMap& map, unsigned r, unsigned m,
                                                const SampleConfig& cfg, std::size_t num_points,
                                                std::size_t max_batches) {
  if (r < 1) throw std::invalid_argument("interpolate_vanishing_piece: r must be positive");
  const std::size_t n = map.targets.size();
  std::map<std::vector<Monomial::Exponent>, Fibre> fibres;
  for (const auto& mon : monomials_of_degree(n, m)) {
    std::vector<Monomial::Exponent> weight(map.params.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < map.params.size(); ++j) weight[j] += mon[i] * map.images[i][j];
    fibres[weight].monomials.push_back(mon);
  }
  InterpolationResult res;
  for (auto& [w, fb] : fibres) {
    res.largest_fibre = std::max(res.largest_fibre, fb.monomials.size());
    for (std::size_t i = 0; i < fb.monomials.size(); ++i) fb.kernel.push_back(RationalVector::unit(i));
  }
  res.batch_size = num_points ? num_points : res.largest_fibre + 2;
  if (res.batch_size < res.largest_fibre)
    res.warnings.push_back("batch of " + std::to_string(res.batch_size) + " points is below the largest fibre size " +
                           std::to_string(res.largest_fibre));
  auto dimension = [&] {
    std::size_t d = 0;
    for (const auto& [w, fb] : fibres) d += fb.kernel.size();
    return d;
  };
  std::size_t previous = dimension();
  for (std::size_t b = 0; b < max_batches; ++b) {
    for (std::size_t k = 0; k < res.batch_size; ++k) {
      auto rng = trial_stream(cfg, res.points++);
      auto point = clear_denominators(sample_secant_point(map, r, rng, cfg.range));
      for (auto& [w, fb] : fibres) restrict_kernel(fb, point);
    }
    ++res.batches;
    std::size_t now = dimension();
    if (b > 0 && now == previous) {
      res.stable = true;
      break;
    }
    previous = now;
  }
  std::vector<Polynomial> polys;
  for (const auto& [w, fb] : fibres)
    for (const auto& v : fb.kernel) {
      Polynomial p(map.targets);
      for (const auto& e : v) p.add_term(fb.monomials[e.index], e.value);
      polys.push_back(std::move(p));
    }
  res.space = make_formspace(map.targets, m, polys);
  res.status = res.stable ? "generically verified" : "not stable";
  if (!res.stable) res.warnings.push_back("dimension still changing after " + std::to_string(res.batches) + " batches");
  return res;
}

bool no_forms_vanish_below(const MonomialMap& map, unsigned deg, const SampleConfig& cfg) {
  if (deg == 0) return true;
  return interpolate_vanishing_piece(map, 1, deg, cfg).space.is_zero();
}

}  // namespace prolong
