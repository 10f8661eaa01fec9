#include "hardylab/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardylab {

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

cplx Rng::in_disc(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TaylorPoly random_poly(Rng& rng, int max_degree, int min_degree) {
  const int d = rng.uniform_int(min_degree, max_degree);
  std::vector<cplx> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = rng.in_disc();
  return TaylorPoly(std::move(c));
}

std::vector<TaylorPoly> poly_corpus(std::uint64_t seed, int count, int max_degree, bool vanish_at_origin) {
  std::vector<TaylorPoly> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(item_seed(seed, i));
    auto f = random_poly(rng, max_degree);
    if (vanish_at_origin) {
      std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
      c[0] = 0.0;
      f = TaylorPoly(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TaylorPoly> kernel_corpus(std::uint64_t seed, int count, int max_degree) {
  std::vector<TaylorPoly> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(item_seed(seed, i));
    const int d = rng.uniform_int(1, max_degree);
    std::vector<cplx> c(static_cast<size_t>(d) + 1);
    c[0] = 1.0;
    for (int n = 1; n <= d; ++n) c[n] = rng.in_disc(std::ldexp(1.0, -n));
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<MixedPoly> mixed_corpus(std::uint64_t seed, int count, int max_exponent, int terms) {
  std::vector<MixedPoly> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(item_seed(seed, i));
    std::vector<MixedTerm> t(terms);
    for (auto& term : t) {
      term.a = rng.uniform_int(0, max_exponent);
      term.b = rng.uniform_int(0, max_exponent);
      term.c = rng.in_disc();
    }
    out.emplace_back(std::move(t));
  }
  return out;
}

std::vector<BoundarySamples> trig_corpus(std::uint64_t seed, int count, int max_degree, size_t m) {
  std::vector<BoundarySamples> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(item_seed(seed, i));
    const int d = rng.uniform_int(1, max_degree);
    FourierCoefficients c(std::vector<cplx>(m, cplx{0.0}));
    for (int n = -d; n <= d; ++n) c.set(n, rng.in_disc());
    out.push_back(c.to_samples());
  }
  return out;
}

std::vector<TaylorPoly> zero_free_corpus(std::uint64_t seed, int count, int max_degree) {
  std::vector<TaylorPoly> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(item_seed(seed, i));
    const int d = rng.uniform_int(1, max_degree);
    std::vector<cplx> c(static_cast<size_t>(d) + 1);
    c[0] = 2.0;
    for (int n = 1; n <= d; ++n) c[n] = rng.in_disc(1.0 / d);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace hardylab
