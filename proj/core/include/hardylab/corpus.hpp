#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hardylab/fourier.hpp"
#include "hardylab/mixed_poly.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// Seeded generator with a platform-independent mapping to doubles. The raw
/// mt19937_64 stream is fully specified by the standard; the std
/// distributions are not, so they are avoided here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform in the disc of the given radius.
  cplx in_disc(double radius = 1.0);

 private:
  std::mt19937_64 engine_;
};

/// Seed for item `index` of a corpus, so corpus prefixes never depend on its
/// total size.
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index);

/// Degree uniform in [min_degree, max_degree], coefficients uniform in the
/// unit disc; the top coefficient is nonzero with probability one.
TaylorPoly random_poly(Rng& rng, int max_degree, int min_degree = 1);

/// Corpus for constant estimation: degrees <= max_degree, coefficients in the
/// unit disc. With vanish_at_origin the constant term is set to zero.
std::vector<TaylorPoly> poly_corpus(std::uint64_t seed, int count, int max_degree = 16,
                                    bool vanish_at_origin = false);

/// Kernels for the extremal solvers: 1 + sum_{n=1}^{d} c_n z^n with
/// d in [1, max_degree] and c_n uniform in the disc of radius 2^{-n}.
std::vector<TaylorPoly> kernel_corpus(std::uint64_t seed, int count, int max_degree = 3);

/// z, zbar polynomials with `terms` terms, exponents a, b <= max_exponent.
std::vector<MixedPoly> mixed_corpus(std::uint64_t seed, int count, int max_exponent = 5, int terms = 4);

/// Trigonometric polynomials sum_{|n| <= degree} c_n e^{i n theta}, c_n in the
/// unit disc, sampled on m nodes.
std::vector<BoundarySamples> trig_corpus(std::uint64_t seed, int count, int max_degree, size_t m);

/// Analytic polynomials with no zeros in the closed disc: c_0 = 2 plus
/// coefficients of total modulus below 1.
std::vector<TaylorPoly> zero_free_corpus(std::uint64_t seed, int count, int max_degree = 4);

}  // namespace hardylab
