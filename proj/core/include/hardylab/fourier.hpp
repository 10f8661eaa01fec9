#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hardylab/mixed_poly.hpp"
#include "hardylab/taylor_poly.hpp"

namespace hardylab {

class FourierCoefficients;

/// Values of a function on the uniform grid theta_j = 2 pi j / M of the unit
/// circle. M is always a power of two.
class BoundarySamples {
 public:
  explicit BoundarySamples(std::vector<cplx> values);

  static BoundarySamples from_poly(const TaylorPoly& f, size_t m);
  static BoundarySamples from_mixed(const MixedPoly& f, size_t m);
  static BoundarySamples from_function(const std::function<cplx(double)>& f, size_t m);

  size_t size() const { return values_.size(); }
  double theta(size_t j) const;
  std::span<const cplx> values() const { return values_; }
  cplx operator[](size_t j) const { return values_[j]; }

  FourierCoefficients fourier() const;

  BoundarySamples& operator+=(const BoundarySamples& o);
  BoundarySamples& operator-=(const BoundarySamples& o);
  BoundarySamples& operator*=(cplx s);
  friend BoundarySamples operator+(BoundarySamples a, const BoundarySamples& b) { return a += b; }
  friend BoundarySamples operator-(BoundarySamples a, const BoundarySamples& b) { return a -= b; }
  friend BoundarySamples operator*(BoundarySamples a, cplx s) { return a *= s; }

  /// Pointwise conjugate.
  BoundarySamples conj() const;
  /// Pointwise product with e^{i k theta}.
  BoundarySamples shifted(int k) const;

 private:
  std::vector<cplx> values_;
};

/// Discrete Fourier coefficients c_n, -M/2 <= n < M/2, of a BoundarySamples,
/// normalized so that f(theta_j) = sum_n c_n e^{i n theta_j}. The Nyquist
/// frequency -M/2 is counted with the negative frequencies.
class FourierCoefficients {
 public:
  FourierCoefficients(std::vector<cplx> fft_ordered);

  size_t grid_size() const { return data_.size(); }
  int min_freq() const { return -static_cast<int>(data_.size() / 2); }
  int max_freq() const { return static_cast<int>(data_.size() / 2) - 1; }
  cplx at(int n) const;
  void set(int n, cplx v);

  BoundarySamples to_samples() const;
  /// Largest |n| with |c_n| > tol.
  int bandwidth(double tol = 1e-13) const;

 private:
  size_t index(int n) const;
  std::vector<cplx> data_;
};

bool is_power_of_two(size_t m);
size_t next_power_of_two(size_t m);
/// Smallest power of two >= 4*degree + 16.
size_t default_grid_size(int degree);

/// (1/M) sum_j v_j e^{-2 pi i n j / M} in FFT order.
std::vector<cplx> forward_dft(std::span<const cplx> values);
/// sum_n c_n e^{2 pi i n j / M} for FFT-ordered c.
std::vector<cplx> inverse_dft(std::span<const cplx> coeffs);

}  // namespace hardylab
