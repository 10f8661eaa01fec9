#include "hardylab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/FFT>

namespace hardylab {

bool is_power_of_two(size_t m) { return m != 0 && (m & (m - 1)) == 0; }

size_t next_power_of_two(size_t m) {
  size_t p = 1;
  while (p < m) p <<= 1;
  return p;
}

size_t default_grid_size(int degree) {
  return next_power_of_two(static_cast<size_t>(4 * std::max(degree, 0) + 16));
}

std::vector<cplx> forward_dft(std::span<const cplx> values) {
  std::vector<cplx> in(values.begin(), values.end());
  std::vector<cplx> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<cplx> inverse_dft(std::span<const cplx> coeffs) {
  std::vector<cplx> in(coeffs.begin(), coeffs.end());
  std::vector<cplx> out;
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  return out;
}

BoundarySamples::BoundarySamples(std::vector<cplx> values) : values_(std::move(values)) {
  if (!is_power_of_two(values_.size()))
    throw std::invalid_argument("boundary grid size must be a power of two");
}

double BoundarySamples::theta(size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(values_.size());
}

BoundarySamples BoundarySamples::from_poly(const TaylorPoly& f, size_t m) {
  if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
  if (static_cast<size_t>(f.degree()) >= m / 2)
    throw std::invalid_argument("boundary grid too coarse for polynomial degree");
  std::vector<cplx> c(m, cplx{0.0});
  for (int n = 0; n <= f.degree(); ++n) c[n] = f[n];
  return BoundarySamples(inverse_dft(c));
}

BoundarySamples BoundarySamples::from_mixed(const MixedPoly& f, size_t m) {
  if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
  std::vector<cplx> v(m);
  for (size_t j = 0; j < m; ++j) {
    v[j] = f.eval(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
  }
  return BoundarySamples(std::move(v));
}

BoundarySamples BoundarySamples::from_function(const std::function<cplx(double)>& f, size_t m) {
  if (!is_power_of_two(m)) throw std::invalid_argument("boundary grid size must be a power of two");
  std::vector<cplx> v(m);
  for (size_t j = 0; j < m; ++j) v[j] = f(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  return BoundarySamples(std::move(v));
}

FourierCoefficients BoundarySamples::fourier() const { return FourierCoefficients(forward_dft(values_)); }

BoundarySamples& BoundarySamples::operator+=(const BoundarySamples& o) {
  if (o.size() != size()) throw std::invalid_argument("boundary grid size mismatch");
  for (size_t j = 0; j < size(); ++j) values_[j] += o.values_[j];
  return *this;
}

BoundarySamples& BoundarySamples::operator-=(const BoundarySamples& o) {
  if (o.size() != size()) throw std::invalid_argument("boundary grid size mismatch");
  for (size_t j = 0; j < size(); ++j) values_[j] -= o.values_[j];
  return *this;
}

BoundarySamples& BoundarySamples::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

BoundarySamples BoundarySamples::conj() const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x = std::conj(x);
  return BoundarySamples(std::move(v));
}

BoundarySamples BoundarySamples::shifted(int k) const {
  std::vector<cplx> v(values_);
  for (size_t j = 0; j < v.size(); ++j) v[j] *= std::polar(1.0, static_cast<double>(k) * theta(j));
  return BoundarySamples(std::move(v));
}

FourierCoefficients::FourierCoefficients(std::vector<cplx> fft_ordered) : data_(std::move(fft_ordered)) {
  if (!is_power_of_two(data_.size())) throw std::invalid_argument("coefficient count must be a power of two");
}

size_t FourierCoefficients::index(int n) const {
  if (n < min_freq() || n > max_freq()) throw std::out_of_range("Fourier frequency outside grid");
  return n >= 0 ? static_cast<size_t>(n) : data_.size() - static_cast<size_t>(-n);
}

cplx FourierCoefficients::at(int n) const { return data_[index(n)]; }
void FourierCoefficients::set(int n, cplx v) { data_[index(n)] = v; }

BoundarySamples FourierCoefficients::to_samples() const { return BoundarySamples(inverse_dft(data_)); }

int FourierCoefficients::bandwidth(double tol) const {
  int b = 0;
  for (int n = min_freq(); n <= max_freq(); ++n) {
    if (std::abs(at(n)) > tol) b = std::max(b, std::abs(n));
  }
  return b;
}

}  // namespace hardylab
