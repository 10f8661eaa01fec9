#include "hardylab/taylor_poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardylab {

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

TaylorPoly TaylorPoly::monomial(int n, cplx c) {
  if (n < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<cplx> v(static_cast<size_t>(n) + 1, cplx{0.0});
  v[n] = c;
  return TaylorPoly(std::move(v));
}

void TaylorPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

cplx TaylorPoly::eval(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorPoly TaylorPoly::derivative() const {
  if (coeffs_.size() == 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
  return TaylorPoly(std::move(d));
}

TaylorPoly TaylorPoly::truncated(int n) const {
  if (n < 0) return {};
  const size_t keep = std::min(coeffs_.size(), static_cast<size_t>(n) + 1);
  return TaylorPoly(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + keep));
}

TaylorPoly TaylorPoly::rotated(double alpha) const {
  std::vector<cplx> v(coeffs_);
  for (size_t n = 0; n < v.size(); ++n) v[n] *= std::polar(1.0, alpha * static_cast<double>(n));
  return TaylorPoly(std::move(v));
}

TaylorPoly TaylorPoly::chopped(double rel_tol) const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  std::vector<cplx> v(coeffs_);
  for (auto& c : v)
    if (std::abs(c) <= rel_tol * m) c = 0.0;
  return TaylorPoly(std::move(v));
}

double TaylorPoly::coefficient_energy() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

TaylorPoly& TaylorPoly::operator+=(const TaylorPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  trim();
  return *this;
}

TaylorPoly& TaylorPoly::operator-=(const TaylorPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  trim();
  return *this;
}

TaylorPoly& TaylorPoly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

double max_coeff_diff(const TaylorPoly& a, const TaylorPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int i = 0; i <= n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<cplx> roots(const TaylorPoly& f) {
  const int d = f.degree();
  if (d == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const cplx lead = f[d];
  for (int i = 0; i < d; ++i) companion(0, i) = -f[d - 1 - i] / lead;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const TaylorPoly df = f.derivative();
  std::vector<cplx> out(d);
  for (int i = 0; i < d; ++i) {
    cplx z = solver.eigenvalues()[i];
    for (int it = 0; it < 2; ++it) {
      const cplx dv = df.eval(z);
      if (dv == 0.0) break;
      z -= f.eval(z) / dv;
    }
    out[i] = z;
  }
  return out;
}

}  // namespace hardylab
