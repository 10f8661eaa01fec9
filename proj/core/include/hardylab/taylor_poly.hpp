#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace hardylab {

using cplx = std::complex<double>;

/// Analytic polynomial sum_n c_n z^n stored by its Taylor coefficients.
///
/// Trailing zero coefficients are trimmed on construction, so degree() is the
/// index of the last nonzero coefficient. The zero polynomial keeps a single
/// zero coefficient and has degree 0.
class TaylorPoly {
 public:
  TaylorPoly() : coeffs_{cplx{0.0}} {}
  explicit TaylorPoly(std::vector<cplx> coeffs);
  TaylorPoly(std::initializer_list<cplx> coeffs)
      : TaylorPoly(std::vector<cplx>(coeffs)) {}

  static TaylorPoly monomial(int n, cplx c = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  /// Coefficient of z^n; zero past the degree.
  cplx operator[](int n) const {
    return (n >= 0 && n <= degree()) ? coeffs_[n] : cplx{0.0};
  }

  cplx eval(cplx z) const;
  TaylorPoly derivative() const;
  /// Keeps coefficients 0..n.
  TaylorPoly truncated(int n) const;
  /// z -> F(e^{i alpha} z)
  TaylorPoly rotated(double alpha) const;
  /// Zeroes coefficients with |c_n| <= rel_tol * max |c|.
  TaylorPoly chopped(double rel_tol = 1e-14) const;
  /// Sum of |c_n|^2, the squared H^2 norm.
  double coefficient_energy() const;

  TaylorPoly& operator+=(const TaylorPoly& other);
  TaylorPoly& operator-=(const TaylorPoly& other);
  TaylorPoly& operator*=(cplx s);

  friend TaylorPoly operator+(TaylorPoly a, const TaylorPoly& b) { return a += b; }
  friend TaylorPoly operator-(TaylorPoly a, const TaylorPoly& b) { return a -= b; }
  friend TaylorPoly operator*(TaylorPoly a, cplx s) { return a *= s; }
  friend TaylorPoly operator*(cplx s, TaylorPoly a) { return a *= s; }
  friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

/// Horner evaluation.
inline cplx eval(const TaylorPoly& f, cplx z) { return f.eval(z); }

/// Largest coefficient difference, max_n |a_n - b_n|.
double max_coeff_diff(const TaylorPoly& a, const TaylorPoly& b);

/// Zeros by companion-matrix eigenvalues, polished by two Newton steps.
std::vector<cplx> roots(const TaylorPoly& f);

}  // namespace hardylab
