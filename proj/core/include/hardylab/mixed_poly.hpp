#pragma once

#include <vector>

#include "hardylab/taylor_poly.hpp"

namespace hardylab {

/// A polynomial in z and conj(z): sum of c * z^a * conj(z)^b.
struct MixedTerm {
  int a = 0;
  int b = 0;
  cplx c = 0.0;
  friend bool operator==(const MixedTerm&, const MixedTerm&) = default;
};

class MixedPoly {
 public:
  MixedPoly() = default;
  explicit MixedPoly(std::vector<MixedTerm> terms);
  static MixedPoly from_analytic(const TaylorPoly& f);

  const std::vector<MixedTerm>& terms() const { return terms_; }
  bool is_analytic() const;
  bool is_antianalytic() const;  // every term has a == 0, b > 0
  int max_a() const;
  int max_b() const;

  cplx eval(cplx z) const;
  /// d/dz, treating conj(z) as independent.
  cplx dz(cplx z) const;
  cplx dzbar(cplx z) const;

 private:
  std::vector<MixedTerm> terms_;
};

}  // namespace hardylab
