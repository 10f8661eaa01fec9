#include "hardylab/mixed_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardylab {
namespace {

cplx ipow(cplx z, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

MixedPoly::MixedPoly(std::vector<MixedTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.a < 0 || t.b < 0) throw std::invalid_argument("mixed term exponents must be nonnegative");
  }
}

MixedPoly MixedPoly::from_analytic(const TaylorPoly& f) {
  std::vector<MixedTerm> t;
  for (int n = 0; n <= f.degree(); ++n) {
    if (f[n] != 0.0) t.push_back({n, 0, f[n]});
  }
  return MixedPoly(std::move(t));
}

bool MixedPoly::is_analytic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const MixedTerm& t) { return t.b == 0; });
}

bool MixedPoly::is_antianalytic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const MixedTerm& t) { return t.a == 0 && t.b > 0; });
}

int MixedPoly::max_a() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.a);
  return m;
}

int MixedPoly::max_b() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.b);
  return m;
}

cplx MixedPoly::eval(cplx z) const {
  const cplx zb = std::conj(z);
  cplx s = 0.0;
  for (const auto& t : terms_) s += t.c * ipow(z, t.a) * ipow(zb, t.b);
  return s;
}

cplx MixedPoly::dz(cplx z) const {
  const cplx zb = std::conj(z);
  cplx s = 0.0;
  for (const auto& t : terms_) {
    if (t.a > 0) s += t.c * static_cast<double>(t.a) * ipow(z, t.a - 1) * ipow(zb, t.b);
  }
  return s;
}

cplx MixedPoly::dzbar(cplx z) const {
  const cplx zb = std::conj(z);
  cplx s = 0.0;
  for (const auto& t : terms_) {
    if (t.b > 0) s += t.c * static_cast<double>(t.b) * ipow(z, t.a) * ipow(zb, t.b - 1);
  }
  return s;
}

}  // namespace hardylab
