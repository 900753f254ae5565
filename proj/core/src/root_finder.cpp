#include "lindep/root_finder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lindep::spectra {

namespace {

constexpr int kMaxBisections = 400;

Real evaluate(const std::vector<Real>& coeffs, const Real& x) {
  Real acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

int sign(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Root of `coeffs` in [lo, hi] given a sign change across the interval.
Real bisect(const std::vector<Real>& coeffs, Real lo, Real hi) {
  const Real eps = std::numeric_limits<Real>::epsilon() * 16;
  int lo_sign = sign(evaluate(coeffs, lo));
  for (int it = 0; it < kMaxBisections; ++it) {
    const Real mid = (lo + hi) / 2;
    const int mid_sign = sign(evaluate(coeffs, mid));
    if (mid_sign == 0) return mid;
    if (mid_sign == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
    const Real scale = std::max(Real(1), Real(abs(mid)));
    if (hi - lo <= eps * scale) break;
  }
  return (lo + hi) / 2;
}

// Ascending roots of a squarefree real-rooted polynomial; roots of the
// derivative separate them.
std::vector<Real> squarefree_roots(const std::vector<Real>& coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-coeffs[0] / coeffs[1]};

  // Cauchy bound.
  Real bound = 0;
  for (std::size_t i = 0; i < degree; ++i) {
    bound = std::max(bound, Real(abs(coeffs[i] / coeffs[degree])));
  }
  bound += 1;

  std::vector<Real> deriv(degree);
  for (std::size_t i = 1; i <= degree; ++i) deriv[i - 1] = coeffs[i] * i;
  std::vector<Real> fences{-bound};
  for (const Real& c : squarefree_roots(deriv)) fences.push_back(c);
  fences.push_back(bound);

  std::vector<Real> roots;
  for (std::size_t i = 0; i + 1 < fences.size(); ++i) {
    const int s_lo = sign(evaluate(coeffs, fences[i]));
    const int s_hi = sign(evaluate(coeffs, fences[i + 1]));
    if (s_lo == 0) {
      roots.push_back(fences[i]);
      continue;
    }
    if (s_lo == s_hi) {
      throw std::domain_error("polynomial is not real-rooted");
    }
    if (s_hi == 0) continue;  // picked up as the next interval's left fence
    roots.push_back(bisect(coeffs, fences[i], fences[i + 1]));
  }
  if (roots.size() != degree) throw std::domain_error("polynomial is not real-rooted");
  return roots;
}

}  // namespace

std::vector<NumericRoot> real_roots(const ExactPoly& f) {
  std::vector<NumericRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    std::vector<Real> coeffs;
    coeffs.reserve(factor.coeffs().size());
    for (const auto& c : factor.coeffs()) coeffs.emplace_back(c);
    for (Real& r : squarefree_roots(coeffs)) out.push_back(NumericRoot{r, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const NumericRoot& a, const NumericRoot& b) { return a.value < b.value; });
  return out;
}

Real absolute_deviation_sum(const std::vector<NumericRoot>& roots, const Real& shift) {
  Real total = 0;
  for (const auto& r : roots) total += abs(r.value - shift) * r.multiplicity;
  return total;
}

}  // namespace lindep::spectra
