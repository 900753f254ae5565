#pragma once

#include <vector>

#include "lindep/exact_poly.hpp"
#include "lindep/spectra.hpp"

namespace lindep::spectra {

struct NumericRoot {
  Real value;
  unsigned multiplicity = 0;
};

// Real roots of a real-rooted integer polynomial (e.g. the characteristic
// polynomial of a symmetric matrix) to ~50 significant digits, ascending,
// with multiplicities from an exact squarefree decomposition. Throws
// std::domain_error if a squarefree factor has non-real roots.
std::vector<NumericRoot> real_roots(const ExactPoly& f);

// Sum of multiplicity * |root - shift|.
Real absolute_deviation_sum(const std::vector<NumericRoot>& roots,
                            const Real& shift = 0);

}  // namespace lindep::spectra
