#pragma once

#include <cstdint>
#include <stdexcept>

#include "lindep/exact_poly.hpp"

namespace lindep {

// Parameters of the graph family: field order q, dimension n, q^n and the
// number N = (q^n - 1) / (q - 1) of 1-dimensional subspaces.
struct Family {
  std::uint64_t q = 2;
  std::uint32_t n = 1;
  BigInt qn = 2;
  BigInt N = 1;

  // Throws std::invalid_argument for q < 2 or n < 1.
  static Family make(std::uint64_t q, std::uint32_t n) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Family f;
    f.q = q;
    f.n = n;
    f.qn = boost::multiprecision::pow(BigInt(q), n);
    f.N = (f.qn - 1) / (q - 1);
    return f;
  }
};

}  // namespace lindep
