#pragma once

// Exact characteristic polynomials det(xI - M) of integer matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lindep/exact_poly.hpp"
#include "lindep/graph.hpp"

namespace lindep::spectra {

using graph::IntMatrix;

inline constexpr std::size_t kNaiveMaxOrder = 8;

// Multi-modular: Hessenberg reduction modulo enough 62-bit primes to exceed
// twice the coefficient bound (1 + max |row sum|)^n, then CRT lifting to
// symmetric residues. O(n^3) per prime.
ExactPoly charpoly_exact(const IntMatrix& m);

// Berkowitz's division-free algorithm directly over Z. O(n^4) big-integer
// operations; used as a second exact route.
ExactPoly charpoly_berkowitz(const IntMatrix& m);

// Leibniz expansion of det(xI - M) over all permutations. Throws
// CapacityError above kNaiveMaxOrder.
ExactPoly charpoly_naive(const IntMatrix& m);

// (1 + R)^n with R the largest absolute row sum; bounds every coefficient.
BigInt charpoly_coefficient_bound(const IntMatrix& m);

// Fraction-free Bareiss elimination.
BigInt determinant_bareiss(const std::vector<std::vector<BigInt>>& rows);

namespace detail {
// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);
// Characteristic polynomial modulo prime `p` (< 2^62), ascending.
std::vector<std::uint64_t> charpoly_mod_prime(const IntMatrix& m, std::uint64_t p);
}  // namespace detail

}  // namespace lindep::spectra
