#pragma once

// Closed-form predictions for the linear dependence graph of F_q^n, computed
// from (q, n) alone.

#include <cstdint>
#include <string>

#include "lindep/exact_poly.hpp"
#include "lindep/spectra.hpp"

namespace lindep::closedform {

using spectra::Real;

struct PredictionSet {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  BigInt N;

  BigInt size;                        // q (q^n - 1) / 2
  bool complete = false;              // n == 1
  std::uint64_t diameter = 0;         // 2, or 1 when n == 1
  std::uint64_t domination = 1;
  BigInt independence;                // N
  std::uint64_t clique = 0;           // q
  std::uint64_t chromatic = 0;        // q
  bool eulerian = false;              // q odd
  std::uint64_t edge_connectivity = 0;    // q - 1
  std::uint64_t vertex_connectivity = 0;  // 1, or q - 1 when n == 1
  bool planar = false;                // q <= 4
  BigInt spanning_trees;              // q^((q-2) N)
  BigRational algebraic_connectivity; // 1, or q when n == 1

  // Energies as stated in the corollaries.
  Real energy_paper;                  // 2 (q-2) N
  BigRational laplacian_energy_paper;
  Real distance_energy_paper;         // 2 (2 q^n - q - 2)

  // Energies summed over the factored spectra.
  Real energy_derived;          // sqrt((q-2)^2 + 4(q^n-1)) + (q-2)(2N-1)
  Real distance_energy_derived; // sqrt(b^2 + 4(q^n-1)) + q(N-1) + (q-2)N

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;
};

// (p, k) with q = p^k, k >= 1; throws InvalidFieldError otherwise.
std::pair<std::uint64_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);

// Throws InvalidFieldError if q is not a prime power, std::invalid_argument
// for n < 1.
PredictionSet predict_all(std::uint64_t q, std::uint32_t n);

std::string to_json(const PredictionSet& p);

}  // namespace lindep::closedform
