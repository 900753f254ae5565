#pragma once

// Closed-form characteristic polynomials of the adjacency, Laplacian and
// distance matrices of the linear dependence graph, their spectra, and the
// spectral quantities derived from them (energies, algebraic connectivity,
// spanning-tree counts).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "lindep/charpoly.hpp"
#include "lindep/exact_poly.hpp"
#include "lindep/family.hpp"
#include "lindep/graph.hpp"

namespace lindep::spectra {

// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;

enum class MatrixKind { adjacency, laplacian, distance };

std::string_view to_string(MatrixKind kind);
// Throws std::invalid_argument for unknown names.
MatrixKind matrix_kind_from_string(std::string_view name);

struct IntegerRoot {
  BigInt value;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

// The two roots of x^2 - b x - c.
struct SurdPair {
  BigInt b;
  BigInt c;

  friend bool operator==(const SurdPair&, const SurdPair&) = default;
};

struct SpectrumDescription {
  // Ascending by value, distinct values, positive multiplicities.
  std::vector<IntegerRoot> integer_roots;
  std::optional<SurdPair> surd_pair;

  std::uint64_t degree() const;
  // Product of (x - r)^m over integer roots times (x^2 - b x - c).
  ExactPoly to_poly() const;

  friend bool operator==(const SpectrumDescription&,
                         const SpectrumDescription&) = default;
};

// {x^2 - (q-2)x - (q^n-1)} {x - (q-2)}^(N-1) (x+1)^((q-2)N)
ExactPoly predicted_adjacency_poly(std::uint64_t q, std::uint32_t n);
// x (x - q^n) (x-1)^(N-1) (x-q)^((q-2)N)
ExactPoly predicted_laplacian_poly(std::uint64_t q, std::uint32_t n);
// [x^2 - {2(q^n-1) - q}x - (q^n-1)] (x+q)^(N-1) (x+1)^((q-2)N)
ExactPoly predicted_distance_poly(std::uint64_t q, std::uint32_t n);
ExactPoly predicted_poly(std::uint64_t q, std::uint32_t n, MatrixKind kind);

SpectrumDescription spectrum_from_factored_form(std::uint64_t q, std::uint32_t n,
                                                MatrixKind kind);

// Sum of multiplicity * |eigenvalue|.
Real adjacency_energy(const SpectrumDescription& s);
Real distance_energy(const SpectrumDescription& s);

// Sum of multiplicity * |eigenvalue - 2m/nv|; exact. Throws
// std::invalid_argument if the spectrum has an irrational pair.
BigRational laplacian_energy(const SpectrumDescription& s, const BigInt& edges,
                             const BigInt& vertices);

// Second-smallest eigenvalue counted with multiplicity. Requires an
// all-integer spectrum of degree >= 2.
BigRational algebraic_connectivity(const SpectrumDescription& s);

// Determinant of L with row and column `removed` deleted.
BigInt spanning_trees_kirchhoff(const IntMatrix& laplacian, std::size_t removed = 0);

// Decimal rendering with `digits` significant digits, trailing zeros and a
// trailing decimal point trimmed.
std::string to_decimal_string(const Real& value, int digits = 32);
std::string to_decimal_string(const BigRational& value, int digits = 32);

std::string to_json(const SpectrumDescription& s);

}  // namespace lindep::spectra
