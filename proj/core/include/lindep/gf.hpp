#pragma once

// Arithmetic in GF(p^k), presented as Z_p[x] modulo a monic irreducible
// polynomial of degree k. Elements are coefficient vectors of length k.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lindep::gf {

using Coeff = std::uint32_t;

// Largest field order accepted; keeps vector indices comfortably inside 64
// bits for the dimensions this library deals with.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

// Degree and field-order limits for the exhaustive irreducibility check used
// in validation paths. Beyond them only Rabin's test is run.
inline constexpr std::uint32_t kExhaustiveMaxDegree = 6;
inline constexpr std::uint64_t kExhaustiveMaxOrder = 64;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Ascending coefficients, length k + 1, monic.
  std::vector<Coeff> modulus{0, 1};
  std::uint64_t q = 2;

  // GF(p^k) with the default (lexicographically least) modulus.
  static FieldSpec make(std::uint32_t p, std::uint32_t k);

  // GF(p^k) with a caller-supplied modulus; validated for shape and
  // irreducibility. Throws InvalidFieldError.
  static FieldSpec with_modulus(std::uint32_t p, std::uint32_t k,
                                std::vector<Coeff> modulus);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElement {
  // Length k, each entry in [0, p).
  std::vector<Coeff> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t value);

// Rabin's irreducibility test for a monic polynomial over Z_p.
bool is_irreducible(const std::vector<Coeff>& monic_poly, std::uint32_t p);

// Lexicographically least monic irreducible polynomial of degree k over Z_p,
// ordering candidates by their coefficients from x^(k-1) down to x^0.
std::vector<Coeff> find_irreducible(std::uint32_t p, std::uint32_t k);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

FieldElement add(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec);
FieldElement sub(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec);
FieldElement neg(const FieldElement& a, const FieldSpec& spec);
FieldElement mul(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec);
// Throws DivisionByZeroError for a == 0.
FieldElement inv(const FieldElement& a, const FieldSpec& spec);

bool is_zero(const FieldElement& a);

// enc(e) = sum coeffs[i] * p^i, in [0, q).
std::uint64_t encode(const FieldElement& a, const FieldSpec& spec);
FieldElement decode(std::uint64_t encoding, const FieldSpec& spec);

// All q elements in increasing encoding order.
std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

// Human-readable element, e.g. "0", "1", "w+1", "2w^2+w".
std::string to_string(const FieldElement& a);

// {"p": int, "k": int, "modulus": [int, ...]}
std::string to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(std::string_view text);

}  // namespace lindep::gf
