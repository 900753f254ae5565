#pragma once

// Univariate polynomials with arbitrary-precision integer coefficients.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lindep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class ExactPoly {
 public:
  ExactPoly() = default;
  // Ascending coefficients; trailing zeros are dropped.
  explicit ExactPoly(std::vector<BigInt> ascending);

  static ExactPoly constant(BigInt c);
  static ExactPoly monomial(std::size_t degree, BigInt c = 1);
  // x - root
  static ExactPoly linear_factor(const BigInt& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  ExactPoly& operator*=(const ExactPoly& rhs);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
  ExactPoly operator-() const;

  ExactPoly pow(std::uint64_t exponent) const;
  ExactPoly derivative() const;
  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;

  // gcd of the coefficients, sign of the leading coefficient.
  BigInt content() const;
  ExactPoly primitive_part() const;

  // "x^4 - 3x^2", "x^3 - 3x - 2", "0".
  std::string to_string() const;

  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
ExactPoly pseudo_remainder(const ExactPoly& f, const ExactPoly& g);

// Exact division over Z; throws std::domain_error if g does not divide f.
ExactPoly exact_quotient(const ExactPoly& f, const ExactPoly& g);

// Primitive gcd with positive leading coefficient.
ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

// Yun's algorithm: returns (factor, multiplicity) with squarefree, pairwise
// coprime, primitive factors; their product equals the primitive part of f.
std::vector<std::pair<ExactPoly, unsigned>> squarefree_decomposition(
    const ExactPoly& f);

// {"coeffs": ["c0", "c1", ...]} with decimal strings, ascending.
std::string to_json(const ExactPoly& p);
ExactPoly exact_poly_from_json(std::string_view text);

}  // namespace lindep
