#include "lindep/spectra.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"

namespace lindep::spectra {

namespace {

// Exponents beyond this would describe polynomials far outside any matrix
// this library can build.
constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 24;

std::uint64_t to_exponent(const BigInt& e) {
  if (e < 0 || e > kMaxExponent) {
    throw CapacityError("factor multiplicity " + e.str() + " out of range");
  }
  return e.convert_to<std::uint64_t>();
}

struct FactorExponents {
  std::uint64_t lines = 0;   // N - 1
  std::uint64_t cliques = 0; // (q - 2) N
};

FactorExponents exponents(const Family& f) {
  return {to_exponent(f.N - 1), to_exponent(BigInt(f.q - 2) * f.N)};
}

ExactPoly quadratic(const BigInt& b, const BigInt& c) {
  return ExactPoly(std::vector<BigInt>{-c, -b, 1});
}

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

Real abs_value(const Real& v) { return v < 0 ? Real(-v) : v; }

Real absolute_sum(const SpectrumDescription& s) {
  Real total = 0;
  for (const auto& root : s.integer_roots) {
    total += Real(abs_value(root.value)) * Real(root.multiplicity);
  }
  if (s.surd_pair) {
    const Real b(s.surd_pair->b);
    const Real c(s.surd_pair->c);
    const Real disc = sqrt(b * b + 4 * c);
    total += abs_value((b + disc) / 2) + abs_value((b - disc) / 2);
  }
  return total;
}

void require_integral(const SpectrumDescription& s, const char* what) {
  if (s.surd_pair) {
    throw std::invalid_argument(std::string(what) +
                                " requires an all-integer spectrum");
  }
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency:
      return "adjacency";
    case MatrixKind::laplacian:
      return "laplacian";
    case MatrixKind::distance:
      return "distance";
  }
  return "unknown";
}

MatrixKind matrix_kind_from_string(std::string_view name) {
  if (name == "adjacency") return MatrixKind::adjacency;
  if (name == "laplacian") return MatrixKind::laplacian;
  if (name == "distance") return MatrixKind::distance;
  throw std::invalid_argument("unknown matrix kind: " + std::string(name));
}

std::uint64_t SpectrumDescription::degree() const {
  std::uint64_t d = surd_pair ? 2 : 0;
  for (const auto& root : integer_roots) d += root.multiplicity;
  return d;
}

ExactPoly SpectrumDescription::to_poly() const {
  ExactPoly result = ExactPoly::constant(1);
  for (const auto& root : integer_roots) {
    result *= ExactPoly::linear_factor(root.value).pow(root.multiplicity);
  }
  if (surd_pair) result *= quadratic(surd_pair->b, surd_pair->c);
  return result;
}

ExactPoly predicted_adjacency_poly(std::uint64_t q, std::uint32_t n) {
  const Family f = Family::make(q, n);
  const auto e = exponents(f);
  const BigInt shift = BigInt(q) - 2;
  return quadratic(shift, f.qn - 1) *
         ExactPoly::linear_factor(shift).pow(e.lines) *
         ExactPoly::linear_factor(-1).pow(e.cliques);
}

ExactPoly predicted_laplacian_poly(std::uint64_t q, std::uint32_t n) {
  const Family f = Family::make(q, n);
  const auto e = exponents(f);
  return ExactPoly::monomial(1) * ExactPoly::linear_factor(f.qn) *
         ExactPoly::linear_factor(1).pow(e.lines) *
         ExactPoly::linear_factor(BigInt(q)).pow(e.cliques);
}

ExactPoly predicted_distance_poly(std::uint64_t q, std::uint32_t n) {
  const Family f = Family::make(q, n);
  const auto e = exponents(f);
  const BigInt b = 2 * (f.qn - 1) - q;
  return quadratic(b, f.qn - 1) *
         ExactPoly::linear_factor(-BigInt(q)).pow(e.lines) *
         ExactPoly::linear_factor(-1).pow(e.cliques);
}

ExactPoly predicted_poly(std::uint64_t q, std::uint32_t n, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency:
      return predicted_adjacency_poly(q, n);
    case MatrixKind::laplacian:
      return predicted_laplacian_poly(q, n);
    case MatrixKind::distance:
      return predicted_distance_poly(q, n);
  }
  throw std::invalid_argument("unknown matrix kind");
}

SpectrumDescription spectrum_from_factored_form(std::uint64_t q, std::uint32_t n,
                                                MatrixKind kind) {
  const Family f = Family::make(q, n);
  const auto e = exponents(f);
  std::map<BigInt, std::uint64_t> roots;
  SpectrumDescription s;
  switch (kind) {
    case MatrixKind::adjacency:
      s.surd_pair = SurdPair{BigInt(q) - 2, f.qn - 1};
      roots[BigInt(q) - 2] += e.lines;
      roots[BigInt(-1)] += e.cliques;
      break;
    case MatrixKind::laplacian:
      roots[BigInt(0)] += 1;
      roots[f.qn] += 1;
      roots[BigInt(1)] += e.lines;
      roots[BigInt(q)] += e.cliques;
      break;
    case MatrixKind::distance:
      s.surd_pair = SurdPair{2 * (f.qn - 1) - q, f.qn - 1};
      roots[-BigInt(q)] += e.lines;
      roots[BigInt(-1)] += e.cliques;
      break;
  }
  for (const auto& [value, mult] : roots) {
    if (mult > 0) s.integer_roots.push_back(IntegerRoot{value, mult});
  }
  return s;
}

Real adjacency_energy(const SpectrumDescription& s) { return absolute_sum(s); }

Real distance_energy(const SpectrumDescription& s) { return absolute_sum(s); }

BigRational laplacian_energy(const SpectrumDescription& s, const BigInt& edges,
                             const BigInt& vertices) {
  require_integral(s, "laplacian_energy");
  const BigRational mean(2 * edges, vertices);
  BigRational total = 0;
  for (const auto& root : s.integer_roots) {
    BigRational dev = BigRational(root.value) - mean;
    if (dev < 0) dev = -dev;
    total += dev * BigRational(root.multiplicity);
  }
  return total;
}

BigRational algebraic_connectivity(const SpectrumDescription& s) {
  require_integral(s, "algebraic_connectivity");
  if (s.degree() < 2) {
    throw std::invalid_argument("algebraic connectivity needs at least two eigenvalues");
  }
  // integer_roots are ascending.
  const auto& smallest = s.integer_roots.front();
  if (smallest.multiplicity >= 2) return BigRational(smallest.value);
  return BigRational(s.integer_roots.at(1).value);
}

BigInt spanning_trees_kirchhoff(const IntMatrix& laplacian, std::size_t removed) {
  const std::size_t n = laplacian.order();
  if (n == 0) return 0;
  if (removed >= n) throw std::out_of_range("deleted index out of range");
  std::vector<std::vector<BigInt>> minor;
  minor.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == removed) continue;
    std::vector<BigInt> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != removed) row.emplace_back(laplacian(i, j));
    }
    minor.push_back(std::move(row));
  }
  return determinant_bareiss(minor);
}

std::string to_decimal_string(const Real& value, int digits) {
  if (value == 0) return "0";
  const Real mag = abs_value(value);
  int integer_digits = 0;
  if (mag >= 1) {
    integer_digits = static_cast<int>(floor(log10(mag)).convert_to<long>()) + 1;
    // log10 can land just below an exact power of ten.
    if (mag >= pow(Real(10), integer_digits)) ++integer_digits;
  }
  const int decimals = std::max(0, digits - integer_digits);
  std::string s = value.str(decimals, std::ios_base::fixed);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string to_decimal_string(const BigRational& value, int digits) {
  if (denominator(value) == 1) return numerator(value).str();
  return to_decimal_string(Real(numerator(value)) / Real(denominator(value)), digits);
}

std::string to_json(const SpectrumDescription& s) {
  nlohmann::ordered_json j;
  auto roots = nlohmann::ordered_json::array();
  for (const auto& r : s.integer_roots) {
    roots.push_back({{"value", r.value.str()}, {"multiplicity", r.multiplicity}});
  }
  j["integer_roots"] = std::move(roots);
  if (s.surd_pair) {
    j["surd"] = {{"b", s.surd_pair->b.str()}, {"c", s.surd_pair->c.str()}};
  } else {
    j["surd"] = nullptr;
  }
  return j.dump();
}

}  // namespace lindep::spectra
