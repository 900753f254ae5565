#include "lindep/closedform.hpp"

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"
#include "lindep/family.hpp"
#include "lindep/gf.hpp"

namespace lindep::closedform {

std::pair<std::uint64_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) throw InvalidFieldError("q must be a prime power >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  std::uint64_t rest = q;
  std::uint32_t k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) {
    throw InvalidFieldError("q = " + std::to_string(q) + " is not a prime power");
  }
  return {p, k};
}

PredictionSet predict_all(std::uint64_t q, std::uint32_t n) {
  prime_power_decomposition(q);
  const Family f = Family::make(q, n);
  if ((q - 1) * f.N + 1 != f.qn) {
    throw std::logic_error("(q - 1) N + 1 != q^n");
  }
  const bool line = n == 1;

  PredictionSet p;
  p.q = q;
  p.n = n;
  p.N = f.N;
  p.size = BigInt(q) * (f.qn - 1) / 2;
  p.complete = line;
  p.diameter = line ? 1 : 2;
  p.domination = 1;
  p.independence = f.N;
  p.clique = q;
  p.chromatic = q;
  p.eulerian = q % 2 == 1;
  p.edge_connectivity = q - 1;
  p.vertex_connectivity = line ? q - 1 : 1;
  p.planar = q <= 4;
  p.spanning_trees = boost::multiprecision::pow(
      BigInt(q), (BigInt(q - 2) * f.N).convert_to<unsigned>());
  p.algebraic_connectivity = line ? BigRational(q) : BigRational(1);

  const Real qr(q);
  const Real qn(f.qn);
  const Real nr(f.N);
  p.energy_paper = 2 * (qr - 2) * nr;
  // q^n + ((q^n (q-1) - q) / q^n)(q^(n-1) + ... + q) + (q / q^n)(q-2)(q^(n-1) + ... + 1)
  p.laplacian_energy_paper =
      BigRational(f.qn) +
      BigRational(f.qn * (q - 1) - q, f.qn) * BigRational(f.N - 1) +
      BigRational(BigInt(q), f.qn) * BigRational(BigInt(q - 2) * f.N);
  p.distance_energy_paper = 2 * (2 * qn - qr - 2);

  p.energy_derived = sqrt((qr - 2) * (qr - 2) + 4 * (qn - 1)) + (qr - 2) * (2 * nr - 1);
  const Real b = 2 * (qn - 1) - qr;
  p.distance_energy_derived = sqrt(b * b + 4 * (qn - 1)) + qr * (nr - 1) + (qr - 2) * nr;
  return p;
}

std::string to_json(const PredictionSet& p) {
  using spectra::to_decimal_string;
  nlohmann::ordered_json j;
  j["q"] = p.q;
  j["n"] = p.n;
  j["N"] = p.N.str();
  j["size"] = p.size.str();
  j["complete"] = p.complete;
  j["diameter"] = p.diameter;
  j["domination"] = p.domination;
  j["independence"] = p.independence.str();
  j["clique"] = p.clique;
  j["chromatic"] = p.chromatic;
  j["eulerian"] = p.eulerian;
  j["edge_connectivity"] = p.edge_connectivity;
  j["vertex_connectivity"] = p.vertex_connectivity;
  j["planar"] = p.planar;
  j["spanning_trees"] = p.spanning_trees.str();
  j["algebraic_connectivity"] = to_decimal_string(p.algebraic_connectivity);
  j["energy_paper"] = to_decimal_string(p.energy_paper);
  j["laplacian_energy_paper"] = to_decimal_string(p.laplacian_energy_paper);
  j["distance_energy_paper"] = to_decimal_string(p.distance_energy_paper);
  j["energy_derived"] = to_decimal_string(p.energy_derived);
  j["distance_energy_derived"] = to_decimal_string(p.distance_energy_derived);
  return j.dump();
}

}  // namespace lindep::closedform
