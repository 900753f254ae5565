#include "lindep/exact_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lindep {

ExactPoly::ExactPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(BigInt c) {
  return ExactPoly(std::vector<BigInt>{std::move(c)});
}

ExactPoly ExactPoly::monomial(std::size_t degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::linear_factor(const BigInt& root) {
  return ExactPoly(std::vector<BigInt>{-root, 1});
}

BigInt ExactPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt{0};
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExactPoly ExactPoly::pow(std::uint64_t exponent) const {
  ExactPoly result = constant(1);
  ExactPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
  return ExactPoly(std::move(out));
}

BigInt ExactPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

BigRational ExactPoly::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + BigRational(coeffs_[i]);
  return acc;
}

BigInt ExactPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
  return g;
}

ExactPoly ExactPoly::primitive_part() const {
  if (is_zero()) return {};
  const BigInt c = content();
  ExactPoly r = *this;
  for (auto& v : r.coeffs_) v /= c;
  return r;
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

ExactPoly pseudo_remainder(const ExactPoly& f, const ExactPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<BigInt> r = f.coeffs();
  const std::size_t gd = static_cast<std::size_t>(g.degree());
  const BigInt& lead = g.leading();
  const auto& gc = g.coeffs();
  for (std::size_t top = r.size(); top-- > gd;) {
    const BigInt t = r[top];
    for (auto& v : r) v *= lead;
    if (t != 0) {
      const std::size_t shift = top - gd;
      for (std::size_t j = 0; j <= gd; ++j) r[shift + j] -= t * gc[j];
    }
    r.pop_back();
  }
  return ExactPoly(std::move(r));
}

ExactPoly exact_quotient(const ExactPoly& f, const ExactPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = f.coeffs();
  const std::size_t gd = static_cast<std::size_t>(g.degree());
  const auto& gc = g.coeffs();
  std::vector<BigInt> quot(r.size() - gd);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const BigInt& top = r[shift + gd];
    if (top % g.leading() != 0) throw std::domain_error("inexact polynomial division");
    const BigInt t = top / g.leading();
    quot[shift] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= gd; ++j) r[shift + j] -= t * gc[j];
  }
  if (std::any_of(r.begin(), r.end(), [](const BigInt& v) { return v != 0; })) {
    throw std::domain_error("inexact polynomial division");
  }
  return ExactPoly(std::move(quot));
}

ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a.primitive_part();
  ExactPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  // Primitive polynomial remainder sequence.
  while (!y.is_zero()) {
    ExactPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<ExactPoly, unsigned>> squarefree_decomposition(
    const ExactPoly& f) {
  std::vector<std::pair<ExactPoly, unsigned>> out;
  const ExactPoly prim = f.primitive_part();
  if (prim.degree() < 1) return out;
  const ExactPoly d = prim.derivative();
  ExactPoly a = gcd(prim, d);
  ExactPoly b = exact_quotient(prim, a);
  ExactPoly c = exact_quotient(d, a);
  ExactPoly e = c - b.derivative();
  unsigned mult = 1;
  while (b.degree() >= 1) {
    ExactPoly factor = gcd(b, e);
    if (factor.degree() >= 1) out.emplace_back(factor, mult);
    b = exact_quotient(b, factor);
    c = exact_quotient(e, factor);
    e = c - b.derivative();
    ++mult;
  }
  return out;
}

std::string to_json(const ExactPoly& p) {
  nlohmann::json j;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

ExactPoly exact_poly_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return ExactPoly(std::move(coeffs));
}

}  // namespace lindep
