#include "lindep/gf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"

namespace lindep::gf {

namespace {

// Dense polynomial over Z_p, ascending coefficients, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<Coeff>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = result * base % m;
    base = base * base % m;
    exp >>= 1U;
  }
  return result;
}

Coeff inv_mod_p(Coeff a, std::uint32_t p) {
  return static_cast<Coeff>(mod_pow(a, p - 2, p));
}

Poly poly_sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t a = i < f.size() ? f[i] : 0;
    const std::uint64_t b = i < g.size() ? g[i] : 0;
    r[i] = static_cast<Coeff>((a + p - b) % p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// Returns (quotient, remainder). g must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  if (f.size() < g.size()) return {Poly{}, f};
  const Coeff lead_inv = inv_mod_p(g.back(), p);
  Poly quot(f.size() - g.size() + 1, 0);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const std::size_t top = shift + g.size() - 1;
    const std::uint64_t c = std::uint64_t{f[top]} * lead_inv % p;
    quot[shift] = static_cast<Coeff>(c);
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const std::uint64_t sub = c * g[j] % p;
      f[shift + j] = static_cast<Coeff>((f[shift + j] + p - sub) % p);
    }
  }
  trim(quot);
  trim(f);
  return {quot, f};
}

Poly poly_mod(const Poly& f, const Poly& g, std::uint32_t p) {
  return poly_divmod(f, g, p).second;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// base^exp mod f
Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, f, p);
  while (exp > 0) {
    if (exp & 1U) result = poly_mod(poly_mul(result, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    exp >>= 1U;
  }
  return result;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Monic polynomials of degree 1..deg(f)/2 tried as divisors.
bool irreducible_by_trial_division(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t e = 0; e < count; ++e) {
      Poly g(d + 1, 0);
      std::uint64_t rest = e;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Coeff>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw InvalidFieldError("field order p^k exceeds supported maximum " +
                              std::to_string(kMaxFieldOrder));
    }
  }
  return q;
}

void validate_characteristic(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw InvalidFieldError("p must be prime (got " + std::to_string(p) + ")");
  }
  if (k < 1) throw InvalidFieldError("k must be at least 1");
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<Coeff>& monic_poly, std::uint32_t p) {
  Poly f = monic_poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  if (k == 1) return true;

  // frob[j] = x^(p^j) mod f
  std::vector<Poly> frob{poly_mod(Poly{0, 1}, f, p)};
  for (std::uint32_t j = 1; j <= k; ++j) {
    frob.push_back(poly_powmod(frob.back(), p, f, p));
  }
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (poly_sub(frob[k], x, p) != Poly{}) return false;
  for (std::uint32_t r : prime_divisors(k)) {
    const Poly h = poly_sub(frob[k / r], x, p);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::vector<Coeff> find_irreducible(std::uint32_t p, std::uint32_t k) {
  validate_characteristic(p, k);
  const std::uint64_t count = checked_order(p, k);
  for (std::uint64_t e = 0; e < count; ++e) {
    Poly f(k + 1, 0);
    std::uint64_t rest = e;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<Coeff>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  // Unreachable: irreducibles of every degree exist over Z_p.
  throw InvalidFieldError("no irreducible polynomial found");
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t k) {
  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  spec.modulus = find_irreducible(p, k);
  spec.q = checked_order(p, k);
  return spec;
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::uint32_t k,
                                  std::vector<Coeff> modulus) {
  validate_characteristic(p, k);
  const std::uint64_t q = checked_order(p, k);
  if (modulus.size() != std::size_t{k} + 1) {
    throw InvalidFieldError("modulus must have k+1 = " + std::to_string(k + 1) +
                            " coefficients");
  }
  for (Coeff c : modulus) {
    if (c >= p) throw InvalidFieldError("modulus coefficients must lie in [0, p)");
  }
  if (modulus.back() != 1) throw InvalidFieldError("modulus must be monic");
  const bool irreducible = (k <= kExhaustiveMaxDegree && q <= kExhaustiveMaxOrder)
                               ? irreducible_by_trial_division(modulus, p)
                               : is_irreducible(modulus, p);
  if (!irreducible) throw InvalidFieldError("modulus is reducible over Z_p");

  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  spec.modulus = std::move(modulus);
  spec.q = q;
  return spec;
}

FieldElement zero(const FieldSpec& spec) {
  return FieldElement{std::vector<Coeff>(spec.k, 0)};
}

FieldElement one(const FieldSpec& spec) {
  FieldElement e = zero(spec);
  e.coeffs[0] = 1;
  return e;
}

bool is_zero(const FieldElement& a) {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [](Coeff c) { return c == 0; });
}

FieldElement add(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec) {
  FieldElement r = zero(spec);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    r.coeffs[i] = static_cast<Coeff>((std::uint64_t{a.coeffs[i]} + b.coeffs[i]) % spec.p);
  }
  return r;
}

FieldElement neg(const FieldElement& a, const FieldSpec& spec) {
  FieldElement r = zero(spec);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    r.coeffs[i] = a.coeffs[i] == 0 ? 0 : spec.p - a.coeffs[i];
  }
  return r;
}

FieldElement sub(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec) {
  return add(a, neg(b, spec), spec);
}

FieldElement mul(const FieldElement& a, const FieldElement& b,
                 const FieldSpec& spec) {
  Poly prod = poly_mul(a.coeffs, b.coeffs, spec.p);
  Poly reduced = poly_mod(prod, spec.modulus, spec.p);
  reduced.resize(spec.k, 0);
  return FieldElement{std::move(reduced)};
}

FieldElement inv(const FieldElement& a, const FieldSpec& spec) {
  if (is_zero(a)) throw DivisionByZeroError("inverse of zero field element");
  const std::uint32_t p = spec.p;
  Poly r0 = spec.modulus;
  Poly r1 = a.coeffs;
  trim(r1);
  Poly s0{};
  Poly s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(s0, poly_mul(quot, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const Coeff scale = inv_mod_p(r0[0], p);
  Poly result = poly_mul(s0, Poly{scale}, p);
  result = poly_mod(result, spec.modulus, p);
  result.resize(spec.k, 0);
  return FieldElement{std::move(result)};
}

std::uint64_t encode(const FieldElement& a, const FieldSpec& spec) {
  std::uint64_t enc = 0;
  for (std::size_t i = spec.k; i-- > 0;) enc = enc * spec.p + a.coeffs[i];
  return enc;
}

FieldElement decode(std::uint64_t encoding, const FieldSpec& spec) {
  FieldElement e = zero(spec);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    e.coeffs[i] = static_cast<Coeff>(encoding % spec.p);
    encoding /= spec.p;
  }
  return e;
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec.q);
  for (std::uint64_t e = 0; e < spec.q; ++e) out.push_back(decode(e, spec));
  return out;
}

std::string to_string(const FieldElement& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    const Coeff c = a.coeffs[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string to_json(const FieldSpec& spec) {
  nlohmann::json j;
  j["p"] = spec.p;
  j["k"] = spec.k;
  j["modulus"] = spec.modulus;
  return j.dump();
}

FieldSpec field_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return FieldSpec::with_modulus(j.at("p").get<std::uint32_t>(),
                                   j.at("k").get<std::uint32_t>(),
                                   j.at("modulus").get<std::vector<Coeff>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidFieldError(std::string("malformed field spec JSON: ") + e.what());
  }
}

}  // namespace lindep::gf
