#include "lindep/charpoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lindep/errors.hpp"

namespace lindep::spectra {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // a, b < 2^62, no overflow
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t bigint_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// Descending from 2^62 so every residue and sum fits in 64 bits.
std::vector<std::uint64_t> crt_primes(const BigInt& needed_modulus) {
  std::vector<std::uint64_t> primes;
  BigInt product = 1;
  std::uint64_t candidate = (std::uint64_t{1} << 62) - 1;
  while (product <= needed_modulus) {
    while (!detail::is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    product *= candidate;
    candidate -= 2;
  }
  return primes;
}

}  // namespace

namespace detail {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                              23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> charpoly_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.order();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = reduce(m(i, j), p);
  }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h[pivot][j] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    const std::uint64_t pivot_inv = inv_mod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const std::uint64_t u = mul_mod(h[r][j], pivot_inv, p);
      for (std::size_t c = 0; c < n; ++c) {
        h[r][c] = sub_mod(h[r][c], mul_mod(u, h[j + 1][c], p), p);
      }
      for (std::size_t s = 0; s < n; ++s) {
        h[s][j + 1] = add_mod(h[s][j + 1], mul_mod(u, h[s][r], p), p);
      }
    }
  }

  // polys[k] = charpoly of the leading k x k block, ascending.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<std::uint64_t> cur(k + 1, 0);
    const std::uint64_t diag = h[k - 1][k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = add_mod(cur[i + 1], prev[i], p);
      cur[i] = sub_mod(cur[i], mul_mod(diag, prev[i], p), p);
    }
    std::uint64_t subdiag_product = 1;
    for (std::size_t i = 1; i < k; ++i) {
      subdiag_product = mul_mod(subdiag_product, h[k - i][k - i - 1], p);
      if (subdiag_product == 0) break;
      const std::uint64_t factor = mul_mod(h[k - i - 1][k - 1], subdiag_product, p);
      if (factor == 0) continue;
      const auto& lower = polys[k - i - 1];
      for (std::size_t t = 0; t < lower.size(); ++t) {
        cur[t] = sub_mod(cur[t], mul_mod(factor, lower[t], p), p);
      }
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

}  // namespace detail

BigInt charpoly_coefficient_bound(const IntMatrix& m) {
  BigInt row_max = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < m.order(); ++j) {
      const std::int64_t v = m(i, j);
      row += v < 0 ? -BigInt(v) : BigInt(v);
    }
    row_max = std::max(row_max, row);
  }
  return boost::multiprecision::pow(BigInt(1) + row_max,
                                    static_cast<unsigned>(m.order()));
}

ExactPoly charpoly_exact(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return ExactPoly::constant(1);

  const BigInt bound = charpoly_coefficient_bound(m);
  const auto primes = crt_primes(2 * bound);

  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  for (std::uint64_t p : primes) {
    const auto residues = detail::charpoly_mod_prime(m, p);
    const std::uint64_t modulus_inv = inv_mod(bigint_mod(modulus, p), p);
    for (std::size_t i = 0; i <= n; ++i) {
      const std::uint64_t current = bigint_mod(value[i], p);
      const std::uint64_t t = mul_mod(sub_mod(residues[i], current, p), modulus_inv, p);
      value[i] += modulus * t;
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value) {
    if (v > half) v -= modulus;
  }
  return ExactPoly(std::move(value));
}

ExactPoly charpoly_berkowitz(const IntMatrix& m) {
  const std::size_t n = m.order();
  // Descending coefficients of the charpoly of the leading r x r block.
  std::vector<BigInt> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^(r-1) C.
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -BigInt(m(r, r));
    std::vector<BigInt> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (m(r, j) != 0) dot += v[j] * m(r, j);
      }
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<BigInt> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (m(i, j) != 0) next[i] += v[j] * m(i, j);
        }
      }
      v = std::move(next);
    }
    std::vector<BigInt> next_poly(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (poly[j] != 0) next_poly[i] += toeplitz[i - j] * poly[j];
      }
    }
    poly = std::move(next_poly);
  }
  std::reverse(poly.begin(), poly.end());
  return ExactPoly(std::move(poly));
}

ExactPoly charpoly_naive(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n > kNaiveMaxOrder) {
    throw CapacityError("Leibniz expansion limited to order " +
                        std::to_string(kNaiveMaxOrder));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactPoly total;
  do {
    bool vanishes = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] != i && m(i, perm[i]) == 0) {
        vanishes = true;
        break;
      }
    }
    if (vanishes) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    ExactPoly term = ExactPoly::constant(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt entry = -BigInt(m(i, perm[i]));
      if (perm[i] == i) {
        term *= ExactPoly(std::vector<BigInt>{entry, 1});
      } else {
        term *= ExactPoly::constant(entry);
      }
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BigInt determinant_bareiss(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  auto a = rows;
  BigInt sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace lindep::spectra
