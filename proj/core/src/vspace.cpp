#include "lindep/vspace.hpp"

#include <algorithm>
#include <string>

#include "lindep/errors.hpp"

namespace lindep::vspace {

std::uint64_t space_size(const gf::FieldSpec& spec, std::uint32_t n,
                         std::uint64_t max_vectors) {
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (size > max_vectors / spec.q) {
      throw CapacityError("q^n exceeds the vertex bound " +
                          std::to_string(max_vectors));
    }
    size *= spec.q;
  }
  if (size > max_vectors) {
    throw CapacityError("q^n = " + std::to_string(size) +
                        " exceeds the vertex bound " + std::to_string(max_vectors));
  }
  return size;
}

FqVector vector_from_index(std::uint64_t index, const gf::FieldSpec& spec,
                           std::uint32_t n) {
  FqVector v;
  v.index = index;
  v.coords.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    v.coords.push_back(gf::decode(index % spec.q, spec));
    index /= spec.q;
  }
  return v;
}

std::vector<FqVector> enumerate_vectors(const gf::FieldSpec& spec,
                                        std::uint32_t n,
                                        std::uint64_t max_vectors) {
  const std::uint64_t size = space_size(spec, n, max_vectors);
  std::vector<FqVector> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    out.push_back(vector_from_index(i, spec, n));
  }
  return out;
}

FqVector scalar_mul(const gf::FieldElement& lambda, const FqVector& v,
                    const gf::FieldSpec& spec) {
  FqVector r;
  r.coords.reserve(v.coords.size());
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (const auto& c : v.coords) {
    r.coords.push_back(gf::mul(lambda, c, spec));
    index += gf::encode(r.coords.back(), spec) * place;
    place *= spec.q;
  }
  r.index = index;
  return r;
}

bool is_null(const FqVector& v) {
  return std::all_of(v.coords.begin(), v.coords.end(),
                     [](const gf::FieldElement& c) { return gf::is_zero(c); });
}

bool is_dependent(const FqVector& u, const FqVector& v,
                  const gf::FieldSpec& spec) {
  if (u.coords == v.coords) return false;
  // {u, v} is dependent iff the 2 x n matrix [u; v] has rank <= 1, i.e.
  // every 2 x 2 minor vanishes.
  const std::size_t n = u.coords.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto lhs = gf::mul(u.coords[i], v.coords[j], spec);
      const auto rhs = gf::mul(u.coords[j], v.coords[i], spec);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

SubspacePartition partition_subspaces(const std::vector<FqVector>& vectors,
                                      const gf::FieldSpec& spec) {
  SubspacePartition part;
  std::vector<bool> assigned(vectors.size(), false);
  const auto scalars = gf::enumerate_field(spec);
  for (const auto& v : vectors) {
    if (v.index == 0 || assigned[v.index]) continue;
    std::vector<std::uint64_t> cls;
    cls.reserve(spec.q - 1);
    for (std::size_t s = 1; s < scalars.size(); ++s) {
      const auto w = scalar_mul(scalars[s], v, spec);
      assigned[w.index] = true;
      cls.push_back(w.index);
    }
    std::sort(cls.begin(), cls.end());
    part.representatives.push_back(cls.front());
    part.classes.push_back(std::move(cls));
  }
  return part;
}

}  // namespace lindep::vspace
