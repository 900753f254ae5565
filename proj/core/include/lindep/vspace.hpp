#pragma once

// The vector space F_q^n: enumeration, scalar multiplication, the pairwise
// linear-dependence relation and the partition of nonzero vectors into
// 1-dimensional subspaces.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lindep/gf.hpp"

namespace lindep::vspace {

// Default cap on q^n for enumeration.
inline constexpr std::uint64_t kDefaultMaxVectors = 4096;

struct FqVector {
  std::vector<gf::FieldElement> coords;
  // sum enc(coords[i]) * q^i; 0 is the null vector.
  std::uint64_t index = 0;

  friend bool operator==(const FqVector&, const FqVector&) = default;
};

struct SubspacePartition {
  // Nonzero part of each 1-dimensional subspace, vector indices ascending.
  // Classes are ordered by representative.
  std::vector<std::vector<std::uint64_t>> classes;
  // Least index in each class.
  std::vector<std::uint64_t> representatives;

  std::size_t size() const { return classes.size(); }
};

// q^n, throwing CapacityError above `max_vectors`.
std::uint64_t space_size(const gf::FieldSpec& spec, std::uint32_t n,
                         std::uint64_t max_vectors = kDefaultMaxVectors);

FqVector vector_from_index(std::uint64_t index, const gf::FieldSpec& spec,
                           std::uint32_t n);

// Index order, null vector first.
std::vector<FqVector> enumerate_vectors(
    const gf::FieldSpec& spec, std::uint32_t n,
    std::uint64_t max_vectors = kDefaultMaxVectors);

FqVector scalar_mul(const gf::FieldElement& lambda, const FqVector& v,
                    const gf::FieldSpec& spec);

bool is_null(const FqVector& v);

// True iff u != v and some nontrivial combination a*u + b*v vanishes.
bool is_dependent(const FqVector& u, const FqVector& v,
                  const gf::FieldSpec& spec);

// `vectors` must be the full enumeration from enumerate_vectors.
SubspacePartition partition_subspaces(const std::vector<FqVector>& vectors,
                                      const gf::FieldSpec& spec);

}  // namespace lindep::vspace
