#pragma once

// Finitely generated rational cones in Z^m via the double description method.

#include <kfin/exact.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kfin {

using Weight = std::vector<std::int64_t>;

struct ConeZm {
  /// Primitive extreme rays, pairwise non-proportional, sorted
  /// lexicographically descending.
  std::vector<Weight> rays;
};

/// The data of a pointed cone cone(v_1, ..., v_n) needed downstream.
struct ConeDescription {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;  // dimension of the linear span
  ConeZm cone;
  /// Inward facet normals, primitive, expressed in ambient coordinates. Each
  /// is nonnegative on the cone; together they cut it out inside its span.
  std::vector<Weight> facets;
  /// Integer functional strictly positive on every nonzero generator.
  Weight positive_functional;
};

/// Zero generators are ignored. Throws PreconditionError when the cone
/// contains a line or all generators are zero, DimensionMismatch on ragged
/// input.
ConeDescription describe_cone(const std::vector<Weight>& generators, std::size_t ambient_dim);

/// The primitive vector on the ray through v. Throws on v = 0.
Weight primitive_weight(const Weight& v);

/// <u, v> with overflow-free accumulation.
BigInt pairing(const Weight& u, const Weight& v);

std::string to_string(const Weight& w);

}  // namespace kfin
