#pragma once

// Sampled value semigroups S in Z^2 of curve valuations: level k holds the
// attainable orders b with (k, b) in S.

#include <kfin/exact.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kfin {

struct LatticePoint {
  std::int64_t k = 0;
  std::int64_t b = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Levels 1..kmax of a value semigroup, each complete for its level.
/// Level 0 is implicitly {0}.
class SemigroupSample {
 public:
  /// `levels[k-1]` is the slice at level k; each must be strictly increasing.
  explicit SemigroupSample(std::vector<std::vector<std::int64_t>> levels,
                           std::optional<std::int64_t> degree_hint = std::nullopt);

  std::int64_t kmax() const { return static_cast<std::int64_t>(levels_.size()); }
  /// Slice at level k in [0, kmax].
  const std::vector<std::int64_t>& slice(std::int64_t k) const;
  bool contains(std::int64_t k, std::int64_t b) const;
  const std::optional<std::int64_t>& degree_hint() const { return degree_hint_; }

 private:
  std::vector<std::vector<std::int64_t>> levels_;
  std::optional<std::int64_t> degree_hint_;
};

/// Elements of the sample (k >= 1) that are not a sum of two sample
/// elements of positive level. Exhaustive for every k <= kmax and silent
/// beyond it. Sorted by (k, b).
std::vector<LatticePoint> minimal_generators(const SemigroupSample& sample);

struct FgFinite {
  LatticePoint bottom_witness;  // some (k, 0)
  LatticePoint top_witness;     // some (k, d*k)
};

struct FgUnknown {
  std::int64_t kmax = 0;
  /// Directions of the cone((1,0),(1,d)) rays with no witness, e.g. (1,4).
  std::vector<LatticePoint> missing_rays;
};

using FgVerdict = std::variant<FgFinite, FgUnknown>;

/// Finite iff both rays of cone((1,0),(1,d)) are hit by sample elements.
/// The cone bound holds for curve valuations after removing base points.
FgVerdict fg_verdict(const SemigroupSample& sample, std::int64_t degree);

struct Interval {
  BigRational lo;
  BigRational hi;
};

/// [min S_kmax / kmax, max S_kmax / kmax], an inner approximation of the
/// Newton-Okounkov segment. Requires kmax >= 1.
Interval no_body_estimate(const SemigroupSample& sample);

std::string to_string(const LatticePoint& p);

}  // namespace kfin
