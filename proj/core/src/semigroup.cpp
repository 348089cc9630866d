#include <kfin/semigroup.hpp>

#include <kfin/error.hpp>

#include <algorithm>

namespace kfin {

namespace {
const std::vector<std::int64_t> kLevelZero{0};
}

SemigroupSample::SemigroupSample(std::vector<std::vector<std::int64_t>> levels,
                                 std::optional<std::int64_t> degree_hint)
    : levels_(std::move(levels)), degree_hint_(degree_hint) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& s = levels_[i];
    if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end()) {
      throw PreconditionError("semigroup slice at level " + std::to_string(i + 1) +
                              " is not strictly increasing");
    }
  }
}

const std::vector<std::int64_t>& SemigroupSample::slice(std::int64_t k) const {
  if (k == 0) return kLevelZero;
  if (k < 0 || k > kmax()) {
    throw PreconditionError("level " + std::to_string(k) + " outside sampled range [0, " +
                            std::to_string(kmax()) + "]");
  }
  return levels_[static_cast<std::size_t>(k - 1)];
}

bool SemigroupSample::contains(std::int64_t k, std::int64_t b) const {
  const auto& s = slice(k);
  return std::binary_search(s.begin(), s.end(), b);
}

std::vector<LatticePoint> minimal_generators(const SemigroupSample& sample) {
  std::vector<LatticePoint> gens;
  for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
    for (std::int64_t b : sample.slice(k)) {
      bool decomposable = false;
      for (std::int64_t k1 = 1; k1 <= k / 2 && !decomposable; ++k1) {
        for (std::int64_t b1 : sample.slice(k1)) {
          if (sample.contains(k - k1, b - b1)) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) gens.push_back({k, b});
    }
  }
  return gens;
}

FgVerdict fg_verdict(const SemigroupSample& sample, std::int64_t degree) {
  std::optional<LatticePoint> bottom, top;
  for (std::int64_t k = 1; k <= sample.kmax(); ++k) {
    if (!bottom && sample.contains(k, 0)) bottom = LatticePoint{k, 0};
    if (!top && sample.contains(k, degree * k)) top = LatticePoint{k, degree * k};
  }
  if (bottom && top) return FgFinite{*bottom, *top};
  FgUnknown unknown{sample.kmax(), {}};
  if (!bottom) unknown.missing_rays.push_back({1, 0});
  if (!top) unknown.missing_rays.push_back({1, degree});
  return unknown;
}

Interval no_body_estimate(const SemigroupSample& sample) {
  if (sample.kmax() < 1) throw PreconditionError("no_body_estimate needs kmax >= 1");
  const auto& s = sample.slice(sample.kmax());
  if (s.empty()) throw PreconditionError("deepest slice is empty");
  const BigRational k(static_cast<long>(sample.kmax()));
  return {BigRational(static_cast<long>(s.front())) / k, BigRational(static_cast<long>(s.back())) / k};
}

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.k) + "," + std::to_string(p.b) + ")";
}

}  // namespace kfin
