#include <kfin/cone.hpp>

#include <kfin/error.hpp>
#include <kfin/integer.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace kfin {

namespace {

// Pivot coordinates of v with respect to the RREF basis of the span.
Vector coordinates(const Weight& v, const std::vector<std::size_t>& pivots) {
  Vector c;
  c.reserve(pivots.size());
  for (auto p : pivots) c.emplace_back(v[p]);
  return c;
}

BigRational dot(const Vector& a, const Vector& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank_of(const std::vector<const Vector*>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*rows[i])[j];
  }
  return rref(m).rank;
}

Weight to_weight(std::span<const BigRational> v) {
  Weight w;
  w.reserve(v.size());
  for (const auto& x : primitive_integer_vector(v)) {
    if (!x.fits_slong_p()) throw PreconditionError("cone entry exceeds 64-bit range");
    w.push_back(x.get_si());
  }
  return w;
}

// Lifts a functional on span coordinates to ambient coordinates: it pairs
// with v exactly as y pairs with coordinates(v).
Weight lift(const Vector& y, const std::vector<std::size_t>& pivots, std::size_t ambient_dim) {
  Vector full(ambient_dim);
  for (std::size_t i = 0; i < pivots.size(); ++i) full[pivots[i]] = y[i];
  return to_weight(full);
}

// Extreme rays of {y : <a, y> >= 0 for all constraints a}, assuming the
// constraints span Q^r.
std::vector<Vector> dual_rays(const std::vector<Vector>& constraints, std::size_t r) {
  std::vector<std::size_t> chosen;
  std::vector<Vector> picked;
  for (std::size_t i = 0; i < constraints.size() && chosen.size() < r; ++i) {
    picked.push_back(constraints[i]);
    if (subspace_from_spanning(picked, r).dim() == picked.size()) {
      chosen.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  Matrix a = Matrix::from_rows(picked, r);
  Matrix inv = inverse(a);
  std::vector<Vector> rays;
  for (std::size_t j = 0; j < r; ++j) {
    Vector col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = inv(i, j);
    rays.push_back(std::move(col));
  }

  std::vector<const Vector*> processed;
  for (auto i : chosen) processed.push_back(&constraints[i]);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    const Vector& c = constraints[i];
    std::vector<BigRational> value(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) value[j] = dot(c, rays[j]);

    std::vector<Vector> next;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (value[j] >= 0) next.push_back(rays[j]);
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (value[n] >= 0) continue;
        std::vector<const Vector*> tight;
        for (const Vector* a_k : processed) {
          if (dot(*a_k, rays[p]) == 0 && dot(*a_k, rays[n]) == 0) tight.push_back(a_k);
        }
        if (r < 2 || rank_of(tight, r) != r - 2) continue;
        Vector combo(r);
        for (std::size_t k = 0; k < r; ++k) combo[k] = value[p] * rays[n][k] - value[n] * rays[p][k];
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
    processed.push_back(&c);
  }
  return rays;
}

}  // namespace

BigInt pairing(const Weight& u, const Weight& v) {
  if (u.size() != v.size()) throw DimensionMismatch("pairing of vectors of different lengths");
  BigInt s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += BigInt(static_cast<long>(u[i])) * static_cast<long>(v[i]);
  return s;
}

Weight primitive_weight(const Weight& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw PreconditionError("zero vector does not span a ray");
  Weight out(v);
  for (auto& x : out) x /= g;
  return out;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

ConeDescription describe_cone(const std::vector<Weight>& generators, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw PreconditionError("cone in Z^0");
  std::vector<Weight> gens;
  std::vector<Vector> as_rational;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) {
      throw DimensionMismatch("weight " + to_string(g) + " is not in Z^" + std::to_string(ambient_dim));
    }
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) continue;
    gens.push_back(g);
    as_rational.emplace_back(g.begin(), g.end());
  }
  if (gens.empty()) throw PreconditionError("cone has no nonzero generators");

  const Subspace span = subspace_from_spanning(as_rational, ambient_dim);
  const auto& pivots = span.pivots();
  const std::size_t r = span.dim();

  std::vector<Vector> coords;
  coords.reserve(gens.size());
  for (const auto& g : gens) coords.push_back(coordinates(g, pivots));

  const std::vector<Vector> facets = dual_rays(coords, r);
  Vector w(r);
  for (const auto& f : facets) {
    for (std::size_t k = 0; k < r; ++k) w[k] += f[k];
  }
  for (const auto& c : coords) {
    if (dot(c, w) <= 0) throw PreconditionError("weight cone is not pointed");
  }

  ConeDescription out;
  out.ambient_dim = ambient_dim;
  out.dim = r;
  out.positive_functional = lift(w, pivots, ambient_dim);
  for (const auto& f : facets) out.facets.push_back(lift(f, pivots, ambient_dim));

  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool extreme = (r == 1);
    if (!extreme) {
      std::vector<const Vector*> tight;
      for (const auto& f : facets) {
        if (dot(coords[i], f) == 0) tight.push_back(&f);
      }
      extreme = rank_of(tight, r) == r - 1;
    }
    if (extreme) out.cone.rays.push_back(primitive_weight(gens[i]));
  }
  std::sort(out.cone.rays.begin(), out.cone.rays.end(), std::greater<>());
  out.cone.rays.erase(std::unique(out.cone.rays.begin(), out.cone.rays.end()), out.cone.rays.end());
  return out;
}

}  // namespace kfin
