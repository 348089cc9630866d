#include <kfin/exact.hpp>

#include <kfin/error.hpp>
#include <kfin/integer.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace kfin {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionMismatch("matrix row " + std::to_string(i) + " has length " +
                              std::to_string(rows[i].size()) + ", expected " +
                              std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

RrefResult rref(const Matrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();

  std::vector<std::vector<BigInt>> a;
  a.reserve(nrows);
  for (std::size_t i = 0; i < nrows; ++i) a.push_back(primitive_integer_vector(m.row(i)));

  RrefResult out;
  std::size_t rank = 0;
  BigInt g, p, q;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    // Smallest nonzero pivot keeps intermediate growth down.
    std::size_t best = nrows;
    for (std::size_t i = rank; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == nrows ||
          mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) {
        best = i;
      }
    }
    if (best == nrows) continue;
    std::swap(a[rank], a[best]);
    const auto& piv = a[rank];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), a[i][c].get_mpz_t());
      p = piv[c] / g;
      q = a[i][c] / g;
      auto& row = a[i];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (row[j] == 0 && piv[j] == 0) continue;
        row[j] *= p;
        if (piv[j] != 0) row[j] -= q * piv[j];
      }
      strip_content(row);
    }
    out.pivots.push_back(c);
    ++rank;
  }

  out.rank = rank;
  out.reduced = Matrix(nrows, ncols);
  for (std::size_t i = 0; i < rank; ++i) {
    const BigInt& lead = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < ncols; ++j) {
      if (a[i][j] == 0) continue;
      BigRational x(a[i][j], lead);
      x.canonicalize();
      out.reduced(i, j) = std::move(x);
    }
  }
  return out;
}

namespace detail {

RrefResult rref_rational(const Matrix& m) {
  Matrix r = m;
  RrefResult out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < r.cols() && rank < r.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < r.rows() && r(piv, c) == 0) ++piv;
    if (piv == r.rows()) continue;
    for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(rank, j), r(piv, j));
    const BigRational lead = r(rank, c);
    for (std::size_t j = 0; j < r.cols(); ++j) r(rank, j) /= lead;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == rank || r(i, c) == 0) continue;
      const BigRational factor = r(i, c);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= factor * r(rank, j);
    }
    out.pivots.push_back(c);
    ++rank;
  }
  out.rank = rank;
  out.reduced = std::move(r);
  return out;
}

}  // namespace detail

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {
  if (ambient_dim == 0) throw PreconditionError("subspace ambient dimension must be positive");
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

Subspace subspace_from_matrix(const Matrix& m) {
  Subspace s(m.cols());
  if (m.rows() == 0) return s;
  RrefResult r = rref(m);
  s.basis_ = Matrix(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  }
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace subspace_from_spanning(std::span<const Vector> vectors, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw PreconditionError("subspace ambient dimension must be positive");
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw DimensionMismatch("spanning vector has length " + std::to_string(v.size()) +
                              ", expected " + std::to_string(ambient_dim));
    }
    if (std::any_of(v.begin(), v.end(), [](const BigRational& x) { return x != 0; })) {
      rows.push_back(v);
    }
  }
  return subspace_from_matrix(Matrix::from_rows(rows, ambient_dim));
}

bool member(std::span<const BigRational> v, const Subspace& space) {
  if (v.size() != space.ambient_dim()) {
    throw DimensionMismatch("vector has length " + std::to_string(v.size()) +
                            ", subspace ambient dimension is " +
                            std::to_string(space.ambient_dim()));
  }
  // In RREF the only candidate combination uses v's pivot entries as weights.
  Vector residual(v.begin(), v.end());
  const auto& basis = space.basis();
  const auto& pivots = space.pivots();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const BigRational w = v[pivots[i]];
    if (w == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) {
      if (basis(i, j) != 0) residual[j] -= w * basis(i, j);
    }
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const BigRational& x) { return x == 0; });
}

Subspace annihilator(const Subspace& space) {
  const std::size_t n = space.ambient_dim();
  const auto& pivots = space.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> functionals;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector phi(n);
    phi[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) phi[pivots[i]] = -space.basis()(i, f);
    functionals.push_back(std::move(phi));
  }
  return subspace_from_spanning(functionals, n);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces live in different ambient spaces");
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return subspace_from_spanning(rows, a.ambient_dim());
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

}  // namespace kfin
