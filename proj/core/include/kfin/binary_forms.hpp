#pragma once

// Univariate polynomials over Q and homogeneous binary forms in s, t.
//
// Coefficient convention for forms: coeffs[i] is the coefficient of
// s^(a-i) t^i (descending s-power). Every module and the .kv printer use it.

#include <kfin/exact.hpp>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kfin {

/// Dense univariate polynomial in t with ascending coefficients and no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vector coeffs);

  static Poly constant(const BigRational& c);
  static Poly monomial(std::size_t degree, const BigRational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Vector& coeffs() const { return coeffs_; }
  BigRational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }
  const BigRational& leading() const { return coeffs_.back(); }

  BigRational operator()(const BigRational& x) const;
  Poly pow(unsigned n) const;
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

 private:
  void trim();
  Vector coeffs_;
};

/// Quotient and remainder; throws PreconditionError when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Homogeneous form of fixed degree in s, t. The zero form of each degree
/// is representable.
class BinaryForm {
 public:
  explicit BinaryForm(std::size_t degree);
  BinaryForm(std::size_t degree, Vector coeffs);

  static BinaryForm from_vector(std::span<const BigRational> coeffs);
  static BinaryForm monomial(std::size_t s_exp, std::size_t t_exp, const BigRational& c = 1);
  /// s^degree * p(t/s). Requires deg p <= degree.
  static BinaryForm homogenize(const Poly& p, std::size_t degree);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Vector& coeffs() const { return coeffs_; }
  const BigRational& coeff(std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// f(1, x) as a polynomial in x.
  Poly dehomogenize() const;
  BigRational evaluate(const BigRational& s, const BigRational& t) const;
  /// Scales so the first nonzero coefficient is 1. Zero stays zero.
  BinaryForm normalized() const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BigRational& c, const BinaryForm& f);
  bool operator==(const BinaryForm&) const = default;

 private:
  Vector coeffs_;
};

/// Product of forms; degree is the sum of degrees.
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
inline BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) { return mul(f, g); }

/// A point (alpha : beta) of P^1(Q) with coprime integer coordinates and
/// the first nonzero coordinate positive. It is the zero of beta*s - alpha*t.
class PointP1 {
 public:
  PointP1(BigInt alpha, BigInt beta);

  /// (1 : tau), the zero of t - tau*s.
  static PointP1 affine(const BigRational& tau);
  /// (0 : 1), the zero of s.
  static PointP1 infinity();

  const BigInt& alpha() const { return alpha_; }
  const BigInt& beta() const { return beta_; }

  friend bool operator==(const PointP1& a, const PointP1& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }
  friend bool operator<(const PointP1& a, const PointP1& b) {
    return a.alpha_ != b.alpha_ ? a.alpha_ < b.alpha_ : a.beta_ < b.beta_;
  }

 private:
  BigInt alpha_;
  BigInt beta_;
};

/// (beta*s - alpha*t)^n.
BinaryForm linear_power(const PointP1& q, std::size_t n);

/// Multiplicity of beta*s - alpha*t in f. Throws PreconditionError on the
/// zero form.
std::size_t ord_at(const BinaryForm& f, const PointP1& q);

/// Coordinates of f in the basis u^i v^(n-i), u = beta*s - alpha*t and
/// v = t (or v = s when beta = 0). The first nonzero index is ord_at(f, q).
Vector linear_adic_digits(const BinaryForm& f, const PointP1& q);

/// f / h; throws PreconditionError unless h divides f.
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& h);

/// Normalized gcd of two forms, not both zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

struct RationalRoots {
  std::vector<std::pair<PointP1, std::size_t>> roots;  // sorted by point
  std::size_t residual_degree = 0;
};

/// All zeros of f in P^1(Q) with multiplicities; residual_degree is the
/// degree of the factor without rational zeros.
RationalRoots rational_roots(const BinaryForm& f);

std::string to_string(const Poly& p);
std::string to_string(const BinaryForm& f);
/// Same layout with other variable names, e.g. a form in (alpha, beta).
std::string to_string(const BinaryForm& f, std::string_view s_name, std::string_view t_name);
std::string to_string(const PointP1& q);
std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const BinaryForm& f);
std::ostream& operator<<(std::ostream& os, const PointP1& q);

}  // namespace kfin
