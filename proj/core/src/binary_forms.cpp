#include <kfin/binary_forms.hpp>

#include <kfin/error.hpp>
#include <kfin/integer.hpp>

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace kfin {

// ---- Poly ----------------------------------------------------------------

Poly::Poly(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const BigRational& c) { return Poly(Vector{c}); }

Poly Poly::monomial(std::size_t degree, const BigRational& c) {
  Vector v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

BigRational Poly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  const BigRational lead = leading();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Vector rem = a.coeffs();
  Vector quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto db = static_cast<std::size_t>(b.degree());
  const BigRational& lead = b.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigRational c = rem[i + db] / lead;
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * b.coeffs()[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---- BinaryForm ----------------------------------------------------------

BinaryForm::BinaryForm(std::size_t degree) : coeffs_(degree + 1) {}

BinaryForm::BinaryForm(std::size_t degree, Vector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != degree + 1) {
    throw DimensionMismatch("form of degree " + std::to_string(degree) + " needs " +
                            std::to_string(degree + 1) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

BinaryForm BinaryForm::from_vector(std::span<const BigRational> coeffs) {
  if (coeffs.empty()) throw DimensionMismatch("form needs at least one coefficient");
  return BinaryForm(coeffs.size() - 1, Vector(coeffs.begin(), coeffs.end()));
}

BinaryForm BinaryForm::monomial(std::size_t s_exp, std::size_t t_exp, const BigRational& c) {
  BinaryForm f(s_exp + t_exp);
  f.coeffs_[t_exp] = c;
  return f;
}

BinaryForm BinaryForm::homogenize(const Poly& p, std::size_t degree) {
  if (p.degree() > static_cast<long>(degree)) {
    throw PreconditionError("cannot homogenize a polynomial of degree " +
                            std::to_string(p.degree()) + " to degree " + std::to_string(degree));
  }
  BinaryForm f(degree);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) f.coeffs_[i] = p.coeffs()[i];
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

Poly BinaryForm::dehomogenize() const { return Poly(coeffs_); }

BigRational BinaryForm::evaluate(const BigRational& s, const BigRational& t) const {
  // Horner in t/s is unavailable when s = 0, so accumulate powers directly.
  BigRational acc = 0;
  BigRational tp = 1;
  const std::size_t n = degree();
  std::vector<BigRational> spow(n + 1);
  spow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) spow[i] = spow[i - 1] * s;
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] != 0) acc += coeffs_[i] * spow[n - i] * tp;
    tp *= t;
  }
  return acc;
}

BinaryForm BinaryForm::normalized() const {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c != 0; });
  if (it == coeffs_.end()) return *this;
  const BigRational lead = *it;
  BinaryForm f = *this;
  for (auto& c : f.coeffs_) c /= lead;
  return f;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("adding forms of different degree");
  BinaryForm f = a;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) f.coeffs_[i] += b.coeffs_[i];
  return f;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("subtracting forms of different degree");
  BinaryForm f = a;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) f.coeffs_[i] -= b.coeffs_[i];
  return f;
}

BinaryForm operator*(const BigRational& c, const BinaryForm& f) {
  BinaryForm g = f;
  for (auto& x : g.coeffs_) x *= c;
  return g;
}

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
  Vector out(f.degree() + g.degree() + 1);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (std::size_t j = 0; j <= g.degree(); ++j) {
      if (g.coeff(j) != 0) out[i + j] += f.coeff(i) * g.coeff(j);
    }
  }
  return BinaryForm(f.degree() + g.degree(), std::move(out));
}

// ---- PointP1 -------------------------------------------------------------

PointP1::PointP1(BigInt alpha, BigInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ == 0 && beta_ == 0) throw PreconditionError("(0:0) is not a point of P^1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), alpha_.get_mpz_t(), beta_.get_mpz_t());
  alpha_ /= g;
  beta_ /= g;
  if (alpha_ < 0 || (alpha_ == 0 && beta_ < 0)) {
    alpha_ = -alpha_;
    beta_ = -beta_;
  }
}

PointP1 PointP1::affine(const BigRational& tau) { return PointP1(tau.get_den(), tau.get_num()); }

PointP1 PointP1::infinity() { return PointP1(0, 1); }

BinaryForm linear_power(const PointP1& q, std::size_t n) {
  Vector c(n + 1);
  const BigInt minus_alpha = -q.alpha();
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt bpow, apow;
    mpz_pow_ui(bpow.get_mpz_t(), q.beta().get_mpz_t(), n - j);
    mpz_pow_ui(apow.get_mpz_t(), minus_alpha.get_mpz_t(), j);
    c[j] = BigRational(binomial(n, j) * bpow * apow);
  }
  return BinaryForm(n, std::move(c));
}

namespace {

// f = u * quotient + remainder * v^n with u = beta*s - alpha*t and v = t
// (beta != 0) or v = s (beta = 0). Requires deg f >= 1.
std::pair<BinaryForm, BigRational> divide_linear(const BinaryForm& f, const PointP1& q) {
  const std::size_t n = f.degree();
  Vector quot(n);
  const BigRational alpha(q.alpha());
  const BigRational beta(q.beta());
  if (q.beta() != 0) {
    quot[0] = f.coeff(0) / beta;
    for (std::size_t i = 1; i < n; ++i) quot[i] = (f.coeff(i) + alpha * quot[i - 1]) / beta;
    BigRational rem = f.coeff(n) + alpha * quot[n - 1];
    return {BinaryForm(n - 1, std::move(quot)), rem};
  }
  for (std::size_t i = 0; i < n; ++i) quot[i] = -f.coeff(i + 1) / alpha;
  return {BinaryForm(n - 1, std::move(quot)), f.coeff(0)};
}

}  // namespace

std::size_t ord_at(const BinaryForm& f, const PointP1& q) {
  if (f.is_zero()) throw PreconditionError("ord of zero form undefined");
  std::size_t ord = 0;
  BinaryForm g = f;
  while (g.degree() > 0) {
    auto [quot, rem] = divide_linear(g, q);
    if (rem != 0) break;
    ++ord;
    g = std::move(quot);
  }
  return ord;
}

Vector linear_adic_digits(const BinaryForm& f, const PointP1& q) {
  Vector digits;
  digits.reserve(f.degree() + 1);
  BinaryForm g = f;
  while (g.degree() > 0) {
    auto [quot, rem] = divide_linear(g, q);
    digits.push_back(std::move(rem));
    g = std::move(quot);
  }
  digits.push_back(g.coeff(0));
  return digits;
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& h) {
  if (h.is_zero()) throw PreconditionError("division by the zero form");
  if (h.degree() > f.degree()) {
    if (f.is_zero()) throw PreconditionError("zero form of lower degree than divisor");
    throw PreconditionError("divisor has larger degree than dividend");
  }
  // Multiplying forms multiplies their ascending t-coefficient polynomials.
  auto [quot, rem] = divmod(Poly(f.coeffs()), Poly(h.coeffs()));
  if (!rem.is_zero()) throw PreconditionError("form " + to_string(h) + " does not divide " + to_string(f));
  return BinaryForm::homogenize(quot, f.degree() - h.degree());
}

namespace {

std::size_t s_multiplicity(const BinaryForm& f) {
  std::size_t m = 0;
  for (std::size_t i = f.degree() + 1; i-- > 0 && f.coeff(i) == 0;) ++m;
  return m;
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz && gz) throw PreconditionError("gcd of two zero forms");
  if (fz) return g.normalized();
  if (gz) return f.normalized();
  // s-power factors are invisible after setting s = 1; track them apart.
  const std::size_t ms = std::min(s_multiplicity(f), s_multiplicity(g));
  const Poly common = gcd(f.dehomogenize(), g.dehomogenize());
  return BinaryForm::homogenize(common, ms + static_cast<std::size_t>(common.degree())).normalized();
}

RationalRoots rational_roots(const BinaryForm& f) {
  if (f.is_zero()) throw PreconditionError("rational roots of the zero form");
  RationalRoots out;
  std::size_t found = 0;

  const std::size_t ms = s_multiplicity(f);
  if (ms > 0) out.roots.emplace_back(PointP1::infinity(), ms);
  found += ms;

  // Remaining factor: p(x) = f(1, x) with nonzero leading coefficient.
  std::size_t mt = 0;
  while (f.coeff(mt) == 0) ++mt;
  if (mt > 0) out.roots.emplace_back(PointP1(1, 0), mt);
  found += mt;

  const std::size_t top = f.degree() - ms;
  if (top > mt) {
    Vector core(f.coeffs().begin() + static_cast<long>(mt), f.coeffs().begin() + static_cast<long>(top) + 1);
    std::vector<BigInt> p = primitive_integer_vector(core);
    const std::size_t n = p.size() - 1;
    const BigInt p_at_1 = [&] {
      BigInt acc = 0;
      for (const auto& c : p) acc += c;
      return acc;
    }();
    const BigInt p_at_m1 = [&] {
      BigInt acc = 0;
      for (std::size_t i = 0; i <= n; ++i) acc += (i % 2 == 0) ? p[i] : BigInt(-p[i]);
      return acc;
    }();

    std::set<PointP1> candidates;
    const auto numerators = positive_divisors(p[0]);
    const auto denominators = positive_divisors(p[n]);
    for (const auto& den : denominators) {
      std::vector<BigInt> den_powers(n + 1);
      den_powers[0] = 1;
      for (std::size_t i = 1; i <= n; ++i) den_powers[i] = den_powers[i - 1] * den;
      for (const auto& num : numerators) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          const BigInt u = sign * num;
          // Classical filter: (den - u) | p(1) and (den + u) | p(-1).
          const BigInt dm = den - u;
          const BigInt dp = den + u;
          if (dm != 0 && p_at_1 % dm != 0) continue;
          if (dp != 0 && p_at_m1 % dp != 0) continue;
          // sum p_i u^i den^(n-i) = 0, i.e. p(u/den) = 0.
          BigInt acc = 0;
          BigInt upow = 1;
          for (std::size_t i = 0; i <= n; ++i) {
            acc += p[i] * upow * den_powers[n - i];
            upow *= u;
          }
          if (acc == 0) candidates.insert(PointP1(den, u));
        }
      }
    }
    for (const auto& q : candidates) {
      const std::size_t m = ord_at(f, q);
      out.roots.emplace_back(q, m);
      found += m;
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual_degree = f.degree() - found;
  return out;
}

// ---- printing ------------------------------------------------------------

namespace {

std::string monomial_text(std::size_t s_exp, std::size_t t_exp, std::string_view s_name = "s",
                          std::string_view t_name = "t") {
  std::string out;
  auto var = [&](std::string_view v, std::size_t e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var(s_name, s_exp);
  var(t_name, t_exp);
  return out;
}

// Appends "c*mono" with sign handling; `first` controls the leading sign form.
void append_term(std::string& out, const BigRational& c, const std::string& mono, bool first) {
  BigRational mag = abs(c);
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str() + "*" + mono;
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

std::string to_string(const BinaryForm& f) { return to_string(f, "s", "t"); }

std::string to_string(const BinaryForm& f, std::string_view s_name, std::string_view t_name) {
  const std::size_t n = f.degree();
  if (f.is_zero()) return n == 0 ? "0" : "0*" + monomial_text(n, 0, s_name, t_name);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    append_term(out, f.coeff(i), monomial_text(n - i, i, s_name, t_name), first);
    first = false;
  }
  return out;
}

std::string to_string(const PointP1& q) {
  return "(" + q.alpha().get_str() + ":" + q.beta().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const PointP1& q) { return os << to_string(q); }

}  // namespace kfin
