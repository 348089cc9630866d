#include <kfin/integer.hpp>

#include <kfin/error.hpp>

#include <algorithm>
#include <map>

namespace kfin {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<BigInt> primitive_integer_vector(std::span<const BigRational> v) {
  BigInt den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.push_back(x.get_num() * (den_lcm / x.get_den()));
  }
  strip_content(out);
  return out;
}

BigInt strip_content(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return g;
    }
  }
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  BigInt m = abs(n);
  if (m <= 1) throw PreconditionError("factorize: argument must have |n| > 1");
  std::map<BigInt, unsigned> primes;
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++primes[BigInt(p)];
      m /= p;
    }
  }
  factor_into(m, primes);
  return {primes.begin(), primes.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  if (n == 0) throw PreconditionError("positive_divisors: argument is zero");
  std::vector<BigInt> divs{1};
  if (abs(n) == 1) return divs;
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace kfin
