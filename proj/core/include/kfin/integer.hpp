#pragma once

// Integer helpers shared by the elimination kernels and root search.

#include <kfin/exact.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace kfin {

BigInt binomial(unsigned long n, unsigned long k);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (positive multiple). The zero vector maps to zeros.
std::vector<BigInt> primitive_integer_vector(std::span<const BigRational> v);

/// Divides out the gcd of the entries in place. Returns the removed content
/// (0 for the zero vector).
BigInt strip_content(std::vector<BigInt>& v);

/// All positive divisors of |n|, sorted ascending. n must be nonzero.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Prime factorisation of |n| > 1 as (prime, exponent), primes ascending.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

}  // namespace kfin
