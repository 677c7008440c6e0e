#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arlab {

// Exact arithmetic is outsourced to GMP. mpq_class keeps fractions in
// lowest terms with a positive denominator, which is exactly the Rat
// invariant we need (zero is 0/1).
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(BigInt num, BigInt den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// base^e for a possibly negative exponent; base must be nonzero when e < 0.
Rat rat_pow(const Rat& base, long e);

BigInt bigint_pow(const BigInt& base, unsigned long e);
BigInt binomial(unsigned long n, unsigned long k);

std::vector<std::uint32_t> primes_up_to(std::uint32_t k);

/// Product of all primes <= k (empty product = 1).
BigInt primorial(unsigned long k);

/// "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

/// Height of p/q in lowest terms: max(|p|, q).
BigInt rat_height(const Rat& q);

/// Trial division by primes <= limit, sign dropped. Returns nullopt when a
/// cofactor > 1 survives, i.e. n has a prime factor beyond the limit.
std::optional<std::vector<std::pair<BigInt, long>>>
factor_trial(BigInt n, unsigned long limit);

} // namespace arlab
