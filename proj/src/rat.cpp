#include "arlab/rat.hpp"

#include <stdexcept>

namespace arlab {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
    const unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
    // base is canonical, so num^a / den^a already is; only sign placement matters.
    r.canonicalize();
    if (e < 0) return Rat(1) / r;
    return r;
}

BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t k) {
    std::vector<std::uint32_t> out;
    if (k < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(k) + 1, false);
    for (std::uint64_t p = 2; p <= k; ++p) {
        if (composite[p]) continue;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= k; q += p) composite[q] = true;
    }
    return out;
}

BigInt primorial(unsigned long k) {
    BigInt r = 1;
    if (k > 0xffffffffUL) throw std::invalid_argument("primorial: bound too large");
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(k))) r *= p;
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt rat_height(const Rat& q) {
    BigInt n = abs(q.get_num());
    const BigInt& d = q.get_den();
    return n > d ? n : d;
}

std::optional<std::vector<std::pair<BigInt, long>>>
factor_trial(BigInt n, unsigned long limit) {
    std::vector<std::pair<BigInt, long>> out;
    n = abs(n);
    if (n == 0) return std::nullopt;
    BigInt p = 2;
    while (n > 1 && p <= limit) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p = p == 2 ? BigInt(3) : BigInt(p + 2);
        if (p * p > n && n > 1) {
            // remaining cofactor is prime
            if (n <= limit) {
                out.emplace_back(n, 1);
                n = 1;
            }
            break;
        }
    }
    if (n != 1) return std::nullopt;
    return out;
}

} // namespace arlab
