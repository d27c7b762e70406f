#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkinv/errors.hpp"

namespace linkinv {

// All arithmetic in the library is exact. Integer is GMP's mpz_class; the
// number-theoretic helpers below (trial-division factorization, divisor
// lists, phi, moebius) are adequate for desk-scale inputs and nothing more.
using Integer = mpz_class;

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer pow2(unsigned long e) { return ipow(Integer(2), e); }

// gcd of a nonempty list of nonnegative integers, at least one nonzero.
inline Integer gcd_many(const std::vector<Integer>& xs) {
    if (xs.empty())
        throw domain_error("gcd_many: empty input");
    Integer g = 0;
    for (const Integer& x : xs) {
        if (x < 0)
            throw domain_error("gcd_many: negative input");
        g = igcd(g, x);
    }
    if (g == 0)
        throw domain_error("gcd_many: all inputs are zero");
    return g;
}

// lcm of a nonempty list of positive integers.
inline Integer lcm_many(const std::vector<Integer>& xs) {
    if (xs.empty())
        throw domain_error("lcm_many: empty input");
    Integer l = 1;
    for (const Integer& x : xs) {
        if (x <= 0)
            throw domain_error("lcm_many: inputs must be positive");
        l = ilcm(l, x);
    }
    return l;
}

inline long long checked_i64(const Integer& v, const char* what) {
    if (!v.fits_slong_p())
        throw resource_error(std::string(what) + ": value does not fit in 64 bits");
    return static_cast<long long>(v.get_si());
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Prime factorization by trial division, smallest prime first.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n <= 0)
        throw domain_error("factorize: input must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(2);
    for (Integer p = 3; p * p <= n; p += 2)
        strip(p);
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

// The prime p when n = p^k (k >= 1), nothing otherwise.
inline std::optional<Integer> prime_power_base(const Integer& n) {
    if (n < 2)
        return std::nullopt;
    auto f = factorize(n);
    if (f.size() == 1)
        return f[0].first;
    return std::nullopt;
}

// All positive divisors of n, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer euler_phi(const Integer& n) {
    Integer r = 1;
    for (const auto& [p, e] : factorize(n))
        r *= ipow(p, e - 1) * (p - 1);
    return r;
}

inline int moebius(const Integer& n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

} // namespace linkinv
